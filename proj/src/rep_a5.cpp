#include "winger/rep_a5.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>

namespace winger {

Perm::Perm() : img_{0, 1, 2, 3, 4} {}

Perm::Perm(const std::array<int, 5>& one_based_images) {
    std::array<bool, 5> seen{};
    for (int i = 0; i < 5; ++i) {
        int v = one_based_images[i];
        if (v < 1 || v > 5 || seen[v - 1]) throw std::invalid_argument("not a permutation of {1..5}");
        seen[v - 1] = true;
        img_[i] = static_cast<std::uint8_t>(v - 1);
    }
}

Perm Perm::from_cycles(std::string_view s) {
    Perm p;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        if (s[i] != '(') throw std::invalid_argument("malformed cycle notation");
        ++i;
        std::vector<int> cyc;
        while (i < s.size() && s[i] != ')') {
            if (std::isdigit(static_cast<unsigned char>(s[i]))) cyc.push_back(s[i] - '0');
            else if (s[i] != ',' && !std::isspace(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("malformed cycle notation");
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("unterminated cycle");
        ++i;
        Perm c;
        std::array<int, 5> img = {1, 2, 3, 4, 5};
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (cyc[k] < 1 || cyc[k] > 5) throw std::invalid_argument("cycle entry out of range");
            img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
        }
        // cycles written left to right act right to left
        p = p * Perm(img);
    }
    return p;
}

Perm Perm::inverse() const {
    Perm r;
    for (int i = 0; i < 5; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return r;
}

bool Perm::is_even() const {
    int inv = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv % 2 == 0;
}

std::string Perm::to_string() const {
    std::string s;
    std::array<bool, 5> done{};
    for (int i = 0; i < 5; ++i) {
        if (done[i] || img_[i] == i) continue;
        s += '(';
        int j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = true;
            if (!first) s += ',';
            s += static_cast<char>('1' + j);
            first = false;
            j = img_[j];
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

Perm operator*(const Perm& p, const Perm& q) {
    Perm r;
    for (int i = 0; i < 5; ++i) r.img_[i] = p.img_[q.img_[i]];
    return r;
}

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::s2: return "s2";
        case Gen::s3: return "s3";
        case Gen::s5: return "s5";
    }
    return "?";
}

Perm gen_perm(Gen g) {
    switch (g) {
        case Gen::s2: return Perm::from_cycles("(1,5)(3,4)");
        case Gen::s3: return Perm::from_cycles("(2,5,3)");
        case Gen::s5: return Perm::from_cycles("(1,2,3,4,5)");
    }
    return Perm();
}

EoVector EoVector::basis(int i, long sign) {
    EoVector v;
    v.c[i] = sign;
    return v;
}

EoVector EoVector::operator-() const {
    EoVector v;
    for (int i = 0; i < 6; ++i) v.c[i] = -c[i];
    return v;
}

IntVector to_vector(const EoVector& v) { return IntVector(v.c.begin(), v.c.end()); }

EoVector from_vector(const IntVector& v) {
    if (v.size() != 6) throw std::invalid_argument("E_o vector must have 6 coordinates");
    EoVector r;
    std::copy(v.begin(), v.end(), r.c.begin());
    return r;
}

namespace {

enum { E = 0, E0, E1, E2, E3, E4 };

// images[j] = (sign, i): basis j maps to sign * basis i
IntMatrix signed_perm(const std::array<std::pair<int, int>, 6>& images) {
    IntMatrix m(6, 6);
    for (int j = 0; j < 6; ++j) m(images[j].second, j) = images[j].first;
    return m;
}

}  // namespace

EoLattice::EoLattice() {
    gens_[static_cast<int>(Gen::s5)] = signed_perm({{{1, E}, {1, E1}, {1, E2}, {1, E3}, {1, E4}, {1, E0}}});
    gens_[static_cast<int>(Gen::s2)] = signed_perm({{{1, E0}, {1, E}, {1, E4}, {-1, E2}, {-1, E3}, {1, E1}}});
    gens_[static_cast<int>(Gen::s3)] = signed_perm({{{1, E0}, {1, E1}, {1, E}, {1, E4}, {-1, E2}, {-1, E3}}});

    // columns are X(e), X(e0), ..., X(e4)
    const long xcols[6][6] = {
        {0, 1, 1, 1, 1, 1},  {1, 0, 1, -1, -1, 1}, {1, 1, 0, 1, -1, -1},
        {1, -1, 1, 0, 1, -1}, {1, -1, -1, 1, 0, 1}, {1, 1, -1, -1, 1, 0},
    };
    x_ = IntMatrix(6, 6);
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 6; ++i) x_(i, j) = xcols[j][i];
    gram_ = IntMatrix::identity(6);

    // breadth-first closure over words; records a shortest word per element
    std::map<Perm, std::size_t> index;
    group_.push_back({Perm(), {}, IntMatrix::identity(6)});
    index[Perm()] = 0;
    for (std::size_t k = 0; k < group_.size(); ++k) {
        for (Gen g : kGens) {
            Perm p = gen_perm(g) * group_[k].perm;
            IntMatrix m = generator(g) * group_[k].matrix;
            auto it = index.find(p);
            if (it != index.end()) {
                if (!(group_[it->second].matrix == m))
                    throw std::logic_error("action table is not a homomorphism at " + p.to_string());
                continue;
            }
            std::vector<Gen> w = group_[k].word;
            w.insert(w.begin(), g);
            index[p] = group_.size();
            group_.push_back({p, std::move(w), std::move(m)});
        }
    }

    for (int i = 0; i < 6; ++i) {
        bool found = false;
        for (std::size_t k = 0; k < group_.size() && !found; ++k)
            if (group_[k].matrix(i, E) == 1) {
                transport_[i] = k;
                found = true;
            }
        if (!found) throw std::logic_error("basis vector outside the orbit of e");
    }
}

const EoLattice& EoLattice::instance() {
    static const EoLattice lat;
    return lat;
}

const GroupElement& EoLattice::element(const Perm& g) const {
    if (!g.is_even()) throw OddPermutation("permutation " + g.to_string() + " is odd");
    for (const auto& el : group_)
        if (el.perm == g) return el;
    throw std::logic_error("even permutation missing from A5 table");
}

EoVector EoLattice::act(const Perm& g, const EoVector& v) const {
    const GroupElement& el = element(g);
    IntMatrix m = IntMatrix::identity(6);
    for (Gen s : el.word) m = m * generator(s);
    return from_vector(m * to_vector(v));
}

EoVector EoLattice::apply_x(const EoVector& v) const { return from_vector(x_ * to_vector(v)); }

Integer EoLattice::inner(const EoVector& v, const EoVector& w) const { return dot(to_vector(v), gram_ * to_vector(w)); }

bool in_even_sublattice(const EoVector& v) {
    Integer s = 0;
    for (const auto& x : v.c) s += x;
    return mpz_even_p(s.get_mpz_t());
}

std::vector<EoVector> orbit(const EoVector& v) {
    std::vector<EoVector> out;
    for (const auto& el : EoLattice::instance().group()) {
        EoVector w = from_vector(el.matrix * to_vector(v));
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    return out;
}

namespace {

IntVector flatten(const IntMatrix& m) {
    IntVector v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

}  // namespace

EndoRingReport verify_endo_ring(long box) {
    const EoLattice& lat = EoLattice::instance();
    EndoRingReport rep;
    rep.box = box;

    // M S - S M = 0 for S in {s2, s5}; unknown M flattened row-major
    IntMatrix eq(72, 36);
    std::size_t row = 0;
    for (Gen g : {Gen::s2, Gen::s5}) {
        const IntMatrix& s = lat.generator(g);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j, ++row)
                for (int k = 0; k < 6; ++k) {
                    eq(row, i * 6 + k) += s(k, j);
                    eq(row, k * 6 + j) -= s(i, k);
                }
    }
    rep.commutant = kernel_basis(eq);
    rep.commutant_is_span_id_x =
        rep.commutant == Sublattice(36, std::vector<IntVector>{flatten(IntMatrix::identity(6)), flatten(lat.x_matrix())});
    rep.s3_commutes = true;
    const IntMatrix& s3 = lat.generator(Gen::s3);
    for (std::size_t r = 0; r < rep.commutant.rank(); ++r) {
        IntVector v = rep.commutant.basis_vector(r);
        IntMatrix m(6, 6);
        for (int i = 0; i < 36; ++i) m(i / 6, i % 6) = v[i];
        if (!(m * s3 == s3 * m)) rep.s3_commutes = false;
    }

    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b) {
            IntMatrix m = Integer(a) * lat.x_matrix() + Integer(b) * IntMatrix::identity(6);
            Integer d = determinant(m);
            if (abs(d) != 1) continue;
            rep.units.emplace_back(a, b);
            if (m.transpose() * lat.gram() * m == lat.gram()) rep.isometric_units.emplace_back(a, b);
        }
    const std::vector<std::pair<long, long>> pm_id = {{0, -1}, {0, 1}};
    rep.aut_is_pm_id = rep.units == pm_id;
    rep.isometric_aut_is_pm_id = rep.isometric_units == pm_id;
    return rep;
}

}  // namespace winger
