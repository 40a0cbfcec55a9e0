#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "winger/surface.hpp"

#include <random>
#include <sstream>

using namespace winger;

namespace {

// fraction-free elimination
Integer bareiss_det(IntMatrix a) {
    const std::size_t n = a.rows();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank_mod_p(const IntMatrix& a, long p) {
    std::vector<std::vector<long>> m(a.rows(), std::vector<long>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = ((Integer(a(i, j) % p)).get_si() + p) % p;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && m[piv][c] == 0) ++piv;
        if (piv == a.rows()) continue;
        std::swap(m[piv], m[r]);
        long inv = 1;
        for (long e = p - 2, b = m[r][c]; e; e >>= 1, b = b * b % p)
            if (e & 1) inv = inv * b % p;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            long f = m[i][c] * inv % p;
            for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

IntVector random_cycle(std::mt19937& rng, const SurfaceModel& s, IntVector* class_coords = nullptr) {
    std::uniform_int_distribution<int> d(-2, 2);
    const auto& h = s.homology;
    const auto& c = s.complex;
    IntVector z(c.n1), coords(h.rank);
    for (std::size_t i = 0; i < h.rank; ++i) {
        coords[i] = d(rng);
        z = z + coords[i] * h.representatives[i];
    }
    // add a random boundary
    for (std::size_t f = 0; f < c.n2; ++f) z = z + Integer(d(rng)) * c.boundary2.col(f);
    if (class_coords) *class_coords = coords;
    return z;
}

}  // namespace

TEST_CASE("cell counts and homology ranks") {
    for (Model m : {Model::sigma, Model::pi}) {
        const auto& s = surface_model(m);
        const auto& c = s.complex;
        CHECK(c.n0 == 30);
        CHECK(c.n1 == 60);
        CHECK(c.n2 == 12);
        CHECK(c.euler_characteristic() == -18);
        CHECK((c.boundary1 * c.boundary2).is_zero());
        // H1 rank and absence of torsion from ranks over several prime fields
        for (long p : {2L, 3L, 5L, 1000003L}) {
            CHECK(rank_mod_p(c.boundary1, p) == 29);
            CHECK(rank_mod_p(c.boundary2, p) == 11);
        }
        CHECK(s.homology.rank == 20);
        CHECK(s.homology.h1_torsion.empty());
        CHECK(s.homology.h0_rank == 1);
        CHECK(s.homology.h2_rank == 1);
        CHECK(s.homology.cycles.rank() == 31);
        CHECK(s.homology.boundary_rank == 11);
    }
}

TEST_CASE("intersection form") {
    std::mt19937 rng(17);
    for (Model m : {Model::sigma, Model::pi}) {
        const auto& s = surface_model(m);
        const auto& c = s.complex;
        const auto& h = s.homology;
        // gram matches pairwise intersections and is unimodular
        for (std::size_t i = 0; i < h.rank; ++i)
            for (std::size_t j = 0; j < h.rank; ++j)
                CHECK(h.gram(i, j) == intersection(c, h.representatives[i], h.representatives[j]));
        CHECK(h.gram.transpose() == Integer(-1) * h.gram);
        CHECK(abs(bareiss_det(h.gram)) == 1);

        for (int trial = 0; trial < 8; ++trial) {
            IntVector ca, cb;
            IntVector a = random_cycle(rng, s, &ca), b = random_cycle(rng, s, &cb);
            CHECK(is_zero(c.boundary1 * a));
            // class coordinates recover the chosen combination
            CHECK(h.class_of(a) == ca);
            Integer ab = intersection(c, a, b);
            CHECK(ab == -intersection(c, b, a));
            CHECK(ab == h.pairing(ca, cb));
            CHECK(ab == dot(ca, h.gram * cb));
            // invariance under the group and under iota up to sign
            for (Gen g : kGens) CHECK(intersection(c, c.act(g, 1, a), c.act(g, 1, b)) == ab);
            Integer ib = intersection(c, c.apply_iota(1, a), c.apply_iota(1, b));
            CHECK(abs(ib) == abs(ab));
        }
    }
}

TEST_CASE("iota and the group action") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(-3, 3);
    for (Model m : {Model::sigma, Model::pi}) {
        const auto& c = surface_model(m).complex;
        for (int dim = 0; dim <= 2; ++dim) {
            IntVector x(c.cell_count(dim));
            for (auto& v : x) v = d(rng);
            CHECK(c.apply_iota(dim, c.apply_iota(dim, x)) == x);
            for (Gen g : kGens) CHECK(c.act(g, dim, c.apply_iota(dim, x)) == c.apply_iota(dim, c.act(g, dim, x)));
            // s2 s3 s5 = 1
            CHECK(c.act(Gen::s2, dim, c.act(Gen::s3, dim, c.act(Gen::s5, dim, x))) == x);
        }
        for (Gen g : kGens) {
            int gi = static_cast<int>(g);
            CHECK(c.boundary1 * c.action[gi][1].matrix() == c.action[gi][0].matrix() * c.boundary1);
            CHECK(c.boundary2 * c.action[gi][2].matrix() == c.action[gi][1].matrix() * c.boundary2);
        }
        for (int d0 = 0; d0 < static_cast<int>(c.darts.size()); ++d0) {
            CHECK(c.reverse(c.reverse(d0)) == d0);
            CHECK(c.iota_dart(c.iota_dart(d0)) == d0);
        }
    }
}

TEST_CASE("distinguished cycles") {
    for (Model m : {Model::sigma, Model::pi}) {
        const auto& c = surface_model(m).complex;
        for (int x = 0; x < static_cast<int>(c.poly.vertex_count()); ++x) {
            auto t = truncation_cycle(c, x).coeffs;
            CHECK(is_zero(c.boundary1 * t));
            CHECK(truncation_cycle(c, c.poly.vertex_iota[x]).coeffs == Integer(-1) * t);
        }
        for (int d0 = 0; d0 < static_cast<int>(c.darts.size()); ++d0) {
            auto e = edge_cycle(c, d0).coeffs;
            CHECK(is_zero(c.boundary1 * e));
            CHECK(edge_cycle(c, c.reverse(d0)).coeffs == Integer(-1) * e);
        }
        // loops of one vanishing set are pairwise disjoint
        auto tl = truncation_loops(c), el = edge_loops(c);
        for (const auto& a : tl)
            for (const auto& b : tl) CHECK(intersection(c, a, b) == 0);
        for (const auto& a : el)
            for (const auto& b : el) CHECK(intersection(c, a, b) == 0);
        CHECK_THROWS_AS(distinguished_cycle(c, CycleKind::truncation, "no-such-vertex"), UnknownLabel);
    }
    const auto& s = surface_model(Model::sigma);
    std::size_t nz = 0;
    for (const auto& x : s.named.chains.at("trc").coeffs) nz += sgn(x) != 0;
    CHECK(nz == 15);
}

TEST_CASE("dual classes") {
    for (Model m : {Model::sigma, Model::pi}) {
        const auto& h = surface_model(m).homology;
        CHECK(is_zero(dual_class(h, IntVector(h.rank))));
        for (std::size_t k = 0; k < h.rank; ++k) {
            IntVector t(h.rank);
            t[k] = 1;
            IntVector c = dual_class(h, t);
            for (std::size_t i = 0; i < h.rank; ++i) {
                IntVector ei(h.rank);
                ei[i] = 1;
                CHECK(h.pairing(c, ei) == t[i]);
            }
        }
    }
}

TEST_CASE("exported incidence rebuilds the boundary maps") {
    for (Model m : {Model::sigma, Model::pi}) {
        const auto& c = surface_model(m).complex;
        std::istringstream in(export_complex(c));
        std::string line;
        IntMatrix d1(c.n0, c.n1), d2(c.n1, c.n2);
        std::size_t lines = 0;
        while (std::getline(in, line)) {
            ++lines;
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            int dim, id;
            std::string kind, bar;
            ls >> dim >> id >> kind >> bar;
            std::string tok;
            while (ls >> tok && tok != "|") {
                int sign = tok[0] == '-' ? -1 : 1;
                int cell = std::stoi(tok.substr(1));
                if (dim == 1) d1(cell, id) += sign;
                if (dim == 2) d2(cell, id) += sign;
            }
        }
        CHECK(lines == 3 + c.n0 + c.n1 + c.n2);
        CHECK(d1 == c.boundary1);
        CHECK(d2 == c.boundary2);
    }
}
