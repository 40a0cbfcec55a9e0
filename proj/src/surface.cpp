#include "winger/surface.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace winger {

const char* model_name(Model m) { return m == Model::sigma ? "sigma" : "pi"; }

int signed_index(int basis, int sign) { return 2 * basis + (sign < 0 ? 1 : 0); }
int negate_signed(int s) { return s ^ 1; }

EoVector signed_vector(int s) { return EoVector::basis(s / 2, (s & 1) ? -1 : 1); }

std::string signed_label(int s) { return std::string((s & 1) ? "-" : "") + EoLattice::labels[s / 2]; }

namespace {

int vector_index(const EoVector& v) {
    int found = -1;
    for (int i = 0; i < 6; ++i) {
        if (sgn(v.c[i]) == 0) continue;
        if (found >= 0 || abs(v.c[i]) != 1) throw std::logic_error("not a signed basis vector");
        found = signed_index(i, sgn(v.c[i]));
    }
    if (found < 0) throw std::logic_error("zero vector");
    return found;
}

int act_signed(const IntMatrix& m, int s) { return vector_index(from_vector(m * to_vector(signed_vector(s)))); }

bool adjacent(int v, int w) {
    const EoLattice& lat = EoLattice::instance();
    return lat.inner(lat.apply_x(signed_vector(v)), signed_vector(w)) == 1;
}

std::vector<int> rotate_to_min(std::vector<int> cyc) {
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    return cyc;
}

}  // namespace

const std::vector<std::vector<int>>& icosahedral_rings() {
    static const std::vector<std::vector<int>> rings = [] {
        const EoLattice& lat = EoLattice::instance();
        const int e = signed_index(0, 1);
        std::vector<int> nb;
        for (int w = 0; w < 12; ++w)
            if (adjacent(e, w)) nb.push_back(w);
        if (nb.size() != 5) throw std::logic_error("vertex of the icosahedral structure without five neighbours");
        // sigma_5 fixes e and permutes its neighbours; the smallest power keeping adjacency steps the ring
        const IntMatrix& s5 = lat.generator(Gen::s5);
        IntMatrix step = s5;
        while (!adjacent(nb[0], act_signed(step, nb[0]))) step = s5 * step;
        std::vector<int> ring = {nb[0]};
        for (int k = 0; k < 4; ++k) ring.push_back(act_signed(step, ring.back()));

        std::vector<std::vector<int>> out(12);
        for (const auto& el : lat.group()) {
            int v = act_signed(el.matrix, e);
            std::vector<int> r;
            for (int w : ring) r.push_back(act_signed(el.matrix, w));
            r = rotate_to_min(r);
            if (out[v].empty()) out[v] = r;
            else if (out[v] != r) throw std::logic_error("ring orientation is not A5-invariant");
        }
        return out;
    }();
    return rings;
}

int Polyhedron::face_of_vector(int s) const {
    for (std::size_t f = 0; f < face_vector.size(); ++f)
        if (face_vector[f] == s) return static_cast<int>(f);
    throw UnknownLabel("no face labelled " + signed_label(s));
}

Polyhedron dodecahedron() {
    const auto& rings = icosahedral_rings();
    const EoLattice& lat = EoLattice::instance();
    using Triple = std::array<int, 3>;
    auto make = [](int a, int b, int c) {
        Triple t = {a, b, c};
        std::sort(t.begin(), t.end());
        return t;
    };
    std::set<Triple> triples;
    for (int f = 0; f < 12; ++f)
        for (int k = 0; k < 5; ++k) triples.insert(make(f, rings[f][k], rings[f][(k + 1) % 5]));
    std::vector<Triple> verts(triples.begin(), triples.end());
    auto id = [&](const Triple& t) {
        auto it = std::lower_bound(verts.begin(), verts.end(), t);
        if (it == verts.end() || *it != t) throw std::logic_error("unknown dodecahedron vertex");
        return static_cast<int>(it - verts.begin());
    };

    Polyhedron p;
    for (int f = 0; f < 12; ++f) {
        std::vector<int> cyc;
        for (int k = 0; k < 5; ++k) cyc.push_back(id(make(f, rings[f][k], rings[f][(k + 1) % 5])));
        p.faces.push_back(cyc);
        p.face_vector.push_back(f);
    }
    for (const Triple& t : verts) {
        p.vertex_iota.push_back(id(make(negate_signed(t[0]), negate_signed(t[1]), negate_signed(t[2]))));
        p.vertex_labels.push_back(signed_label(t[0]) + "|" + signed_label(t[1]) + "|" + signed_label(t[2]));
    }
    for (Gen g : kGens) {
        const IntMatrix& m = lat.generator(g);
        for (const Triple& t : verts)
            p.vertex_action[static_cast<int>(g)].push_back(id(make(act_signed(m, t[0]), act_signed(m, t[1]), act_signed(m, t[2]))));
    }
    return p;
}

Polyhedron great_dodecahedron() {
    const auto& rings = icosahedral_rings();
    const EoLattice& lat = EoLattice::instance();
    Polyhedron p;
    for (int x = 0; x < 12; ++x) {
        p.faces.push_back(rings[x]);
        p.face_vector.push_back(x);
        p.vertex_iota.push_back(negate_signed(x));
        p.vertex_labels.push_back(signed_label(x));
    }
    for (Gen g : kGens)
        for (int x = 0; x < 12; ++x) p.vertex_action[static_cast<int>(g)].push_back(act_signed(lat.generator(g), x));
    return p;
}

IntVector SignedPermutation::apply(const IntVector& chain) const {
    if (chain.size() != image.size()) throw std::invalid_argument("chain length mismatch");
    IntVector out(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (sgn(chain[i]) != 0) out[image[i]] += sign[i] * chain[i];
    return out;
}

IntMatrix SignedPermutation::matrix() const {
    IntMatrix m(image.size(), image.size());
    for (std::size_t i = 0; i < image.size(); ++i) m(image[i], i) = sign[i];
    return m;
}

int EquivariantComplex::dart(int from, int to) const {
    auto it = dart_index.find({from, to});
    if (it == dart_index.end()) throw UnknownLabel("no dart " + std::to_string(from) + ">" + std::to_string(to));
    return it->second;
}

int EquivariantComplex::iota_dart(int d) const {
    return dart(poly.vertex_iota[darts[d].first], poly.vertex_iota[darts[d].second]);
}

int EquivariantComplex::act_dart(Gen g, int d) const {
    const auto& a = poly.vertex_action[static_cast<int>(g)];
    return dart(a[darts[d].first], a[darts[d].second]);
}

IntVector EquivariantComplex::act(Gen g, int dim, const IntVector& chain) const {
    return action[static_cast<int>(g)][dim].apply(chain);
}

IntVector EquivariantComplex::act(const GroupElement& g, int dim, const IntVector& chain) const {
    IntVector out = chain;
    for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) out = act(*it, dim, out);
    return out;
}

IntVector EquivariantComplex::apply_iota(int dim, const IntVector& chain) const { return iota[dim].apply(chain); }

EquivariantComplex truncate_and_glue(Model model, Polyhedron poly) {
    EquivariantComplex c;
    c.model = model;
    c.poly = std::move(poly);
    const Polyhedron& p = c.poly;

    std::map<Dart, int> rho_target;
    std::set<Dart> seen;
    for (const auto& cyc : p.faces) {
        const std::size_t k = cyc.size();
        for (std::size_t j = 0; j < k; ++j) {
            Dart d = {cyc[j], cyc[(j + 1) % k]};
            if (!seen.insert(d).second) throw std::logic_error("dart used by two faces");
        }
    }
    for (const Dart& d : seen)
        if (!seen.count({d.second, d.first})) throw std::logic_error("dart without reverse");
    c.darts.assign(seen.begin(), seen.end());
    for (std::size_t i = 0; i < c.darts.size(); ++i) c.dart_index[c.darts[i]] = static_cast<int>(i);

    const int nd = static_cast<int>(c.darts.size());
    c.rho.assign(nd, -1);
    for (const auto& cyc : p.faces) {
        const std::size_t k = cyc.size();
        for (std::size_t j = 0; j < k; ++j)
            c.rho[c.dart(cyc[j], cyc[(j + 1) % k])] = c.dart(cyc[j], cyc[(j + k - 1) % k]);
    }

    // 0-cells: darts modulo iota
    c.zero_cell.assign(nd, -1);
    std::vector<int> zero_rep;
    for (int d = 0; d < nd; ++d) {
        if (c.zero_cell[d] >= 0) continue;
        int id = static_cast<int>(zero_rep.size());
        zero_rep.push_back(d);
        c.zero_cell[d] = id;
        c.zero_cell[c.iota_dart(d)] = id;
    }
    c.n0 = zero_rep.size();

    // edge-type 1-cells: undirected polyhedron edges
    c.edge_of.assign(nd, SignedCell{-1, 0});
    for (int d = 0; d < nd; ++d) {
        if (c.edge_of[d].cell >= 0) continue;
        int id = static_cast<int>(c.cells1.size());
        int r = c.reverse(d);
        c.cells1.push_back({CellKind::edge, c.zero_cell[d], c.zero_cell[r], d});
        c.edge_of[d] = {id, 1};
        c.edge_of[r] = {id, -1};
    }
    // truncation-type 1-cells: seg(d) runs from p_rho(d) to p_d, glued with -seg(iota rho d)
    c.seg_of.assign(nd, SignedCell{-1, 0});
    for (int d = 0; d < nd; ++d) {
        if (c.seg_of[d].cell >= 0) continue;
        int partner = c.iota_dart(c.rho[d]);
        if (partner == d || c.seg_of[partner].cell >= 0) throw std::logic_error("inconsistent seam identification");
        int id = static_cast<int>(c.cells1.size());
        c.cells1.push_back({CellKind::truncation, c.zero_cell[c.rho[d]], c.zero_cell[d], d});
        c.seg_of[d] = {id, 1};
        c.seg_of[partner] = {id, -1};
    }
    c.n1 = c.cells1.size();
    c.n2 = p.faces.size();

    auto start = [&](const SignedCell& h) { return h.sign > 0 ? c.cells1[h.cell].start : c.cells1[h.cell].end; };
    auto end = [&](const SignedCell& h) { return h.sign > 0 ? c.cells1[h.cell].end : c.cells1[h.cell].start; };

    for (const auto& cyc : p.faces) {
        const std::size_t k = cyc.size();
        std::vector<SignedCell> b;
        for (std::size_t j = 0; j < k; ++j) {
            int d = c.dart(cyc[j], cyc[(j + 1) % k]);
            b.push_back(c.seg_of[d]);
            b.push_back(c.edge_of[d]);
        }
        for (std::size_t j = 0; j < b.size(); ++j)
            if (end(b[j]) != start(b[(j + 1) % b.size()])) throw std::logic_error("face boundary is not closed");
        c.face_boundary.push_back(std::move(b));
    }

    c.boundary1 = IntMatrix(c.n0, c.n1);
    for (std::size_t i = 0; i < c.n1; ++i) {
        c.boundary1(c.cells1[i].end, i) += 1;
        c.boundary1(c.cells1[i].start, i) -= 1;
    }
    c.boundary2 = IntMatrix(c.n1, c.n2);
    for (std::size_t f = 0; f < c.n2; ++f)
        for (const SignedCell& h : c.face_boundary[f]) c.boundary2(h.cell, f) += h.sign;

    // rotation: the next outgoing half-edge after g is the reverse of the one preceding g in its face
    std::map<SignedCell, SignedCell> prev;
    for (const auto& b : c.face_boundary)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!prev.emplace(b[j], b[(j + b.size() - 1) % b.size()]).second)
                throw std::logic_error("oriented 1-cell used twice in face boundaries");
    if (prev.size() != 2 * c.n1) throw std::logic_error("some oriented 1-cell is not on a face");
    c.rotation.assign(c.n0, {});
    for (std::size_t v = 0; v < c.n0; ++v) {
        std::vector<SignedCell> out;
        for (const auto& [h, unused] : prev)
            if (start(h) == static_cast<int>(v)) out.push_back(h);
        SignedCell h = *std::min_element(out.begin(), out.end());
        std::vector<SignedCell> cyc = {h};
        for (;;) {
            SignedCell q = prev.at(h);
            h = {q.cell, -q.sign};
            if (h == cyc.front()) break;
            cyc.push_back(h);
        }
        if (cyc.size() != out.size()) throw std::logic_error("link of a 0-cell is not a single circle");
        c.rotation[v] = std::move(cyc);
    }

    // A5 and iota on cells
    for (Gen g : kGens) {
        auto& act = c.action[static_cast<int>(g)];
        act[0].image.resize(c.n0);
        act[0].sign.assign(c.n0, 1);
        for (std::size_t v = 0; v < c.n0; ++v) act[0].image[v] = c.zero_cell[c.act_dart(g, zero_rep[v])];
        act[1].image.resize(c.n1);
        act[1].sign.resize(c.n1);
        for (std::size_t i = 0; i < c.n1; ++i) {
            int gd = c.act_dart(g, c.cells1[i].dart);
            SignedCell img = c.cells1[i].kind == CellKind::edge ? c.edge_of[gd] : c.seg_of[gd];
            act[1].image[i] = img.cell;
            act[1].sign[i] = img.sign;
        }
        act[2].image.resize(c.n2);
        act[2].sign.assign(c.n2, 1);
        const IntMatrix& m = EoLattice::instance().generator(g);
        for (std::size_t f = 0; f < c.n2; ++f) act[2].image[f] = p.face_of_vector(act_signed(m, p.face_vector[f]));
    }
    c.iota[0].image.resize(c.n0);
    c.iota[0].sign.assign(c.n0, 1);
    for (std::size_t v = 0; v < c.n0; ++v) c.iota[0].image[v] = static_cast<int>(v);
    c.iota[1].image.resize(c.n1);
    c.iota[1].sign.resize(c.n1);
    for (std::size_t i = 0; i < c.n1; ++i) {
        SignedCell img = c.cells1[i].kind == CellKind::edge ? c.edge_of[c.iota_dart(c.cells1[i].dart)]
                                                             : SignedCell{static_cast<int>(i), 1};
        c.iota[1].image[i] = img.cell;
        c.iota[1].sign[i] = img.sign;
    }
    c.iota[2].image.resize(c.n2);
    c.iota[2].sign.assign(c.n2, -1);
    for (std::size_t f = 0; f < c.n2; ++f) c.iota[2].image[f] = p.face_of_vector(negate_signed(p.face_vector[f]));
    return c;
}

EquivariantComplex build_sigma() { return truncate_and_glue(Model::sigma, dodecahedron()); }
EquivariantComplex build_pi() { return truncate_and_glue(Model::pi, great_dodecahedron()); }

// ---------------------------------------------------------------------------

namespace {

IntVector unit_chain(std::size_t n, const SignedCell& h) {
    IntVector v(n);
    v[h.cell] += h.sign;
    return v;
}

IntVector trunc_chain(const EquivariantComplex& c, int x) {
    IntVector v(c.n1);
    for (std::size_t d = 0; d < c.darts.size(); ++d)
        if (c.darts[d].first == x) v[c.seg_of[d].cell] -= c.seg_of[d].sign;
    return v;
}

IntVector edge_chain(const EquivariantComplex& c, int d) {
    return unit_chain(c.n1, c.edge_of[d]) - unit_chain(c.n1, c.edge_of[c.iota_dart(d)]);
}

void require_cycle(const EquivariantComplex& c, const IntVector& a) {
    if (a.size() != c.n1) throw std::invalid_argument("1-chain length mismatch");
    if (!is_zero(c.boundary1 * a)) throw std::invalid_argument("1-chain is not a cycle");
}

}  // namespace

OneCycle truncation_cycle(const EquivariantComplex& c, int vertex) {
    if (vertex < 0 || vertex >= static_cast<int>(c.poly.vertex_count())) throw UnknownLabel("vertex out of range");
    return {c.model, trunc_chain(c, vertex)};
}

OneCycle edge_cycle(const EquivariantComplex& c, int dart) {
    if (dart < 0 || dart >= static_cast<int>(c.darts.size())) throw UnknownLabel("dart out of range");
    return {c.model, edge_chain(c, dart)};
}

OneCycle distinguished_cycle(const EquivariantComplex& c, CycleKind kind, const std::string& label) {
    auto vertex = [&](const std::string& s) {
        const auto& l = c.poly.vertex_labels;
        auto it = std::find(l.begin(), l.end(), s);
        if (it == l.end()) throw UnknownLabel("unknown vertex label '" + s + "'");
        return static_cast<int>(it - l.begin());
    };
    if (kind == CycleKind::truncation) return truncation_cycle(c, vertex(label));
    auto pos = label.find('>');
    if (pos == std::string::npos) throw UnknownLabel("edge label must be 'from>to': '" + label + "'");
    int from = vertex(label.substr(0, pos)), to = vertex(label.substr(pos + 1));
    auto it = c.dart_index.find({from, to});
    if (it == c.dart_index.end()) throw UnknownLabel("no edge '" + label + "'");
    return edge_cycle(c, it->second);
}

Integer intersection(const EquivariantComplex& c, const IntVector& a, const IntVector& b) {
    require_cycle(c, a);
    require_cycle(c, b);
    Integer total = 0;
    for (std::size_t v = 0; v < c.n0; ++v) {
        const auto& hs = c.rotation[v];
        const std::size_t d = hs.size();
        // push b off to the left: running flow of b between consecutive half-edges
        std::vector<Integer> prefix(d);
        for (std::size_t k = 1; k < d; ++k)
            prefix[k] = prefix[k - 1] + (hs[k].sign > 0 ? b[hs[k].cell] : Integer(-b[hs[k].cell]));
        for (std::size_t j = 0; j < d; ++j) {
            const Integer& ac = a[hs[j].cell];
            if (sgn(ac) == 0) continue;
            if (hs[j].sign > 0) total -= ac * prefix[j];
            else total += ac * prefix[(j + d - 1) % d];
        }
    }
    return total;
}

Integer intersection(const EquivariantComplex& c, const OneCycle& a, const OneCycle& b) {
    if (a.model != c.model || b.model != c.model) throw std::invalid_argument("cycles live on different models");
    return intersection(c, a.coeffs, b.coeffs);
}

HomologyBasis homology(const EquivariantComplex& c) {
    HomologyBasis h;
    h.model = c.model;
    h.cycles = kernel_basis(c.boundary1);
    h.boundaries = image_lattice(c.boundary2);

    SnfResult s1 = smith_normal_form(c.boundary1);
    h.h0_rank = c.n0 - s1.rank();
    for (const Integer& f : s1.invariant_factors())
        if (f != 1) h.h0_torsion.push_back(f);
    h.h2_rank = c.n2 - rank(c.boundary2);

    const std::size_t z = h.cycles.rank();
    IntMatrix bc(c.n2, z);
    for (std::size_t f = 0; f < c.n2; ++f) {
        auto x = h.cycles.coordinates(c.boundary2.col(f));
        if (!x) throw std::logic_error("boundary of a 2-cell is not a cycle");
        for (std::size_t j = 0; j < z; ++j) bc(f, j) = (*x)[j];
    }
    SnfResult s = smith_normal_form(bc);
    h.boundary_rank = s.rank();
    for (const Integer& f : s.invariant_factors())
        if (f != 1) h.h1_torsion.push_back(f);
    h.transform = s.v;
    h.rank = z - h.boundary_rank;

    IntMatrix w = inverse_unimodular(s.v) * h.cycles.basis();
    for (std::size_t i = h.boundary_rank; i < z; ++i) h.representatives.push_back(w.row(i));
    h.gram = IntMatrix(h.rank, h.rank);
    for (std::size_t i = 0; i < h.rank; ++i)
        for (std::size_t j = 0; j < h.rank; ++j) h.gram(i, j) = intersection(c, h.representatives[i], h.representatives[j]);
    return h;
}

IntVector HomologyBasis::class_of(const IntVector& cycle) const {
    auto x = cycles.coordinates(cycle);
    if (!x) throw std::invalid_argument("chain is not a cycle");
    IntVector y = transform.transpose() * (*x);
    return IntVector(y.begin() + boundary_rank, y.end());
}

Integer HomologyBasis::pairing(const IntVector& a, const IntVector& b) const { return dot(a, gram * b); }

std::optional<IntVector> dual_class(const HomologyBasis& h, const std::vector<IntVector>& cycles, const IntVector& target) {
    if (cycles.size() != target.size()) throw std::invalid_argument("one target value per cycle required");
    IntMatrix a(cycles.size(), h.rank);
    for (std::size_t k = 0; k < cycles.size(); ++k) {
        IntVector row = h.gram * h.class_of(cycles[k]);
        for (std::size_t j = 0; j < h.rank; ++j) a(k, j) = row[j];
    }
    return solve_integer(a, target);
}

IntVector dual_class(const HomologyBasis& h, const IntVector& target) {
    auto c = solve_integer(h.gram.transpose(), target);
    if (!c) throw std::logic_error("intersection form is not unimodular");
    return *c;
}

// ---------------------------------------------------------------------------

NamedCycles named_cycles(const EquivariantComplex& c, int basepoint_sign) {
    const Polyhedron& p = c.poly;
    NamedCycles n;
    n.basepoint = signed_index(0, basepoint_sign);
    for (int i = 0; i < 6; ++i) n.reps.push_back(signed_index(i, basepoint_sign));
    const int e = n.basepoint;
    const int ie = negate_signed(e);

    auto face = [&](int s) {
        IntVector v(c.n2);
        v[p.face_of_vector(s)] = 1;
        return v;
    };
    auto face_pair = [&](int s) { return face(s) - face(negate_signed(s)); };
    auto half = [&](const IntVector& v, const std::string& what) {
        IntVector h(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!mpz_even_p(v[i].get_mpz_t())) throw NotDivisible(what + " is not divisible by 2");
            mpz_divexact_ui(h[i].get_mpz_t(), v[i].get_mpz_t(), 2);
        }
        return h;
    };
    auto sum = [&](const std::vector<IntVector>& vs, std::size_t len) {
        IntVector s(len);
        for (const auto& v : vs) s = s + v;
        return s;
    };
    auto contains = [](const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); };
    auto& ch = n.chains;

    IntVector all_rep_faces(c.n2);
    for (int z : n.reps) all_rep_faces = all_rep_faces + face_pair(z);
    ch["cel"] = {2, face_pair(e)};
    ch["cel'"] = {2, all_rep_faces - face_pair(e)};
    ch["bound"] = {1, c.boundary2 * ch["cel"].coeffs};

    if (c.model == Model::sigma) {
        ch["bound'"] = {1, half(c.boundary2 * all_rep_faces, "boundary of the representative faces")};
        n.e_vertices = p.faces[p.face_of_vector(e)];
        auto on_e = [&](int x) { return contains(n.e_vertices, x); };
        for (int u : n.e_vertices)
            for (const Dart& d : c.darts)
                if (d.first == u && !on_e(d.second) && !contains(n.v_e, d.second)) n.v_e.push_back(d.second);
        std::sort(n.v_e.begin(), n.v_e.end());
        if (n.v_e.size() != 5) throw std::logic_error("V_e does not have five vertices");
        std::vector<int> iv_e;
        for (int x : n.v_e) iv_e.push_back(p.vertex_iota[x]);
        n.r0 = n.e_vertices;
        n.r0.insert(n.r0.end(), n.v_e.begin(), n.v_e.end());

        std::vector<IntVector> t, tp, ed, edp;
        for (int x : n.e_vertices) t.push_back(trunc_chain(c, x));
        for (int x : n.v_e) tp.push_back(trunc_chain(c, x));
        for (std::size_t d = 0; d < c.darts.size(); ++d) {
            auto [from, to] = c.darts[d];
            if (on_e(from) && !on_e(to)) ed.push_back(edge_chain(c, static_cast<int>(d)));
            if (contains(n.v_e, from) && contains(iv_e, to)) {
                edp.push_back(edge_chain(c, static_cast<int>(d)));
                n.e_prime_darts.push_back(static_cast<int>(d));
            }
        }
        if (ed.size() != 5 || edp.size() != 10) throw std::logic_error("unexpected edge census around e");
        ch["trc"] = {1, sum(t, c.n1)};
        ch["trc'"] = {1, sum(tp, c.n1)};
        ch["edge"] = {1, sum(ed, c.n1)};
        ch["edge'"] = {1, half(sum(edp, c.n1), "edge' sum")};
        ch["sigma"] = {1, half(ch["bound'"].coeffs + ch["edge'"].coeffs + ch["trc"].coeffs + ch["trc'"].coeffs, "sigma sum")};
    } else {
        // z_{-e} plus the other representative faces
        IntVector chain2 = face(ie);
        for (int z : n.reps)
            if (z != e) chain2 = chain2 + face(z);
        ch["bound'"] = {1, c.boundary2 * chain2};
        n.e_vertices = p.faces[p.face_of_vector(e)];
        const std::vector<int>& zie = p.faces[p.face_of_vector(ie)];
        n.r0 = n.reps;

        std::vector<IntVector> tp, ed, edp;
        for (int x : n.reps)
            if (x != e) tp.push_back(trunc_chain(c, x));
        for (std::size_t d = 0; d < c.darts.size(); ++d) {
            auto [from, to] = c.darts[d];
            if (from == e) ed.push_back(edge_chain(c, static_cast<int>(d)));
            if (contains(n.e_vertices, from) && contains(zie, to)) {
                edp.push_back(edge_chain(c, static_cast<int>(d)));
                n.e_prime_darts.push_back(static_cast<int>(d));
            }
        }
        if (ed.size() != 5 || edp.size() != 10) throw std::logic_error("unexpected edge census around z_e");
        ch["trc"] = {1, trunc_chain(c, e)};
        ch["trc'"] = {1, sum(tp, c.n1)};
        ch["edge"] = {1, sum(ed, c.n1)};
        ch["edge'"] = {1, half(sum(edp, c.n1), "edge' sum")};
        ch["pi"] = {1, half(ch["bound'"].coeffs + ch["trc"].coeffs - ch["trc'"].coeffs + ch["edge'"].coeffs, "pi sum")};
    }
    return n;
}

Chain structured_cycle(const NamedCycles& n, const std::string& name) {
    auto it = n.chains.find(name);
    if (it == n.chains.end()) throw UnknownLabel("unknown structured cycle '" + name + "'");
    return it->second;
}

std::vector<IntVector> truncation_loops(const EquivariantComplex& c) {
    std::vector<IntVector> out;
    for (int x = 0; x < static_cast<int>(c.poly.vertex_count()); ++x)
        if (x < c.poly.vertex_iota[x]) out.push_back(trunc_chain(c, x));
    return out;
}

std::vector<IntVector> edge_loops(const EquivariantComplex& c) {
    std::vector<IntVector> out;
    std::vector<bool> used(c.darts.size(), false);
    for (int d = 0; d < static_cast<int>(c.darts.size()); ++d) {
        if (used[d]) continue;
        int id = c.iota_dart(d);
        for (int q : {d, c.reverse(d), id, c.reverse(id)}) used[q] = true;
        out.push_back(edge_chain(c, d));
    }
    return out;
}

const SurfaceModel& surface_model(Model m) {
    auto make = [](Model model) {
        SurfaceModel s{model == Model::sigma ? build_sigma() : build_pi(), {}, {}};
        s.homology = homology(s.complex);
        s.named = named_cycles(s.complex);
        return s;
    };
    if (m == Model::sigma) {
        static const SurfaceModel sigma = make(Model::sigma);
        return sigma;
    }
    static const SurfaceModel pi = make(Model::pi);
    return pi;
}

std::string export_complex(const EquivariantComplex& c) {
    std::ostringstream os;
    auto signed_id = [](int sign, int id) { return std::string(sign < 0 ? "-" : "+") + std::to_string(id); };
    os << "# model " << model_name(c.model) << '\n';
    os << "# counts " << c.n0 << ' ' << c.n1 << ' ' << c.n2 << '\n';
    os << "# dim id kind | boundary | s2 s3 s5 | iota\n";
    for (int dim = 0; dim <= 2; ++dim) {
        for (std::size_t i = 0; i < c.cell_count(dim); ++i) {
            os << dim << ' ' << i << ' ';
            if (dim == 0) os << "vertex";
            else if (dim == 1) os << (c.cells1[i].kind == CellKind::edge ? "edge" : "trc");
            else os << "face:" << signed_label(c.poly.face_vector[i]);
            os << " |";
            if (dim == 1) os << ' ' << signed_id(-1, c.cells1[i].start) << ' ' << signed_id(1, c.cells1[i].end);
            if (dim == 2)
                for (const SignedCell& h : c.face_boundary[i]) os << ' ' << signed_id(h.sign, h.cell);
            os << " |";
            for (Gen g : kGens) {
                const auto& a = c.action[static_cast<int>(g)][dim];
                os << ' ' << signed_id(a.sign[i], a.image[i]);
            }
            os << " | " << signed_id(c.iota[dim].sign[i], c.iota[dim].image[i]) << '\n';
        }
    }
    return os.str();
}

}  // namespace winger
