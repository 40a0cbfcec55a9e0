#include "winger/verify.hpp"

#include "winger/isotypic.hpp"
#include "winger/monodromy.hpp"
#include "winger/rep_a5.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace winger {

namespace {

using json = nlohmann::ordered_json;

std::string bool_str(bool b) { return b ? "true" : "false"; }

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string eo_str(const EoVector& v) {
    std::string out;
    for (int i = 0; i < 6; ++i) {
        const Integer& k = v.c[i];
        if (sgn(k) == 0) continue;
        std::string coef = abs(k) == 1 ? "" : Integer(abs(k)).get_str();
        out += (sgn(k) < 0 ? "-" : out.empty() ? "" : "+") + coef + EoLattice::labels[i];
    }
    return out.empty() ? "0" : out;
}

bool is_signed_permutation(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        int nz = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (sgn(m(i, j)) == 0) continue;
            if (abs(m(i, j)) != 1) return false;
            ++nz;
        }
        if (nz != 1) return false;
    }
    return rank(m) == m.rows();
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_si());
        rows.push_back(r);
    }
    return rows;
}

std::string pair_str(const std::array<OoElem, 2>& p) { return "[" + to_string(p[0]) + ", " + to_string(p[1]) + "]"; }

Perm word_perm(const std::vector<Gen>& w) {
    Perm p;
    for (Gen g : w) p = p * gen_perm(g);
    return p;
}

// the element sigma2 sigma5^3 sigma2 sigma5^2 sigma2, which maps e to -e
const std::vector<Gen> kFlipWord = {Gen::s2, Gen::s5, Gen::s5, Gen::s5, Gen::s2, Gen::s5, Gen::s5, Gen::s2};

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"rep-a5", "surface-models", "isotypic", "monodromy", "fp-groups"};
    return names;
}

std::size_t RunResult::passed() const {
    std::size_t n = 0;
    for (const auto& s : suites)
        for (const auto& c : s.checks) n += c.pass;
    return n;
}

std::size_t RunResult::failed() const {
    std::size_t n = 0;
    for (const auto& s : suites)
        for (const auto& c : s.checks) n += !c.pass;
    return n;
}

// ---------------------------------------------------------------------------

std::vector<Check> rep_a5_checks() {
    const EoLattice& lat = EoLattice::instance();
    std::vector<Check> ck;
    const auto& group = lat.group();
    const IntMatrix id = IntMatrix::identity(6);

    std::set<Perm> perms;
    bool even = true, signed_perm = true, invariant = true, commutes = true;
    std::set<std::vector<long>> mats;
    for (const auto& g : group) {
        perms.insert(g.perm);
        even = even && g.perm.is_even();
        signed_perm = signed_perm && is_signed_permutation(g.matrix);
        invariant = invariant && g.matrix.transpose() * lat.gram() * g.matrix == lat.gram();
        commutes = commutes && g.matrix * lat.x_matrix() == lat.x_matrix() * g.matrix;
        std::vector<long> flat;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) flat.push_back(g.matrix(i, j).get_si());
        mats.insert(flat);
    }
    // closure of the generated matrix group, independent of the element table
    std::set<std::vector<long>> closure;
    {
        auto flat = [](const IntMatrix& m) {
            std::vector<long> f;
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t j = 0; j < 6; ++j) f.push_back(m(i, j).get_si());
            return f;
        };
        std::vector<IntMatrix> frontier = {id};
        closure.insert(flat(id));
        while (!frontier.empty()) {
            IntMatrix m = frontier.back();
            frontier.pop_back();
            for (Gen g : kGens) {
                IntMatrix n = lat.generator(g) * m;
                if (closure.insert(flat(n)).second) frontier.push_back(n);
                if (closure.size() > 1000) break;
            }
        }
    }
    ck.push_back(make_check("lem:basisEo.group-order", "60", std::to_string(closure.size())));
    ck.push_back(make_check("lem:basisEo.element-table", "60 distinct even permutations, 60 distinct matrices",
                            std::to_string(perms.size()) + " distinct " + (even ? "even" : "mixed") + " permutations, " +
                                std::to_string(mats.size()) + " distinct matrices"));
    ck.push_back(make_check("lem:basisEo.signed-permutations", "true", bool_str(signed_perm)));
    bool rel = lat.generator(Gen::s2) * lat.generator(Gen::s3) * lat.generator(Gen::s5) == id &&
               gen_perm(Gen::s2) * gen_perm(Gen::s3) * gen_perm(Gen::s5) == Perm();
    ck.push_back(make_check("lem:basisEo.relation", "sigma2 sigma3 sigma5 = 1", rel ? "sigma2 sigma3 sigma5 = 1" : "violated"));
    ck.push_back(make_check("lem:basisEo.sigma5(e)", "e", eo_str(lat.act(gen_perm(Gen::s5), EoVector::basis(0)))));
    ck.push_back(make_check("lem:basisEo.sigma2(e2)", "-e2", eo_str(lat.act(gen_perm(Gen::s2), EoVector::basis(3)))));
    Perm flip = word_perm(kFlipWord);
    ck.push_back(make_check("lem:basisEo.flip-word", "(2,5)(3,4) maps e to -e",
                            flip.to_string() + " maps e to " + eo_str(lat.act(flip, EoVector::basis(0)))));
    ck.push_back(make_check("lem:basisEo.invariant-form", "true", bool_str(invariant)));
    ck.push_back(make_check("lem:basisEo.orthonormal", "true", bool_str(lat.gram() == id)));

    auto orb = orbit(EoVector::basis(0));
    bool closed = true, is_basis = orb.size() == 12;
    for (const auto& v : orb) {
        closed = closed && std::find(orb.begin(), orb.end(), -v) != orb.end();
        int nz = 0;
        for (const auto& x : v.c) nz += sgn(x) != 0 && abs(x) == 1;
        is_basis = is_basis && nz == 1;
    }
    ck.push_back(make_check("lem:basisEo.orbit", "12 vectors, closed under negation",
                            std::to_string(orb.size()) + " vectors, " + (closed ? "closed" : "not closed") +
                                " under negation"));
    ck.push_back(make_check("lem:basisEo.orbit-is-signed-basis", "true", bool_str(is_basis)));

    const std::array<const char*, 6> x_table = {"e0+e1+e2+e3+e4", "e+e1-e2-e3+e4", "e+e0+e2-e3-e4",
                                                "e-e0+e1+e3-e4", "e-e0-e1+e2+e4", "e+e0-e1-e2+e3"};
    for (int i = 0; i < 6; ++i)
        ck.push_back(make_check(std::string("ringOo.X(") + EoLattice::labels[i] + ")", x_table[i],
                                eo_str(lat.apply_x(EoVector::basis(i)))));
    ck.push_back(make_check("ringOo.X-squared", "5*Id",
                            lat.x_matrix() * lat.x_matrix() == Integer(5) * id ? "5*Id" : to_string(lat.x_matrix() * lat.x_matrix())));
    ck.push_back(make_check("ringOo.X-commutes", "all 60", commutes ? "all 60" : "not all"));

    EndoRingReport er = verify_endo_ring();
    ck.push_back(make_check("ringOo.commutant-rank", "2", std::to_string(er.commutant.rank())));
    ck.push_back(make_check("ringOo.commutant", "span{Id, X}",
                            er.commutant_is_span_id_x && er.s3_commutes ? "span{Id, X}" : "other"));

    auto units_str = [](const std::vector<std::pair<long, long>>& us) {
        std::string s;
        for (auto [a, b] : us) {
            if (!s.empty()) s += ", ";
            s += a == 0 ? (b > 0 ? "Id" : "-Id") : to_string(OoElem(b, a));
        }
        return "{" + s + "}";
    };
    ck.push_back(make_check("Cor:autgoEo", "{-Id, Id}", units_str(er.units)));
    ck.push_back(make_check("Cor:autgoEo.isometric", "{-Id, Id}", units_str(er.isometric_units)));

    // E: even coefficient sum
    std::vector<IntVector> gens;
    for (int i = 0; i < 6; ++i) {
        IntVector v(6);
        v[i] = 1;
        if (i == 0) v[0] = 2;
        else v[0] = -1;
        gens.push_back(v);
    }
    std::vector<IntVector> full;
    for (int i = 0; i < 6; ++i) full.push_back(id.row(i));
    auto q = lattice_quotient(Sublattice(6, gens), Sublattice(6, full));
    Integer idx = 1;
    for (const auto& f : q) idx *= f;
    bool predicate = !in_even_sublattice(EoVector::basis(0));
    for (const auto& v : gens) predicate = predicate && in_even_sublattice(from_vector(v));
    ck.push_back(make_check("E.index", "2", idx.get_str()));
    ck.push_back(make_check("E.predicate", "true", bool_str(predicate)));
    return ck;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t traced_faces(const EquivariantComplex& c, bool* all_decagons) {
    // half-edge (cell, sign) leaving a vertex; next = successor of the reverse in the ccw order at the head
    std::map<SignedCell, int> pos;
    std::map<SignedCell, int> tail;
    for (std::size_t v = 0; v < c.n0; ++v)
        for (std::size_t k = 0; k < c.rotation[v].size(); ++k) {
            pos[c.rotation[v][k]] = static_cast<int>(k);
            tail[c.rotation[v][k]] = static_cast<int>(v);
        }
    std::set<SignedCell> seen;
    std::size_t faces = 0;
    *all_decagons = true;
    for (const auto& [h0, _] : pos) {
        if (seen.count(h0)) continue;
        ++faces;
        std::size_t len = 0;
        SignedCell h = h0;
        while (seen.insert(h).second) {
            ++len;
            SignedCell r{h.cell, -h.sign};
            int w = tail.at(r);
            const auto& rot = c.rotation[w];
            h = rot[(pos.at(r) + 1) % rot.size()];
        }
        *all_decagons = *all_decagons && len == 10;
    }
    return faces;
}

std::vector<std::size_t> oriented_orbits(const EquivariantComplex& c, int dim) {
    const std::size_t n = c.cell_count(dim);
    std::vector<bool> seen(2 * n, false);
    std::vector<std::size_t> sizes;
    for (std::size_t s = 0; s < 2 * n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> stack = {s};
        seen[s] = true;
        std::size_t size = 0;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            ++size;
            for (Gen g : kGens) {
                const SignedPermutation& p = c.action[static_cast<int>(g)][dim];
                std::size_t cell = x / 2;
                int sign = (x % 2 ? -1 : 1) * p.sign[cell];
                std::size_t y = 2 * p.image[cell] + (sign < 0 ? 1 : 0);
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::string sizes_str(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

}  // namespace

std::vector<Check> surface_checks() {
    std::vector<Check> ck;
    const EoLattice& lat = EoLattice::instance();
    const GroupElement& h_e = lat.element(word_perm(kFlipWord));
    for (Model m : {Model::sigma, Model::pi}) {
        const SurfaceModel& s = surface_model(m);
        const EquivariantComplex& c = s.complex;
        const HomologyBasis& h = s.homology;
        const std::string p = std::string(model_name(m)) + ".";

        ck.push_back(make_check(p + "cells", "30/60/12",
                                std::to_string(c.n0) + "/" + std::to_string(c.n1) + "/" + std::to_string(c.n2)));
        IntMatrix dd = c.boundary1 * c.boundary2;
        ck.push_back(make_check(p + "d1*d2", "0", dd == IntMatrix(c.n0, c.n2) ? "0" : "nonzero"));
        ck.push_back(make_check(p + "euler", "-18", std::to_string(c.euler_characteristic())));
        ck.push_back(make_check(p + "H0", "Z", h.h0_rank == 1 && h.h0_torsion.empty() ? "Z" : "other"));
        ck.push_back(make_check(p + "H1", "Z^20", h.h1_torsion.empty() ? "Z^" + std::to_string(h.rank) : "torsion"));
        ck.push_back(make_check(p + "H2", "Z", h.h2_rank == 1 ? "Z" : "rank " + std::to_string(h.h2_rank)));

        bool equi = true, rel = true, iota_comm = true;
        std::array<IntMatrix, 3> prod;
        for (int d = 0; d < 3; ++d) prod[d] = IntMatrix::identity(c.cell_count(d));
        for (Gen g : kGens) {
            const auto& a = c.action[static_cast<int>(g)];
            IntMatrix a0 = a[0].matrix(), a1 = a[1].matrix(), a2 = a[2].matrix();
            equi = equi && a0 * c.boundary1 == c.boundary1 * a1 && a1 * c.boundary2 == c.boundary2 * a2;
            for (int d = 0; d < 3; ++d) {
                IntMatrix ad = a[d].matrix();
                iota_comm = iota_comm && ad * c.iota[d].matrix() == c.iota[d].matrix() * ad;
                prod[d] = prod[d] * ad;
            }
        }
        for (int d = 0; d < 3; ++d) rel = rel && prod[d] == IntMatrix::identity(c.cell_count(d));
        IntMatrix i0 = c.iota[0].matrix(), i1 = c.iota[1].matrix(), i2 = c.iota[2].matrix();
        bool iota_d = i0 * c.boundary1 == c.boundary1 * i1 && i1 * c.boundary2 == c.boundary2 * i2;
        ck.push_back(make_check(p + "action.boundaries", "equivariant", equi ? "equivariant" : "not equivariant"));
        ck.push_back(make_check(p + "action.relation", "sigma2 sigma3 sigma5 = 1", rel ? "sigma2 sigma3 sigma5 = 1" : "violated"));
        ck.push_back(make_check(p + "iota.boundaries", "equivariant", iota_d ? "equivariant" : "not equivariant"));
        ck.push_back(make_check(p + "iota.commutes", "true", bool_str(iota_comm)));

        // iota fixes the glued seam and nothing else
        std::size_t fixed0 = 0, fixed_trc = 0, fixed_edge = 0, fixed2 = 0;
        for (std::size_t i = 0; i < c.n0; ++i) fixed0 += c.iota[0].image[i] == static_cast<int>(i);
        for (std::size_t i = 0; i < c.n1; ++i)
            if (c.iota[1].image[i] == static_cast<int>(i))
                (c.cells1[i].kind == CellKind::truncation ? fixed_trc : fixed_edge) += 1;
        for (std::size_t i = 0; i < c.n2; ++i) fixed2 += c.iota[2].image[i] == static_cast<int>(i);
        ck.push_back(make_check(p + "iota.fixed-cells", "0-cells 30, truncation 1-cells 30, edge 1-cells 0, 2-cells 0",
                                "0-cells " + std::to_string(fixed0) + ", truncation 1-cells " + std::to_string(fixed_trc) +
                                    ", edge 1-cells " + std::to_string(fixed_edge) + ", 2-cells " + std::to_string(fixed2)));

        bool decagons = false;
        std::size_t faces = traced_faces(c, &decagons);
        ck.push_back(make_check(p + "rotation.faces", "12 decagons",
                                std::to_string(faces) + (decagons ? " decagons" : " faces, not all decagons")));

        bool antisym = h.gram.transpose() == Integer(-1) * h.gram;
        ck.push_back(make_check(p + "H1.gram", "antisymmetric, det 1",
                                std::string(antisym ? "antisymmetric" : "not antisymmetric") + ", det " +
                                    determinant(h.gram).get_str()));
        ModuleAction act = homology_action(c, h);
        bool inv = true;
        for (Gen g : kGens) inv = inv && act[g].transpose() * h.gram * act[g] == h.gram;
        ck.push_back(make_check(p + "H1.gram-invariant", "true", bool_str(inv)));

        // labels: delta_{iota x} = -delta_x, delta_{-y} = delta_{iota y} = -delta_y
        bool trc_sign = true, edge_sign = true, closed = true;
        for (int x = 0; x < static_cast<int>(c.poly.vertex_count()); ++x) {
            IntVector a = truncation_cycle(c, x).coeffs, b = truncation_cycle(c, c.poly.vertex_iota[x]).coeffs;
            trc_sign = trc_sign && b == Integer(-1) * a;
            closed = closed && is_zero(c.boundary1 * a);
        }
        for (int d = 0; d < static_cast<int>(c.darts.size()); ++d) {
            IntVector a = edge_cycle(c, d).coeffs;
            edge_sign = edge_sign && edge_cycle(c, c.reverse(d)).coeffs == Integer(-1) * a &&
                        edge_cycle(c, c.iota_dart(d)).coeffs == Integer(-1) * a;
            closed = closed && is_zero(c.boundary1 * a);
        }
        ck.push_back(make_check(p + "cycles.truncation-sign", "true", bool_str(trc_sign)));
        ck.push_back(make_check(p + "cycles.edge-sign", "true", bool_str(edge_sign)));
        ck.push_back(make_check(p + "cycles.closed", "true", bool_str(closed)));

        if (m == Model::sigma) {
            std::size_t nz = 0;
            for (const auto& x : s.named.chains.at("trc").coeffs) nz += sgn(x) != 0;
            ck.push_back(make_check(p + "trc.support", "15", std::to_string(nz)));
        } else {
            auto orb1 = oriented_orbits(c, 1);
            bool split = true;
            // each orbit consists of one kind only
            ck.push_back(make_check(p + "1-cells.orbits", "60,60", sizes_str(orb1)));
            for (Gen g : kGens)
                for (std::size_t i = 0; i < c.n1; ++i)
                    split = split && c.cells1[c.action[static_cast<int>(g)][1].image[i]].kind == c.cells1[i].kind;
            ck.push_back(make_check(p + "1-cells.orbit-types", "edge, truncation", split ? "edge, truncation" : "mixed"));
            auto orb0 = oriented_orbits(c, 0);
            ck.push_back(make_check(p + "0-cells.transitive", "true",
                                    bool_str(orb0.size() == 2 && orb0[0] == c.n0)));
            // canonically oriented 2-cells: one orbit of 12, stabilizer of order 5
            auto orb2 = oriented_orbits(c, 2);
            ck.push_back(make_check(p + "2-cells.orbits", "12,12", sizes_str(orb2)));
        }

        // the sum of the edge cycles around e (resp. z_e) is fixed by h_e
        const auto& face = c.poly.faces[c.poly.face_of_vector(s.named.basepoint)];
        IntVector around(c.n1);
        for (std::size_t k = 0; k < face.size(); ++k)
            around = around + edge_cycle(c, c.dart(face[k], face[(k + 1) % face.size()])).coeffs;
        bool fixed = c.act(h_e, 1, around) == around && c.act(Gen::s5, 1, around) == around;
        ck.push_back(make_check(p + "Nodelta1", "fixed by h_e", fixed ? "fixed by h_e" : "not fixed"));

        std::string dump = export_complex(c);
        ck.push_back(make_check(p + "export.lines", std::to_string(3 + c.n0 + c.n1 + c.n2),
                                std::to_string(std::count(dump.begin(), dump.end(), '\n'))));

        auto tables = intersection_table_checks(m);
        ck.insert(ck.end(), tables.begin(), tables.end());
    }
    return ck;
}

std::vector<Check> intersection_table_checks(Model m) {
    const SurfaceModel& s = surface_model(m);
    const EquivariantComplex& c = s.complex;
    const NamedCycles& n = s.named;
    const bool sig = m == Model::sigma;
    const std::string lemma = sig ? "lemma:intsce" : "intPi";
    const std::string table = sig ? "speint" : "intedtrPi";
    std::vector<Check> ck;
    const int nv = static_cast<int>(c.poly.vertex_count());
    const int nd = static_cast<int>(c.darts.size());
    auto tm = [&](int d) { return c.darts[d].second; };
    auto ini = [&](int d) { return c.darts[d].first; };
    auto pair = [&](const IntVector& a, const IntVector& b) { return intersection(c, a, b).get_si(); };

    std::vector<IntVector> tcyc(nv), ecyc(nd);
    for (int x = 0; x < nv; ++x) tcyc[x] = truncation_cycle(c, x).coeffs;
    for (int d = 0; d < nd; ++d) ecyc[d] = edge_cycle(c, d).coeffs;

    // same type
    std::size_t bad = 0, total = 0;
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y, ++total) bad += pair(tcyc[x], tcyc[y]) != 0;
    for (int a = 0; a < nd; ++a)
        for (int b = 0; b < nd; ++b, ++total) bad += pair(ecyc[a], ecyc[b]) != 0;
    ck.push_back(make_check(lemma + ".same-type", "0 of " + std::to_string(total) + " nonzero",
                            std::to_string(bad) + " of " + std::to_string(total) + " nonzero"));

    // mixed type: +1 iff x is the end point of y or of -iota y (the other label of the same cycle)
    bad = 0;
    total = 0;
    std::string first_bad;
    for (int x = 0; x < nv; ++x)
        for (int d = 0; d < nd; ++d, ++total) {
            const int id = c.iota_dart(d);
            long want = 0;
            if (x == tm(d) || x == ini(id)) want = 1;
            else if (x == ini(d) || x == tm(id)) want = -1;
            long got = pair(tcyc[x], ecyc[d]);
            if (got != want) {
                ++bad;
                if (first_bad.empty())
                    first_bad = "x=" + c.poly.vertex_labels[x] + " y=" + c.poly.vertex_labels[ini(d)] + ">" +
                                c.poly.vertex_labels[tm(d)] + " got " + std::to_string(got);
            }
        }
    ck.push_back(make_check(lemma + ".mixed-type", "0 of " + std::to_string(total) + " differ",
                            std::to_string(bad) + " of " + std::to_string(total) + " differ" +
                                (first_bad.empty() ? "" : " (" + first_bad + ")")));

    const IntVector& trc = n.chains.at("trc").coeffs;
    const IntVector& trcp = n.chains.at("trc'").coeffs;
    const IntVector& edge = n.chains.at("edge").coeffs;
    const IntVector& edgep = n.chains.at("edge'").coeffs;
    const std::string f = sig ? "sigma" : "pi";

    // vanishing sets of the own type
    bool zero = true;
    for (const auto& l : edge_loops(c)) zero = zero && pair(edge, l) == 0 && pair(edgep, l) == 0;
    ck.push_back(make_check(table + "." + f + "_edge.vs-edge-loops", "0", zero ? "0" : "nonzero"));
    zero = true;
    for (const auto& l : truncation_loops(c)) zero = zero && pair(trc, l) == 0 && pair(trcp, l) == 0;
    ck.push_back(make_check(table + "." + f + "_trc.vs-truncation-loops", "0", zero ? "0" : "nonzero"));

    auto row = [](const std::vector<std::pair<std::string, long>>& v) {
        std::string out;
        for (const auto& [k, x] : v) out += (out.empty() ? "" : ", ") + k + ":" + std::to_string(x);
        return out;
    };
    auto dart_label = [&](int d) { return c.poly.vertex_labels[ini(d)] + ">" + c.poly.vertex_labels[tm(d)]; };

    std::vector<std::pair<std::string, long>> want_e, got_e, want_ep, got_ep;
    for (int x : n.r0) {
        const std::string lx = c.poly.vertex_labels[x];
        long we, wep;
        if (sig) {
            bool on_e = contains(n.e_vertices, x);
            we = on_e ? 1 : -1;
            wep = on_e ? 0 : 2;
        } else {
            we = x == n.basepoint ? 5 : -1;
            wep = x == n.basepoint ? 0 : 2;
        }
        want_e.emplace_back(lx, we);
        want_ep.emplace_back(lx, wep);
        got_e.emplace_back(lx, pair(edge, tcyc[x]));
        got_ep.emplace_back(lx, pair(edgep, tcyc[x]));
    }
    ck.push_back(make_check(table + "." + f + "_edge", row(want_e), row(got_e)));
    ck.push_back(make_check(table + "." + f + "'_edge", row(want_ep), row(got_ep)));

    // representatives of the edge cycles: darts starting in R0, one per cycle, preferring darts that
    // start on e (Sigma: on the face e) so the listed case applies
    auto starts_on_e = [&](int d) { return sig ? contains(n.e_vertices, ini(d)) : ini(d) == n.basepoint; };
    std::vector<int> r1;
    std::vector<bool> used(nd, false);
    for (int d = 0; d < nd; ++d) {
        if (used[d]) continue;
        const int id = c.iota_dart(d);
        std::vector<int> cls = {d, c.reverse(d), id, c.reverse(id)};
        for (int q : cls) used[q] = true;
        int best = -1;
        for (int q : cls) {
            if (!contains(n.r0, ini(q))) continue;
            if (best < 0 || (starts_on_e(q) && !starts_on_e(best))) best = q;
        }
        if (best >= 0) r1.push_back(best);
    }
    std::sort(r1.begin(), r1.end());
    ck.push_back(make_check(table + ".representatives", "15", std::to_string(r1.size())));

    std::vector<std::pair<std::string, long>> want_t, got_t, want_tp, got_tp;
    std::vector<int> iv_e;
    for (int x : n.v_e) iv_e.push_back(c.poly.vertex_iota[x]);
    const std::vector<int>& zie = c.poly.faces[c.poly.face_of_vector(negate_signed(n.basepoint))];
    for (int d : r1) {
        long wt, wtp;
        if (sig) {
            bool first = contains(n.e_vertices, ini(d)) && contains(n.v_e, tm(d));
            bool second = contains(n.v_e, ini(d)) && contains(iv_e, tm(d));
            wt = first ? -1 : 0;
            wtp = first ? 1 : second ? -2 : 0;
        } else {
            bool first = ini(d) == n.basepoint;
            bool second = contains(n.e_vertices, ini(d)) && contains(zie, tm(d));
            wt = first ? -1 : 0;
            wtp = first ? 1 : second ? -2 : 0;
        }
        want_t.emplace_back(dart_label(d), wt);
        want_tp.emplace_back(dart_label(d), wtp);
        got_t.emplace_back(dart_label(d), pair(trc, ecyc[d]));
        got_tp.emplace_back(dart_label(d), pair(trcp, ecyc[d]));
    }
    ck.push_back(make_check(table + "." + f + "_trc", row(want_t), row(got_t)));
    ck.push_back(make_check(table + "." + f + "'_trc", row(want_tp), row(got_tp)));

    // dual classes
    const HomologyBasis& h = s.homology;
    std::vector<IntVector> loops;
    for (int x : n.r0) loops.push_back(tcyc[x]);
    std::size_t found = 0;
    for (std::size_t k = 0; k < n.r0.size(); ++k) {
        IntVector target(n.r0.size());
        target[k] = 1;
        auto cls = dual_class(h, loops, target);
        if (!cls) continue;
        // confirm against the combinatorial pairing on a representative cycle
        IntVector rep(c.n1);
        for (std::size_t i = 0; i < h.rank; ++i) rep = rep + (*cls)[i] * h.representatives[i];
        bool ok = true;
        for (std::size_t j = 0; j < n.r0.size(); ++j) ok = ok && pair(rep, loops[j]) == (j == k ? 1 : 0);
        found += ok;
    }
    ck.push_back(make_check(std::string(sig ? "OostrZ1" : "dulintPi") + ".dual-classes", std::to_string(n.r0.size()),
                            std::to_string(found)));
    if (!sig) {
        std::size_t with_extra = 0;
        for (std::size_t k = 0; k < n.r0.size(); ++k) {
            if (n.r0[k] == n.basepoint) continue;
            std::vector<IntVector> cyc = loops;
            cyc.push_back(edge);
            cyc.push_back(edgep);
            IntVector target(cyc.size());
            target[k] = 1;
            // <pi_edge(e), eps> = 0 and <pi'_edge(e), eps> = -1
            target[n.r0.size()] = 0;
            target[n.r0.size() + 1] = 1;
            auto cls = dual_class(h, cyc, target);
            if (!cls) continue;
            IntVector rep(c.n1);
            for (std::size_t i = 0; i < h.rank; ++i) rep = rep + (*cls)[i] * h.representatives[i];
            with_extra += pair(edge, rep) == 0 && pair(edgep, rep) == -1 && pair(rep, loops[k]) == 1;
        }
        ck.push_back(make_check("dulintPi.extra-conditions", "5", std::to_string(with_extra)));
    }
    return ck;
}

// ---------------------------------------------------------------------------

std::vector<Check> isotypic_checks() {
    std::vector<Check> ck;
    for (Model m : {Model::sigma, Model::pi}) {
        StructureReport r = structure_report(m);
        ck.insert(ck.end(), r.checks.begin(), r.checks.end());
    }
    const std::map<Model, std::vector<std::pair<std::string, std::array<OoElem, 2>>>> expansions = {
        {Model::sigma,
         {{"trc'", {OoElem(-2, 1), OoElem(0)}}, {"edge", {OoElem(-2), OoElem(1, 1)}}, {"edge'", {OoElem(1, -1), OoElem(2)}}}},
        {Model::pi,
         {{"trc'", {OoElem(0, 1), OoElem(0)}}, {"edge", {OoElem(3, -1), OoElem(-1, 1)}}, {"edge'", {OoElem(-1, 1), OoElem(2)}}}},
    };
    for (Model m : {Model::sigma, Model::pi}) {
        const bool sig = m == Model::sigma;
        const std::string cor = sig ? "Cor:SiggenSL2O" : "Cor:PigenSL2O";
        const std::string eq = sig ? "EQ:SiggenSL2O" : "EQ:PigenSL2O";
        HomologyGenerators g = homology_generators(m);
        ck.push_back(make_check(cor + ".generates", "true", bool_str(g.generates)));
        ck.push_back(make_check(cor + ".generates-by-pairing", "true", bool_str(g.generates_by_pairing)));
        IntMatrix stacked(4, g.u.rows() * 6);
        for (int k = 0; k < 4; ++k)
            for (std::size_t i = 0; i < g.u.rows(); ++i)
                for (std::size_t j = 0; j < 6; ++j) stacked(k, i * 6 + j) = g.zbasis[k](i, j);
        ck.push_back(make_check(cor + ".free-rank-two", "Z-rank 4", "Z-rank " + std::to_string(rank(stacked))));
        IntMatrix scaled(4, 4);
        bool divisible = true;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                divisible = divisible && mpz_divisible_ui_p(g.form_gram(i, j).get_mpz_t(), 30);
                scaled(i, j) = g.form_gram(i, j) / 30;
            }
        ck.push_back(make_check(cor + ".form", "30 * unimodular",
                                divisible && abs(determinant(scaled)) == 1 ? "30 * unimodular" : to_string(g.form_gram)));
        for (const auto& [name, want] : expansions.at(m)) {
            auto got = g.express(g.images.at(name));
            ck.push_back(make_check(eq + "." + name, pair_str(want), got ? pair_str(*got) : "not in the span"));
        }
        HomologyGenerators flipped = homology_generators(m, -1);
        bool neg = flipped.u == Integer(-1) * g.u && flipped.v == Integer(-1) * g.v;
        ck.push_back(make_check(cor + ".basepoint-sign", "U, V negated", neg ? "U, V negated" : "other"));
    }
    return ck;
}

std::vector<Check> monodromy_checks() { return monodromy_report().checks; }

// ---------------------------------------------------------------------------

std::vector<Check> fp_group_checks(std::size_t coset_limit, Headline* headline, CosetTable* table_out) {
    std::vector<Check> ck;
    const FpGroup g = sl2o_presentation();
    const OMatrix id = OMatrix::identity();
    ck.push_back(make_check("genSLO.relator-count", "12", std::to_string(g.relators.size())));
    ck.push_back(make_check("genSLO.R2.word", "A1 A2 A1 A2 A1 A2", to_string(g, g.relators[6])));
    ck.push_back(make_check("genSLO.R5.word", "A3 A2 A3^-1 A4^-1 A2^-1", to_string(g, g.relators[9])));
    bool dets = true;
    for (int k = 0; k < 5; ++k) dets = dets && generator_matrix(k).is_sl2();
    ck.push_back(make_check("genSLO.generators.det", "1", dets ? "1" : "not 1"));
    for (std::size_t k = 0; k < g.relators.size(); ++k)
        ck.push_back(make_check("genSLO." + g.relator_names[k], to_string(id), to_string(word_to_matrix(g.relators[k]))));

    const auto words = monodromy_words();
    const auto glob = global_generators();
    const std::array<const char*, 3> names = {"rho_sigma_trc", "rho_sigma_edge", "third"};
    const std::array<const char*, 3> literal = {"[[1, -3+2*Y], [0, 1]]", "[[3, -2+2*Y], [0-2*Y, -1]]",
                                                "[[1, 0], [1-2*Y, 1]]"};
    for (int k = 0; k < 3; ++k) {
        OMatrix w = word_to_matrix(words[k]);
        ck.push_back(make_check(std::string("thm:mainind.word.") + names[k], literal[k], to_string(w)));
        ck.push_back(make_check(std::string("thm:mainind.word.") + names[k] + ".embedded", to_string(embed_oo(glob[k])),
                                to_string(w)));
    }

    CosetTable t = todd_coxeter(g, words, coset_limit);
    ck.push_back(make_check("thm:mainind.index_in_SL2O", "20", std::to_string(t.index())));
    ck.push_back(make_check("thm:mainind.coset-table", "valid", t.valid(g, words) ? "valid" : "invalid"));

    FiniteIndexReport fr = index_oo_in_o();
    ck.push_back(make_check("indexSLOoSLO.SL2F4", "60", std::to_string(fr.sl2_f4)));
    ck.push_back(make_check("indexSLOoSLO.SL2F2", "6", std::to_string(fr.sl2_f2)));
    ck.push_back(make_check("indexSLOoSLO", "10", std::to_string(fr.index)));
    ck.push_back(make_check("indexSLOoSLO.cosets-partition", "true", bool_str(fr.cosets_partition)));
    ck.push_back(make_check("indexSLOoSLO.reduction-onto", "true", bool_str(fr.reduction_onto)));

    try {
        IndexChain chain = certify_index_two(t.index(), fr.index, words);
        std::string mod2;
        for (const auto& m : chain.generators_mod2) mod2 += (mod2.empty() ? "" : "; ") + to_string(m);
        bool f2 = chain.generators_mod2.size() == 3;
        ck.push_back(make_check("thm:mainind.mod2", "in SL2(F2)", f2 ? "in SL2(F2)" : mod2));
        ck.push_back(make_check("thm:mainind", "2", std::to_string(chain.in_sl2oo)));
        if (headline) *headline = {chain.in_sl2o, chain.oo_in_o, chain.in_sl2oo};
    } catch (const InconsistentChain& e) {
        ck.push_back(make_check("thm:mainind.mod2", "in SL2(F2)", e.what()));
        ck.push_back(make_check("thm:mainind", "2", e.what()));
        if (headline) *headline = {t.index(), fr.index, 0};
    }
    if (table_out) *table_out = std::move(t);
    return ck;
}

// ---------------------------------------------------------------------------

SuiteResult run_suite(const std::string& name, const RunConfig& config, Headline* headline) {
    SuiteResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    if (name == "rep-a5") {
        r.checks = rep_a5_checks();
        if (config.emit_tables) {
            const EoLattice& lat = EoLattice::instance();
            r.tables["x_matrix"] = matrix_json(lat.x_matrix());
            for (Gen g : kGens) r.tables[std::string("action.") + gen_name(g)] = matrix_json(lat.generator(g));
        }
    } else if (name == "surface-models") {
        r.checks = surface_checks();
        if (config.emit_tables)
            for (Model m : {Model::sigma, Model::pi})
                r.tables[std::string(model_name(m)) + ".H1_gram"] = matrix_json(surface_model(m).homology.gram);
    } else if (name == "isotypic") {
        r.checks = isotypic_checks();
        if (config.emit_tables)
            for (Model m : {Model::sigma, Model::pi}) {
                HomologyGenerators g = homology_generators(m);
                json t;
                t["form_gram_U_XU_V_XV"] = matrix_json(g.form_gram);
                for (const auto& [k, phi] : g.images) {
                    auto x = g.express(phi);
                    t["p." + k] = x ? pair_str(*x) : "not in the span";
                }
                r.tables[model_name(m)] = t;
            }
    } else if (name == "monodromy") {
        r.checks = monodromy_checks();
        if (config.emit_tables) {
            MonodromyReport mr = monodromy_report();
            for (const auto& [k, v] : mr.local) r.tables[k] = to_string(v);
            r.tables["P"] = to_string(mr.p);
            r.tables["P*pi.trc*P^-1"] = to_string(mr.p_conj_pi_trc);
            r.tables["P^-1*pi.trc*P"] = to_string(mr.p_inv_conj_pi_trc);
            r.tables["rho0"] = to_string(mr.rho0);
            r.tables["rho0^-1"] = to_string(mr.rho0_inv);
        }
    } else if (name == "fp-groups") {
        CosetTable t;
        r.checks = fp_group_checks(config.coset_limit, headline, &t);
        if (config.emit_tables) {
            json rows = json::array();
            for (const auto& row : t.rows) {
                json jr = json::array();
                for (int x : row) jr.push_back(x + 1);
                rows.push_back(jr);
            }
            r.tables["coset_table"] = rows;
        }
    } else {
        throw UnknownSuite("unknown module '" + name + "'");
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

RunResult run(const RunConfig& config) {
    for (const auto& m : config.modules)
        if (std::find(suite_names().begin(), suite_names().end(), m) == suite_names().end())
            throw UnknownSuite("unknown module '" + m + "'");
    RunResult r;
    r.config = config;
    std::set<std::string> seen;
    for (const auto& name : suite_names()) {
        if (!config.modules.empty() && !config.modules.count(name)) continue;
        Headline h;
        SuiteResult s = run_suite(name, config, &h);
        if (name == "fp-groups") r.headline = h;
        for (const auto& c : s.checks)
            if (!seen.insert(c.name).second) throw std::logic_error("duplicate check name " + c.name);
        r.suites.push_back(std::move(s));
    }
    return r;
}

std::string render_report(const RunResult& r) {
    json j;
    j["format"] = "winger-report 1";
    json mods = json::array();
    for (const auto& s : r.suites) mods.push_back(s.name);
    j["modules"] = mods;
    j["coset_limit"] = r.config.coset_limit;
    json suites = json::array();
    for (const auto& s : r.suites) {
        json js;
        js["name"] = s.name;
        json checks = json::array();
        for (const auto& c : s.checks) {
            json jc;
            jc["name"] = c.name;
            jc["status"] = c.pass ? "pass" : "fail";
            jc["expected"] = c.expected;
            jc["actual"] = c.actual;
            checks.push_back(jc);
        }
        js["checks"] = checks;
        if (r.config.emit_tables) js["tables"] = s.tables;
        suites.push_back(js);
    }
    j["suites"] = suites;
    if (r.headline) {
        j["headline"] = {{"index_in_SL2O", r.headline->index_in_sl2o},
                         {"index_SL2Oo_in_SL2O", r.headline->index_sl2oo_in_sl2o},
                         {"index_in_SL2Oo", r.headline->index_in_sl2oo}};
    }
    j["summary"] = {{"pass", r.passed()}, {"fail", r.failed()}};
    return j.dump(2) + "\n";
}

}  // namespace winger
