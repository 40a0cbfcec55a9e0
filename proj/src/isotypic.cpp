#include "winger/isotypic.hpp"

#include <numeric>

namespace winger {

namespace {

IntVector flatten(const IntMatrix& m) {
    IntVector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

IntMatrix unflatten(const IntVector& v, std::size_t rows) {
    IntMatrix m(rows, 6);
    for (std::size_t i = 0; i < v.size(); ++i) m(i / 6, i % 6) = v[i];
    return m;
}

// rows: (M Phi - Phi E_g)(r, j) for unknown Phi flattened row-major
void commutation_rows(IntMatrix& eq, std::size_t& row, const IntMatrix& m, const IntMatrix& e) {
    const std::size_t n = m.rows();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < 6; ++j, ++row) {
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(m(r, k)) != 0) eq(row, k * 6 + j) += m(r, k);
            for (std::size_t k = 0; k < 6; ++k)
                if (sgn(e(k, j)) != 0) eq(row, r * 6 + k) -= e(k, j);
        }
}

HomLattice finish(const ModuleAction& target, const Sublattice& flat) {
    HomLattice h;
    h.target = target;
    for (std::size_t i = 0; i < flat.rank(); ++i) h.basis.push_back(unflatten(flat.basis_vector(i), target.rank));
    for (const IntMatrix& phi : h.basis)
        if (!is_equivariant(target, phi)) throw NotEquivariant("solution of the commutation system fails a generator");
    h.x_action = IntMatrix(h.rank(), h.rank());
    for (std::size_t k = 0; k < h.rank(); ++k) {
        auto c = h.coordinates(precompose_x(h.basis[k]));
        if (!c) throw std::logic_error("Hom lattice is not stable under X");
        for (std::size_t i = 0; i < h.rank(); ++i) h.x_action(i, k) = (*c)[i];
    }
    return h;
}

std::string coeff_pair(const std::optional<IntVector>& c) {
    if (!c) return "not in span";
    return to_string(*c);
}

}  // namespace

ModuleAction chain_action(const EquivariantComplex& c, int dim) {
    ModuleAction m;
    m.rank = c.cell_count(dim);
    for (Gen g : kGens) m.gen[static_cast<int>(g)] = c.action[static_cast<int>(g)][dim].matrix();
    return m;
}

ModuleAction restrict_action(const ModuleAction& m, const Sublattice& sub) {
    ModuleAction r;
    r.rank = sub.rank();
    for (Gen g : kGens) {
        IntMatrix a(sub.rank(), sub.rank());
        for (std::size_t j = 0; j < sub.rank(); ++j) {
            auto c = sub.coordinates(m[g] * sub.basis_vector(j));
            if (!c) throw NotContained("sublattice is not invariant under " + std::string(gen_name(g)));
            for (std::size_t i = 0; i < sub.rank(); ++i) a(i, j) = (*c)[i];
        }
        r.gen[static_cast<int>(g)] = std::move(a);
    }
    return r;
}

ModuleAction homology_action(const EquivariantComplex& c, const HomologyBasis& h) {
    ModuleAction r;
    r.rank = h.rank;
    for (Gen g : kGens) {
        IntMatrix a(h.rank, h.rank);
        for (std::size_t j = 0; j < h.rank; ++j) {
            IntVector cls = h.class_of(c.act(g, 1, h.representatives[j]));
            for (std::size_t i = 0; i < h.rank; ++i) a(i, j) = cls[i];
        }
        r.gen[static_cast<int>(g)] = std::move(a);
    }
    return r;
}

bool is_equivariant(const ModuleAction& m, const IntMatrix& phi) {
    if (phi.rows() != m.rank || phi.cols() != 6) throw std::invalid_argument("map has the wrong shape");
    const EoLattice& lat = EoLattice::instance();
    for (Gen g : kGens)
        if (!(m[g] * phi == phi * lat.generator(g))) return false;
    return true;
}

IntMatrix precompose_x(const IntMatrix& phi) { return phi * EoLattice::instance().x_matrix(); }

IntMatrix equivariant_map(const ModuleAction& m, const IntVector& image_of_e) {
    if (image_of_e.size() != m.rank) throw std::invalid_argument("image has the wrong length");
    const EoLattice& lat = EoLattice::instance();
    IntMatrix phi(m.rank, 6);
    for (int i = 0; i < 6; ++i) {
        IntVector v = image_of_e;
        const auto& word = lat.transporter(i).word;
        for (auto it = word.rbegin(); it != word.rend(); ++it) v = m[*it] * v;
        for (std::size_t r = 0; r < m.rank; ++r) phi(r, i) = v[r];
    }
    if (!is_equivariant(m, phi)) throw NotEquivariant("chain does not define an equivariant map");
    return phi;
}

std::optional<IntVector> HomLattice::coordinates(const IntMatrix& phi) const { return express(phi, basis); }

IntMatrix HomLattice::combine(const IntVector& coords) const {
    IntMatrix r(target.rank, 6);
    for (std::size_t k = 0; k < basis.size(); ++k) r = r + coords[k] * basis[k];
    return r;
}

HomLattice hom_lattice(const ModuleAction& target) {
    const EoLattice& lat = EoLattice::instance();
    const std::size_t n = target.rank;
    IntMatrix eq(2 * 6 * n, 6 * n);
    std::size_t row = 0;
    for (Gen g : {Gen::s2, Gen::s5}) commutation_rows(eq, row, target[g], lat.generator(g));
    return finish(target, kernel_basis(eq));
}

HomLattice hom_lattice_by_intersection(const ModuleAction& target) {
    const EoLattice& lat = EoLattice::instance();
    const std::size_t n = target.rank;
    std::optional<Sublattice> acc;
    for (Gen g : kGens) {
        IntMatrix eq(6 * n, 6 * n);
        std::size_t row = 0;
        commutation_rows(eq, row, target[g], lat.generator(g));
        Sublattice k = kernel_basis(eq);
        acc = acc ? intersect(*acc, k) : k;
    }
    return finish(target, *acc);
}

std::optional<IntVector> express(const IntMatrix& phi, const std::vector<IntMatrix>& gens) {
    IntVector b = flatten(phi);
    IntMatrix a(b.size(), gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].rows() != phi.rows() || gens[k].cols() != phi.cols())
            throw std::invalid_argument("maps have different shapes");
        IntVector f = flatten(gens[k]);
        for (std::size_t i = 0; i < f.size(); ++i) a(i, k) = f[i];
    }
    return solve_integer(a, b);
}

IntMatrix to_sublattice(const Sublattice& sub, const IntMatrix& phi) {
    IntMatrix r(sub.rank(), phi.cols());
    for (std::size_t j = 0; j < phi.cols(); ++j) {
        auto c = sub.coordinates(phi.col(j));
        if (!c) throw NotContained("map leaves the sublattice");
        for (std::size_t i = 0; i < sub.rank(); ++i) r(i, j) = (*c)[i];
    }
    return r;
}

IntMatrix to_homology(const HomologyBasis& h, const IntMatrix& phi) {
    IntMatrix r(h.rank, phi.cols());
    for (std::size_t j = 0; j < phi.cols(); ++j) {
        IntVector c = h.class_of(phi.col(j));
        for (std::size_t i = 0; i < h.rank; ++i) r(i, j) = c[i];
    }
    return r;
}

NamedMaps named_maps(const SurfaceModel& s, int basepoint_sign) {
    NamedCycles alt;
    const NamedCycles* n = &s.named;
    if (basepoint_sign != 1) {
        alt = named_cycles(s.complex, basepoint_sign);
        n = &alt;
    }
    NamedMaps out;
    out.model = s.complex.model;
    const ModuleAction c1 = chain_action(s.complex, 1), c2 = chain_action(s.complex, 2);
    for (const auto& [name, chain] : n->chains) {
        out.maps[name] = equivariant_map(chain.dim == 1 ? c1 : c2, chain.coeffs);
        out.dim[name] = chain.dim;
    }
    return out;
}

SubmoduleLattices cycle_summands(const EquivariantComplex& c, const HomologyBasis& h) {
    std::vector<IntVector> trc, edge;
    for (std::size_t i = 0; i < c.n1; ++i) {
        IntVector u(c.n1);
        u[i] = 1;
        (c.cells1[i].kind == CellKind::edge ? edge : trc).push_back(u);
    }
    return {intersect(h.cycles, Sublattice(c.n1, trc)), intersect(h.cycles, Sublattice(c.n1, edge))};
}

StructureReport structure_report(Model m) {
    const SurfaceModel& s = surface_model(m);
    const EquivariantComplex& c = s.complex;
    const HomologyBasis& h = s.homology;
    const bool sig = m == Model::sigma;
    const std::string anchor = sig ? "SigC2B1ZeZtgen" : "Zbodpgmgen";
    const std::string z1anchor = sig ? "OostrZ1" : "Z1Pigen";
    const std::string top = sig ? "sigma" : "pi";
    StructureReport rep;
    rep.model = m;
    NamedMaps nm = named_maps(s);
    auto& maps = nm.maps;

    const ModuleAction c1 = chain_action(c, 1);
    const SubmoduleLattices sum = cycle_summands(c, h);
    struct Target {
        std::string name;
        Sublattice sub;  // inside C_1, unused for C2 and H1
        ModuleAction action;
    };
    std::vector<Target> targets = {
        {"C2", {}, chain_action(c, 2)},
        {"B1", h.boundaries, restrict_action(c1, h.boundaries)},
        {"Z_trc", sum.z_trc, restrict_action(c1, sum.z_trc)},
        {"Z_edge", sum.z_edge, restrict_action(c1, sum.z_edge)},
        {"Z1", h.cycles, restrict_action(c1, h.cycles)},
        {"H1", {}, homology_action(c, h)},
    };
    std::map<std::string, HomLattice> hom;
    rep.two_methods_agree = true;
    for (const auto& t : targets) {
        HomLattice a = hom_lattice(t.action);
        HomLattice b = hom_lattice_by_intersection(t.action);
        std::vector<IntVector> fa, fb;
        for (const auto& x : a.basis) fa.push_back(flatten(x));
        for (const auto& x : b.basis) fb.push_back(flatten(x));
        if (!(Sublattice(6 * t.action.rank, fa) == Sublattice(6 * t.action.rank, fb))) rep.two_methods_agree = false;
        IntMatrix x2 = a.x_action * a.x_action;
        rep.checks.push_back(make_check(anchor + ".xaction-squared." + t.name, "5*Id",
                                        x2 == Integer(5) * IntMatrix::identity(a.rank()) ? "5*Id" : to_string(x2)));
        rep.ranks[t.name] = a.rank();
        hom.emplace(t.name, std::move(a));
    }
    for (const char* t : {"C2", "B1", "Z_trc", "Z_edge"})
        rep.checks.push_back(make_check(anchor + ".rank." + t, "2", std::to_string(rep.ranks[t])));
    rep.checks.push_back(make_check(z1anchor + ".rank.Z1", "6", std::to_string(rep.ranks["Z1"])));
    rep.checks.push_back(make_check(z1anchor + ".rank.H1", "4", std::to_string(rep.ranks["H1"])));
    rep.checks.push_back(make_check(anchor + ".two-methods", "equal", rep.two_methods_agree ? "equal" : "different"));

    auto in_target = [&](const std::string& t, const IntMatrix& phi) -> std::optional<IntVector> {
        const Target* tg = nullptr;
        for (const auto& x : targets)
            if (x.name == t) tg = &x;
        IntMatrix local = (t == "C2" || t == "H1") ? phi : to_sublattice(tg->sub, phi);
        return hom.at(t).coordinates(local);
    };

    // each named pair generates its Hom lattice
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"C2", "cel"}, {"B1", "bound"}, {"Z_trc", "trc"}, {"Z_edge", "edge"}};
    for (const auto& [t, base] : pairs) {
        std::vector<IntVector> coords;
        for (const std::string& nme : {base, base + "'"}) {
            auto co = in_target(t, maps.at(nme));
            if (co) coords.push_back(*co);
        }
        bool ok = coords.size() == 2 && Sublattice(hom.at(t).rank(), coords) == Sublattice::full(hom.at(t).rank());
        rep.checks.push_back(make_check(anchor + ".generated." + t, base + ", " + base + "'",
                                        ok ? base + ", " + base + "'" : "index > 1"));
    }

    // X-action equations
    struct XEq {
        std::string label, a;
        std::array<long, 4> expect;  // X a = e0 a + e1 a', X a' = e2 a + e3 a'
    };
    const std::vector<XEq> xeqs =
        sig ? std::vector<XEq>{{"Xsigcel", "cel", {0, 1, 5, 0}},
                               {"Xsigbound", "bound", {-1, 2, 2, 1}},
                               {"Xsigtrc", "trc", {2, 1, 1, -2}},
                               {"Xsigedge", "edge", {1, 2, 2, -1}}}
            : std::vector<XEq>{{"Xpicel", "cel", {0, 1, 5, 0}},
                               {"Xpibound", "bound", {1, 2, 2, -1}},
                               {"Xpitrc", "trc", {0, 1, 5, 0}},
                               {"Xpiedge", "edge", {-1, 2, 2, 1}}};
    for (const auto& x : xeqs) {
        const IntMatrix& a = maps.at(x.a);
        const IntMatrix& ap = maps.at(x.a + "'");
        auto ca = express(precompose_x(a), {a, ap});
        auto cap = express(precompose_x(ap), {a, ap});
        std::string expected = "X*a=" + to_string(IntVector{x.expect[0], x.expect[1]}) +
                               " X*a'=" + to_string(IntVector{x.expect[2], x.expect[3]});
        std::string actual = "X*a=" + coeff_pair(ca) + " X*a'=" + coeff_pair(cap);
        rep.checks.push_back(make_check(x.label, expected, actual));
    }

    // index of d2_* Hom(E_o, C2) inside Hom(E_o, B1)
    std::vector<IntVector> img;
    for (const IntMatrix& psi : hom.at("C2").basis) {
        auto co = in_target("B1", c.boundary2 * psi);
        if (!co) throw std::logic_error("boundary of an equivariant 2-chain map is not in B1");
        img.push_back(*co);
    }
    Sublattice image(hom.at("B1").rank(), img);
    rep.boundary_image_quotient = lattice_quotient(image, Sublattice::full(hom.at("B1").rank()));
    std::string q;
    for (const auto& f : rep.boundary_image_quotient) q += (q.empty() ? "" : ",") + f.get_str();
    rep.checks.push_back(make_check(anchor + ".index-of-boundary-image", "2", q.empty() ? "1" : q));
    auto bp = in_target("B1", maps.at("bound'"));
    rep.bound_prime_outside_image = bp && !image.contains(*bp);
    rep.checks.push_back(make_check(sig ? "nontrirep" : "Zbodpgmgen.bound'-not-from-C2", "outside image",
                                    rep.bound_prime_outside_image ? "outside image" : "inside image"));

    // divisibility by two: the named half-sums exist, and their doubles are even in homology mod boundaries
    {
        IntVector twice = maps.at("bound'").col(0) + maps.at("edge'").col(0);
        twice = sig ? twice + maps.at("trc").col(0) + maps.at("trc'").col(0)
                    : twice + maps.at("trc").col(0) - maps.at("trc'").col(0);
        bool even = true;
        for (const auto& x : twice) even = even && mpz_even_p(x.get_mpz_t());
        rep.checks.push_back(make_check(z1anchor + ".divisible-by-two", "even", even ? "even" : "odd"));
        IntVector cls = h.class_of(twice - maps.at("bound'").col(0));
        bool even_cls = true;
        for (const auto& x : cls) even_cls = even_cls && mpz_even_p(x.get_mpz_t());
        rep.checks.push_back(make_check(z1anchor + ".boundary-mod-two", "even class", even_cls ? "even class" : "odd class"));
    }

    // Hom(E_o, Z1) generated by the six named maps; p_* kernel is Hom(E_o, B1); p_* onto Hom(E_o, H1)
    const std::vector<std::string> six = {"bound", "bound'", "trc", "trc'", "edge", top};
    std::vector<IntVector> z1coords;
    for (const auto& nme : six) {
        auto co = in_target("Z1", maps.at(nme));
        if (!co) throw std::logic_error(nme + " is not a map into Z1");
        z1coords.push_back(*co);
    }
    try {
        rep.z1_generated = certify_generation(IntMatrix::identity(hom.at("Z1").rank()), z1coords);
    } catch (const RankDeficient&) {
        rep.z1_generated = false;
    }
    rep.checks.push_back(make_check(z1anchor + ".Z1-generated", "true", rep.z1_generated ? "true" : "false"));

    const HomLattice& hz = hom.at("Z1");
    const HomLattice& hh = hom.at("H1");
    IntMatrix pstar(hh.rank(), hz.rank());
    for (std::size_t k = 0; k < hz.rank(); ++k) {
        IntMatrix amb = h.cycles.basis().transpose() * hz.basis[k];
        auto co = hh.coordinates(to_homology(h, amb));
        if (!co) throw std::logic_error("p_* leaves Hom(E_o, H1)");
        for (std::size_t i = 0; i < hh.rank(); ++i) pstar(i, k) = (*co)[i];
    }
    std::vector<IntVector> b1_in_z1;
    for (const IntMatrix& b : hom.at("B1").basis) {
        IntMatrix amb = h.boundaries.basis().transpose() * b;
        b1_in_z1.push_back(*in_target("Z1", amb));
    }
    bool injective = kernel_basis(pstar) == Sublattice(hz.rank(), b1_in_z1);
    rep.checks.push_back(make_check(z1anchor + ".kernel-of-p", "Hom(E_o,B1)", injective ? "Hom(E_o,B1)" : "different"));
    bool onto = image_lattice(pstar) == Sublattice::full(hh.rank());
    rep.checks.push_back(make_check(z1anchor + ".cokernel-of-p", "trivial", onto ? "trivial" : "nontrivial"));
    return rep;
}

Integer symplectic_form(const HomologyBasis& h, const IntMatrix& phi, const IntMatrix& psi) {
    Integer s = 0;
    for (std::size_t i = 0; i < 6; ++i) s += h.pairing(phi.col(i), psi.col(i));
    return s;
}

HomologyGenerators homology_generators(Model m, int basepoint_sign) {
    const SurfaceModel& s = surface_model(m);
    const HomologyBasis& h = s.homology;
    NamedMaps nm = named_maps(s, basepoint_sign);
    HomologyGenerators g;
    g.model = m;
    for (const auto& [name, phi] : nm.maps)
        if (nm.dim[name] == 1) g.images[name] = to_homology(h, phi);
    g.u = g.images.at("trc");
    g.v = g.images.at(m == Model::sigma ? "sigma" : "pi");
    g.zbasis = {g.u, precompose_x(g.u), g.v, precompose_x(g.v)};
    g.form_gram = IntMatrix(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g.form_gram(i, j) = symplectic_form(h, g.zbasis[i], g.zbasis[j]);

    HomLattice hh = hom_lattice(homology_action(s.complex, h));
    std::vector<IntVector> coords;
    for (const auto& z : g.zbasis) {
        auto co = hh.coordinates(z);
        if (!co) throw std::logic_error("generator outside Hom(E_o, H1)");
        coords.push_back(*co);
    }
    try {
        g.generates = certify_generation(IntMatrix::identity(hh.rank()), coords);
        // the same statement against the form on Hom(E_o, H1), scaled to be unimodular
        IntMatrix f(hh.rank(), hh.rank());
        Integer d = 0;
        for (std::size_t i = 0; i < hh.rank(); ++i)
            for (std::size_t j = 0; j < hh.rank(); ++j) {
                f(i, j) = symplectic_form(h, hh.basis[i], hh.basis[j]);
                mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), f(i, j).get_mpz_t());
            }
        if (sgn(d) != 0) {
            for (std::size_t i = 0; i < hh.rank(); ++i)
                for (std::size_t j = 0; j < hh.rank(); ++j) mpz_divexact(f(i, j).get_mpz_t(), f(i, j).get_mpz_t(), d.get_mpz_t());
            g.generates_by_pairing = certify_generation(f, coords);
        }
    } catch (const RankDeficient&) {
        g.generates = g.generates_by_pairing = false;
    } catch (const std::invalid_argument&) {
        g.generates_by_pairing = false;
    }
    return g;
}

std::optional<std::array<OoElem, 2>> HomologyGenerators::express(const IntMatrix& phi) const {
    auto c = winger::express(phi, {zbasis.begin(), zbasis.end()});
    if (!c) return std::nullopt;
    return std::array<OoElem, 2>{OoElem((*c)[0], (*c)[1]), OoElem((*c)[2], (*c)[3])};
}

IntMatrix HomologyGenerators::from_oo(const OoElem& a, const OoElem& b) const {
    return a.a() * zbasis[0] + a.b() * zbasis[1] + b.a() * zbasis[2] + b.b() * zbasis[3];
}

IntMatrix oo_matrix_on_zbasis(const OoMatrix& t) {
    IntMatrix m(4, 4);
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj) {
            const OoElem& x = t(bi, bj);
            m(2 * bi, 2 * bj) = x.a();
            m(2 * bi, 2 * bj + 1) = 5 * x.b();
            m(2 * bi + 1, 2 * bj) = x.b();
            m(2 * bi + 1, 2 * bj + 1) = x.a();
        }
    return m;
}

bool preserves_form(const IntMatrix& form_gram, const OoMatrix& t) {
    IntMatrix m = oo_matrix_on_zbasis(t);
    return m.transpose() * form_gram * m == form_gram;
}

}  // namespace winger
