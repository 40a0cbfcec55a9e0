// One PASS/FAIL line per acceptance criterion, each with its runtime limit.
#include "winger/monodromy.hpp"
#include "winger/verify.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace winger;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    std::vector<std::string> failures;
    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void require_all(const std::vector<Check>& checks, const std::function<bool(const std::string&)>& select) {
        std::size_t n = 0;
        for (const auto& c : checks) {
            if (!select(c.name)) continue;
            ++n;
            if (!c.pass) failures.push_back(c.name + ": expected " + c.expected + ", got " + c.actual);
        }
        if (n == 0) failures.push_back("no checks selected");
    }
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

Integer trace(const IntMatrix& m) {
    Integer t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

void criterion1(Outcome& o) {
    const auto& lat = EoLattice::instance();
    std::set<std::vector<long>> seen;
    std::vector<IntMatrix> todo = {IntMatrix::identity(6)};
    auto key = [](const IntMatrix& m) {
        std::vector<long> k;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) k.push_back(m(i, j).get_si());
        return k;
    };
    seen.insert(key(todo[0]));
    std::vector<IntMatrix> all = todo;
    while (!todo.empty()) {
        IntMatrix m = todo.back();
        todo.pop_back();
        for (Gen g : kGens) {
            IntMatrix n = lat.generator(g) * m;
            if (seen.insert(key(n)).second) {
                todo.push_back(n);
                all.push_back(n);
            }
        }
    }
    o.require(all.size() == 60, "group order " + std::to_string(all.size()));
    const IntMatrix& x = lat.x_matrix();
    o.require(x * x == Integer(5) * IntMatrix::identity(6), "X^2 != 5 Id");
    bool commutes = true;
    Integer chi2 = 0;
    for (const auto& m : all) {
        commutes = commutes && m * x == x * m;
        chi2 += trace(m) * trace(m);
    }
    o.require(commutes, "X does not commute with the group");
    auto er = verify_endo_ring();
    o.require(er.commutant.rank() == 2 && chi2 == 120, "commutant rank " + std::to_string(er.commutant.rank()));
    if (!er.aut_is_pm_id) {
        std::string us;
        for (auto [a, b] : er.units) us += (us.empty() ? "" : ", ") + to_string(OoElem(b, a));
        o.require(false, "Aut contains units other than +-Id: {" + us + "}");
    }
    auto orb = orbit(EoVector::basis(0));
    bool closed = true;
    for (const auto& v : orb) closed = closed && std::find(orb.begin(), orb.end(), -v) != orb.end();
    o.require(orb.size() == 12 && closed, "orbit of e");
}

void criterion2(Outcome& o) {
    for (Model m : {Model::sigma, Model::pi}) {
        const auto& s = surface_model(m);
        const auto& c = s.complex;
        std::string p = model_name(m);
        o.require((c.boundary1 * c.boundary2).is_zero(), p + ": d1 d2 != 0");
        o.require(c.euler_characteristic() == -18, p + ": euler characteristic");
        o.require(s.homology.rank == 20 && s.homology.h1_torsion.empty(), p + ": H1 not free of rank 20");
        for (Gen g : kGens) {
            int gi = static_cast<int>(g);
            o.require(c.boundary1 * c.action[gi][1].matrix() == c.action[gi][0].matrix() * c.boundary1, p + ": d1 not equivariant");
            o.require(c.boundary2 * c.action[gi][2].matrix() == c.action[gi][1].matrix() * c.boundary2, p + ": d2 not equivariant");
        }
        o.require(c.boundary1 * c.iota[1].matrix() == c.iota[0].matrix() * c.boundary1, p + ": d1 not iota-equivariant");
        o.require(c.boundary2 * c.iota[2].matrix() == c.iota[1].matrix() * c.boundary2, p + ": d2 not iota-equivariant");
    }
    o.require_all(surface_checks(), [](const std::string& n) {
        return n == "pi.1-cells.orbits" || n == "pi.1-cells.orbit-types";
    });
}

void criterion3(Outcome& o) {
    std::vector<Check> all;
    for (Model m : {Model::sigma, Model::pi}) {
        auto t = intersection_table_checks(m);
        all.insert(all.end(), t.begin(), t.end());
        const auto& h = surface_model(m).homology;
        o.require(h.gram.transpose() == Integer(-1) * h.gram, std::string(model_name(m)) + ": gram not antisymmetric");
        o.require(determinant(h.gram) == 1, std::string(model_name(m)) + ": gram determinant " + determinant(h.gram).get_str());
    }
    o.require_all(all, [](const std::string&) { return true; });
}

void criterion4(Outcome& o) {
    for (Model m : {Model::sigma, Model::pi}) {
        auto r = structure_report(m);
        for (const char* t : {"C2", "B1", "Z_trc", "Z_edge"})
            o.require(r.ranks.at(t) == 2, std::string(model_name(m)) + ": rank " + t);
        o.require(r.ranks.at("H1") == 4, std::string(model_name(m)) + ": rank H1");
    }
    o.require_all(isotypic_checks(), [](const std::string&) { return true; });
}

void criterion5(Outcome& o) {
    OoElem x = OoElem::gen();
    struct Want {
        Model m;
        VanishingKind k;
        OoMatrix t;
    };
    std::vector<Want> want = {
        {Model::sigma, VanishingKind::truncation, OoMatrix(1, x - 2, 0, 1)},
        {Model::sigma, VanishingKind::edge, OoMatrix(3, x - 1, -(x + 1), -1)},
        {Model::pi, VanishingKind::truncation, OoMatrix(1, x, 0, 1)},
        {Model::pi, VanishingKind::edge, OoMatrix(x - 2, 2 * x - 4, -(x - 1), 4 - x)},
    };
    for (const auto& w : want) {
        OoMatrix t = local_monodromy(w.m, w.k);
        std::string name = std::string(model_name(w.m)) + "." + kind_name(w.k);
        o.require(t == w.t, name + " = " + to_string(t));
        o.require(t.det() == OoElem(1), name + ": det");
        o.require(preserves_form(homology_generators(w.m).form_gram, t), name + ": form not preserved");
    }
    OoMatrix third = third_generator();
    o.require(third == OoMatrix(1, 0, -x, 1), "third generator " + to_string(third));
    OoMatrix r0 = rho_zero();
    o.require(r0.inverse() == OoMatrix(0, 1, -1, -1), "rho0^-1 = " + to_string(r0.inverse()));
    o.require(r0.pow(3) == OoMatrix::identity() && !(r0 == OoMatrix::identity()), "rho0 order");
    o.require_all(monodromy_checks(), [](const std::string& n) {
        return starts_with(n, "Eq:P") || starts_with(n, "rho0") || starts_with(n, "global");
    });
}

void criterion6(Outcome& o) {
    FpGroup g = sl2o_presentation();
    o.require(g.relators.size() == 12, "relator count");
    for (std::size_t i = 0; i < g.relators.size(); ++i)
        o.require(word_to_matrix(g.relators[i]) == OMatrix::identity(), "relator " + g.relator_names[i]);
    auto words = monodromy_words();
    auto glob = global_generators();
    for (std::size_t k = 0; k < 3; ++k)
        o.require(word_to_matrix(words[k]) == embed_oo(glob[k]), "word " + to_string(g, words[k]));
}

void criterion7(Outcome& o) {
    FpGroup g = sl2o_presentation();
    auto words = monodromy_words();
    CosetTable t = todd_coxeter(g, words);
    o.require(t.index() == 20, "index " + std::to_string(t.index()));
    o.require(t.valid(g, words), "coset table invalid");
    auto fr = index_oo_in_o();
    o.require(fr.sl2_f4 == 60 && fr.sl2_f2 == 6 && fr.index == 10, "finite index chain");
    for (const auto& w : words) {
        F4Matrix m = reduce_mod2(word_to_matrix(w));
        o.require(m(0, 0).in_f2() && m(0, 1).in_f2() && m(1, 0).in_f2() && m(1, 1).in_f2(),
                  "mod-2 image of " + to_string(g, w) + " outside SL2(F2)");
    }
    try {
        auto chain = certify_index_two(t.index(), fr.index, words);
        o.require(chain.in_sl2oo == 2, "[SL2(Oo):G] = " + std::to_string(chain.in_sl2oo));
    } catch (const InconsistentChain& e) {
        o.require(false, e.what());
    }
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(WINGER_CLI) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

void criterion8(Outcome& o) {
    fs::path dir = fs::path(WINGER_TEST_DIR) / "acceptance_runs";
    fs::create_directories(dir);
    fs::path a = dir / "run1.json", b = dir / "run2.json";
    int ca = run_cli("--report " + a.string());
    int cb = run_cli("--report " + b.string());
    o.require(ca == cb, "exit codes differ");
    o.require(fs::exists(a) && fs::exists(b), "report missing");
    o.require(slurp(a) == slurp(b), "reports differ");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double limit_ms;
        void (*body)(Outcome&);
    };
    const std::vector<Criterion> criteria = {
        {1, "E_o structure", 1000, criterion1},
        {2, "surface models", 5000, criterion2},
        {3, "intersection tables", 10000, criterion3},
        {4, "hom-lattices", 10000, criterion4},
        {5, "monodromy matrices", 5000, criterion5},
        {6, "presentation sanity", 1000, criterion6},
        {7, "index chain", 60000, criterion7},
        {8, "determinism, two full runs", 120000, criterion8},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (ms >= c.limit_ms) {
            std::ostringstream s;
            s << "runtime " << ms << " ms over the limit";
            o.failures.push_back(s.str());
        }
        bool pass = o.failures.empty();
        failed += !pass;
        std::printf("criterion %d %-28s %s  %9.1f ms (limit %.0f ms)\n", c.id, c.title, pass ? "PASS" : "FAIL", ms,
                    c.limit_ms);
        for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
