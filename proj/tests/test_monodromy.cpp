#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "winger/monodromy.hpp"

#include <random>

using namespace winger;

namespace {

std::string mat(const OoMatrix& m) { return to_string(m); }

}  // namespace

TEST_CASE("Picard-Lefschetz on chains agrees with the class computation") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> d(-2, 2);
    for (Model m : {Model::sigma, Model::pi})
        for (VanishingKind k : {VanishingKind::truncation, VanishingKind::edge}) {
            const auto& s = surface_model(m);
            const auto& c = s.complex;
            auto vs = vanishing_set(m, k);
            CHECK(vs.loops.size() == vs.classes.size());
            for (int trial = 0; trial < 6; ++trial) {
                IntVector z(c.n1);
                for (std::size_t i = 0; i < s.homology.rank; ++i) z = z + Integer(d(rng)) * s.homology.representatives[i];
                IntVector t = z;
                for (const auto& l : vs.loops) t = t + intersection(c, z, l) * l;
                CHECK(is_zero(c.boundary1 * t));
                CHECK(s.homology.class_of(t) == picard_lefschetz(vs, s.homology.class_of(z)));
            }
        }
}

TEST_CASE("local monodromy matrices") {
    for (Model m : {Model::sigma, Model::pi})
        for (VanishingKind k : {VanishingKind::truncation, VanishingKind::edge}) {
            auto g = homology_generators(m);
            auto vs = vanishing_set(m, k);
            OoMatrix t = local_monodromy(m, k);
            // column convention
            CHECK(picard_lefschetz(vs, g.u) == g.from_oo(t(0, 0), t(1, 0)));
            CHECK(picard_lefschetz(vs, g.v) == g.from_oo(t(0, 1), t(1, 1)));
            CHECK(t.is_sl2());
            CHECK(preserves_form(g.form_gram, t));
            // unipotent: (T - 1)^2 = 0
            OoMatrix n = t - OoMatrix::identity();
            CHECK(n * n == OoMatrix(0, 0, 0, 0));
            CHECK(local_monodromy(m, k, -1) == t);
        }
}

TEST_CASE("tabulated values") {
    OoElem x = OoElem::gen();
    CHECK(mat(local_monodromy(Model::sigma, VanishingKind::truncation)) == mat(OoMatrix(1, -2 + x, 0, 1)));
    CHECK(mat(basis_change_p()) == "[[0, 1], [-1, -1]]");
    CHECK(third_generator() == OoMatrix(1, 0, -x, 1));
    OoMatrix prod = local_monodromy(Model::sigma, VanishingKind::truncation) * local_monodromy(Model::sigma, VanishingKind::edge);
    CHECK(rho_zero() * prod * third_generator() == OoMatrix::identity());
    CHECK(rho_zero().pow(3) == OoMatrix::identity());
    CHECK(rho_zero() != OoMatrix::identity());
    auto glob = global_generators();
    CHECK(glob.size() == 3);
    for (const auto& g : glob) CHECK(g.is_sl2());
    auto r = monodromy_report();
    for (const auto& ch : r.checks) {
        CAPTURE(ch.name);
        CHECK(ch.pass);
    }
}
