#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "winger/rep_a5.hpp"

#include <algorithm>
#include <set>

using namespace winger;

namespace {

std::set<Perm> perm_closure() {
    std::set<Perm> seen = {Perm()};
    std::vector<Perm> todo = {Perm()};
    while (!todo.empty()) {
        Perm p = todo.back();
        todo.pop_back();
        for (Gen g : kGens) {
            Perm q = gen_perm(g) * p;
            if (seen.insert(q).second) todo.push_back(q);
        }
    }
    return seen;
}

Integer trace(const IntMatrix& m) {
    Integer t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace

TEST_CASE("permutations") {
    Perm p = Perm::from_cycles("(1,2,3)");
    CHECK(p(1) == 2);
    CHECK(p(3) == 1);
    CHECK(p * p * p == Perm());
    CHECK(p.inverse() == p * p);
    Perm q = Perm::from_cycles("(1,2)(3,4)");
    // right to left: (p*q)(1) = p(q(1)) = p(2) = 3
    CHECK((p * q)(1) == 3);
    CHECK(q.is_even());
    CHECK(!Perm::from_cycles("(1,2)").is_even());
    CHECK(Perm::from_cycles("(1,2,3,4,5)").to_string() == "(1,2,3,4,5)");
}

TEST_CASE("generators produce A5") {
    auto all = perm_closure();
    CHECK(all.size() == 60);
    for (const auto& p : all) CHECK(p.is_even());
    const auto& lat = EoLattice::instance();
    CHECK(lat.group().size() == 60);
    std::set<Perm> table;
    for (const auto& g : lat.group()) table.insert(g.perm);
    CHECK(table == all);
}

TEST_CASE("the matrices form a representation") {
    const auto& lat = EoLattice::instance();
    for (const auto& g : lat.group()) {
        // the recorded word reproduces the element
        Perm w;
        IntMatrix m = IntMatrix::identity(6);
        for (Gen x : g.word) {
            w = w * gen_perm(x);
            m = m * lat.generator(x);
        }
        CHECK(w == g.perm);
        CHECK(m == g.matrix);
    }
    for (const auto& g : lat.group())
        for (const auto& h : lat.group()) CHECK(lat.element(g.perm * h.perm).matrix == g.matrix * h.matrix);
}

TEST_CASE("action on basis vectors") {
    const auto& lat = EoLattice::instance();
    CHECK(lat.act(gen_perm(Gen::s5), EoVector::basis(0)) == EoVector::basis(0));
    CHECK(lat.act(gen_perm(Gen::s2), EoVector::basis(3)) == EoVector::basis(3, -1));
    CHECK(lat.act(Perm::from_cycles("(2,5)(3,4)"), EoVector::basis(0)) == EoVector::basis(0, -1));
    for (int i = 0; i < 6; ++i) CHECK(lat.act(lat.transporter(i).perm, EoVector::basis(0)) == EoVector::basis(i));
}

TEST_CASE("the form is invariant and the orbit of e is the signed basis") {
    const auto& lat = EoLattice::instance();
    CHECK(lat.gram() == IntMatrix::identity(6));
    for (const auto& g : lat.group()) CHECK(g.matrix.transpose() * g.matrix == IntMatrix::identity(6));
    auto orb = orbit(EoVector::basis(0));
    std::set<std::vector<long>> got, want;
    for (const auto& v : orb) {
        std::vector<long> f;
        for (const auto& x : v.c) f.push_back(x.get_si());
        got.insert(f);
    }
    for (int i = 0; i < 6; ++i)
        for (int s : {1, -1}) {
            std::vector<long> f(6, 0);
            f[i] = s;
            want.insert(f);
        }
    CHECK(got == want);
    CHECK(lat.inner(EoVector::basis(2), EoVector::basis(2)) == 1);
    CHECK(lat.inner(EoVector::basis(2), EoVector::basis(4)) == 0);
}

TEST_CASE("the endomorphism X") {
    const auto& lat = EoLattice::instance();
    const IntMatrix& x = lat.x_matrix();
    CHECK(x * x == Integer(5) * IntMatrix::identity(6));
    CHECK(x.transpose() == x);
    CHECK(trace(x) == 0);
    for (const auto& g : lat.group()) CHECK(g.matrix * x == x * g.matrix);
    EoVector x3 = lat.apply_x(lat.apply_x(EoVector::basis(4)));
    CHECK(x3 == EoVector{{0, 0, 0, 0, 5, 0}});
    EoVector xe = lat.apply_x(EoVector::basis(0));
    CHECK(xe == EoVector{{0, 1, 1, 1, 1, 1}});
}

TEST_CASE("commutant rank agrees with the character norm") {
    const auto& lat = EoLattice::instance();
    Integer sum = 0;
    for (const auto& g : lat.group()) sum += trace(g.matrix) * trace(g.matrix);
    CHECK(sum % 60 == 0);
    auto er = verify_endo_ring();
    CHECK(er.commutant.rank() == Integer(sum / 60).get_ui());
    CHECK(er.commutant.rank() == 2);
    CHECK(er.commutant_is_span_id_x);
    CHECK(er.s3_commutes);
}

TEST_CASE("units of Z[X] acting on the lattice") {
    // aX + b has eigenvalues b +- a sqrt5, three times each; invertible over Z iff b^2 - 5a^2 = +-1
    auto er = verify_endo_ring(10);
    std::set<std::pair<long, long>> want, want_iso;
    for (long a = -10; a <= 10; ++a)
        for (long b = -10; b <= 10; ++b) {
            long n = b * b - 5 * a * a;
            if (n == 1 || n == -1) want.insert({a, b});
            // isometry: (aX + b)^2 = Id, i.e. 2ab = 0 and 5a^2 + b^2 = 1
            if (a * b == 0 && 5 * a * a + b * b == 1) want_iso.insert({a, b});
        }
    CHECK(std::set<std::pair<long, long>>(er.units.begin(), er.units.end()) == want);
    CHECK(want.size() == 10);
    CHECK(std::set<std::pair<long, long>>(er.isometric_units.begin(), er.isometric_units.end()) == want_iso);
    CHECK(er.isometric_aut_is_pm_id);
    CHECK(!er.aut_is_pm_id);
}

TEST_CASE("even sublattice") {
    CHECK(!in_even_sublattice(EoVector::basis(0)));
    CHECK(in_even_sublattice(EoVector{{1, 1, 0, 0, 0, 0}}));
    CHECK(in_even_sublattice(EoVector{{2, 0, 0, 0, 0, 0}}));
    CHECK(!in_even_sublattice(EoVector{{1, 1, 1, 0, 0, 0}}));
    CHECK(to_vector(from_vector(IntVector{1, 2, 3, 4, 5, 6})) == IntVector{1, 2, 3, 4, 5, 6});
}
