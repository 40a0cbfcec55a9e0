#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "winger/fp_groups.hpp"

#include <map>
#include <queue>
#include <set>

using namespace winger;

namespace {

FpGroup group(std::vector<std::string> names, const std::vector<std::string>& relators) {
    FpGroup g;
    g.generator_names = std::move(names);
    for (const auto& r : relators) {
        g.relators.push_back(parse_word(g, r));
        g.relator_names.push_back(r);
    }
    return g;
}

std::vector<Word> words(const FpGroup& g, const std::vector<std::string>& texts) {
    std::vector<Word> out;
    for (const auto& t : texts) out.push_back(parse_word(g, t));
    return out;
}

// F4 = F2[w]/(w^2 + w + 1) as 2-bit integers
int f4_mul(int x, int y) {
    int a0 = x & 1, a1 = x >> 1, b0 = y & 1, b1 = y >> 1;
    return ((a0 & b0) ^ (a1 & b1)) | (((a0 & b1) ^ (a1 & b0) ^ (a1 & b1)) << 1);
}
using M4 = std::array<int, 4>;
M4 m4_mul(const M4& x, const M4& y) {
    return {f4_mul(x[0], y[0]) ^ f4_mul(x[1], y[2]), f4_mul(x[0], y[1]) ^ f4_mul(x[1], y[3]),
            f4_mul(x[2], y[0]) ^ f4_mul(x[3], y[2]), f4_mul(x[2], y[1]) ^ f4_mul(x[3], y[3])};
}
M4 to_m4(const OMatrix& m) {
    M4 r;
    for (int i = 0; i < 4; ++i) {
        const OElem& e = m(i / 2, i % 2);
        r[i] = (mpz_odd_p(e.a().get_mpz_t()) ? 1 : 0) | (mpz_odd_p(e.b().get_mpz_t()) ? 2 : 0);
    }
    return r;
}
std::set<M4> closure(const std::vector<M4>& gens) {
    std::set<M4> seen = {M4{1, 0, 0, 1}};
    std::vector<M4> todo = {M4{1, 0, 0, 1}};
    while (!todo.empty()) {
        M4 x = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            M4 y = m4_mul(g, x);
            if (seen.insert(y).second) todo.push_back(y);
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("words") {
    FpGroup g = group({"a", "b"}, {});
    Word a = Word::generator(0), b = Word::generator(1);
    CHECK((a * a.inverse()).empty());
    CHECK(a.pow(3).size() == 3);
    CHECK(a.pow(-2) == a.inverse() * a.inverse());
    CHECK(commutator(a, b) == a * b * a.inverse() * b.inverse());
    CHECK(parse_word(g, "a b b^-1 a^-1").empty());
    CHECK(parse_word(g, "(a b)^2") == a * b * a * b);
    CHECK(parse_word(g, "[a, b]") == commutator(a, b));
    CHECK(parse_word(g, "a*b^-2") == a * b.pow(-2));
    CHECK(to_string(g, parse_word(g, "a b b a^-1")) == "a b^2 a^-1");
    CHECK(to_string(g, Word()) == "1");
    CHECK_THROWS_AS(parse_word(g, "c"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(g, "(a b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(g, "a^"), std::invalid_argument);
    CHECK_THROWS_AS(Word({Letter{0, 2}}), std::invalid_argument);
}

TEST_CASE("coset enumeration on small groups") {
    FpGroup z = group({"a"}, {});
    CHECK(todd_coxeter(z, words(z, {"a^2"})).index() == 2);
    CHECK(todd_coxeter(z, words(z, {"a^6", "a^4"})).index() == 2);

    FpGroup s3 = group({"a", "b"}, {"a^2", "b^3", "(a b)^2"});
    CHECK(todd_coxeter(s3, words(s3, {"b"})).index() == 2);
    CHECK(todd_coxeter(s3, words(s3, {"a"})).index() == 3);
    CHECK(todd_coxeter(s3, {}).index() == 6);
    CHECK(todd_coxeter(s3, words(s3, {"a", "b"})).index() == 1);

    FpGroup a5 = group({"a", "b"}, {"a^2", "b^3", "(a b)^5"});
    auto t = todd_coxeter(a5, {});
    CHECK(t.index() == 60);
    CHECK(t.valid(a5, {}));
    CHECK(todd_coxeter(a5, words(a5, {"b", "a b a b^-1 a"})).index() == 5);

    // binary icosahedral group, order 120
    FpGroup bi = group({"a", "b"}, {"a^2 b^-3", "a^2 (a b)^-5", "a^4"});
    CHECK(todd_coxeter(bi, {}).index() == 120);

    CHECK_THROWS_AS(todd_coxeter(a5, {}, 10), Overflow);
}

TEST_CASE("presentation of SL2(O)") {
    FpGroup g = sl2o_presentation();
    CHECK(g.generator_count() == 5);
    CHECK(g.relators.size() == 12);
    for (int i = 0; i < 5; ++i) CHECK(generator_matrix(i).is_sl2());
    for (const auto& r : g.relators) CHECK(word_to_matrix(r) == OMatrix::identity());
    CHECK(word_to_matrix(parse_word(g, "A1^2")) == -OMatrix::identity());
    CHECK(word_to_matrix(parse_word(g, "A2 A2^-1")) == OMatrix::identity());
}

TEST_CASE("index of the monodromy group") {
    FpGroup g = sl2o_presentation();
    auto ws = monodromy_words();
    REQUIRE(ws.size() == 3);
    CosetTable t = todd_coxeter(g, ws);
    CHECK(t.index() == 20);
    CHECK(t.valid(g, ws));
    for (const auto& w : ws) CHECK(t.act(0, w) == 0);

    // transversal words by breadth-first search
    std::vector<Word> rep(t.index());
    std::vector<bool> seen(t.index());
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        for (int x = 0; x < 2 * g.generator_count(); ++x) {
            int d = t.rows[c][x];
            if (seen[d]) continue;
            seen[d] = true;
            rep[d] = rep[c] * Word::generator(x / 2, x % 2 ? -1 : 1);
            q.push(d);
        }
    }
    for (std::size_t c = 0; c < t.index(); ++c) CHECK(t.act(0, rep[c]) == static_cast<int>(c));

    // compatibility with reduction mod 2: the image of the subgroup is SL2(F2), and the 20 cosets
    // fall into the 10 cosets of SL2(F2) in SL2(F4), two each
    std::vector<M4> gens;
    for (const auto& w : ws) gens.push_back(to_m4(word_to_matrix(w)));
    auto image = closure(gens);
    CHECK(image.size() == 6);
    std::vector<M4> all_gens;
    for (int i = 0; i < 5; ++i) all_gens.push_back(to_m4(generator_matrix(i)));
    CHECK(closure(all_gens).size() == 60);
    std::map<std::set<M4>, int> fibres;
    for (std::size_t c = 0; c < t.index(); ++c) {
        // cosets here are H w; their images are image * w
        M4 w = to_m4(word_to_matrix(rep[c]));
        std::set<M4> cls;
        for (const auto& h : image) cls.insert(m4_mul(h, w));
        ++fibres[cls];
    }
    CHECK(fibres.size() == 10);
    for (const auto& [cls, n] : fibres) CHECK(n == 2);

    // a relabelled presentation gives the same index
    FpGroup h = g;
    std::reverse(h.relators.begin(), h.relators.end());
    for (auto& r : h.relators) r = r.inverse();
    CHECK(todd_coxeter(h, {ws[2], ws[0], ws[1]}).index() == 20);
}

TEST_CASE("coset table dump") {
    FpGroup g = sl2o_presentation();
    CosetTable t = todd_coxeter(g, monodromy_words());
    std::string d = t.dump(g);
    CHECK(std::count(d.begin(), d.end(), '\n') == 22);
    CHECK(d.rfind("# cosets 20\n", 0) == 0);
    CHECK_THROWS_AS(todd_coxeter(g, monodromy_words(), 5), Overflow);
}

TEST_CASE("finite-index chain") {
    auto r = index_oo_in_o();
    CHECK(r.sl2_f4 == 60);
    CHECK(r.sl2_f2 == 6);
    CHECK(r.index == 10);
    CHECK(r.cosets_partition);
    CHECK(r.reduction_onto);
    auto chain = certify_index_two(20, 10, monodromy_words());
    CHECK(chain.in_sl2oo == 2);
    CHECK(chain.generators_mod2.size() == 3);
    CHECK_THROWS_AS(certify_index_two(15, 10, monodromy_words()), InconsistentChain);
    FpGroup g = sl2o_presentation();
    // A3 = diag(Y, Y - 1) reduces outside SL2(F2)
    CHECK_THROWS_AS(certify_index_two(20, 10, {parse_word(g, "A3")}), InconsistentChain);
}
