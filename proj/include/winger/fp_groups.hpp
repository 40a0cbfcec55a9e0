#pragma once

#include "winger/check.hpp"
#include "winger/quad.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace winger {

struct Letter {
    int gen = 0;
    int exp = 1;  // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);
    static Word generator(int g, long power = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Word inverse() const;
    Word pow(long k) const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) = default;

private:
    std::vector<Letter> letters_;
};

Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1

struct FpGroup {
    std::vector<std::string> generator_names;
    std::vector<Word> relators;
    std::vector<std::string> relator_names;
    int generator_count() const { return static_cast<int>(generator_names.size()); }
};

// Parses e.g. "A0 A1^2 (A2 A4^-1)^-1 [A0, A1]" over the group's generator names.
Word parse_word(const FpGroup& g, std::string_view text);
std::string to_string(const FpGroup& g, const Word& w);

FpGroup sl2o_presentation();
OMatrix generator_matrix(int g);  // A0..A4 over O
OMatrix word_to_matrix(const Word& w);

// The three monodromy generators as words in A0..A4.
std::vector<Word> monodromy_words();

struct Overflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CosetTable {
    int generator_count = 0;
    // rows[c][2g] = c * g, rows[c][2g+1] = c * g^-1, cosets numbered from 0 (coset of H is 0)
    std::vector<std::vector<int>> rows;
    std::size_t max_live = 0;  // peak number of live cosets during enumeration

    std::size_t index() const { return rows.size(); }
    int act(int coset, const Word& w) const;
    bool valid(const FpGroup& g, const std::vector<Word>& subgroup) const;
    std::string dump(const FpGroup& g) const;
};

inline constexpr std::size_t kDefaultCosetLimit = 1000000;

// HLT enumeration with lookahead; throws Overflow if more than `limit` live cosets are needed.
CosetTable todd_coxeter(const FpGroup& g, const std::vector<Word>& subgroup, std::size_t limit = kDefaultCosetLimit);

struct FiniteIndexReport {
    std::size_t sl2_f4 = 0, sl2_f2 = 0, index = 0;
    bool cosets_partition = false;   // left cosets of SL2(F2) are disjoint and cover SL2(F4)
    bool reduction_onto = false;     // images of A1..A4 mod 2 generate SL2(F4)
};
FiniteIndexReport index_oo_in_o();

struct InconsistentChain : std::logic_error {
    using std::logic_error::logic_error;
};

struct IndexChain {
    std::size_t in_sl2o = 0;     // [SL2(O) : Gamma]
    std::size_t oo_in_o = 0;     // [SL2(O) : SL2(O_o)]
    std::size_t in_sl2oo = 0;    // [SL2(O_o) : Gamma]
    std::vector<F4Matrix> generators_mod2;
};
// Throws InconsistentChain unless every word reduces into SL2(F2) and oo_in_o divides in_sl2o.
IndexChain certify_index_two(std::size_t in_sl2o, std::size_t oo_in_o, const std::vector<Word>& words);

}  // namespace winger
