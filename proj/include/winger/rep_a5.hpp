#pragma once

#include "winger/lattice.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace winger {

// Permutation of {1..5}; (p * q)(i) = p(q(i)).
class Perm {
public:
    Perm();
    explicit Perm(const std::array<int, 5>& one_based_images);
    static Perm from_cycles(std::string_view cycles);

    int operator()(int i) const { return img_[i - 1] + 1; }
    Perm inverse() const;
    bool is_even() const;
    std::string to_string() const;

    friend Perm operator*(const Perm& p, const Perm& q);
    friend bool operator==(const Perm& a, const Perm& b) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) = default;

private:
    std::array<std::uint8_t, 5> img_;
};

struct OddPermutation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Gen { s2 = 0, s3 = 1, s5 = 2 };
constexpr std::array<Gen, 3> kGens = {Gen::s2, Gen::s3, Gen::s5};
const char* gen_name(Gen g);
Perm gen_perm(Gen g);

// Coordinates in the basis (e, e0, e1, e2, e3, e4).
struct EoVector {
    std::array<Integer, 6> c{};
    static EoVector basis(int i, long sign = 1);
    friend bool operator==(const EoVector&, const EoVector&) = default;
    EoVector operator-() const;
};

struct GroupElement {
    Perm perm;
    std::vector<Gen> word;  // shortest word, leftmost letter applied last
    IntMatrix matrix;       // 6x6, acts on column coordinates
};

class EoLattice {
public:
    static const EoLattice& instance();
    static constexpr std::array<const char*, 6> labels = {"e", "e0", "e1", "e2", "e3", "e4"};

    const IntMatrix& generator(Gen g) const { return gens_[static_cast<int>(g)]; }
    const IntMatrix& x_matrix() const { return x_; }
    const IntMatrix& gram() const { return gram_; }
    const std::vector<GroupElement>& group() const { return group_; }
    const GroupElement& element(const Perm& g) const;

    // an element g with g*e = b_i, for each basis vector b_i
    const GroupElement& transporter(int i) const { return group_[transport_[i]]; }

    EoVector act(const Perm& g, const EoVector& v) const;
    EoVector apply_x(const EoVector& v) const;
    Integer inner(const EoVector& v, const EoVector& w) const;

private:
    EoLattice();
    std::array<IntMatrix, 3> gens_;
    IntMatrix x_, gram_;
    std::vector<GroupElement> group_;
    std::array<std::size_t, 6> transport_{};
};

IntVector to_vector(const EoVector& v);
EoVector from_vector(const IntVector& v);

// the index-2 sublattice E
bool in_even_sublattice(const EoVector& v);

// Orbit of a vector under the 60 matrices.
std::vector<EoVector> orbit(const EoVector& v);

struct EndoRingReport {
    Sublattice commutant;              // flattened 6x6 matrices, row-major
    bool commutant_is_span_id_x = false;
    bool s3_commutes = false;
    long box = 0;
    std::vector<std::pair<long, long>> units;            // (a, b): aX + b invertible over Z
    std::vector<std::pair<long, long>> isometric_units;  // those also preserving s
    bool aut_is_pm_id = false;
    bool isometric_aut_is_pm_id = false;
};

// Units are searched among aX + b with |a|, |b| <= box.
EndoRingReport verify_endo_ring(long box = 10);

}  // namespace winger
