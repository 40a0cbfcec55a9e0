#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace winger {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    IntMatrix transpose() const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a += k * row b
    void add_row(std::size_t a, std::size_t b, const Integer& k);
    void add_col(std::size_t a, std::size_t b, const Integer& k);
    void negate_row(std::size_t a);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& k, const IntMatrix& a);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Integer& k, const IntVector& a);
Integer dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& v);

std::string to_string(const IntMatrix& m);
std::string to_string(const IntVector& v);

struct NotContained : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankDeficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SnfResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;

    std::size_t rank() const;
    // nonzero diagonal entries in order
    std::vector<Integer> invariant_factors() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

Integer determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);

// Row Hermite normal form: t * a == h, zero rows of h removed from `basis`.
struct HermiteResult {
    IntMatrix h;
    IntMatrix t;
    std::vector<std::size_t> pivots;
};
HermiteResult hermite_normal_form(const IntMatrix& a);

IntMatrix inverse_unimodular(const IntMatrix& a);

class Sublattice {
public:
    Sublattice() = default;
    // generators are rows of `gens`
    Sublattice(std::size_t ambient_rank, const IntMatrix& gens);
    Sublattice(std::size_t ambient_rank, const std::vector<IntVector>& gens);

    static Sublattice full(std::size_t n);

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }
    IntVector basis_vector(std::size_t i) const { return basis_.row(i); }

    // coefficients c with v = sum c_i basis_i
    std::optional<IntVector> coordinates(const IntVector& v) const;
    bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
    IntVector combine(const IntVector& coords) const;

    friend bool operator==(const Sublattice& a, const Sublattice& b) = default;

private:
    std::size_t ambient_ = 0;
    IntMatrix basis_;
};

Sublattice kernel_basis(const IntMatrix& a);
Sublattice image_lattice(const IntMatrix& a);  // column span
Sublattice intersect(const Sublattice& a, const Sublattice& b);
Sublattice saturate(const Sublattice& a);

// Invariant factors of sup/sub other than 1; a 0 marks a free summand.
std::vector<Integer> lattice_quotient(const Sublattice& sub, const Sublattice& sup);

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

bool certify_generation(const IntMatrix& pairing, const Sublattice& candidates);
bool certify_generation(const IntMatrix& pairing, const std::vector<IntVector>& candidates);

}  // namespace winger
