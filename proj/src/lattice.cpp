#include "winger/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace winger {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::col(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Integer& k) {
    if (sgn(k) == 0) return;
    Integer* ra = &data_[a * cols_];
    const Integer* rb = &data_[b * cols_];
    for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(rb[j]) != 0) mpz_addmul(ra[j].get_mpz_t(), k.get_mpz_t(), rb[j].get_mpz_t());
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Integer& k) {
    if (sgn(k) == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const Integer& x = (*this)(i, b);
        if (sgn(x) != 0) mpz_addmul((*this)(i, a).get_mpz_t(), k.get_mpz_t(), x.get_mpz_t());
    }
}

void IntMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0) mpz_addmul(c(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
        }
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    IntVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(x[k]) != 0 && sgn(a(i, k)) != 0) mpz_addmul(y[i].get_mpz_t(), a(i, k).get_mpz_t(), x[k].get_mpz_t());
    return y;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + Integer(-1) * b; }

IntMatrix operator*(const Integer& k, const IntMatrix& a) {
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k * a(i, j);
    return c;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum length mismatch");
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector difference length mismatch");
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

IntVector operator*(const Integer& k, const IntVector& a) {
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
    return c;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
    os << ']';
    return os.str();
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? ", " : "") << to_string(m.row(i));
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------

std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    while (r < std::min(d.rows(), d.cols()) && sgn(d(r, r)) != 0) ++r;
    return r;
}

std::vector<Integer> SnfResult::invariant_factors() const {
    std::vector<Integer> f;
    for (std::size_t i = 0; i < rank(); ++i) f.push_back(d(i, i));
    return f;
}

SnfResult smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SnfResult r{a, IntMatrix::identity(m), IntMatrix::identity(n)};
    IntMatrix& d = r.d;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero entry in the trailing block
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (sgn(d(i, j)) != 0 && (pi == m || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) return r;
            d.swap_rows(t, pi);
            r.u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            r.v.swap_cols(t, pj);

            bool clean = true;
            Integer q;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(d(i, t)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                q = -q;
                d.add_row(i, t, q);
                r.u.add_row(i, t, q);
                if (sgn(d(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(d(t, j)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                q = -q;
                d.add_col(j, t, q);
                r.v.add_col(j, t, q);
                if (sgn(d(t, j)) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility of the trailing block by the pivot
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            d.add_row(t, bad, 1);
            r.u.add_row(t, bad, 1);
        }
        if (sgn(d(t, t)) < 0) {
            d.negate_row(t);
            r.u.negate_row(t);
        }
    }
    return r;
}

namespace {

// Fraction-free elimination; returns rank and (for square input) the determinant.
std::size_t bareiss(IntMatrix m, Integer* det) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Integer prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            m.swap_rows(p, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m(i, j) = m(i, j) * m(r, c) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    if (det) {
        if (rows != cols) throw std::invalid_argument("determinant of non-square matrix");
        *det = (r == rows) ? Integer(sign * prev) : Integer(0);
        if (rows == 0) *det = 1;
    }
    return r;
}

}  // namespace

Integer determinant(const IntMatrix& a) {
    Integer d;
    bareiss(a, &d);
    return d;
}

std::size_t rank(const IntMatrix& a) { return bareiss(a, nullptr); }

HermiteResult hermite_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    HermiteResult res{a, IntMatrix::identity(m), {}};
    IntMatrix& h = res.h;
    IntMatrix& t = res.t;
    std::size_t r = 0;
    Integer q;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        for (;;) {
            std::size_t p = m;
            for (std::size_t i = r; i < m; ++i)
                if (sgn(h(i, c)) != 0 && (p == m || mpz_cmpabs(h(i, c).get_mpz_t(), h(p, c).get_mpz_t()) < 0)) p = i;
            if (p == m) break;
            h.swap_rows(r, p);
            t.swap_rows(r, p);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (sgn(h(i, c)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                q = -q;
                h.add_row(i, r, q);
                t.add_row(i, r, q);
                if (sgn(h(i, c)) != 0) clean = false;
            }
            if (clean) break;
        }
        if (sgn(h(r, c)) == 0) continue;
        if (sgn(h(r, c)) < 0) {
            h.negate_row(r);
            t.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            q = -q;
            h.add_row(i, r, q);
            t.add_row(i, r, q);
        }
        res.pivots.push_back(c);
        ++r;
    }
    return res;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    HermiteResult hr = hermite_normal_form(a);
    if (!(hr.h == IntMatrix::identity(a.rows()))) throw std::invalid_argument("matrix is not unimodular");
    return hr.t;
}

// ---------------------------------------------------------------------------

Sublattice::Sublattice(std::size_t ambient_rank, const IntMatrix& gens) : ambient_(ambient_rank) {
    if (gens.rows() == 0) {
        basis_ = IntMatrix(0, ambient_rank);
        return;
    }
    if (gens.cols() != ambient_rank) throw std::invalid_argument("generator length mismatch");
    HermiteResult hr = hermite_normal_form(gens);
    basis_ = IntMatrix(hr.pivots.size(), ambient_rank);
    for (std::size_t i = 0; i < hr.pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient_rank; ++j) basis_(i, j) = hr.h(i, j);
}

Sublattice::Sublattice(std::size_t ambient_rank, const std::vector<IntVector>& gens)
    : Sublattice(ambient_rank, IntMatrix::from_rows(gens, ambient_rank)) {}

Sublattice Sublattice::full(std::size_t n) { return Sublattice(n, IntMatrix::identity(n)); }

std::optional<IntVector> Sublattice::coordinates(const IntVector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch");
    IntVector res = v;
    IntVector c(rank());
    std::size_t col = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        while (sgn(basis_(i, col)) == 0) ++col;
        for (std::size_t j = 0; j < col; ++j)
            if (sgn(res[j]) != 0) return std::nullopt;
        if (!mpz_divisible_p(res[col].get_mpz_t(), basis_(i, col).get_mpz_t())) return std::nullopt;
        mpz_divexact(c[i].get_mpz_t(), res[col].get_mpz_t(), basis_(i, col).get_mpz_t());
        for (std::size_t j = col; j < ambient_; ++j) res[j] -= c[i] * basis_(i, j);
    }
    if (!is_zero(res)) return std::nullopt;
    return c;
}

IntVector Sublattice::combine(const IntVector& coords) const {
    if (coords.size() != rank()) throw std::invalid_argument("coordinate length mismatch");
    IntVector v(ambient_);
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) v[j] += coords[i] * basis_(i, j);
    return v;
}

Sublattice kernel_basis(const IntMatrix& a) {
    const std::size_t n = a.cols();
    HermiteResult hr = hermite_normal_form(a.transpose());
    std::vector<IntVector> ker;
    for (std::size_t i = hr.pivots.size(); i < n; ++i) ker.push_back(hr.t.row(i));
    return Sublattice(n, ker);
}

Sublattice image_lattice(const IntMatrix& a) { return Sublattice(a.rows(), a.transpose()); }

Sublattice intersect(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("ambient rank mismatch");
    const std::size_t n = a.ambient_rank(), ra = a.rank(), rb = b.rank();
    IntMatrix m(n, ra + rb);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < ra; ++i) m(j, i) = a.basis()(i, j);
        for (std::size_t i = 0; i < rb; ++i) m(j, ra + i) = -b.basis()(i, j);
    }
    Sublattice k = kernel_basis(m);
    std::vector<IntVector> gens;
    for (std::size_t r = 0; r < k.rank(); ++r) {
        IntVector kv = k.basis_vector(r);
        IntVector alpha(kv.begin(), kv.begin() + ra);
        gens.push_back(a.combine(alpha));
    }
    return Sublattice(n, gens);
}

Sublattice saturate(const Sublattice& a) {
    if (a.rank() == 0) return a;
    Sublattice perp = kernel_basis(a.basis());
    if (perp.rank() == 0) return Sublattice::full(a.ambient_rank());
    return kernel_basis(perp.basis());
}

std::vector<Integer> lattice_quotient(const Sublattice& sub, const Sublattice& sup) {
    if (sub.ambient_rank() != sup.ambient_rank()) throw std::invalid_argument("ambient rank mismatch");
    IntMatrix c(sub.rank(), sup.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto coords = sup.coordinates(sub.basis_vector(i));
        if (!coords) throw NotContained("sublattice vector " + to_string(sub.basis_vector(i)) + " not in superlattice");
        for (std::size_t j = 0; j < sup.rank(); ++j) c(i, j) = (*coords)[j];
    }
    std::vector<Integer> out;
    std::size_t r = 0;
    if (c.rows() > 0 && c.cols() > 0) {
        SnfResult s = smith_normal_form(c);
        for (const Integer& f : s.invariant_factors())
            if (f != 1) out.push_back(f);
        r = s.rank();
    }
    for (std::size_t i = r; i < sup.rank(); ++i) out.emplace_back(0);
    return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("right-hand side length mismatch");
    const std::size_t n = a.cols();
    HermiteResult hr = hermite_normal_form(a.transpose());
    // a x = b  <=>  sum_i y_i h_i = b with x = t^T y
    IntVector res = b;
    IntVector y(n);
    for (std::size_t i = 0; i < hr.pivots.size(); ++i) {
        std::size_t p = hr.pivots[i];
        for (std::size_t j = 0; j < p; ++j)
            if (sgn(res[j]) != 0) return std::nullopt;
        if (!mpz_divisible_p(res[p].get_mpz_t(), hr.h(i, p).get_mpz_t())) return std::nullopt;
        mpz_divexact(y[i].get_mpz_t(), res[p].get_mpz_t(), hr.h(i, p).get_mpz_t());
        for (std::size_t j = p; j < res.size(); ++j) res[j] -= y[i] * hr.h(i, j);
    }
    if (!is_zero(res)) return std::nullopt;
    return hr.t.transpose() * y;
}

bool certify_generation(const IntMatrix& pairing, const Sublattice& candidates) {
    const std::size_t n = pairing.rows();
    if (pairing.cols() != n || candidates.ambient_rank() != n)
        throw std::invalid_argument("pairing and candidates have inconsistent ranks");
    Integer det = determinant(pairing);
    if (abs(det) != 1) throw std::invalid_argument("pairing is not unimodular");
    if (candidates.rank() < n) throw RankDeficient("candidates span rank " + std::to_string(candidates.rank()) + " < " + std::to_string(n));
    SnfResult s = smith_normal_form(candidates.basis());
    for (const Integer& f : s.invariant_factors())
        if (f != 1) return false;
    return true;
}

bool certify_generation(const IntMatrix& pairing, const std::vector<IntVector>& candidates) {
    return certify_generation(pairing, Sublattice(pairing.rows(), candidates));
}

}  // namespace winger
