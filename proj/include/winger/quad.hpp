#pragma once

#include "winger/lattice.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace winger {

// Z[X]/(X^2 - 5)
struct RingOo {
    static constexpr char symbol = 'X';
    static void mul(const Integer& a, const Integer& b, const Integer& c, const Integer& d, Integer& ra, Integer& rb) {
        ra = a * c + 5 * b * d;
        rb = a * d + b * c;
    }
    static void conj(const Integer& a, const Integer& b, Integer& ra, Integer& rb) {
        ra = a;
        rb = -b;
    }
};

// Z[Y]/(Y^2 - Y - 1)
struct RingO {
    static constexpr char symbol = 'Y';
    static void mul(const Integer& a, const Integer& b, const Integer& c, const Integer& d, Integer& ra, Integer& rb) {
        Integer bd = b * d;
        ra = a * c + bd;
        rb = a * d + b * c + bd;
    }
    static void conj(const Integer& a, const Integer& b, Integer& ra, Integer& rb) {
        ra = a + b;
        rb = -b;
    }
};

template <class R>
class Quad {
public:
    Quad() = default;
    Quad(long a) : a_(a) {}
    Quad(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}

    static Quad gen() { return Quad(0, 1); }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    bool is_integer() const { return sgn(b_) == 0; }

    Quad operator-() const { return Quad(-a_, -b_); }
    Quad& operator+=(const Quad& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    Quad& operator-=(const Quad& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    Quad& operator*=(const Quad& o) {
        Integer ra, rb;
        R::mul(a_, b_, o.a_, o.b_, ra, rb);
        a_ = std::move(ra);
        b_ = std::move(rb);
        return *this;
    }
    friend Quad operator+(Quad x, const Quad& y) { return x += y; }
    friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
    friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
    friend bool operator==(const Quad& x, const Quad& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    Quad conj() const {
        Integer ra, rb;
        R::conj(a_, b_, ra, rb);
        return Quad(ra, rb);
    }
    Integer norm() const { return (*this * conj()).a_; }

private:
    Integer a_ = 0;
    Integer b_ = 0;
};

using OoElem = Quad<RingOo>;
using OElem = Quad<RingO>;

// Field with four elements; bit 0 is the 1-coefficient, bit 1 the w-coefficient, w^2 = w + 1.
class F4 {
public:
    constexpr F4() = default;
    constexpr explicit F4(std::uint8_t v) : v_(v & 3) {}
    static constexpr F4 omega() { return F4(2); }

    constexpr std::uint8_t value() const { return v_; }
    bool in_f2() const { return v_ < 2; }

    friend constexpr F4 operator+(F4 x, F4 y) { return F4(x.v_ ^ y.v_); }
    friend constexpr F4 operator-(F4 x, F4 y) { return F4(x.v_ ^ y.v_); }
    constexpr F4 operator-() const { return *this; }
    friend F4 operator*(F4 x, F4 y);
    F4& operator+=(F4 o) { return *this = *this + o; }
    F4& operator-=(F4 o) { return *this = *this - o; }
    F4& operator*=(F4 o) { return *this = *this * o; }
    friend constexpr bool operator==(F4 x, F4 y) { return x.v_ == y.v_; }
    friend constexpr bool operator<(F4 x, F4 y) { return x.v_ < y.v_; }

private:
    std::uint8_t v_ = 0;
};

std::string to_string(F4 x);

template <class T>
class Mat2 {
public:
    Mat2() = default;
    Mat2(T a, T b, T c, T d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
    static Mat2 identity() { return Mat2(T(1), T(0), T(0), T(1)); }

    const T& operator()(int i, int j) const { return e_[2 * i + j]; }
    T& operator()(int i, int j) { return e_[2 * i + j]; }

    T det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
    bool is_sl2() const { return det() == T(1); }
    // adjugate; equals the inverse when det = 1
    Mat2 adjugate() const { return Mat2(e_[3], -e_[1], -e_[2], e_[0]); }
    Mat2 inverse() const {
        if (!is_sl2()) throw std::domain_error("inverse requested for a matrix of determinant != 1");
        return adjugate();
    }
    Mat2 operator-() const { return Mat2(-e_[0], -e_[1], -e_[2], -e_[3]); }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2(x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2], x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
                    x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2], x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]);
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return Mat2(x.e_[0] + y.e_[0], x.e_[1] + y.e_[1], x.e_[2] + y.e_[2], x.e_[3] + y.e_[3]);
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) { return x + (-y); }
    friend bool operator==(const Mat2& x, const Mat2& y) { return x.e_ == y.e_; }
    friend bool operator<(const Mat2& x, const Mat2& y) { return x.e_ < y.e_; }

    Mat2 pow(long k) const {
        Mat2 base = k < 0 ? inverse() : *this;
        unsigned long n = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
        Mat2 r = identity();
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

private:
    std::array<T, 4> e_{};
};

using OoMatrix = Mat2<OoElem>;
using OMatrix = Mat2<OElem>;
using F4Matrix = Mat2<F4>;

F4 operator*(F4 x, F4 y);

OElem embed_oo(const OoElem& x);
OMatrix embed_oo(const OoMatrix& m);
F4 reduce_mod2(const OElem& x);
F4Matrix reduce_mod2(const OMatrix& m);
OoMatrix conj(const OoMatrix& m);

// canonical text: "a", or "a+b*X" / "a-b*X"
std::string to_string(const OoElem& x);
std::string to_string(const OElem& x);
std::string to_string(const OoMatrix& m);
std::string to_string(const OMatrix& m);
std::string to_string(const F4Matrix& m);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
OoElem parse_oo(std::string_view s);
OElem parse_o(std::string_view s);

// Closed rational interval.
struct Interval {
    mpq_class lo, hi;
    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
    mpq_class width() const { return hi - lo; }
};
Interval operator+(const Interval& x, const Interval& y);
Interval operator-(const Interval& x, const Interval& y);
Interval operator*(const Interval& x, const Interval& y);

// Images under sqrt5 -> +sqrt5 and sqrt5 -> -sqrt5, each of width below 2^-bits.
std::pair<Interval, Interval> real_embeddings(const OoElem& x, unsigned bits);
std::pair<Interval, Interval> real_embeddings(const OElem& x, unsigned bits);
std::pair<Mat2<Interval>, Mat2<Interval>> real_embeddings(const OoMatrix& m, unsigned bits);

}  // namespace winger
