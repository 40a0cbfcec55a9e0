#include "winger/quad.hpp"

#include <cctype>

namespace winger {

namespace {

// bit 0: constant, bit 1: omega coefficient
constexpr std::uint8_t kF4Mul[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};

template <class R>
std::string render(const Quad<R>& x) {
    if (x.is_integer()) return x.a().get_str();
    std::string s = x.a().get_str();
    s += sgn(x.b()) < 0 ? '-' : '+';
    s += Integer(abs(x.b())).get_str();
    s += '*';
    s += R::symbol;
    return s;
}

template <class T>
std::string render_matrix(const Mat2<T>& m) {
    return "[[" + to_string(m(0, 0)) + ", " + to_string(m(0, 1)) + "], [" + to_string(m(1, 0)) + ", " +
           to_string(m(1, 1)) + "]]";
}

template <class R>
Quad<R> parse(std::string_view s) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    Integer a = 0, b = 0;
    bool any = false;
    skip();
    while (i < s.size()) {
        int sign = 1;
        bool had_sign = false;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            had_sign = true;
            ++i;
            skip();
        }
        if (any && !had_sign) throw ParseError("expected '+' or '-' in \"" + std::string(s) + "\"");
        Integer coef = 1;
        bool has_num = false;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) {
            coef = Integer(std::string(s.substr(start, i - start)));
            has_num = true;
        }
        skip();
        bool has_sym = false;
        if (has_num && i < s.size() && s[i] == '*') {
            ++i;
            skip();
            if (i >= s.size() || s[i] != R::symbol) throw ParseError("expected symbol after '*' in \"" + std::string(s) + "\"");
        }
        if (i < s.size() && s[i] == R::symbol) {
            has_sym = true;
            ++i;
        }
        if (!has_num && !has_sym) throw ParseError("malformed ring element \"" + std::string(s) + "\"");
        (has_sym ? b : a) += sign * coef;
        any = true;
        skip();
    }
    if (!any) throw ParseError("empty ring element");
    return Quad<R>(a, b);
}

// [lo, hi] around sqrt(5) with hi - lo = 2^-n
Interval sqrt5(unsigned n) {
    Integer scaled = Integer(5) << (2 * n);
    Integer s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Integer den = Integer(1) << n;
    Interval r{mpq_class(s, den), mpq_class(s + 1, den)};
    r.lo.canonicalize();
    r.hi.canonicalize();
    return r;
}

Interval point(const mpq_class& x) { return Interval{x, x}; }

// c0 + c1 * sqrt5 under both signs
std::pair<Interval, Interval> embed(const mpq_class& c0, const mpq_class& c1, unsigned bits) {
    Integer num = abs(c1.get_num());
    unsigned extra = static_cast<unsigned>(mpz_sizeinbase(num.get_mpz_t(), 2)) + 1;
    Interval r = sqrt5(bits + extra);
    Interval plus = point(c0) + point(c1) * r;
    Interval minus = point(c0) - point(c1) * r;
    return {plus, minus};
}

}  // namespace

F4 operator*(F4 x, F4 y) { return F4(kF4Mul[x.value()][y.value()]); }

std::string to_string(F4 x) {
    static const char* names[] = {"0", "1", "w", "w+1"};
    return names[x.value()];
}

OElem embed_oo(const OoElem& x) { return OElem(x.a() - x.b(), 2 * x.b()); }

OMatrix embed_oo(const OoMatrix& m) {
    return OMatrix(embed_oo(m(0, 0)), embed_oo(m(0, 1)), embed_oo(m(1, 0)), embed_oo(m(1, 1)));
}

F4 reduce_mod2(const OElem& x) {
    unsigned lo = mpz_odd_p(x.a().get_mpz_t()) ? 1 : 0;
    unsigned hi = mpz_odd_p(x.b().get_mpz_t()) ? 2 : 0;
    return F4(static_cast<std::uint8_t>(lo | hi));
}

F4Matrix reduce_mod2(const OMatrix& m) {
    return F4Matrix(reduce_mod2(m(0, 0)), reduce_mod2(m(0, 1)), reduce_mod2(m(1, 0)), reduce_mod2(m(1, 1)));
}

OoMatrix conj(const OoMatrix& m) {
    return OoMatrix(m(0, 0).conj(), m(0, 1).conj(), m(1, 0).conj(), m(1, 1).conj());
}

std::string to_string(const OoElem& x) { return render(x); }
std::string to_string(const OElem& x) { return render(x); }
std::string to_string(const OoMatrix& m) { return render_matrix(m); }
std::string to_string(const OMatrix& m) { return render_matrix(m); }
std::string to_string(const F4Matrix& m) { return render_matrix(m); }

OoElem parse_oo(std::string_view s) { return parse<RingOo>(s); }
OElem parse_o(std::string_view s) { return parse<RingO>(s); }

Interval operator+(const Interval& x, const Interval& y) { return Interval{x.lo + y.lo, x.hi + y.hi}; }
Interval operator-(const Interval& x, const Interval& y) { return Interval{x.lo - y.hi, x.hi - y.lo}; }
Interval operator*(const Interval& x, const Interval& y) {
    mpq_class c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
    Interval r{c[0], c[0]};
    for (const auto& v : c) {
        if (v < r.lo) r.lo = v;
        if (v > r.hi) r.hi = v;
    }
    return r;
}

std::pair<Interval, Interval> real_embeddings(const OoElem& x, unsigned bits) {
    return embed(mpq_class(x.a()), mpq_class(x.b()), bits);
}

std::pair<Interval, Interval> real_embeddings(const OElem& x, unsigned bits) {
    // a + bY = (a + b/2) + (b/2) sqrt5
    mpq_class half_b(x.b(), 2);
    half_b.canonicalize();
    return embed(mpq_class(x.a()) + half_b, half_b, bits);
}

std::pair<Mat2<Interval>, Mat2<Interval>> real_embeddings(const OoMatrix& m, unsigned bits) {
    std::array<std::pair<Interval, Interval>, 4> e;
    for (int k = 0; k < 4; ++k) e[k] = real_embeddings(m(k / 2, k % 2), bits);
    return {Mat2<Interval>(e[0].first, e[1].first, e[2].first, e[3].first),
            Mat2<Interval>(e[0].second, e[1].second, e[2].second, e[3].second)};
}

}  // namespace winger
