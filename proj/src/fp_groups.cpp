#include "winger/fp_groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace winger {

Word::Word(std::vector<Letter> letters) {
    for (const Letter& l : letters) {
        if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("letter exponent must be +-1");
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) letters_.pop_back();
        else letters_.push_back(l);
    }
}

Word Word::generator(int g, long power) {
    std::vector<Letter> l;
    for (long k = 0; k < (power < 0 ? -power : power); ++k) l.push_back({g, power < 0 ? -1 : 1});
    return Word(std::move(l));
}

Word Word::inverse() const {
    std::vector<Letter> l;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) l.push_back({it->gen, -it->exp});
    return Word(std::move(l));
}

Word Word::pow(long k) const {
    Word base = k < 0 ? inverse() : *this;
    Word r;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) r = r * base;
    return r;
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> l = a.letters_;
    l.insert(l.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(l));
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

namespace {

struct Parser {
    const FpGroup& g;
    std::string_view s;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse word \"" + std::string(s) + "\": " + what);
    }
    void skip() {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
    }
    Word word(char stop) {
        Word w;
        for (;;) {
            skip();
            if (i >= s.size() || s[i] == stop || s[i] == ',' || s[i] == ')' || s[i] == ']') return w;
            w = w * factor();
        }
    }
    Word factor() {
        Word a = atom();
        skip();
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip();
            std::size_t start = i;
            if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start || !std::isdigit(static_cast<unsigned char>(s[i - 1]))) fail("bad exponent");
            a = a.pow(std::stol(std::string(s.substr(start, i - start))));
        }
        return a;
    }
    Word atom() {
        skip();
        if (i >= s.size()) fail("unexpected end");
        if (s[i] == '(') {
            ++i;
            Word w = word(')');
            if (i >= s.size() || s[i] != ')') fail("missing ')'");
            ++i;
            return w;
        }
        if (s[i] == '[') {
            ++i;
            Word a = word(',');
            if (i >= s.size() || s[i] != ',') fail("missing ','");
            ++i;
            Word b = word(']');
            if (i >= s.size() || s[i] != ']') fail("missing ']'");
            ++i;
            return commutator(a, b);
        }
        std::size_t start = i;
        if (!std::isalpha(static_cast<unsigned char>(s[i]))) fail("unexpected character");
        ++i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        std::string name(s.substr(start, i - start));
        auto it = std::find(g.generator_names.begin(), g.generator_names.end(), name);
        if (it == g.generator_names.end()) fail("unknown generator " + name);
        return Word::generator(static_cast<int>(it - g.generator_names.begin()));
    }
};

}  // namespace

Word parse_word(const FpGroup& g, std::string_view text) {
    Parser p{g, text};
    Word w = p.word('\0');
    p.skip();
    if (p.i != text.size()) p.fail("trailing characters");
    return w;
}

std::string to_string(const FpGroup& g, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    const auto& l = w.letters();
    for (std::size_t k = 0; k < l.size();) {
        std::size_t r = k;
        while (r < l.size() && l[r] == l[k]) ++r;
        long e = static_cast<long>(r - k) * l[k].exp;
        if (!out.empty()) out += ' ';
        out += g.generator_names[l[k].gen];
        if (e != 1) out += "^" + std::to_string(e);
        k = r;
    }
    return out;
}

FpGroup sl2o_presentation() {
    FpGroup g;
    g.generator_names = {"A0", "A1", "A2", "A3", "A4"};
    const std::vector<std::pair<std::string, std::string>> rel = {
        {"C0", "A0^2"},
        {"C1", "[A0, A1]"},
        {"C2", "[A0, A2]"},
        {"C3", "[A0, A3]"},
        {"C4", "[A0, A4]"},
        {"R1", "A0 A1^2"},
        {"R2", "(A1 A2)^3"},
        {"R3", "A0 (A1 A3)^2"},
        {"R4", "[A2, A4]"},
        {"R5", "A3 A2 A3^-1 (A2 A4)^-1"},
        {"R6", "A3 A4 A3^-1 (A2 A4^2)^-1"},
        {"R7", "A0 A1 A4 A1 (A2 A4^-1 A1 A4^-1 A3)^-1"},
    };
    for (const auto& [name, text] : rel) {
        g.relator_names.push_back(name);
        g.relators.push_back(parse_word(g, text));
    }
    return g;
}

OMatrix generator_matrix(int g) {
    const OElem y = OElem::gen();
    switch (g) {
        case 0: return OMatrix(OElem(-1), OElem(0), OElem(0), OElem(-1));
        case 1: return OMatrix(OElem(0), OElem(1), OElem(-1), OElem(0));
        case 2: return OMatrix(OElem(1), OElem(1), OElem(0), OElem(1));
        case 3: return OMatrix(y, OElem(0), OElem(0), y - OElem(1));
        case 4: return OMatrix(OElem(1), y, OElem(0), OElem(1));
    }
    throw std::out_of_range("generator index out of range");
}

OMatrix word_to_matrix(const Word& w) {
    OMatrix m = OMatrix::identity();
    for (const Letter& l : w.letters()) {
        OMatrix a = generator_matrix(l.gen);
        m = m * (l.exp > 0 ? a : a.inverse());
    }
    return m;
}

std::vector<Word> monodromy_words() {
    FpGroup g = sl2o_presentation();
    return {parse_word(g, "A4^2 A2^-3"), parse_word(g, "A4^-2 A2^2 A1 A4^-2 A1"), parse_word(g, "A0 A1 A4^2 A2^-1 A1")};
}

// ---------------------------------------------------------------------------

namespace {

class Enumerator {
public:
    Enumerator(int ngens, std::size_t limit) : width_(2 * ngens), limit_(limit) { new_coset(); }

    static int col(const Letter& l) { return 2 * l.gen + (l.exp > 0 ? 0 : 1); }
    static int inv(int c) { return c ^ 1; }

    bool live(int c) const { return parent_[c] == c; }
    std::size_t defined() const { return parent_.size(); }
    std::size_t live_count() const { return live_; }
    std::size_t peak() const { return peak_; }
    int& entry(int c, int x) { return table_[static_cast<std::size_t>(c) * width_ + x]; }

    // returns false when the table is full and a definition is needed
    bool scan_and_fill(int a, const std::vector<int>& w, bool may_define) {
        const int n = static_cast<int>(w.size());
        int f = a, b = a, i = 0, j = n - 1;
        for (;;) {
            while (i <= j && entry(f, w[i]) >= 0) f = entry(f, w[i++]);
            if (i > j) {
                if (f != a) coincidence(f, a);
                return true;
            }
            while (j >= i && entry(b, inv(w[j])) >= 0) b = entry(b, inv(w[j--]));
            if (j < i) {
                coincidence(f, b);
                return true;
            }
            if (i == j) {
                entry(f, w[i]) = b;
                entry(b, inv(w[i])) = f;
                return true;
            }
            if (!may_define) return true;
            if (live_ >= limit_) return false;
            define(f, w[i]);
        }
    }

    bool fill_row(int a) {
        for (int x = 0; x < width_; ++x)
            if (live(a) && entry(a, x) < 0) {
                if (live_ >= limit_) return false;
                define(a, x);
            }
        return true;
    }

    std::vector<std::vector<int>> compact() {
        std::vector<int> renum(defined(), -1);
        int k = 0;
        for (std::size_t c = 0; c < defined(); ++c)
            if (live(static_cast<int>(c))) renum[c] = k++;
        std::vector<std::vector<int>> rows;
        for (std::size_t c = 0; c < defined(); ++c) {
            if (!live(static_cast<int>(c))) continue;
            std::vector<int> r(width_);
            for (int x = 0; x < width_; ++x) r[x] = renum[entry(static_cast<int>(c), x)];
            rows.push_back(std::move(r));
        }
        return rows;
    }

private:
    int new_coset() {
        int c = static_cast<int>(parent_.size());
        parent_.push_back(c);
        table_.insert(table_.end(), width_, -1);
        ++live_;
        peak_ = std::max(peak_, live_);
        return c;
    }

    void define(int a, int x) {
        int b = new_coset();
        entry(a, x) = b;
        entry(b, inv(x)) = a;
    }

    int rep(int c) {
        int r = c;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[c] != r) {
            int next = parent_[c];
            parent_[c] = r;
            c = next;
        }
        return r;
    }

    void merge(int k, int l, std::deque<int>& q) {
        int a = rep(k), b = rep(l);
        if (a == b) return;
        int lo = std::min(a, b), hi = std::max(a, b);
        parent_[hi] = lo;
        --live_;
        q.push_back(hi);
    }

    void coincidence(int a, int b) {
        std::deque<int> q;
        merge(a, b, q);
        while (!q.empty()) {
            int g = q.front();
            q.pop_front();
            for (int x = 0; x < width_; ++x) {
                int d = entry(g, x);
                if (d < 0) continue;
                entry(d, inv(x)) = -1;
                int mu = rep(g), nu = rep(d);
                if (entry(mu, x) >= 0) merge(nu, entry(mu, x), q);
                else if (entry(nu, inv(x)) >= 0) merge(mu, entry(nu, inv(x)), q);
                else {
                    entry(mu, x) = nu;
                    entry(nu, inv(x)) = mu;
                }
            }
        }
    }

    int width_;
    std::size_t limit_;
    std::vector<int> table_;
    std::vector<int> parent_;
    std::size_t live_ = 0, peak_ = 0;
};

std::vector<int> columns(const Word& w) {
    std::vector<int> c;
    for (const Letter& l : w.letters()) c.push_back(Enumerator::col(l));
    return c;
}

Word cyclically_reduce(Word w) {
    while (w.size() >= 2) {
        const auto& l = w.letters();
        if (l.front().gen == l.back().gen && l.front().exp == -l.back().exp)
            w = Word(std::vector<Letter>(l.begin() + 1, l.end() - 1));
        else break;
    }
    return w;
}

}  // namespace

int CosetTable::act(int coset, const Word& w) const {
    for (const Letter& l : w.letters()) coset = rows[coset][Enumerator::col(l)];
    return coset;
}

bool CosetTable::valid(const FpGroup& g, const std::vector<Word>& subgroup) const {
    const int n = static_cast<int>(rows.size());
    for (const auto& r : rows)
        for (int x = 0; x < 2 * generator_count; ++x)
            if (r[x] < 0 || r[x] >= n) return false;
    for (int c = 0; c < n; ++c)
        for (int x = 0; x < 2 * generator_count; ++x)
            if (rows[rows[c][x]][x ^ 1] != c) return false;
    for (const Word& r : g.relators)
        for (int c = 0; c < n; ++c)
            if (act(c, r) != c) return false;
    for (const Word& h : subgroup)
        if (act(0, h) != 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int d : rows[c])
            if (!seen[d]) {
                seen[d] = true;
                ++count;
                stack.push_back(d);
            }
    }
    return count == rows.size();
}

std::string CosetTable::dump(const FpGroup& g) const {
    std::ostringstream os;
    os << "# cosets " << rows.size() << "\n# coset";
    for (const auto& name : g.generator_names) os << ' ' << name << ' ' << name << "^-1";
    os << '\n';
    for (std::size_t c = 0; c < rows.size(); ++c) {
        os << c + 1;
        for (int d : rows[c]) os << ' ' << d + 1;
        os << '\n';
    }
    return os.str();
}

CosetTable todd_coxeter(const FpGroup& g, const std::vector<Word>& subgroup, std::size_t limit) {
    if (limit == 0) throw std::invalid_argument("coset limit must be positive");
    std::vector<std::vector<int>> rels;
    std::set<std::vector<int>> seen;
    for (const Word& r0 : g.relators) {
        Word r = cyclically_reduce(r0);
        for (const Word& base : {r, r.inverse()}) {
            const auto& l = base.letters();
            for (std::size_t k = 0; k < l.size(); ++k) {
                std::vector<Letter> rot(l.begin() + k, l.end());
                rot.insert(rot.end(), l.begin(), l.begin() + k);
                auto c = columns(Word(rot));
                if (!c.empty() && seen.insert(c).second) rels.push_back(std::move(c));
            }
        }
    }
    std::vector<std::vector<int>> subs;
    for (const Word& h : subgroup)
        if (!h.empty()) subs.push_back(columns(h));

    Enumerator e(g.generator_count(), limit);
    auto overflow = [&] {
        throw Overflow("coset enumeration exceeded " + std::to_string(limit) + " live cosets");
    };
    // lookahead: scan every live coset without defining, which may free cosets
    auto lookahead = [&] {
        std::size_t before = e.live_count();
        for (std::size_t c = 0; c < e.defined(); ++c)
            for (const auto& r : rels) {
                if (!e.live(static_cast<int>(c))) break;
                e.scan_and_fill(static_cast<int>(c), r, false);
            }
        return e.live_count() < before;
    };
    auto scan = [&](int c, const std::vector<int>& w) {
        while (!e.scan_and_fill(c, w, true))
            if (!lookahead()) overflow();
    };
    for (const auto& h : subs) scan(0, h);
    for (std::size_t a = 0; a < e.defined(); ++a) {
        const int c = static_cast<int>(a);
        for (const auto& r : rels) {
            if (!e.live(c)) break;
            scan(c, r);
        }
        while (e.live(c) && !e.fill_row(c))
            if (!lookahead()) overflow();
    }
    CosetTable t;
    t.generator_count = g.generator_count();
    t.rows = e.compact();
    t.max_live = e.peak();
    return t;
}

// ---------------------------------------------------------------------------

FiniteIndexReport index_oo_in_o() {
    FiniteIndexReport r;
    std::vector<F4Matrix> f4, f2;
    for (int code = 0; code < 256; ++code) {
        F4Matrix m(F4(code & 3), F4((code >> 2) & 3), F4((code >> 4) & 3), F4((code >> 6) & 3));
        if (!(m.det() == F4(1))) continue;
        f4.push_back(m);
        if (m(0, 0).in_f2() && m(0, 1).in_f2() && m(1, 0).in_f2() && m(1, 1).in_f2()) f2.push_back(m);
    }
    r.sl2_f4 = f4.size();
    r.sl2_f2 = f2.size();
    r.index = r.sl2_f2 ? r.sl2_f4 / r.sl2_f2 : 0;

    std::set<std::vector<F4Matrix>> cosets;
    for (const auto& g : f4) {
        std::vector<F4Matrix> c;
        for (const auto& h : f2) c.push_back(g * h);
        std::sort(c.begin(), c.end());
        cosets.insert(c);
    }
    std::set<F4Matrix> covered;
    std::size_t total = 0;
    for (const auto& c : cosets) {
        covered.insert(c.begin(), c.end());
        total += c.size();
    }
    r.cosets_partition = cosets.size() == r.index && covered.size() == f4.size() && total == f4.size();

    std::set<F4Matrix> gen;
    std::vector<F4Matrix> frontier = {F4Matrix::identity()};
    gen.insert(F4Matrix::identity());
    while (!frontier.empty()) {
        F4Matrix m = frontier.back();
        frontier.pop_back();
        for (int k = 1; k <= 4; ++k) {
            F4Matrix n = m * reduce_mod2(generator_matrix(k));
            if (gen.insert(n).second) frontier.push_back(n);
        }
    }
    r.reduction_onto = gen.size() == f4.size();
    return r;
}

IndexChain certify_index_two(std::size_t in_sl2o, std::size_t oo_in_o, const std::vector<Word>& words) {
    IndexChain c;
    c.in_sl2o = in_sl2o;
    c.oo_in_o = oo_in_o;
    for (const Word& w : words) {
        F4Matrix m = reduce_mod2(word_to_matrix(w));
        if (!(m(0, 0).in_f2() && m(0, 1).in_f2() && m(1, 0).in_f2() && m(1, 1).in_f2()))
            throw InconsistentChain("a generator does not reduce into SL2(F2)");
        c.generators_mod2.push_back(m);
    }
    if (oo_in_o == 0 || in_sl2o % oo_in_o != 0)
        throw InconsistentChain(std::to_string(oo_in_o) + " does not divide " + std::to_string(in_sl2o));
    c.in_sl2oo = in_sl2o / oo_in_o;
    return c;
}

}  // namespace winger
