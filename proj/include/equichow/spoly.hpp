#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "equichow/rational.hpp"

namespace equichow {

// Character of the 2-torus: weight (c1, c2) on (t1, t2). Doubles as a degree-1
// element of S = Q[t1, t2] via linear_form().
struct Character {
    long long c1 = 0, c2 = 0;
    friend Character operator+(Character a, Character b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
    friend Character operator-(Character a, Character b) { return {a.c1 - b.c1, a.c2 - b.c2}; }
    friend Character operator*(long long k, Character a) { return {k * a.c1, k * a.c2}; }
    Character operator-() const { return {-c1, -c2}; }
    bool is_zero() const { return c1 == 0 && c2 == 0; }
    friend bool operator==(Character a, Character b) { return a.c1 == b.c1 && a.c2 == b.c2; }
    friend bool operator!=(Character a, Character b) { return !(a == b); }
    friend bool operator<(Character a, Character b) {
        return a.c1 != b.c1 ? a.c1 < b.c1 : a.c2 < b.c2;
    }
    std::string str() const { return "(" + std::to_string(c1) + "," + std::to_string(c2) + ")"; }
};

// Element of the cocharacter lattice (dual side).
struct Cocharacter {
    long long w1 = 0, w2 = 0;
    bool is_zero() const { return w1 == 0 && w2 == 0; }
    friend bool operator==(Cocharacter a, Cocharacter b) { return a.w1 == b.w1 && a.w2 == b.w2; }
    friend bool operator!=(Cocharacter a, Cocharacter b) { return !(a == b); }
    friend bool operator<(Cocharacter a, Cocharacter b) {
        return a.w1 != b.w1 ? a.w1 < b.w1 : a.w2 < b.w2;
    }
    std::string str() const { return "(" + std::to_string(w1) + "," + std::to_string(w2) + ")"; }
};

inline long long pairing(Character chi, Cocharacter w) { return chi.c1 * w.w1 + chi.c2 * w.w2; }

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Monomial exponent (a, b) for t1^a * t2^b.
struct Exponent {
    int a = 0, b = 0;
    int degree() const { return a + b; }
    friend bool operator==(Exponent x, Exponent y) { return x.a == y.a && x.b == y.b; }
};

// Graded lexicographic order with t1 > t2; ascending for map storage.
struct GradedLexLess {
    bool operator()(Exponent x, Exponent y) const {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x.a < y.a;
    }
};

// Sparse exact polynomial in Q[t1, t2]. No zero coefficients are stored.
class SPoly {
public:
    using TermMap = std::map<Exponent, Rational, GradedLexLess>;

    SPoly() = default;
    explicit SPoly(Rational c) {
        if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
    }
    explicit SPoly(long long c) : SPoly(Rational(c)) {}
    static SPoly monomial(int a, int b, Rational c = Rational(1)) {
        SPoly p;
        if (!c.is_zero()) p.terms_[{a, b}] = std::move(c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
    }
    Rational constant_coeff() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? Rational() : it->second;
    }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    // -1 for the zero polynomial, degree if homogeneous, -2 otherwise.
    int homogeneous_degree() const {
        if (terms_.empty()) return -1;
        int d = terms_.begin()->first.degree();
        return terms_.rbegin()->first.degree() == d ? d : -2;
    }
    bool is_homogeneous_of_degree(int k) const {
        return terms_.empty() || homogeneous_degree() == k;
    }

    Rational coeff(int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Rational() : it->second;
    }
    void set_coeff(Exponent e, Rational c) {
        if (c.is_zero())
            terms_.erase(e);
        else
            terms_[e] = std::move(c);
    }
    void add_term(Exponent e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SPoly operator-() const {
        SPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend SPoly operator+(const SPoly& x, const SPoly& y) {
        SPoly r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, c);
        return r;
    }
    friend SPoly operator-(const SPoly& x, const SPoly& y) {
        SPoly r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, -c);
        return r;
    }
    friend SPoly operator*(const SPoly& x, const SPoly& y) {
        SPoly r;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_)
                r.add_term({ex.a + ey.a, ex.b + ey.b}, cx * cy);
        return r;
    }
    friend SPoly operator*(const Rational& c, const SPoly& x) {
        SPoly r;
        if (c.is_zero()) return r;
        for (const auto& [e, xc] : x.terms_) r.terms_[e] = c * xc;
        return r;
    }
    SPoly& operator+=(const SPoly& o) { return *this = *this + o; }
    SPoly& operator-=(const SPoly& o) { return *this = *this - o; }
    SPoly& operator*=(const SPoly& o) { return *this = *this * o; }

    SPoly pow(int k) const {
        SPoly r(1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const SPoly& x, const SPoly& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const SPoly& x, const SPoly& y) { return !(x == y); }
    friend bool operator<(const SPoly& x, const SPoly& y) {  // arbitrary total order for sets
        auto ix = x.terms_.begin(), iy = y.terms_.begin();
        GradedLexLess less;
        for (; ix != x.terms_.end() && iy != y.terms_.end(); ++ix, ++iy) {
            if (less(ix->first, iy->first)) return true;
            if (less(iy->first, ix->first)) return false;
            int c = ix->second.compare(iy->second);
            if (c != 0) return c < 0;
        }
        return iy != y.terms_.end();
    }

    // Terms leading-first: "t1^2 - 2*t1*t2", "1/2*t2", "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            Rational mag = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            const Exponent e = it->first;
            bool has_vars = e.a > 0 || e.b > 0;
            if (!has_vars || !mag.is_one()) {
                os << mag.str();
                if (has_vars) os << "*";
            }
            if (e.a > 0) {
                os << "t1";
                if (e.a > 1) os << "^" << e.a;
            }
            if (e.b > 0) {
                if (e.a > 0) os << "*";
                os << "t2";
                if (e.b > 1) os << "^" << e.b;
            }
        }
        return os.str();
    }

private:
    TermMap terms_;
};

// chi = (c1, c2)  |->  c1*t1 + c2*t2.
inline SPoly linear_form(Character chi) {
    SPoly p;
    if (chi.c1) p.set_coeff({1, 0}, Rational(chi.c1));
    if (chi.c2) p.set_coeff({0, 1}, Rational(chi.c2));
    return p;
}

// Single-factor exact division by the linear form of chi (chi nonzero).
// Synthetic division eliminating a variable with nonzero coefficient; the
// remainder is the restriction of n to the factor's zero line.
inline std::optional<SPoly> divide_by_linear_form(const SPoly& n, Character chi) {
    if (chi.is_zero()) throw std::invalid_argument("divide_by_linear_form: zero character");
    if (n.is_zero()) return SPoly();
    if (chi.c1 != 0) {
        // group by t1-exponent: n = sum_a A_a(t2) * t1^a, divide by c1*t1 + c2*t2
        int maxa = 0;
        for (const auto& [e, c] : n.terms()) maxa = std::max(maxa, e.a);
        std::vector<std::map<int, Rational>> A(maxa + 1);
        for (const auto& [e, c] : n.terms()) A[e.a][e.b] = c;
        Rational inv_c1 = Rational(1) / Rational(chi.c1);
        Rational c2(chi.c2);
        SPoly q;
        for (int a = maxa; a >= 1; --a) {
            for (const auto& [b, c] : A[a]) {
                if (c.is_zero()) continue;
                Rational qc = c * inv_c1;
                q.add_term({a - 1, b}, qc);
                // subtract qc * t1^(a-1) * c2 * t2 from the lower slice
                if (chi.c2 != 0) {
                    auto& dst = A[a - 1][b + 1];
                    dst -= qc * c2;
                }
            }
        }
        for (const auto& [b, c] : A[0])
            if (!c.is_zero()) return std::nullopt;
        return q;
    }
    // chi = (0, c2): every term must be divisible by t2
    SPoly q;
    Rational inv_c2 = Rational(1) / Rational(chi.c2);
    for (const auto& [e, c] : n.terms()) {
        if (e.b == 0) return std::nullopt;
        q.set_coeff({e.a, e.b - 1}, c * inv_c2);
    }
    return q;
}

// Exact division by a multiset of linear factors, one at a time.
inline std::optional<SPoly> divide_exact(const SPoly& n, const std::vector<Character>& factors) {
    SPoly cur = n;
    for (const Character& f : factors) {
        auto q = divide_by_linear_form(cur, f);
        if (!q) return std::nullopt;
        cur = std::move(*q);
    }
    return cur;
}

// Jacobi-Trudi determinant: rows x rows matrix with entry (i, s) = c[lambda_i + s - i]
// (1-indexed), c[0] = 1 and c[j] = 0 outside the provided range.
// Laplace expansion memoised over column subsets; fine at the sizes used here.
inline SPoly schur_det(const std::vector<int>& lambda, const std::vector<SPoly>& c, int rows) {
    if (rows == 0) return SPoly(1);
    auto entry = [&](int i, int s) -> SPoly {  // 1-indexed
        int part = i <= static_cast<int>(lambda.size()) ? lambda[i - 1] : 0;
        int j = part + s - i;
        if (j < 0 || j >= static_cast<int>(c.size())) return SPoly();
        return c[j];
    };
    std::vector<std::map<unsigned, SPoly>> memo(rows + 1);
    memo[0][0] = SPoly(1);
    // dp over the first i rows and a chosen column subset; assigning column s to
    // row i+1 adds one inversion per already-used column right of s
    for (int i = 0; i < rows; ++i) {
        for (const auto& [mask, minor] : memo[i]) {
            if (minor.is_zero()) continue;
            for (int s = 0; s < rows; ++s) {
                if (mask & (1u << s)) continue;
                SPoly e = entry(i + 1, s + 1);
                if (e.is_zero()) continue;
                int sign_flips = 0;
                for (int t = s + 1; t < rows; ++t)
                    if (mask & (1u << t)) ++sign_flips;
                SPoly contrib = minor * e;
                if (sign_flips % 2) contrib = -contrib;
                auto [it, fresh] = memo[i + 1].try_emplace(mask | (1u << s), contrib);
                if (!fresh) it->second += contrib;
            }
        }
        memo[i].clear();
    }
    auto it = memo[rows].find((1u << rows) - 1);
    return it == memo[rows].end() ? SPoly() : it->second;
}

}  // namespace equichow
