#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace equichow {

// Sign-magnitude arbitrary-precision integer, base 2^32 limbs, little endian.
// Magnitude never stores leading zero limbs; zero has sign 0 and empty magnitude.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sgn_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
        if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        std::size_t i = 0;
        int sgn = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) sgn = s[i++] == '-' ? -1 : 1;
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<std::uint32_t>(s[i] - '0'));
        }
        if (!r.mag_.empty()) r.sgn_ = sgn;
        return r;
    }

    bool is_zero() const { return sgn_ == 0; }
    int sign() const { return sgn_; }

    bool fits_ll() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = mag_ull();
        return sgn_ >= 0 ? m <= 0x7fffffffffffffffULL : m <= 0x8000000000000000ULL;
    }
    long long to_ll() const {
        if (!fits_ll()) throw std::overflow_error("BigInt: does not fit in long long");
        unsigned long long m = mag_ull();
        return sgn_ < 0 ? -static_cast<long long>(m - 1) - 1 : static_cast<long long>(m);
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sgn_ = -r.sgn_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        if (r.sgn_ < 0) r.sgn_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sgn_ == 0) return b;
        if (b.sgn_ == 0) return a;
        BigInt r;
        if (a.sgn_ == b.sgn_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sgn_ = a.sgn_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            const BigInt& big = c > 0 ? a : b;
            const BigInt& small = c > 0 ? b : a;
            r.mag_ = sub_mag(big.mag_, small.mag_);
            r.sgn_ = big.sgn_;
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sgn_ == 0 || b.sgn_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sgn_ = a.sgn_ * b.sgn_;
        return r;
    }

    // Truncated division: q rounds toward zero, r has the sign of a, a == q*b + r.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sgn_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sgn_ == 0) {
            q = BigInt();
            r = BigInt();
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q = BigInt();
        r = BigInt();
        q.mag_ = std::move(qm);
        r.mag_ = std::move(rm);
        if (!q.mag_.empty()) q.sgn_ = a.sgn_ * b.sgn_;
        if (!r.mag_.empty()) r.sgn_ = a.sgn_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sgn_ = a.mag_.empty() ? 0 : 1;
        b.sgn_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    int compare(const BigInt& o) const {
        if (sgn_ != o.sgn_) return sgn_ < o.sgn_ ? -1 : 1;
        int c = cmp_mag(mag_, o.mag_);
        return sgn_ >= 0 ? c : -c;
    }
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    std::string str() const {
        if (sgn_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            // divide magnitude by 10^9, emit 9 decimal digits
            unsigned long long rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                unsigned long long cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sgn_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

private:
    int sgn_ = 0;
    std::vector<std::uint32_t> mag_;

    unsigned long long mag_ull() const {
        unsigned long long m = 0;
        if (mag_.size() > 0) m = mag_[0];
        if (mag_.size() > 1) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        return m;
    }

    void mul_small_inplace(std::uint32_t f) {
        unsigned long long carry = 0;
        for (auto& limb : mag_) {
            unsigned long long cur = static_cast<unsigned long long>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }
    void add_small_inplace(std::uint32_t v) {
        unsigned long long carry = v;
        for (std::size_t i = 0; carry && i < mag_.size(); ++i) {
            unsigned long long cur = mag_[i] + carry;
            mag_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& lo = a.size() >= b.size() ? b : a;
        const auto& hi = a.size() >= b.size() ? a : b;
        std::vector<std::uint32_t> r;
        r.reserve(hi.size() + 1);
        unsigned long long carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            unsigned long long cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
            r.push_back(static_cast<std::uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }
    // requires a >= b
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        r.reserve(a.size());
        long long borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            long long cur = static_cast<long long>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
            if (cur < 0) {
                cur += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r.push_back(static_cast<std::uint32_t>(cur));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            unsigned long long carry = 0;
            unsigned long long ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                unsigned long long cur = r[i + j] + ai * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                unsigned long long cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on magnitudes.
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        if (cmp_mag(a, b) < 0) {
            q.clear();
            r = a;
            return;
        }
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            unsigned long long rem = 0;
            for (std::size_t i = a.size(); i-- > 0;) {
                unsigned long long cur = (rem << 32) | a[i];
                q[i] = static_cast<std::uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            r.clear();
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }
        int shift = 0;
        for (std::uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        std::vector<std::uint32_t> u = shl_bits(a, shift);
        std::vector<std::uint32_t> v = shl_bits(b, shift);
        const std::size_t n = v.size(), m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);
        const unsigned long long vtop = v[n - 1], vsec = v[n - 2];
        for (std::size_t j = m + 1; j-- > 0;) {
            unsigned long long top2 = (static_cast<unsigned long long>(u[j + n]) << 32) | u[j + n - 1];
            unsigned long long qhat = top2 / vtop;
            unsigned long long rhat = top2 % vtop;
            if (qhat > 0xffffffffULL) {
                qhat = 0xffffffffULL;
                rhat = top2 - qhat * vtop;
            }
            while (rhat <= 0xffffffffULL && qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += vtop;
            }
            // multiply-subtract qhat*v from u[j..j+n]
            long long borrow = 0;
            unsigned long long carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                unsigned long long prod = qhat * v[i] + carry;
                carry = prod >> 32;
                long long cur = static_cast<long long>(u[i + j]) - borrow -
                                static_cast<long long>(prod & 0xffffffffULL);
                if (cur < 0) {
                    cur += 1LL << 32;
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<std::uint32_t>(cur);
            }
            long long cur = static_cast<long long>(u[j + n]) - borrow - static_cast<long long>(carry);
            if (cur < 0) {
                // qhat one too large: add v back
                cur += 1LL << 32;
                --qhat;
                unsigned long long c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    unsigned long long s = static_cast<unsigned long long>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(s);
                    c2 = s >> 32;
                }
                cur += static_cast<long long>(c2);
                cur &= 0xffffffffLL;
            }
            u[j + n] = static_cast<std::uint32_t>(cur);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        u.resize(n);
        r = shr_bits(u, shift);
    }
    static std::vector<std::uint32_t> shl_bits(std::vector<std::uint32_t> v, int s) {
        if (s == 0) return v;
        std::uint32_t carry = 0;
        for (auto& limb : v) {
            std::uint32_t nxt = limb >> (32 - s);
            limb = (limb << s) | carry;
            carry = nxt;
        }
        if (carry) v.push_back(carry);
        return v;
    }
    static std::vector<std::uint32_t> shr_bits(std::vector<std::uint32_t> v, int s) {
        if (s != 0) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                std::uint32_t hi = i + 1 < v.size() ? v[i + 1] : 0;
                v[i] = (v[i] >> s) | (hi << (32 - s));
            }
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }
};

// Exact rational, always reduced, positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_zero() || b.is_zero()) return Rational();
        BigInt g1 = BigInt::gcd(a.num_, b.den_), g2 = BigInt::gcd(b.num_, a.den_);
        Rational r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        if (r.den_.sign() < 0) {
            r.num_ = -r.num_;
            r.den_ = -r.den_;
        }
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return a * Rational(b.den_, b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    int compare(const Rational& o) const { return (num_ * o.den_).compare(o.num_ * den_); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }

    std::string str() const {
        if (den_ == BigInt(1)) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!(g == BigInt(1))) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace equichow
