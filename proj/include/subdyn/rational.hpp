#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace subdyn {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
/// Arithmetic never rounds. String form is "n" for integers and "n/d"
/// otherwise; parsing additionally accepts decimal literals ("0.25" -> 1/4).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    explicit Rat(const boost::multiprecision::cpp_rational& v) : v_(v) {}

    Rat(Int num, Int den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        v_ = boost::multiprecision::cpp_rational(num, den);  // reduces gcd
    }

    /// Accepts "n", "n/d", "n.ddd" with an optional leading sign.
    static Rat parse(std::string_view s) {
        auto fail = [&] { throw std::domain_error("Rat: cannot parse '" + std::string(s) + "'"); };
        if (s.empty()) fail();
        bool neg = false;
        size_t i = 0;
        if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; i = 1; }
        auto digits = [&](size_t& pos) {
            Int acc = 0;
            size_t start = pos;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
                acc = acc * 10 + (s[pos] - '0');
                ++pos;
            }
            if (pos == start) fail();
            return acc;
        };
        Int whole = digits(i);
        Rat out;
        if (i == s.size()) {
            out = Rat(whole);
        } else if (s[i] == '/') {
            ++i;
            Int den = digits(i);
            if (i != s.size()) fail();
            if (den == 0) fail();
            out = Rat(whole, den);
        } else if (s[i] == '.') {
            ++i;
            size_t start = i;
            Int frac = digits(i);
            if (i != s.size()) fail();
            Int scale = 1;
            for (size_t k = start; k < i; ++k) scale *= 10;
            out = Rat(whole) + Rat(frac, scale);
        } else {
            fail();
        }
        return neg ? -out : out;
    }

    Int num() const { return boost::multiprecision::numerator(v_); }
    Int den() const { return boost::multiprecision::denominator(v_); }

    bool is_integer() const { return den() == 1; }
    bool is_zero() const { return v_ == 0; }

    std::string str() const {
        Int d = den();
        if (d == 1) return num().str();
        return num().str() + "/" + d.str();
    }

    double to_double() const { return v_.convert_to<double>(); }

    Int floor() const {
        Int n = num(), d = den();
        if (d == 1) return n;
        return n >= 0 ? Int(n / d) : Int(-((-n + d - 1) / d));
    }

    Rat abs() const { return v_ < 0 ? Rat(-v_) : *this; }

    /// num^k / den^k for k >= 0.
    Rat pow(unsigned k) const {
        using boost::multiprecision::pow;
        if (k == 0) return Rat(1);
        return Rat(pow(num(), k), pow(den(), k));
    }

    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.v_ == 0) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    const boost::multiprecision::cpp_rational& raw() const { return v_; }

private:
    boost::multiprecision::cpp_rational v_;
};

inline std::string to_string(const Rat& r) { return r.str(); }

template <class Stream>
Stream& operator<<(Stream& os, const Rat& r) {
    os << r.str();
    return os;
}

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace subdyn
