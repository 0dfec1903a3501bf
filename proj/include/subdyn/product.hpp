#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rational.hpp"

namespace subdyn {

/// The fractional interval map family: on [0,1/2], x ↦ x / ((1-2q)x + q)
/// with q = a/b, extended symmetrically (s̃(x) = s̃(1-x)) to (1/2,1].
/// Only the ratio q matters for the dynamics.
class FracMap {
public:
    FracMap(long long a, long long b) : a_(a), b_(b) {
        if (a < 1 || b < 1) throw std::invalid_argument("FracMap: a, b must be >= 1");
    }
    long long a() const { return a_; }
    long long b() const { return b_; }
    Rat q() const { return Rat(a_, b_); }

private:
    long long a_, b_;
};

enum class FracRegime { AttractsToZero, Exact, GenericNotErgodic };

inline const char* regime_name(FracRegime r) {
    switch (r) {
        case FracRegime::AttractsToZero: return "AttractsToZero";
        case FracRegime::Exact: return "Exact";
        case FracRegime::GenericNotErgodic: return "GenericNotErgodic";
    }
    return "?";
}

/// Regime trichotomy by exact comparison of q with 1: q > 1 attracts almost
/// every point to 0, q < 1 gives an exact map, q = 1 is generic but not
/// ergodic (the slow continued-fraction map).
inline FracRegime frac_classify(const FracMap& m) {
    Rat q = m.q();
    if (q > Rat(1)) return FracRegime::AttractsToZero;
    if (q < Rat(1)) return FracRegime::Exact;
    return FracRegime::GenericNotErgodic;
}

inline Rat frac_eval(const FracMap& m, const Rat& x) {
    if (x < Rat(0) || x > Rat(1)) throw std::domain_error("frac_eval: argument outside [0,1]");
    Rat q = m.q();
    Rat u = x <= Rat(1, 2) ? x : Rat(1) - x;
    Rat den = (Rat(1) - Rat(2) * q) * u + q;
    if (!(den > Rat(0))) throw std::logic_error("frac_eval: nonpositive denominator");
    return u / den;
}

inline double frac_eval(const FracMap& m, double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("frac_eval: argument outside [0,1]");
    double q = m.q().to_double();
    double u = x <= 0.5 ? x : 1.0 - x;
    return u / ((1.0 - 2.0 * q) * u + q);
}

// ---------------------------------------------------------------------------
// Continued fractions.

/// Finite continued-fraction expansion of a rational in [0,1]: the digits
/// a_1, a_2, ... of [0; a_1, a_2, ...], with a_0 = 0 implicit. Canonical
/// form: the empty list is 0, the last digit is >= 2 except for [0;1] = 1.
struct CFExpansion {
    std::vector<Int> digits;

    friend bool operator==(const CFExpansion& x, const CFExpansion& y) = default;
};

/// Euclidean-algorithm expansion; emits the canonical form directly.
inline CFExpansion cf_expand(const Rat& x) {
    if (x < Rat(0) || x > Rat(1)) throw std::domain_error("cf_expand: argument outside [0,1]");
    CFExpansion e;
    Int p = x.num(), q = x.den();
    while (p != 0) {
        e.digits.push_back(q / p);
        Int rem = q % p;
        q = p;
        p = rem;
    }
    return e;
}

/// Value of a finite expansion: fold 1/(a_k + ·) right to left from 0.
inline Rat cf_value(const CFExpansion& e) {
    Rat v(0);
    for (auto it = e.digits.rbegin(); it != e.digits.rend(); ++it) {
        if (*it < 1) throw std::invalid_argument("cf_value: digits must be positive");
        v = Rat(1) / (Rat(*it) + v);
    }
    return v;
}

/// Gauss map g(0) = 0, g(x) = 1/x - floor(1/x); shifts the CF digits left.
inline Rat gauss_step(const Rat& x) {
    if (x < Rat(0) || x > Rat(1)) throw std::domain_error("gauss_step: argument outside [0,1]");
    if (x.is_zero()) return Rat(0);
    Rat inv = Rat(1) / x;
    return inv - Rat(inv.floor());
}

/// Verifies the slow-continued-fraction behaviour of the q = 1 map at x:
/// on (1/2,1] the map equals the Gauss step (digit shift); on (0,1/2] it
/// decrements the leading digit. Both sides are computed independently —
/// the map image via frac_eval, the digit route via cf_expand/cf_value.
inline bool slow_cf_check(const Rat& x) {
    if (!(x > Rat(0)) || x > Rat(1)) throw std::domain_error("slow_cf_check: argument outside (0,1]");
    FracMap unit(1, 1);
    Rat img = frac_eval(unit, x);
    CFExpansion e = cf_expand(x);
    if (x > Rat(1, 2)) {
        CFExpansion shifted{std::vector<Int>(e.digits.begin() + 1, e.digits.end())};
        return img == gauss_step(x) && img == cf_value(shifted);
    }
    CFExpansion dec = e;  // x <= 1/2 forces a_1 >= 2, so the decrement stays positive
    dec.digits.front() -= 1;
    return img == cf_value(dec);
}

/// Non-ergodicity witness for q = 1: with x = [0; a_1, ..., a_k] and
/// N = Σ a_i, exactly N - k of the orbit points x_0 .. x_{N-1} lie in
/// [0, 1/2]. Returns true iff the count matches exactly.
inline bool block_frequency_check(const Rat& x) {
    if (!(x > Rat(0)) || x > Rat(1)) throw std::domain_error("block_frequency_check: argument outside (0,1]");
    FracMap unit(1, 1);
    CFExpansion e = cf_expand(x);
    Int n = 0;
    for (const Int& d : e.digits) n += d;
    Int count = 0;
    Rat y = x;
    for (Int step = 0; step < n; ++step) {
        if (y <= Rat(1, 2)) ++count;
        y = frac_eval(unit, y);
    }
    return count == n - Int(e.digits.size());
}

// ---------------------------------------------------------------------------
// The square map on (0,1]^2.

struct SquarePoint {
    Rat x0, x1;
};

/// One step of the multiplicative square map:
/// (α, β) ↦ ( ((α∧β)/(α∨β))^a , (α∨β)^b ).
inline SquarePoint square_step(const SquarePoint& p, const FracMap& m) {
    if (!(p.x0 > Rat(0)) || !(p.x1 > Rat(0)) || p.x0 > Rat(1) || p.x1 > Rat(1))
        throw std::domain_error("square_step: point outside (0,1]^2");
    Rat mn = rat_min(p.x0, p.x1), mx = rat_max(p.x0, p.x1);
    return SquarePoint{(mn / mx).pow(static_cast<unsigned>(m.a())),
                       mx.pow(static_cast<unsigned>(m.b()))};
}

/// For a = b = 1 the coordinate product never decreases along orbits (the
/// orbit stays above the hyperbola x0·x1 = c); verified exactly for n steps.
inline bool hyperbola_monotone(SquarePoint p, size_t n) {
    FracMap unit(1, 1);
    Rat prod = p.x0 * p.x1;
    for (size_t k = 0; k < n; ++k) {
        p = square_step(p, unit);
        Rat next = p.x0 * p.x1;
        if (next < prod) return false;
        prod = next;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Factored square-map orbits.
//
// The square map with integer a, b is purely multiplicative, so both
// coordinates stay inside the multiplicative group generated by the prime
// factors of the starting coordinates. The reduced fractions themselves
// acquire exponentially many bits along an orbit (each step multiplies the
// heights of the two coordinates), which makes long dense-rational orbits
// infeasible; exponent vectors over the fixed prime basis stay tiny instead.

namespace detail {

/// Trial-division factorization of v >= 1, accumulating sgn * multiplicity
/// per prime. Intended for start-of-orbit values, which are user-scale.
inline void factor_into(Int v, std::map<Int, Int>& out, int sgn) {
    for (Int p = 2; p * p <= v; ++p)
        while (v % p == 0) {
            out[p] += sgn;
            v /= p;
        }
    if (v > 1) out[v] += sgn;
}

}  // namespace detail

/// A square-map orbit tracked in factored form: each coordinate is
/// prod primes_[i] ^ e[i]. Comparing two represented values reduces to the
/// sign of an integer combination of logarithms of distinct primes, which is
/// zero exactly when the combination is the zero vector; nonzero signs are
/// certified with 100-digit floating point against an explicit rounding-error
/// bound, and the comparison aborts rather than guess if the margin were ever
/// insufficient. Every comparison that returns is therefore exact.
class FactoredSquareOrbit {
public:
    explicit FactoredSquareOrbit(const SquarePoint& start) {
        if (!(start.x0 > Rat(0)) || !(start.x1 > Rat(0)) || start.x0 > Rat(1) ||
            start.x1 > Rat(1))
            throw std::domain_error("FactoredSquareOrbit: point outside (0,1]^2");
        std::map<Int, Int> f0, f1;
        detail::factor_into(start.x0.num(), f0, +1);
        detail::factor_into(start.x0.den(), f0, -1);
        detail::factor_into(start.x1.num(), f1, +1);
        detail::factor_into(start.x1.den(), f1, -1);
        std::map<Int, Int> basis;
        for (const auto& kv : f0) basis[kv.first] = 0;
        for (const auto& kv : f1) basis[kv.first] = 0;
        for (const auto& kv : basis) {
            const Int& p = kv.first;
            primes_.push_back(p);
            logp_.push_back(log(BigFloat(p)));
            auto it0 = f0.find(p);
            auto it1 = f1.find(p);
            e0_.push_back(it0 == f0.end() ? Int(0) : it0->second);
            e1_.push_back(it1 == f1.end() ? Int(0) : it1->second);
        }
    }

    size_t basis_size() const { return primes_.size(); }

    /// Sign of sum e[i] * ln primes_[i], i.e. of ln of the represented value.
    int sign_log(const std::vector<Int>& e) const {
        bool all_zero = true;
        for (const Int& c : e)
            if (c != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return 0;
        BigFloat sum = 0, mag = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            BigFloat t = BigFloat(e[i]) * logp_[i];
            sum += t;
            mag += abs(t);
        }
        // 100-digit arithmetic keeps the accumulated rounding error below
        // mag * 1e-90; a nonzero integer combination of logs of distinct
        // primes at the exponent sizes reachable here stays far above that.
        if (abs(sum) <= mag * BigFloat("1e-80"))
            throw std::runtime_error(
                "FactoredSquareOrbit: comparison margin below precision bound");
        return sum > 0 ? 1 : -1;
    }

    /// One square-map step (min/max chosen by exact comparison).
    void step(const FracMap& m) {
        std::vector<Int> d(primes_.size());
        for (size_t i = 0; i < d.size(); ++i) d[i] = e0_[i] - e1_[i];
        bool x0_is_min = sign_log(d) <= 0;
        const std::vector<Int>& mn = x0_is_min ? e0_ : e1_;
        const std::vector<Int>& mx = x0_is_min ? e1_ : e0_;
        Int a(m.a()), b(m.b());
        std::vector<Int> n0(primes_.size()), n1(primes_.size());
        for (size_t i = 0; i < primes_.size(); ++i) {
            n0[i] = a * (mn[i] - mx[i]);
            n1[i] = b * mx[i];
        }
        e0_ = std::move(n0);
        e1_ = std::move(n1);
    }

    /// Exponent vector of the coordinate product x0 * x1.
    std::vector<Int> product_exponents() const {
        std::vector<Int> q(primes_.size());
        for (size_t i = 0; i < q.size(); ++i) q[i] = e0_[i] + e1_[i];
        return q;
    }

    /// Expand a coordinate (0 or 1) back to a reduced fraction. Only viable
    /// while exponents are moderate; throws once an expansion would be huge.
    Rat coordinate(int which) const {
        const std::vector<Int>& e = which == 0 ? e0_ : e1_;
        Int num = 1, den = 1;
        for (size_t i = 0; i < primes_.size(); ++i) {
            if (e[i] == 0) continue;
            Int m = boost::multiprecision::abs(e[i]);
            if (m > 1000000)
                throw std::runtime_error(
                    "FactoredSquareOrbit: exponent too large to expand");
            Int pk = boost::multiprecision::pow(
                primes_[i], m.convert_to<unsigned>());
            (e[i] > 0 ? num : den) *= pk;
        }
        return Rat(num, den);
    }

private:
    using BigFloat = boost::multiprecision::cpp_bin_float_100;

    std::vector<Int> primes_, e0_, e1_;
    std::vector<BigFloat> logp_;
};

/// Same invariant as hyperbola_monotone, with the orbit tracked in factored
/// form so the step count can be large (dense reduced fractions would grow to
/// ~2^n bits along n steps, factored exponents stay polynomial).
inline bool hyperbola_monotone_factored(const SquarePoint& start, size_t n) {
    FactoredSquareOrbit orbit(start);
    FracMap unit(1, 1);
    std::vector<Int> prev = orbit.product_exponents();
    for (size_t k = 0; k < n; ++k) {
        orbit.step(unit);
        std::vector<Int> cur = orbit.product_exponents();
        std::vector<Int> d(cur.size());
        for (size_t i = 0; i < cur.size(); ++i) d[i] = cur[i] - prev[i];
        if (orbit.sign_log(d) < 0) return false;
        prev = std::move(cur);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Expansion bounds.

struct DerivBound {
    double min_abs_deriv = 0;         // min |s̃'| over the grid
    double min_abs_second = 0;        // min |(s̃²)'| over the grid
    double reference = 0;             // (2q+1)², the q < 1/2 lower bound
};

/// Minimizes |s̃'| and |(s̃²)'| over the midpoint grid (2j+1)/(2·grid_size),
/// skipping the nondifferentiability loci x = 1/2 and s̃(x) = 1/2 exactly.
/// All minimization is exact rational arithmetic; when q < 1/2 the bound
/// min |(s̃²)'| >= (2q+1)² is asserted exactly before converting to double.
inline DerivBound deriv_bound_check(const FracMap& m, size_t grid_size) {
    Rat q = m.q();
    if (!(q < Rat(1))) throw std::invalid_argument("deriv_bound_check: requires q < 1");
    if (grid_size < 10) throw std::invalid_argument("deriv_bound_check: grid_size must be >= 10");

    auto abs_deriv = [&q](const Rat& x) {
        Rat u = x <= Rat(1, 2) ? x : Rat(1) - x;
        Rat den = (Rat(1) - Rat(2) * q) * u + q;
        return q / (den * den);
    };

    Rat half(1, 2);
    Rat min1, min2;
    bool have1 = false, have2 = false;
    for (size_t j = 0; j < grid_size; ++j) {
        Rat x(Int(2 * j + 1), Int(2 * grid_size));
        if (x == half) continue;
        Rat d1 = abs_deriv(x);
        if (!have1 || d1 < min1) { min1 = d1; have1 = true; }
        Rat y = frac_eval(m, x);
        if (y == half) continue;
        Rat d2 = d1 * abs_deriv(y);
        if (!have2 || d2 < min2) { min2 = d2; have2 = true; }
    }
    Rat ref = (Rat(2) * q + Rat(1)) * (Rat(2) * q + Rat(1));
    if (q < half && min2 < ref)
        throw std::logic_error("deriv_bound_check: grid minimum under the (2q+1)^2 bound");
    return DerivBound{min1.to_double(), min2.to_double(), ref.to_double()};
}

}  // namespace subdyn
