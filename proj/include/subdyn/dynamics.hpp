#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "classify.hpp"
#include "markov.hpp"
#include "plfunc.hpp"
#include "rational.hpp"

namespace subdyn {

/// Exact orbit record. Rational orbits of a PLFunc have bounded denominators
/// (the map multiplies by integer slopes and the value stays reduced over a
/// divisor of the start's denominator), so they are eventually periodic and
/// the cycle is always detected when it occurs within the requested steps.
struct ExactOrbit {
    Rat start;
    std::vector<Rat> points;                              // n+1 values
    std::optional<std::pair<size_t, size_t>> cycle;       // (preperiod, period)
};

/// Floating orbit record (validation only; classification never uses floats).
struct FloatOrbit {
    double start = 0;
    std::vector<double> points;
};

/// Per-interval visit statistics of an orbit against a partition.
/// Boundary hits count for the left interval (and 0 for the leftmost);
/// with total = 0 all frequencies are reported as 0.
struct FrequencyTable {
    std::vector<Rat> boundaries;
    std::vector<unsigned long long> counts;
    unsigned long long total = 0;
    std::vector<double> freq;
    std::vector<double> reference;  // v_i * len_i when a density is supplied
};

inline ExactOrbit iterate_exact(const PLFunc& s, const Rat& x0, size_t n) {
    if (x0 < Rat(0) || x0 > Rat(1)) throw std::domain_error("iterate_exact: start outside [0,1]");
    ExactOrbit orbit;
    orbit.start = x0;
    orbit.points.reserve(n + 1);
    orbit.points.push_back(x0);
    std::map<Rat, size_t> first_seen{{x0, 0}};
    for (size_t k = 1; k <= n; ++k) {
        if (orbit.cycle) {
            auto [pre, period] = *orbit.cycle;
            orbit.points.push_back(orbit.points[pre + (k - pre) % period]);
            continue;
        }
        Rat y = s(orbit.points.back());
        auto [it, fresh] = first_seen.emplace(y, k);
        orbit.points.push_back(y);
        if (!fresh) orbit.cycle = std::make_pair(it->second, k - it->second);
    }
    return orbit;
}

/// Literal IEEE-double iteration with clamping to [0,1] after each step.
/// Note that integer-coefficient pieces make every step exact in doubles, so
/// double orbits are dyadic and may collapse onto short exact cycles (e.g.
/// the tent map absorbs every double start at 0 within ~55 steps); use the
/// statistics functions below when equidistribution matters.
inline FloatOrbit iterate_float(const PLFunc& s, double x0, size_t n) {
    if (!(x0 >= 0.0 && x0 <= 1.0)) throw std::domain_error("iterate_float: start outside [0,1]");
    std::vector<double> bp(s.breakpoints().size());
    for (size_t i = 0; i < bp.size(); ++i) bp[i] = s.breakpoints()[i].to_double();
    std::vector<std::pair<double, double>> pieces(s.piece_count());
    for (size_t i = 0; i < pieces.size(); ++i)
        pieces[i] = {s.pieces()[i].first.convert_to<double>(),
                     s.pieces()[i].second.convert_to<double>()};
    constexpr double kDrift = 1e-14;  // a few ulps; larger drift means a bug
    FloatOrbit orbit;
    orbit.start = x0;
    orbit.points.reserve(n + 1);
    orbit.points.push_back(x0);
    double x = x0;
    for (size_t k = 0; k < n; ++k) {
        size_t i = static_cast<size_t>(std::lower_bound(bp.begin() + 1, bp.end(), x) - bp.begin()) - 1;
        double y = pieces[i].first * x + pieces[i].second;
        if (std::isnan(y) || y < -kDrift || y > 1.0 + kDrift)
            throw std::domain_error("iterate_float: orbit left [0,1]");
        x = std::min(1.0, std::max(0.0, y));
        orbit.points.push_back(x);
    }
    return orbit;
}

namespace detail {

// Exact orbit walker on a fixed rational grid p/q. The start is snapped to
// the decimal grid (q is a multiple of 10^9 compatible with every breakpoint
// denominator), which keeps it non-dyadic: unlike raw double orbits, exact
// grid orbits of expanding maps retain long cycles and equidistribute.
// Steps are exact integer arithmetic: numerator -> a * numerator + c * q.
class GridOrbit {
public:
    GridOrbit(const PLFunc& s, const Partition* count_against, double x0) {
        if (!(x0 >= 0.0 && x0 <= 1.0)) throw std::domain_error("orbit start outside [0,1]");
        Int lcm = 1;
        auto fold = [&lcm](const Rat& x) { lcm = boost::multiprecision::lcm(lcm, x.den()); };
        for (const Rat& b : s.breakpoints()) fold(b);
        if (count_against)
            for (const Rat& b : count_against->points) fold(b);
        Int abs_coeff = 1;
        for (const auto& [a, c] : s.pieces()) {
            abs_coeff = std::max(abs_coeff, Int(boost::multiprecision::abs(a)));
            abs_coeff = std::max(abs_coeff, Int(boost::multiprecision::abs(c)));
        }
        // Overflow guard for the __int128 fast path; beyond it fall back to
        // full rational stepping (same results, slower).
        fast_ = lcm <= Int(100'000'000) && abs_coeff <= Int(1'000'000'000);
        if (fast_) {
            q_ = static_cast<__int128>(lcm.convert_to<long long>()) * 1'000'000'000;
            for (const Rat& b : s.breakpoints()) piece_thresholds_.push_back(scale(b));
            for (const auto& [a, c] : s.pieces())
                coeffs_.emplace_back(a.convert_to<long long>(),
                                     static_cast<__int128>(c.convert_to<long long>()) * q_);
            if (count_against)
                for (const Rat& b : count_against->points) count_thresholds_.push_back(scale(b));
            p_ = static_cast<__int128>(std::llround(x0 * static_cast<double>(q_)));
            p_ = std::max<__int128>(0, std::min(q_, p_));
        } else {
            map_ = &s;
            Int den = 1'000'000'000;
            x_ = Rat(Int(std::llround(x0 * 1e9)), den);
            count_against_ = count_against;
        }
    }

    void step() {
        if (fast_) {
            size_t i = locate(piece_thresholds_, p_);
            p_ = coeffs_[i].first * p_ + coeffs_[i].second;
            if (p_ < 0 || p_ > q_) throw std::logic_error("GridOrbit: exact step left [0,1]");
        } else {
            x_ = (*map_)(x_);
        }
    }

    double value() const {
        if (fast_) return static_cast<double>(p_) / static_cast<double>(q_);
        return x_.to_double();
    }

    /// Counting interval of the current point (left rule at boundaries).
    size_t interval() const {
        if (fast_) return locate(count_thresholds_, p_);
        return count_against_->locate(x_);
    }

private:
    __int128 scale(const Rat& b) const {
        Int t = b.num() * (Int(static_cast<long long>(q_)) / b.den());
        return static_cast<__int128>(t.convert_to<long long>());
    }
    static size_t locate(const std::vector<__int128>& t, __int128 p) {
        size_t lo = 1, hi = t.size() - 1;
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            if (t[mid] >= p) hi = mid; else lo = mid + 1;
        }
        return lo - 1;
    }

    bool fast_ = false;
    __int128 q_ = 0, p_ = 0;
    std::vector<__int128> piece_thresholds_, count_thresholds_;
    std::vector<std::pair<long long, __int128>> coeffs_;
    // fallback
    const PLFunc* map_ = nullptr;
    const Partition* count_against_ = nullptr;
    Rat x_;
};

}  // namespace detail

/// Empirical visit frequencies of the n-step orbit x_0 .. x_{n-1} started at
/// (the decimal-grid snap of) x0, counted against partition p. The orbit is
/// computed exactly; see GridOrbit for why doubles would be meaningless here.
inline FrequencyTable birkhoff_frequencies(const PLFunc& s, double x0, size_t n, const Partition& p,
                                           const std::optional<DensityVec>& density = std::nullopt) {
    FrequencyTable t;
    t.boundaries = p.points;
    t.counts.assign(p.intervals(), 0);
    t.total = n;
    detail::GridOrbit orbit(s, &p, x0);
    for (size_t k = 0; k < n; ++k) {
        ++t.counts[orbit.interval()];
        orbit.step();
    }
    t.freq.resize(p.intervals());
    for (size_t i = 0; i < p.intervals(); ++i)
        t.freq[i] = n == 0 ? 0.0 : static_cast<double>(t.counts[i]) / static_cast<double>(n);
    if (density) {
        t.reference.resize(p.intervals());
        for (size_t i = 0; i < p.intervals(); ++i)
            t.reference[i] = (density->values[i] * p.length(i)).to_double();
    }
    return t;
}

/// True iff the (n+1)-point orbit from (the decimal-grid snap of) x0 is
/// ε-dense in [0,1]: every point of an ε/2-grid lies within ε of the orbit.
inline bool dense_orbit_test(const PLFunc& s, double x0, size_t n, double epsilon) {
    if (!(epsilon > 0)) throw std::domain_error("dense_orbit_test: epsilon must be positive");
    std::vector<double> pts;
    pts.reserve(n + 1);
    detail::GridOrbit orbit(s, nullptr, x0);
    pts.push_back(orbit.value());
    for (size_t k = 0; k < n; ++k) {
        orbit.step();
        pts.push_back(orbit.value());
    }
    std::sort(pts.begin(), pts.end());
    double half = epsilon / 2;
    size_t cells = static_cast<size_t>(std::ceil(2.0 / epsilon));
    for (size_t j = 0; j <= cells; ++j) {
        double g = std::min(1.0, static_cast<double>(j) * half);
        auto it = std::lower_bound(pts.begin(), pts.end(), g);
        double best = std::numeric_limits<double>::infinity();
        if (it != pts.end()) best = std::min(best, *it - g);
        if (it != pts.begin()) best = std::min(best, g - *(it - 1));
        if (!(best <= epsilon)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// CSV export: orbits as `step,value`, tables as
// `interval,lo,hi,count,freq,reference`.

inline void write_orbit_csv(std::ostream& os, const ExactOrbit& o) {
    os << "step,value\n";
    for (size_t k = 0; k < o.points.size(); ++k) os << k << "," << o.points[k].str() << "\n";
}

inline void write_orbit_csv(std::ostream& os, const FloatOrbit& o) {
    os << "step,value\n";
    os.precision(17);
    for (size_t k = 0; k < o.points.size(); ++k) os << k << "," << o.points[k] << "\n";
}

inline void write_frequency_csv(std::ostream& os, const FrequencyTable& t) {
    os << "interval,lo,hi,count,freq,reference\n";
    os.precision(17);
    for (size_t i = 0; i < t.counts.size(); ++i) {
        os << i << "," << t.boundaries[i].str() << "," << t.boundaries[i + 1].str() << ","
           << t.counts[i] << "," << t.freq[i] << ",";
        if (i < t.reference.size()) os << t.reference[i];
        os << "\n";
    }
}

}  // namespace subdyn
