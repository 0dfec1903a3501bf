#pragma once

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "plfunc.hpp"
#include "rational.hpp"

namespace subdyn {

/// Interval partition 0 = q_0 < q_1 < ... < q_r = 1 of [0,1], with intervals
/// I_i = [q_{i-1}, q_i] indexed from 0. When produced by stabilize_partition
/// the point set is closed under the map and refines its linearity intervals.
struct Partition {
    static constexpr size_t npos = static_cast<size_t>(-1);

    std::vector<Rat> points;

    size_t intervals() const { return points.size() - 1; }
    Rat length(size_t i) const { return points[i + 1] - points[i]; }

    /// Interval index containing x; points on an interior boundary count for
    /// the left interval, and 0 for the leftmost (the fixed tie-break rule).
    size_t locate(const Rat& x) const {
        if (x < points.front() || x > points.back())
            throw std::domain_error("Partition: point outside [0,1]");
        auto it = std::lower_bound(points.begin() + 1, points.end(), x);
        return static_cast<size_t>(it - points.begin()) - 1;
    }

    /// Index of x in the point list, or npos.
    size_t point_index(const Rat& x) const {
        auto it = std::lower_bound(points.begin(), points.end(), x);
        if (it != points.end() && *it == x) return static_cast<size_t>(it - points.begin());
        return npos;
    }
};

/// Smallest point set containing the breakpoints of s and closed under s:
/// Q_0 = breakpoints, Q_{i+1} = Q_i ∪ s[Q_i], iterated to the fixed point.
/// Terminates because image denominators divide input denominators, so all
/// points live on the finite grid of denominator ≤ d = max denominator of Q_0.
inline Partition stabilize_partition(const PLFunc& s) {
    std::set<Rat> q(s.breakpoints().begin(), s.breakpoints().end());
    Int d = 1;
    for (const Rat& x : q) d = std::max(d, x.den());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Rat> snapshot(q.begin(), q.end());
        for (const Rat& x : snapshot) {
            Rat y = s(x);
            if (y.den() > d) throw std::logic_error("stabilize_partition: denominator bound violated");
            grew |= q.insert(y).second;
        }
    }
    return Partition{std::vector<Rat>(q.begin(), q.end())};
}

/// Markov data of s over a stabilized partition: per-interval slopes a_i,
/// the covering graph (edge i→j iff s[I_i] ⊇ I_j), the matrix with entries
/// |a_i|^{-1} on edges and 0 elsewhere, and the interval lengths.
struct MarkovSystem {
    Partition partition;
    std::vector<Int> slopes;
    std::vector<std::vector<size_t>> graph;  // adjacency, ascending targets
    std::vector<std::vector<Rat>> matrix;
    std::vector<Rat> lengths;

    size_t size() const { return lengths.size(); }
    bool edge(size_t i, size_t j) const {
        return std::binary_search(graph[i].begin(), graph[i].end(), j);
    }
    bool has_flat_piece() const {
        return std::any_of(slopes.begin(), slopes.end(), [](const Int& a) { return a == 0; });
    }
};

inline MarkovSystem build_markov(const PLFunc& s, const Partition& p) {
    size_t r = p.intervals();
    MarkovSystem m;
    m.partition = p;
    m.slopes.resize(r);
    m.graph.resize(r);
    m.matrix.assign(r, std::vector<Rat>(r, Rat(0)));
    m.lengths.resize(r);
    for (size_t i = 0; i < r; ++i) {
        const Rat& l = p.points[i];
        const Rat& rgt = p.points[i + 1];
        m.lengths[i] = rgt - l;
        Rat mid = l + (rgt - l) / Rat(2);
        const auto& [a, c] = s.pieces()[s.piece_index(mid)];
        m.slopes[i] = a;
        if (a == 0) continue;  // constant piece: image is a point, no covering
        Rat y0 = s(l), y1 = s(rgt);
        size_t lo = p.point_index(rat_min(y0, y1));
        size_t hi = p.point_index(rat_max(y0, y1));
        if (lo == Partition::npos || hi == Partition::npos)
            throw std::logic_error("build_markov: image endpoint missing from partition");
        Rat inv(Int(1), boost::multiprecision::abs(a));
        for (size_t j = lo; j < hi; ++j) {
            m.graph[i].push_back(j);
            m.matrix[i][j] = inv;
        }
    }
    return m;
}

struct GraphAnalysis {
    bool strongly_connected = false;
    unsigned period = 0;  // 0 when not strongly connected
    bool primitive = false;
};

namespace detail {

using BoolMat = std::vector<std::vector<char>>;

inline BoolMat bool_mul(const BoolMat& x, const BoolMat& y) {
    size_t r = x.size();
    BoolMat z(r, std::vector<char>(r, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t k = 0; k < r; ++k)
            if (x[i][k])
                for (size_t j = 0; j < r; ++j)
                    if (y[k][j]) z[i][j] = 1;
    return z;
}

inline bool all_positive(const BoolMat& x) {
    for (const auto& row : x)
        for (char v : row)
            if (!v) return false;
    return true;
}

// Positive-power primitivity: some A^k is entrywise positive, k bounded by
// Wielandt's (r-1)^2 + 1. Stops early on a positive power or when the power
// sequence repeats (after a repeat no new powers can appear).
inline bool primitive_by_powers(const BoolMat& a) {
    size_t r = a.size();
    size_t bound = (r - 1) * (r - 1) + 1;
    std::set<BoolMat> seen;
    BoolMat p = a;
    for (size_t k = 1; k <= bound; ++k) {
        if (all_positive(p)) return true;
        if (!seen.insert(p).second) return false;
        p = bool_mul(p, a);
    }
    return all_positive(p);
}

}  // namespace detail

/// Strong connectivity (paths of length ≥ 1 between every ordered pair, so a
/// single vertex needs a self-loop), period as the gcd of level defects over
/// a BFS layering, primitivity as (strongly connected ∧ period 1). The
/// positive-power criterion is recomputed independently as a tripwire.
inline GraphAnalysis graph_analysis(const MarkovSystem& m) {
    size_t r = m.size();
    detail::BoolMat adj(r, std::vector<char>(r, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j : m.graph[i]) adj[i][j] = 1;

    // Reachability by paths of length >= 1 (Floyd–Warshall on the adjacency).
    detail::BoolMat reach = adj;
    for (size_t k = 0; k < r; ++k)
        for (size_t i = 0; i < r; ++i)
            if (reach[i][k])
                for (size_t j = 0; j < r; ++j)
                    if (reach[k][j]) reach[i][j] = 1;
    bool sc = detail::all_positive(reach);

    GraphAnalysis ga;
    ga.strongly_connected = sc;
    if (sc) {
        std::vector<long long> level(r, -1);
        std::queue<size_t> bfs;
        bfs.push(0);
        level[0] = 0;
        while (!bfs.empty()) {
            size_t u = bfs.front();
            bfs.pop();
            for (size_t v : m.graph[u])
                if (level[v] < 0) {
                    level[v] = level[u] + 1;
                    bfs.push(v);
                }
        }
        long long g = 0;
        for (size_t u = 0; u < r; ++u)
            for (size_t v : m.graph[u]) g = std::gcd(g, level[u] + 1 - level[v]);
        ga.period = static_cast<unsigned>(g < 0 ? -g : g);
        ga.primitive = ga.period == 1;
    }

    if (detail::primitive_by_powers(adj) != ga.primitive)
        throw std::logic_error("graph_analysis: period and positive-power criteria disagree");
    return ga;
}

}  // namespace subdyn
