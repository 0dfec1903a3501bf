#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "markov.hpp"
#include "plfunc.hpp"
#include "rational.hpp"

namespace subdyn {

/// Step density over the partition intervals: values v_i > 0 with
/// Σ v_i · len_i = 1 and v·E = v exactly.
struct DensityVec {
    std::vector<Rat> values;
};

struct Diagnostics {
    bool strongly_connected = false;
    unsigned period = 0;
    bool primitive = false;
    bool has_flat_piece = false;
};

/// Dynamical classification of a one-variable substitution. The predicates
/// satisfy exact ⇒ mixing ⇒ ergodic ⇒ generic, invertible maps have all four
/// false, and the density is present exactly when the map is ergodic.
struct Classification {
    bool invertible = false;
    bool generic = false;
    bool ergodic = false;
    bool mixing = false;
    bool exact = false;
    std::optional<DensityVec> density;
    Diagnostics diagnostics;
};

/// The only invertible one-variable substitutions are the identity and the
/// flip x ↦ 1−x; compare canonical forms against both.
inline bool is_invertible(const PLFunc& s) {
    return pl_equal(s, PLFunc::identity()) || pl_equal(s, PLFunc::flip());
}

/// v · E, the transfer (Perron–Frobenius) operator on step densities.
inline std::vector<Rat> apply_transfer(const MarkovSystem& m, const std::vector<Rat>& v) {
    size_t r = m.size();
    if (v.size() != r) throw std::invalid_argument("apply_transfer: dimension mismatch");
    std::vector<Rat> out(r, Rat(0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j : m.graph[i]) out[j] += v[i] * m.matrix[i][j];
    return out;
}

/// Exact invariant density: the left 1-eigenvector of E, i.e. the null space
/// of Eᵀ − I, solved by Gauss–Jordan elimination over the rationals. The
/// null space must be one-dimensional with a strictly positive representative
/// (guaranteed for irreducible E); the result is normalized by Σ v_i len_i = 1.
inline DensityVec invariant_density(const MarkovSystem& m) {
    if (m.has_flat_piece())
        throw std::invalid_argument("invariant_density: map has a flat piece");
    if (!graph_analysis(m).strongly_connected)
        throw std::invalid_argument("invariant_density: graph is not strongly connected");

    size_t r = m.size();
    std::vector<std::vector<Rat>> a(r, std::vector<Rat>(r, Rat(0)));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < r; ++j) a[i][j] = m.matrix[j][i];  // Eᵀ
        a[i][i] -= Rat(1);
    }

    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    size_t row = 0;
    for (size_t col = 0; col < r && row < r; ++col) {
        size_t pr = row;
        while (pr < r && a[pr][col].is_zero()) ++pr;
        if (pr == r) continue;
        std::swap(a[pr], a[row]);
        Rat inv = Rat(1) / a[row][col];
        for (size_t j = col; j < r; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < r; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Rat f = a[i][col];
            for (size_t j = col; j < r; ++j) a[i][j] -= f * a[row][j];
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    if (r - pivots.size() != 1)
        throw std::logic_error("invariant_density: eigenspace dimension != 1");

    std::vector<char> is_pivot(r, 0);
    for (auto& [pr, pc] : pivots) is_pivot[pc] = 1;
    size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    std::vector<Rat> v(r, Rat(0));
    v[free_col] = Rat(1);
    for (auto& [pr, pc] : pivots) v[pc] = -a[pr][free_col];

    bool any_neg = false, any_pos = false;
    for (const Rat& x : v) {
        if (x < Rat(0)) any_neg = true;
        if (x > Rat(0)) any_pos = true;
        if (x.is_zero()) throw std::logic_error("invariant_density: zero density entry");
    }
    if (any_neg && any_pos) throw std::logic_error("invariant_density: mixed-sign eigenvector");
    if (any_neg)
        for (Rat& x : v) x = -x;

    Rat total(0);
    for (size_t i = 0; i < r; ++i) total += v[i] * m.lengths[i];
    for (Rat& x : v) x /= total;

    if (apply_transfer(m, v) != v)
        throw std::logic_error("invariant_density: v·E != v after solve");
    return DensityVec{std::move(v)};
}

/// Full analysis bundle for one map; classify(s) is the classification part.
struct Analysis {
    MarkovSystem system;
    GraphAnalysis graph;
    Classification classification;
};

inline Analysis analyze_pl(const PLFunc& s) {
    Analysis a;
    a.system = build_markov(s, stabilize_partition(s));
    a.graph = graph_analysis(a.system);
    Classification& c = a.classification;
    c.invertible = is_invertible(s);
    c.generic = c.ergodic = !c.invertible && a.graph.strongly_connected;
    c.mixing = c.exact = !c.invertible && a.graph.primitive;
    c.diagnostics.strongly_connected = a.graph.strongly_connected;
    c.diagnostics.period = a.graph.period;
    c.diagnostics.primitive = a.graph.primitive;
    c.diagnostics.has_flat_piece = a.system.has_flat_piece();
    if (c.ergodic) c.density = invariant_density(a.system);
    return a;
}

inline Classification classify(const PLFunc& s) { return analyze_pl(s).classification; }

}  // namespace subdyn
