#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "term.hpp"

namespace subdyn {

/// Continuous piecewise-linear function [0,1] -> [0,1] with integer
/// coefficients (a McNaughton function of one variable). Breakpoints
/// 0 = q_0 < q_1 < ... < q_r = 1; piece i is a_i*x + c_i on [q_{i-1}, q_i].
///
/// Values are always canonical: adjacent pieces lying on the same line are
/// merged, so breakpoints 1..r-1 are exactly the nondifferentiability points.
class PLFunc {
public:
    using Piece = std::pair<Int, Int>;  // (slope, intercept)

    /// Validates continuity, range, and endpoint conventions, then merges
    /// collinear adjacent pieces.
    static PLFunc make(std::vector<Rat> breakpoints, std::vector<Piece> pieces) {
        if (breakpoints.size() < 2 || pieces.size() + 1 != breakpoints.size())
            throw std::invalid_argument("PLFunc: need r+1 breakpoints and r pieces");
        if (breakpoints.front() != Rat(0) || breakpoints.back() != Rat(1))
            throw std::invalid_argument("PLFunc: domain must be exactly [0,1]");
        for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
            if (!(breakpoints[i] < breakpoints[i + 1]))
                throw std::invalid_argument("PLFunc: breakpoints must be strictly increasing");
        auto at = [&](size_t i, const Rat& x) { return Rat(pieces[i].first) * x + Rat(pieces[i].second); };
        for (size_t i = 0; i + 1 < pieces.size(); ++i)
            if (at(i, breakpoints[i + 1]) != at(i + 1, breakpoints[i + 1]))
                throw std::invalid_argument("PLFunc: pieces disagree at a shared breakpoint");
        for (size_t i = 0; i < pieces.size(); ++i) {
            for (const Rat& e : {at(i, breakpoints[i]), at(i, breakpoints[i + 1])})
                if (e < Rat(0) || e > Rat(1))
                    throw std::invalid_argument("PLFunc: values leave [0,1]");
        }
        // Canonicalize: equal coefficient pairs on adjacent intervals are the
        // same line (continuity makes line equality equivalent to pair equality).
        std::vector<Rat> bp{breakpoints.front()};
        std::vector<Piece> ps;
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (!ps.empty() && ps.back() == pieces[i]) {
                bp.back() = breakpoints[i + 1];
            } else {
                ps.push_back(pieces[i]);
                bp.push_back(breakpoints[i + 1]);
            }
        }
        PLFunc f;
        f.bp_ = std::move(bp);
        f.pieces_ = std::move(ps);
        return f;
    }

    /// Builds the PL function through consecutive graph vertices; slopes and
    /// intercepts must come out integral.
    static PLFunc through_points(const std::vector<std::pair<Rat, Rat>>& pts) {
        if (pts.size() < 2) throw std::invalid_argument("PLFunc: need at least two points");
        std::vector<Rat> bp;
        std::vector<Piece> ps;
        for (size_t i = 0; i < pts.size(); ++i) bp.push_back(pts[i].first);
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            Rat dx = pts[i + 1].first - pts[i].first;
            if (!(dx > Rat(0))) throw std::invalid_argument("PLFunc: x-coordinates must increase");
            Rat a = (pts[i + 1].second - pts[i].second) / dx;
            Rat c = pts[i].second - a * pts[i].first;
            if (!a.is_integer() || !c.is_integer())
                throw std::invalid_argument("PLFunc: non-integer coefficients through given points");
            ps.emplace_back(a.num(), c.num());
        }
        return make(std::move(bp), std::move(ps));
    }

    static PLFunc identity() { return make({Rat(0), Rat(1)}, {{1, 0}}); }
    static PLFunc flip() { return make({Rat(0), Rat(1)}, {{-1, 1}}); }
    static PLFunc constant(int v) { return make({Rat(0), Rat(1)}, {{0, v}}); }

    const std::vector<Rat>& breakpoints() const { return bp_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    size_t piece_count() const { return pieces_.size(); }

    /// Index of a piece whose interval contains x (the left piece at interior
    /// breakpoints; continuity makes the value independent of the choice).
    size_t piece_index(const Rat& x) const {
        if (x < Rat(0) || x > Rat(1)) throw std::domain_error("PLFunc: argument outside [0,1]");
        auto it = std::lower_bound(bp_.begin() + 1, bp_.end(), x);
        return static_cast<size_t>(it - bp_.begin()) - 1;
    }

    Rat operator()(const Rat& x) const {
        const Piece& p = pieces_[piece_index(x)];
        return Rat(p.first) * x + Rat(p.second);
    }

    friend bool operator==(const PLFunc& f, const PLFunc& g) {
        return f.bp_ == g.bp_ && f.pieces_ == g.pieces_;
    }

private:
    PLFunc() = default;
    std::vector<Rat> bp_;
    std::vector<Piece> pieces_;
};

inline Rat eval_pl(const PLFunc& f, const Rat& x) { return f(x); }

/// Canonical forms compared fieldwise; equivalent to pointwise equality.
inline bool pl_equal(const PLFunc& f, const PLFunc& g) { return f == g; }

namespace detail {

// Union of two breakpoint lists (both contain 0 and 1).
inline std::vector<Rat> merge_breakpoints(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Lukasiewicz binary connectives on PLFuncs share one skeleton: form the
// integer-coefficient line h on every interval of the common refinement,
// split where h crosses the clamp level, then clamp piecewise. Crossing
// points are exact rational roots of integer-coefficient equations.
//   conj: h = f+g-1, clamp below at 0 (result = max(0,h))
//   impl: h = 1-f+g, clamp above at 1 (result = min(1,h))
template <class MakeLine, class Clamped>
PLFunc luk_combine(const PLFunc& f, const PLFunc& g, MakeLine line, const PLFunc::Piece& clamp_line,
                   const Rat& level, Clamped keeps_h) {
    std::vector<Rat> base = merge_breakpoints(f.breakpoints(), g.breakpoints());
    std::set<Rat> grid(base.begin(), base.end());
    for (size_t k = 0; k + 1 < base.size(); ++k) {
        const Rat& l = base[k];
        const Rat& r = base[k + 1];
        PLFunc::Piece h = line(f.pieces()[f.piece_index(l + (r - l) / Rat(2))],
                               g.pieces()[g.piece_index(l + (r - l) / Rat(2))]);
        if (h.first == 0) continue;
        Rat hl = Rat(h.first) * l + Rat(h.second);
        Rat hr = Rat(h.first) * r + Rat(h.second);
        if ((hl < level && level < hr) || (hr < level && level < hl))
            grid.insert((level - Rat(h.second)) / Rat(h.first));
    }
    std::vector<Rat> bp(grid.begin(), grid.end());
    std::vector<PLFunc::Piece> pieces;
    pieces.reserve(bp.size() - 1);
    for (size_t k = 0; k + 1 < bp.size(); ++k) {
        Rat mid = bp[k] + (bp[k + 1] - bp[k]) / Rat(2);
        PLFunc::Piece h = line(f.pieces()[f.piece_index(mid)], g.pieces()[g.piece_index(mid)]);
        Rat hmid = Rat(h.first) * mid + Rat(h.second);
        pieces.push_back(keeps_h(hmid) ? h : clamp_line);
    }
    return PLFunc::make(std::move(bp), std::move(pieces));
}

}  // namespace detail

/// f ⋆ g = max(0, f+g-1), pointwise.
inline PLFunc luk_conj(const PLFunc& f, const PLFunc& g) {
    return detail::luk_combine(
        f, g,
        [](const PLFunc::Piece& pf, const PLFunc::Piece& pg) {
            return PLFunc::Piece{pf.first + pg.first, pf.second + pg.second - 1};
        },
        PLFunc::Piece{0, 0}, Rat(0), [](const Rat& h) { return h >= Rat(0); });
}

/// f → g = min(1, 1-f+g), pointwise.
inline PLFunc luk_impl(const PLFunc& f, const PLFunc& g) {
    return detail::luk_combine(
        f, g,
        [](const PLFunc::Piece& pf, const PLFunc::Piece& pg) {
            return PLFunc::Piece{pg.first - pf.first, Int(1) - pf.second + pg.second};
        },
        PLFunc::Piece{0, 1}, Rat(1), [](const Rat& h) { return h <= Rat(1); });
}

/// 1 - f (Łukasiewicz negation; no clamping needed since f maps into [0,1]).
inline PLFunc luk_neg(const PLFunc& f) {
    std::vector<PLFunc::Piece> pieces;
    pieces.reserve(f.piece_count());
    for (const auto& [a, c] : f.pieces()) pieces.push_back({-a, Int(1) - c});
    return PLFunc::make(f.breakpoints(), std::move(pieces));
}

/// f ∘ g. Breakpoints: g's breakpoints plus g-preimages of f's breakpoints.
inline PLFunc compose(const PLFunc& f, const PLFunc& g) {
    std::set<Rat> grid(g.breakpoints().begin(), g.breakpoints().end());
    for (size_t i = 0; i < g.piece_count(); ++i) {
        const auto& [a, c] = g.pieces()[i];
        if (a == 0) continue;
        const Rat& u = g.breakpoints()[i];
        const Rat& v = g.breakpoints()[i + 1];
        for (const Rat& b : f.breakpoints()) {
            Rat x = (b - Rat(c)) / Rat(a);
            if (u < x && x < v) grid.insert(x);
        }
    }
    std::vector<Rat> bp(grid.begin(), grid.end());
    std::vector<PLFunc::Piece> pieces;
    pieces.reserve(bp.size() - 1);
    for (size_t k = 0; k + 1 < bp.size(); ++k) {
        Rat mid = bp[k] + (bp[k + 1] - bp[k]) / Rat(2);
        const auto& [ag, cg] = g.pieces()[g.piece_index(mid)];
        // No f-breakpoint lies in the interior of g[interval], so the piece
        // of f at g(mid) represents f on the whole image.
        const auto& [af, cf] = f.pieces()[f.piece_index(Rat(ag) * mid + Rat(cg))];
        pieces.push_back({af * ag, af * cg + cf});
    }
    return PLFunc::make(std::move(bp), std::move(pieces));
}

/// Compiles a one-variable term to its PL representation. Proceeds
/// structurally on the sugar-free form; eval_pl(compile(t), x) equals
/// eval_term(t, [x]) for every rational x in [0,1].
inline PLFunc compile(const TermPtr& t) {
    int mv = t->max_var_index();
    if (mv > 0)
        throw ArityError("compile: term uses x" + std::to_string(mv) + "; only x0 is supported");
    struct Rec {
        static PLFunc go(const TermPtr& u) {
            using K = Term::Kind;
            switch (u->kind()) {
                case K::Var: return PLFunc::identity();
                case K::Const0: return PLFunc::constant(0);
                case K::Const1: return PLFunc::constant(1);
                case K::Conj: return luk_conj(go(u->lhs()), go(u->rhs()));
                case K::Impl: return luk_impl(go(u->lhs()), go(u->rhs()));
                default: throw std::logic_error("compile: sugar survived expansion");
            }
        }
    };
    return Rec::go(expand_sugar(t));
}

}  // namespace subdyn
