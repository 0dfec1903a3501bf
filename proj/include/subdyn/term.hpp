#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace subdyn {

/// Syntax error with the byte offset at which parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// A term refers to more variables than the context provides.
class ArityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable AST over the Łukasiewicz connectives. Conj (⋆) and Impl (→)
/// are primitive together with the constants; Neg, Min, Max and Power are
/// sugar with the classical MV expansions (see expand_sugar). Terms print
/// back in the shape they were parsed in.
class Term {
public:
    enum class Kind { Var, Const0, Const1, Conj, Impl, Neg, Min, Max, Power };

    static TermPtr var(unsigned index) { return node(Kind::Var, nullptr, nullptr, index, 0); }
    static TermPtr zero() { return node(Kind::Const0, nullptr, nullptr, 0, 0); }
    static TermPtr one() { return node(Kind::Const1, nullptr, nullptr, 0, 0); }
    static TermPtr conj(TermPtr a, TermPtr b) { return node(Kind::Conj, a, b, 0, 0); }
    static TermPtr impl(TermPtr a, TermPtr b) { return node(Kind::Impl, a, b, 0, 0); }
    static TermPtr neg(TermPtr a) { return node(Kind::Neg, a, nullptr, 0, 0); }
    static TermPtr min(TermPtr a, TermPtr b) { return node(Kind::Min, a, b, 0, 0); }
    static TermPtr max(TermPtr a, TermPtr b) { return node(Kind::Max, a, b, 0, 0); }
    static TermPtr power(TermPtr a, unsigned k) {
        if (k == 0) throw std::invalid_argument("Term::power: exponent must be positive");
        return node(Kind::Power, a, nullptr, 0, k);
    }
    /// (a → b) ∧ (b → a); convenience for the boolean substitutions.
    static TermPtr iff(TermPtr a, TermPtr b) { return min(impl(a, b), impl(b, a)); }

    Kind kind() const { return kind_; }
    unsigned var_index() const { return var_; }
    unsigned exponent() const { return k_; }
    const TermPtr& lhs() const { return lhs_; }
    const TermPtr& rhs() const { return rhs_; }

    /// Largest variable index occurring in the term, or -1 if none.
    int max_var_index() const {
        switch (kind_) {
            case Kind::Var: return static_cast<int>(var_);
            case Kind::Const0:
            case Kind::Const1: return -1;
            default: {
                int m = lhs_ ? lhs_->max_var_index() : -1;
                if (rhs_) m = std::max(m, rhs_->max_var_index());
                return m;
            }
        }
    }

    friend bool operator==(const Term& a, const Term& b) {
        if (a.kind_ != b.kind_ || a.var_ != b.var_ || a.k_ != b.k_) return false;
        auto eq = [](const TermPtr& x, const TermPtr& y) {
            if (!x || !y) return !x && !y;
            return *x == *y;
        };
        return eq(a.lhs_, b.lhs_) && eq(a.rhs_, b.rhs_);
    }

private:
    static TermPtr node(Kind k, TermPtr a, TermPtr b, unsigned var, unsigned pw) {
        auto t = std::make_shared<Term>();
        t->kind_ = k;
        t->lhs_ = std::move(a);
        t->rhs_ = std::move(b);
        t->var_ = var;
        t->k_ = pw;
        return t;
    }

    Kind kind_ = Kind::Const0;
    TermPtr lhs_, rhs_;
    unsigned var_ = 0;
    unsigned k_ = 0;

    friend struct std::default_delete<Term>;
public:
    Term() = default;  // for make_shared only; use the factories
};

/// Structural equality on term trees.
inline bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (!a || !b) return !a && !b;
    return *a == *b;
}

// ---------------------------------------------------------------------------
// Semantics: a⋆b = max(0, a+b−1), a→b = min(1, 1−a+b).

inline Rat luk_conj_val(const Rat& a, const Rat& b) { return rat_max(Rat(0), a + b - Rat(1)); }
inline Rat luk_impl_val(const Rat& a, const Rat& b) { return rat_min(Rat(1), Rat(1) - a + b); }

/// Rewrites sugar into the primitive fragment {Var, 0, 1, Conj, Impl}:
///   ¬t      = t → 0
///   x ∧ y   = x ⋆ (x → y)
///   x ∨ y   = ((x→y)→y) ∧ ((y→x)→x)
///   t^k     = t ⋆ t ⋆ … ⋆ t   (k factors, left fold)
inline TermPtr expand_sugar(const TermPtr& t) {
    using K = Term::Kind;
    auto expand_min = [](TermPtr a, TermPtr b) {
        return Term::conj(a, Term::impl(a, b));
    };
    switch (t->kind()) {
        case K::Var:
        case K::Const0:
        case K::Const1: return t;
        case K::Conj: return Term::conj(expand_sugar(t->lhs()), expand_sugar(t->rhs()));
        case K::Impl: return Term::impl(expand_sugar(t->lhs()), expand_sugar(t->rhs()));
        case K::Neg: return Term::impl(expand_sugar(t->lhs()), Term::zero());
        case K::Min: return expand_min(expand_sugar(t->lhs()), expand_sugar(t->rhs()));
        case K::Max: {
            TermPtr a = expand_sugar(t->lhs()), b = expand_sugar(t->rhs());
            TermPtr u = Term::impl(Term::impl(a, b), b);
            TermPtr w = Term::impl(Term::impl(b, a), a);
            return expand_min(u, w);
        }
        case K::Power: {
            TermPtr a = expand_sugar(t->lhs());
            TermPtr acc = a;
            for (unsigned i = 1; i < t->exponent(); ++i) acc = Term::conj(acc, a);
            return acc;
        }
    }
    throw std::logic_error("expand_sugar: unreachable");
}

/// Exact Łukasiewicz evaluation. Sugar is evaluated through its expansion's
/// value rules (child values are computed once), so eval_term(t, xs) equals
/// eval_term(expand_sugar(t), xs) without building the expanded tree.
inline Rat eval_term(const TermPtr& t, const std::vector<Rat>& assignment) {
    using K = Term::Kind;
    switch (t->kind()) {
        case K::Var: {
            if (t->var_index() >= assignment.size())
                throw ArityError("eval_term: unbound variable x" + std::to_string(t->var_index()));
            const Rat& v = assignment[t->var_index()];
            if (v < Rat(0) || v > Rat(1))
                throw std::domain_error("eval_term: assignment value outside [0,1]");
            return v;
        }
        case K::Const0: return Rat(0);
        case K::Const1: return Rat(1);
        case K::Conj: return luk_conj_val(eval_term(t->lhs(), assignment), eval_term(t->rhs(), assignment));
        case K::Impl: return luk_impl_val(eval_term(t->lhs(), assignment), eval_term(t->rhs(), assignment));
        case K::Neg: return luk_impl_val(eval_term(t->lhs(), assignment), Rat(0));
        case K::Min: {
            Rat a = eval_term(t->lhs(), assignment), b = eval_term(t->rhs(), assignment);
            return luk_conj_val(a, luk_impl_val(a, b));
        }
        case K::Max: {
            Rat a = eval_term(t->lhs(), assignment), b = eval_term(t->rhs(), assignment);
            Rat u = luk_impl_val(luk_impl_val(a, b), b);
            Rat w = luk_impl_val(luk_impl_val(b, a), a);
            return luk_conj_val(u, luk_impl_val(u, w));
        }
        case K::Power: {
            Rat a = eval_term(t->lhs(), assignment);
            Rat acc = a;
            for (unsigned i = 1; i < t->exponent(); ++i) acc = luk_conj_val(acc, a);
            return acc;
        }
    }
    throw std::logic_error("eval_term: unreachable");
}

// ---------------------------------------------------------------------------
// Parser. Grammar, by decreasing precedence:
//
//   impl  := or ("->" impl)?           right-associative
//   or    := and ("\/" and)*
//   and   := star ("/\" star)*
//   star  := power ("*" power)*
//   power := unary ("^" nat)*          nat >= 1
//   unary := "!" unary | atom
//   atom  := "x" nat | "0" | "1" | "(" impl ")"
//
// Whitespace is insignificant.

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    TermPtr run() {
        TermPtr t = impl();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return t;
    }

private:
    std::string_view s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
            ++pos_;
    }

    bool eat(std::string_view tok) {
        skip_ws();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    unsigned nat() {
        skip_ws();
        size_t start = pos_;
        unsigned long long acc = 0;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
            acc = acc * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
            if (acc > 1'000'000) fail("number too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return static_cast<unsigned>(acc);
    }

    TermPtr impl() {
        TermPtr lhs = lor();
        if (eat("->")) return Term::impl(lhs, impl());
        return lhs;
    }

    TermPtr lor() {
        TermPtr t = land();
        while (eat("\\/")) t = Term::max(t, land());
        return t;
    }

    TermPtr land() {
        TermPtr t = star();
        while (eat("/\\")) t = Term::min(t, star());
        return t;
    }

    TermPtr star() {
        TermPtr t = power();
        while (eat("*")) t = Term::conj(t, power());
        return t;
    }

    TermPtr power() {
        TermPtr t = unary();
        while (eat("^")) {
            unsigned k = nat();
            if (k == 0) fail("power exponent must be positive");
            t = Term::power(t, k);
        }
        return t;
    }

    TermPtr unary() {
        if (eat("!")) return Term::neg(unary());
        return atom();
    }

    TermPtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            TermPtr t = impl();
            if (!eat(")")) fail("expected ')'");
            return t;
        }
        if (c == '0') { ++pos_; return Term::zero(); }
        if (c == '1') { ++pos_; return Term::one(); }
        if (c == 'x') {
            ++pos_;
            if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9')
                fail("expected a variable index after 'x'");
            return Term::var(nat());
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) fail("unknown identifier");
        fail("unexpected character");
    }
};

}  // namespace detail

inline TermPtr parse(std::string_view text) { return detail::Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printer, inverse to the parser up to whitespace.

namespace detail {

// Precedence levels for printing; larger binds tighter.
inline int print_prec(Term::Kind k) {
    using K = Term::Kind;
    switch (k) {
        case K::Impl: return 1;
        case K::Max: return 2;
        case K::Min: return 3;
        case K::Conj: return 4;
        case K::Power: return 5;
        case K::Neg: return 6;
        default: return 7;
    }
}

inline void print_term(const Term& t, int context, std::string& out) {
    using K = Term::Kind;
    int p = print_prec(t.kind());
    bool parens = p < context;
    if (parens) out += '(';
    switch (t.kind()) {
        case K::Var: out += 'x'; out += std::to_string(t.var_index()); break;
        case K::Const0: out += '0'; break;
        case K::Const1: out += '1'; break;
        case K::Neg:
            out += '!';
            print_term(*t.lhs(), p, out);
            break;
        case K::Power:
            print_term(*t.lhs(), p, out);
            out += '^';
            out += std::to_string(t.exponent());
            break;
        case K::Conj:
            print_term(*t.lhs(), p, out);
            out += " * ";
            print_term(*t.rhs(), p + 1, out);
            break;
        case K::Min:
            print_term(*t.lhs(), p, out);
            out += " /\\ ";
            print_term(*t.rhs(), p + 1, out);
            break;
        case K::Max:
            print_term(*t.lhs(), p, out);
            out += " \\/ ";
            print_term(*t.rhs(), p + 1, out);
            break;
        case K::Impl:
            print_term(*t.lhs(), p + 1, out);
            out += " -> ";
            print_term(*t.rhs(), p, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace detail

inline std::string to_string(const Term& t) {
    std::string out;
    detail::print_term(t, 0, out);
    return out;
}

inline std::string to_string(const TermPtr& t) { return to_string(*t); }

}  // namespace subdyn
