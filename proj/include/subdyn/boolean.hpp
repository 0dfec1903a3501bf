#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "term.hpp"

namespace subdyn {

/// Substitution over n boolean variables: component i is a term over
/// x0..x_{n-1} read classically. Łukasiewicz semantics restricted to {0,1}
/// is classical logic, so the shared exact evaluator is reused as-is.
struct BoolSubst {
    unsigned n = 1;
    std::vector<TermPtr> terms;
};

inline void validate(const BoolSubst& b) {
    if (b.n < 1 || b.n > 26) throw std::invalid_argument("BoolSubst: n must be in [1,26]");
    if (b.terms.size() != b.n) throw std::invalid_argument("BoolSubst: need exactly n terms");
    for (const TermPtr& t : b.terms)
        if (t->max_var_index() >= static_cast<int>(b.n))
            throw ArityError("BoolSubst: term mentions a variable of index >= n");
}

/// The induced self-map of {0,1}^n as a full table. Points are encoded as
/// integers with x0 the least significant bit.
struct PointMap {
    unsigned n = 1;
    std::vector<std::uint32_t> table;  // size 2^n

    std::uint32_t size() const { return static_cast<std::uint32_t>(table.size()); }
};

inline PointMap point_map(const BoolSubst& b) {
    validate(b);
    std::uint32_t size = std::uint32_t{1} << b.n;
    PointMap pm;
    pm.n = b.n;
    pm.table.resize(size);
    std::vector<Rat> assignment(b.n);
    for (std::uint32_t k = 0; k < size; ++k) {
        for (unsigned i = 0; i < b.n; ++i) assignment[i] = Rat((k >> i) & 1u);
        std::uint32_t img = 0;
        for (unsigned i = 0; i < b.n; ++i)
            if (eval_term(b.terms[i], assignment) == Rat(1)) img |= std::uint32_t{1} << i;
        pm.table[k] = img;
    }
    return pm;
}

struct BoolClassification {
    bool invertible = false;
    std::optional<Int> permutation_order;  // lcm of cycle lengths, iff invertible
    bool generic = false;                  // single cycle through all 2^n points
};

/// Genericity for boolean substitutions: the point map is one 2^n-cycle
/// (equivalently: invertible and the generated group has order 2^n).
inline BoolClassification bool_classify(const BoolSubst& b) {
    PointMap pm = point_map(b);
    std::uint32_t size = pm.size();
    BoolClassification out;

    std::vector<char> hit(size, 0);
    bool bijective = true;
    for (std::uint32_t k = 0; k < size; ++k) {
        if (hit[pm.table[k]]) { bijective = false; break; }
        hit[pm.table[k]] = 1;
    }
    if (!bijective) return out;

    out.invertible = true;
    std::vector<char> visited(size, 0);
    Int order = 1;
    std::uint32_t cycles = 0, first_len = 0;
    for (std::uint32_t k = 0; k < size; ++k) {
        if (visited[k]) continue;
        ++cycles;
        std::uint32_t len = 0, cur = k;
        while (!visited[cur]) {
            visited[cur] = 1;
            cur = pm.table[cur];
            ++len;
        }
        if (cycles == 1) first_len = len;
        order = boost::multiprecision::lcm(order, Int(len));
    }
    out.permutation_order = order;
    out.generic = cycles == 1 && first_len == size;
    return out;
}

/// The binary adding machine truncated to n variables: x0 ↦ ¬x0 and
/// x_{i+1} ↦ ((x0 ∧ … ∧ x_i) ↔ ¬x_{i+1}). Its point map is k ↦ k+1 mod 2^n.
inline BoolSubst adding_machine(unsigned n) {
    if (n < 1) throw std::invalid_argument("adding_machine: n must be >= 1");
    BoolSubst b;
    b.n = n;
    b.terms.push_back(Term::neg(Term::var(0)));
    TermPtr chain = Term::var(0);
    for (unsigned i = 1; i < n; ++i) {
        b.terms.push_back(Term::iff(chain, Term::neg(Term::var(i))));
        if (i + 1 < n) chain = Term::min(chain, Term::var(i));
    }
    return b;
}

/// Bit string p_0 p_1 ... p_{n-1} (x0 leftmost).
inline std::string bits_string(std::uint32_t k, unsigned n) {
    std::string s(n, '0');
    for (unsigned i = 0; i < n; ++i)
        if ((k >> i) & 1u) s[i] = '1';
    return s;
}

/// CSV rows `input_bits,output_bits`.
inline void write_truth_table_csv(std::ostream& os, const PointMap& pm) {
    os << "input_bits,output_bits\n";
    for (std::uint32_t k = 0; k < pm.size(); ++k)
        os << bits_string(k, pm.n) << "," << bits_string(pm.table[k], pm.n) << "\n";
}

}  // namespace subdyn
