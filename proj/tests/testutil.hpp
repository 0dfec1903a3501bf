#pragma once

// Shared helpers for the test suite: deterministic random generators for
// rationals and terms, Farey-style enumeration, and (when SUBDYN_CLI_PATH is
// defined by the build) a harness that runs the real CLI binary.

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "subdyn/subdyn.hpp"

namespace testutil {

using namespace subdyn;

// All rationals p/q in [0,1] with q <= max_den, ascending.
inline std::vector<Rat> rationals_up_to_den(unsigned max_den) {
    std::set<Rat> seen;
    for (unsigned q = 1; q <= max_den; ++q)
        for (unsigned p = 0; p <= q; ++p) seen.insert(Rat(Int(p), Int(q)));
    return {seen.begin(), seen.end()};
}

inline Rat random_rat(std::mt19937_64& rng, unsigned max_den) {
    unsigned den = std::uniform_int_distribution<unsigned>(1, max_den)(rng);
    unsigned num = std::uniform_int_distribution<unsigned>(0, den)(rng);
    return Rat(Int(num), Int(den));
}

inline TermPtr random_term(std::mt19937_64& rng, unsigned depth, unsigned nvars = 1) {
    auto leaf = [&]() -> TermPtr {
        switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
            case 0: return Term::zero();
            case 1: return Term::one();
            default:
                return Term::var(std::uniform_int_distribution<unsigned>(0, nvars - 1)(rng));
        }
    };
    if (depth == 0) return leaf();
    switch (std::uniform_int_distribution<int>(0, 7)(rng)) {
        case 0: return leaf();
        case 1: return Term::neg(random_term(rng, depth - 1, nvars));
        case 2:
            return Term::conj(random_term(rng, depth - 1, nvars),
                              random_term(rng, depth - 1, nvars));
        case 3:
            return Term::impl(random_term(rng, depth - 1, nvars),
                              random_term(rng, depth - 1, nvars));
        case 4:
            return Term::min(random_term(rng, depth - 1, nvars),
                             random_term(rng, depth - 1, nvars));
        case 5:
            return Term::max(random_term(rng, depth - 1, nvars),
                             random_term(rng, depth - 1, nvars));
        default:
            return Term::power(random_term(rng, depth - 1, nvars),
                               std::uniform_int_distribution<unsigned>(1, 4)(rng));
    }
}

#ifdef SUBDYN_CLI_PATH

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI with the given argument string, capturing stdout.
inline CliResult run_cli(const std::string& args) {
    CliResult r;
    std::string cmd = std::string(SUBDYN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = ::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = ::pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

#endif

}  // namespace testutil
