// subdyn: exact dynamical analysis of logic substitutions from the command
// line. Subcommands: analyze, orbit, birkhoff, product, boolean, corpus.
//
// Exit codes: 0 ok, 2 parse/parameter error, 3 arity error, 4 domain error,
// 5 resource cap exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "subdyn/subdyn.hpp"

namespace {

using namespace subdyn;

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

// Resolves a map argument: either `corpus:NAME` or a one-variable term.
PLFunc resolve_pl(const std::string& input, json& echo) {
    if (input.rfind("corpus:", 0) == 0) {
        const NamedMap& nm = corpus_get(input.substr(7));
        if (!nm.is_pl())
            throw std::invalid_argument("'" + nm.name + "' is not a piecewise-linear corpus map; " +
                                        "use `product` or `boolean` subcommands for it");
        echo["corpus_name"] = nm.name;
        return nm.pl();
    }
    TermPtr t = parse(input);
    echo["term"] = to_string(t);
    return compile(t);
}

Rat parse_start(const std::string& text) {
    Rat x;
    try {
        x = Rat::parse(text);
    } catch (const std::exception&) {
        throw std::domain_error("invalid start value '" + text + "'");
    }
    if (x < Rat(0) || x > Rat(1)) throw std::domain_error("start value outside [0,1]");
    return x;
}

void write_file_or_fail(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << content;
}

std::string classification_line(const Classification& c) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string s;
    s += "invertible: ";
    s += b(c.invertible);
    s += ", generic: ";
    s += b(c.generic);
    s += ", ergodic: ";
    s += b(c.ergodic);
    s += ", mixing: ";
    s += b(c.mixing);
    s += ", exact: ";
    s += b(c.exact);
    return s;
}

json analysis_report(const std::string& input, const Analysis& a, json echo, double elapsed) {
    json rep;
    rep["command"] = "analyze";
    rep["input"] = input;
    for (auto& [k, v] : echo.items()) rep[k] = v;
    rep["partition"] = a.system.partition.points;
    rep["system"] = a.system;
    rep["graph_analysis"] = a.graph;
    rep["classification"] = a.classification;
    json notes = json::array();
    if (a.classification.diagnostics.has_flat_piece)
        notes.push_back("map has a constant piece: the dual map is singular and every dynamical predicate is false");
    if (a.classification.invertible)
        notes.push_back("invertible one-variable substitutions (identity and flip) are never generic");
    rep["notes"] = notes;
    rep["elapsed_seconds"] = elapsed;
    return rep;
}

int cmd_analyze(const std::string& input, bool as_json) {
    Timer timer;
    json echo = json::object();
    PLFunc s = resolve_pl(input, echo);
    Analysis a = analyze_pl(s);
    json rep = analysis_report(input, a, echo, timer.seconds());
    if (as_json) {
        std::cout << rep.dump(2) << "\n";
        return 0;
    }
    std::cout << "input: " << input << "\n";
    std::cout << "map: " << json(s).dump() << "\n";
    std::cout << "partition:";
    for (const Rat& p : a.system.partition.points) std::cout << " " << p.str();
    std::cout << "\nslopes:";
    for (const Int& v : a.system.slopes) std::cout << " " << v.str();
    std::cout << "\nmatrix:\n";
    for (const auto& row : a.system.matrix) {
        std::cout << " ";
        for (const Rat& v : row) std::cout << " " << v.str();
        std::cout << "\n";
    }
    std::cout << "strongly connected: " << (a.graph.strongly_connected ? "true" : "false")
              << ", period: " << a.graph.period
              << ", primitive: " << (a.graph.primitive ? "true" : "false") << "\n";
    std::cout << classification_line(a.classification) << "\n";
    if (a.classification.density) {
        std::cout << "invariant density:";
        for (const Rat& v : a.classification.density->values) std::cout << " " << v.str();
        std::cout << "\n";
    }
    return 0;
}

int cmd_orbit(const std::string& input, const std::string& start, size_t steps, bool exact,
              bool as_json, const std::string& csv_path) {
    Timer timer;
    json echo = json::object();
    PLFunc s = resolve_pl(input, echo);
    Rat x0 = parse_start(start);

    json rep;
    rep["command"] = "orbit";
    rep["input"] = input;
    for (auto& [k, v] : echo.items()) rep[k] = v;
    rep["steps"] = steps;
    rep["exact"] = exact;

    std::ostringstream csv;
    if (exact) {
        ExactOrbit o = iterate_exact(s, x0, steps);
        write_orbit_csv(csv, o);
        rep["orbit"] = o;
        if (!as_json && csv_path.empty()) {
            std::cout << csv.str();
            if (o.cycle)
                std::cerr << "eventually periodic: preperiod " << o.cycle->first << ", period "
                          << o.cycle->second << "\n";
        }
    } else {
        FloatOrbit o = iterate_float(s, x0.to_double(), steps);
        write_orbit_csv(csv, o);
        rep["orbit"] = o;
        if (!as_json && csv_path.empty()) std::cout << csv.str();
    }
    if (!csv_path.empty()) write_file_or_fail(csv_path, csv.str());
    rep["elapsed_seconds"] = timer.seconds();
    if (as_json) std::cout << rep.dump(2) << "\n";
    return 0;
}

int cmd_birkhoff(const std::string& input, const std::optional<std::string>& start, size_t steps,
                 unsigned long long seed, bool as_json, const std::string& csv_path) {
    Timer timer;
    json echo = json::object();
    PLFunc s = resolve_pl(input, echo);
    double x0;
    if (start) {
        x0 = parse_start(*start).to_double();
    } else {
        std::mt19937_64 rng(seed);
        x0 = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        echo["seed"] = seed;
    }
    Analysis a = analyze_pl(s);
    FrequencyTable t =
        birkhoff_frequencies(s, x0, steps, a.system.partition, a.classification.density);

    json rep;
    rep["command"] = "birkhoff";
    rep["input"] = input;
    for (auto& [k, v] : echo.items()) rep[k] = v;
    rep["start"] = x0;
    rep["steps"] = steps;
    rep["table"] = t;
    if (!a.classification.ergodic)
        rep["notes"] = json::array({"map is not ergodic: frequencies have no invariant reference"});
    rep["elapsed_seconds"] = timer.seconds();

    std::ostringstream csv;
    write_frequency_csv(csv, t);
    if (!csv_path.empty()) write_file_or_fail(csv_path, csv.str());
    if (as_json) {
        std::cout << rep.dump(2) << "\n";
    } else if (csv_path.empty()) {
        std::cout << csv.str();
    }
    return 0;
}

int cmd_product_classify(long long a, long long b, bool as_json) {
    Timer timer;
    FracMap m(a, b);
    FracRegime r = frac_classify(m);
    if (as_json) {
        json rep;
        rep["command"] = "product classify";
        rep["map"] = m;
        rep["regime"] = regime_name(r);
        rep["elapsed_seconds"] = timer.seconds();
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "q = " << m.q().str() << ": " << regime_name(r) << "\n";
    }
    return 0;
}

int cmd_product_slowcf(long long a, long long b, const std::string& xtext, bool as_json) {
    Timer timer;
    FracMap m(a, b);
    if (m.q() != Rat(1))
        throw std::invalid_argument("slowcf requires q = a/b = 1 (the slow continued-fraction map)");
    Rat x = parse_start(xtext);
    if (x.is_zero()) throw std::domain_error("slowcf requires x in (0,1]");
    bool ok = slow_cf_check(x);
    bool block = block_frequency_check(x);
    Rat img = frac_eval(m, x);
    if (as_json) {
        json rep;
        rep["command"] = "product slowcf";
        rep["x"] = x;
        rep["image"] = img;
        rep["digits"] = cf_expand(x);
        rep["identity_holds"] = ok;
        rep["block_frequency_holds"] = block;
        rep["elapsed_seconds"] = timer.seconds();
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "s(" << x.str() << ") = " << img.str() << "; digits " << json(cf_expand(x)).dump()
                  << "; slow-CF identity " << (ok ? "ok" : "FAILED") << "; block frequency "
                  << (block ? "ok" : "FAILED") << "\n";
    }
    return ok && block ? 0 : 1;
}

int cmd_product_derivbound(long long a, long long b, size_t grid, bool as_json) {
    Timer timer;
    FracMap m(a, b);
    DerivBound d = deriv_bound_check(m, grid);
    if (as_json) {
        json rep;
        rep["command"] = "product derivbound";
        rep["map"] = m;
        rep["grid"] = grid;
        rep["min_abs_deriv"] = d.min_abs_deriv;
        rep["min_abs_second"] = d.min_abs_second;
        rep["reference"] = d.reference;
        rep["elapsed_seconds"] = timer.seconds();
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "q = " << m.q().str() << ": min |s'| = " << d.min_abs_deriv
                  << ", min |(s^2)'| = " << d.min_abs_second << ", (2q+1)^2 = " << d.reference
                  << "\n";
    }
    return 0;
}

int boolean_report(const BoolSubst& b, bool as_json, const std::string& csv_path) {
    Timer timer;
    PointMap pm = point_map(b);
    BoolClassification c = bool_classify(b);
    std::ostringstream csv;
    write_truth_table_csv(csv, pm);
    if (!csv_path.empty()) write_file_or_fail(csv_path, csv.str());
    if (as_json) {
        json rep;
        rep["command"] = "boolean";
        rep["substitution"] = b;
        rep["classification"] = c;
        if (b.n <= 10) rep["point_map"] = pm;
        rep["elapsed_seconds"] = timer.seconds();
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << "n = " << b.n << "\n";
        for (unsigned i = 0; i < b.n; ++i)
            std::cout << "  x" << i << " -> " << to_string(b.terms[i]) << "\n";
        std::cout << "invertible: " << (c.invertible ? "true" : "false");
        if (c.permutation_order) std::cout << ", order: " << c.permutation_order->str();
        std::cout << ", generic: " << (c.generic ? "true" : "false") << "\n";
    }
    return 0;
}

void check_bool_cap(unsigned n, unsigned cap) {
    if (n > cap)
        throw ResourceError("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                            " (raise with --max-n)");
}

int cmd_corpus_list() {
    for (const NamedMap& m : corpus()) {
        const char* kind = m.is_pl() ? "plfunc" : m.is_frac() ? "fracmap" : "boolsubst";
        std::cout << m.name << " (" << kind << ")\n";
    }
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"Dynamical analysis of logic substitutions (exact rational arithmetic)"};
    app.require_subcommand(1);

    std::string input, start, csv_path, terms_joined, xtext;
    std::optional<std::string> start_opt;
    bool as_json = false, exact = false;
    size_t steps = 1000, grid = 10000;
    long long fa = 1, fb = 1;
    unsigned bool_n = 1, max_n = 20;
    unsigned long long seed = 12345;

    auto* analyze = app.add_subcommand("analyze", "Markov analysis and classification of a one-variable substitution");
    analyze->add_option("input", input, "term over x0, or corpus:NAME")->required();
    analyze->add_flag("--json", as_json, "emit a JSON report");

    auto* orbit = app.add_subcommand("orbit", "iterate a substitution from a start point");
    orbit->add_option("input", input, "term over x0, or corpus:NAME")->required();
    orbit->add_option("--start", start, "start point, rational or decimal")->required();
    orbit->add_option("--steps", steps, "number of steps")->capture_default_str();
    orbit->add_flag("--exact", exact, "exact rational orbit with cycle detection");
    orbit->add_flag("--json", as_json, "emit a JSON report");
    orbit->add_option("--csv", csv_path, "write the orbit as CSV to this path");

    auto* birkhoff = app.add_subcommand("birkhoff", "empirical visit frequencies against the Markov partition");
    birkhoff->add_option("input", input, "term over x0, or corpus:NAME")->required();
    birkhoff->add_option("--start", start_opt, "start point (default: random, see --seed)");
    birkhoff->add_option("--steps", steps, "number of steps")->capture_default_str();
    birkhoff->add_option("--seed", seed, "seed for the random start")->capture_default_str();
    birkhoff->add_flag("--json", as_json, "emit a JSON report");
    birkhoff->add_option("--csv", csv_path, "write the frequency table as CSV to this path");

    auto* product = app.add_subcommand("product", "the fractional product-logic family");
    product->require_subcommand(1);
    auto add_ab = [&](CLI::App* cmd) {
        cmd->add_option("-a", fa, "numerator of q")->required();
        cmd->add_option("-b", fb, "denominator of q")->required();
        cmd->add_flag("--json", as_json, "emit a JSON report");
    };
    auto* pclassify = product->add_subcommand("classify", "regime of the map with q = a/b");
    add_ab(pclassify);
    auto* pslowcf = product->add_subcommand("slowcf", "verify the slow continued-fraction identities at a rational");
    add_ab(pslowcf);
    pslowcf->add_option("--x", xtext, "rational in (0,1]")->required();
    auto* pderiv = product->add_subcommand("derivbound", "grid minimum of |s'| and |(s^2)'|");
    add_ab(pderiv);
    pderiv->add_option("--grid", grid, "grid size")->capture_default_str();

    auto* boolean = app.add_subcommand("boolean", "finite classical substitutions on {0,1}^n");
    boolean->require_subcommand(1);
    auto* badding = boolean->add_subcommand("adding-machine", "the binary odometer on n variables");
    badding->add_option("-n", bool_n, "number of variables")->required();
    badding->add_flag("--json", as_json, "emit a JSON report");
    badding->add_option("--csv", csv_path, "write the truth table as CSV to this path");
    badding->add_option("--max-n", max_n, "resource cap on n")->capture_default_str();
    auto* banalyze = boolean->add_subcommand("analyze", "classify a substitution given by terms");
    banalyze->add_option("-n", bool_n, "number of variables")->required();
    banalyze->add_option("--terms", terms_joined, "semicolon-separated terms, component i maps x_i")->required();
    banalyze->add_flag("--json", as_json, "emit a JSON report");
    banalyze->add_option("--csv", csv_path, "write the truth table as CSV to this path");
    banalyze->add_option("--max-n", max_n, "resource cap on n")->capture_default_str();

    auto* corpus_cmd = app.add_subcommand("corpus", "list the named reference maps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the message; 0 for --help
        return code == 0 ? 0 : 2;
    }

    if (analyze->parsed()) return cmd_analyze(input, as_json);
    if (orbit->parsed()) return cmd_orbit(input, start, steps, exact, as_json, csv_path);
    if (birkhoff->parsed()) return cmd_birkhoff(input, start_opt, steps, seed, as_json, csv_path);
    if (pclassify->parsed()) return cmd_product_classify(fa, fb, as_json);
    if (pslowcf->parsed()) return cmd_product_slowcf(fa, fb, xtext, as_json);
    if (pderiv->parsed()) return cmd_product_derivbound(fa, fb, grid, as_json);
    if (badding->parsed()) {
        check_bool_cap(bool_n, max_n);
        return boolean_report(adding_machine(bool_n), as_json, csv_path);
    }
    if (banalyze->parsed()) {
        check_bool_cap(bool_n, max_n);
        BoolSubst b;
        b.n = bool_n;
        std::string::size_type pos = 0;
        while (pos <= terms_joined.size()) {
            auto next = terms_joined.find(';', pos);
            if (next == std::string::npos) next = terms_joined.size();
            b.terms.push_back(parse(terms_joined.substr(pos, next - pos)));
            pos = next + 1;
        }
        validate(b);
        return boolean_report(b, as_json, csv_path);
    }
    if (corpus_cmd->parsed()) return cmd_corpus_list();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const subdyn::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const subdyn::ArityError& e) {
        std::cerr << "arity error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 5;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
