#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "boolean.hpp"
#include "classify.hpp"
#include "dynamics.hpp"
#include "markov.hpp"
#include "plfunc.hpp"
#include "product.hpp"
#include "rational.hpp"
#include "term.hpp"

// JSON conventions: exact rationals are "n/d" strings (integers without the
// "/1"), never floats; floats appear only for genuinely floating quantities
// (frequencies, float orbits, derivative minima).

namespace subdyn {

using json = nlohmann::json;

inline void to_json(json& j, const Rat& r) { j = r.str(); }
inline void from_json(const json& j, Rat& r) { r = Rat::parse(j.get<std::string>()); }

// cpp_int carried as a JSON number when it fits in 64 bits, else a string.
inline json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(v.convert_to<long long>());
    return json(v.str());
}

inline void to_json(json& j, const PLFunc& f) {
    j = json::object();
    j["breakpoints"] = f.breakpoints();
    json pieces = json::array();
    for (const auto& [a, c] : f.pieces()) pieces.push_back({int_to_json(a), int_to_json(c)});
    j["pieces"] = std::move(pieces);
}

inline PLFunc plfunc_from_json(const json& j) {
    std::vector<Rat> bp = j.at("breakpoints").get<std::vector<Rat>>();
    std::vector<PLFunc::Piece> pieces;
    for (const json& p : j.at("pieces"))
        pieces.emplace_back(Int(p.at(0).get<long long>()), Int(p.at(1).get<long long>()));
    return PLFunc::make(std::move(bp), std::move(pieces));
}

inline void to_json(json& j, const Partition& p) { j = json{{"points", p.points}}; }

inline void to_json(json& j, const MarkovSystem& m) {
    j = json::object();
    j["partition"] = m.partition;
    json slopes = json::array();
    for (const Int& a : m.slopes) slopes.push_back(int_to_json(a));
    j["slopes"] = std::move(slopes);
    j["graph"] = m.graph;
    j["matrix"] = m.matrix;
    j["lengths"] = m.lengths;
}

inline void to_json(json& j, const GraphAnalysis& g) {
    j = json{{"strongly_connected", g.strongly_connected},
             {"period", g.period},
             {"primitive", g.primitive}};
}

inline void to_json(json& j, const DensityVec& d) { j = d.values; }

inline void to_json(json& j, const Classification& c) {
    j = json::object();
    j["invertible"] = c.invertible;
    j["generic"] = c.generic;
    j["ergodic"] = c.ergodic;
    j["mixing"] = c.mixing;
    j["exact"] = c.exact;
    j["density"] = c.density ? json(*c.density) : json(nullptr);
    j["diagnostics"] = json{{"strongly_connected", c.diagnostics.strongly_connected},
                            {"period", c.diagnostics.period},
                            {"primitive", c.diagnostics.primitive},
                            {"has_flat_piece", c.diagnostics.has_flat_piece}};
}

inline void to_json(json& j, const ExactOrbit& o) {
    j = json::object();
    j["start"] = o.start;
    j["points"] = o.points;
    j["eventually_periodic"] =
        o.cycle ? json{{"preperiod", o.cycle->first}, {"period", o.cycle->second}} : json(nullptr);
}

inline void to_json(json& j, const FloatOrbit& o) {
    j = json{{"start", o.start}, {"points", o.points}};
}

inline void to_json(json& j, const FrequencyTable& t) {
    j = json::object();
    j["boundaries"] = t.boundaries;
    j["counts"] = t.counts;
    j["total"] = t.total;
    j["freq"] = t.freq;
    j["reference"] = t.reference.empty() ? json(nullptr) : json(t.reference);
}

inline void to_json(json& j, const FracMap& m) {
    j = json{{"a", m.a()}, {"b", m.b()}, {"q", m.q()}};
}

inline void to_json(json& j, const CFExpansion& e) {
    j = json::array();
    for (const Int& d : e.digits) j.push_back(int_to_json(d));
}

inline void to_json(json& j, const BoolSubst& b) {
    j = json::object();
    j["n"] = b.n;
    std::vector<std::string> terms;
    for (const TermPtr& t : b.terms) terms.push_back(to_string(t));
    j["terms"] = std::move(terms);
}

inline BoolSubst boolsubst_from_json(const json& j) {
    BoolSubst b;
    b.n = j.at("n").get<unsigned>();
    for (const json& t : j.at("terms")) b.terms.push_back(parse(t.get<std::string>()));
    validate(b);
    return b;
}

inline void to_json(json& j, const BoolClassification& c) {
    j = json::object();
    j["invertible"] = c.invertible;
    j["permutation_order"] = c.permutation_order ? int_to_json(*c.permutation_order) : json(nullptr);
    j["generic"] = c.generic;
}

inline void to_json(json& j, const PointMap& pm) {
    j = json{{"n", pm.n}, {"table", pm.table}};
}

}  // namespace subdyn
