#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "boolean.hpp"
#include "classify.hpp"
#include "corpus_data.hpp"
#include "plfunc.hpp"
#include "product.hpp"
#include "serialize.hpp"

namespace subdyn {

/// Expected analysis results frozen into the corpus. All exact fields are
/// compared exactly by the test suites; `source` records, per field, whether
/// the value was transcribed from the source material ("reference") or
/// computed by an independent oracle ("derived").
struct CorpusExpected {
    std::optional<bool> invertible, generic, ergodic, mixing, exact;
    std::optional<std::vector<Rat>> q0, stabilized, density;
    std::optional<std::vector<std::vector<Rat>>> matrix;
    std::optional<unsigned> period;
    std::optional<FracRegime> regime;
    std::optional<Int> permutation_order;
    std::map<std::string, std::string> source;
};

struct NamedMap {
    std::string name;
    std::variant<std::monostate, PLFunc, FracMap, BoolSubst> map;
    CorpusExpected expected;

    bool is_pl() const { return std::holds_alternative<PLFunc>(map); }
    bool is_frac() const { return std::holds_alternative<FracMap>(map); }
    bool is_bool() const { return std::holds_alternative<BoolSubst>(map); }
    const PLFunc& pl() const { return std::get<PLFunc>(map); }
    const FracMap& frac() const { return std::get<FracMap>(map); }
    const BoolSubst& boolsub() const { return std::get<BoolSubst>(map); }
};

namespace detail {

inline FracRegime regime_from_string(const std::string& s) {
    if (s == "AttractsToZero") return FracRegime::AttractsToZero;
    if (s == "Exact") return FracRegime::Exact;
    if (s == "GenericNotErgodic") return FracRegime::GenericNotErgodic;
    throw std::invalid_argument("corpus: unknown regime '" + s + "'");
}

inline CorpusExpected expected_from_json(const json& j) {
    CorpusExpected e;
    if (j.contains("classification")) {
        const json& c = j.at("classification");
        if (c.contains("invertible")) e.invertible = c.at("invertible").get<bool>();
        if (c.contains("generic")) e.generic = c.at("generic").get<bool>();
        if (c.contains("ergodic")) e.ergodic = c.at("ergodic").get<bool>();
        if (c.contains("mixing")) e.mixing = c.at("mixing").get<bool>();
        if (c.contains("exact")) e.exact = c.at("exact").get<bool>();
    }
    if (j.contains("q0")) e.q0 = j.at("q0").get<std::vector<Rat>>();
    if (j.contains("stabilized")) e.stabilized = j.at("stabilized").get<std::vector<Rat>>();
    if (j.contains("density")) e.density = j.at("density").get<std::vector<Rat>>();
    if (j.contains("matrix")) e.matrix = j.at("matrix").get<std::vector<std::vector<Rat>>>();
    if (j.contains("period")) e.period = j.at("period").get<unsigned>();
    if (j.contains("regime")) e.regime = regime_from_string(j.at("regime").get<std::string>());
    if (j.contains("permutation_order")) e.permutation_order = Int(j.at("permutation_order").get<long long>());
    return e;
}

}  // namespace detail

/// Parses a corpus document (see data/corpus.json for the shipped one).
inline std::vector<NamedMap> load_corpus_json(const json& doc) {
    std::vector<NamedMap> out;
    for (const json& e : doc.at("maps")) {
        NamedMap nm;
        nm.name = e.at("name").get<std::string>();
        std::string kind = e.at("kind").get<std::string>();
        if (kind == "plfunc") {
            std::vector<std::pair<Rat, Rat>> pts;
            for (const json& p : e.at("points"))
                pts.emplace_back(Rat::parse(p.at(0).get<std::string>()),
                                 Rat::parse(p.at(1).get<std::string>()));
            nm.map = PLFunc::through_points(pts);
        } else if (kind == "fracmap") {
            nm.map = FracMap(e.at("a").get<long long>(), e.at("b").get<long long>());
        } else if (kind == "boolsubst") {
            nm.map = boolsubst_from_json(e);
        } else {
            throw std::invalid_argument("corpus: unknown kind '" + kind + "'");
        }
        if (e.contains("expected")) nm.expected = detail::expected_from_json(e.at("expected"));
        if (e.contains("source"))
            nm.expected.source = e.at("source").get<std::map<std::string, std::string>>();
        out.push_back(std::move(nm));
    }
    return out;
}

/// The built-in corpus (embedded copy of data/corpus.json), parsed once.
inline const std::vector<NamedMap>& corpus() {
    static const std::vector<NamedMap> maps = load_corpus_json(json::parse(corpus_json_text()));
    return maps;
}

inline const NamedMap* corpus_find(std::string_view name) {
    for (const NamedMap& m : corpus())
        if (m.name == name) return &m;
    return nullptr;
}

/// Lookup that throws with the list of valid names on a miss.
inline const NamedMap& corpus_get(std::string_view name) {
    if (const NamedMap* m = corpus_find(name)) return *m;
    std::string msg = "corpus: no map named '" + std::string(name) + "'; available:";
    for (const NamedMap& m : corpus()) msg += " " + m.name;
    throw std::invalid_argument(msg);
}

}  // namespace subdyn
