#include "json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace edfforge {

using nlohmann::json;

json to_json(const WitnessDocument& doc, const std::vector<ArcTranscript>* transcript) {
    const EdfWitness& w = doc.witness;
    json params = {{"n", w.params.n}, {"m", w.params.m}, {"l", w.params.l},
                   {"lambda", w.params.lambda}};
    if (doc.c) params["c"] = *doc.c;

    json vertices = json::array();
    for (int v = 0; v < w.vertex_count; ++v) vertices.push_back(v);
    json arcs = json::array();
    for (auto [i, j] : w.arcs) arcs.push_back(json::array({i, j}));

    json family = json::array();
    for (const ZSubset& s : w.family.sets()) family.push_back(s.elements());

    json out = {{"version", 1},
                {"params", params},
                {"digraph", {{"vertices", vertices}, {"arcs", arcs}}},
                {"family", family}};

    if (transcript) {
        json t = json::array();
        for (const ArcTranscript& a : *transcript) {
            json entry = {{"arc", json::array({a.arc.first, a.arc.second})}};
            if (a.interval) {
                entry["interval"] = json::array({a.interval->first, a.interval->second});
            } else {
                json residues = json::array();
                for (const auto& [r, count] : a.diffs.counts())
                    for (std::int64_t i = 0; i < count; ++i) residues.push_back(r);
                entry["residues"] = residues;
            }
            t.push_back(entry);
        }
        out["transcript"] = t;
    }
    return out;
}

WitnessDocument witness_from_json(const json& j) {
    if (!j.is_object() || j.value("version", 0) != 1)
        throw std::invalid_argument("witness_from_json: unsupported or missing version");
    const json& params = j.at("params");
    EdfParams p{params.at("n").get<Residue>(), params.at("m").get<int>(),
                params.at("l").get<int>(), params.at("lambda").get<std::int64_t>()};

    const json& dg = j.at("digraph");
    const int m = static_cast<int>(dg.at("vertices").size());
    std::vector<std::pair<int, int>> arcs;
    for (const json& a : dg.at("arcs")) {
        if (!a.is_array() || a.size() != 2)
            throw std::invalid_argument("witness_from_json: malformed arc");
        arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    }

    std::vector<ZSubset> sets;
    for (const json& s : j.at("family")) sets.emplace_back(p.n, s.get<std::vector<Residue>>());

    WitnessDocument doc{EdfWitness{p, m, std::move(arcs), SetFamily(p.n, std::move(sets))},
                        std::nullopt};
    if (params.contains("c")) doc.c = params.at("c").get<int>();
    return doc;
}

void write_witness_file(const std::string& path, const WitnessDocument& doc,
                        const std::vector<ArcTranscript>* transcript) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << to_json(doc, transcript).dump(2) << '\n';
}

WitnessDocument read_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
    try {
        return witness_from_json(j);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad witness payload: ") + e.what());
    }
}

}  // namespace edfforge
