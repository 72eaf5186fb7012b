// JSON schema for EDF / c-CEDF / valuation payloads. One schema serves all
// three: {version, params:{n,m,l,lambda,c?}, digraph:{vertices,arcs},
// family:[[ints]], transcript?}. Integers are plain residues; the family
// order is the digraph vertex order. No floating point anywhere.
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "edfforge/edf.hpp"

namespace edfforge {

struct WitnessDocument {
    EdfWitness witness;
    std::optional<int> c;  // present for c-CEDF payloads
};

nlohmann::json to_json(const WitnessDocument& doc,
                       const std::vector<ArcTranscript>* transcript = nullptr);
WitnessDocument witness_from_json(const nlohmann::json& j);

void write_witness_file(const std::string& path, const WitnessDocument& doc,
                        const std::vector<ArcTranscript>* transcript = nullptr);
WitnessDocument read_witness_file(const std::string& path);

}  // namespace edfforge
