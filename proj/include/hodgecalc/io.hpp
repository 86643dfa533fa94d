#pragma once

#include "hodgecalc/logext.hpp"
#include "hodgecalc/mhs.hpp"
#include "hodgecalc/neron.hpp"
#include "hodgecalc/quiver.hpp"
#include "hodgecalc/saito.hpp"
#include "hodgecalc/singularity.hpp"

#include <json.hpp>

namespace hodgecalc {

using Json = nlohmann::ordered_json;

// Matrices serialize as arrays of entry strings "a/b" or "a/b+c/d*i";
// decimals are rejected on input.
Json to_json(const Scalar& s);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const FlagFiltration& f);
Json to_json(const WeightFiltration& w);
Json to_json(const SplitMHS& h);
Json to_json(const DiskQuiver& q);
Json to_json(const PolarizedInput& in);
Json to_json(const ExtendedStructure& ext);
Json to_json(const NilpotentOrbit& orbit);
Json to_json(const SectionFamily& fam);
Json to_json(const Presentation& pres);
Json to_json(const ClosurePolynomial& poly);
Json to_json(const FiberClassification& cls);

Scalar scalar_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Subspace subspace_from_json(const Json& j);
FlagFiltration flag_from_json(const Json& j);
SplitMHS mhs_from_json(const Json& j);
DiskQuiver quiver_from_json(const Json& j);
PolarizedInput polarized_from_json(const Json& j);
NilpotentOrbit orbit_from_json(const Json& j);
SectionFamily sections_from_json(const Json& j);

struct Verdict {
    std::string name;
    bool pass = false;
    std::string witness; // nonempty when pass is false
};

struct Report {
    std::string command;
    std::string inputs_digest;
    Json results = Json::object();
    std::vector<Verdict> verdicts;

    bool all_pass() const;
    Json to_json() const;
};

/// FNV-1a digest of the raw input text, hex-printed.
std::string digest(const std::string& data);

} // namespace hodgecalc
