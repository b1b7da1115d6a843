#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hilbeq/corpus.hpp"
#include "hilbeq/equations.hpp"
#include "hilbeq/grassmann.hpp"
#include "hilbeq/membership.hpp"
#include "hilbeq/polyring.hpp"
#include "hilbeq/quiver.hpp"

namespace hilbeq::io {

using nlohmann::json;

/// Reads and parses a JSON file; Error(IO) on open failure, Error(Parse) on bad JSON.
json read_json_file(const std::string& path);
/// Writes `j` followed by a newline; Error(IO) on failure.
void write_json_file(const std::string& path, const json& j);
/// Canonical text form used for files and stdout (2-space indent, sorted keys).
std::string dump(const json& j);

json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const json& j, int n);

/// {"n","d","field","basis":[[...]...]}; rows are basis vectors in monomial coordinates.
json subspace_to_json(const GradedSubspace& w);
GradedSubspace subspace_from_json(const json& j);

/// {"n","d","r","field","coords":[{"idx":[[e...]...],"val":"p/q"}...]}, zero coordinates omitted.
json plucker_to_json(const PluckerVector& v);
PluckerVector plucker_from_json(const json& j);

/// {"n","R","field","rho":[[...]],"M":[[[...]]...]}; beta is rebuilt from (rho, M).
json quiver_to_json(const QuiverPoint& q);
QuiverPoint quiver_from_json(const json& j);
json validation_to_json(const ValidationReport& rep);

/// Equation file.
json equations_to_json(const EquationBundle& b);
/// Loads the E forms, F symbols and Plücker relations of an equation file.
EquationSet equation_set_from_json(const json& j);

json verdict_to_json(const Verdict& v, const EquationSet& eqs);

/// Top-level array of {"kind","source","IR","IR1"}.
json corpus_to_json(const std::vector<CorpusPoint>& corpus);
std::vector<CorpusPoint> corpus_from_json(const json& j);

}  // namespace hilbeq::io
