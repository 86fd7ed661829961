#pragma once

#include <string>

#include <json.hpp>

#include "triqubit/canonical.hpp"
#include "triqubit/classify.hpp"
#include "triqubit/four_qubit.hpp"
#include "triqubit/invariants.hpp"
#include "triqubit/state.hpp"

namespace triqubit {

using Json = nlohmann::ordered_json;

/// Parses a file, rethrowing parse failures as InputError with the
/// parser's line diagnostic.
Json load_json_file(const std::string& path);

/// State schema: {"n": 3, "amplitudes": [[re, im] x 8]} with amplitudes in
/// lexicographic index order; n = 4 uses 16 entries.
int state_arity(const Json& j);
PureState3 read_state3(const Json& j);
PureState4 read_state4(const Json& j);

Json state_to_json(const PureState3& s);
Json state_to_json(const PureState4& s);

Json to_json(const GaugeRecord& g);
Json to_json(const Gauge4& g);
Json to_json(const CanonicalForm& f);
Json to_json(const SymmetricForm& f);
Json to_json(const GhzDecomposition& f);
Json to_json(const WeakAsymmetricForm& f);
Json to_json(const ProductDecomposition& d);
Json to_json(const TwelveTermForm& f);
Json to_json(const RealBasisResult& r);
Json invariants_report(const InvariantSet& s);
Json classification_report(const PureState3& state, double eps);

/// Serializes with keys in insertion order and every float printed with 17
/// significant digits, so equal inputs give byte-identical output.
std::string dump_fixed(const Json& j);

/// Flat "path = value" rendering for the table output format.
std::string dump_table(const Json& j);

}  // namespace triqubit
