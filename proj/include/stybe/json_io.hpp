#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "stybe/algebra.hpp"
#include "stybe/poly_matrix.hpp"
#include "stybe/quantum.hpp"
#include "stybe/reflection.hpp"
#include "stybe/rmatrix.hpp"
#include "stybe/solution.hpp"

namespace stybe {

using Json = nlohmann::ordered_json;

// Readers throw StructuralError on malformed input.

Json load_json_file(const std::filesystem::path& path);

Json to_json(const Table& t);
Table table_from_json(const Json& rows, int n);

Json to_json(const NearBrace& nb);
NearBrace near_brace_from_json(const Json& j);
RingTable ring_from_json(const Json& j);
GroupTable group_from_json(const Json& rows, int n);

Json to_json(const SetSolution& sol);
SetSolution solution_from_json(const Json& j);

Json to_json(const ReflectionMap& k);
ReflectionMap reflection_from_json(const Json& j);

/// {"l1^2*t^1": "3/2", "1": "-1"}
Json to_json(const Poly& p);
/// Coefficients may be strings ("p/q") or integers.
Poly poly_from_json(const Json& j);

/// {"dim": d, "slots": [...], "entries": [[row, col, poly], ...]}
Json to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j);

/// {"depth": D, "slots": [...], "exact": bool, "coeffs": [matrix, ...]}
Json to_json(const SeriesOperator& s);
SeriesOperator series_from_json(const Json& j);

Json to_json(const StructureReport& r);
Json to_json(const BraidReport& r);
Json to_json(const SolutionDiagnostics& d);
Json to_json(const AdditionReport& r);
Json to_json(const ReflectionReport& r);
Json to_json(const EntryDiff& d);
Json to_json(const PropertyCheck& c);
Json to_json(const BasicProperties& b);
Json to_json(const TwistReport& t);
Json to_json(const OrderCheck& c);
Json to_json(const RttReport& r);
Json to_json(const Dressed& d);
Json to_json(const ReflectionEquationReport& r);
Json to_json(const ReflectionAlgebraReport& r);

}  // namespace stybe
