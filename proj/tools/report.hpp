// JSON and text renderings of the library results, shared by the CLI and its tests.
#ifndef POGCL_TOOLS_REPORT_HPP
#define POGCL_TOOLS_REPORT_HPP

#include "pogcl/catalog.hpp"
#include "pogcl/census.hpp"
#include "pogcl/feasibility.hpp"
#include "pogcl/syzygy.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace pogcl::report {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// {"schema_version": 1, "command": command}
Json envelope(const std::string& command);

Json rational(const Rational& q);
/// Inverse of rational(); throws std::invalid_argument.
Rational rational_from_json(const Json& j);

Json to_json(const SyzygyProfile& p);
Json to_json(const CensusReport& r);
Json to_json(const TauCrossCheck& t);
Json to_json(const BezoutAudit& b);
Json to_json(const CensusDiff& d);
Json to_json(const WeakCombinatorics& wc);
Json to_json(const ConstraintReport& r);
Json to_json(const Candidate& c);
Json to_json(const Elimination& e);
Json to_json(const Enumeration& e, bool with_eliminated);
Json to_json(const CapRow& row);
Json to_json(const ConicTrace& t);
Json to_json(const ClaimCheck& c);
Json to_json(const EntryResult& r);
Json to_json(const Arrangement& a);
Json to_json(const Gates& g);

/// One line, e.g. "plus-one generated, exponents (2,2), level 3, defect 2, tau 5".
std::string headline(const SyzygyProfile& p);
/// n2/t2/n3/higher counts on one line.
std::string census_counts(const CensusReport& r);
std::string point_type_name(PointType t);
std::string slack_cell(const ConstraintEntry& e);

}  // namespace pogcl::report

#endif
