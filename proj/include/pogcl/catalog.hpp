// Named conic-line arrangements with their expected syzygy and census data,
// plus add / delete mutations.
#ifndef POGCL_CATALOG_HPP
#define POGCL_CATALOG_HPP

#include "pogcl/census.hpp"
#include "pogcl/syzygy.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pogcl {

using Params = std::map<std::string, Rational>;

/// Only the fields that are set are checked.
struct ExpectedProfile {
    std::string kind;                ///< kind_name() of the classification
    std::vector<int> exponents;      ///< (d1, d2) or (d1, d2, d3); empty = unchecked
    std::optional<int> defect;
    std::optional<int> generator_count;  ///< q, for m-syzygy entries
    std::optional<long> tau;
};

struct ExpectedCensus {
    int n2 = 0;
    int t2 = 0;
    int n3 = 0;
    std::map<int, int> higher_ordinary;
};

struct CatalogEntry {
    std::string name;
    std::string description;
    Params defaults;
    std::function<Arrangement(const Params&)> builder;
    /// Expectations hold at the default parameters.
    ExpectedProfile expected_profile;
    std::optional<ExpectedCensus> expected_census;
    int degree = 0;  ///< curve degree at the defaults
};

const std::vector<CatalogEntry>& catalog();
/// Throws InputError for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

/// Missing parameters take their defaults. Throws ExcludedParameter or InputError.
Arrangement build(const std::string& name, const Params& params = {});

/// Parses a parameter value "p" or "p/q"; throws IrrationalParameterUnsupported for
/// symbolic input such as sqrt(2) or i, InputError for anything else.
Rational parse_parameter(const std::string& text);

struct Mutation {
    enum class Kind { add_line, add_conic, remove } kind;
    HomPoly component;      ///< for add_line / add_conic
    std::size_t index = 0;  ///< for remove

    static Mutation add_line(HomPoly p) { return {Kind::add_line, std::move(p), 0}; }
    static Mutation add_conic(HomPoly p) { return {Kind::add_conic, std::move(p), 0}; }
    static Mutation remove(std::size_t i) { return {Kind::remove, HomPoly(0), i}; }
};

/// Throws the validation errors of the resulting arrangement.
Arrangement mutate(const Arrangement& arr, const Mutation& m);

struct EntryResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> mismatches;
    std::optional<SyzygyProfile> profile;
    std::optional<CensusReport> census;
    std::optional<TauCrossCheck> tau_check;
    std::optional<BezoutAudit> bezout;
    double seconds = 0;
};

struct VerifyReport {
    std::vector<EntryResult> entries;
    bool all_pass() const;
};

struct VerifyOptions {
    /// Entries above this degree are skipped unless heavy_backend is set.
    int max_degree = 8;
    /// Backend for entries above max_degree; std::nullopt skips them.
    std::optional<RankBackend> heavy_backend;
    std::uint64_t seed = 1;
};

/// Classifies, censuses and audits one entry at its defaults. Never throws for
/// mathematical mismatches; errors raised by the computation become mismatches too.
EntryResult verify_entry(const CatalogEntry& entry, const SyzygyEngine& engine, std::uint64_t seed = 1);
VerifyReport verify_all(const SyzygyEngine& engine, const VerifyOptions& options = {});

}  // namespace pogcl

#endif
