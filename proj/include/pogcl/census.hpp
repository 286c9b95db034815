// Conic-line arrangements and their singular points, found by exact
// resultant analysis under a generic projection.
//
// After a random change of coordinates, the resultant in z of two components
// factors as a product over their intersection points p of a linear form to the
// power I_p. Refining all pairwise square-free parts into one gcd-free basis turns
// each basis factor into a set of points sharing one incidence signature, which is
// enough to classify nodes, tacnodes and ordinary r-fold points without ever
// solving for coordinates. Other points get a local Tjurina number only when two
// lines meet there, from the local algebra at that rational point.
#ifndef POGCL_CENSUS_HPP
#define POGCL_CENSUS_HPP

#include "pogcl/hom_poly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pogcl {

class SyzygyEngine;

enum class ComponentKind { line, smooth_conic };

std::string to_string(ComponentKind kind);

class Arrangement {
public:
    /// Kinds inferred from degrees; runs validate().
    explicit Arrangement(std::vector<HomPoly> components);
    /// Kinds as declared (for example by an arrangement file); runs validate().
    Arrangement(std::vector<HomPoly> components, std::vector<ComponentKind> kinds);

    const std::vector<HomPoly>& components() const noexcept { return components_; }
    const std::vector<ComponentKind>& kinds() const noexcept { return kinds_; }
    std::size_t size() const noexcept { return components_.size(); }
    int conic_count() const noexcept;  ///< k
    int line_count() const noexcept;   ///< d
    int degree() const noexcept { return 2 * conic_count() + line_count(); }
    HomPoly defining_poly() const { return product(components_); }

    Arrangement with_component(const HomPoly& c) const;
    Arrangement without_component(std::size_t index) const;

private:
    std::vector<HomPoly> components_;
    std::vector<ComponentKind> kinds_;
};

/// Throws WrongDegree, SingularConic or RepeatedComponent; returns its argument otherwise.
const Arrangement& validate(const Arrangement& arr);

/// Rank of the symmetric 3x3 matrix of a quadratic form (0 to 3).
int conic_rank(const HomPoly& q);

enum class PointType { node, tacnode, ordinary_multiple, unsupported };

struct Incidence {
    std::size_t i, j;  ///< component indices, i < j
    int multiplicity;
    friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

struct SingularPoint {
    std::string cluster_id;
    std::vector<Incidence> incident;  ///< sorted by (i, j)
    int branch_count = 0;
    PointType type = PointType::unsupported;
    /// Set for supported types, and for unsupported points where two lines of the
    /// arrangement meet (computed directly at that rational point).
    std::optional<int> local_tjurina;
    std::string description;  ///< e.g. "node", "tacnode", "ordinary 6-fold point"
};

struct CensusReport {
    int conics = 0;
    int lines = 0;
    int n2 = 0;
    int t2 = 0;
    int n3 = 0;
    std::map<int, int> higher_ordinary;  ///< r -> count, r >= 4
    int unsupported = 0;
    long tau_total = 0;  ///< sum of the known local Tjurina numbers
    bool all_supported = true;
    bool tau_complete = true;  ///< every point has a local Tjurina number
    bool quasi_homogeneous = true;
    std::vector<SingularPoint> points;
    /// Seeds of the two agreeing coordinate changes.
    std::uint64_t seed_used = 0;
    int attempts = 0;

    int point_count() const noexcept { return static_cast<int>(points.size()); }
};

/// Same points (signatures and types) in both reports; seeds are ignored.
bool same_points(const CensusReport& a, const CensusReport& b);

/// Throws GenericityFailure when five seeded attempts all fail the genericity guard.
CensusReport census(const Arrangement& arr, std::uint64_t seed = 1);

struct BezoutAudit {
    long expected = 0;  ///< sum over pairs of deg_i deg_j = C(2k+d, 2) - k
    long observed = 0;  ///< sum over points of the pairwise multiplicities
    long weighted = 0;  ///< n2 + 2 t2 + sum_r C(r,2) n_r (when all points are supported)
    bool pass = false;
};
BezoutAudit bezout_audit(const Arrangement& arr, const CensusReport& report);

struct TauCrossCheck {
    long census_tau = 0;
    long syzygy_tau = 0;
    bool equal = false;
};
/// Throws std::logic_error unless every point has a local Tjurina number.
TauCrossCheck cross_check_tau(const Arrangement& arr, const CensusReport& report, const SyzygyEngine& engine);
TauCrossCheck cross_check_tau(const Arrangement& arr, const SyzygyEngine& engine, std::uint64_t seed = 1);

struct CensusDiff {
    std::vector<SingularPoint> added;
    std::vector<SingularPoint> removed;
    int added_of(PointType t) const;
};
/// Points of `after` not present in `before` (by signature), and vice versa.
/// Component indices must refer to the same components in both.
CensusDiff census_diff(const CensusReport& before, const CensusReport& after);

/// Local Tjurina number of g = 0 at the rational point p; 0 when p is a smooth point or
/// not on the curve. Throws InputError for a non-isolated singularity.
long local_tjurina(const HomPoly& g, const std::array<Rational, 3>& p);

/// "line: <poly>" / "conic: <poly>" lines, '#' comments, blank lines ignored.
Arrangement parse_arrangement(std::string_view text);
std::string format_arrangement(const Arrangement& arr);

}  // namespace pogcl

#endif
