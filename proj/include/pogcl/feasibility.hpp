// Exact enumeration of weak combinatorics (k, d; n2, t2, n3) of conic-line
// arrangements that could be plus-one generated with a given defect.
//
// Everything is rational arithmetic; a violated constraint is a non-existence
// certificate, a survivor is only "undecided".
#ifndef POGCL_FEASIBILITY_HPP
#define POGCL_FEASIBILITY_HPP

#include "pogcl/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pogcl {

struct WeakCombinatorics {
    int k = 0;  ///< conics
    int d = 0;  ///< lines
    int n2 = 0, t2 = 0, n3 = 0;

    int degree() const noexcept { return 2 * k + d; }
    long tau() const noexcept { return n2 + 3L * t2 + 4L * n3; }
    friend auto operator<=>(const WeakCombinatorics&, const WeakCombinatorics&) = default;
};

/// "(k,d;n2,t2,n3)"
std::string to_string(const WeakCombinatorics& wc);

struct ConstraintEntry {
    std::string id;
    bool applicable = false;
    bool satisfied = false;  ///< meaningful only when applicable
    Rational slack;          ///< >= 0 iff satisfied; 0 when not applicable
    std::optional<Rational> witness;  ///< alpha for langer, d1 for the d1 constraints
    std::string note;
};

struct ConstraintReport {
    std::vector<ConstraintEntry> entries;

    const ConstraintEntry* find(const std::string& id) const;
    /// Every applicable entry satisfied.
    bool passes() const;
    /// Id of the first applicable, violated entry; empty if none.
    std::string first_failure() const;
};

// Individual constraints. All return exact slacks.

/// C(m,2) - k - (n2 + 2 t2 + 3 n3); zero iff the count closes.
Integer naive_count(const WeakCombinatorics& wc);

/// Integer d1 with d1^2 - d1(m-1) + (m-1)^2 = tau + nu, 1 <= d1, 2 d1 <= m. Ascending.
std::vector<int> solve_d1(const WeakCombinatorics& wc, int nu);

enum class SingularityMode { nodal, simple_ade };
std::string to_string(SingularityMode mode);
/// Throws InputError for anything but "nodal" / "simple_ade".
SingularityMode parse_singularity_mode(const std::string& text);

/// Inclusive; lower > upper means empty. nodal: m-2 <= d1 <= m/2; simple_ade: 2m/3 - 2 <= d1 <= m/2.
std::pair<int, int> d1_bounds(int m, SingularityMode mode);

/// t2 <= 4k^2/9 + 4k/3, applicable for d = 0, k >= 3.
ConstraintEntry miyaoka(const WeakCombinatorics& wc);

struct HirzebruchGates {
    int conic_min_k = 3;     ///< pure conic form needs k >= conic_min_k
    int mixed_min_k = 1;     ///< conic-line form needs k >= mixed_min_k and d >= mixed_min_d
    int mixed_min_d = 1;
};
/// 8k + n2 + 3n3/4 >= d + 5t2/2 (the d term is absent when d = 0).
ConstraintEntry hirzebruch(const WeakCombinatorics& wc, const HirzebruchGates& gates = {});

struct LangerCoefficients {
    Rational node, tacnode, triple;
    friend bool operator==(const LangerCoefficients&, const LangerCoefficients&) = default;
};
/// Closed forms; throws AlphaOutOfRange outside [1/3, 2/3].
LangerCoefficients langer_lhs_coefficients(const Rational& alpha);

struct OrbifoldRow {
    std::string type;  ///< "A1", "A3", "D4"
    int mu;
    Rational alpha_min;  ///< exclusive when alpha_min_open
    bool alpha_min_open;
    Rational alpha_max;  ///< inclusive
    Rational e_orb(const Rational& alpha) const;
    bool in_range(const Rational& alpha) const;
};
const std::vector<OrbifoldRow>& orbifold_table();
/// 3(alpha(mu - 1) + 1 - e_orb) for one row.
Rational orbifold_contribution(const OrbifoldRow& row, const Rational& alpha);

/// LHS <= (3a - a^2) m^2 - 3 a m, applicable for m >= 9. Throws AlphaOutOfRange.
ConstraintEntry langer_check(const WeakCombinatorics& wc, const Rational& alpha);
Rational langer_lhs(const WeakCombinatorics& wc, const Rational& alpha);
Rational langer_rhs(int m, const Rational& alpha);

struct LangerSweep {
    Rational worst_slack;
    Rational witness;
    int points = 0;  ///< distinct alphas evaluated
};
/// Grid alpha_j = 1/3 + j/(3 grid), j = 0..grid, plus any extra alphas. Needs m >= 9
/// (std::logic_error otherwise) and grid >= 1 (InputError). Ties keep the smallest alpha.
LangerSweep langer_sweep(const WeakCombinatorics& wc, int grid, const std::vector<Rational>& extra = {});

struct Gates {
    bool d1_bounds = true;
    bool miyaoka = true;
    bool hirzebruch = true;
    bool langer = true;
    HirzebruchGates hirzebruch_gates;
    int langer_grid = 60;
    /// Always evaluated besides the grid.
    std::vector<Rational> langer_extra_alphas{make_rational(2, 5)};

    /// Pure conic arrangements: the argument there never uses Langer.
    static Gates conic_defaults();
    std::string to_string() const;
};

struct Candidate {
    WeakCombinatorics wc;
    int nu = 2;
    int d1 = 0;
    long tau = 0;
    int d2() const noexcept { return wc.degree() - d1; }
    int d3() const noexcept { return wc.degree() - d1 + nu - 1; }
    ConstraintReport report;
};

/// A triple that passed the naive count but failed something else.
struct Elimination {
    WeakCombinatorics wc;
    std::optional<int> d1;  ///< unset when the d1 equation has no admissible root
    std::string killed_by;
    ConstraintReport report;
};

struct Enumeration {
    std::vector<Candidate> survivors;
    std::vector<Elimination> eliminated;
    Gates gates;
    SingularityMode mode = SingularityMode::simple_ade;
    int nu = 2;
};

/// All (n2, t2, n3) for fixed (k, d). nodal mode forces t2 = n3 = 0. Throws InputError
/// for nu < 1, negative counts or m < 3.
Enumeration enumerate(int k, int d, int nu, SingularityMode mode, const Gates& gates = {});
/// All (k, d) with k >= 1, d >= 1 and 2k + d = m.
Enumeration enumerate_degree(int m, int nu, SingularityMode mode, const Gates& gates = {});

/// One row of the degree-12 style argument: when d1_bounds pins d1, t2 + n3 and n2 + n3
/// are forced, while the Hirzebruch form caps t2.
struct CapRow {
    int k, d;
    int forced_t2_plus_n3;
    int forced_n2_plus_n3;
    int n3_max;
    int t2_max;
    int sum_max;
    bool contradiction;  ///< forced_t2_plus_n3 > sum_max, or forced_n2_plus_n3 < 0
};
/// Throws InputError unless d1_bounds(m, simple_ade) is a single value.
std::vector<CapRow> tacnode_cap_trace(int m, int nu);

/// For pure conic arrangements with k components: t2 range [k(k-1)-3, Miyaoka cap] and the
/// naive-count triples at the lower end, each with its full report.
struct ConicTrace {
    int k;
    int t2_min;
    int t2_max;
    std::vector<Elimination> triples;  ///< killed_by empty for survivors
};
ConicTrace conic_trace(int k, int nu, const Gates& gates = Gates::conic_defaults());

struct ClaimCheck {
    std::string id;
    std::string claim;
    bool pass = false;
    std::string detail;
};

struct ReproductionOptions {
    Gates conic_gates = Gates::conic_defaults();
    Gates mixed_gates;
    int nu = 2;
};

struct ReproductionReport {
    std::vector<ClaimCheck> checks;
    std::vector<Candidate> conic_survivors;   ///< k = 2..8, d = 0
    std::vector<Candidate> m9_survivors;      ///< (k, d) = (1, 7)
    std::vector<WeakCombinatorics> flagged;   ///< survivors beyond the expected m = 9 list
    bool all_pass() const;
};

/// Runs the feasibility claims; never throws for a failing claim.
ReproductionReport reproduce(const ReproductionOptions& options = {});
/// Same, but throws ReproductionMismatch listing every failing claim.
ReproductionReport reproduce_or_throw(const ReproductionOptions& options = {});

}  // namespace pogcl

#endif
