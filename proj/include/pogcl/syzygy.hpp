// Graded Jacobian syzygies AR(f) = {(a,b,c) : a f_x + b f_y + c f_z = 0},
// their minimal resolution degrees, the total Tjurina number and the
// free / nearly-free / plus-one generated / m-syzygy verdict.
//
// AR(f) is identified with D0(C), the derivations killing f. All dimensions come
// from ranks of the degree-k multiplication maps J_k : S_k^3 -> S_{k+m-1}.
//
// Two rank backends:
// - modular(N): ranks modulo N independent random primes in (2^30, 2^31); any
// disagreement raises BackendDisagreement. Monte Carlo (rank mod p <= rank over Q).
// - exact: one prime drives the degree scan, and every minimal generator is lifted
// to an exact rational syzygy (CRT + rational reconstruction, then checked
// J v = 0 over Q). Exact syzygies whose images reach the mod-p kernel dimension
// pin dim AR_k over Q from both sides, so every dimension is certified.
#ifndef POGCL_SYZYGY_HPP
#define POGCL_SYZYGY_HPP

#include "pogcl/hom_poly.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pogcl {

/// dim S_k; zero for negative k.
long monomial_basis_dim(int k);

enum class RankMode { exact, modular };

class RankBackend {
public:
    /// Test hook: sees each modular rank of J_k as (prime index, k, rank) and returns the rank to use.
    using FaultHook = std::function<std::size_t(std::size_t prime_index, int degree, std::size_t rank)>;

    static RankBackend exact(std::uint64_t seed = 1);
    /// Throws std::invalid_argument unless prime_count >= 2.
    static RankBackend modular(std::size_t prime_count, std::uint64_t seed = 1);

    RankMode mode() const noexcept { return mode_; }
    std::size_t prime_count() const noexcept { return primes_; }
    std::uint64_t seed() const noexcept { return seed_; }
    const FaultHook& fault_hook() const noexcept { return hook_; }

    RankBackend& with_seed(std::uint64_t seed) {
        seed_ = seed;
        return *this;
    }
    RankBackend& with_fault_hook(FaultHook hook) {
        hook_ = std::move(hook);
        return *this;
    }

    /// "exact" or "modular:N".
    std::string to_string() const;
    /// Parses "exact" or "modular:N"; throws InputError.
    static RankBackend parse(const std::string& text);

private:
    RankBackend(RankMode mode, std::size_t primes, std::uint64_t seed) : mode_(mode), primes_(primes), seed_(seed) {}
    RankMode mode_;
    std::size_t primes_;
    std::uint64_t seed_;
    FaultHook hook_;
};

/// Which backend produced a result, and with which primes.
struct BackendTag {
    RankMode mode = RankMode::exact;
    std::vector<std::uint32_t> primes;
    /// Exact mode: every reported dimension and degree is proven over Q.
    bool certified = false;
    std::string to_string() const;
};

struct HilbertWitness {
    /// First degree j of the three-value window h(j) = h(j+1) = h(j+2).
    int degree_checked = 0;
    /// dim M(f)_j for j = 0, 1, ..., degree_checked + 2.
    std::vector<long> values;
    long stabilized_value = 0;
};

struct Free {
    int d1, d2;
};
struct NearlyFree {
    int d1, d2;
};
struct PlusOneGenerated {
    int d1, d2, level, defect;
};
struct MSyzygy {
    int q;
};
using Classification = std::variant<Free, NearlyFree, PlusOneGenerated, MSyzygy>;

/// "free", "nearly-free", "plus-one-generated" or "m-syzygy".
std::string kind_name(const Classification& c);
/// For example "Free (4,13)" or "PlusOneGenerated (5,14,17) nu=4".
std::string describe(const Classification& c);

struct Resolution {
    std::vector<int> exponents;              ///< d_1 <= ... <= d_q
    std::vector<int> second_syzygy_degrees;  ///< e_1 <= ... <= e_{q-2}
    /// dim AR(f)_k for k = 0..(size-1).
    std::vector<long> ar_dims;
    BackendTag backend;
};

struct SyzygyProfile {
    int curve_degree = 0;
    std::vector<int> exponents;
    std::vector<int> second_syzygy_degrees;
    long tau = 0;
    Classification classification = MSyzygy{0};
    /// nu for plus-one generated curves (1 when nearly-free).
    std::optional<int> defect;
    BackendTag backend;
    HilbertWitness witness;
    std::vector<long> ar_dims;
};

struct TjurinaResult {
    long tau;
    HilbertWitness witness;
};

/// Evaluation context for the syzygy computations. Holds only the backend choice,
/// so separate engines can run side by side.
class SyzygyEngine {
public:
    explicit SyzygyEngine(RankBackend backend = RankBackend::exact()) : backend_(std::move(backend)) {}

    void set_rank_backend(RankBackend backend) { backend_ = std::move(backend); }
    const RankBackend& rank_backend() const noexcept { return backend_; }

    /// dim AR(f)_k. The exact backend uses fraction-free integer elimination.
    long ar_dimension(const HomPoly& f, int k) const;

    /// Resolution degrees scanning k = 0..k_max (default 2(m-1)).
    /// Throws Truncated when the scan cannot account for all generators.
    Resolution exponents_and_second_syzygies(const HomPoly& f, std::optional<int> k_max = std::nullopt) const;

    /// Throws NonReducedInput when the Hilbert function of M(f) does not settle.
    TjurinaResult tjurina(const HomPoly& f) const;

    SyzygyProfile classify(const HomPoly& f) const;

    /// dim AR(f)_k for k = 0..through, certified exactly whatever the engine's backend.
    std::vector<long> certified_ar_dimensions(const HomPoly& f, int through) const;

private:
    RankBackend backend_;
};

/// Checks the Hilbert-series identity
///   dim AR_k = sum_i dim S_{k-d_i} - sum_j dim S_{k-e_j}
/// for every k covered by ar_dims.
bool hilbert_series_consistent(const std::vector<long>& ar_dims, const std::vector<int>& exponents,
                               const std::vector<int>& second_syzygy_degrees);

}  // namespace pogcl

#endif
