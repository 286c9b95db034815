// Arithmetic and dense elimination over Z/p for word-size primes p in (2^30, 2^31).
//
// Row updates use Shoup's precomputed-quotient multiplication, which needs p < 2^31
// and keeps every intermediate in 32 bits so the inner loop vectorizes.
#ifndef POGCL_MODULAR_HPP
#define POGCL_MODULAR_HPP

#include "pogcl/dense_matrix.hpp"
#include "pogcl/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace pogcl {

class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;

    std::uint32_t from_integer(const Integer& z) const;
    /// Image of a rational; std::nullopt when p divides the denominator.
    std::optional<std::uint32_t> from_rational(const Rational& q) const;

    /// dst[i] += c * src[i] for all i.
    void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c) const noexcept;
    /// v[i] *= c for all i.
    void scale(std::span<std::uint32_t> v, std::uint32_t c) const noexcept;

private:
    std::uint32_t p_;
};

/// Distinct random primes in (2^30, 2^31), reproducible from the seed.
std::vector<std::uint32_t> random_primes(std::size_t count, std::uint64_t seed);
std::uint32_t random_prime(std::mt19937_64& rng);

struct EchelonInfo {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    /// Original index of the row that supplied each pivot; these rows are independent.
    std::vector<std::size_t> pivot_source_rows;
};

/// In-place Gaussian elimination. On return the first `rank` rows are in echelon form
/// with unit pivots (reduced echelon form when `reduced`), the remaining rows are zero.
EchelonInfo echelonize(DenseMatrix<std::uint32_t>& m, const PrimeField& f, bool reduced);

std::size_t rank_mod(DenseMatrix<std::uint32_t> m, const PrimeField& f);

/// Kernel vector attached to free column `free_col` of a reduced echelon form:
/// 1 at free_col, 0 at the other free columns.
std::vector<std::uint32_t> kernel_vector(const DenseMatrix<std::uint32_t>& rref, const EchelonInfo& info,
                                         std::size_t free_col, const PrimeField& f);

/// Rows of an echelon basis kept sorted by pivot, grown one vector at a time.
class IncrementalBasis {
public:
    IncrementalBasis(std::size_t dimension, const PrimeField& f) : dim_(dimension), field_(f) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    /// Reduces v against the basis; inserts it and returns true when it is independent.
    bool insert(std::vector<std::uint32_t> v);
    /// True when v lies in the span (v is left untouched).
    bool contains(std::vector<std::uint32_t> v) const;

private:
    std::size_t dim_;
    PrimeField field_;
    struct Row {
        std::size_t pivot;
        std::vector<std::uint32_t> values;
    };
    std::vector<Row> rows_;
    std::optional<std::size_t> reduce(std::vector<std::uint32_t>& v) const;
};

/// Incremental Chinese remaindering of integer residues with rational reconstruction.
class CrtAccumulator {
public:
    explicit CrtAccumulator(std::size_t length) : residues_(length, 0) {}

    void add(std::span<const std::uint32_t> image, std::uint32_t prime);
    const Integer& modulus() const noexcept { return modulus_; }
    std::size_t prime_count() const noexcept { return primes_; }
    /// Rational reconstruction of every entry; std::nullopt if some entry has no
    /// reconstruction within the current modulus.
    std::optional<std::vector<Rational>> reconstruct() const;

private:
    std::vector<Integer> residues_;
    Integer modulus_ = 1;
    std::size_t primes_ = 0;
};

/// Rational n/d with |n|, d <= sqrt(M/2) and n = a d (mod M), if one exists.
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& modulus);

}  // namespace pogcl

#endif
