#include "pogcl/modular.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pogcl {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3 || p >= (1u << 31)) throw std::invalid_argument("prime must lie below 2^31");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeField::from_integer(const Integer& z) const {
    return static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p_));
}

std::optional<std::uint32_t> PrimeField::from_rational(const Rational& q) const {
    const std::uint32_t den = from_integer(q.get_den());
    if (den == 0) return std::nullopt;
    return mul(from_integer(q.get_num()), inv(den));
}

void PrimeField::axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c) const noexcept {
    if (c == 0) return;
    const std::uint32_t p = p_;
    const auto shoup = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
    std::uint32_t* __restrict d = dst.data();
    const std::uint32_t* __restrict s = src.data();
    const std::size_t n = dst.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t x = s[i];
        const auto q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * shoup) >> 32);
        std::uint32_t t = x * c - q * p;
        t = t >= p ? t - p : t;
        std::uint32_t r = d[i] + t;
        d[i] = r >= p ? r - p : r;
    }
}

void PrimeField::scale(std::span<std::uint32_t> v, std::uint32_t c) const noexcept {
    const std::uint32_t p = p_;
    const auto shoup = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
    for (auto& x : v) {
        const auto q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * shoup) >> 32);
        std::uint32_t t = x * c - q * p;
        x = t >= p ? t - p : t;
    }
}

std::uint32_t random_prime(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist((1u << 30) + 1, (1u << 31) - 1);
    for (;;) {
        const std::uint32_t candidate = dist(rng) | 1u;
        Integer z(static_cast<unsigned long>(candidate));
        if (mpz_probab_prime_p(z.get_mpz_t(), 30) > 0) return candidate;
    }
}

std::vector<std::uint32_t> random_primes(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> out;
    std::set<std::uint32_t> seen;
    while (out.size() < count) {
        const std::uint32_t p = random_prime(rng);
        if (seen.insert(p).second) out.push_back(p);
    }
    return out;
}

EchelonInfo echelonize(DenseMatrix<std::uint32_t>& m, const PrimeField& f, bool reduced) {
    EchelonInfo info;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> source(rows);
    for (std::size_t i = 0; i < rows; ++i) source[i] = i;
    for (std::size_t col = 0; col < cols && info.rank < rows; ++col) {
        std::size_t r = info.rank;
        while (r < rows && m(r, col) == 0) ++r;
        if (r == rows) continue;
        const std::size_t piv = info.rank;
        m.swap_rows(piv, r);
        std::swap(source[piv], source[r]);
        auto prow = m.row(piv).subspan(col);
        f.scale(prow, f.inv(prow[0]));
        const std::size_t first = reduced ? 0 : piv + 1;
        for (std::size_t i = first; i < rows; ++i) {
            if (i == piv) continue;
            const std::uint32_t e = m(i, col);
            if (e == 0) continue;
            f.axpy(m.row(i).subspan(col), prow, f.neg(e));
        }
        info.pivot_cols.push_back(col);
        info.pivot_source_rows.push_back(source[piv]);
        ++info.rank;
    }
    return info;
}

std::size_t rank_mod(DenseMatrix<std::uint32_t> m, const PrimeField& f) {
    // Eliminating along the shorter side touches fewer entries per pivot.
    if (m.cols() > m.rows() * 2) m = m.transposed();
    return echelonize(m, f, false).rank;
}

std::vector<std::uint32_t> kernel_vector(const DenseMatrix<std::uint32_t>& rref, const EchelonInfo& info,
                                         std::size_t free_col, const PrimeField& f) {
    std::vector<std::uint32_t> v(rref.cols(), 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < info.rank; ++i) v[info.pivot_cols[i]] = f.neg(rref(i, free_col));
    return v;
}

std::optional<std::size_t> IncrementalBasis::reduce(std::vector<std::uint32_t>& v) const {
    for (const auto& row : rows_) {
        const std::uint32_t e = v[row.pivot];
        if (e == 0) continue;
        field_.axpy(std::span(v).subspan(row.pivot),
                    std::span<const std::uint32_t>(row.values).subspan(row.pivot), field_.neg(e));
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return std::nullopt;
}

bool IncrementalBasis::insert(std::vector<std::uint32_t> v) {
    if (v.size() != dim_) throw std::invalid_argument("vector length differs from basis dimension");
    const auto pivot = reduce(v);
    if (!pivot) return false;
    field_.scale(std::span(v).subspan(*pivot), field_.inv(v[*pivot]));
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), *pivot,
                                [](const Row& r, std::size_t p) { return r.pivot < p; });
    rows_.insert(pos, Row{*pivot, std::move(v)});
    return true;
}

bool IncrementalBasis::contains(std::vector<std::uint32_t> v) const { return !reduce(v).has_value(); }

void CrtAccumulator::add(std::span<const std::uint32_t> image, std::uint32_t prime) {
    if (image.size() != residues_.size()) throw std::invalid_argument("CRT image length mismatch");
    // x = r + M * ((a - r) * M^-1 mod p)
    const PrimeField f(prime);
    const std::uint32_t m_inv = f.inv(f.from_integer(modulus_));
    for (std::size_t i = 0; i < image.size(); ++i) {
        const std::uint32_t r = f.from_integer(residues_[i]);
        const std::uint32_t t = f.mul(f.sub(image[i], r), m_inv);
        residues_[i] += modulus_ * static_cast<unsigned long>(t);
    }
    modulus_ *= static_cast<unsigned long>(prime);
    ++primes_;
}

std::optional<std::vector<Rational>> CrtAccumulator::reconstruct() const {
    std::vector<Rational> out;
    out.reserve(residues_.size());
    for (const auto& r : residues_) {
        auto q = rational_reconstruct(r, modulus_);
        if (!q) return std::nullopt;
        out.push_back(*q);
    }
    return out;
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& modulus) {
    Integer bound;
    {
        Integer half = modulus / 2;
        mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    }
    Integer r0 = modulus, r1 = a % modulus;
    if (r1 < 0) r1 += modulus;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (abs(t1) > bound || t1 == 0) return std::nullopt;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rational q(r1, t1);
    q.canonicalize();
    return q;
}

}  // namespace pogcl
