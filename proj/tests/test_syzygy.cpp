#include "doctest.h"
#include "test_support.hpp"

#include "pogcl/bareiss.hpp"
#include "pogcl/errors.hpp"
#include "pogcl/jacobian_matrix.hpp"
#include "pogcl/modular.hpp"
#include "pogcl/syzygy.hpp"

using namespace pogcl;
using pogcl::test::P;

namespace {

const char* kNodalPog = "x*y*(x^2 + y^2 - z^2)";
const char* kFreeCl = "(x^2 + y^2 - z^2)*(y - z)*(x^2 - z^2)";
const char* kCl8 = "(x - y)*(x + y)*(x - z)*(x + z)*(y - z)*(y + z)*(x^2 + y^2 - z^2)";

}  // namespace

TEST_CASE("monomial_basis_dim") {
    CHECK(monomial_basis_dim(0) == 1);
    CHECK(monomial_basis_dim(1) == 3);
    CHECK(monomial_basis_dim(36) == 703);
    CHECK(monomial_basis_dim(-1) == 0);
    for (int k = 0; k < 30; ++k) CHECK(monomial_basis_dim(k) == static_cast<long>(monomials(k).size()));
}

TEST_CASE("monomial_index matches the enumeration order") {
    for (int k = 0; k < 12; ++k) {
        const auto ms = monomials(k);
        for (std::size_t i = 0; i < ms.size(); ++i) CHECK(monomial_index(ms[i]) == i);
        for (std::size_t i = 1; i < ms.size(); ++i) CHECK(GrlexFirst{}(ms[i - 1], ms[i]));
    }
}

TEST_CASE("ar_dimension examples against the rational oracle") {
    const SyzygyEngine exact;
    // f = x: constant b, c with (0, b, c) kill x.
    CHECK(pogcl::test::oracle_ar_dim(P("x"), 0) == 2);
    CHECK(exact.ar_dimension(P("x"), 0) == 2);
    CHECK(pogcl::test::oracle_ar_dim(P("x^2 + y^2 - z^2"), 0) == 0);
    CHECK(exact.ar_dimension(P("x^2 + y^2 - z^2"), 0) == 0);
    // Koszul syzygies of (x, y, -z).
    CHECK(pogcl::test::oracle_ar_dim(P("x^2 + y^2 - z^2"), 1) == 3);
    CHECK(exact.ar_dimension(P("x^2 + y^2 - z^2"), 1) == 3);

    const SyzygyEngine modular(RankBackend::modular(2));
    CHECK(modular.ar_dimension(P("x^2 + y^2 - z^2"), 1) == 3);
    CHECK(exact.ar_dimension(P("x"), -1) == 0);
}

TEST_CASE("ar_dimension agrees with the oracle on small degrees") {
    const SyzygyEngine exact;
    const SyzygyEngine modular(RankBackend::modular(3, 5));
    for (const char* f : {kNodalPog, kFreeCl, "x*y*z", "x^3 + y^3 + z^3", "x*y*(x - y)*(x - 2*y)*z"}) {
        const HomPoly g = P(f);
        const auto certified = exact.certified_ar_dimensions(g, 5);
        for (int k = 0; k <= 5; ++k) {
            const long oracle = pogcl::test::oracle_ar_dim(g, k);
            CHECK(exact.ar_dimension(g, k) == oracle);
            CHECK(modular.ar_dimension(g, k) == oracle);
            CHECK(certified[static_cast<std::size_t>(k)] == oracle);
        }
    }
}

TEST_CASE("jacobian matrix: integer and modular pieces agree") {
    const JacobianMatrix jac(P("1/2*x^3 - 3*x*y*z + 5/3*z^3"));
    const PrimeField field(1000000007u);
    for (int k = 0; k < 4; ++k) {
        const auto zi = jac.integer(k);
        const auto zp = jac.modular(k, field);
        REQUIRE(zi.rows() == jac.rows(k));
        REQUIRE(zi.cols() == jac.cols(k));
        for (std::size_t r = 0; r < zi.rows(); ++r)
            for (std::size_t c = 0; c < zi.cols(); ++c) CHECK(field.from_integer(zi(r, c)) == zp(r, c));
    }
    // Koszul syzygy (f_y, -f_x, 0) of degree m-1 lies in the kernel.
    const HomPoly f = P("x^2 + y^2 - z^2");
    const JacobianMatrix j2(f);
    std::vector<Rational> v(j2.cols(1), 0);
    v[monomial_index({0, 1, 0})] = 2;        // a = 2y
    v[3 + monomial_index({1, 0, 0})] = -2;   // b = -2x
    CHECK(j2.annihilates(1, v));
    v[6] = 1;
    CHECK_FALSE(j2.annihilates(1, v));
}

TEST_CASE("exponents and second syzygies: worked examples") {
    const SyzygyEngine eng;
    const Resolution xyz = eng.exponents_and_second_syzygies(P("x*y*z"));
    CHECK(xyz.exponents == std::vector<int>{1, 1});
    CHECK(xyz.second_syzygy_degrees.empty());
    // Oracle for freeness: (m-1)^2 - d1(m-d1-1) = 4 - 1 = 3 nodes.
    CHECK(eng.tjurina(P("x*y*z")).tau == 3);

    const Resolution pog = eng.exponents_and_second_syzygies(P(kNodalPog));
    CHECK(pog.exponents == std::vector<int>{2, 2, 3});
    CHECK(pog.second_syzygy_degrees == std::vector<int>{4});

    const Resolution conic = eng.exponents_and_second_syzygies(P("x^2 + y^2 - z^2"));
    CHECK(conic.exponents == std::vector<int>{1, 1, 1});
    CHECK(conic.second_syzygy_degrees == std::vector<int>{2});
    // Oracle: the Koszul complex of (x, y, z) predicts dim AR_k = 3 s(k-1) - s(k-2).
    for (std::size_t k = 0; k < conic.ar_dims.size(); ++k) {
        const int kk = static_cast<int>(k);
        CHECK(conic.ar_dims[k] == 3 * monomial_basis_dim(kk - 1) - monomial_basis_dim(kk - 2));
        CHECK(conic.ar_dims[k] == pogcl::test::oracle_ar_dim(P("x^2 + y^2 - z^2"), kk));
    }
    CHECK(conic.backend.certified);
}

TEST_CASE("exponents: Truncated when k_max is too small") {
    const SyzygyEngine eng;
    CHECK_THROWS_AS(eng.exponents_and_second_syzygies(P(kNodalPog), 2), Truncated);
    CHECK_NOTHROW(eng.exponents_and_second_syzygies(P(kNodalPog), 6));
}

TEST_CASE("tjurina examples") {
    const SyzygyEngine eng;
    const auto a = eng.tjurina(P(kNodalPog));
    CHECK(a.tau == 5);
    const auto& w = a.witness;
    REQUIRE(w.values.size() >= 3);
    const auto n = w.values.size();
    CHECK(w.values[n - 1] == w.stabilized_value);
    CHECK(w.values[n - 2] == w.stabilized_value);
    CHECK(w.values[n - 3] == w.stabilized_value);
    CHECK(w.degree_checked == static_cast<int>(n) - 3);
    CHECK(w.degree_checked >= 3 * 4 - 5);

    CHECK(eng.tjurina(P(kFreeCl)).tau == 12);
    const char* gm3 = "(x^2 + y^2 - z^2)*(4*x^2 + 5*y^2 - 4*y*z)*(4*x^2 + 5*y^2 + 4*y*z)";
    CHECK(eng.tjurina(P(gm3)).tau == 17);
    CHECK(eng.tjurina(P("x")).tau == 0);
    CHECK(eng.tjurina(P("x^2 + y^2 - z^2")).tau == 0);
}

TEST_CASE("tjurina rejects non-reduced input") {
    const SyzygyEngine eng;
    CHECK_THROWS_AS(eng.tjurina(P("x^2*y")), NonReducedInput);
    CHECK_THROWS_AS(eng.classify(P("(x - y)^2*(x^2 + y^2 - z^2)")), NonReducedInput);
    CHECK_THROWS_AS(eng.tjurina(P("x^2")), NonReducedInput);
    CHECK_THROWS_AS(eng.tjurina(HomPoly(3)), WrongDegree);
}

TEST_CASE("classify examples") {
    const SyzygyEngine eng;
    const SyzygyProfile cl8 = eng.classify(P(kCl8));
    REQUIRE(std::holds_alternative<PlusOneGenerated>(cl8.classification));
    const auto pog = std::get<PlusOneGenerated>(cl8.classification);
    CHECK(pog.d1 == 4);
    CHECK(pog.d2 == 4);
    CHECK(pog.level == 5);
    CHECK(pog.defect == 2);
    CHECK(cl8.tau == 35);
    CHECK(cl8.defect == 2);
    CHECK(cl8.backend.mode == RankMode::exact);
    CHECK(cl8.backend.certified);

    const SyzygyProfile line = eng.classify(P("x"));
    REQUIRE(std::holds_alternative<Free>(line.classification));
    CHECK(std::get<Free>(line.classification).d1 == 0);
    CHECK(std::get<Free>(line.classification).d2 == 0);

    const SyzygyProfile conic = eng.classify(P("x^2 + y^2 - z^2"));
    REQUIRE(std::holds_alternative<NearlyFree>(conic.classification));
    CHECK(conic.defect == 1);
    CHECK(kind_name(conic.classification) == "nearly-free");

    const SyzygyProfile four = eng.classify(P("(x^2 + y^2 - z^2)*(y - z)*(x^2 - z^2)*(y^2 - x*z)"));
    REQUIRE(std::holds_alternative<MSyzygy>(four.classification));
    CHECK(std::get<MSyzygy>(four.classification).q == 4);
    CHECK(describe(four.classification) == "MSyzygy{4}");
}

TEST_CASE("classify: free curves satisfy d1 + d2 = m - 1 and tau = (m-1)^2 - d1 d2") {
    const SyzygyEngine eng;
    for (const char* f : {"x*y*z", kFreeCl, "x*y*z*(x - y)", "x*y*(x - y)*z*(x - z)*(y - z)"}) {
        const auto p = eng.classify(P(f));
        REQUIRE(std::holds_alternative<Free>(p.classification));
        const auto fr = std::get<Free>(p.classification);
        const long m = p.curve_degree;
        CHECK(fr.d1 + fr.d2 == m - 1);
        CHECK(p.tau == (m - 1) * (m - 1) - fr.d1 * fr.d2);
        CHECK(p.exponents.size() == 2);
    }
}

TEST_CASE("profiles: Hilbert series and low-degree vanishing") {
    const SyzygyEngine eng;
    for (const char* f : {kNodalPog, kFreeCl, kCl8, "x^2 + y^2 - z^2", "x*y*(x - y)*(x^2 + y^2 - z^2)"}) {
        const auto p = eng.classify(P(f));
        CHECK(hilbert_series_consistent(p.ar_dims, p.exponents, p.second_syzygy_degrees));
        const int d1 = p.exponents.front();
        for (int k = 0; k < d1; ++k) CHECK(p.ar_dims[static_cast<std::size_t>(k)] == 0);
        CHECK(p.ar_dims[static_cast<std::size_t>(d1)] == std::count(p.exponents.begin(), p.exponents.end(), d1));
        if (p.defect) {
            const long m = p.curve_degree;
            CHECK(p.tau == (m - 1) * (m - 1) - static_cast<long>(d1) * (m - d1 - 1) - *p.defect);
        }
    }
    CHECK(hilbert_series_consistent({0, 0, 2, 7}, {2, 2, 3}, {4}));
    CHECK_FALSE(hilbert_series_consistent({0, 0, 3}, {2, 2, 3}, {4}));
}

TEST_CASE("modular backend agrees with exact on CL8") {
    const SyzygyEngine exact;
    SyzygyEngine modular;
    modular.set_rank_backend(RankBackend::modular(2));
    const auto a = exact.classify(P(kCl8));
    const auto b = modular.classify(P(kCl8));
    CHECK(a.exponents == b.exponents);
    CHECK(a.second_syzygy_degrees == b.second_syzygy_degrees);
    CHECK(a.tau == b.tau);
    CHECK(a.ar_dims == b.ar_dims);
    CHECK(describe(a.classification) == describe(b.classification));
    CHECK(b.backend.mode == RankMode::modular);
    CHECK(b.backend.primes.size() == 2);
    CHECK(b.backend.primes[0] != b.backend.primes[1]);
    for (auto p : b.backend.primes) CHECK(p > (1u << 30));
}

TEST_CASE("modular backend surfaces injected disagreement") {
    auto backend = RankBackend::modular(2).with_fault_hook(
        [](std::size_t prime_index, int degree, std::size_t rank) {
            return prime_index == 1 && degree == 3 ? rank - 1 : rank;
        });
    const SyzygyEngine eng(backend);
    CHECK_THROWS_AS(eng.classify(P(kCl8)), BackendDisagreement);
    CHECK_THROWS_AS(eng.tjurina(P(kCl8)), BackendDisagreement);
    CHECK_THROWS_AS(eng.ar_dimension(P(kCl8), 3), BackendDisagreement);
    // The same hook on a degree never reached changes nothing.
    auto harmless = RankBackend::modular(2).with_fault_hook(
        [](std::size_t, int degree, std::size_t rank) { return degree > 100 ? rank + 1 : rank; });
    CHECK(SyzygyEngine(harmless).classify(P(kCl8)).tau == 35);
}

TEST_CASE("rank backend parsing") {
    CHECK(RankBackend::parse("exact").mode() == RankMode::exact);
    CHECK(RankBackend::parse("modular:3").prime_count() == 3);
    CHECK(RankBackend::parse("modular:3").to_string() == "modular:3");
    CHECK_THROWS_AS(RankBackend::parse("modular:1"), InputError);
    CHECK_THROWS_AS(RankBackend::parse("modular:x"), InputError);
    CHECK_THROWS_AS(RankBackend::parse("fast"), InputError);
    CHECK_THROWS_AS(RankBackend::modular(1), std::invalid_argument);
}

TEST_CASE("seeds change primes but not answers") {
    const auto a = SyzygyEngine(RankBackend::modular(2, 1)).classify(P(kNodalPog));
    const auto b = SyzygyEngine(RankBackend::modular(2, 77)).classify(P(kNodalPog));
    CHECK(a.backend.primes != b.backend.primes);
    CHECK(a.exponents == b.exponents);
    CHECK(a.tau == b.tau);
}

TEST_CASE("modular kernels") {
    const PrimeField f(2147483629u);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
    for (int i = 0; i < 1000; ++i) {
        const std::uint32_t a = d(rng), b = d(rng);
        std::vector<std::uint32_t> dst{a}, src{b};
        const std::uint32_t c = d(rng);
        f.axpy(dst, src, c);
        CHECK(dst[0] == (a + static_cast<std::uint64_t>(b) * c) % f.modulus());
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK(f.from_rational(make_rational(1, 2)) == f.inv(2));
    CHECK_FALSE(PrimeField(7).from_rational(make_rational(1, 14)).has_value());

    // Rank mod p versus Bareiss over Z on random integer matrices.
    std::uniform_int_distribution<int> small(-2, 2);
    for (int t = 0; t < 30; ++t) {
        DenseMatrix<Integer> zi(6, 8);
        DenseMatrix<std::uint32_t> zp(6, 8);
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = 0; c < 8; ++c) {
                const int v = (r < 3 || t % 2) ? small(rng) : 0;
                zi(r, c) = v;
                zp(r, c) = f.from_integer(Integer(v));
            }
        // Force a dependent row half of the time.
        if (t % 3 == 0)
            for (std::size_t c = 0; c < 8; ++c) {
                zi(5, c) = zi(0, c) + zi(1, c);
                zp(5, c) = f.add(zp(0, c), zp(1, c));
            }
        CHECK(rank_mod(zp, f) == bareiss_rank(zi, Integer(1)));
    }
}

TEST_CASE("rational reconstruction and CRT") {
    CrtAccumulator acc(3);
    const std::vector<Rational> truth{make_rational(-7, 3), make_rational(22, 5), make_rational(0)};
    for (std::uint32_t p : random_primes(3, 9)) {
        const PrimeField f(p);
        std::vector<std::uint32_t> img;
        for (const auto& q : truth) img.push_back(*f.from_rational(q));
        acc.add(img, p);
    }
    const auto rec = acc.reconstruct();
    REQUIRE(rec.has_value());
    CHECK(*rec == truth);
    // 3 mod 7 has no fraction with numerator and denominator at most sqrt(7/2).
    CHECK_FALSE(rational_reconstruct(Integer(3), Integer(7)).has_value());
    CHECK(rational_reconstruct(Integer(51), Integer(101)) == make_rational(1, 2));
}

TEST_CASE("incremental basis") {
    const PrimeField f(101);
    IncrementalBasis b(3, f);
    CHECK(b.insert({0, 1, 2}));
    CHECK(b.insert({1, 0, 0}));
    CHECK_FALSE(b.insert({2, 3, 6}));
    CHECK(b.contains({5, 2, 4}));
    CHECK_FALSE(b.contains({0, 0, 1}));
    CHECK(b.rank() == 2);
}
