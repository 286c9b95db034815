#include "doctest.h"

#include "pogcl/catalog.hpp"
#include "pogcl/census.hpp"
#include "pogcl/errors.hpp"
#include "pogcl/syzygy.hpp"
#include "test_support.hpp"

#include <array>
#include <map>
#include <random>
#include <set>

using namespace pogcl;
using pogcl::test::P;

namespace {

Arrangement arr(std::initializer_list<const char*> texts) {
    std::vector<HomPoly> cs;
    for (const char* t : texts) cs.push_back(P(t));
    return Arrangement(cs);
}

using Vec3 = std::array<Rational, 3>;

Vec3 coeffs(const HomPoly& line) {
    return {line.coefficient({1, 0, 0}), line.coefficient({0, 1, 0}), line.coefficient({0, 0, 1})};
}

// Projective point normalised so its first nonzero entry is 1.
Vec3 normalise(Vec3 p) {
    for (const auto& v : p)
        if (v != 0) {
            const Rational s = v;
            for (auto& w : p) w /= s;
            break;
        }
    return p;
}

// Oracle for line arrangements: intersect every pair by cross product and count
// the lines through each point.
std::map<int, int> oracle_line_multiplicities(const std::vector<HomPoly>& lines) {
    std::map<std::array<std::string, 3>, std::set<std::size_t>> through;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const Vec3 a = coeffs(lines[i]), b = coeffs(lines[j]);
            Vec3 p{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
            p = normalise(p);
            std::array<std::string, 3> key{to_string(p[0]), to_string(p[1]), to_string(p[2])};
            through[key].insert(i);
            through[key].insert(j);
        }
    std::map<int, int> out;
    for (const auto& [key, set] : through) ++out[static_cast<int>(set.size())];
    return out;
}

}  // namespace

TEST_CASE("validate examples") {
    const Arrangement a = arr({"x", "y", "x^2 + y^2 - z^2"});
    CHECK(a.conic_count() == 1);
    CHECK(a.line_count() == 2);
    CHECK(a.degree() == 4);
    CHECK_THROWS_AS(arr({"x^2", "y"}), WrongDegree);
    CHECK_THROWS_AS(Arrangement({P("x*y")}, {ComponentKind::smooth_conic}), SingularConic);
    CHECK_THROWS_AS(arr({"x + y", "2*x + 2*y"}), RepeatedComponent);
    CHECK_THROWS_AS(arr({"x^3 + y^3 + z^3"}), WrongDegree);
    CHECK_THROWS_AS(Arrangement({P("x^2 + y^2")}, {ComponentKind::line}), WrongDegree);
    CHECK_THROWS_AS(Arrangement(std::vector<HomPoly>{}), InputError);
    CHECK(conic_rank(P("x^2 + y^2 - z^2")) == 3);
    CHECK(conic_rank(P("x*y")) == 2);
    CHECK(conic_rank(P("(x + y)^2")) == 1);
}

TEST_CASE("census examples") {
    SUBCASE("nodal plus-one generated quartic") {
        const CensusReport r = census(arr({"x", "y", "x^2 + y^2 - z^2"}));
        CHECK(r.n2 == 5);
        CHECK(r.t2 == 0);
        CHECK(r.n3 == 0);
        CHECK(r.tau_total == 5);
        CHECK(r.all_supported);
        CHECK(r.conics == 1);
        CHECK(r.lines == 2);
    }
    SUBCASE("conic with six lines") {
        const CensusReport r = census(build("cl8"));
        CHECK(r.n2 == 7);
        CHECK(r.t2 == 4);
        CHECK(r.n3 == 4);
        CHECK(r.tau_total == 35);
        CHECK(r.higher_ordinary.empty());
    }
    SUBCASE("four conics") {
        const CensusReport r = census(build("gm4"));
        CHECK(r.t2 == 11);
        CHECK(r.n2 == 2);
        CHECK(r.n3 == 0);
        CHECK(r.tau_total == 35);
    }
    SUBCASE("three concurrent lines") {
        const CensusReport r = census(arr({"x", "y", "x + y"}));
        CHECK(r.n3 == 1);
        CHECK(r.n2 == 0);
        CHECK(r.tau_total == 4);
        CHECK(r.points.at(0).description == "ordinary triple point");
    }
    SUBCASE("two concentric conics meet in two tacnodes") {
        const CensusReport r = census(arr({"x^2 + y^2 - z^2", "x^2 + y^2 - 4*z^2"}));
        CHECK(r.t2 == 2);
        CHECK(r.n2 == 0);
    }
}

TEST_CASE("census flags unsupported points") {
    SUBCASE("osculating conics") {
        // The conics meet with multiplicity 3 at (0:0:1) and transversally at (0:1:0).
        const CensusReport r = census(arr({"y*z - x^2", "y*z - x^2 - x*y"}));
        CHECK(r.unsupported == 1);
        CHECK(r.n2 == 1);
        CHECK_FALSE(r.all_supported);
        CHECK_FALSE(r.tau_complete);
        CHECK_THROWS_AS(cross_check_tau(arr({"y*z - x^2", "y*z - x^2 - x*y"}), r, SyzygyEngine()), std::logic_error);
    }
    SUBCASE("line through a tacnode") {
        const CensusReport r = census(arr({"x^2 + y^2 - z^2", "x - z", "y"}));
        CHECK(r.unsupported == 1);
        // Two lines meet there, so the point is rational and its tau is computed directly:
        // y (y - x^2) x locally, a D6 point.
        CHECK(r.tau_complete);
        CHECK(r.tau_total == 6 + 1);
        const TauCrossCheck tc = cross_check_tau(arr({"x^2 + y^2 - z^2", "x - z", "y"}), r, SyzygyEngine());
        CHECK(tc.equal);
    }
}

TEST_CASE("local tjurina numbers against normal forms") {
    using Pt = std::array<Rational, 3>;
    const Pt origin{0, 0, 1};
    // A_k: y^2 = x^(k+1) has tau = k.
    CHECK(local_tjurina(P("y^2*z - x^3"), origin) == 2);
    CHECK(local_tjurina(P("y^2*z^3 - x^5"), origin) == 4);
    // E6 and the ordinary r-fold point (r lines): tau = mu = 6 and (r-1)^2.
    CHECK(local_tjurina(P("y^3*z + x^4"), origin) == 6);
    CHECK(local_tjurina(P("x*y*(x - y)*(x + y)*(x + 2*y)"), origin) == 16);
    // T_{2,5,5} is not quasi-homogeneous: mu = 11, tau = mu - 1.
    CHECK(local_tjurina(P("x^5 + y^5 + x^2*y^2*z"), origin) == 10);
    // Smooth points and points off the curve.
    CHECK(local_tjurina(P("x^2 + y^2 - z^2"), Pt{1, 0, 1}) == 0);
    CHECK(local_tjurina(P("x*y"), Pt{1, 1, 1}) == 0);
    // Same node moved to (2:3:1), to (1:0:0) and scaled.
    CHECK(local_tjurina(P("(x - 2*z)*(y - 3*z)"), Pt{2, 3, 1}) == 1);
    CHECK(local_tjurina(P("y*z"), Pt{5, 0, 0}) == 1);
    CHECK(local_tjurina(P("(y - 3*z)^2*x - (x-2*z)^3"), Pt{4, 6, 2}) == 2);
    CHECK_THROWS_AS(local_tjurina(P("x*y"), Pt{0, 0, 0}), InputError);
}

TEST_CASE("census tau matches the Jacobian tau") {
    SyzygyEngine engine;
    for (const char* name : {"cl5", "cl6", "cl7", "nodal_pog", "conic_pair", "free_cl"}) {
        CAPTURE(name);
        const TauCrossCheck c = cross_check_tau(build(name), engine);
        CHECK(c.equal);
        CHECK(c.census_tau == c.syzygy_tau);
    }
}

TEST_CASE("Bezout audit holds on every small catalog entry") {
    for (const auto& e : catalog()) {
        if (e.degree > 8) continue;
        CAPTURE(e.name);
        const Arrangement a = e.builder({});
        const CensusReport r = census(a);
        const BezoutAudit b = bezout_audit(a, r);
        CHECK(b.pass);
        const long k = a.conic_count(), d = a.line_count();
        CHECK(b.expected == (2 * k + d) * (2 * k + d - 1) / 2 - k);
        CHECK(b.observed == b.expected);
        if (r.all_supported) CHECK(b.weighted == b.expected);
    }
}

TEST_CASE("census is independent of the seed") {
    for (const char* name : {"cl8", "gm3", "conic_pair"}) {
        CAPTURE(name);
        const Arrangement a = build(name);
        const CensusReport base = census(a, 1);
        for (std::uint64_t seed : {2u, 17u, 12345u}) {
            const CensusReport other = census(a, seed);
            CHECK(same_points(base, other));
            CHECK(other.n2 == base.n2);
            CHECK(other.t2 == base.t2);
            CHECK(other.n3 == base.n3);
        }
    }
}

TEST_CASE("census of random line arrangements agrees with the cross-product oracle") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> coef(-3, 3), count(3, 7);
    int checked = 0;
    while (checked < 40) {
        std::vector<HomPoly> lines;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            HomPoly l(1);
            l.add_term({1, 0, 0}, coef(rng));
            l.add_term({0, 1, 0}, coef(rng));
            l.add_term({0, 0, 1}, coef(rng));
            lines.push_back(l);
        }
        std::optional<Arrangement> a;
        try {
            a.emplace(lines);
        } catch (const InputError&) {
            continue;  // zero or repeated line
        }
        const CensusReport r = census(*a, static_cast<std::uint64_t>(checked) + 1);
        const auto expected = oracle_line_multiplicities(lines);
        CAPTURE(format_arrangement(*a));
        CHECK(r.n2 == (expected.count(2) ? expected.at(2) : 0));
        CHECK(r.n3 == (expected.count(3) ? expected.at(3) : 0));
        for (const auto& [mult, c] : expected)
            if (mult >= 4) CHECK(r.higher_ordinary.at(mult) == c);
        CHECK(r.t2 == 0);
        CHECK(r.all_supported);
        ++checked;
    }
}

TEST_CASE("census_diff sees the new nodes of an added line") {
    const Arrangement before = build("cl7");
    const Arrangement after = mutate(before, Mutation::add_line(P("x + 2*y + 5*z")));
    const CensusDiff diff = census_diff(census(before), census(after));
    // A generic line meets the conic twice and each of five lines once.
    CHECK(diff.added.size() == 7);
    CHECK(diff.added_of(PointType::node) == 7);
    CHECK(diff.removed.empty());

    const CensusDiff back = census_diff(census(after), census(before));
    CHECK(back.removed.size() == 7);
    CHECK(back.added.empty());
}

TEST_CASE("census_diff for xr plus a line") {
    const CensusDiff diff = census_diff(census(build("xr")), census(build("xr_plus_l")));
    CHECK(diff.added_of(PointType::node) == 18);
    CHECK(diff.added.size() == 18);
    CHECK(diff.removed.empty());
}

TEST_CASE("arrangement files round trip") {
    const std::string text =
        "# three lines and a conic\n"
        "line: x\n"
        "\n"
        "line: y - z   # trailing comment\n"
        "conic: x^2 + y^2 - z^2\n"
        "line: x + 1/2*y\n";
    const Arrangement a = parse_arrangement(text);
    CHECK(a.line_count() == 3);
    CHECK(a.conic_count() == 1);
    const Arrangement b = parse_arrangement(format_arrangement(a));
    CHECK(b.components() == a.components());
    CHECK(b.kinds() == a.kinds());

    for (const auto& e : catalog()) {
        const Arrangement c = e.builder({});
        CHECK(parse_arrangement(format_arrangement(c)).defining_poly() == c.defining_poly());
    }

    CHECK_THROWS_AS(parse_arrangement("line x\n"), InputError);
    CHECK_THROWS_AS(parse_arrangement("cubic: x^3\n"), InputError);
    CHECK_THROWS_AS(parse_arrangement("line: x +\n"), SyntaxError);
    CHECK_THROWS_AS(parse_arrangement("conic: x\n"), WrongDegree);
    CHECK_THROWS_AS(parse_arrangement("# nothing\n"), InputError);
}

TEST_CASE("xr plus z: the two tangential 7-branch points") {
    const Arrangement a = build("xr_plus_z");
    const CensusReport r = census(a);
    CHECK(r.unsupported == 2);
    REQUIRE(r.tau_complete);
    for (const auto& p : r.points)
        if (p.type == PointType::unsupported) {
            CHECK(p.branch_count == 7);
            // Seven smooth branches, one tangent pair: mu = 2*22 - 7 + 1 = 38; tau is smaller.
            CHECK(*p.local_tjurina < 38);
        }
    SyzygyEngine engine(RankBackend::modular(2, 3));
    const TauCrossCheck tc = cross_check_tau(a, r, engine);
    CHECK(tc.syzygy_tau == 259);
    CHECK(tc.equal);
}
