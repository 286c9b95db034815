#include "pogcl/census.hpp"

#include "pogcl/binary_form.hpp"
#include "pogcl/errors.hpp"
#include "pogcl/parse.hpp"
#include "pogcl/syzygy.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

namespace pogcl {

std::string to_string(ComponentKind kind) { return kind == ComponentKind::line ? "line" : "conic"; }

namespace {

std::vector<ComponentKind> infer_kinds(const std::vector<HomPoly>& cs) {
    std::vector<ComponentKind> out;
    for (const auto& c : cs) out.push_back(c.degree() == 2 ? ComponentKind::smooth_conic : ComponentKind::line);
    return out;
}

}  // namespace

Arrangement::Arrangement(std::vector<HomPoly> components) : Arrangement(components, infer_kinds(components)) {}

Arrangement::Arrangement(std::vector<HomPoly> components, std::vector<ComponentKind> kinds)
    : components_(std::move(components)), kinds_(std::move(kinds)) {
    validate(*this);
}

int Arrangement::conic_count() const noexcept {
    return static_cast<int>(std::count(kinds_.begin(), kinds_.end(), ComponentKind::smooth_conic));
}

int Arrangement::line_count() const noexcept {
    return static_cast<int>(std::count(kinds_.begin(), kinds_.end(), ComponentKind::line));
}

Arrangement Arrangement::with_component(const HomPoly& c) const {
    auto cs = components_;
    auto ks = kinds_;
    cs.push_back(c);
    ks.push_back(c.degree() == 2 ? ComponentKind::smooth_conic : ComponentKind::line);
    return Arrangement(std::move(cs), std::move(ks));
}

Arrangement Arrangement::without_component(std::size_t index) const {
    if (index >= components_.size()) throw InputError("component index " + std::to_string(index) + " out of range");
    if (components_.size() == 1) throw InputError("cannot delete the only component");
    auto cs = components_;
    auto ks = kinds_;
    cs.erase(cs.begin() + static_cast<long>(index));
    ks.erase(ks.begin() + static_cast<long>(index));
    return Arrangement(std::move(cs), std::move(ks));
}

int conic_rank(const HomPoly& q) {
    if (q.degree() != 2) throw std::invalid_argument("conic_rank needs a quadratic form");
    std::array<std::array<Rational, 3>, 3> m;
    const Exponent sq[3] = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    for (int i = 0; i < 3; ++i) m[i][i] = q.coefficient(sq[i]);
    m[0][1] = m[1][0] = q.coefficient({1, 1, 0}) / 2;
    m[0][2] = m[2][0] = q.coefficient({1, 0, 1}) / 2;
    m[1][2] = m[2][1] = q.coefficient({0, 1, 1}) / 2;
    int rank = 0;
    for (int c = 0; c < 3 && rank < 3; ++c) {
        int r = rank;
        while (r < 3 && m[r][c] == 0) ++r;
        if (r == 3) continue;
        std::swap(m[r], m[rank]);
        for (int i = rank + 1; i < 3; ++i) {
            const Rational t = m[i][c] / m[rank][c];
            for (int j = c; j < 3; ++j) m[i][j] -= t * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

const Arrangement& validate(const Arrangement& arr) {
    const auto& cs = arr.components();
    const auto& ks = arr.kinds();
    if (cs.empty()) throw InputError("an arrangement needs at least one component");
    if (ks.size() != cs.size()) throw InputError("one kind per component expected");
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const HomPoly& c = cs[i];
        const std::string where = "component " + std::to_string(i) + " (" + c.to_string() + ")";
        if (c.is_zero()) throw WrongDegree(where + " is zero");
        if (ks[i] == ComponentKind::line && c.degree() != 1)
            throw WrongDegree(where + " is declared a line but has degree " + std::to_string(c.degree()));
        if (ks[i] == ComponentKind::smooth_conic) {
            if (c.degree() != 2)
                throw WrongDegree(where + " is declared a conic but has degree " + std::to_string(c.degree()));
            const int rank = conic_rank(c);
            if (rank < 2) throw WrongDegree(where + " is a double line, neither a line nor a smooth conic");
            if (rank == 2) throw SingularConic(where + " is a singular conic (a line pair)");
        }
    }
    // Lines and smooth conics are irreducible, so coprime means not proportional.
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (cs[i].degree() == cs[j].degree() && cs[i].primitive_part() == cs[j].primitive_part())
                throw RepeatedComponent("components " + std::to_string(i) + " and " + std::to_string(j) +
                                        " define the same curve");
    return arr;
}

namespace {

// Inserts a square-free form into a pairwise coprime set of square-free forms,
// splitting entries so the set stays pairwise coprime.
void refine_insert(std::vector<BinaryForm>& basis, BinaryForm a) {
    std::vector<BinaryForm> fresh;
    for (std::size_t idx = 0; idx < basis.size() && a.degree() > 0;) {
        const BinaryForm g = gcd_forms(a, basis[idx]);
        if (g.degree() == 0) {
            ++idx;
            continue;
        }
        const BinaryForm rest = basis[idx].exact_div(g);
        basis.erase(basis.begin() + static_cast<long>(idx));
        fresh.push_back(g);
        if (rest.degree() > 0) fresh.push_back(rest.normalized());
        a = a.exact_div(g).normalized();
    }
    if (a.degree() > 0) fresh.push_back(a.normalized());
    for (auto& f : fresh) basis.push_back(std::move(f));
}

std::string describe_point(PointType t, int r) {
    switch (t) {
        case PointType::node:
            return "node";
        case PointType::tacnode:
            return "tacnode";
        case PointType::ordinary_multiple:
            return r == 3 ? "ordinary triple point" : "ordinary " + std::to_string(r) + "-fold point";
        case PointType::unsupported:
            break;
    }
    return "unsupported";
}

SingularPoint classify_point(const std::map<std::pair<std::size_t, std::size_t>, int>& sig) {
    SingularPoint p;
    std::set<std::size_t> comps;
    int max_mult = 0;
    for (const auto& [pair, mult] : sig) {
        p.incident.push_back({pair.first, pair.second, mult});
        comps.insert(pair.first);
        comps.insert(pair.second);
        max_mult = std::max(max_mult, mult);
    }
    const int r = static_cast<int>(comps.size());
    p.branch_count = r;
    if (r == 2 && max_mult == 1) {
        p.type = PointType::node;
        p.local_tjurina = 1;
    } else if (r == 2 && max_mult == 2) {
        p.type = PointType::tacnode;
        p.local_tjurina = 3;
    } else if (r >= 3 && max_mult == 1) {
        p.type = PointType::ordinary_multiple;
        p.local_tjurina = (r - 1) * (r - 1);
    } else {
        p.type = PointType::unsupported;
    }
    p.description = describe_point(p.type, r);
    if (p.type == PointType::unsupported) {
        std::ostringstream os;
        os << "unsupported: " << r << " branches, pairwise multiplicities";
        for (const auto& inc : p.incident) os << " (" << inc.i << "," << inc.j << "):" << inc.multiplicity;
        p.description = os.str();
    }
    return p;
}

using Affine = std::map<std::pair<int, int>, Rational>;

// g(M (x, y, 1)) where M sends (0:0:1) to p, so the point sits at the affine origin.
Affine affine_at(const HomPoly& g, const std::array<Rational, 3>& p) {
    int c = 2;
    while (c >= 0 && p[static_cast<std::size_t>(c)] == 0) --c;
    if (c < 0) throw InputError("local_tjurina: (0:0:0) is not a point");
    LinearChange::Matrix m{};
    int col = 0;
    for (int i = 0; i < 3; ++i)
        if (i != c) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col++)] = 1;
    for (std::size_t i = 0; i < 3; ++i) m[i][2] = p[i];
    const HomPoly h = apply_change(g, LinearChange(m));
    Affine out;
    for (const auto& [e, coef] : h.terms()) out[{e.a, e.b}] += coef;
    return out;
}

Affine affine_partial(const Affine& f, bool wrt_x) {
    Affine out;
    for (const auto& [e, coef] : f) {
        const int k = wrt_x ? e.first : e.second;
        if (k == 0) continue;
        out[wrt_x ? std::pair{e.first - 1, e.second} : std::pair{e.first, e.second - 1}] += coef * k;
    }
    return out;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t r = rank;
        while (r < rows.size() && rows[r][c] == 0) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[r], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rational t = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= t * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

// dim k[x,y] / (gens + m^n).
long colength_truncated(const std::vector<Affine>& gens, int n) {
    auto index = [](int a, int b) {
        const int d = a + b;
        return static_cast<std::size_t>(d * (d + 1) / 2 + b);
    };
    const std::size_t cols = static_cast<std::size_t>(n * (n + 1) / 2);
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens)
        for (int d = 0; d < n; ++d)
            for (int b = 0; b <= d; ++b) {
                std::vector<Rational> row(cols);
                bool any = false;
                for (const auto& [e, coef] : g) {
                    const int ea = e.first + d - b, eb = e.second + b;
                    if (ea + eb >= n || coef == 0) continue;
                    row[index(ea, eb)] += coef;
                    any = true;
                }
                if (any) rows.push_back(std::move(row));
            }
    return static_cast<long>(cols) - static_cast<long>(rational_rank(std::move(rows)));
}

// The intersection of two incident lines, if the point has two.
std::optional<std::array<Rational, 3>> line_meet(const Arrangement& arr, const SingularPoint& p) {
    std::vector<std::size_t> lines;
    std::set<std::size_t> comps;
    for (const auto& inc : p.incident) {
        comps.insert(inc.i);
        comps.insert(inc.j);
    }
    for (std::size_t c : comps)
        if (arr.kinds()[c] == ComponentKind::line) lines.push_back(c);
    if (lines.size() < 2) return std::nullopt;
    auto coeffs = [&](std::size_t i) {
        const HomPoly& l = arr.components()[i];
        return std::array<Rational, 3>{l.coefficient({1, 0, 0}), l.coefficient({0, 1, 0}), l.coefficient({0, 0, 1})};
    };
    const auto u = coeffs(lines[0]), v = coeffs(lines[1]);
    return std::array<Rational, 3>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// Unsupported points at rational coordinates get their local Tjurina number computed directly.
void fill_local_tau(const Arrangement& arr, std::vector<SingularPoint>& points) {
    for (auto& p : points) {
        if (p.type != PointType::unsupported || p.local_tjurina) continue;
        const auto where = line_meet(arr, p);
        if (!where) continue;
        std::set<std::size_t> comps;
        for (const auto& inc : p.incident) {
            comps.insert(inc.i);
            comps.insert(inc.j);
        }
        std::vector<HomPoly> through;
        for (std::size_t c : comps) through.push_back(arr.components()[c]);
        // The other components are units at the point and do not change tau.
        p.local_tjurina = static_cast<int>(local_tjurina(product(through), *where));
    }
}

struct NonGeneric {
    std::string why;
};

// Points (with signatures) under one coordinate change; throws NonGeneric.
std::vector<SingularPoint> analyze(const Arrangement& arr, const LinearChange& t) {
    const auto& cs = arr.components();
    std::vector<HomPoly> g;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        g.push_back(apply_change(cs[i], t));
        const int deg = g.back().degree();
        if (g.back().coefficient({0, 0, deg}) == 0)
            throw NonGeneric{"projection centre lies on component " + std::to_string(i)};
    }
    struct PairFactors {
        std::size_t i, j;
        std::vector<std::pair<BinaryForm, int>> factors;
    };
    std::vector<PairFactors> pairs;
    std::vector<BinaryForm> basis;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const BinaryForm r = resultant_in_z(g[i], g[j]);
            if (r.is_zero()) throw ConsistencyFailure("components share a factor after validation");
            auto sq = squarefree_decompose(r);
            for (const auto& [h, mult] : sq) refine_insert(basis, h);
            pairs.push_back({i, j, std::move(sq)});
        }

    std::vector<SingularPoint> points;
    for (const auto& b : basis) {
        std::map<std::pair<std::size_t, std::size_t>, int> sig;
        for (const auto& pf : pairs)
            for (const auto& [h, mult] : pf.factors)
                if (h.divisible_by(b)) sig[{pf.i, pf.j}] = mult;
        // Every pair of components through the point must meet there.
        std::set<std::size_t> comps;
        for (const auto& [pair, mult] : sig) {
            comps.insert(pair.first);
            comps.insert(pair.second);
        }
        for (auto a = comps.begin(); a != comps.end(); ++a)
            for (auto c = std::next(a); c != comps.end(); ++c)
                if (!sig.count({*a, *c}))
                    throw NonGeneric{"two intersection points share a projection"};
        const SingularPoint p = classify_point(sig);
        for (int copy = 0; copy < b.degree(); ++copy) points.push_back(p);
    }
    std::sort(points.begin(), points.end(),
              [](const SingularPoint& l, const SingularPoint& r) { return l.incident < r.incident; });
    for (std::size_t i = 0; i < points.size(); ++i) points[i].cluster_id = "P" + std::to_string(i + 1);
    return points;
}

CensusReport summarize(const Arrangement& arr, std::vector<SingularPoint> points) {
    CensusReport rep;
    rep.conics = arr.conic_count();
    rep.lines = arr.line_count();
    for (const auto& p : points) {
        switch (p.type) {
            case PointType::node:
                ++rep.n2;
                break;
            case PointType::tacnode:
                ++rep.t2;
                break;
            case PointType::ordinary_multiple:
                if (p.branch_count == 3)
                    ++rep.n3;
                else
                    ++rep.higher_ordinary[p.branch_count];
                break;
            case PointType::unsupported:
                ++rep.unsupported;
                break;
        }
        if (p.local_tjurina) rep.tau_total += *p.local_tjurina;
    }
    rep.all_supported = rep.unsupported == 0;
    rep.quasi_homogeneous = rep.all_supported;
    rep.tau_complete = std::all_of(points.begin(), points.end(),
                                   [](const SingularPoint& p) { return p.local_tjurina.has_value(); });
    rep.points = std::move(points);
    return rep;
}

bool same_signatures(const std::vector<SingularPoint>& a, const std::vector<SingularPoint>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].incident != b[i].incident || a[i].type != b[i].type) return false;
    return true;
}

}  // namespace

long local_tjurina(const HomPoly& g, const std::array<Rational, 3>& p) {
    const Affine f = affine_at(g, p);
    if (f.count({0, 0}) && f.at({0, 0}) != 0) return 0;
    const std::vector<Affine> gens{f, affine_partial(f, true), affine_partial(f, false)};
    // By Nakayama, once adding m^n changes nothing, m^n already lies in the local ideal.
    constexpr int kMaxOrder = 200;
    long prev = colength_truncated(gens, 1);
    for (int n = 2; n <= kMaxOrder; ++n) {
        const long cur = colength_truncated(gens, n);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw InputError("local_tjurina: no isolated singularity at the point");
}

bool same_points(const CensusReport& a, const CensusReport& b) { return same_signatures(a.points, b.points); }

CensusReport census(const Arrangement& arr, std::uint64_t seed) {
    validate(arr);
    constexpr int kAttempts = 5;
    // Small entries put the projection centre on a component too often for large arrangements.
    constexpr int kChangeBound = 1000;
    std::vector<std::string> failures;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
        const LinearChange t1 = LinearChange::random(rng, kChangeBound);
        const LinearChange t2 = LinearChange::random(rng, kChangeBound);
        try {
            auto first = analyze(arr, t1);
            auto second = analyze(arr, t2);
            if (!same_signatures(first, second)) {
                failures.push_back("attempt " + std::to_string(attempt + 1) + ": the two projections disagree");
                continue;
            }
            fill_local_tau(arr, first);
            CensusReport rep = summarize(arr, std::move(first));
            rep.seed_used = seed;
            rep.attempts = attempt + 1;
            return rep;
        } catch (const NonGeneric& e) {
            failures.push_back("attempt " + std::to_string(attempt + 1) + ": " + e.why);
        }
    }
    std::string msg = "no generic projection found in " + std::to_string(kAttempts) + " attempts";
    for (const auto& f : failures) msg += "; " + f;
    throw GenericityFailure(msg);
}

BezoutAudit bezout_audit(const Arrangement& arr, const CensusReport& report) {
    BezoutAudit a;
    const auto& cs = arr.components();
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) a.expected += static_cast<long>(cs[i].degree()) * cs[j].degree();
    for (const auto& p : report.points)
        for (const auto& inc : p.incident) a.observed += inc.multiplicity;
    a.weighted = report.n2 + 2L * report.t2 + 3L * report.n3;
    for (const auto& [r, count] : report.higher_ordinary) a.weighted += static_cast<long>(r) * (r - 1) / 2 * count;
    a.pass = a.observed == a.expected && (!report.all_supported || a.weighted == a.expected);
    return a;
}

TauCrossCheck cross_check_tau(const Arrangement& arr, const CensusReport& report, const SyzygyEngine& engine) {
    if (!report.tau_complete) throw std::logic_error("cross_check_tau needs a local tau at every point");
    TauCrossCheck c;
    c.census_tau = report.tau_total;
    c.syzygy_tau = engine.tjurina(arr.defining_poly()).tau;
    c.equal = c.census_tau == c.syzygy_tau;
    return c;
}

TauCrossCheck cross_check_tau(const Arrangement& arr, const SyzygyEngine& engine, std::uint64_t seed) {
    return cross_check_tau(arr, census(arr, seed), engine);
}

int CensusDiff::added_of(PointType t) const {
    return static_cast<int>(std::count_if(added.begin(), added.end(), [t](const SingularPoint& p) { return p.type == t; }));
}

CensusDiff census_diff(const CensusReport& before, const CensusReport& after) {
    CensusDiff d;
    std::multiset<std::vector<Incidence>> old_sigs, new_sigs;
    for (const auto& p : before.points) old_sigs.insert(p.incident);
    for (const auto& p : after.points) new_sigs.insert(p.incident);
    for (const auto& p : after.points) {
        auto it = old_sigs.find(p.incident);
        if (it != old_sigs.end())
            old_sigs.erase(it);
        else
            d.added.push_back(p);
    }
    for (const auto& p : before.points) {
        auto it = new_sigs.find(p.incident);
        if (it != new_sigs.end())
            new_sigs.erase(it);
        else
            d.removed.push_back(p);
    }
    return d;
}

Arrangement parse_arrangement(std::string_view text) {
    std::vector<HomPoly> cs;
    std::vector<ComponentKind> ks;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError("line " + std::to_string(line_no) + ": expected 'line: <poly>' or 'conic: <poly>'");
        std::string kind = line.substr(first, colon - first);
        kind.erase(kind.find_last_not_of(" \t") + 1);
        ComponentKind k;
        if (kind == "line")
            k = ComponentKind::line;
        else if (kind == "conic")
            k = ComponentKind::smooth_conic;
        else
            throw InputError("line " + std::to_string(line_no) + ": unknown component kind '" + kind + "'");
        try {
            cs.push_back(parse_poly(line.substr(colon + 1)));
        } catch (const SyntaxError& e) {
            throw SyntaxError(e.position(), "line " + std::to_string(line_no) + ": " + e.what());
        }
        ks.push_back(k);
        if (end == text.size()) break;
    }
    return Arrangement(std::move(cs), std::move(ks));
}

std::string format_arrangement(const Arrangement& arr) {
    std::ostringstream os;
    for (std::size_t i = 0; i < arr.size(); ++i)
        os << to_string(arr.kinds()[i]) << ": " << arr.components()[i].to_string() << "\n";
    return os.str();
}

}  // namespace pogcl
