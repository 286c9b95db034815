#include "pogcl/feasibility.hpp"

#include "pogcl/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pogcl {

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

long choose2(long m) { return m * (m - 1) / 2; }

ConstraintEntry not_applicable(std::string id, std::string note) {
    ConstraintEntry e;
    e.id = std::move(id);
    e.slack = 0;
    e.note = std::move(note);
    return e;
}

ConstraintEntry inequality(std::string id, const Rational& slack) {
    ConstraintEntry e;
    e.id = std::move(id);
    e.applicable = true;
    e.slack = slack;
    e.satisfied = slack >= 0;
    return e;
}

void check_alpha(const Rational& alpha) {
    if (alpha < R(1, 3) || alpha > R(2, 3))
        throw AlphaOutOfRange("alpha = " + to_string(alpha) + " lies outside [1/3, 2/3]");
}

}  // namespace

std::string to_string(const WeakCombinatorics& wc) {
    std::ostringstream os;
    os << '(' << wc.k << ',' << wc.d << ';' << wc.n2 << ',' << wc.t2 << ',' << wc.n3 << ')';
    return os.str();
}

const ConstraintEntry* ConstraintReport::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

bool ConstraintReport::passes() const { return first_failure().empty(); }

std::string ConstraintReport::first_failure() const {
    for (const auto& e : entries)
        if (e.applicable && !e.satisfied) return e.id;
    return {};
}

Integer naive_count(const WeakCombinatorics& wc) {
    const long m = wc.degree();
    return Integer(choose2(m) - wc.k) - (Integer(wc.n2) + 2 * Integer(wc.t2) + 3 * Integer(wc.n3));
}

std::vector<int> solve_d1(const WeakCombinatorics& wc, int nu) {
    // d1^2 - (m-1) d1 + (m-1)^2 - (tau + nu) = 0
    const long m = wc.degree();
    const long b = m - 1;
    const long c = b * b - (wc.tau() + nu);
    const long disc = b * b - 4 * c;
    std::vector<int> roots;
    if (disc < 0) return roots;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), Integer(disc).get_mpz_t());
    if (s * s != disc) return roots;
    const long sr = s.get_si();
    for (long num : {b - sr, b + sr}) {
        if (num % 2 != 0) continue;
        const long d1 = num / 2;
        if (d1 >= 1 && 2 * d1 <= m && std::find(roots.begin(), roots.end(), d1) == roots.end())
            roots.push_back(static_cast<int>(d1));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string to_string(SingularityMode mode) { return mode == SingularityMode::nodal ? "nodal" : "simple_ade"; }

SingularityMode parse_singularity_mode(const std::string& text) {
    if (text == "nodal") return SingularityMode::nodal;
    if (text == "simple_ade") return SingularityMode::simple_ade;
    throw InputError("unknown singularity mode '" + text + "' (expected nodal or simple_ade)");
}

namespace {

Rational d1_lower_real(int m, SingularityMode mode) {
    return mode == SingularityMode::nodal ? R(m - 2) : R(2 * m, 3) - 2;
}

}  // namespace

std::pair<int, int> d1_bounds(int m, SingularityMode mode) {
    if (m < 3) throw InputError("d1_bounds needs m >= 3");
    return {static_cast<int>(ceil_to_long(d1_lower_real(m, mode))), m / 2};
}

ConstraintEntry miyaoka(const WeakCombinatorics& wc) {
    if (wc.d != 0 || wc.k < 3) return not_applicable("miyaoka", "needs d = 0 and k >= 3");
    const Rational k = wc.k;
    return inequality("miyaoka", R(4, 9) * k * k + R(4, 3) * k - wc.t2);
}

ConstraintEntry hirzebruch(const WeakCombinatorics& wc, const HirzebruchGates& g) {
    if (wc.d == 0) {
        if (wc.k < g.conic_min_k)
            return not_applicable("hirzebruch", "conic form needs k >= " + std::to_string(g.conic_min_k));
    } else if (wc.k < g.mixed_min_k || wc.d < g.mixed_min_d) {
        return not_applicable("hirzebruch", "conic-line form needs k >= " + std::to_string(g.mixed_min_k) +
                                                " and d >= " + std::to_string(g.mixed_min_d));
    }
    const Rational lhs = Rational(8 * wc.k + wc.n2) + R(3, 4) * wc.n3;
    const Rational rhs = Rational(wc.d) + R(5, 2) * wc.t2;
    return inequality("hirzebruch", lhs - rhs);
}

LangerCoefficients langer_lhs_coefficients(const Rational& a) {
    check_alpha(a);
    return {6 * a - 3 * a * a, -6 * a * a + 15 * a - R(3, 8), R(-27, 4) * a * a + 18 * a};
}

Rational OrbifoldRow::e_orb(const Rational& a) const {
    if (type == "A1") return (1 - a) * (1 - a);
    if (type == "A3") return (3 - 4 * a) * (3 - 4 * a) / 8;
    return (2 - 3 * a) * (2 - 3 * a) / 4;
}

bool OrbifoldRow::in_range(const Rational& a) const {
    const bool low = alpha_min_open ? a > alpha_min : a >= alpha_min;
    return low && a <= alpha_max;
}

const std::vector<OrbifoldRow>& orbifold_table() {
    static const std::vector<OrbifoldRow> rows{
        {"A1", 1, R(0), true, R(1)},
        {"A3", 3, R(1, 4), false, R(3, 4)},
        {"D4", 4, R(0), true, R(2, 3)},
    };
    return rows;
}

Rational orbifold_contribution(const OrbifoldRow& row, const Rational& a) {
    return 3 * (a * (row.mu - 1) + 1 - row.e_orb(a));
}

Rational langer_lhs(const WeakCombinatorics& wc, const Rational& a) {
    const LangerCoefficients c = langer_lhs_coefficients(a);
    return wc.n2 * c.node + wc.t2 * c.tacnode + wc.n3 * c.triple;
}

Rational langer_rhs(int m, const Rational& a) {
    check_alpha(a);
    return (3 * a - a * a) * m * m - 3 * a * m;
}

ConstraintEntry langer_check(const WeakCombinatorics& wc, const Rational& a) {
    check_alpha(a);
    if (wc.degree() < 9) return not_applicable("langer", "needs m >= 9");
    ConstraintEntry e = inequality("langer", langer_rhs(wc.degree(), a) - langer_lhs(wc, a));
    e.witness = a;
    return e;
}

LangerSweep langer_sweep(const WeakCombinatorics& wc, int grid, const std::vector<Rational>& extra) {
    if (grid < 1) throw InputError("alpha grid must have at least one step");
    if (wc.degree() < 9) throw std::logic_error("langer_sweep needs m >= 9");
    std::set<Rational> alphas;
    for (int j = 0; j <= grid; ++j) alphas.insert(R(1, 3) + R(j, 3L * grid));
    for (const auto& a : extra) {
        check_alpha(a);
        alphas.insert(a);
    }
    // RHS - LHS as a quadratic in alpha.
    const long m = wc.degree();
    const Rational c2 = Rational(-m * m + 3 * wc.n2 + 6 * wc.t2) + R(27, 4) * wc.n3;
    const Rational c1 = Rational(3 * m * m - 3 * m - 6 * wc.n2 - 15 * wc.t2 - 18 * wc.n3);
    const Rational c0 = R(3, 8) * wc.t2;
    LangerSweep s;
    bool first = true;
    for (const auto& a : alphas) {
        const Rational slack = (c2 * a + c1) * a + c0;
        if (first || slack < s.worst_slack) {
            s.worst_slack = slack;
            s.witness = a;
            first = false;
        }
    }
    s.points = static_cast<int>(alphas.size());
    return s;
}

Gates Gates::conic_defaults() {
    Gates g;
    g.langer = false;
    return g;
}

std::string Gates::to_string() const {
    std::ostringstream os;
    os << "d1_bounds=" << (d1_bounds ? "on" : "off") << " miyaoka=" << (miyaoka ? "on" : "off")
       << " hirzebruch=" << (hirzebruch ? "on" : "off") << "(conic k>=" << hirzebruch_gates.conic_min_k
       << ", mixed k>=" << hirzebruch_gates.mixed_min_k << " d>=" << hirzebruch_gates.mixed_min_d << ")"
       << " langer=" << (langer ? "on" : "off");
    if (langer) {
        os << "(grid " << langer_grid;
        for (const auto& a : langer_extra_alphas) os << ", +" << pogcl::to_string(a);
        os << ")";
    }
    return os.str();
}

namespace {

ConstraintEntry naive_entry(const WeakCombinatorics& wc) {
    ConstraintEntry e;
    e.id = "naive_count";
    e.applicable = true;
    const Integer r = naive_count(wc);
    e.slack = Rational(-abs(r));
    e.satisfied = r == 0;
    return e;
}

// Residual of the closest admissible integer d1 when there is no root.
ConstraintEntry d1_equation_entry(const WeakCombinatorics& wc, int nu, std::optional<int> d1) {
    ConstraintEntry e;
    e.id = "d1_equation";
    e.applicable = true;
    if (d1) {
        e.satisfied = true;
        e.slack = 0;
        e.witness = Rational(*d1);
        return e;
    }
    const long m = wc.degree();
    std::optional<long> best;
    for (long x = 1; 2 * x <= m; ++x) {
        const long res = std::labs(x * x - x * (m - 1) + (m - 1) * (m - 1) - (wc.tau() + nu));
        if (!best || res < *best) {
            best = res;
            e.witness = Rational(x);
        }
    }
    e.satisfied = false;
    e.slack = best ? Rational(-*best) : Rational(-1);
    if (!best) e.note = "no d1 with 1 <= d1 <= m/2";
    return e;
}

ConstraintEntry d1_bounds_entry(int m, int d1, SingularityMode mode) {
    ConstraintEntry e = inequality("d1_bounds", std::min<Rational>(Rational(d1) - d1_lower_real(m, mode), R(m, 2) - d1));
    e.witness = Rational(d1);
    e.note = to_string(mode);
    return e;
}

ConstraintEntry langer_entry(const WeakCombinatorics& wc, const Gates& g) {
    if (wc.degree() < 9) return not_applicable("langer", "needs m >= 9");
    const LangerSweep s = langer_sweep(wc, g.langer_grid, g.langer_extra_alphas);
    ConstraintEntry e = inequality("langer", s.worst_slack);
    e.witness = s.witness;
    e.note = std::to_string(s.points) + " alphas";
    return e;
}

ConstraintReport evaluate(const WeakCombinatorics& wc, int nu, std::optional<int> d1, SingularityMode mode,
                          const Gates& g) {
    ConstraintReport rep;
    rep.entries.push_back(naive_entry(wc));
    rep.entries.push_back(d1_equation_entry(wc, nu, d1));
    if (!g.d1_bounds)
        rep.entries.push_back(not_applicable("d1_bounds", "disabled"));
    else if (d1)
        rep.entries.push_back(d1_bounds_entry(wc.degree(), *d1, mode));
    else
        rep.entries.push_back(not_applicable("d1_bounds", "no d1"));
    rep.entries.push_back(g.miyaoka ? miyaoka(wc) : not_applicable("miyaoka", "disabled"));
    rep.entries.push_back(g.hirzebruch ? hirzebruch(wc, g.hirzebruch_gates) : not_applicable("hirzebruch", "disabled"));
    rep.entries.push_back(g.langer ? langer_entry(wc, g) : not_applicable("langer", "disabled"));
    return rep;
}

void check_query(int k, int d, int nu) {
    if (nu < 1) throw InputError("defect must be >= 1");
    if (k < 0 || d < 0) throw InputError("conic and line counts must be non-negative");
    if (2 * k + d < 3) throw InputError("degree 2k + d must be at least 3");
}

void evaluate_triple(Enumeration& out, const WeakCombinatorics& wc, int nu, SingularityMode mode, const Gates& g) {
    const std::vector<int> roots = solve_d1(wc, nu);
    if (roots.empty()) {
        ConstraintReport rep = evaluate(wc, nu, std::nullopt, mode, g);
        out.eliminated.push_back({wc, std::nullopt, rep.first_failure(), std::move(rep)});
        return;
    }
    for (int d1 : roots) {
        ConstraintReport rep = evaluate(wc, nu, d1, mode, g);
        std::string killer = rep.first_failure();
        if (killer.empty()) {
            Candidate c;
            c.wc = wc;
            c.nu = nu;
            c.d1 = d1;
            c.tau = wc.tau();
            c.report = std::move(rep);
            out.survivors.push_back(std::move(c));
        } else {
            out.eliminated.push_back({wc, d1, std::move(killer), std::move(rep)});
        }
    }
}

}  // namespace

Enumeration enumerate(int k, int d, int nu, SingularityMode mode, const Gates& gates) {
    check_query(k, d, nu);
    Enumeration out;
    out.gates = gates;
    out.mode = mode;
    out.nu = nu;
    const long m = 2 * k + d;
    const long total = choose2(m) - k;  // n2 + 2 t2 + 3 n3
    if (total < 0) return out;
    const long cap = choose2(m);
    for (long n3 = 0; n3 <= cap && 3 * n3 <= total; ++n3) {
        for (long t2 = 0; t2 <= cap && 2 * t2 + 3 * n3 <= total; ++t2) {
            if (mode == SingularityMode::nodal && (n3 != 0 || t2 != 0)) continue;
            const long n2 = total - 2 * t2 - 3 * n3;
            WeakCombinatorics wc{k, d, static_cast<int>(n2), static_cast<int>(t2), static_cast<int>(n3)};
            evaluate_triple(out, wc, nu, mode, gates);
        }
    }
    auto by_wc = [](const auto& a, const auto& b) {
        return std::tie(a.wc.n3, a.wc.t2, a.wc.n2, a.d1) < std::tie(b.wc.n3, b.wc.t2, b.wc.n2, b.d1);
    };
    std::sort(out.survivors.begin(), out.survivors.end(), by_wc);
    std::sort(out.eliminated.begin(), out.eliminated.end(), by_wc);
    return out;
}

Enumeration enumerate_degree(int m, int nu, SingularityMode mode, const Gates& gates) {
    if (m < 3) throw InputError("degree must be at least 3");
    Enumeration out;
    out.gates = gates;
    out.mode = mode;
    out.nu = nu;
    for (int k = 1; 2 * k + 1 <= m; ++k) {
        Enumeration part = enumerate(k, m - 2 * k, nu, mode, gates);
        for (auto& c : part.survivors) out.survivors.push_back(std::move(c));
        for (auto& e : part.eliminated) out.eliminated.push_back(std::move(e));
    }
    return out;
}

std::vector<CapRow> tacnode_cap_trace(int m, int nu) {
    const auto [lo, hi] = d1_bounds(m, SingularityMode::simple_ade);
    if (lo != hi) throw InputError("tacnode_cap_trace needs d1 pinned by d1_bounds; m = " + std::to_string(m));
    const long d1 = lo;
    const long tau = (m - 1L) * (m - 1) - d1 * (m - d1 - 1) - nu;
    std::vector<CapRow> rows;
    for (int k = 1; 2 * k + 1 <= m; ++k) {
        const int d = m - 2 * k;
        const long count = choose2(m) - k;     // n2 + 2t2 + 3n3
        const long s = tau - count;            // t2 + n3
        const long p = count - 2 * s;          // n2 + n3
        CapRow row{};
        row.k = k;
        row.d = d;
        row.forced_t2_plus_n3 = static_cast<int>(s);
        row.forced_n2_plus_n3 = static_cast<int>(p);
        row.n3_max = static_cast<int>(std::max(p, 0L));
        // 8k + n2 + n3 >= 8k + n2 + 3n3/4 >= d + 5t2/2
        row.t2_max = static_cast<int>(floor_to_long(R(2, 5) * (8 * k + p - d)));
        row.sum_max = row.n3_max + row.t2_max;
        row.contradiction = p < 0 || s > row.sum_max;
        rows.push_back(row);
    }
    return rows;
}

ConicTrace conic_trace(int k, int nu, const Gates& gates) {
    if (k < 2) throw InputError("conic_trace needs k >= 2");
    ConicTrace tr;
    tr.k = k;
    tr.t2_min = k * (k - 1) - 3;
    tr.t2_max = static_cast<int>(floor_to_long(R(4, 9) * k * k + R(4, 3) * k));
    const long total = 4 * choose2(k);
    for (int t2 = std::max(tr.t2_min, 0); t2 <= tr.t2_max; ++t2)
        for (long n3 = 0; 2 * t2 + 3 * n3 <= total; ++n3) {
            WeakCombinatorics wc{k, 0, static_cast<int>(total - 2 * t2 - 3 * n3), t2, static_cast<int>(n3)};
            const std::vector<int> roots = solve_d1(wc, nu);
            if (roots.empty()) {
                ConstraintReport rep = evaluate(wc, nu, std::nullopt, SingularityMode::simple_ade, gates);
                tr.triples.push_back({wc, std::nullopt, rep.first_failure(), std::move(rep)});
            }
            for (int d1 : roots) {
                ConstraintReport rep = evaluate(wc, nu, d1, SingularityMode::simple_ade, gates);
                tr.triples.push_back({wc, d1, rep.first_failure(), std::move(rep)});
            }
        }
    return tr;
}

bool ReproductionReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.pass; });
}

namespace {

bool has(const std::vector<Candidate>& cs, const WeakCombinatorics& wc, std::optional<int> d1 = std::nullopt) {
    return std::any_of(cs.begin(), cs.end(), [&](const Candidate& c) { return c.wc == wc && (!d1 || c.d1 == *d1); });
}

std::string list(const std::vector<Candidate>& cs) {
    std::string s;
    for (const auto& c : cs) s += (s.empty() ? "" : " ") + to_string(c.wc) + "[d1=" + std::to_string(c.d1) + "]";
    return s.empty() ? "none" : s;
}

}  // namespace

ReproductionReport reproduce(const ReproductionOptions& opt) {
    ReproductionReport rep;
    auto check = [&](std::string id, std::string claim, bool pass, std::string detail) {
        rep.checks.push_back({std::move(id), std::move(claim), pass, std::move(detail)});
    };
    const int nu = opt.nu;
    const auto ade = SingularityMode::simple_ade;

    // Pure conic arrangements.
    std::set<int> ks;
    for (int k = 2; k <= 8; ++k) {
        Enumeration e = enumerate(k, 0, nu, ade, opt.conic_gates);
        for (auto& c : e.survivors) {
            ks.insert(k);
            rep.conic_survivors.push_back(std::move(c));
        }
    }
    check("conic-k-range", "conic arrangements with the given defect have k in {2,3,4}",
          ks == std::set<int>{2, 3, 4}, "survivors: " + list(rep.conic_survivors));
    {
        const ConicTrace tr = conic_trace(5, nu, opt.conic_gates);
        std::vector<std::string> listed;
        for (const auto& t : tr.triples)
            if (t.wc.t2 == 17) listed.push_back(to_string(t.wc));
        listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
        const std::vector<std::string> want{"(5,0;6,17,0)", "(5,0;3,17,1)", "(5,0;0,17,2)"};
        std::string got;
        for (const auto& s : listed) got += s + " ";
        check("conic-k5-triples", "k = 5 forces t2 = 17 and (n2,t2,n3) in {(6,17,0),(3,17,1),(0,17,2)}",
              tr.t2_min == 17 && tr.t2_max == 17 && listed == want, "t2 in [" + std::to_string(tr.t2_min) + "," +
                                                                        std::to_string(tr.t2_max) + "], triples " + got);

        const WeakCombinatorics last{5, 0, 0, 17, 2};
        std::string killer = "survives";
        std::optional<Rational> slack;
        for (const auto& t : tr.triples)
            if (t.wc == last && t.d1 && t.report.find("d1_bounds")->satisfied) {
                killer = t.killed_by.empty() ? "survives" : t.killed_by;
                if (const auto* h = t.report.find("hirzebruch"); h && h->applicable) slack = h->slack;
            }
        check("conic-k5-hirzebruch", "(5,0;0,17,2) is excluded by the Hirzebruch-type inequality",
              killer == "hirzebruch" && slack && *slack == -1,
              "(5,0;0,17,2): " + (killer == "survives" ? std::string("undecided") : "killed by " + killer) +
                  (slack ? ", hirzebruch slack " + to_string(*slack) : ""));
    }
    {
        const bool ok = has(rep.conic_survivors, {2, 0, 2, 1, 0}, 2) && has(rep.conic_survivors, {3, 0, 2, 5, 0}, 3) &&
                        has(rep.conic_survivors, {4, 0, 2, 11, 0}, 4);
        check("conic-realized", "(2,0;2,1,0), (3,0;2,5,0), (4,0;2,11,0) survive with d1 = k", ok,
              ok ? "present" : "missing from survivors");
    }

    // Nodal conic-line arrangements.
    {
        std::vector<Candidate> all;
        for (int m = 3; m <= 12; ++m)
            for (auto& c : enumerate_degree(m, nu, SingularityMode::nodal, opt.mixed_gates).survivors)
                all.push_back(std::move(c));
        const bool ok = all.size() == 1 && all[0].wc == WeakCombinatorics{1, 2, 5, 0, 0} && all[0].d1 == 2;
        check("nodal-unique", "only (1,2;5,0,0) is possible with nodes alone", ok, "survivors: " + list(all));
    }

    // Conic-line arrangements with nodes, tacnodes and triple points.
    {
        const auto [lo, hi] = d1_bounds(11, ade);
        const Enumeration e = enumerate_degree(11, nu, ade, opt.mixed_gates);
        check("mixed-m11", "degree 11 is impossible (no integer d1 in range)", lo > hi && e.survivors.empty(),
              "d1 range [" + std::to_string(lo) + "," + std::to_string(hi) + "], survivors: " + list(e.survivors));
    }
    {
        const Enumeration e = enumerate_degree(12, nu, ade, opt.mixed_gates);
        const auto rows = tacnode_cap_trace(12, nu);
        bool forced = true, contra = true;
        std::string detail;
        for (const auto& r : rows) {
            forced = forced && r.forced_t2_plus_n3 == 23 + r.k && r.forced_n2_plus_n3 == 20 - 3 * r.k;
            contra = contra && r.contradiction;
            detail += "k=" + std::to_string(r.k) + ": t2+n3=" + std::to_string(r.forced_t2_plus_n3) + " > " +
                      std::to_string(r.sum_max) + "; ";
        }
        check("mixed-m12", "degree 12 is impossible (t2 + n3 = 23 + k exceeds the tacnode cap)",
              forced && contra && e.survivors.empty(), detail + "survivors: " + list(e.survivors));
    }
    {
        struct Want {
            WeakCombinatorics wc;
            int d1;
        };
        const std::vector<Want> wants{{{1, 2, 5, 0, 0}, 2}, {{1, 3, 6, 0, 1}, 2}, {{1, 4, 5, 0, 3}, 3},
                                      {{1, 5, 5, 0, 5}, 3}, {{1, 6, 7, 4, 4}, 4}};
        std::string missing;
        for (const auto& w : wants) {
            const auto e = enumerate(w.wc.k, w.wc.d, nu, ade, opt.mixed_gates);
            if (!has(e.survivors, w.wc, w.d1)) missing += to_string(w.wc) + " ";
        }
        check("mixed-realized", "the realized degree 4-8 combinatorics survive with their d1", missing.empty(),
              missing.empty() ? "present" : "missing " + missing);
    }

    // m = 9, (k, d) = (1, 7).
    {
        Gates no_langer = opt.mixed_gates;
        no_langer.langer = false;
        const Enumeration before = enumerate(1, 7, nu, ade, no_langer);
        const std::vector<WeakCombinatorics> listed{
            {1, 7, 3, 1, 10}, {1, 7, 4, 2, 9}, {1, 7, 5, 3, 8}, {1, 7, 6, 4, 7}, {1, 7, 7, 5, 6}};
        bool subset = true;
        for (const auto& w : listed) subset = subset && has(before.survivors, w);
        check("m9-list", "without Langer, (1,7) admits (3,1,10), (4,2,9), (5,3,8), (6,4,7), (7,5,6)", subset,
              "survivors: " + list(before.survivors));
        for (const auto& c : before.survivors)
            if (std::find(listed.begin(), listed.end(), c.wc) == listed.end()) rep.flagged.push_back(c.wc);

        const Enumeration after = enumerate(1, 7, nu, ade, opt.mixed_gates);
        rep.m9_survivors = after.survivors;
        bool four = true;
        for (std::size_t i = 0; i + 1 < listed.size(); ++i) four = four && has(after.survivors, listed[i]);
        std::string killer = has(after.survivors, listed.back()) ? "survives" : "";
        for (const auto& el : after.eliminated)
            if (el.wc == listed.back()) killer = el.killed_by;
        check("m9-langer", "Langer's inequality excludes (1,7;7,5,6) and keeps the other four",
              four && killer == "langer", "(1,7;7,5,6): " + killer + "; survivors: " + list(after.survivors));
    }
    {
        const WeakCombinatorics wc{1, 7, 7, 5, 6};
        const Rational a = R(2, 5);
        const ConstraintEntry e = langer_check(wc, a);
        const Rational lhs = langer_lhs(wc, a), rhs = langer_rhs(9, a);
        check("langer-witness", "alpha = 2/5 violates Langer's inequality for (1,7;7,5,6)",
              !e.satisfied && lhs == R(14697, 200) && rhs == R(7344, 100),
              "LHS " + to_string(lhs) + " > RHS " + to_string(rhs) + ", slack " + to_string(e.slack));
    }
    return rep;
}

ReproductionReport reproduce_or_throw(const ReproductionOptions& options) {
    ReproductionReport rep = reproduce(options);
    if (!rep.all_pass()) {
        std::string msg = "feasibility reproduction failed:";
        for (const auto& c : rep.checks)
            if (!c.pass) msg += "\n  " + c.id + ": " + c.detail;
        throw ReproductionMismatch(msg);
    }
    return rep;
}

}  // namespace pogcl
