#include "pogcl/catalog.hpp"

#include "pogcl/errors.hpp"
#include "pogcl/parse.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace pogcl {

namespace {

HomPoly P(const char* text) { return parse_poly(text); }

std::vector<HomPoly> polys(std::initializer_list<const char*> texts) {
    std::vector<HomPoly> out;
    for (const char* t : texts) out.push_back(P(t));
    return out;
}

HomPoly X() { return HomPoly::variable(Var::x); }
HomPoly Y() { return HomPoly::variable(Var::y); }
HomPoly Z() { return HomPoly::variable(Var::z); }

// The quadric a x^2 + b y^2 + c z^2 + e yz.
HomPoly quadric(const Rational& a, const Rational& b, const Rational& c, const Rational& e) {
    return X() * X() * a + Y() * Y() * b + Z() * Z() * c + Y() * Z() * e;
}

void no_params(const Params& p) {
    if (!p.empty()) throw InputError("this entry takes no parameters, got '" + p.begin()->first + "'");
}

void only_params(const Params& p, std::initializer_list<const char*> allowed) {
    for (const auto& [name, value] : p)
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return name == a; }))
            throw InputError("unknown parameter '" + name + "'");
}

Rational get(const Params& p, const Params& defaults, const std::string& name) {
    auto it = p.find(name);
    return it != p.end() ? it->second : defaults.at(name);
}

bool in_units(const Rational& v) { return v == 0 || v == 1 || v == -1; }

const std::vector<HomPoly>& xr_components() {
    static const std::vector<HomPoly> cs = polys({
        "x^2 + 2*x*y + y^2 - x*z",
        "x^2 + x*y + 2*y*z - z^2",
        "x^2 + x*z + y*z",
        "x^2 + x*y + z^2",
        "x^2 + 2*x*y - x*z + y*z",
        "x^2 - y^2 + x*z + 2*y*z",
        "y",
        "x + z",
        "x + y - z",
        "x + y + z",
        "x - z",
        "x + 1/2*y",
    });
    return cs;
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> out;
    auto fixed = [&](std::string name, std::string description, std::vector<HomPoly> comps, ExpectedProfile profile,
                     std::optional<ExpectedCensus> cen) {
        CatalogEntry e;
        e.name = std::move(name);
        e.description = std::move(description);
        e.builder = [comps](const Params& p) {
            no_params(p);
            return Arrangement(comps);
        };
        e.expected_profile = std::move(profile);
        e.expected_census = std::move(cen);
        e.degree = Arrangement(comps).degree();
        out.push_back(std::move(e));
    };
    auto pog = [](int d1, int d2, int d3, long tau) {
        return ExpectedProfile{"plus-one-generated", {d1, d2, d3}, d3 - d2 + 1, std::nullopt, tau};
    };

    fixed("nodal_pog", "conic and two lines with five nodes", polys({"x", "y", "x^2 + y^2 - z^2"}),
          pog(2, 2, 3, 5), ExpectedCensus{5, 0, 0, {}});
    fixed("conic_pair", "two conics with one tacnode and two nodes",
          polys({"x^2 + y^2 - z^2", "x^2 - 13/10*x*z + 36/10*y^2 - 23/10*z^2"}), pog(2, 2, 3, 5),
          ExpectedCensus{2, 1, 0, {}});

    {
        CatalogEntry e;
        e.name = "gm3";
        e.description = "three conics with five tacnodes, parameters l and m";
        e.defaults = {{"l", Rational(2)}, {"m", Rational(-2)}};
        e.builder = [d = e.defaults](const Params& p) {
            only_params(p, {"l", "m"});
            const Rational l = get(p, d, "l"), m = get(p, d, "m");
            if (in_units(l) || in_units(m)) throw ExcludedParameter("gm3 needs l, m outside {0, 1, -1}");
            if (l == m) throw ExcludedParameter("gm3 needs l != m");
            if (l * m == 1) throw ExcludedParameter("gm3 needs l*m != 1");
            return Arrangement({quadric(1, 1, -1, 0), quadric(l * l, l * l + 1, 0, -2 * l),
                                quadric(m * m, m * m + 1, 0, -2 * m)});
        };
        e.expected_profile = pog(3, 3, 4, 17);
        e.expected_census = ExpectedCensus{2, 5, 0, {}};
        e.degree = 6;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "gm4";
        e.description = "four conics with eleven tacnodes, parameter r; sign orders the pair of conics with +-2ryz";
        // The first conic must be x^2 + y^2 - z^2: with x^2 + y^2 + z^2 it is bitangent to none of
        // the others and the arrangement has only five tacnodes.
        e.defaults = {{"r", Rational(2)}, {"sign", Rational(1)}};
        e.builder = [d = e.defaults](const Params& p) {
            only_params(p, {"r", "sign"});
            const Rational r = get(p, d, "r"), sign = get(p, d, "sign");
            if (in_units(r)) throw ExcludedParameter("gm4 needs r outside {0, 1, -1}");
            if (sign != 1 && sign != -1) throw ExcludedParameter("gm4 sign must be 1 or -1");
            const Rational inv_r2 = 1 / (r * r);
            std::vector<HomPoly> cs{quadric(1, 1, -1, 0), quadric(inv_r2, 1, -1, 0),
                                    quadric(1, r * r + 1, 0, 2 * r * sign), quadric(1, r * r + 1, 0, -2 * r * sign)};
            return Arrangement(std::move(cs));
        };
        e.expected_profile = pog(4, 4, 5, 35);
        e.expected_census = ExpectedCensus{2, 11, 0, {}};
        e.degree = 8;
        out.push_back(std::move(e));
    }

    fixed("cl5", "conic and three concurrent lines", polys({"x", "y", "x - y", "x^2 + y^2 - z^2"}), pog(2, 3, 4, 10),
          ExpectedCensus{6, 0, 1, {}});
    fixed("cl6", "conic and four lines, rational model (z scaled by sqrt 2)",
          polys({"x", "y - x", "y + x", "x^2 + y^2 - 2*z^2", "y - z"}), pog(3, 3, 4, 17), ExpectedCensus{5, 0, 3, {}});
    fixed("cl7", "conic and five lines, rational model (z scaled by sqrt 2)",
          polys({"x", "y - x", "y + x", "x^2 + y^2 - 2*z^2", "y - z", "y + z"}), pog(3, 4, 5, 25),
          ExpectedCensus{5, 0, 5, {}});
    fixed("cl8", "conic and six lines",
          polys({"x - y", "x + y", "x - z", "x + z", "y - z", "y + z", "x^2 + y^2 - z^2"}), pog(4, 4, 5, 35),
          ExpectedCensus{7, 4, 4, {}});
    fixed("free_cl", "free conic-line arrangement with three nodes and three tacnodes",
          polys({"x^2 + y^2 - z^2", "y - z", "x - z", "x + z"}), ExpectedProfile{"free", {2, 2}, std::nullopt, std::nullopt, 12},
          ExpectedCensus{3, 3, 0, {}});
    fixed("free_cl_plus_conic", "free_cl with the conic y^2 - xz added",
          polys({"x^2 + y^2 - z^2", "y - z", "x - z", "x + z", "y^2 - x*z"}),
          ExpectedProfile{"m-syzygy", {}, std::nullopt, 4, std::nullopt}, std::nullopt);

    std::vector<HomPoly> xr = xr_components();
    fixed("xr", "six conics and six lines, free with nine sixfold points", xr,
          ExpectedProfile{"free", {4, 13}, std::nullopt, std::nullopt, 237}, ExpectedCensus{12, 0, 0, {{6, 9}}});
    auto xr_l = xr;
    xr_l.push_back(P("x + 2*y + 4*z"));
    fixed("xr_plus_l", "xr with the line x + 2y + 4z added", xr_l,
          ExpectedProfile{"plus-one-generated", {5, 14, 17}, 4, std::nullopt, 255}, ExpectedCensus{30, 0, 0, {{6, 9}}});
    auto xr_z = xr;
    xr_z.push_back(P("z"));
    fixed("xr_plus_z", "xr with the line z added", xr_z,
          ExpectedProfile{"free", {}, std::nullopt, std::nullopt, std::nullopt}, std::nullopt);
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw InputError("unknown catalog entry '" + name + "'");
}

Arrangement build(const std::string& name, const Params& params) { return catalog_entry(name).builder(params); }

Rational parse_parameter(const std::string& text) {
    try {
        return rational_from_string(text);
    } catch (const std::invalid_argument&) {
    }
    std::string lower;
    for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const bool symbolic = lower.find("sqrt") != std::string::npos || lower == "i" || lower == "-i" ||
                          lower.find("pi") != std::string::npos || lower.find('^') != std::string::npos ||
                          text.find("\xe2\x88\x9a") != std::string::npos;
    if (symbolic)
        throw IrrationalParameterUnsupported("parameter '" + text + "' is not rational; only p or p/q is supported");
    throw InputError("cannot read parameter value '" + text + "' (expected p or p/q)");
}

Arrangement mutate(const Arrangement& arr, const Mutation& m) {
    switch (m.kind) {
        case Mutation::Kind::add_line:
            if (m.component.degree() != 1) throw WrongDegree("add_line needs a linear form");
            return arr.with_component(m.component);
        case Mutation::Kind::add_conic:
            if (m.component.degree() != 2) throw WrongDegree("add_conic needs a quadratic form");
            return arr.with_component(m.component);
        case Mutation::Kind::remove:
            return arr.without_component(m.index);
    }
    throw std::logic_error("unknown mutation");
}

bool VerifyReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const EntryResult& e) { return e.pass; });
}

namespace {

template <class T>
void expect(std::vector<std::string>& out, const std::string& field, const T& expected, const T& got) {
    if (expected == got) return;
    std::ostringstream os;
    os << field << ": expected " << expected << ", got " << got;
    out.push_back(os.str());
}

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::vector<int> profile_exponents(const SyzygyProfile& p) {
    if (std::holds_alternative<Free>(p.classification)) return {p.exponents[0], p.exponents[1]};
    if (std::holds_alternative<NearlyFree>(p.classification) || std::holds_alternative<PlusOneGenerated>(p.classification))
        return {p.exponents[0], p.exponents[1], p.exponents[2]};
    return p.exponents;
}

}  // namespace

EntryResult verify_entry(const CatalogEntry& entry, const SyzygyEngine& engine, std::uint64_t seed) {
    EntryResult r;
    r.name = entry.name;
    const auto start = std::chrono::steady_clock::now();
    auto& mis = r.mismatches;
    try {
        const Arrangement arr = entry.builder({});
        const SyzygyProfile prof = engine.classify(arr.defining_poly());
        r.profile = prof;
        const auto& ep = entry.expected_profile;
        if (!ep.kind.empty()) expect(mis, "classification", ep.kind, kind_name(prof.classification));
        if (!ep.exponents.empty()) expect(mis, "exponents", join(ep.exponents), join(profile_exponents(prof)));
        if (ep.defect) expect(mis, "defect", std::to_string(*ep.defect), prof.defect ? std::to_string(*prof.defect) : "none");
        if (ep.generator_count) expect(mis, "generator count", *ep.generator_count, static_cast<int>(prof.exponents.size()));
        if (ep.tau) expect(mis, "tau", *ep.tau, prof.tau);
        if (prof.defect) {
            const long m = prof.curve_degree, d1 = prof.exponents[0];
            if (prof.tau != (m - 1) * (m - 1) - d1 * (m - d1 - 1) - *prof.defect)
                mis.push_back("defect identity tau = (m-1)^2 - d1(m-d1-1) - nu fails");
        }

        const CensusReport cen = census(arr, seed);
        r.census = cen;
        if (entry.expected_census) {
            const auto& ec = *entry.expected_census;
            expect(mis, "n2", ec.n2, cen.n2);
            expect(mis, "t2", ec.t2, cen.t2);
            expect(mis, "n3", ec.n3, cen.n3);
            for (const auto& [rr, count] : ec.higher_ordinary) {
                auto it = cen.higher_ordinary.find(rr);
                expect(mis, "ordinary " + std::to_string(rr) + "-fold points", count,
                       it == cen.higher_ordinary.end() ? 0 : it->second);
            }
            for (const auto& [rr, count] : cen.higher_ordinary)
                if (!ec.higher_ordinary.count(rr))
                    mis.push_back("unexpected ordinary " + std::to_string(rr) + "-fold points: " + std::to_string(count));
            if (!cen.all_supported) mis.push_back("census has unsupported points");
        }
        r.bezout = bezout_audit(arr, cen);
        if (!r.bezout->pass)
            mis.push_back("Bezout audit: expected " + std::to_string(r.bezout->expected) + ", observed " +
                          std::to_string(r.bezout->observed) + ", weighted " + std::to_string(r.bezout->weighted));
        if (cen.tau_complete) {
            TauCrossCheck tc;
            tc.census_tau = cen.tau_total;
            tc.syzygy_tau = prof.tau;
            tc.equal = tc.census_tau == tc.syzygy_tau;
            r.tau_check = tc;
            expect(mis, "census tau vs syzygy tau", tc.syzygy_tau, tc.census_tau);
        }
    } catch (const std::exception& e) {
        mis.push_back(std::string("error: ") + e.what());
    }
    r.pass = mis.empty();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

VerifyReport verify_all(const SyzygyEngine& engine, const VerifyOptions& options) {
    VerifyReport rep;
    for (const auto& e : catalog()) {
        if (e.degree <= options.max_degree) {
            rep.entries.push_back(verify_entry(e, engine, options.seed));
        } else if (options.heavy_backend) {
            rep.entries.push_back(verify_entry(e, SyzygyEngine(*options.heavy_backend), options.seed));
        }
    }
    return rep;
}

}  // namespace pogcl
