#include "report.hpp"

#include <sstream>

namespace pogcl::report {

namespace {

std::string tuple(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string mode_name(RankMode m) { return m == RankMode::exact ? "exact" : "modular"; }

}  // namespace

Json envelope(const std::string& command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

Json rational(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational must be a JSON string");
    return rational_from_string(j.get<std::string>());
}

Json to_json(const SyzygyProfile& p) {
    Json c;
    c["kind"] = kind_name(p.classification);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Free> || std::is_same_v<T, NearlyFree>) {
                c["exponents"] = {v.d1, v.d2};
                if constexpr (std::is_same_v<T, NearlyFree>) c["level"] = v.d2;
            } else if constexpr (std::is_same_v<T, PlusOneGenerated>) {
                c["exponents"] = {v.d1, v.d2};
                c["level"] = v.level;
                c["defect"] = v.defect;
            } else {
                c["generators"] = v.q;
            }
        },
        p.classification);
    c["text"] = describe(p.classification);

    Json j;
    j["curve_degree"] = p.curve_degree;
    j["classification"] = c;
    j["exponents"] = p.exponents;
    j["second_syzygy_degrees"] = p.second_syzygy_degrees;
    j["tau"] = p.tau;
    j["defect"] = p.defect ? Json(*p.defect) : Json(nullptr);
    j["backend"] = {{"mode", mode_name(p.backend.mode)},
                    {"primes", p.backend.primes},
                    {"certified", p.backend.certified}};
    j["hilbert_witness"] = {{"degree_checked", p.witness.degree_checked},
                            {"values", p.witness.values},
                            {"stabilized_value", p.witness.stabilized_value}};
    j["ar_dims"] = p.ar_dims;
    return j;
}

std::string point_type_name(PointType t) {
    switch (t) {
        case PointType::node: return "node";
        case PointType::tacnode: return "tacnode";
        case PointType::ordinary_multiple: return "ordinary_multiple";
        case PointType::unsupported: return "unsupported";
    }
    return "unsupported";
}

Json to_json(const CensusReport& r) {
    Json j;
    j["conics"] = r.conics;
    j["lines"] = r.lines;
    j["n2"] = r.n2;
    j["t2"] = r.t2;
    j["n3"] = r.n3;
    Json higher = Json::object();
    for (const auto& [mult, count] : r.higher_ordinary) higher[std::to_string(mult)] = count;
    j["higher_ordinary"] = higher;
    j["unsupported"] = r.unsupported;
    j["tau_total"] = r.tau_total;
    j["all_supported"] = r.all_supported;
    j["tau_complete"] = r.tau_complete;
    j["quasi_homogeneous"] = r.quasi_homogeneous;
    j["seed"] = r.seed_used;
    j["attempts"] = r.attempts;
    Json pts = Json::array();
    for (const auto& p : r.points) {
        Json inc = Json::array();
        for (const auto& i : p.incident) inc.push_back({i.i, i.j, i.multiplicity});
        pts.push_back({{"id", p.cluster_id},
                       {"type", point_type_name(p.type)},
                       {"branches", p.branch_count},
                       {"local_tau", p.local_tjurina ? Json(*p.local_tjurina) : Json(nullptr)},
                       {"incidences", inc},
                       {"description", p.description}});
    }
    j["points"] = pts;
    return j;
}

Json to_json(const TauCrossCheck& t) {
    return {{"census_tau", t.census_tau}, {"syzygy_tau", t.syzygy_tau}, {"equal", t.equal}};
}

Json to_json(const BezoutAudit& b) {
    return {{"expected", b.expected}, {"observed", b.observed}, {"weighted", b.weighted}, {"pass", b.pass}};
}

Json to_json(const CensusDiff& d) {
    auto count = [](const std::vector<SingularPoint>& v) {
        std::map<std::string, int> by;
        for (const auto& p : v) ++by[p.description];
        Json j = Json::object();
        for (const auto& [k, n] : by) j[k] = n;
        return j;
    };
    return {{"added", d.added.size()},
            {"removed", d.removed.size()},
            {"added_by_type", count(d.added)},
            {"removed_by_type", count(d.removed)}};
}

Json to_json(const WeakCombinatorics& wc) {
    return {{"k", wc.k}, {"d", wc.d}, {"n2", wc.n2}, {"t2", wc.t2}, {"n3", wc.n3}, {"text", to_string(wc)}};
}

Json to_json(const ConstraintReport& r) {
    Json arr = Json::array();
    for (const auto& e : r.entries) {
        Json j;
        j["id"] = e.id;
        j["applicable"] = e.applicable;
        j["satisfied"] = e.applicable ? Json(e.satisfied) : Json(nullptr);
        j["slack"] = rational(e.slack);
        j["witness"] = e.witness ? rational(*e.witness) : Json(nullptr);
        if (!e.note.empty()) j["note"] = e.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json to_json(const Candidate& c) {
    return {{"wc", to_json(c.wc)},
            {"nu", c.nu},
            {"d1", c.d1},
            {"exponents", {c.d1, c.d2()}},
            {"level", c.d3()},
            {"tau", c.tau},
            {"status", "undecided"},
            {"constraints", to_json(c.report)}};
}

Json to_json(const Elimination& e) {
    return {{"wc", to_json(e.wc)},
            {"d1", e.d1 ? Json(*e.d1) : Json(nullptr)},
            {"killed_by", e.killed_by},
            {"constraints", to_json(e.report)}};
}

Json to_json(const Gates& g) {
    return {{"d1_bounds", g.d1_bounds},
            {"miyaoka", g.miyaoka},
            {"hirzebruch", g.hirzebruch},
            {"hirzebruch_conic_min_k", g.hirzebruch_gates.conic_min_k},
            {"hirzebruch_mixed_min_k", g.hirzebruch_gates.mixed_min_k},
            {"hirzebruch_mixed_min_d", g.hirzebruch_gates.mixed_min_d},
            {"langer", g.langer},
            {"langer_grid", g.langer_grid},
            {"langer_extra_alphas", [&] {
                 Json a = Json::array();
                 for (const auto& x : g.langer_extra_alphas) a.push_back(rational(x));
                 return a;
             }()}};
}

Json to_json(const Enumeration& e, bool with_eliminated) {
    Json j;
    j["nu"] = e.nu;
    j["mode"] = to_string(e.mode);
    j["gates"] = to_json(e.gates);
    Json s = Json::array();
    for (const auto& c : e.survivors) s.push_back(to_json(c));
    j["survivors"] = s;
    std::map<std::string, int> killed;
    for (const auto& el : e.eliminated) ++killed[el.killed_by];
    Json k = Json::object();
    for (const auto& [id, n] : killed) k[id] = n;
    j["eliminated_by"] = k;
    if (with_eliminated) {
        Json el = Json::array();
        for (const auto& x : e.eliminated) el.push_back(to_json(x));
        j["eliminated"] = el;
    }
    return j;
}

Json to_json(const CapRow& r) {
    return {{"k", r.k},
            {"d", r.d},
            {"forced_t2_plus_n3", r.forced_t2_plus_n3},
            {"forced_n2_plus_n3", r.forced_n2_plus_n3},
            {"n3_max", r.n3_max},
            {"t2_max", r.t2_max},
            {"sum_max", r.sum_max},
            {"contradiction", r.contradiction}};
}

Json to_json(const ConicTrace& t) {
    Json tr = Json::array();
    for (const auto& e : t.triples) tr.push_back(to_json(e));
    return {{"k", t.k}, {"t2_min", t.t2_min}, {"t2_max", t.t2_max}, {"triples", tr}};
}

Json to_json(const ClaimCheck& c) {
    return {{"id", c.id}, {"claim", c.claim}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}};
}

Json to_json(const EntryResult& r) {
    Json j;
    j["name"] = r.name;
    j["status"] = r.pass ? "pass" : "fail";
    j["mismatches"] = r.mismatches;
    j["profile"] = r.profile ? to_json(*r.profile) : Json(nullptr);
    j["census"] = r.census ? to_json(*r.census) : Json(nullptr);
    j["tau_check"] = r.tau_check ? to_json(*r.tau_check) : Json(nullptr);
    j["bezout"] = r.bezout ? to_json(*r.bezout) : Json(nullptr);
    return j;
}

Json to_json(const Arrangement& a) {
    Json cs = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i)
        cs.push_back({{"index", i}, {"kind", to_string(a.kinds()[i])}, {"poly", a.components()[i].to_string()}});
    return {{"conics", a.conic_count()}, {"lines", a.line_count()}, {"degree", a.degree()}, {"components", cs}};
}

std::string headline(const SyzygyProfile& p) {
    std::ostringstream os;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Free>) {
                os << "free, exponents (" << v.d1 << ',' << v.d2 << ")";
            } else if constexpr (std::is_same_v<T, NearlyFree>) {
                os << "nearly free, exponents (" << v.d1 << ',' << v.d2 << "), level " << v.d2;
            } else if constexpr (std::is_same_v<T, PlusOneGenerated>) {
                os << "plus-one generated, exponents (" << v.d1 << ',' << v.d2 << "), level " << v.level << ", defect "
                   << v.defect;
            } else {
                os << v.q << "-syzygy, exponents " << tuple(p.exponents);
            }
        },
        p.classification);
    os << ", tau " << p.tau;
    return os.str();
}

std::string census_counts(const CensusReport& r) {
    std::ostringstream os;
    os << "n2=" << r.n2 << " t2=" << r.t2 << " n3=" << r.n3;
    for (const auto& [mult, count] : r.higher_ordinary) os << " n" << mult << '=' << count;
    if (r.unsupported) os << " unsupported=" << r.unsupported;
    return os.str();
}

std::string slack_cell(const ConstraintEntry& e) {
    if (!e.applicable) return "-";
    std::string s = to_string(e.slack);
    if (e.id == "langer" && e.witness) s += "@" + to_string(*e.witness);
    return s;
}

}  // namespace pogcl::report
