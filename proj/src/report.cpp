#include "parslice/report.hpp"

#include <nlohmann/json.hpp>

namespace parslice {

using nlohmann::json;

json json_root(const Root& r) { return json(r.c); }

json json_rat(const Rat& r) { return json(r.get_str()); }

json json_roots(const std::vector<Root>& v) {
    json a = json::array();
    for (const Root& r : v) a.push_back(json_root(r));
    return a;
}

json json_rats(const QVec& v) {
    json a = json::array();
    for (const Rat& r : v) a.push_back(json_rat(r));
    return a;
}

json cascade_payload(const RootSystem& rs, const Cascade& c) {
    json nodes = json::array();
    for (const auto& n : c.nodes) {
        json jn;
        jn["key"] = n.key;
        jn["name"] = n.name;
        jn["beta"] = json_root(n.beta);
        jn["hset"] = json_roots(n.hset);
        jn["subsystem_size"] = n.delta_pos.size();
        nodes.push_back(std::move(jn));
    }
    json p;
    p["type"] = type_name(rs.kind);
    p["rank"] = rs.rank;
    p["nodes"] = std::move(nodes);
    p["count"] = c.nodes.size();
    return p;
}

namespace {

json one_based(const std::vector<int>& v) {
    json a = json::array();
    for (int x : v) a.push_back(x + 1);
    return a;
}

} // namespace

json orbit_payload(const ParabolicContext& ctx) {
    json p;
    p["s"] = ctx.s;
    p["pi_prime"] = one_based(ctx.piprime);
    json comps = json::array();
    for (const auto& c : ctx.components) {
        json jc;
        jc["kind"] = type_name(c.kind);
        jc["rank"] = c.rank;
        jc["simple"] = one_based(c.simple);
        comps.push_back(std::move(jc));
    }
    p["components"] = std::move(comps);
    p["i"] = one_based(ctx.i_perm);
    p["j"] = one_based(ctx.j_perm);
    json orbs = json::array();
    for (size_t k = 0; k < ctx.orbits.size(); ++k) {
        json jo;
        jo["roots"] = one_based(ctx.orbits[k]);
        jo["j_stable"] = static_cast<bool>(ctx.orbit_j_stable[k]);
        orbs.push_back(std::move(jo));
    }
    p["orbits"] = std::move(orbs);
    p["index"] = ctx.index;
    return p;
}

json epsilon_payload(const ParabolicContext& ctx, const EpsilonReport& rep) {
    json p;
    p["s"] = ctx.s;
    p["index"] = ctx.index;
    json rows = json::array();
    for (const auto& r : rep.rows) {
        json jr;
        jr["orbit"] = one_based(r.orbit);
        jr["j_stable"] = r.j_stable;
        jr["in_B_pi"] = r.in_B_pi;
        jr["in_B_pi_prime"] = r.in_B_piprime;
        jr["epsilon"] = r.half ? "1/2" : "1";
        rows.push_back(std::move(jr));
    }
    p["orbits"] = std::move(rows);
    p["criterion"] = rep.criterion;
    p["verdict"] = verdict_name(rep.verdict);
    return p;
}

json certificate_payload(const PairCertificate& cert) {
    json jc;
    jc["has_cover"] = cert.has_cover;
    if (cert.has_cover) {
        jc["cond1"] = cert.cond1;
        jc["cond2"] = cert.cond2;
        jc["phi_rank"] = cert.phi_rank_value;
        jc["phi_dim"] = cert.phi_dim;
    }
    jc["cond4"] = cert.cond4;
    jc["basis_det"] = json_rat(cert.basis_det);
    jc["codim"] = cert.codim;
    jc["index"] = cert.index;
    jc["complement_ok"] = cert.complement_ok;
    jc["h"] = json_rats(cert.h);
    jc["eigenvalues"] = json_rats(cert.eigenvalues);
    jc["degrees"] = json_rats(cert.degrees);
    jc["verdict"] = cert.verdict;
    return jc;
}

json pair_payload(const ParabolicContext& ctx, const PairCandidate& cand, const PairCertificate* cert) {
    json p;
    p["s"] = ctx.s;
    p["index"] = ctx.index;
    p["provenance"] = cand.provenance;
    p["hardcoded"] = cand.hardcoded;
    p["S_plus"] = json_roots(cand.S_plus);
    p["S_minus"] = json_roots(cand.S_minus);
    p["T_plus"] = json_roots(cand.T_plus);
    p["T_minus"] = json_roots(cand.T_minus);
    if (!cand.hardcoded) {
        json cov = json::array();
        auto emit = [&](const Root& g) {
            json jc;
            jc["centre"] = json_root(g);
            jc["set"] = json_roots(cand.cover.at(g));
            cov.push_back(std::move(jc));
        };
        for (const Root& g : cand.S_plus) emit(g);
        for (const Root& g : cand.S_minus) emit(g);
        p["cover"] = std::move(cov);
    }
    if (!cand.coeff.empty()) {
        json jc = json::array();
        for (const auto& [g, a] : cand.coeff) {
            json e;
            e["root"] = json_root(g);
            e["coeff"] = json_rat(a);
            jc.push_back(std::move(e));
        }
        p["coefficients"] = std::move(jc);
    }
    if (cert) p["certificate"] = certificate_payload(*cert);
    return p;
}

json search_payload(const SearchReport& rep) {
    json p;
    p["exists_adapted_pair"] = rep.exists_adapted_pair;
    p["exists_strict_filter"] = rep.exists_strict;
    p["exists_relaxed_filter"] = rep.exists_relaxed;
    p["enumeration_size"] = rep.enumeration_size;
    p["unique_h"] = rep.unique_h;
    p["any_large_minus_one_space"] = rep.any_large_minus_one_space;
    json cands = json::array();
    for (const auto& c : rep.candidates) {
        json jc;
        jc["h"] = json_rats(c.h);
        jc["minus_one_roots"] = json_roots(c.minus_one);
        jc["eigenvalues"] = json_rats(c.eigenvalues);
        if (c.codim_strict >= 0) jc["codim_strict"] = c.codim_strict;
        jc["codim_relaxed"] = c.codim_relaxed;
        cands.push_back(std::move(jc));
    }
    p["candidate_count"] = rep.candidates.size();
    p["candidates"] = std::move(cands);
    return p;
}

json wrap_report(const json& request, const std::string& status, const json& payload) {
    json r;
    r["schema_version"] = kSchemaVersion;
    r["request"] = request;
    r["status"] = status;
    r["payload"] = payload;
    return r;
}

} // namespace parslice
