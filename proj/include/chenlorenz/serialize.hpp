#ifndef CHENLORENZ_SERIALIZE_HPP
#define CHENLORENZ_SERIALIZE_HPP

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "chenlorenz/dynamics.hpp"
#include "chenlorenz/equiv.hpp"
#include "chenlorenz/multipoly.hpp"
#include "chenlorenz/systems.hpp"

namespace chenlorenz {

using nlohmann::json;

// Exact values always travel as decimal strings ("n" or "n/d"); floats in
// *_approx fields are advisory only.

inline json rational_json(const Rational& r) { return to_string(r); }

inline json multipoly_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exponents", {e[0], e[1], e[2]}}, {"coeff", to_string(c)}});
    }
    return terms;
}

inline json quadext_json(const QuadExt& q) {
    return {{"rational", to_string(q.rational_part())},
            {"coef", to_string(q.irrational_coef())},
            {"radicand", to_string(q.radicand())},
            {"approx", q.to_double_approx()}};
}

inline json equilibria_json(const EquilibriumSet& set) {
    json pts = json::array();
    for (const Equilibrium& e : set.points) {
        pts.push_back({{"label", label_name(set.kind, e.label)},
                       {"x", quadext_json(e.point.x)},
                       {"y", quadext_json(e.point.y)},
                       {"z", quadext_json(e.point.z)}});
    }
    return {{"system", to_string(set.kind)},
            {"count", set.count()},
            {"existence_product", to_string(set.existence_product)},
            {"degenerate_merge", set.degenerate_merge},
            {"points", pts}};
}

inline json charpoly_json(const CharPolyCubic& p) {
    return {{"c2", to_string(p.c2)},
            {"c1", to_string(p.c1)},
            {"c0", to_string(p.c0)},
            {"c2_approx", to_double(p.c2)},
            {"c1_approx", to_double(p.c1)},
            {"c0_approx", to_double(p.c0)}};
}

inline json candidate_json(const LorenzCandidate& c) {
    json j;
    if (c.exact) {
        j["a"] = to_string(c.params.a);
        j["b"] = to_string(c.params.b);
        j["c"] = to_string(c.params.c);
    } else {
        j["b_interval"] = {to_string(c.root_b.lo), to_string(c.root_b.hi)};
    }
    j["a_approx"] = c.a_approx;
    j["b_approx"] = c.b_approx;
    j["c_approx"] = c.c_approx;
    j["exact"] = c.exact;
    j["valid"] = c.validity == Validity::Valid;
    j["validity"] = to_string(c.validity);
    j["reasons"] = c.reasons;
    return j;
}

inline json certificate_json(const Certificate& cert) {
    json candidates = json::array();
    for (const LorenzCandidate& c : cert.candidates) candidates.push_back(candidate_json(c));
    json rejected = json::array();
    for (const LorenzCandidate& c : cert.rejected) rejected.push_back(candidate_json(c));
    return {{"chen",
             {{"a", to_string(cert.chen.a)},
              {"b", to_string(cert.chen.b)},
              {"c", to_string(cert.chen.c)}}},
            {"invariants",
             {{"u", to_string(cert.invariants.u)},
              {"v", to_string(cert.invariants.v)},
              {"w", to_string(cert.invariants.w)},
              {"k", to_string(cert.invariants.k)}}},
            {"m0", to_string(cert.m0)},
            {"m0_approx", to_double(cert.m0)},
            {"verdict", to_string(cert.verdict)},
            {"candidates", candidates},
            {"rejected_candidates", rejected},
            {"degenerate_flags", cert.degenerate_flags},
            {"paper_note", cert.note}};
}

inline json factorization_json(const FactorizationReport& rep) {
    json peeled = json::array();
    for (const PeeledFactor& f : rep.peeled) {
        peeled.push_back({{"factor", f.factor.str()},
                          {"factor_terms", multipoly_json(f.factor)},
                          {"multiplicity", f.multiplicity},
                          {"divided_exactly", f.exact}});
    }
    json diffs = json::array();
    for (const TermDiff& d : rep.quintic_diffs) {
        diffs.push_back({{"exponents", {d.exponents[0], d.exponents[1], d.exponents[2]}},
                         {"computed", to_string(d.computed)},
                         {"printed", to_string(d.printed)}});
    }
    return {{"symbolic_m0", multipoly_json(rep.symbolic)},
            {"peeled_factors", peeled},
            {"quotient", multipoly_json(rep.quotient)},
            {"quotient_str", rep.quotient.str()},
            {"printed_quintic_match", rep.printed_quintic_match},
            {"quintic_diffs", diffs}};
}

inline json lyapunov_json(const LyapunovEstimate& est, SystemKind kind,
                          const IntegratorConfig& cfg) {
    return {{"lambda_max", est.lambda_max},
            {"system", to_string(kind)},
            {"dt", cfg.dt},
            {"t_end", cfg.t_end},
            {"transient_discard", est.transient_discard},
            {"renormalization_interval", est.renormalization_interval},
            {"diverged", est.diverged},
            {"label", est.lambda_max > 0 && !est.diverged
                          ? "heuristic evidence of chaos"
                          : "no positive exponent detected (heuristic)"}};
}

/// Full-precision trajectory CSV: header "t,x,y,z", 17 significant digits.
inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t,x,y,z\n";
    char buf[160];
    for (const TrajectorySample& s : traj.samples) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", s.t, s.x, s.y, s.z);
        os << buf;
    }
}

} // namespace chenlorenz

#endif // CHENLORENZ_SERIALIZE_HPP
