#ifndef CHENLORENZ_EQUIV_HPP
#define CHENLORENZ_EQUIV_HPP

#include <string>
#include <vector>

#include "chenlorenz/multipoly.hpp"
#include "chenlorenz/rational.hpp"
#include "chenlorenz/resultant.hpp"
#include "chenlorenz/roots.hpp"
#include "chenlorenz/systems.hpp"
#include "chenlorenz/unipoly.hpp"

namespace chenlorenz {

/// Spectral invariants of a Chen system: (u, v, w) are the coefficients of
/// the origin characteristic cubic lambda^3 + u lambda^2 + v lambda + w,
/// and k = b'c' is the wing first-order coefficient.
struct InvariantTriple {
    Rational u, v, w, k;

    static InvariantTriple from_chen(const ChenParams& p) {
        InvariantTriple t;
        t.u = p.a + p.b - p.c;
        t.v = p.a * p.a + p.a * p.b - 2 * p.a * p.c - p.b * p.c;
        t.w = -p.a * p.b * (2 * p.c - p.a);
        t.k = p.b * p.c;
        return t;
    }

    friend bool operator==(const InvariantTriple&, const InvariantTriple&) = default;
};

/// The pair of polynomials in the unknown Lorenz parameter b whose common
/// root is necessary for a spectral match:
///   cubic     b^3 - u b^2 + v b - w
///   quadratic (u-1) b^2 + (u+v-u^2-k) b + (u-1) k
/// The quadratic is stored trimmed to its true degree; degenerate_degree
/// marks the u = 1 case where its formal leading coefficient vanishes.
struct MatchingSystem {
    UniPoly cubic;
    UniPoly quadratic;
    bool degenerate_degree = false;
};

inline MatchingSystem matching_system(const InvariantTriple& t) {
    MatchingSystem ms;
    ms.cubic = UniPoly({-t.w, t.v, -t.u, 1});
    ms.quadratic = UniPoly({(t.u - 1) * t.k, t.u + t.v - t.u * t.u - t.k, t.u - 1});
    ms.degenerate_degree = t.u == 1;
    return ms;
}

/// Resultant obstruction M0. Nonzero means no Lorenz system can share the
/// Chen system's equilibrium spectra. Because the cubic is monic, the value
/// agrees with the formal 5x5 Sylvester determinant even when the quadratic
/// loses degree; a fully vanishing quadratic yields 0.
inline Rational obstruction_m0(const InvariantTriple& t) {
    MatchingSystem ms = matching_system(t);
    if (ms.quadratic.is_zero()) return 0;
    return resultant(ms.cubic, ms.quadratic);
}

inline Rational obstruction_m0(const ChenParams& p) {
    return obstruction_m0(InvariantTriple::from_chen(p));
}

/// M0 expanded as an exact polynomial in (a', b', c').
inline MultiPoly symbolic_m0() {
    MultiPoly a = MultiPoly::var(0), b = MultiPoly::var(1), c = MultiPoly::var(2);
    MultiPoly u = a + b - c;
    MultiPoly v = a * a + a * b - MultiPoly(2) * a * c - b * c;
    MultiPoly w = -(a * b * (MultiPoly(2) * c - a));
    MultiPoly k = b * c;
    MultiPoly one(1);
    std::vector<MultiPoly> p{one, -u, v, -w};
    std::vector<MultiPoly> q{u - one, u + v - u * u - k, (u - one) * k};
    return determinant(sylvester_from_coeffs(p, q));
}

/// The published expanded quintic factor of M0, transcribed term by term
/// (with its lone degree-4 monomial in a alone read as -a'^4).
inline MultiPoly printed_quintic() {
    struct T {
        int ea, eb, ec;
        int c;
    };
    static const T terms[] = {
        {3, 0, 0, 1},  {4, 0, 0, -1}, {5, 0, 0, 1},  {2, 1, 0, 1},  {3, 1, 0, -1},
        {1, 2, 0, 1},  {2, 2, 0, -2}, {1, 3, 0, -2}, {2, 3, 0, 1},  {1, 4, 0, 1},
        {2, 0, 1, -2}, {3, 0, 1, 3},  {4, 0, 1, -4}, {1, 1, 1, -3}, {2, 1, 1, 4},
        {3, 1, 1, -5}, {0, 2, 1, -1}, {1, 2, 1, 5},  {2, 2, 1, -2}, {0, 3, 1, 2},
        {1, 3, 1, -2}, {0, 4, 1, -1}, {2, 0, 2, -2}, {3, 0, 2, 4},  {1, 1, 2, -3},
        {2, 1, 2, 6},  {0, 2, 2, -1}, {1, 2, 2, 4},  {0, 3, 2, 1},
    };
    MultiPoly p;
    for (const T& t : terms)
        p = p + MultiPoly::term({t.ea, t.eb, t.ec}, t.c);
    return p;
}

struct PeeledFactor {
    MultiPoly factor;
    int multiplicity;
    bool exact;
};

struct TermDiff {
    Expo exponents;
    Rational computed;
    Rational printed;
};

struct FactorizationReport {
    MultiPoly symbolic;
    std::vector<PeeledFactor> peeled;
    MultiPoly quotient;
    bool printed_quintic_match = false;
    std::vector<TermDiff> quintic_diffs;
};

/// Peels b', (a'-2c')^2 and (1+c') off the symbolic M0 by exact division and
/// compares the remaining quotient against the published quintic.
inline FactorizationReport verify_factorization() {
    FactorizationReport rep;
    rep.symbolic = symbolic_m0();
    MultiPoly a = MultiPoly::var(0), b = MultiPoly::var(1), c = MultiPoly::var(2);
    const std::pair<MultiPoly, int> factors[] = {
        {b, 1}, {a - MultiPoly(2) * c, 2}, {MultiPoly(1) + c, 1}};
    MultiPoly rest = rep.symbolic;
    for (const auto& [f, mult] : factors) {
        bool ok = true;
        for (int i = 0; i < mult && ok; ++i) {
            auto q = mpoly_divide_exact(rest, f);
            if (q)
                rest = *q;
            else
                ok = false;
        }
        rep.peeled.push_back({f, mult, ok});
    }
    rep.quotient = rest;

    MultiPoly printed = printed_quintic();
    MultiPoly diff = rep.quotient - printed;
    rep.printed_quintic_match = diff.is_zero();
    for (const auto& [e, unused] : diff.terms())
        rep.quintic_diffs.push_back({e, rep.quotient.coeff(e), printed.coeff(e)});
    return rep;
}

enum class Validity { Valid, Invalid, Undetermined };

inline std::string to_string(Validity v) {
    switch (v) {
        case Validity::Valid: return "valid";
        case Validity::Invalid: return "invalid";
        default: return "undetermined-at-precision";
    }
}

/// A Lorenz parameter triple recovered from a common root b of the matching
/// system. Exact when b is rational; otherwise carries the isolating
/// interval of b and double approximations of (a, b, c).
struct LorenzCandidate {
    bool exact = false;
    LorenzParams params;  // meaningful only when exact
    RealRoot root_b;
    double a_approx = 0, b_approx = 0, c_approx = 0;
    Validity validity = Validity::Invalid;
    std::vector<std::string> reasons;
};

namespace detail {

inline LorenzCandidate recover_exact(const InvariantTriple& t, const Rational& b) {
    LorenzCandidate cand;
    cand.exact = true;
    cand.root_b.exact = true;
    cand.root_b.value = b;
    cand.root_b.lo = cand.root_b.hi = b;
    cand.root_b.approx = to_double(b);
    Rational a = t.u - 1 - b;
    cand.a_approx = to_double(a);
    cand.b_approx = to_double(b);
    if (a == 0 || b == 0) {
        cand.validity = Validity::Invalid;
        cand.reasons.push_back("singular-recovery: ab = 0");
        return cand;
    }
    Rational c = 1 - t.w / (a * b);
    cand.params = {a, b, c};
    cand.c_approx = to_double(c);
    bool ok = true;
    if (a <= 0) {
        ok = false;
        cand.reasons.push_back("a <= 0");
    }
    if (b <= 0) {
        ok = false;
        cand.reasons.push_back("b <= 0");
    }
    if (b * (c - 1) <= 0) {
        ok = false;
        cand.reasons.push_back("b(c-1) <= 0: fewer than 3 equilibria");
    }
    // Spectral check: all three characteristic polynomials must match.
    CharPolyCubic origin = charpoly_at(cand.params, EqLabel::E1);
    bool spectra_ok = origin.c2 == t.u && origin.c1 == t.v && origin.c0 == t.w;
    if (b * (c - 1) > 0) {
        CharPolyCubic wing = charpoly_at(SystemKind::Lorenz, a, b, c, EqLabel::E2);
        spectra_ok = spectra_ok && wing.c2 == t.u && wing.c1 == t.k &&
                     wing.c0 == -2 * t.w;
    }
    if (!spectra_ok) {
        ok = false;
        cand.reasons.push_back("characteristic polynomial mismatch");
    } else if (ok) {
        cand.reasons.push_back("characteristic polynomials match exactly");
    }
    cand.validity = ok ? Validity::Valid : Validity::Invalid;
    return cand;
}

inline LorenzCandidate recover_interval(const InvariantTriple& t, const RealRoot& r) {
    LorenzCandidate cand;
    cand.root_b = r;
    cand.b_approx = r.approx;
    cand.a_approx = to_double(t.u - 1) - r.approx;
    if (cand.a_approx * r.approx != 0)
        cand.c_approx = 1 - to_double(t.w) / (cand.a_approx * r.approx);
    cand.reasons.push_back("irrational common root: b in (" + to_string(r.lo) + ", " +
                           to_string(r.hi) + "]");

    // Interval sign tests; b = 0 and a = 0 are rational events, so an
    // irrational root can only straddle them at insufficient precision.
    auto sign_of = [](const Rational& lo, const Rational& hi) {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    };
    int sb = sign_of(r.lo, r.hi);
    int sa = sign_of(t.u - 1 - r.hi, t.u - 1 - r.lo);
    if (sb == 0 || sa == 0) {
        cand.validity = Validity::Undetermined;
        cand.reasons.push_back("sign of a or b not settled at interval precision");
        return cand;
    }
    bool ok = true;
    if (sa < 0) {
        ok = false;
        cand.reasons.push_back("a <= 0");
    }
    if (sb < 0) {
        ok = false;
        cand.reasons.push_back("b <= 0");
    }
    // b(c-1) = -w/a exactly, so the three-equilibria test is exact.
    if (-sign(t.w) * sa <= 0) {
        ok = false;
        cand.reasons.push_back("b(c-1) <= 0: fewer than 3 equilibria");
    }
    // For any common root with ab != 0 the recovered system's three
    // characteristic polynomials coincide with (u, v, w) and (u, k, -2w)
    // identically; the match needs no numerical verification.
    cand.reasons.push_back("characteristic polynomial match implied by common root");
    cand.validity = ok ? Validity::Valid : Validity::Invalid;
    return cand;
}

} // namespace detail

/// Recovers every Lorenz parameter triple consistent with the invariants:
/// one candidate per common real root b of the matching system, with
/// a = u-1-b and c = 1 - w/(ab).
inline std::vector<LorenzCandidate> recover_lorenz_candidates(const InvariantTriple& t) {
    MatchingSystem ms = matching_system(t);
    UniPoly common =
        ms.quadratic.is_zero() ? ms.cubic : poly_gcd(ms.cubic, ms.quadratic);
    std::vector<LorenzCandidate> out;
    if (common.degree() < 1) return out;
    for (const RealRoot& r : real_roots(common)) {
        if (r.exact)
            out.push_back(detail::recover_exact(t, r.value));
        else
            out.push_back(detail::recover_interval(t, r));
    }
    return out;
}

enum class Verdict {
    NonEquivalentResultantNonzero,
    NonEquivalentNoValidCandidate,
    CandidatesFound,
    OutOfScope,
};

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::NonEquivalentResultantNonzero:
            return "NonEquivalent-ResultantNonzero";
        case Verdict::NonEquivalentNoValidCandidate:
            return "NonEquivalent-NoValidCandidate";
        case Verdict::CandidatesFound: return "CandidatesFound";
        default: return "OutOfScope";
    }
}

/// The decision record for one Chen parameter triple. `candidates` holds
/// recovered triples that survived (or could not be excluded by) the
/// validity checks; `rejected` holds the excluded ones with their reasons.
struct Certificate {
    ChenParams chen;
    InvariantTriple invariants;
    Rational m0;
    Verdict verdict = Verdict::OutOfScope;
    std::vector<LorenzCandidate> candidates;
    std::vector<LorenzCandidate> rejected;
    std::vector<std::string> degenerate_flags;
    std::string note;
};

inline Certificate decide(const ChenParams& p) {
    Certificate cert;
    cert.chen = p;
    cert.invariants = InvariantTriple::from_chen(p);
    cert.m0 = obstruction_m0(cert.invariants);
    if (cert.invariants.u == 1) cert.degenerate_flags.push_back("degenerate-degree");

    Rational existence = p.b * (2 * p.c - p.a);
    if (existence <= 0 || p.a <= 0 || p.b <= 0) {
        if (existence == 0) cert.degenerate_flags.push_back("degenerate-merge");
        cert.verdict = Verdict::OutOfScope;
        cert.note =
            "decision requires a' > 0, b' > 0 and b'(2c'-a') > 0 (three "
            "equilibria with positive origin Jacobian determinant); outside "
            "that region the spectral correspondence argument does not apply";
        return cert;
    }

    if (cert.m0 != 0) {
        cert.verdict = Verdict::NonEquivalentResultantNonzero;
        cert.note =
            "the resultant of the spectral matching polynomials is nonzero, "
            "so no Lorenz system shares this Chen system's equilibrium "
            "spectra; smooth equivalence is impossible";
        return cert;
    }

    for (LorenzCandidate& c : recover_lorenz_candidates(cert.invariants)) {
        if (c.validity == Validity::Invalid)
            cert.rejected.push_back(std::move(c));
        else
            cert.candidates.push_back(std::move(c));
    }
    if (cert.candidates.empty()) {
        cert.verdict = Verdict::NonEquivalentNoValidCandidate;
        cert.note =
            "the resultant vanishes but every recovered Lorenz parameter "
            "triple fails a necessary condition (positivity, equilibrium "
            "count, or exact spectral match)";
    } else {
        cert.verdict = Verdict::CandidatesFound;
        cert.note =
            "Lorenz parameter triples matching all equilibrium spectra "
            "exist; this certificate does not decide equivalence";
    }
    return cert;
}

} // namespace chenlorenz

#endif // CHENLORENZ_EQUIV_HPP
