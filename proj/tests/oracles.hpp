// Test-only oracles, independent of the Sylvester-determinant path they check.
#ifndef CHENLORENZ_TESTS_ORACLES_HPP
#define CHENLORENZ_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "chenlorenz/rational.hpp"
#include "chenlorenz/unipoly.hpp"

namespace chenlorenz::oracles {

/// Resultant via a polynomial remainder sequence:
///   Res(p, q) = (-1)^(mp*mq) lc(q)^(mp - deg r) Res(q, r),  r = p mod q.
inline Rational resultant_prs(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("resultant of zero polynomial");
    if (q.degree() == 0) {
        Rational r = 1;
        for (int i = 0; i < p.degree(); ++i) r *= q.coeff(0);
        return r;
    }
    if (p.degree() == 0) {
        Rational r = 1;
        for (int i = 0; i < q.degree(); ++i) r *= p.coeff(0);
        return r;
    }
    UniPoly r = divmod(p, q).second;
    if (r.is_zero()) return 0;
    Rational lc_pow = 1;
    for (int i = 0; i < p.degree() - r.degree(); ++i) lc_pow *= q.leading();
    Rational sign_flip = (p.degree() * q.degree()) % 2 == 0 ? 1 : -1;
    return sign_flip * lc_pow * resultant_prs(q, r);
}

/// Resultant from known roots: lc(p)^deg(q) * lc(q)^deg(p) * prod (alpha_i - beta_j).
inline Rational resultant_from_roots(const std::vector<Rational>& p_roots,
                                     const std::vector<Rational>& q_roots,
                                     const Rational& lc_p = 1, const Rational& lc_q = 1) {
    Rational r = 1;
    for (std::size_t i = 0; i < q_roots.size(); ++i) r *= lc_p;
    for (std::size_t i = 0; i < p_roots.size(); ++i) r *= lc_q;
    for (const Rational& a : p_roots)
        for (const Rational& b : q_roots) r *= a - b;
    return r;
}

/// Resultant of a monic cubic and a quadratic via reduction mod the quadratic
/// and symmetric functions of the quadratic's roots:
///   Res(p, q) = q2^2 (r1^2 q0 - r1 r0 q1 + r0^2 q2),  r = p mod q.
inline Rational resultant_cubic_quadratic(const UniPoly& p, const UniPoly& q) {
    if (p.degree() != 3 || q.degree() != 2)
        throw std::invalid_argument("expected a (deg 3, deg 2) pair");
    UniPoly r = divmod(p, q).second;
    Rational r1 = r.coeff(1), r0 = r.coeff(0);
    Rational q2 = q.coeff(2), q1 = q.coeff(1), q0 = q.coeff(0);
    return q2 * q2 * (r1 * r1 * q0 - r1 * r0 * q1 + r0 * r0 * q2);
}

inline Rational random_rational(std::mt19937& gen, int num_range = 20, int den_range = 6) {
    std::uniform_int_distribution<int> n(-num_range, num_range);
    std::uniform_int_distribution<int> d(1, den_range);
    return Rational(n(gen), d(gen));
}

inline Rational random_positive_rational(std::mt19937& gen, int num_range = 20,
                                         int den_range = 6) {
    std::uniform_int_distribution<int> n(1, num_range);
    std::uniform_int_distribution<int> d(1, den_range);
    return Rational(n(gen), d(gen));
}

/// Random integer-coefficient polynomial of exact degree `deg`.
inline UniPoly random_int_poly(std::mt19937& gen, int deg, int range = 10) {
    std::uniform_int_distribution<int> c(-range, range);
    std::vector<Rational> coeffs(deg + 1);
    for (int i = 0; i < deg; ++i) coeffs[i] = c(gen);
    int lead = 0;
    while (lead == 0) lead = c(gen);
    coeffs[deg] = lead;
    return UniPoly(std::move(coeffs));
}

} // namespace chenlorenz::oracles

#endif // CHENLORENZ_TESTS_ORACLES_HPP
