#ifndef CHENLORENZ_RESULTANT_HPP
#define CHENLORENZ_RESULTANT_HPP

#include <stdexcept>
#include <vector>

#include "chenlorenz/matrix.hpp"
#include "chenlorenz/unipoly.hpp"

namespace chenlorenz {

/// Sylvester matrix of two formal coefficient lists (highest degree first,
/// formal degrees m = p.size()-1 and n = q.size()-1). Row layout: n staggered
/// rows of p's coefficients followed by m staggered rows of q's.
template <class T>
SquareMatrix<T> sylvester_from_coeffs(const std::vector<T>& p, const std::vector<T>& q) {
    const std::size_t m = p.size() - 1;
    const std::size_t n = q.size() - 1;
    if (m < 1 || n < 1)
        throw std::invalid_argument("sylvester matrix requires formal degrees >= 1");
    SquareMatrix<T> s(m + n);
    for (std::size_t i = 0; i < s.order(); ++i)
        for (std::size_t j = 0; j < s.order(); ++j) s(i, j) = T(0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) s(r, r + j) = p[j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) s(n + r, r + j) = q[j];
    return s;
}

inline std::vector<Rational> descending_coeffs(const UniPoly& p) {
    std::vector<Rational> c(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c[i] = p.coeff(p.degree() - i);
    return c;
}

/// Sylvester matrix at true degrees; rejects zero or constant polynomials.
inline SquareMatrix<Rational> sylvester_matrix(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("sylvester matrix of zero polynomial");
    if (p.degree() < 1 || q.degree() < 1)
        throw std::domain_error("sylvester matrix requires degrees >= 1");
    return sylvester_from_coeffs(descending_coeffs(p), descending_coeffs(q));
}

/// Res(p, q) as the Sylvester determinant. Degenerate degree-0 cases follow
/// the standard convention Res(p, c) = c^deg(p).
inline Rational resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("resultant of zero polynomial");
    if (p.degree() == 0 && q.degree() == 0) return Rational(1);
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
    return determinant(sylvester_matrix(p, q));
}

} // namespace chenlorenz

#endif // CHENLORENZ_RESULTANT_HPP
