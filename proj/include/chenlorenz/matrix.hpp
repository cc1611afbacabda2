#ifndef CHENLORENZ_MATRIX_HPP
#define CHENLORENZ_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chenlorenz/rational.hpp"

namespace chenlorenz {

/// Ring operations used by fraction-free elimination. The defaults cover
/// field-like types (Rational, double); rings without operator/ specialize.
template <class T>
struct RingOps {
    static bool is_zero(const T& x) { return x == T(0); }
    static T exact_div(const T& a, const T& b) { return a / b; }
};

/// Dense square matrix over a commutative ring.
template <class T>
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t order) : n_(order), e_(order * order) {
        if (order == 0) throw std::invalid_argument("matrix order must be positive");
    }

    static SquareMatrix identity(std::size_t order) {
        SquareMatrix m(order);
        for (std::size_t i = 0; i < order; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t order() const { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<T> e_;
};

/// Fraction-free (Bareiss) determinant. Every division performed is exact
/// over the entry ring; zero pivots are handled by row swaps.
template <class T>
T determinant(SquareMatrix<T> m) {
    const std::size_t n = m.order();
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (RingOps<T>::is_zero(m(k, k))) {
            std::size_t piv = k + 1;
            while (piv < n && RingOps<T>::is_zero(m(piv, k))) ++piv;
            if (piv == n) return T(0);
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = RingOps<T>::exact_div(t, prev);
            }
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? T(0) - d : d;
}

} // namespace chenlorenz

#endif // CHENLORENZ_MATRIX_HPP
