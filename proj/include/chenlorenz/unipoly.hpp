#ifndef CHENLORENZ_UNIPOLY_HPP
#define CHENLORENZ_UNIPOLY_HPP

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chenlorenz/rational.hpp"

namespace chenlorenz {

/// Dense univariate polynomial over the rationals, coefficients stored
/// lowest degree first. The zero polynomial has an empty coefficient list.
class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(std::vector<Rational> coeffs, std::string var = "b")
        : coeffs_(std::move(coeffs)), var_(std::move(var)) {
        trim();
    }

    UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static UniPoly zero() { return UniPoly(); }

    static UniPoly constant(Rational c) { return UniPoly({std::move(c)}); }

    /// x - r
    static UniPoly linear_root(const Rational& r) { return UniPoly({-r, 1}); }

    static UniPoly monomial(std::size_t deg, Rational c = 1) {
        std::vector<Rational> v(deg + 1);
        v[deg] = std::move(c);
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t i) const {
        static const Rational kZero{};
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    const Rational& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    const std::string& var() const { return var_; }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    double eval(double x) const {
        double acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + to_double(*it);
        return acc;
    }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1) return UniPoly();
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            d[i - 1] = coeffs_[i] * Rational(static_cast<int>(i));
        return UniPoly(std::move(d), var_);
    }

    UniPoly operator-() const {
        std::vector<Rational> r(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = -coeffs_[i];
        return UniPoly(std::move(r), var_);
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(r), a.var_);
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(r), a.var_);
    }

    friend UniPoly operator*(const Rational& c, const UniPoly& p) {
        if (c == 0) return UniPoly();
        std::vector<Rational> r(p.coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * p.coeffs_[i];
        return UniPoly(std::move(r), p.var_);
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Euclidean division over Q: returns (quotient, remainder).
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        UniPoly q, r = a;
        std::vector<Rational> qc(
            a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rational c = r.leading() / b.leading();
            std::size_t shift = r.degree() - b.degree();
            qc[shift] = c;
            r = r - c * (b << shift);
        }
        return {UniPoly(std::move(qc), a.var_), r};
    }

    /// Multiply by x^n.
    UniPoly operator<<(std::size_t n) const {
        if (is_zero()) return UniPoly();
        std::vector<Rational> r(coeffs_.size() + n);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i + n] = coeffs_[i];
        return UniPoly(std::move(r), var_);
    }

    UniPoly monic() const {
        if (is_zero()) return UniPoly();
        return Rational(1) / leading() * *this;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rational a = abs(c);
            if (a != 1 || i == 0) os << to_string(a);
            if (i > 0) {
                if (a != 1) os << "*";
                os << var_;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
    std::string var_ = "b";
};

/// Monic gcd over Q. Requires at least one nonzero argument.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// p / gcd(p, p'): same real roots, all simple.
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 1) return p;
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return divmod(p, g).first;
}

inline Rational poly_eval(const UniPoly& p, const Rational& x) { return p.eval(x); }

} // namespace chenlorenz

#endif // CHENLORENZ_UNIPOLY_HPP
