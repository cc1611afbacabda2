#ifndef CHENLORENZ_QUADEXT_HPP
#define CHENLORENZ_QUADEXT_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "chenlorenz/rational.hpp"

namespace chenlorenz {

/// Number of the form rat + coef*sqrt(radicand) with rational parts and a
/// fixed nonnegative radicand. Exact arithmetic in one quadratic extension;
/// mixing two different irrational radicands is rejected. If the radicand is
/// a perfect square the value collapses to a plain rational on construction.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int r) : rat_(r) {}
    QuadExt(Rational r) : rat_(std::move(r)) {}

    QuadExt(Rational rat, Rational coef, Rational radicand)
        : rat_(std::move(rat)), coef_(std::move(coef)), rad_(std::move(radicand)) {
        if (rad_ < 0) throw std::domain_error("negative radicand");
        normalize();
    }

    static QuadExt sqrt_of(const Rational& radicand) { return QuadExt(0, 1, radicand); }

    const Rational& rational_part() const { return rat_; }
    const Rational& irrational_coef() const { return coef_; }
    const Rational& radicand() const { return rad_; }

    bool is_rational() const { return coef_ == 0; }
    bool is_zero() const { return rat_ == 0 && coef_ == 0; }

    double to_double_approx() const {
        return to_double(rat_) + to_double(coef_) * std::sqrt(to_double(rad_));
    }

    QuadExt operator-() const { return QuadExt(-rat_, -coef_, rad_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        Rational rad = merge_radicand(a, b);
        return QuadExt(a.rat_ + b.rat_, a.coef_ + b.coef_, rad);
    }

    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }

    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        Rational rad = merge_radicand(a, b);
        return QuadExt(a.rat_ * b.rat_ + a.coef_ * b.coef_ * rad,
                       a.rat_ * b.coef_ + a.coef_ * b.rat_, rad);
    }

    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        Rational rad = merge_radicand(a, b);
        // Multiply by the conjugate; the norm is nonzero since rad is not a
        // perfect square whenever coef != 0.
        Rational n = b.rat_ * b.rat_ - b.coef_ * b.coef_ * b.rad_;
        QuadExt conj(b.rat_ / n, -b.coef_ / n, b.rad_);
        return a * conj;
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.rat_ == b.rat_ && a.coef_ == b.coef_ &&
               (a.coef_ == 0 || a.rad_ == b.rad_);
    }

    std::string str() const {
        if (coef_ == 0) return to_string(rat_);
        std::string s;
        if (rat_ != 0) s = to_string(rat_) + (coef_ > 0 ? " + " : " - ");
        else if (coef_ < 0) s = "-";
        Rational a = abs(coef_);
        if (a != 1) s += to_string(a) + "*";
        s += "sqrt(" + to_string(rad_) + ")";
        return s;
    }

private:
    void normalize() {
        if (coef_ == 0) {
            rad_ = 0;
            return;
        }
        if (auto s = perfect_sqrt(rad_)) {
            rat_ += coef_ * *s;
            coef_ = 0;
            rad_ = 0;
        }
    }

    static Rational merge_radicand(const QuadExt& a, const QuadExt& b) {
        if (a.coef_ == 0) return b.rad_;
        if (b.coef_ == 0) return a.rad_;
        if (a.rad_ != b.rad_)
            throw std::domain_error("mixing distinct quadratic radicands");
        return a.rad_;
    }

    Rational rat_ = 0;
    Rational coef_ = 0;
    Rational rad_ = 0;
};

} // namespace chenlorenz

#endif // CHENLORENZ_QUADEXT_HPP
