#ifndef CHENLORENZ_MULTIPOLY_HPP
#define CHENLORENZ_MULTIPOLY_HPP

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "chenlorenz/matrix.hpp"
#include "chenlorenz/rational.hpp"

namespace chenlorenz {

/// Exponent triple on the three fixed variables (a', b', c').
using Expo = std::array<int, 3>;

/// Graded lexicographic, largest monomial first.
struct GradedLexDesc {
    bool operator()(const Expo& x, const Expo& y) const {
        int dx = x[0] + x[1] + x[2];
        int dy = y[0] + y[1] + y[2];
        if (dx != dy) return dx > dy;
        return x > y;
    }
};

/// Sparse multivariate polynomial in three variables over the rationals.
/// No zero coefficients are stored; terms ordered graded-lex descending,
/// so begin() is the leading term.
class MultiPoly {
public:
    using TermMap = std::map<Expo, Rational, GradedLexDesc>;

    MultiPoly() = default;

    MultiPoly(int c) {
        if (c != 0) terms_[{0, 0, 0}] = c;
    }

    explicit MultiPoly(const Rational& c) {
        if (c != 0) terms_[{0, 0, 0}] = c;
    }

    static MultiPoly term(const Expo& e, const Rational& c) {
        MultiPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    /// The variable x_i (i in {0,1,2}).
    static MultiPoly var(int i) {
        Expo e{0, 0, 0};
        e.at(i) = 1;
        return term(e, 1);
    }

    bool is_zero() const { return terms_.empty(); }

    int total_degree() const {
        if (is_zero()) return -1;
        const Expo& e = terms_.begin()->first;
        return e[0] + e[1] + e[2];
    }

    const TermMap& terms() const { return terms_; }

    Rational coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational eval(const Rational& x0, const Rational& x1, const Rational& x2) const {
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < e[0]; ++i) t *= x0;
            for (int i = 0; i < e[1]; ++i) t *= x1;
            for (int i = 0; i < e[2]; ++i) t *= x2;
            acc += t;
        }
        return acc;
    }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }

    friend MultiPoly operator*(const Rational& c, const MultiPoly& p) {
        MultiPoly r;
        if (c == 0) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    std::string str(const std::array<std::string, 3>& names = {"a'", "b'", "c'"}) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rational a = abs(c);
            bool has_var = e[0] + e[1] + e[2] > 0;
            if (a != 1 || !has_var) os << to_string(a);
            bool need_star = a != 1;
            for (int i = 0; i < 3; ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << "*";
                need_star = true;
                os << names[i];
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    void add_term(const Expo& e, const Rational& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

/// Exact multivariate division: returns f/g if g divides f, nullopt otherwise.
inline std::optional<MultiPoly> mpoly_divide_exact(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly q, r = f;
    const auto& [ge, gc] = *g.terms().begin();
    while (!r.is_zero()) {
        const auto& [re, rc] = *r.terms().begin();
        Expo d{re[0] - ge[0], re[1] - ge[1], re[2] - ge[2]};
        if (d[0] < 0 || d[1] < 0 || d[2] < 0) return std::nullopt;
        MultiPoly t = MultiPoly::term(d, rc / gc);
        q = q + t;
        r = r - t * g;
    }
    return q;
}

template <>
struct RingOps<MultiPoly> {
    static bool is_zero(const MultiPoly& p) { return p.is_zero(); }
    static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
        auto q = mpoly_divide_exact(a, b);
        if (!q)
            throw std::logic_error("inexact polynomial division in fraction-free elimination");
        return *q;
    }
};

} // namespace chenlorenz

#endif // CHENLORENZ_MULTIPOLY_HPP
