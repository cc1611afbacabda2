#ifndef CHENLORENZ_SYSTEMS_HPP
#define CHENLORENZ_SYSTEMS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chenlorenz/matrix.hpp"
#include "chenlorenz/quadext.hpp"
#include "chenlorenz/rational.hpp"
#include "chenlorenz/unipoly.hpp"

namespace chenlorenz {

enum class SystemKind { Lorenz, Chen };

inline std::string to_string(SystemKind k) {
    return k == SystemKind::Lorenz ? "lorenz" : "chen";
}

struct LorenzParams {
    Rational a, b, c;
};

struct ChenParams {
    Rational a, b, c;
};

template <class T>
struct State3 {
    T x{}, y{}, z{};
};

/// Equilibrium labels: index 1 is the origin (P1/Q1), 2 and 3 the wing pair.
enum class EqLabel { E1 = 1, E2 = 2, E3 = 3 };

inline std::string label_name(SystemKind kind, EqLabel l) {
    return (kind == SystemKind::Lorenz ? "P" : "Q") + std::to_string(static_cast<int>(l));
}

/// dx/dt = a(y-x), dy/dt = cx - xz - y, dz/dt = xy - bz
template <class T>
State3<T> lorenz_field(const LorenzParams& p, const State3<T>& s) {
    T a(p.a), b(p.b), c(p.c);
    return {a * (s.y - s.x), c * s.x - s.x * s.z - s.y, s.x * s.y - b * s.z};
}

/// dx/dt = a(y-x), dy/dt = (c-a)x - xz + cy, dz/dt = xy - bz
template <class T>
State3<T> chen_field(const ChenParams& p, const State3<T>& s) {
    T a(p.a), b(p.b), c(p.c);
    return {a * (s.y - s.x), (c - a) * s.x - s.x * s.z + c * s.y, s.x * s.y - b * s.z};
}

struct Equilibrium {
    EqLabel label;
    State3<QuadExt> point;
};

struct EquilibriumSet {
    SystemKind kind;
    std::vector<Equilibrium> points;
    /// b(c-1) for Lorenz, b(2c-a) for Chen; wing points exist iff > 0.
    Rational existence_product;
    /// Existence product exactly 0: the wing pair merges into the origin.
    bool degenerate_merge = false;

    int count() const { return static_cast<int>(points.size()); }
};

namespace detail {

/// (radicand, wing height): wings are (+-sqrt(r), +-sqrt(r), h).
inline std::pair<Rational, Rational> wing_data(SystemKind kind, const Rational& a,
                                               const Rational& b, const Rational& c) {
    if (kind == SystemKind::Lorenz) return {b * (c - 1), c - 1};
    return {b * (2 * c - a), 2 * c - a};
}

} // namespace detail

inline EquilibriumSet equilibria(SystemKind kind, const Rational& a, const Rational& b,
                                 const Rational& c) {
    EquilibriumSet set;
    set.kind = kind;
    auto [r, h] = detail::wing_data(kind, a, b, c);
    set.existence_product = r;
    set.degenerate_merge = r == 0;
    set.points.push_back({EqLabel::E1, {QuadExt(0), QuadExt(0), QuadExt(0)}});
    if (r > 0) {
        QuadExt s = QuadExt::sqrt_of(r);
        set.points.push_back({EqLabel::E2, {-s, -s, QuadExt(h)}});
        set.points.push_back({EqLabel::E3, {s, s, QuadExt(h)}});
    }
    return set;
}

inline EquilibriumSet equilibria(const LorenzParams& p) {
    return equilibria(SystemKind::Lorenz, p.a, p.b, p.c);
}

inline EquilibriumSet equilibria(const ChenParams& p) {
    return equilibria(SystemKind::Chen, p.a, p.b, p.c);
}

/// Jacobian of the vector field at a state.
template <class T>
SquareMatrix<T> jacobian(SystemKind kind, const Rational& a, const Rational& b,
                         const Rational& c, const State3<T>& s) {
    SquareMatrix<T> j(3);
    T ta(a), tb(b), tc(c);
    j(0, 0) = T(0) - ta;
    j(0, 1) = ta;
    j(0, 2) = T(0);
    if (kind == SystemKind::Lorenz) {
        j(1, 0) = tc - s.z;
        j(1, 1) = T(-1);
    } else {
        j(1, 0) = tc - ta - s.z;
        j(1, 1) = tc;
    }
    j(1, 2) = T(0) - s.x;
    j(2, 0) = s.y;
    j(2, 1) = s.x;
    j(2, 2) = T(0) - tb;
    return j;
}

struct CharPolyCubic {
    Rational c2, c1, c0; // lambda^3 + c2 lambda^2 + c1 lambda + c0

    UniPoly as_unipoly() const { return UniPoly({c0, c1, c2, 1}, "lambda"); }

    Rational eval(const Rational& lambda) const { return as_unipoly().eval(lambda); }

    friend bool operator==(const CharPolyCubic&, const CharPolyCubic&) = default;
};

/// Characteristic polynomial det(lambda I - J) of a 3x3 matrix, via trace,
/// principal 2x2 minors and determinant.
template <class T>
std::array<T, 3> charpoly3(const SquareMatrix<T>& j) {
    if (j.order() != 3) throw std::invalid_argument("charpoly3 expects a 3x3 matrix");
    T tr = j(0, 0) + j(1, 1) + j(2, 2);
    T m2 = j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0) + j(0, 0) * j(2, 2) -
           j(0, 2) * j(2, 0) + j(1, 1) * j(2, 2) - j(1, 2) * j(2, 1);
    T det = determinant(j);
    // lambda^3 - tr lambda^2 + m2 lambda - det
    return {T(0) - tr, m2, T(0) - det};
}

namespace detail {

inline void require_wing(SystemKind kind, const Rational& a, const Rational& b,
                         const Rational& c, EqLabel label) {
    if (label == EqLabel::E1) return;
    auto [r, h] = wing_data(kind, a, b, c);
    if (r <= 0)
        throw std::domain_error("equilibrium " + label_name(kind, label) +
                                " does not exist for these parameters");
}

} // namespace detail

/// Closed-form Jacobian determinant at a labeled equilibrium:
/// ab(c-1) / -2ab(c-1) for Lorenz, ab(2c-a) / -2ab(2c-a) for Chen.
inline Rational jacobian_det_at_equilibrium(SystemKind kind, const Rational& a,
                                            const Rational& b, const Rational& c,
                                            EqLabel label) {
    detail::require_wing(kind, a, b, c, label);
    Rational base = detail::wing_data(kind, a, b, c).first * a;
    return label == EqLabel::E1 ? base : -2 * base;
}

/// Monic characteristic cubic at a labeled equilibrium, in closed form.
inline CharPolyCubic charpoly_at(SystemKind kind, const Rational& a, const Rational& b,
                                 const Rational& c, EqLabel label) {
    detail::require_wing(kind, a, b, c, label);
    CharPolyCubic p;
    if (kind == SystemKind::Lorenz) {
        p.c2 = a + b + 1;
        if (label == EqLabel::E1) {
            p.c1 = a + a * b - a * c + b;
            p.c0 = -a * b * (c - 1);
        } else {
            p.c1 = a * b + b * c;
            p.c0 = 2 * a * b * (c - 1);
        }
    } else {
        p.c2 = a + b - c;
        if (label == EqLabel::E1) {
            p.c1 = a * a + a * b - 2 * a * c - b * c;
            p.c0 = -a * b * (2 * c - a);
        } else {
            p.c1 = b * c;
            p.c0 = 2 * a * b * (2 * c - a);
        }
    }
    return p;
}

inline CharPolyCubic charpoly_at(const LorenzParams& p, EqLabel label) {
    return charpoly_at(SystemKind::Lorenz, p.a, p.b, p.c, label);
}

inline CharPolyCubic charpoly_at(const ChenParams& p, EqLabel label) {
    return charpoly_at(SystemKind::Chen, p.a, p.b, p.c, label);
}

} // namespace chenlorenz

#endif // CHENLORENZ_SYSTEMS_HPP
