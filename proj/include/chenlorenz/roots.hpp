#ifndef CHENLORENZ_ROOTS_HPP
#define CHENLORENZ_ROOTS_HPP

#include <algorithm>
#include <vector>

#include "chenlorenz/rational.hpp"
#include "chenlorenz/unipoly.hpp"

namespace chenlorenz {

/// A distinct real root of a univariate polynomial. Exact rational roots
/// carry `value`; irrational roots carry an isolating interval (lo, hi]
/// refined to width <= 1e-12, with `approx` its midpoint.
struct RealRoot {
    Rational lo;
    Rational hi;
    bool exact = false;
    Rational value;
    double approx = 0.0;
};

/// Sturm chain of a squarefree polynomial.
inline std::vector<UniPoly> sturm_chain(const UniPoly& f) {
    std::vector<UniPoly> chain{f, f.derivative()};
    while (!chain.back().is_zero()) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        chain.push_back(-divmod(a, b).second);
    }
    chain.pop_back();
    return chain;
}

inline int sturm_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const UniPoly& f : chain) {
        int s = sign(f.eval(x));
        if (s != 0 && prev != 0 && s != prev) ++var;
        if (s != 0) prev = s;
    }
    return var;
}

inline int sturm_variations_at_infinity(const std::vector<UniPoly>& chain, bool positive) {
    int var = 0, prev = 0;
    for (const UniPoly& f : chain) {
        if (f.is_zero()) continue;
        int s = sign(f.leading());
        if (!positive && f.degree() % 2 == 1) s = -s;
        if (s != 0 && prev != 0 && s != prev) ++var;
        if (s != 0) prev = s;
    }
    return var;
}

/// Number of distinct real roots of the squarefree polynomial behind `chain`.
inline int sturm_root_count(const std::vector<UniPoly>& chain) {
    return sturm_variations_at_infinity(chain, false) -
           sturm_variations_at_infinity(chain, true);
}

/// Cauchy bound: all real roots lie in (-B, B).
inline Rational root_bound(const UniPoly& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = chenlorenz::abs(Rational(p.coeff(i) / p.leading()));
        if (a > m) m = a;
    }
    return m + 1;
}

namespace detail {

/// All rational roots of p, each reported once. Degrees <= 2 are solved in
/// closed form; higher degrees use the rational root theorem with divisor
/// enumeration capped by trial division, so pathologically large coefficients
/// may hide a rational root (callers then see an isolating interval instead).
inline std::vector<Rational> rational_roots(UniPoly p) {
    std::vector<Rational> roots;
    while (!p.is_zero() && p.coeff(0) == 0) {
        p = divmod(p, UniPoly::monomial(1)).first;
        if (roots.empty()) roots.push_back(0);
    }
    if (p.degree() <= 0) return roots;
    if (p.degree() == 1) {
        roots.push_back(-p.coeff(0) / p.coeff(1));
        return roots;
    }
    if (p.degree() == 2) {
        Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        Rational disc = b * b - 4 * a * c;
        if (auto s = perfect_sqrt(disc)) {
            roots.push_back((-b + *s) / (2 * a));
            if (*s != 0) roots.push_back((-b - *s) / (2 * a));
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    // Integerize: candidates are num/den with num | a0, den | an.
    Int scale = 1;
    for (const Rational& c : p.coeffs()) scale = boost::multiprecision::lcm(scale, den(c));
    std::vector<Int> ic(p.coeffs().size());
    for (std::size_t i = 0; i < ic.size(); ++i)
        ic[i] = num(p.coeff(i) * Rational(scale));

    auto divisors = [](Int n) {
        if (n < 0) n = -n;
        std::vector<Int> ds;
        const Int cap = 1000000;
        for (Int d = 1; d * d <= n && d <= cap; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                ds.push_back(n / d);
            }
        }
        return ds;
    };
    std::vector<Rational> found;
    for (const Int& pn : divisors(ic.front()))
        for (const Int& qd : divisors(ic.back())) {
            Rational cand(pn, qd);
            if (p.eval(cand) == 0) found.push_back(cand);
            if (p.eval(-cand) == 0) found.push_back(-cand);
        }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace detail

/// Isolates all distinct real roots of p (Sturm counting plus bisection).
/// Rational roots are reported exactly whenever detectable; all isolating
/// intervals are refined to width <= 1e-12.
inline std::vector<RealRoot> real_roots(const UniPoly& p) {
    std::vector<RealRoot> out;
    if (p.is_zero() || p.degree() == 0) return out;
    UniPoly f = squarefree_part(p).monic();

    for (const Rational& r : detail::rational_roots(f)) {
        RealRoot root;
        root.exact = true;
        root.value = r;
        root.lo = root.hi = r;
        root.approx = to_double(r);
        out.push_back(root);
        f = divmod(f, UniPoly::linear_root(r)).first;
    }

    if (f.degree() >= 1) {
        const Rational width_target(1, Int("1000000000000"));
        auto chain = sturm_chain(f);
        Rational bound = root_bound(f);
        // Stack of half-open intervals (lo, hi] with their root counts.
        struct Seg {
            Rational lo, hi;
            int count;
        };
        std::vector<Seg> stack;
        int total = sturm_variations(chain, -bound) - sturm_variations(chain, bound);
        if (total > 0) stack.push_back({-bound, bound, total});
        while (!stack.empty()) {
            Seg s = stack.back();
            stack.pop_back();
            if (s.count == 1 && s.hi - s.lo <= width_target && f.eval(s.hi) != 0) {
                RealRoot root;
                root.lo = s.lo;
                root.hi = s.hi;
                root.approx = to_double((s.lo + s.hi) / 2);
                out.push_back(root);
                continue;
            }
            Rational mid = (s.lo + s.hi) / 2;
            if (f.eval(mid) == 0) {
                // A dyadic rational root missed by the divisor search.
                RealRoot root;
                root.exact = true;
                root.value = mid;
                root.lo = root.hi = mid;
                root.approx = to_double(mid);
                out.push_back(root);
                f = divmod(f, UniPoly::linear_root(mid)).first;
                chain = sturm_chain(f);
            }
            int left = sturm_variations(chain, s.lo) - sturm_variations(chain, mid);
            int right = sturm_variations(chain, mid) - sturm_variations(chain, s.hi);
            if (left > 0) stack.push_back({s.lo, mid, left});
            if (right > 0) stack.push_back({mid, s.hi, right});
        }
    }

    std::sort(out.begin(), out.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
    return out;
}

} // namespace chenlorenz

#endif // CHENLORENZ_ROOTS_HPP
