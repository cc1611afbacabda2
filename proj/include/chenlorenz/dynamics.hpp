#ifndef CHENLORENZ_DYNAMICS_HPP
#define CHENLORENZ_DYNAMICS_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "chenlorenz/rational.hpp"
#include "chenlorenz/systems.hpp"

namespace chenlorenz {

using Vec3 = State3<double>;

struct IntegratorConfig {
    double dt = 1e-3;
    double t_end = 100.0;
    Vec3 initial_state{1.0, 1.0, 1.0};
    double divergence_bound = 1e12;

    void validate() const {
        if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
        if (!(t_end > 0)) throw std::invalid_argument("t_end must be positive");
        if (dt > t_end) throw std::invalid_argument("dt must not exceed t_end");
    }
};

struct TrajectorySample {
    double t, x, y, z;
};

struct Trajectory {
    SystemKind kind;
    double pa = 0, pb = 0, pc = 0;
    std::vector<TrajectorySample> samples;
    bool diverged = false;
};

struct DoubleParams {
    double a, b, c;
};

inline DoubleParams to_doubles(SystemKind kind, const Rational& a, const Rational& b,
                               const Rational& c) {
    (void)kind;
    return {to_double(a), to_double(b), to_double(c)};
}

/// Right-hand side in double precision.
inline Vec3 field_value(SystemKind kind, const DoubleParams& p, const Vec3& s) {
    if (kind == SystemKind::Lorenz)
        return {p.a * (s.y - s.x), p.c * s.x - s.x * s.z - s.y, s.x * s.y - p.b * s.z};
    return {p.a * (s.y - s.x), (p.c - p.a) * s.x - s.x * s.z + p.c * s.y,
            s.x * s.y - p.b * s.z};
}

/// Jacobian rows in double precision (for variational flow).
inline std::array<std::array<double, 3>, 3> jacobian_value(SystemKind kind,
                                                           const DoubleParams& p,
                                                           const Vec3& s) {
    if (kind == SystemKind::Lorenz)
        return {{{-p.a, p.a, 0}, {p.c - s.z, -1, -s.x}, {s.y, s.x, -p.b}}};
    return {{{-p.a, p.a, 0}, {p.c - p.a - s.z, p.c, -s.x}, {s.y, s.x, -p.b}}};
}

namespace detail {

/// One classical RK4 step of y' = f(y) for a fixed-size state.
template <std::size_t N, class F>
std::array<double, N> rk4_step(const F& f, const std::array<double, N>& y, double dt) {
    auto scale_add = [](const std::array<double, N>& a, double s,
                        const std::array<double, N>& b) {
        std::array<double, N> r;
        for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + s * b[i];
        return r;
    };
    std::array<double, N> k1 = f(y);
    std::array<double, N> k2 = f(scale_add(y, dt / 2, k1));
    std::array<double, N> k3 = f(scale_add(y, dt / 2, k2));
    std::array<double, N> k4 = f(scale_add(y, dt, k3));
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i)
        r[i] = y[i] + dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    return r;
}

template <std::size_t N>
bool within_bound(const std::array<double, N>& y, double bound) {
    for (double v : y)
        if (!std::isfinite(v) || std::abs(v) > bound) return false;
    return true;
}

} // namespace detail

/// Fixed-step RK4 integration of a generic 3-dimensional field. Stops early
/// with diverged = true if any component leaves [-bound, bound].
template <class F>
Trajectory integrate_field(const F& rhs, const IntegratorConfig& cfg) {
    cfg.validate();
    Trajectory traj;
    std::array<double, 3> y{cfg.initial_state.x, cfg.initial_state.y,
                            cfg.initial_state.z};
    auto f = [&rhs](const std::array<double, 3>& s) {
        Vec3 v = rhs(Vec3{s[0], s[1], s[2]});
        return std::array<double, 3>{v.x, v.y, v.z};
    };
    std::size_t steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
    traj.samples.push_back({0.0, y[0], y[1], y[2]});
    for (std::size_t i = 1; i <= steps; ++i) {
        y = detail::rk4_step(f, y, cfg.dt);
        if (!detail::within_bound(y, cfg.divergence_bound)) {
            traj.diverged = true;
            return traj;
        }
        traj.samples.push_back({i * cfg.dt, y[0], y[1], y[2]});
    }
    return traj;
}

inline Trajectory integrate(SystemKind kind, const Rational& a, const Rational& b,
                            const Rational& c, const IntegratorConfig& cfg) {
    DoubleParams p = to_doubles(kind, a, b, c);
    Trajectory traj =
        integrate_field([&](const Vec3& s) { return field_value(kind, p, s); }, cfg);
    traj.kind = kind;
    traj.pa = p.a;
    traj.pb = p.b;
    traj.pc = p.c;
    return traj;
}

struct ContractionReport {
    double trace;
    double max_rel_deviation;
    bool diverged = false;
};

/// Integrates the fundamental matrix M' = J(x(t)) M alongside the flow and
/// compares det M(t) against exp(trace * t); both systems have constant
/// Jacobian trace, so the ratio is an exact invariant of the continuous flow.
inline ContractionReport volume_contraction_check(SystemKind kind, const Rational& a,
                                                  const Rational& b, const Rational& c,
                                                  const IntegratorConfig& cfg) {
    cfg.validate();
    DoubleParams p = to_doubles(kind, a, b, c);
    double trace = kind == SystemKind::Lorenz ? -(p.a + 1 + p.b) : -(p.a + p.b - p.c);

    // State layout: x, y, z, then M row-major.
    auto f = [&](const std::array<double, 12>& s) {
        Vec3 v = field_value(kind, p, {s[0], s[1], s[2]});
        auto j = jacobian_value(kind, p, {s[0], s[1], s[2]});
        std::array<double, 12> d{v.x, v.y, v.z};
        for (int r = 0; r < 3; ++r)
            for (int col = 0; col < 3; ++col) {
                double acc = 0;
                for (int m = 0; m < 3; ++m) acc += j[r][m] * s[3 + 3 * m + col];
                d[3 + 3 * r + col] = acc;
            }
        return d;
    };

    std::array<double, 12> y{cfg.initial_state.x,
                             cfg.initial_state.y,
                             cfg.initial_state.z,
                             1, 0, 0, 0, 1, 0, 0, 0, 1};
    auto det3 = [](const std::array<double, 12>& s) {
        const double* m = s.data() + 3;
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    };

    ContractionReport rep{trace, 0.0};
    std::size_t steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
    for (std::size_t i = 1; i <= steps; ++i) {
        y = detail::rk4_step(f, y, cfg.dt);
        if (!detail::within_bound(y, cfg.divergence_bound)) {
            rep.diverged = true;
            return rep;
        }
        double expected = std::exp(trace * (i * cfg.dt));
        double rel = std::abs(det3(y) - expected) / std::abs(expected);
        rep.max_rel_deviation = std::max(rep.max_rel_deviation, rel);
    }
    return rep;
}

struct LyapunovEstimate {
    double lambda_max = 0;
    double transient_discard = 0;
    double renormalization_interval = 0;
    bool diverged = false;
};

/// Benettin-style largest-Lyapunov estimate: integrate a tangent vector with
/// the variational flow, renormalize on a fixed interval, average log growth.
inline LyapunovEstimate largest_lyapunov(SystemKind kind, const Rational& a,
                                         const Rational& b, const Rational& c,
                                         const IntegratorConfig& cfg,
                                         double transient_discard = 100.0,
                                         double renorm_interval = 0.5) {
    cfg.validate();
    if (cfg.t_end - transient_discard < 100.0)
        throw std::invalid_argument(
            "t_end must leave at least 100 time units after the transient");
    DoubleParams p = to_doubles(kind, a, b, c);

    // State layout: x, y, z, tangent vector.
    auto f = [&](const std::array<double, 6>& s) {
        Vec3 v = field_value(kind, p, {s[0], s[1], s[2]});
        auto j = jacobian_value(kind, p, {s[0], s[1], s[2]});
        std::array<double, 6> d{v.x, v.y, v.z};
        for (int r = 0; r < 3; ++r)
            d[3 + r] = j[r][0] * s[3] + j[r][1] * s[4] + j[r][2] * s[5];
        return d;
    };

    std::array<double, 6> y{cfg.initial_state.x, cfg.initial_state.y,
                            cfg.initial_state.z, 1, 0, 0};
    auto norm = [](const std::array<double, 6>& s) {
        return std::sqrt(s[3] * s[3] + s[4] * s[4] + s[5] * s[5]);
    };

    LyapunovEstimate est;
    est.transient_discard = transient_discard;
    est.renormalization_interval = renorm_interval;

    std::size_t steps_per_renorm =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(renorm_interval / cfg.dt)));
    std::size_t total_steps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
    double log_sum = 0;
    double measured_time = 0;
    std::size_t step = 0;
    while (step < total_steps) {
        std::size_t block_steps = 0;
        for (; block_steps < steps_per_renorm && step < total_steps; ++block_steps, ++step) {
            y = detail::rk4_step(f, y, cfg.dt);
            if (!detail::within_bound(y, cfg.divergence_bound)) {
                est.diverged = true;
                return est;
            }
        }
        double n = norm(y);
        double t_now = step * cfg.dt;
        if (t_now > transient_discard) {
            log_sum += std::log(n);
            measured_time += block_steps * cfg.dt;
        }
        for (int i = 3; i < 6; ++i) y[i] /= n;
    }
    est.lambda_max = measured_time > 0 ? log_sum / measured_time : 0.0;
    return est;
}

} // namespace chenlorenz

#endif // CHENLORENZ_DYNAMICS_HPP
