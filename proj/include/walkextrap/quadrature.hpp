#pragma once

// Adaptive Gauss-Kronrod quadrature (7-point Gauss / 15-point Kronrod pair)
// with interval bisection.  The error estimate on each panel is |K15 - G7|;
// the panel with the largest estimate is split until the global estimate
// meets max(abs_floor, rel_tol * |integral|) or the panel budget runs out.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace walkextrap {

// Thrown when the requested tolerance cannot be certified; carries the
// estimate that was achieved.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
          achieved_error(achieved) {}
    double achieved_error;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_floor = 1e-13;
    int max_panels = 4096;
    int initial_panels = 8; // seed subdivision so narrow features get sampled
};

namespace detail {

// Kronrod-15 abscissae/weights and the embedded Gauss-7 weights.
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kK15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gauss_kronrod_panel(const F& f, double lo, double hi, double& integral, double& err) {
    const double h = 0.5 * (hi - lo);
    const double mid = 0.5 * (lo + hi);
    const double fc = f(mid);
    double resk = fc * kK15Weights[7];
    double resg = fc * kG7Weights[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kGK15Nodes[j];
        const double fsum = f(mid - dx) + f(mid + dx);
        resk += fsum * kK15Weights[j];
        if (j % 2 == 1) resg += fsum * kG7Weights[j / 2];
    }
    integral = resk * h;
    err = std::abs((resk - resg) * h);
}

} // namespace detail

// Integrates f over [lo, hi].  Throws QuadratureError on non-convergence.
template <class F>
double integrate(const F& f, double lo, double hi, const QuadratureOptions& opt = {}) {
    if (lo == hi) return 0.0;
    struct Panel {
        double lo, hi, value, err;
    };
    std::vector<Panel> panels;
    panels.reserve(64);
    const int seeds = std::max(1, opt.initial_panels);
    for (int i = 0; i < seeds; ++i) {
        Panel p{lo + (hi - lo) * i / seeds, lo + (hi - lo) * (i + 1) / seeds, 0.0, 0.0};
        detail::gauss_kronrod_panel(f, p.lo, p.hi, p.value, p.err);
        panels.push_back(p);
    }

    auto total = [&] {
        double v = 0, e = 0;
        for (const auto& p : panels) { v += p.value; e += p.err; }
        return std::pair<double, double>(v, e);
    };

    while (true) {
        auto [value, err] = total();
        const double tol = std::max(opt.abs_floor, opt.rel_tol * std::abs(value));
        if (err <= tol) return value;
        if (static_cast<int>(panels.size()) >= opt.max_panels)
            throw QuadratureError("quadrature did not converge", err);

        auto worst = std::max_element(panels.begin(), panels.end(),
                                      [](const Panel& a, const Panel& b) { return a.err < b.err; });
        const double mid = 0.5 * (worst->lo + worst->hi);
        if (mid <= worst->lo || mid >= worst->hi)
            throw QuadratureError("quadrature interval underflow", err);
        Panel left{worst->lo, mid, 0.0, 0.0};
        Panel right{mid, worst->hi, 0.0, 0.0};
        detail::gauss_kronrod_panel(f, left.lo, left.hi, left.value, left.err);
        detail::gauss_kronrod_panel(f, right.lo, right.hi, right.value, right.err);
        *worst = left;
        panels.push_back(right);
    }
}

} // namespace walkextrap
