#pragma once

// Linear extrapolation of f past the fitted window.  With p_star minimizing
// the evaluation function over {0,1} union M_a, the measure mean (1-2p)x
// gives two extrapolators at location b > a:
//
//   m       = (1 - 2 p_star) b                  (mean of mu_b)
//   m_tilde = f(a) + (1 - 2 p_star) (b - a)     (anchored at the window edge)
//
// Both are affine in b with the same slope 1 - 2 p_star; no quadrature is
// involved at this stage.

#include "walkextrap/evaluation.hpp"
#include "walkextrap/optimize.hpp"

namespace walkextrap {

struct ExtrapolationResult {
    WalkKind walk;
    int n = 2;
    double a = 0.0;
    double b = 0.0;
    double p_star = 0.0;
    double m = 0.0;
    double m_tilde = 0.0;
    double f_at_a = 0.0;
    MinimaReport minima; // diagnostics: the candidate set behind p_star
};

inline ExtrapolationResult extrapolate(const EvalSpec& spec, double b) {
    if (!(b > spec.a())) throw std::invalid_argument("extrapolate: b must exceed a");
    ExtrapolationResult res;
    res.walk = spec.walk;
    res.n = spec.n;
    res.a = spec.a();
    res.b = b;
    res.minima = argmin_p(spec);
    res.p_star = res.minima.p_star;
    const double slope = 1.0 - 2.0 * res.p_star;
    res.f_at_a = spec.f(res.a);
    res.m = slope * b;
    res.m_tilde = res.f_at_a + slope * (b - res.a);
    return res;
}

} // namespace walkextrap
