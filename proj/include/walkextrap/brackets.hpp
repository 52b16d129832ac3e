#pragma once

// Bracket functionals <x^alpha f^beta> — the integrals (continuous model)
// or lattice sums (discrete model) of x^alpha f(x)^beta over [0, a].  These
// are the sufficient statistics of f consumed by the evaluation-function
// assembly.
//
// Closed forms are used wherever the form of f admits one (identity and
// polynomial forms for any real alpha >= 0; cosine via power reduction for
// integer alpha; sampled tables by exact integration of the piecewise-linear
// interpolant for integer alpha).  Everything else falls back to adaptive
// quadrature at 1e-10 relative tolerance.

#include "walkextrap/function_spec.hpp"
#include "walkextrap/rational.hpp"

namespace walkextrap {

struct Bracket {
    Rational alpha;
    int beta = 0;
    double value = 0.0;
    enum class Method { analytic, quadrature, discrete_sum } method = Method::analytic;

    const char* method_name() const {
        switch (method) {
            case Method::analytic: return "analytic";
            case Method::quadrature: return "quadrature";
            case Method::discrete_sum: return "discrete_sum";
        }
        return "?";
    }
};

// <x^alpha f^beta> = integral_0^a x^alpha f(x)^beta dx, alpha rational >= 0.
Bracket bracket(const FunctionSpec& f, const Rational& alpha, int beta);

// <x^alpha f^beta> = sum_{x=0}^{a} x^alpha f(x)^beta (0^0 = 1).
Bracket bracket_discrete(const FunctionSpec& f, int alpha, int beta, long a);

} // namespace walkextrap
