#pragma once

// Assembly of the evaluation function V_a^(n)(p) as an exact polynomial in
// w = 1-2p.
//
// V_a^(n)(p) = integral_0^a dx integral dy (y - f(x))^n mu_x(y,p)
//            = sum_k C(n,k) (-1)^(n-k) integral_0^a f^(n-k)(x) M^(k)(x,p) dx.
//
// Substituting the moment expansion M^(k) = sum coef w^e x^g and collecting
// powers of w turns V into a degree-n polynomial whose coefficients are
// combinations of brackets <x^g f^(n-k)>.  The combinatorial part is kept
// in exact rational arithmetic; floating-point brackets enter last.
//
// The lattice models are n=2 specializations: ctrw-z shares the rw
// polynomial (their first three moments coincide), and dtrw-z uses the
// discrete-bracket quadratic
//   V = <f^2> - 2<xf> w + a(a+1)/6 (2(a-1) w^2 + 3).

#include "walkextrap/brackets.hpp"
#include "walkextrap/function_spec.hpp"
#include "walkextrap/walk.hpp"
#include "walkextrap/wpolynomial.hpp"

#include <vector>

namespace walkextrap {

struct EvalSpec {
    WalkKind walk;
    FunctionSpec f;
    int n = 2; // even moment order, n <= 16

    double a() const { return f.a; }
};

// V as a polynomial in w; degree <= n, leading coefficient a^(n+1)/(n+1)
// for the continuous families.
WPolynomial build_v(const EvalSpec& spec);

// dV/dw, exact term-by-term derivative of build_v.  dV/dp = -2 dV/dw.
WPolynomial build_v_derivative(const EvalSpec& spec);

// The dtrw-z quadratic with discrete-sum brackets; a >= 2.
WPolynomial build_v_discrete_dtrw(const FunctionSpec& f, long a);

// Distinct brackets consumed by build_v for this spec (diagnostics).
std::vector<Bracket> collect_brackets(const EvalSpec& spec);

} // namespace walkextrap
