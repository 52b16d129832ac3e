#pragma once

// Minimization of the evaluation function.
//
// The candidate set is S = {0, 1} union M_a, where M_a collects the interior
// local minima of V on (0,1): points with dV/dp = 0 and d2V/dp2 > 0.  The
// reported p_star is the argmin of V over S; when several candidates tie
// within tolerance, p_star is their average and the report is flagged
// non-unique.
//
// Interior minima are found on the w-image (-1,1) of the unit interval by
// certified root isolation of dV/dw: a Sturm chain gives exact root counts
// per subinterval, bisection isolates, and a safeguarded Newton iteration
// polishes each root to |dV/dw| <= 1e-12 * scale.
//
// For n = 2 the quadratic has the closed-form unconstrained minimizer
//   p = 1/2 - 3 <x f> / (2 a^3)                (continuous brackets)
//   p = 1/2 - 3 <x f> / (2 (a-1) a (a+1))      (discrete brackets, dtrw-z)
// which is exposed separately as a diagnostic (it may land outside [0,1]).

#include "walkextrap/evaluation.hpp"
#include "walkextrap/wpolynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace walkextrap {

struct MinimaReport {
    std::vector<double> local_minima;                     // M_a, ascending p in (0,1)
    std::vector<std::pair<double, double>> v_at_candidates; // (p, V(p)) over {0,1} u M_a
    double p_star = 0.0;
    bool unique = true;
    std::optional<double> discriminant; // 9 A3^2 - 24 A2 A4 when deg V = 4
};

// Unconstrained global minimizer on R of the n=2 quadratic (continuous
// families; ctrw-z shares it).  Rejects n != 2.
double minimize_closed_form_n2(const EvalSpec& spec);

// Same for the dtrw-z quadratic with discrete brackets; a >= 2.
double minimize_closed_form_n2_discrete(const FunctionSpec& f, long a);

// All p in (0,1) with V'(p) = 0 and V''(p) > 0, ascending.
std::vector<double> find_local_minima(const WPolynomial& v);

// argmin of V over {0, 1} union find_local_minima(v).
MinimaReport argmin_from_polynomial(const WPolynomial& v);

// Convenience: build_v(spec) then argmin_from_polynomial.
MinimaReport argmin_p(const EvalSpec& spec);

namespace detail {

// Distinct real roots of the polynomial (ascending coefficients) inside
// (lo, hi], isolated by Sturm sign counts.  Exposed for tests.
std::vector<double> real_roots_in_interval(const Eigen::VectorXd& coeffs, double lo, double hi);

} // namespace detail

} // namespace walkextrap
