#pragma once

// Probability measures mu_x(y,p) of the five walk families and their exact
// k-th moments M^(k)(x,p).
//
// Continuous families (density on R, c = (1-2p)x):
//   ctqw    arcsine law on (c-x, c+x):      1 / (pi x sqrt(1-u^2)),   u=(y-c)/x
//   dtqw    Konno law on (c-xr, c+xr):      sqrt(1-r^2) / (pi x (1-u^2) sqrt(r^2-u^2))
//   rw      Gaussian with mean c, var x
//
// Lattice families (point masses on Z, p in (0,1)):
//   ctrw_z  e^{-x} ((1-p)/p)^{y/2} I_y(2 sqrt(p(1-p)) x)     (x real > 0)
//   dtrw_z  C(x,(x-y)/2) p^{(x-y)/2} (1-p)^{(x+y)/2}         (x integer > 0)
//
// Every family satisfies M^(0) = 1 and M^(1) = (1-2p)x.  For the continuous
// families the k-th moment expands as sum_l coef * w^{k-l} * x^{x_exp} over
// even l, with exact rational combinatorial coefficients; that expansion is
// exposed as MomentCoefficients and is what the evaluation-function assembly
// consumes.

#include "walkextrap/rational.hpp"
#include "walkextrap/walk.hpp"

#include <vector>

namespace walkextrap {

struct MomentTerm {
    Rational comb;          // exact combinatorial part
    double walk_factor = 1; // Konno even-moment factor for dtqw, 1 otherwise
    int w_exp = 0;
    Rational x_exp;

    double coef() const { return comb.to_double() * walk_factor; }
};

struct MomentCoefficients {
    WalkKind walk;
    int k = 0;
    std::vector<MomentTerm> terms;

    double evaluate(double x, double p) const;
};

// Density (continuous families) or point mass (lattice families) of
// mu_x(.,p) at y.  Zero outside the open support.
double density(const WalkKind& walk, double x, double p, double y);

// Exact k-th moment of mu_x(.,p).  For ctrw_z with k >= 3 the moment is a
// truncated lattice sum (tail below 1e-12 relative); everything else is in
// closed form.
double moment(const WalkKind& walk, int k, double x, double p);

// Symbolic expansion of M^(k) for the continuous families.
MomentCoefficients moment_coefficients(const WalkKind& walk, int k);

// Variance of mu_x(.,p); independent of p for the continuous families:
// x^2/2 (ctqw), (1-sqrt(1-r^2)) x^2 (dtqw), x (rw).
double variance(const WalkKind& walk, double x);

namespace detail {

// A_r(l): the l-th (even) moment of the Konno density with parameter r.
double konno_even_moment(double r, int l);

// I_n(z) for integer order; uses I_{-n} = I_n.
double modified_bessel_i(long n, double z);

// sum_y y^k mu_x(y,p) over the lattice support (exact finite sum for
// dtrw_z, truncated series for ctrw_z).
double lattice_moment_sum(const WalkKind& walk, int k, double x, double p);

} // namespace detail

} // namespace walkextrap
