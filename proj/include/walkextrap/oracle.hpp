#pragma once

// Independent brute-force checks for every closed form in the library:
// singularity-aware quadrature of the measure integrals, exact
// dynamic-programming walk simulation on Z, and weak-limit diagnostics.
//
// The quantum-walk densities have integrable endpoint singularities; the
// quadrature oracles remove them by substitution (u = sin t for the arcsine
// law, u = r sin t for the Konno law) so the transformed integrands are
// smooth.  Lattice measures are summed exactly over their (effective)
// support.  Nothing here reuses the closed-form moment or evaluation
// paths it is meant to check.

#include "walkextrap/evaluation.hpp"
#include "walkextrap/function_spec.hpp"
#include "walkextrap/measures.hpp"
#include "walkextrap/walk.hpp"
#include "walkextrap/wpolynomial.hpp"

#include <Eigen/Dense>

#include <functional>
#include <ostream>
#include <vector>

namespace walkextrap {

// Finite-support distribution on the integer lattice; masses[i] sits at
// position support_offset + i.
struct DistributionOnZ {
    long support_offset = 0;
    Eigen::VectorXd masses;

    long min_position() const { return support_offset; }
    long max_position() const { return support_offset + masses.size() - 1; }
    double mass_at(long y) const {
        const long i = y - support_offset;
        return (i >= 0 && i < masses.size()) ? masses[i] : 0.0;
    }
    double total_mass() const { return masses.sum(); }

    double moment(int k) const {
        double s = 0.0;
        for (Eigen::Index i = 0; i < masses.size(); ++i)
            s += masses[i] * std::pow(static_cast<double>(support_offset + i), k);
        return s;
    }
};

struct KSReport {
    enum class Target { arcsine, konno, gaussian };
    double statistic = 0.0;
    double sample_or_time_scale = 0.0;
    Target target = Target::gaussian;
    double target_param = 0.0; // r for the Konno target
};

// k-th moment of mu_x(.,p) by quadrature (continuous families) or exact
// lattice summation (discrete families).
double quad_moment(const WalkKind& walk, int k, double x, double p, double rel_tol = 1e-10);

// V_a^(n)(p) by nested quadrature: outer x over [0,a], inner y over the
// measure support.  The independent check for build_v.
double quad_v(const EvalSpec& spec, double p, double rel_tol = 1e-7);

// Exact distribution of the discrete-time lattice walk after t steps
// (left step with probability p).
DistributionOnZ simulate_dtrw(long t, double p);

// Scalar-generic DP core behind simulate_dtrw; instantiate with an exact
// scalar type to compare bit-for-bit against the binomial closed form.
template <class S>
std::vector<S> dtrw_step_masses(long t, const S& p) {
    const S q = S(1) - p;
    std::vector<S> m{S(1)};
    for (long s = 0; s < t; ++s) {
        std::vector<S> next(m.size() + 2, S(0));
        for (size_t i = 0; i < m.size(); ++i) {
            next[i] += p * m[i];     // step left: position index keeps pace
            next[i + 2] += q * m[i]; // step right
        }
        m = std::move(next);
    }
    return m; // index i holds position -t + i
}

// Exact amplitude evolution of the Hadamard coin walk from the symmetric
// (1, i)/sqrt(2) initial coin state; returns |amplitude|^2 at time t.
DistributionOnZ simulate_hadamard_dtqw(long t);

// Brute-force sum_x sum_y (y - f(x))^2 mu_x(y,p) for the discrete-time
// lattice model, x = 0..a, using the DP distributions.
double discrete_v(const FunctionSpec& f, long a, double p);

// Max residual of the continuous-time lattice master equation
//   d mu_x(y)/dx = p mu_x(y+1) + (1-p) mu_x(y-1) - mu_x(y)
// over y in [y_min, y_max], with a central difference in x (step 1e-5).
double ctrw_master_equation_residual(double x, double p, long y_min, long y_max);

// sup_y |F_dist(y) - target(y / scale)| for a continuous target CDF.
double ks_statistic(const DistributionOnZ& dist, double scale,
                    const std::function<double(double)>& target_cdf);

KSReport ks_against_gaussian(const DistributionOnZ& dist, double scale);
KSReport ks_against_konno(const DistributionOnZ& dist, double scale, double r);

double gaussian_cdf(double u);
double arcsine_cdf(double u);
double konno_cdf(double u, double r);

// plot-ready dump: header "position,mass", one row per support site
void write_distribution_csv(const DistributionOnZ& dist, std::ostream& os);

// dense scan of V over a p-interval with a parabolic refinement around the
// best sample; the brute-force counterpart of argmin_p
struct GridMinimum {
    double p = 0.0;
    double value = 0.0;
};
GridMinimum grid_minimize_p(const WPolynomial& v, double p_lo, double p_hi, int samples);

} // namespace walkextrap
