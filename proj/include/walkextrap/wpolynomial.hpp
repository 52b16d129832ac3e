#pragma once

// Polynomials in the signed drift w = 1-2p.  The evaluation function
// V_a^(n) and its w-derivative are represented this way; coefficients are
// stored in ascending powers of w.

#include "walkextrap/walk.hpp"

#include <Eigen/Dense>

namespace walkextrap {

struct WPolynomial {
    Eigen::VectorXd coeffs; // coeffs[i] multiplies w^i

    static WPolynomial zero(int degree_bound) {
        return {Eigen::VectorXd::Zero(degree_bound + 1)};
    }

    // index of the highest exactly-nonzero coefficient; -1 for the zero poly
    int degree() const {
        for (Eigen::Index i = coeffs.size() - 1; i >= 0; --i)
            if (coeffs[i] != 0.0) return static_cast<int>(i);
        return -1;
    }

    double coeff(int i) const {
        return (i >= 0 && i < coeffs.size()) ? coeffs[i] : 0.0;
    }
};

inline double eval_w(const WPolynomial& q, double w) {
    double v = 0.0;
    for (Eigen::Index i = q.coeffs.size() - 1; i >= 0; --i) v = v * w + q.coeffs[i];
    return v;
}

inline double eval_p(const WPolynomial& q, double p) {
    return eval_w(q, DriftParam::from_p(p).w);
}

// d/dw; one degree lower unless the input is constant or zero
inline WPolynomial derivative(const WPolynomial& q) {
    const Eigen::Index n = q.coeffs.size();
    if (n <= 1) return {Eigen::VectorXd::Zero(1)};
    Eigen::VectorXd d(n - 1);
    for (Eigen::Index i = 1; i < n; ++i) d[i - 1] = q.coeffs[i] * static_cast<double>(i);
    return {d};
}

inline WPolynomial scaled(const WPolynomial& q, double s) {
    return {q.coeffs * s};
}

// chain rule through w = 1-2p: dV/dp = -2 dV/dw
inline double eval_dp(const WPolynomial& dv_dw, double p) {
    return -2.0 * eval_p(dv_dw, p);
}

} // namespace walkextrap
