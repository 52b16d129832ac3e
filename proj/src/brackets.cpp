#include "walkextrap/brackets.hpp"

#include "walkextrap/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace walkextrap {

namespace {

double ipow(double base, long e) {
    double acc = 1.0, b = base;
    for (; e > 0; e >>= 1, b *= b)
        if (e & 1) acc *= b;
    return acc;
}

// integral_0^a x^(alpha+d) dx summed over a power expansion
double power_integral(double a, double alpha, long d) {
    return std::pow(a, alpha + static_cast<double>(d) + 1.0) /
           (alpha + static_cast<double>(d) + 1.0);
}

// I(q,m) = integral_0^a x^q cos(mx) dx.  The integration-by-parts ladder in
// q multiplies roundoff by ~q/(ma) per step, so it is only used where it
// contracts; for ma <= q the Taylor series of cos(mx) is summed instead
// (its terms peak near 2j = ma, well before cancellation can bite in that
// regime).
double cosine_power_integral(double a, int q, int m) {
    if (m == 0) return std::pow(a, q + 1) / (q + 1);
    const double dm = static_cast<double>(m);
    const double ma = dm * a;
    if (ma <= static_cast<double>(q)) {
        double sum = 0.0, scale = 0.0;
        double c = std::pow(a, q + 1); // (ma)^(2j)/(2j)! * a^(q+1)
        for (int j = 0; j < 400; ++j) {
            const double term = c / static_cast<double>(q + 2 * j + 1);
            sum += (j % 2 == 0) ? term : -term;
            scale = std::max(scale, std::abs(sum));
            c *= ma * ma / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
            if (2.0 * j > ma && c < 1e-18 * scale) break;
        }
        return sum;
    }
    double ci = std::sin(ma) / dm;         // I(0,m)
    double si = (1.0 - std::cos(ma)) / dm; // J(0,m)
    for (int i = 1; i <= q; ++i) {
        const double xq = std::pow(a, i);
        const double next_ci = xq * std::sin(ma) / dm - (i / dm) * si;
        const double next_si = -xq * std::cos(ma) / dm + (i / dm) * ci;
        ci = next_ci;
        si = next_si;
    }
    return ci;
}

// cos^beta x = 2^-beta sum_j C(beta,j) cos((beta-2j)x); integrate termwise.
double cosine_bracket_analytic(double a, int alpha, int beta) {
    double sum = 0.0;
    for (int j = 0; j <= beta; ++j)
        sum += binomial(beta, j).to_double() *
               cosine_power_integral(a, alpha, std::abs(beta - 2 * j));
    return sum * half_power(beta).to_double();
}

// (f_poly)^beta by repeated coefficient convolution
std::vector<double> poly_power(const Eigen::VectorXd& coeffs, int beta) {
    std::vector<double> acc{1.0};
    for (int rep = 0; rep < beta; ++rep) {
        std::vector<double> next(acc.size() + coeffs.size() - 1, 0.0);
        for (size_t i = 0; i < acc.size(); ++i)
            for (Eigen::Index j = 0; j < coeffs.size(); ++j)
                next[i + static_cast<size_t>(j)] += acc[i] * coeffs[j];
        acc = std::move(next);
    }
    return acc;
}

// exact integral of x^alpha (y0 + s t)^beta over one sampled segment,
// integer alpha, t = x - x0 in [0, h]
double segment_integral_exact(double x0, double h, double y0, double s, int alpha, int beta) {
    double sum = 0.0;
    for (int i = 0; i <= alpha; ++i) {
        const double xi = binomial(alpha, i).to_double() * std::pow(x0, alpha - i);
        if (xi == 0.0) continue;
        for (int j = 0; j <= beta; ++j) {
            const double yj = binomial(beta, j).to_double() * std::pow(y0, beta - j) * ipow(s, j);
            sum += xi * yj * ipow(h, i + j + 1) / (i + j + 1);
        }
    }
    return sum;
}

} // namespace

Bracket bracket(const FunctionSpec& f, const Rational& alpha, int beta) {
    if (alpha < Rational(0)) throw std::domain_error("bracket: alpha must be >= 0");
    if (beta < 0) throw std::domain_error("bracket: beta must be >= 0");
    const double a = f.a;
    const double da = alpha.to_double();

    Bracket b{alpha, beta, 0.0, Bracket::Method::analytic};

    // f-independent case
    if (beta == 0) {
        b.value = std::pow(a, da + 1.0) / (da + 1.0);
        return b;
    }

    switch (f.form) {
        case FunctionSpec::Form::identity:
            b.value = std::pow(a, da + beta + 1.0) / (da + beta + 1.0);
            return b;
        case FunctionSpec::Form::polynomial: {
            const auto expanded = poly_power(f.poly_coeffs, beta);
            double sum = 0.0;
            for (size_t d = 0; d < expanded.size(); ++d)
                sum += expanded[d] * power_integral(a, da, static_cast<long>(d));
            b.value = sum;
            return b;
        }
        case FunctionSpec::Form::cosine:
            if (alpha.is_integer()) {
                b.value = cosine_bracket_analytic(a, static_cast<int>(alpha.num()), beta);
                return b;
            }
            b.method = Bracket::Method::quadrature;
            b.value = integrate(
                [&](double x) { return std::pow(x, da) * ipow(std::cos(x), beta); }, 0.0, a);
            return b;
        case FunctionSpec::Form::sampled: {
            const Eigen::Index n = f.xs.size();
            double sum = 0.0;
            if (alpha.is_integer()) {
                const int ia = static_cast<int>(alpha.num());
                for (Eigen::Index i = 0; i + 1 < n; ++i) {
                    const double h = f.xs[i + 1] - f.xs[i];
                    const double s = (f.ys[i + 1] - f.ys[i]) / h;
                    sum += segment_integral_exact(f.xs[i], h, f.ys[i], s, ia, beta);
                }
                b.value = sum;
                return b;
            }
            b.method = Bracket::Method::quadrature;
            for (Eigen::Index i = 0; i + 1 < n; ++i)
                sum += integrate(
                    [&](double x) { return std::pow(x, da) * ipow(f(x), beta); },
                    f.xs[i], f.xs[i + 1]);
            b.value = sum;
            return b;
        }
    }
    throw std::logic_error("bracket: unknown function form");
}

Bracket bracket_discrete(const FunctionSpec& f, int alpha, int beta, long a) {
    if (alpha < 0 || beta < 0) throw std::domain_error("bracket_discrete: negative exponent");
    if (a < 1) throw std::domain_error("bracket_discrete: a must be a positive integer");
    double sum = 0.0;
    for (long x = 0; x <= a; ++x) {
        const double xa = (x == 0 && alpha == 0) ? 1.0 : ipow(static_cast<double>(x), alpha);
        sum += xa * ipow(f(static_cast<double>(x)), beta);
    }
    return Bracket{Rational(alpha), beta, sum, Bracket::Method::discrete_sum};
}

} // namespace walkextrap
