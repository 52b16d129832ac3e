#include "walkextrap/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace walkextrap {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_integer_valued(double v) { return std::nearbyint(v) == v; }

void require_location(const WalkKind& walk, double x) {
    if (!(x > 0.0)) throw std::domain_error("measures: x must be positive");
    if (walk.family == WalkFamily::dtrw_z && !is_integer_valued(x))
        throw std::domain_error("measures: dtrw-z requires integer x");
}

void require_lattice_p(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("measures: lattice walks require p in (0,1)");
}

// mass of the continuous-time lattice walk at integer site y (Skellam form:
// independent Poisson((1-p)x) right steps and Poisson(px) left steps).
double ctrw_mass(double x, double p, long y) {
    const double z = 2.0 * std::sqrt(p * (1.0 - p)) * x;
    // the unscaled Bessel factor overflows near e^z ~ DBL_MAX even though
    // the mass itself is finite
    if (z > 650.0)
        throw std::domain_error("measures: ctrw-z point masses limited to 2 sqrt(p(1-p)) x <= 650");
    const double bessel = detail::modified_bessel_i(y, z);
    if (bessel == 0.0) return 0.0;
    return std::exp(-x) * std::pow((1.0 - p) / p, 0.5 * static_cast<double>(y)) * bessel;
}

// mass of the discrete-time lattice walk after x steps: (x-y)/2 left moves
// each with probability p.
double dtrw_mass(long x, double p, long y) {
    if (y < -x || y > x || ((x - y) & 1L)) return 0.0;
    const long k = (x - y) / 2;
    const double log_mass = std::lgamma(static_cast<double>(x) + 1.0) -
                            std::lgamma(static_cast<double>(k) + 1.0) -
                            std::lgamma(static_cast<double>(x - k) + 1.0) +
                            static_cast<double>(k) * std::log(p) +
                            static_cast<double>(x - k) * std::log1p(-p);
    return std::exp(log_mass);
}

} // namespace

double MomentCoefficients::evaluate(double x, double p) const {
    const double w = 1.0 - 2.0 * p;
    double sum = 0.0;
    for (const auto& t : terms)
        sum += t.comb.to_double() * t.walk_factor * std::pow(w, t.w_exp) *
               std::pow(x, t.x_exp.to_double());
    return sum;
}

double density(const WalkKind& walk, double x, double p, double y) {
    require_location(walk, x);
    const double c = (1.0 - 2.0 * p) * x;
    switch (walk.family) {
        case WalkFamily::ctqw: {
            const double u = (y - c) / x;
            if (!(std::abs(u) < 1.0)) return 0.0;
            return 1.0 / (kPi * x * std::sqrt(1.0 - u * u));
        }
        case WalkFamily::dtqw: {
            const double r = walk.r;
            const double u = (y - c) / x;
            if (!(std::abs(u) < r)) return 0.0;
            return std::sqrt(1.0 - r * r) /
                   (kPi * x * (1.0 - u * u) * std::sqrt(r * r - u * u));
        }
        case WalkFamily::rw: {
            const double d = y - c;
            return std::exp(-d * d / (2.0 * x)) / std::sqrt(2.0 * kPi * x);
        }
        case WalkFamily::ctrw_z: {
            require_lattice_p(p);
            if (!is_integer_valued(y)) return 0.0;
            return ctrw_mass(x, p, std::lround(y));
        }
        case WalkFamily::dtrw_z: {
            require_lattice_p(p);
            if (!is_integer_valued(y)) return 0.0;
            return dtrw_mass(std::lround(x), p, std::lround(y));
        }
    }
    return 0.0;
}

MomentCoefficients moment_coefficients(const WalkKind& walk, int k) {
    if (!is_continuous(walk))
        throw std::invalid_argument(
            "moment_coefficients: lattice walks serve their moments directly");
    if (k < 0) throw std::domain_error("moment_coefficients: k must be >= 0");
    if (k > 32) throw std::domain_error("moment_coefficients: k exceeds the exact table limit");

    MomentCoefficients mc{walk, k, {}};
    for (int l = 0; l <= k; l += 2) {
        MomentTerm t;
        t.w_exp = k - l;
        switch (walk.family) {
            case WalkFamily::ctqw:
                // arcsine even moment: C(l, l/2) / 2^l
                t.comb = binomial(k, l) * binomial(l, l / 2) * half_power(l);
                t.x_exp = Rational(k);
                break;
            case WalkFamily::dtqw:
                t.comb = binomial(k, l);
                t.walk_factor = detail::konno_even_moment(walk.r, l);
                t.x_exp = Rational(k);
                break;
            case WalkFamily::rw:
                // Gaussian even moment: (l-1)!!
                t.comb = binomial(k, l) * double_factorial_odd(l - 1);
                t.x_exp = Rational(k) - Rational(l, 2);
                break;
            default:
                break;
        }
        mc.terms.push_back(t);
    }
    return mc;
}

double moment(const WalkKind& walk, int k, double x, double p) {
    require_location(walk, x);
    if (k < 0) throw std::domain_error("moment: k must be >= 0");
    const double w = 1.0 - 2.0 * p;
    switch (walk.family) {
        case WalkFamily::ctqw:
        case WalkFamily::dtqw:
        case WalkFamily::rw:
            return moment_coefficients(walk, k).evaluate(x, p);
        case WalkFamily::ctrw_z: {
            require_lattice_p(p);
            if (k == 0) return 1.0;
            if (k == 1) return w * x;
            if (k == 2) return x + w * w * x * x;
            return detail::lattice_moment_sum(walk, k, x, p);
        }
        case WalkFamily::dtrw_z: {
            require_lattice_p(p);
            if (k == 0) return 1.0;
            if (k == 1) return w * x;
            if (k == 2) return 4.0 * p * (1.0 - p) * x + w * w * x * x;
            // moments of a sum of iid +-1 increments with E[inc^i] = 1 for
            // even i and w for odd i, built up one step at a time
            const long steps = std::lround(x);
            std::vector<double> m(static_cast<size_t>(k) + 1, 0.0), next(m);
            m[0] = 1.0;
            std::vector<std::vector<double>> choose(m.size(), std::vector<double>(m.size(), 0.0));
            for (size_t i = 0; i < m.size(); ++i) {
                choose[i][0] = 1.0;
                for (size_t j = 1; j <= i; ++j)
                    choose[i][j] = binomial(static_cast<int>(i), static_cast<int>(j)).to_double();
            }
            for (long s = 0; s < steps; ++s) {
                for (size_t i = 0; i < m.size(); ++i) {
                    double acc = 0.0;
                    for (size_t j = 0; j <= i; ++j)
                        acc += choose[i][j] * m[j] * ((i - j) % 2 == 0 ? 1.0 : w);
                    next[i] = acc;
                }
                m.swap(next);
            }
            return m[static_cast<size_t>(k)];
        }
    }
    return 0.0;
}

double variance(const WalkKind& walk, double x) {
    if (!(x > 0.0)) throw std::domain_error("variance: x must be positive");
    switch (walk.family) {
        case WalkFamily::ctqw: return x * x / 2.0;
        case WalkFamily::dtqw: return (1.0 - std::sqrt(1.0 - walk.r * walk.r)) * x * x;
        case WalkFamily::rw: return x;
        default:
            throw std::invalid_argument(
                "variance: lattice walk variances are p-dependent; use moment()");
    }
}

namespace detail {

double konno_even_moment(double r, int l) {
    if (l % 2 != 0) throw std::domain_error("konno_even_moment: l must be even");
    double s = 0.0;
    const double q = r * r / 4.0;
    for (int i = 0; i < l / 2; ++i)
        s += binomial(2 * i, i).to_double() * std::pow(q, i);
    return 1.0 - std::sqrt(1.0 - r * r) * s;
}

double modified_bessel_i(long n, double z) {
    return std::cyl_bessel_i(static_cast<double>(n < 0 ? -n : n), z);
}

double lattice_moment_sum(const WalkKind& walk, int k, double x, double p) {
    require_lattice_p(p);
    auto term = [&](long y) {
        const double mass = walk.family == WalkFamily::dtrw_z
                                ? dtrw_mass(std::lround(x), p, y)
                                : ctrw_mass(x, p, y);
        return mass * std::pow(static_cast<double>(y), k);
    };
    if (walk.family == WalkFamily::dtrw_z) {
        const long t = std::lround(x);
        double sum = 0.0;
        for (long y = -t; y <= t; y += 2) sum += term(y);
        return sum;
    }
    // ctrw_z: expand symmetrically about the mean until the tails are dead
    const long center = std::lround((1.0 - 2.0 * p) * x);
    double sum = term(center);
    int quiet = 0;
    for (long radius = 1; radius < 1000000; ++radius) {
        const double contrib = term(center - radius) + term(center + radius);
        sum += contrib;
        if (std::abs(contrib) < 1e-17 * (1.0 + std::abs(sum))) {
            if (++quiet >= 48) return sum;
        } else {
            quiet = 0;
        }
    }
    throw std::runtime_error("lattice_moment_sum: series did not terminate");
}

} // namespace detail

} // namespace walkextrap
