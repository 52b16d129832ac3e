#include "walkextrap/oracle.hpp"

#include "walkextrap/quadrature.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>

namespace walkextrap {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kHalfPi = kPi / 2.0;
constexpr double kGaussCut = 40.0; // integration half-width in standard units

// integral over the measure of g(y), with the singularity-removing
// substitutions per family
template <class G>
double measure_integral(const WalkKind& walk, double x, double p, const G& g,
                        const QuadratureOptions& opt) {
    const double c = (1.0 - 2.0 * p) * x;
    switch (walk.family) {
        case WalkFamily::ctqw:
            // y = c + x sin t, arcsine weight becomes flat
            return integrate([&](double t) { return g(c + x * std::sin(t)) / kPi; },
                             -kHalfPi, kHalfPi, opt);
        case WalkFamily::dtqw: {
            const double r = walk.r;
            const double norm = std::sqrt(1.0 - r * r) / kPi;
            // y = c + x r sin t removes the edge singularity; the (1-u^2)
            // factor stays smooth since r < 1
            return integrate(
                [&](double t) {
                    const double s = r * std::sin(t);
                    return g(c + x * s) * norm / (1.0 - s * s);
                },
                -kHalfPi, kHalfPi, opt);
        }
        case WalkFamily::rw: {
            const double sd = std::sqrt(x);
            const double znorm = 1.0 / std::sqrt(2.0 * kPi);
            return integrate(
                [&](double u) { return g(c + sd * u) * znorm * std::exp(-0.5 * u * u); },
                -kGaussCut, kGaussCut, opt);
        }
        default:
            throw std::invalid_argument("measure_integral: continuous families only");
    }
}

// sum of g(y) mu_x(y,p) over the lattice, truncated where the tails die
template <class G>
double lattice_integral(const WalkKind& walk, double x, double p, const G& g) {
    if (walk.family == WalkFamily::dtrw_z) {
        const long t = std::lround(x);
        double sum = 0.0;
        for (long y = -t; y <= t; y += 2)
            sum += g(static_cast<double>(y)) * density(walk, x, p, static_cast<double>(y));
        return sum;
    }
    const long center = std::lround((1.0 - 2.0 * p) * x);
    auto term = [&](long y) {
        return g(static_cast<double>(y)) * density(walk, x, p, static_cast<double>(y));
    };
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
    throw std::runtime_error("lattice_integral: series did not terminate");
}

double ipow(double base, int e) {
    double acc = 1.0, b = base;
    for (; e > 0; e >>= 1, b *= b)
        if (e & 1) acc *= b;
    return acc;
}

} // namespace

double quad_moment(const WalkKind& walk, int k, double x, double p, double rel_tol) {
    if (!(x > 0.0)) throw std::domain_error("quad_moment: x must be positive");
    if (k < 0) throw std::domain_error("quad_moment: k must be >= 0");
    auto g = [k](double y) { return ipow(y, k); };
    if (is_lattice(walk)) return lattice_integral(walk, x, p, g);
    QuadratureOptions opt;
    opt.rel_tol = rel_tol;
    opt.abs_floor = 1e-13 * std::max(1.0, std::pow(std::abs(x) + std::abs(x * (1 - 2 * p)), k));
    return measure_integral(walk, x, p, g, opt);
}

double quad_v(const EvalSpec& spec, double p, double rel_tol) {
    if (spec.n <= 0 || spec.n % 2 != 0)
        throw std::invalid_argument("quad_v: n must be a positive even integer");
    if (spec.walk.family == WalkFamily::dtrw_z)
        throw std::invalid_argument(
            "quad_v: the dtrw-z model sums over integer x; use discrete_v");
    const int n = spec.n;
    const auto& f = spec.f;

    QuadratureOptions inner;
    inner.rel_tol = rel_tol / 50.0;
    inner.abs_floor = 1e-14;

    auto deviation_moment = [&](double x) {
        const double fx = f(x);
        auto g = [&](double y) { return ipow(y - fx, n); };
        if (is_lattice(spec.walk)) return lattice_integral(spec.walk, x, p, g);
        return measure_integral(spec.walk, x, p, g, inner);
    };

    QuadratureOptions outer;
    outer.rel_tol = rel_tol / 5.0;
    outer.abs_floor = 1e-13;
    return integrate(deviation_moment, 0.0, spec.a(), outer);
}

DistributionOnZ simulate_dtrw(long t, double p) {
    if (t < 1) throw std::domain_error("simulate_dtrw: t must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("simulate_dtrw: p must lie in [0,1]");
    const auto m = dtrw_step_masses<double>(t, p);
    DistributionOnZ dist;
    dist.support_offset = -t;
    dist.masses = Eigen::Map<const Eigen::VectorXd>(m.data(), static_cast<Eigen::Index>(m.size()));
    return dist;
}

DistributionOnZ simulate_hadamard_dtqw(long t) {
    if (t < 1) throw std::domain_error("simulate_hadamard_dtqw: t must be >= 1");
    if (t > 8000000)
        throw std::length_error("simulate_hadamard_dtqw: support 2t+1 exceeds the memory budget");
    using Cx = std::complex<double>;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Eigen::Index size = 2 * t + 1;

    // component L moves left, R moves right; symmetric initial coin state
    Eigen::VectorXcd L = Eigen::VectorXcd::Zero(size);
    Eigen::VectorXcd R = Eigen::VectorXcd::Zero(size);
    L[t] = Cx(inv_sqrt2, 0.0);
    R[t] = Cx(0.0, inv_sqrt2);

    Eigen::VectorXcd nL(size), nR(size);
    for (long s = 0; s < t; ++s) {
        nL.setZero();
        nR.setZero();
        // L'(y) = (L(y+1) + R(y+1))/sqrt2,  R'(y) = (L(y-1) - R(y-1))/sqrt2
        nL.head(size - 1) = inv_sqrt2 * (L.tail(size - 1) + R.tail(size - 1));
        nR.tail(size - 1) = inv_sqrt2 * (L.head(size - 1) - R.head(size - 1));
        L.swap(nL);
        R.swap(nR);
    }

    DistributionOnZ dist;
    dist.support_offset = -t;
    dist.masses = L.cwiseAbs2() + R.cwiseAbs2();
    return dist;
}

double discrete_v(const FunctionSpec& f, long a, double p) {
    if (a < 0) throw std::domain_error("discrete_v: a must be >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("discrete_v: p must lie in [0,1]");
    const double q = 1.0 - p;
    std::vector<double> m{1.0}; // time-0 distribution: unit mass at the origin
    double total = 0.0;
    for (long x = 0; x <= a; ++x) {
        const double fx = f(static_cast<double>(x));
        for (size_t i = 0; i < m.size(); ++i) {
            const double y = static_cast<double>(-x + static_cast<long>(i));
            const double d = y - fx;
            total += m[i] * d * d;
        }
        if (x == a) break;
        std::vector<double> next(m.size() + 2, 0.0);
        for (size_t i = 0; i < m.size(); ++i) {
            next[i] += p * m[i];
            next[i + 2] += q * m[i];
        }
        m = std::move(next);
    }
    return total;
}

double ctrw_master_equation_residual(double x, double p, long y_min, long y_max) {
    const WalkKind walk = WalkKind::ctrw_z();
    const double h = 1e-5;
    if (!(x > h)) throw std::domain_error("ctrw_master_equation_residual: x too small");
    double worst = 0.0;
    for (long y = y_min; y <= y_max; ++y) {
        const double dy = static_cast<double>(y);
        const double ddx =
            (density(walk, x + h, p, dy) - density(walk, x - h, p, dy)) / (2.0 * h);
        const double rhs = p * density(walk, x, p, dy + 1.0) +
                           (1.0 - p) * density(walk, x, p, dy - 1.0) -
                           density(walk, x, p, dy);
        worst = std::max(worst, std::abs(ddx - rhs));
    }
    return worst;
}

double ks_statistic(const DistributionOnZ& dist, double scale,
                    const std::function<double(double)>& target_cdf) {
    double cum = 0.0, worst = 0.0;
    for (Eigen::Index i = 0; i < dist.masses.size(); ++i) {
        if (dist.masses[i] == 0.0) continue;
        const double y = static_cast<double>(dist.support_offset + i);
        const double target = target_cdf(y / scale);
        worst = std::max(worst, std::abs(cum - target)); // left limit
        cum += dist.masses[i];
        worst = std::max(worst, std::abs(cum - target)); // right value
    }
    return worst;
}

KSReport ks_against_gaussian(const DistributionOnZ& dist, double scale) {
    return {ks_statistic(dist, scale, [](double u) { return gaussian_cdf(u); }), scale,
            KSReport::Target::gaussian, 0.0};
}

KSReport ks_against_konno(const DistributionOnZ& dist, double scale, double r) {
    return {ks_statistic(dist, scale, [r](double u) { return konno_cdf(u, r); }), scale,
            KSReport::Target::konno, r};
}

double gaussian_cdf(double u) { return 0.5 * std::erfc(-u / std::sqrt(2.0)); }

double arcsine_cdf(double u) {
    if (u <= -1.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return 0.5 + std::asin(u) / kPi;
}

double konno_cdf(double u, double r) {
    if (u <= -r) return 0.0;
    if (u >= r) return 1.0;
    return 0.5 + std::atan(u * std::sqrt(1.0 - r * r) / std::sqrt(r * r - u * u)) / kPi;
}

void write_distribution_csv(const DistributionOnZ& dist, std::ostream& os) {
    os << "position,mass\n";
    char buf[64];
    for (Eigen::Index i = 0; i < dist.masses.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", dist.masses[i]);
        os << dist.support_offset + i << ',' << buf << '\n';
    }
}

GridMinimum grid_minimize_p(const WPolynomial& v, double p_lo, double p_hi, int samples) {
    if (samples < 3) throw std::invalid_argument("grid_minimize_p: need at least 3 samples");
    const double step = (p_hi - p_lo) / static_cast<double>(samples - 1);
    double best_p = p_lo, best_v = eval_p(v, p_lo);
    int best_i = 0;
    for (int i = 1; i < samples; ++i) {
        const double p = p_lo + step * i;
        const double value = eval_p(v, p);
        if (value < best_v) {
            best_v = value;
            best_p = p;
            best_i = i;
        }
    }
    // parabolic refinement through the winning sample and its neighbors
    if (best_i > 0 && best_i < samples - 1) {
        const double vm = eval_p(v, best_p - step);
        const double vp = eval_p(v, best_p + step);
        const double denom = vm - 2.0 * best_v + vp;
        if (denom > 0.0) {
            const double shift = 0.5 * (vm - vp) / denom * step;
            const double cand_p = best_p + shift;
            const double cand_v = eval_p(v, cand_p);
            if (cand_v <= best_v) return {cand_p, cand_v};
        }
    }
    return {best_p, best_v};
}

} // namespace walkextrap
