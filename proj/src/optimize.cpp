#include "walkextrap/optimize.hpp"

#include "walkextrap/brackets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace walkextrap {

namespace {

using Eigen::VectorXd;

double poly_eval(const VectorXd& c, double x) {
    double v = 0.0;
    for (Eigen::Index i = c.size() - 1; i >= 0; --i) v = v * x + c[i];
    return v;
}

VectorXd poly_derivative(const VectorXd& c) {
    if (c.size() <= 1) return VectorXd::Zero(1);
    VectorXd d(c.size() - 1);
    for (Eigen::Index i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
    return d;
}

// strip numerically-dead leading coefficients
VectorXd trim(const VectorXd& c, double rel = 1e-300) {
    const double scale = c.size() ? c.cwiseAbs().maxCoeff() : 0.0;
    Eigen::Index deg = -1;
    for (Eigen::Index i = 0; i < c.size(); ++i)
        if (std::abs(c[i]) > rel * scale) deg = i;
    if (deg < 0) return VectorXd::Zero(1);
    return c.head(deg + 1);
}

// remainder of a / b (degrees of a >= b >= 0, b nonzero)
VectorXd poly_remainder(VectorXd a, const VectorXd& b) {
    const Eigen::Index db = b.size() - 1;
    const double lead = b[db];
    while (a.size() - 1 >= db && a.size() > 1) {
        const Eigen::Index da = a.size() - 1;
        const double factor = a[da] / lead;
        for (Eigen::Index i = 0; i <= db; ++i) a[da - db + i] -= factor * b[i];
        a.conservativeResize(da); // the leading term cancelled by construction
    }
    return a;
}

std::vector<VectorXd> sturm_chain(const VectorXd& q) {
    std::vector<VectorXd> chain;
    VectorXd s0 = trim(q);
    if (s0.size() <= 1) return chain;
    s0 /= s0.cwiseAbs().maxCoeff();
    chain.push_back(s0);
    VectorXd s1 = trim(poly_derivative(s0));
    s1 /= s1.cwiseAbs().maxCoeff();
    chain.push_back(s1);
    while (chain.back().size() > 1) {
        const VectorXd& prev = chain[chain.size() - 2];
        const VectorXd& last = chain.back();
        VectorXd r = poly_remainder(prev, last);
        const double norm = r.cwiseAbs().maxCoeff();
        if (norm < 1e-13) break; // common factor reached (within noise)
        r = trim(-r, 1e-13);
        r /= r.cwiseAbs().maxCoeff();
        chain.push_back(r);
    }
    return chain;
}

int sign_changes(const std::vector<VectorXd>& chain, double x) {
    int changes = 0, prev = 0;
    for (const auto& s : chain) {
        const double v = poly_eval(s, x);
        const int sgn = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (sgn == 0) continue;
        if (prev != 0 && sgn != prev) ++changes;
        prev = sgn;
    }
    return changes;
}

// roots in the half-open interval (lo, hi]
int root_count(const std::vector<VectorXd>& chain, double lo, double hi) {
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

// safeguarded Newton inside a bracketing interval with a single sign change
double polish_root(const VectorXd& q, const VectorXd& dq, double lo, double hi) {
    double flo = poly_eval(q, lo);
    double fhi = poly_eval(q, hi);
    const double scale = q.cwiseAbs().sum();
    const double target = 1e-12 * std::max(scale, 1e-300);
    if (fhi == 0.0) return hi;
    // the interval is open on the left: a root sitting exactly on lo belongs
    // to the neighbor, so step inside before bracketing
    double nudge = (hi - lo) * 1e-15;
    while (flo == 0.0 && lo + nudge < hi) {
        lo += nudge;
        nudge *= 2.0;
        flo = poly_eval(q, lo);
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon(); ++it) {
        const double fx = poly_eval(q, x);
        if (std::abs(fx) <= target) return x;
        if ((fx > 0.0) == (fhi > 0.0)) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        const double dfx = poly_eval(dq, x);
        double next = dfx != 0.0 ? x - fx / dfx : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        x = next;
    }
    return x;
}

} // namespace

namespace detail {

std::vector<double> real_roots_in_interval(const VectorXd& coeffs, double lo, double hi) {
    const VectorXd q = trim(coeffs, 1e-14);
    if (q.size() <= 1) return {};
    const auto chain = sturm_chain(q);
    if (chain.empty()) return {};
    const VectorXd dq = poly_derivative(q);

    std::vector<double> roots;
    struct Interval {
        double lo, hi;
        int count;
    };
    std::vector<Interval> stack{{lo, hi, root_count(chain, lo, hi)}};
    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();
        if (iv.count <= 0) continue;
        if (iv.count == 1 || iv.hi - iv.lo < 1e-13) {
            // bracketed single root (or an unresolvable cluster: collapse it)
            const double flo = poly_eval(q, iv.lo);
            const double fhi = poly_eval(q, iv.hi);
            if ((flo > 0.0) != (fhi > 0.0) || fhi == 0.0)
                roots.push_back(polish_root(q, dq, iv.lo, iv.hi));
            else if (iv.hi - iv.lo < 1e-13)
                roots.push_back(0.5 * (iv.lo + iv.hi));
            else {
                // even-multiplicity root: locate by bisection on the derivative
                const auto sub = real_roots_in_interval(dq, iv.lo, iv.hi);
                for (double s : sub)
                    if (std::abs(poly_eval(q, s)) <= 1e-10 * std::max(1.0, q.cwiseAbs().sum()))
                        roots.push_back(s);
            }
            continue;
        }
        const double mid = 0.5 * (iv.lo + iv.hi);
        const int left = root_count(chain, iv.lo, mid);
        stack.push_back({iv.lo, mid, left});
        stack.push_back({mid, iv.hi, iv.count - left});
    }
    std::sort(roots.begin(), roots.end());
    const double span = hi - lo;
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [span](double a, double b) { return b - a < 1e-12 * span; }),
                roots.end());
    return roots;
}

} // namespace detail

double minimize_closed_form_n2(const EvalSpec& spec) {
    if (spec.n != 2) throw std::invalid_argument("minimize_closed_form_n2: requires n = 2");
    if (spec.walk.family == WalkFamily::dtrw_z)
        throw std::invalid_argument(
            "minimize_closed_form_n2: use minimize_closed_form_n2_discrete for dtrw-z");
    const double xf = bracket(spec.f, Rational(1), 1).value;
    const double a = spec.a();
    return 0.5 - 1.5 * xf / (a * a * a);
}

double minimize_closed_form_n2_discrete(const FunctionSpec& f, long a) {
    if (a < 2) throw std::invalid_argument("minimize_closed_form_n2_discrete: a must be >= 2");
    const double xf = bracket_discrete(f, 1, 1, a).value;
    const double da = static_cast<double>(a);
    return 0.5 - 1.5 * xf / ((da - 1.0) * da * (da + 1.0));
}

std::vector<double> find_local_minima(const WPolynomial& v) {
    if (v.coeffs.size() < 3) return {};
    const VectorXd dv = poly_derivative(v.coeffs);
    const VectorXd d2v = poly_derivative(dv);

    // curvature must clear a strict threshold: d2V/dp2 = 4 d2V/dw2 > tol
    const double curvature_tol = 1e-9 * std::max(1.0, v.coeffs.cwiseAbs().sum());
    // stay strictly inside (0,1); roots this close to the edge belong to it
    constexpr double edge = 1e-9;

    std::vector<double> minima;
    for (double w : detail::real_roots_in_interval(dv, -1.0, 1.0)) {
        const double p = DriftParam::from_w(w).p;
        if (!(p > edge && p < 1.0 - edge)) continue;
        if (4.0 * poly_eval(d2v, w) > curvature_tol) minima.push_back(p);
    }
    std::sort(minima.begin(), minima.end());
    return minima;
}

MinimaReport argmin_from_polynomial(const WPolynomial& v) {
    MinimaReport report;
    report.local_minima = find_local_minima(v);

    std::vector<double> candidates{0.0, 1.0};
    candidates.insert(candidates.end(), report.local_minima.begin(), report.local_minima.end());

    double vmin = std::numeric_limits<double>::infinity();
    for (double p : candidates) {
        const double value = eval_p(v, p);
        report.v_at_candidates.emplace_back(p, value);
        vmin = std::min(vmin, value);
    }

    const double tie_tol = 1e-10 * (1.0 + std::abs(vmin));
    std::vector<double> tied;
    for (const auto& [p, value] : report.v_at_candidates)
        if (value <= vmin + tie_tol) tied.push_back(p);

    report.unique = tied.size() == 1;
    report.p_star = 0.0;
    for (double p : tied) report.p_star += p;
    report.p_star /= static_cast<double>(tied.size());

    if (v.degree() == 4)
        report.discriminant =
            9.0 * v.coeff(3) * v.coeff(3) - 24.0 * v.coeff(2) * v.coeff(4);
    return report;
}

MinimaReport argmin_p(const EvalSpec& spec) {
    return argmin_from_polynomial(build_v(spec));
}

} // namespace walkextrap
