#include <doctest.h>

#include "walkextrap/measures.hpp"
#include "walkextrap/oracle.hpp"
#include "walkextrap/quadrature.hpp"

#include <cmath>
#include <map>
#include <vector>

using namespace walkextrap;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// path-enumeration oracle for the discrete-time lattice walk: every length-t
// sign sequence, left steps weighted p
std::map<long, double> enumerate_dtrw(int t, double p) {
    std::map<long, double> dist;
    for (int mask = 0; mask < (1 << t); ++mask) {
        long y = 0;
        double prob = 1.0;
        for (int s = 0; s < t; ++s) {
            if (mask & (1 << s)) {
                y -= 1;
                prob *= p;
            } else {
                y += 1;
                prob *= 1.0 - p;
            }
        }
        dist[y] += prob;
    }
    return dist;
}

const std::vector<double> kXGrid{0.5, 1.0, 2.0, 5.0};
const std::vector<double> kPGrid{0.0, 0.25, 0.5, 0.75, 1.0};
const std::vector<double> kPGridOpen{0.25, 0.5, 0.75};

std::vector<WalkKind> continuous_walks() {
    return {WalkKind::ctqw(), WalkKind::hadamard(), WalkKind::dtqw(0.3), WalkKind::rw()};
}

} // namespace

TEST_CASE("density closed forms at reference points") {
    // standard normal at the center, c = 0
    CHECK(density(WalkKind::rw(), 1.0, 0.5, 0.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-14));
    // arcsine density at the center
    CHECK(density(WalkKind::ctqw(), 1.0, 0.5, 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
    // outside the Konno support (-r, r)
    CHECK(density(WalkKind::hadamard(), 1.0, 0.5, 0.9) == 0.0);
    CHECK(density(WalkKind::hadamard(), 1.0, 0.5, -0.9) == 0.0);
    // support endpoints carry no mass (open indicator)
    CHECK(density(WalkKind::ctqw(), 1.0, 0.5, 1.0) == 0.0);
}

TEST_CASE("lattice masses match the path-enumeration oracle") {
    for (double p : kPGridOpen) {
        for (int t : {1, 2, 3, 6}) {
            const auto oracle = enumerate_dtrw(t, p);
            for (long y = -t - 1; y <= t + 1; ++y) {
                const double expected = oracle.count(y) ? oracle.at(y) : 0.0;
                CHECK(density(WalkKind::dtrw_z(), t, p, static_cast<double>(y)) ==
                      doctest::Approx(expected).epsilon(1e-13));
            }
        }
    }
    // two-step walk, fair coin: 4 equally likely paths, two end at 0
    CHECK(density(WalkKind::dtrw_z(), 2.0, 0.5, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    // non-integer y carries no mass; odd x-y likewise
    CHECK(density(WalkKind::dtrw_z(), 2.0, 0.5, 0.25) == 0.0);
    CHECK(density(WalkKind::dtrw_z(), 2.0, 0.5, 1.0) == 0.0);
    CHECK(density(WalkKind::ctrw_z(), 1.5, 0.5, 0.25) == 0.0);
}

TEST_CASE("density integrates to the arcsine law between interior points") {
    // direct integral of the raw density against the closed-form CDF
    const double x = 2.0, p = 0.3;
    const double c = (1.0 - 2.0 * p) * x;
    auto cdf = [&](double y) { return arcsine_cdf((y - c) / x); };
    for (auto [y1, y2] : std::vector<std::pair<double, double>>{
             {c - 1.5, c + 0.4}, {c - 0.2, c + 1.9}, {c, c + 1.0}}) {
        const double mass =
            integrate([&](double y) { return density(WalkKind::ctqw(), x, p, y); }, y1, y2);
        CHECK(mass == doctest::Approx(cdf(y2) - cdf(y1)).epsilon(1e-10));
    }
}

TEST_CASE("density domain errors") {
    CHECK_THROWS_AS(density(WalkKind::ctqw(), 0.0, 0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(density(WalkKind::rw(), -1.0, 0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(WalkKind::dtqw(0.0), std::domain_error);
    CHECK_THROWS_AS(WalkKind::dtqw(1.0), std::domain_error);
    CHECK_THROWS_AS(WalkKind::dtqw(1.5), std::domain_error);
    CHECK_THROWS_AS(density(WalkKind::ctrw_z(), 1.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(density(WalkKind::dtrw_z(), 2.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(density(WalkKind::dtrw_z(), 2.5, 0.5, 0.0), std::domain_error);
}

TEST_CASE("normalization and mean constraint over the support") {
    for (const auto& walk : continuous_walks())
        for (double x : kXGrid)
            for (double p : kPGrid) {
                CHECK(quad_moment(walk, 0, x, p) == doctest::Approx(1.0).epsilon(1e-10));
                CHECK(std::abs(quad_moment(walk, 1, x, p) - (1.0 - 2.0 * p) * x) <=
                      1e-9 * std::max(1.0, std::abs((1.0 - 2.0 * p) * x)));
            }
    for (const auto& walk : {WalkKind::ctrw_z(), WalkKind::dtrw_z()})
        for (double x : {1.0, 2.0, 5.0})
            for (double p : kPGridOpen)
                CHECK(quad_moment(walk, 0, x, p) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("moment reference values") {
    CHECK(moment(WalkKind::ctqw(), 2, 1.0, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(moment(WalkKind::dtqw(r), 2, 1.0, 0.5) ==
          doctest::Approx(1.0 - std::sqrt(1.0 - r * r)).epsilon(1e-14));
    CHECK(moment(WalkKind::rw(), 2, 3.0, 0.0) == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(moment(WalkKind::dtrw_z(), 2, 4.0, 0.25) == doctest::Approx(7.0).epsilon(1e-14));
    // zeroth and first moments across all five families
    std::vector<WalkKind> all = continuous_walks();
    all.push_back(WalkKind::ctrw_z());
    all.push_back(WalkKind::dtrw_z());
    for (const auto& walk : all) {
        const bool lattice = is_lattice(walk);
        for (double x : {1.0, 2.0, 5.0})
            for (double p : lattice ? kPGridOpen : kPGrid) {
                CHECK(moment(walk, 0, x, p) == 1.0);
                CHECK(moment(walk, 1, x, p) ==
                      doctest::Approx((1.0 - 2.0 * p) * x).epsilon(1e-13));
            }
    }
}

TEST_CASE("moments agree with the quadrature/summation oracle up to k = 8") {
    std::vector<WalkKind> all = continuous_walks();
    all.push_back(WalkKind::ctrw_z());
    all.push_back(WalkKind::dtrw_z());
    for (const auto& walk : all) {
        const bool lattice = is_lattice(walk);
        for (int k = 0; k <= 8; ++k)
            for (double x : kXGrid) {
                if (walk.family == WalkFamily::dtrw_z && std::nearbyint(x) != x) continue;
                for (double p : lattice ? kPGridOpen : kPGrid) {
                    const double closed = moment(walk, k, x, p);
                    const double oracle = quad_moment(walk, k, x, p);
                    CHECK_MESSAGE(rel_close(closed, oracle, 1e-7),
                                  walk_name(walk) << " k=" << k << " x=" << x << " p=" << p
                                                  << " closed=" << closed
                                                  << " oracle=" << oracle);
                }
            }
    }
}

TEST_CASE("odd moments vanish at p = 1/2") {
    for (const auto& walk : continuous_walks())
        for (int k : {1, 3, 5, 7})
            for (double x : kXGrid) {
                CHECK(moment(walk, k, x, 0.5) == 0.0); // w = 0 kills every term
                CHECK(std::abs(quad_moment(walk, k, x, 0.5)) < 1e-8 * std::pow(x, k));
            }
}

TEST_CASE("moment coefficient expansions") {
    // k = 0: the single normalization term
    const auto mc0 = moment_coefficients(WalkKind::ctqw(), 0);
    REQUIRE(mc0.terms.size() == 1);
    CHECK(mc0.terms[0].comb == Rational(1));
    CHECK(mc0.terms[0].w_exp == 0);
    CHECK(mc0.terms[0].x_exp == Rational(0));

    // k = 1: the mean constraint, exactly one term w * x
    for (const auto& walk : continuous_walks()) {
        const auto mc1 = moment_coefficients(walk, 1);
        REQUIRE(mc1.terms.size() == 1);
        CHECK(mc1.terms[0].comb == Rational(1));
        CHECK(mc1.terms[0].walk_factor == 1.0);
        CHECK(mc1.terms[0].w_exp == 1);
        CHECK(mc1.terms[0].x_exp == Rational(1));
    }

    // ctqw k = 4: w^4 + 3 w^2 + 3/8, all on x^4
    const auto mc4 = moment_coefficients(WalkKind::ctqw(), 4);
    REQUIRE(mc4.terms.size() == 3);
    CHECK(mc4.terms[0].comb == Rational(1));    // w^4
    CHECK(mc4.terms[1].comb == Rational(3));    // w^2
    CHECK(mc4.terms[2].comb == Rational(3, 8)); // w^0
    for (const auto& t : mc4.terms) CHECK(t.x_exp == Rational(4));

    // dtqw k = 2: w^2 + (1 - sqrt(1-r^2))
    const double r = 0.6;
    const auto mcd = moment_coefficients(WalkKind::dtqw(r), 2);
    REQUIRE(mcd.terms.size() == 2);
    CHECK(mcd.terms[0].comb == Rational(1));
    CHECK(mcd.terms[0].walk_factor == 1.0); // A_r(0) = 1
    CHECK(mcd.terms[1].walk_factor ==
          doctest::Approx(1.0 - std::sqrt(1.0 - r * r)).epsilon(1e-15));

    // rw: x exponent drops by l/2
    const auto mcr = moment_coefficients(WalkKind::rw(), 4);
    REQUIRE(mcr.terms.size() == 3);
    CHECK(mcr.terms[1].x_exp == Rational(3));
    CHECK(mcr.terms[2].x_exp == Rational(2));
    CHECK(mcr.terms[2].comb == Rational(3)); // (4-1)!! Gaussian moment

    CHECK_THROWS_AS(moment_coefficients(WalkKind::dtrw_z(), 2), std::invalid_argument);
    CHECK_THROWS_AS(moment_coefficients(WalkKind::ctrw_z(), 2), std::invalid_argument);
}

TEST_CASE("Konno even-moment factor endpoints") {
    for (double r : {0.2, 1.0 / std::sqrt(2.0), 0.95}) {
        CHECK(detail::konno_even_moment(r, 0) == 1.0);
        CHECK(detail::konno_even_moment(r, 2) ==
              doctest::Approx(1.0 - std::sqrt(1.0 - r * r)).epsilon(1e-15));
    }
}

TEST_CASE("variance is p-free and matches the moment identity") {
    CHECK(variance(WalkKind::ctqw(), 2.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(variance(WalkKind::hadamard(), 1.0) ==
          doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(variance(WalkKind::rw(), 5.0) == doctest::Approx(5.0).epsilon(1e-15));
    for (const auto& walk : continuous_walks())
        for (double x : kXGrid)
            for (double p : {-0.5, 0.0, 0.3, 0.5, 1.0, 1.7}) {
                const double m1 = moment(walk, 1, x, p);
                const double m2 = moment(walk, 2, x, p);
                CHECK(rel_close(m2 - m1 * m1, variance(walk, x), 1e-12));
            }
    CHECK_THROWS_AS(variance(WalkKind::ctrw_z(), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(variance(WalkKind::dtrw_z(), 1.0), std::invalid_argument);
}

TEST_CASE("p beyond the unit interval is allowed for continuous walks only") {
    for (const auto& walk : continuous_walks()) {
        CHECK(moment(walk, 2, 1.0, -0.7) > 0.0);
        CHECK(moment(walk, 2, 1.0, 1.9) > 0.0);
    }
    CHECK_THROWS_AS(moment(WalkKind::ctrw_z(), 2, 1.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(moment(WalkKind::dtrw_z(), 2, 1.0, 1.1), std::domain_error);
}

TEST_CASE("lattice measure normalization identity validates the Bessel path") {
    for (double x : {0.5, 1.0, 2.0, 5.0, 11.0})
        for (double p : {0.1, 0.25, 0.5, 0.75, 0.9})
            CHECK(detail::lattice_moment_sum(WalkKind::ctrw_z(), 0, x, p) ==
                  doctest::Approx(1.0).epsilon(1e-12));
    // beyond the unscaled-Bessel range the mass evaluation refuses instead
    // of returning inf * 0
    CHECK_THROWS_AS(density(WalkKind::ctrw_z(), 800.0, 0.5, 0.0), std::domain_error);
    CHECK(density(WalkKind::ctrw_z(), 600.0, 0.5, 0.0) > 0.0);
}

TEST_CASE("higher lattice moments: closed recurrence vs direct summation") {
    // dtrw-z moments for k >= 3 come from the increment recurrence; the
    // summation over the (finite) support is an independent route
    for (long x : {1L, 2L, 5L, 9L})
        for (double p : kPGridOpen)
            for (int k : {3, 4, 5, 8}) {
                const double rec = moment(WalkKind::dtrw_z(), k, static_cast<double>(x), p);
                const double sum =
                    detail::lattice_moment_sum(WalkKind::dtrw_z(), k, static_cast<double>(x), p);
                CHECK(rel_close(rec, sum, 1e-12));
            }
    // ctrw-z k = 2 closed form vs the truncated series
    for (double x : {0.5, 2.0, 5.0})
        for (double p : kPGridOpen)
            CHECK(rel_close(moment(WalkKind::ctrw_z(), 2, x, p),
                            detail::lattice_moment_sum(WalkKind::ctrw_z(), 2, x, p), 1e-11));
}

TEST_CASE("ctrw-z series moments match the cumulant closed forms") {
    // the measure is the difference of independent Poisson counts with
    // means (1-p)x and px, so kappa_n = (1-p)x + (-1)^n px: kappa_1 = wx,
    // kappa_2 = x, kappa_3 = wx, kappa_4 = x.  Raw moments follow by the
    // standard cumulant expansion; the library's k >= 3 path (truncated
    // lattice summation) must reproduce them.
    for (double x : {0.5, 1.0, 3.0, 7.0})
        for (double p : kPGridOpen) {
            const double w = 1.0 - 2.0 * p;
            const double m3 = w * x + 3.0 * x * (w * x) + std::pow(w * x, 3);
            const double m4 = x + 4.0 * (w * x) * (w * x) + 3.0 * x * x +
                              6.0 * x * (w * x) * (w * x) + std::pow(w * x, 4);
            CHECK(rel_close(moment(WalkKind::ctrw_z(), 3, x, p), m3, 1e-10));
            CHECK(rel_close(moment(WalkKind::ctrw_z(), 4, x, p), m4, 1e-10));
        }
}
