#include "walkextrap/evaluation.hpp"

#include "walkextrap/measures.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>

namespace walkextrap {

namespace {

void require_even_order(int n) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("build_v: n must be a positive even integer");
    if (n > 16) throw std::invalid_argument("build_v: n exceeds the coefficient table limit (16)");
}

long require_lattice_endpoint(double a) {
    const long la = std::lround(a);
    if (static_cast<double>(la) != a || la < 2)
        throw std::invalid_argument("build_v: dtrw-z requires an integer endpoint a >= 2");
    return la;
}

// brackets repeat across the (k,l) double loop; cache by (alpha, beta)
class BracketCache {
  public:
    explicit BracketCache(const FunctionSpec& f) : f_(f) {}

    double value(const Rational& alpha, int beta) {
        const Key key{alpha.num(), alpha.den(), beta};
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, bracket(f_, alpha, beta)).first;
        return it->second.value;
    }

    std::vector<Bracket> all() const {
        std::vector<Bracket> out;
        out.reserve(cache_.size());
        for (const auto& [key, b] : cache_) out.push_back(b);
        return out;
    }

  private:
    using Key = std::tuple<std::int64_t, std::int64_t, int>;
    const FunctionSpec& f_;
    std::map<Key, Bracket> cache_;
};

WPolynomial assemble_continuous(const WalkKind& walk, int n, BracketCache& cache) {
    WPolynomial v = WPolynomial::zero(n);
    for (int k = 0; k <= n; ++k) {
        const Rational sign((n - k) % 2 == 0 ? 1 : -1);
        const Rational cnk = binomial(n, k);
        const MomentCoefficients mc = moment_coefficients(walk, k);
        for (const MomentTerm& t : mc.terms) {
            const Rational comb = sign * cnk * t.comb;
            v.coeffs[t.w_exp] += comb.to_double() * t.walk_factor * cache.value(t.x_exp, n - k);
        }
    }
    // the w^n coefficient is <x^n> = a^(n+1)/(n+1) > 0, so V can never
    // degenerate to a flat polynomial
    if (!(v.coeffs[n] > 0.0))
        throw std::logic_error("build_v: nonpositive leading coefficient");
    return v;
}

} // namespace

WPolynomial build_v(const EvalSpec& spec) {
    require_even_order(spec.n);
    switch (spec.walk.family) {
        case WalkFamily::ctqw:
        case WalkFamily::dtqw:
        case WalkFamily::rw: {
            BracketCache cache(spec.f);
            return assemble_continuous(spec.walk, spec.n, cache);
        }
        case WalkFamily::ctrw_z: {
            // M^(0..2) coincide with rw, so the n=2 polynomial is the same
            if (spec.n != 2)
                throw std::invalid_argument("build_v: ctrw-z is defined for n = 2 only");
            BracketCache cache(spec.f);
            return assemble_continuous(WalkKind::rw(), 2, cache);
        }
        case WalkFamily::dtrw_z: {
            if (spec.n != 2)
                throw std::invalid_argument("build_v: dtrw-z is defined for n = 2 only");
            return build_v_discrete_dtrw(spec.f, require_lattice_endpoint(spec.a()));
        }
    }
    throw std::logic_error("build_v: unknown walk family");
}

WPolynomial build_v_derivative(const EvalSpec& spec) {
    return derivative(build_v(spec));
}

WPolynomial build_v_discrete_dtrw(const FunctionSpec& f, long a) {
    if (a < 2) throw std::invalid_argument("build_v_discrete_dtrw: a must be >= 2");
    const double f2 = bracket_discrete(f, 0, 2, a).value;
    const double xf = bracket_discrete(f, 1, 1, a).value;
    const double da = static_cast<double>(a);
    WPolynomial v = WPolynomial::zero(2);
    v.coeffs[0] = f2 + da * (da + 1.0) / 2.0;
    v.coeffs[1] = -2.0 * xf;
    v.coeffs[2] = (da - 1.0) * da * (da + 1.0) / 3.0;
    return v;
}

std::vector<Bracket> collect_brackets(const EvalSpec& spec) {
    require_even_order(spec.n);
    if (spec.walk.family == WalkFamily::dtrw_z) {
        const long a = require_lattice_endpoint(spec.a());
        return {bracket_discrete(spec.f, 0, 2, a), bracket_discrete(spec.f, 1, 1, a)};
    }
    const WalkKind walk =
        spec.walk.family == WalkFamily::ctrw_z ? WalkKind::rw() : spec.walk;
    BracketCache cache(spec.f);
    assemble_continuous(walk, spec.n, cache);
    return cache.all();
}

} // namespace walkextrap
