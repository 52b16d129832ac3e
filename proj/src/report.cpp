#include "walkextrap/report.hpp"

#include "walkextrap/brackets.hpp"
#include "walkextrap/measures.hpp"
#include "walkextrap/optimize.hpp"
#include "walkextrap/quadrature.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace walkextrap {

namespace {

using nlohmann::json;

int log_level() {
    const char* env = std::getenv("WALK_EXTRAP_LOG");
    if (!env || !*env) return 0;
    return std::atoi(env);
}

// invalid-config failures (exit 2), as opposed to numeric ones (exit 3)
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

WalkKind parse_walk(const RunConfig& cfg) {
    const double r = cfg.r.value_or(1.0 / std::sqrt(2.0));
    if (cfg.walk == "ctqw") return WalkKind::ctqw();
    if (cfg.walk == "dtqw") {
        if (!(r > 0.0 && r < 1.0)) throw ConfigError("dtqw requires r in (0,1)");
        return WalkKind::dtqw(r);
    }
    if (cfg.walk == "rw") return WalkKind::rw();
    if (cfg.walk == "ctrw-z") return WalkKind::ctrw_z();
    if (cfg.walk == "dtrw-z") return WalkKind::dtrw_z();
    throw ConfigError("unknown walk '" + cfg.walk + "'");
}

FunctionSpec parse_function(const RunConfig& cfg) {
    const auto& s = cfg.function;
    if (s.rfind("builtin:", 0) == 0) {
        const std::string name = s.substr(8);
        if (!cfg.a) throw ConfigError("builtin functions require --a");
        if (name == "identity" || name == "x") return FunctionSpec::identity(*cfg.a);
        if (name == "cos" || name == "cosine") return FunctionSpec::cosine(*cfg.a);
        throw ConfigError("unknown builtin function '" + name + "'");
    }
    if (s.rfind("csv:", 0) == 0) {
        FunctionSpec f = load_function_csv(s.substr(4));
        if (cfg.a && std::abs(*cfg.a - f.a) > 1e-9 * std::max(1.0, f.a))
            throw ConfigError("--a disagrees with the csv table endpoint");
        return f;
    }
    throw ConfigError("function must be builtin:<name> or csv:<path>");
}

json bracket_json(const Bracket& b) {
    return json{{"alpha", b.alpha.to_double()},
                {"beta", b.beta},
                {"value", b.value},
                {"method", b.method_name()}};
}

json build_report(const RunConfig& cfg, std::ostream& err) {
    const int verbosity = log_level();
    auto note = [&](const char* stage) {
        if (verbosity >= 1) err << "walk-extrap: " << stage << "\n";
    };

    const WalkKind walk = parse_walk(cfg);
    const FunctionSpec f = parse_function(cfg);
    const double a = f.a;
    if (cfg.n <= 0 || cfg.n % 2 != 0) throw ConfigError("n must be a positive even integer");
    if (is_lattice(walk) && cfg.n != 2) throw ConfigError("lattice walks support n = 2 only");
    if (!(cfg.b > a)) throw ConfigError("b must exceed a");
    if (walk.family == WalkFamily::dtrw_z &&
        (std::lround(a) != a || std::lround(a) < 2))
        throw ConfigError("dtrw-z requires an integer a >= 2");

    const EvalSpec spec{walk, f, cfg.n};

    note("brackets");
    const auto brackets = collect_brackets(spec);
    note("build_v");
    const WPolynomial v = build_v(spec);
    note("argmin");
    const ExtrapolationResult ext = extrapolate(spec, cfg.b);
    const MinimaReport& minima = ext.minima;

    json j;
    j["schema"] = 1;
    j["config"] = {{"walk", cfg.walk}, {"n", cfg.n},     {"a", a},
                   {"b", cfg.b},       {"function", cfg.function}};
    if (walk.family == WalkFamily::dtqw) j["config"]["r"] = walk.r;
    j["model"] = {{"lattice", is_lattice(walk)},
                  {"family", walk_name(walk)},
                  {"function_form", f.form_name()}};

    j["brackets"] = json::array();
    for (const auto& b : brackets) j["brackets"].push_back(bracket_json(b));

    j["v_coeffs_w"] = std::vector<double>(v.coeffs.data(), v.coeffs.data() + v.coeffs.size());

    json cand = json::array();
    for (const auto& [p, value] : minima.v_at_candidates)
        cand.push_back(json{{"p", p}, {"v", value}});
    j["minima"] = {{"local_minima_p", minima.local_minima},
                   {"candidates", cand},
                   {"p_star", minima.p_star},
                   {"unique", minima.unique}};
    if (minima.discriminant)
        j["minima"]["discriminant"] = *minima.discriminant;

    if (cfg.n == 2) {
        const double closed = walk.family == WalkFamily::dtrw_z
                                  ? minimize_closed_form_n2_discrete(f, std::lround(a))
                                  : minimize_closed_form_n2(spec);
        j["minima"]["closed_form_p_unconstrained"] = closed;
    }

    j["extrapolation"] = {{"b", ext.b},
                          {"m", ext.m},
                          {"m_tilde", ext.m_tilde},
                          {"f_at_a", ext.f_at_a},
                          {"slope", 1.0 - 2.0 * ext.p_star}};

    // measure spread at the window edge; the lattice forms stay finite at
    // boundary p_star where the measures themselves are undefined
    double spread = 0.0;
    switch (walk.family) {
        case WalkFamily::ctrw_z: spread = a; break;
        case WalkFamily::dtrw_z: spread = 4.0 * ext.p_star * (1.0 - ext.p_star) * a; break;
        default: spread = variance(walk, a);
    }
    j["diagnostics"] = {{"variance_at_a", spread}};

    if (cfg.emit_v_curve > 0) {
        if (cfg.emit_v_curve < 2) throw ConfigError("--emit-v-curve needs at least 2 samples");
        json curve = json::array();
        for (int i = 0; i < cfg.emit_v_curve; ++i) {
            const double p = static_cast<double>(i) / (cfg.emit_v_curve - 1);
            curve.push_back(json::array({p, eval_p(v, p)}));
        }
        j["v_curve"] = curve;
    }
    return j;
}

void write_text(const json& j, std::ostream& os) {
    os << "walk:      " << j["model"]["family"].get<std::string>() << "\n";
    os << "function:  " << j["model"]["function_form"].get<std::string>()
       << " on [0, " << fmt_double(j["config"]["a"].get<double>()) << "]\n";
    os << "n:         " << j["config"]["n"].get<int>() << "\n";
    os << "V(w):     ";
    for (const auto& c : j["v_coeffs_w"]) os << ' ' << fmt_double(c.get<double>());
    os << "\n";
    os << "minima in (0,1):";
    if (j["minima"]["local_minima_p"].empty()) os << " none";
    for (const auto& p : j["minima"]["local_minima_p"]) os << ' ' << fmt_double(p.get<double>());
    os << "\n";
    for (const auto& c : j["minima"]["candidates"])
        os << "  V(p=" << fmt_double(c["p"].get<double>())
           << ") = " << fmt_double(c["v"].get<double>()) << "\n";
    os << "p_star:    " << fmt_double(j["minima"]["p_star"].get<double>())
       << (j["minima"]["unique"].get<bool>() ? "" : "  (tie, averaged)") << "\n";
    os << "m(b):      " << fmt_double(j["extrapolation"]["m"].get<double>()) << "\n";
    os << "m_tilde:   " << fmt_double(j["extrapolation"]["m_tilde"].get<double>()) << "\n";
    if (j.contains("v_curve")) {
        os << "v_curve:\n";
        for (const auto& row : j["v_curve"])
            os << "  " << fmt_double(row[0].get<double>()) << ' '
               << fmt_double(row[1].get<double>()) << "\n";
    }
}

void write_csv(const json& j, std::ostream& os) {
    os << "key,value\n";
    os << "schema," << j["schema"].get<int>() << "\n";
    os << "walk," << j["model"]["family"].get<std::string>() << "\n";
    os << "function," << j["config"]["function"].get<std::string>() << "\n";
    os << "n," << j["config"]["n"].get<int>() << "\n";
    os << "a," << fmt_double(j["config"]["a"].get<double>()) << "\n";
    os << "b," << fmt_double(j["config"]["b"].get<double>()) << "\n";
    const auto& coeffs = j["v_coeffs_w"];
    for (size_t i = 0; i < coeffs.size(); ++i)
        os << "v_coeff_w" << i << ',' << fmt_double(coeffs[i].get<double>()) << "\n";
    os << "p_star," << fmt_double(j["minima"]["p_star"].get<double>()) << "\n";
    os << "unique," << (j["minima"]["unique"].get<bool>() ? 1 : 0) << "\n";
    os << "m," << fmt_double(j["extrapolation"]["m"].get<double>()) << "\n";
    os << "m_tilde," << fmt_double(j["extrapolation"]["m_tilde"].get<double>()) << "\n";
    os << "f_at_a," << fmt_double(j["extrapolation"]["f_at_a"].get<double>()) << "\n";
    if (j.contains("v_curve")) {
        os << "curve_p,curve_v\n";
        for (const auto& row : j["v_curve"])
            os << fmt_double(row[0].get<double>()) << ',' << fmt_double(row[1].get<double>())
               << "\n";
    }
}

} // namespace

FunctionSpec load_function_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open function table '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty function table '" + path + "'");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,y") throw ConfigError("function table must start with header 'x,y'");
    std::vector<double> xs, ys;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        double x = 0, y = 0;
        char extra;
        std::istringstream row(line);
        char comma = 0;
        if (!(row >> x >> comma >> y) || comma != ',' || (row >> extra))
            throw ConfigError("bad row " + std::to_string(lineno) + " in '" + path + "'");
        xs.push_back(x);
        ys.push_back(y);
    }
    try {
        return FunctionSpec::sampled(
            Eigen::Map<Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size())),
            Eigen::Map<Eigen::VectorXd>(ys.data(), static_cast<Eigen::Index>(ys.size())));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(e.what()) + " ('" + path + "')");
    }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    json j;
    try {
        j = build_report(cfg, err);
    } catch (const ConfigError& e) {
        err << "walk-extrap: invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const std::invalid_argument& e) {
        err << "walk-extrap: invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const QuadratureError& e) {
        err << "walk-extrap: numeric failure in stage bracket/quadrature: " << e.what() << "\n";
        return kExitNumericFailure;
    } catch (const std::exception& e) {
        err << "walk-extrap: numeric failure: " << e.what() << "\n";
        return kExitNumericFailure;
    }

    std::ostringstream body;
    if (cfg.format == "json")
        body << j.dump(2) << "\n";
    else if (cfg.format == "text")
        write_text(j, body);
    else if (cfg.format == "csv")
        write_csv(j, body);
    else {
        err << "walk-extrap: invalid configuration: unknown format '" << cfg.format << "'\n";
        return kExitInvalidConfig;
    }

    if (cfg.out.empty()) {
        out << body.str();
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            err << "walk-extrap: cannot write '" << cfg.out << "'\n";
            return kExitInvalidConfig;
        }
        file << body.str();
    }
    return kExitOk;
}

} // namespace walkextrap
