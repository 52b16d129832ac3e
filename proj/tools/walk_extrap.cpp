// Command-line front end: fit the drift parameter of a walk measure to a
// function graph on [0,a] and report the linear extrapolations at b.
//
//   walk-extrap --walk rw --n 2 --a 3.14159 --b 4 --function builtin:cos
//   walk-extrap --walk dtrw-z --n 2 --a 10 --b 12 --function csv:samples.csv

#include "walkextrap/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"drift-parameter fitting and linear extrapolation for walk measures"};
    app.get_formatter()->column_width(34);

    walkextrap::RunConfig cfg;
    double a_flag = 0.0, r_flag = 0.0;

    app.add_option("--walk", cfg.walk, "walk family: ctqw|dtqw|rw|ctrw-z|dtrw-z")
        ->required();
    app.add_option("--n", cfg.n, "moment order (positive even integer)")->required();
    auto* a_opt = app.add_option("--a", a_flag, "right endpoint of the fitted window [0,a]");
    app.add_option("--b", cfg.b, "extrapolation location (b > a)")->required();
    auto* r_opt = app.add_option("--r", r_flag, "dtqw coin parameter in (0,1), default 1/sqrt(2)");
    app.add_option("--function", cfg.function, "builtin:identity|builtin:cos|csv:<path>")
        ->required();
    app.add_option("--format", cfg.format, "report format: json|csv|text");
    app.add_option("--emit-v-curve", cfg.emit_v_curve, "sample V(p) at this many p values");
    app.add_option("--out", cfg.out, "write the report to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : walkextrap::kExitInvalidConfig;
    }

    if (*a_opt) cfg.a = a_flag;
    if (*r_opt) cfg.r = r_flag;

    return walkextrap::run(cfg, std::cout, std::cerr);
}
