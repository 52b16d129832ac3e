#pragma once

// Walk families and the drift parameter.
//
// Five measure families are supported: three continuous-space weak-limit
// measures (ctqw, dtqw with coin parameter r, rw) and two lattice measures
// (ctrw_z: continuous time on Z, dtrw_z: discrete time on Z).  The drift
// parameter p in [0,1] shifts every family's mean to (1-2p)x; w = 1-2p is
// the signed drift.

#include <cmath>
#include <stdexcept>
#include <string>

namespace walkextrap {

enum class WalkFamily { ctqw, dtqw, rw, ctrw_z, dtrw_z };

struct WalkKind {
    WalkFamily family = WalkFamily::ctqw;
    double r = 0.0; // coin parameter, dtqw only

    static WalkKind ctqw() { return {WalkFamily::ctqw, 0.0}; }
    static WalkKind dtqw(double r) {
        if (!(r > 0.0 && r < 1.0)) throw std::domain_error("dtqw: r must lie in (0,1)");
        return {WalkFamily::dtqw, r};
    }
    static WalkKind hadamard() { return dtqw(1.0 / std::sqrt(2.0)); }
    static WalkKind rw() { return {WalkFamily::rw, 0.0}; }
    static WalkKind ctrw_z() { return {WalkFamily::ctrw_z, 0.0}; }
    static WalkKind dtrw_z() { return {WalkFamily::dtrw_z, 0.0}; }
};

// Continuous-space families (weak-limit measures on R).
inline bool is_continuous(const WalkKind& w) {
    return w.family == WalkFamily::ctqw || w.family == WalkFamily::dtqw ||
           w.family == WalkFamily::rw;
}

// Lattice families (point masses on Z).
inline bool is_lattice(const WalkKind& w) { return !is_continuous(w); }

inline std::string walk_name(const WalkKind& w) {
    switch (w.family) {
        case WalkFamily::ctqw: return "ctqw";
        case WalkFamily::dtqw: return "dtqw";
        case WalkFamily::rw: return "rw";
        case WalkFamily::ctrw_z: return "ctrw-z";
        case WalkFamily::dtrw_z: return "dtrw-z";
    }
    return "?";
}

// Drift parameter with its two equivalent parameterizations, p and w = 1-2p.
// Both fields are stored: each conversion rounds once (exact for dyadic p),
// so downstream code never re-derives one representation from the other.
struct DriftParam {
    double p = 0.5;
    double w = 0.0;

    static DriftParam from_p(double p) { return {p, 1.0 - 2.0 * p}; }
    static DriftParam from_w(double w) { return {(1.0 - w) / 2.0, w}; }

    // Measure center c = (1-2p)x at location x.
    double c_at(double x) const { return w * x; }
};

} // namespace walkextrap
