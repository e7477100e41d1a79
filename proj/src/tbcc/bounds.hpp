#pragma once

// Analytical performance bounds on the AWGN channel with BPSK: the union
// bound over a weight spectrum, Shannon's sphere-packing lower bound for an
// (n,k) block code, and the helper that reads off where a bound crosses a
// target word-error level.

#include <functional>

#include "tbcc/spectrum.hpp"

namespace tbcc {

// Q(x) = P(N(0,1) > x), computed via erfc.
double qfunc(double x);

// sum_w A(w) * Q(sqrt(2 w rate Eb/N0)); an upper bound on ML word error.
double union_bound(const WeightSpectrum& spectrum, double rate, double ebn0_db);

struct SplbResult {
    double pw = 0;        // the lower bound on word error probability
    double theta = 0;     // cone half-angle solving the solid-angle equation
    double residual = 0;  // |Omega(theta) - 2^-k| / 2^-k after the solve
};

// Cone half-angle theta solves Omega_n(theta) = 2^-k, where Omega_n is the
// fractional solid angle of a cone in n dimensions; the bound is the
// probability that the noise tilts the signal by more than theta.
SplbResult sphere_packing_lower_bound(int n, int k, double ebn0_db);

// Fractional solid angle of a half-angle-theta cone (Omega_n(pi) = 1).
double solid_angle_fraction(int n, double theta);

// Eb/N0 (dB) where a monotone-decreasing bound crosses target_pw, bisected
// to 0.01 dB. Throws when [lo_db, hi_db] does not bracket the target.
double bound_crossing(const std::function<double(double)>& bound_at_db, double target_pw,
                      double lo_db, double hi_db);

}  // namespace tbcc
