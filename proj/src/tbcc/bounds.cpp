#include "tbcc/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tbcc {

namespace {

// Adaptive Simpson with absolute tolerance on the scaled integrand.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

double qfunc(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2_v<double>); }

double union_bound(const WeightSpectrum& spectrum, double rate, double ebn0_db) {
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    double sum = 0.0;
    for (const auto& [w, a] : spectrum.counts) {
        if (a == 0) continue;
        sum += double(a) * qfunc(std::sqrt(2.0 * w * rate * ebn0));
    }
    return sum;
}

double solid_angle_fraction(int n, double theta) {
    if (n < 2) throw std::invalid_argument("dimension must be at least 2");
    if (theta <= 0) return 0.0;
    if (theta >= std::numbers::pi) return 1.0;
    if (theta > std::numbers::pi / 2) return 1.0 - solid_angle_fraction(n, std::numbers::pi - theta);
    // scaled integrand exp((n-2)(log sin(phi) - log sin(theta))) stays in (0,1]
    const double log_sin_theta = std::log(std::sin(theta));
    auto f = [n, log_sin_theta](double phi) {
        if (phi <= 0) return 0.0;
        return std::exp((n - 2) * (std::log(std::sin(phi)) - log_sin_theta));
    };
    const double integral = integrate(f, 0.0, theta, 1e-15);
    const double log_c = std::lgamma(n / 2.0) - 0.5 * std::log(std::numbers::pi) -
                         std::lgamma((n - 1) / 2.0);
    return std::exp(log_c + (n - 2) * log_sin_theta) * integral;
}

namespace {

// log of the inner radial integral: int_0^inf s^{n-1} exp(-(s-m)^2/2) ds
double log_radial_integral(int n, double m) {
    // integrand peak at the positive root of s^2 - m s - (n-1) = 0
    const double s_star = 0.5 * (m + std::sqrt(m * m + 4.0 * (n - 1)));
    auto h = [n, m](double s) { return (n - 1) * std::log(s) - 0.5 * (s - m) * (s - m); };
    const double h_star = h(s_star);
    const double sigma = 1.0 / std::sqrt((n - 1) / (s_star * s_star) + 1.0);
    const double lo = std::max(s_star - 14 * sigma, 1e-12), hi = s_star + 14 * sigma;
    auto f = [&h, h_star](double s) { return std::exp(h(s) - h_star); };
    return h_star + std::log(integrate(f, lo, hi, 1e-14));
}

}  // namespace

SplbResult sphere_packing_lower_bound(int n, int k, double ebn0_db) {
    if (n <= k || k < 1) throw std::invalid_argument("need n > k >= 1");
    const double target = std::pow(2.0, -double(k));

    // solve Omega_n(theta) = 2^-k: bisection bracket, then Newton polish
    // using the exact derivative C sin^{n-2}(theta)
    double lo = 1e-8, hi = std::numbers::pi / 2;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (solid_angle_fraction(n, mid) < target ? lo : hi) = mid;
    }
    double theta = 0.5 * (lo + hi);
    const double log_c = std::lgamma(n / 2.0) - 0.5 * std::log(std::numbers::pi) -
                         std::lgamma((n - 1) / 2.0);
    for (int it = 0; it < 8; ++it) {
        const double omega = solid_angle_fraction(n, theta);
        const double deriv = std::exp(log_c + (n - 2) * std::log(std::sin(theta)));
        const double step = (omega - target) / deriv;
        theta -= step;
        if (std::abs(step) < 1e-16 * theta) break;
    }

    SplbResult out;
    out.theta = theta;
    out.residual = std::abs(solid_angle_fraction(n, theta) - target) / target;

    // angle density of the received vector around the signal point,
    // amplitude A = sqrt(2 (k/n) Eb/N0) per dimension
    const double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    const double amp = std::sqrt(2.0 * (double(k) / n) * ebn0);
    const double log_norm = std::log(double(n - 1)) - 0.5 * std::log(std::numbers::pi) -
                            (n / 2.0) * std::log(2.0) - std::lgamma((n + 1) / 2.0);
    auto log_density = [n, amp, log_norm](double phi) {
        const double sin_phi = std::sin(phi);
        if (sin_phi <= 0) return -1e308;
        const double m = std::sqrt(double(n)) * amp * std::cos(phi);
        return log_norm + (n - 2) * std::log(sin_phi) - 0.5 * n * amp * amp * sin_phi * sin_phi +
               log_radial_integral(n, m);
    };

    // scale by the density's maximum over the integration range
    double peak = -1e308;
    const int samples = 512;
    for (int i = 0; i <= samples; ++i) {
        const double phi = theta + (std::numbers::pi - theta) * i / samples;
        peak = std::max(peak, log_density(phi));
    }
    auto f = [&log_density, peak](double phi) { return std::exp(log_density(phi) - peak); };
    const double integral = integrate(f, theta, std::numbers::pi, 1e-13);
    out.pw = std::exp(peak) * integral;
    return out;
}

double bound_crossing(const std::function<double(double)>& bound_at_db, double target_pw,
                      double lo_db, double hi_db) {
    if (!(lo_db < hi_db)) throw std::invalid_argument("empty search interval");
    double f_lo = bound_at_db(lo_db), f_hi = bound_at_db(hi_db);
    if (!(f_lo >= target_pw && target_pw >= f_hi))
        throw std::domain_error("target not bracketed by the bound over the interval");
    while (hi_db - lo_db > 0.005) {
        const double mid = 0.5 * (lo_db + hi_db);
        (bound_at_db(mid) >= target_pw ? lo_db : hi_db) = mid;
    }
    return 0.5 * (lo_db + hi_db);
}

}  // namespace tbcc
