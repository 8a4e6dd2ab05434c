#include "salemscope/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace salemscope {

double log_abs(const mpz_class& v) {
    if (v == 0) return -std::numeric_limits<double>::infinity();
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(std::abs(mant)) + static_cast<double>(exp2) * std::numbers::ln2;
}

namespace {

std::vector<double> double_coeffs(const IntPolynomial& p) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(v.get_d());
    return c;
}

std::complex<double> eval_poly(const std::vector<double>& c, std::complex<double> x) {
    std::complex<double> acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

double eval_poly_real(const std::vector<double>& c, double x) {
    double acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

double eval_deriv_real(const std::vector<double>& c, double x) {
    double acc = 0;
    for (size_t i = c.size(); i-- > 1;) acc = acc * x + c[i] * static_cast<double>(i);
    return acc;
}

}  // namespace

std::vector<std::complex<double>> find_roots(const IntPolynomial& p) {
    const int d = p.degree();
    if (d <= 0) return {};
    std::vector<double> c = double_coeffs(p);
    const double lead = c.back();
    for (auto& v : c) v /= lead;

    double max_abs = 0;
    for (int k = 0; k < d; ++k) max_abs = std::max(max_abs, std::abs(c[static_cast<size_t>(k)]));
    const double radius = 1.0 + max_abs;

    std::vector<std::complex<double>> z(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / d + 0.5;
        z[static_cast<size_t>(k)] = std::polar(radius, angle);
    }

    bool converged = false;
    for (int iter = 0; iter < 2000 && !converged; ++iter) {
        double max_step = 0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> num = eval_poly(c, z[static_cast<size_t>(i)]);
            std::complex<double> den = 1;
            for (int j = 0; j < d; ++j)
                if (j != i) den *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            if (den == std::complex<double>(0)) {
                den = 1e-300;
            }
            std::complex<double> delta = num / den;
            z[static_cast<size_t>(i)] -= delta;
            max_step = std::max(max_step,
                                std::abs(delta) / (1.0 + std::abs(z[static_cast<size_t>(i)])));
        }
        converged = max_step < 1e-14;
    }
    if (!converged) return {};
    return z;
}

double tau_estimate(const IntPolynomial& p) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (p.degree() < 1 || !p.monic()) return nan;
    std::vector<double> c = double_coeffs(p);

    double max_abs = 0;
    for (size_t k = 0; k + 1 < c.size(); ++k) max_abs = std::max(max_abs, std::abs(c[k]));
    double hi = 1.0 + max_abs;  // Cauchy: all roots have modulus < hi
    double lo = 1.0;

    if (eval_poly_real(c, lo) < 0.0) {
        // A sign change on [1, hi] brackets the largest real root (p is monic,
        // so p(hi) > 0); Newton from the right with bisection safeguard.
        double x = hi;
        for (int iter = 0; iter < 200; ++iter) {
            double fx = eval_poly_real(c, x);
            if (fx > 0)
                hi = x;
            else if (fx < 0)
                lo = x;
            else
                return x;
            double dfx = eval_deriv_real(c, x);
            double next = (dfx != 0.0) ? x - fx / dfx : 0.5 * (lo + hi);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (std::abs(next - x) < 1e-15 * std::max(1.0, std::abs(x))) return next;
            x = next;
        }
        return x;
    }

    // No sign change at 1: fall back to the float roots.
    double best = nan;
    for (const auto& root : find_roots(p)) {
        if (std::abs(root.imag()) > 1e-9 * (1.0 + std::abs(root))) continue;
        double r = root.real();
        if (r > 1.0 && (!(best == best) || r > best)) best = r;
    }
    if (best == best) {
        // Polish with plain Newton.
        double x = best;
        for (int iter = 0; iter < 60; ++iter) {
            double fx = eval_poly_real(c, x);
            double dfx = eval_deriv_real(c, x);
            if (dfx == 0.0) break;
            double next = x - fx / dfx;
            if (std::abs(next - x) < 1e-15 * std::max(1.0, std::abs(x))) break;
            x = next;
        }
        if (x > 1.0) return x;
    }
    return best;
}

}  // namespace salemscope
