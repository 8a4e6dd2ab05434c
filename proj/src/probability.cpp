#include "salemscope/probability.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include "salemscope/powerpoly.hpp"
#include "salemscope/salem.hpp"

namespace salemscope {

std::string to_string(ProbMethod m) {
    switch (m) {
        case ProbMethod::ExactD4: return "ExactD4";
        case ProbMethod::IntegralD6: return "IntegralD6";
        case ProbMethod::Grid: return "Grid";
    }
    return "?";
}

ProbEstimate prob_d4() {
    ProbEstimate est;
    est.d = 4;
    est.method = ProbMethod::ExactD4;
    est.value = 1.0 / 3.0;
    est.error_estimate = 0;
    return est;
}

namespace {

double acos_clamped(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double fa, double b,
                        double fb, double m, double fm, double whole, double eps, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, flm, m, fm);
    const double right = simpson(m, fm, frm, b, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * eps, depth - 1) +
           adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * eps, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(a, fa, fm, b, fb);
    return adaptive_simpson(f, a, fa, b, fb, m, fm, whole, eps, 60);
}

}  // namespace

ProbEstimate prob_d6_integral(double abs_tol) {
    if (abs_tol < 1e-10) throw ToleranceTooTightError();
    const double pi = std::numbers::pi;

    const double a1 = std::acos(std::sqrt(30.0) / 6.0);
    const double junction = std::acos((std::sqrt(19.0) - 1.0) / 6.0);
    const double b2 = std::acos(std::sqrt(6.0) / 6.0);

    auto f1 = [pi](double t) {
        const double c = std::cos(t);
        return acos_clamped((-5.0 - 6.0 * c) / (6.0 + 6.0 * c)) - (pi - t);
    };
    auto f2 = [pi](double t) {
        const double c = std::cos(t);
        return acos_clamped((1.0 - 6.0 * c) / (6.0 - 6.0 * c)) - (pi - t);
    };

    // Split the requested tolerance on the final value across the two pieces.
    const double eps = abs_tol * pi * pi / 4.0 / 2.0;
    const double area = integrate(f1, a1, junction, eps) + integrate(f2, junction, b2, eps);

    ProbEstimate est;
    est.d = 6;
    est.method = ProbMethod::IntegralD6;
    est.value = 4.0 / (pi * pi) * area;
    est.error_estimate = abs_tol;
    return est;
}

namespace {

struct GridAxis {
    long first = 0;             // first node index on this axis
    std::vector<double> s;      // s = 2 cos(t_j) for j = first..first+s.size()-1
    std::vector<double> t;      // node values t_j, kept for CSV output
};

struct GridCounters {
    long long hits = 0;
    long long shell_hits = 0;
    std::string csv;
};

// Expands (x^2 - s x + 1) * in -> out, where in has length len.
inline void quad_multiply(const double* in, size_t len, double s, double* out) {
    out[0] = in[0];
    out[1] = in[1] - s * in[0];
    for (size_t i = 2; i < len; ++i) out[i] = in[i] - s * in[i - 1] + in[i - 2];
    out[len] = in[len - 1] * (-s) + in[len - 2];
    out[len + 1] = in[len - 1];
}

inline bool inequality_hit(const double* c, int d) {
    const double lhs = 2.0 * (d - 2) * std::abs(c[d - 1]);
    double sum = std::abs(c[0]) + std::abs(c[d]);
    for (int k = 2; k <= d - 2; ++k) sum += std::abs(c[k]);
    return lhs > static_cast<double>(d) * sum * (1.0 + 1e-9);
}

class GridScanner {
public:
    GridScanner(int d, const std::vector<GridAxis>& axes, double big_d, bool track_shell,
                bool want_csv)
        : d_(d),
          h_(static_cast<size_t>(axes.size())),
          axes_(axes),
          track_shell_(track_shell),
          want_csv_(want_csv) {
        buffers_.resize(h_ + 1);
        for (size_t i = 0; i <= h_; ++i) buffers_[i].assign(3 + 2 * i, 0.0);
        buffers_[0] = {1.0, -big_d, 1.0};
        idx_.assign(h_, 0);
    }

    // Scans outer-axis indices [from, to) of axis 0, recursing over the rest.
    GridCounters run(size_t from, size_t to) {
        counters_ = GridCounters{};
        descend(0, from, to, false);
        return std::move(counters_);
    }

private:
    void descend(size_t axis, size_t from, size_t to, bool edge_so_far) {
        const GridAxis& ax = axes_[axis];
        const size_t last = ax.s.size() - 1;
        if (axis + 1 == h_) {
            const std::vector<double>& in = buffers_[axis];
            double final_c[64];
            for (size_t j = from; j < to; ++j) {
                quad_multiply(in.data(), in.size(), ax.s[j], final_c);
                if (!inequality_hit(final_c, d_)) continue;
                ++counters_.hits;
                if (track_shell_ && (edge_so_far || j == 0 || j == last)) ++counters_.shell_hits;
                if (want_csv_) {
                    idx_[axis] = static_cast<long>(j);
                    append_csv_row();
                }
            }
            return;
        }
        for (size_t j = from; j < to; ++j) {
            quad_multiply(buffers_[axis].data(), buffers_[axis].size(), ax.s[j],
                          buffers_[axis + 1].data());
            idx_[axis] = static_cast<long>(j);
            descend(axis + 1, 0, axes_[axis + 1].s.size(),
                    edge_so_far || j == 0 || j == last);
        }
    }

    void append_csv_row() {
        std::ostringstream row;
        for (size_t i = 0; i < h_; ++i) {
            if (i) row << ',';
            row << axes_[i].t[static_cast<size_t>(idx_[i])];
        }
        row << '\n';
        counters_.csv += row.str();
    }

    int d_;
    size_t h_;
    const std::vector<GridAxis>& axes_;
    bool track_shell_;
    bool want_csv_;
    std::vector<std::vector<double>> buffers_;
    std::vector<long> idx_;
    GridCounters counters_;
};

GridCounters scan_grid(int d, const std::vector<GridAxis>& axes, double big_d, bool track_shell,
                       bool want_csv, int workers) {
    const size_t outer = axes[0].s.size();
    const size_t nworkers = std::min<size_t>(std::max(workers, 1), outer);
    if (nworkers <= 1) {
        GridScanner scanner(d, axes, big_d, track_shell, want_csv);
        return scanner.run(0, outer);
    }
    std::vector<GridCounters> parts(nworkers);
    std::vector<std::thread> threads;
    threads.reserve(nworkers);
    for (size_t w = 0; w < nworkers; ++w) {
        const size_t from = outer * w / nworkers;
        const size_t to = outer * (w + 1) / nworkers;
        threads.emplace_back([&, w, from, to] {
            GridScanner scanner(d, axes, big_d, track_shell, want_csv);
            parts[w] = scanner.run(from, to);
        });
    }
    for (auto& t : threads) t.join();
    // Deterministic reduction in fixed chunk order.
    GridCounters total;
    for (const auto& part : parts) {
        total.hits += part.hits;
        total.shell_hits += part.shell_hits;
        total.csv += part.csv;
    }
    return total;
}

}  // namespace

ProbEstimate prob_grid(int d, long m, double big_d, bool restrict_symmetry, int workers,
                       const std::string& csv_hits_path) {
    if (d < 4 || d > 12 || d % 2 != 0) throw BadDegreeError();
    if (m < 100) throw GridTooCoarseError();
    if (big_d < 1e6) throw Error("grid estimator requires D >= 1e6");

    const double pi = std::numbers::pi;
    const int big_h = (d - 2) / 2;
    const double h = pi / static_cast<double>(m);
    const bool want_csv = !csv_hits_path.empty();

    ProbEstimate est;
    est.d = d;
    est.method = ProbMethod::Grid;
    est.m = m;
    est.h = h;
    est.big_d = big_d;
    est.symmetry_factor = restrict_symmetry;
    est.total = std::pow(static_cast<double>(m) + 1.0, big_h);

    auto make_axes = [&](double halfwidth) {
        std::vector<GridAxis> axes(static_cast<size_t>(big_h));
        for (int i = 0; i < big_h; ++i) {
            GridAxis& ax = axes[static_cast<size_t>(i)];
            long j_lo = 0, j_hi = m;
            if (restrict_symmetry) {
                // Box around the arguments of the roots of x^{d-2} + 1.
                const double center = (2.0 * i + 1.0) * pi / static_cast<double>(d - 2);
                j_lo = std::max<long>(0, static_cast<long>(std::ceil((center - halfwidth) / h)));
                j_hi = std::min<long>(m, static_cast<long>(std::floor((center + halfwidth) / h)));
            }
            ax.first = j_lo;
            ax.s.reserve(static_cast<size_t>(j_hi - j_lo + 1));
            ax.t.reserve(static_cast<size_t>(j_hi - j_lo + 1));
            for (long j = j_lo; j <= j_hi; ++j) {
                const double t = static_cast<double>(j) * h;
                ax.t.push_back(t);
                ax.s.push_back(2.0 * std::cos(t));
            }
        }
        return axes;
    };

    GridCounters counters;
    double halfwidth = pi / 8.0;
    for (int attempt = 0;; ++attempt) {
        std::vector<GridAxis> axes = make_axes(halfwidth);
        counters = scan_grid(d, axes, big_d, restrict_symmetry, want_csv, workers);
        // Shell validation: hits on the box boundary mean the box may clip the
        // hit region; widen and re-run.
        if (!restrict_symmetry || counters.shell_hits == 0 || attempt >= 3) break;
        halfwidth += pi / 16.0;
    }

    est.n_c = counters.hits;
    double factorial = 1;
    for (int i = 2; i <= big_h; ++i) factorial *= i;
    est.value = static_cast<double>(counters.hits) * (restrict_symmetry ? factorial : 1.0) /
                est.total;
    // Heuristic: half a grid cell of boundary ambiguity per axis.
    est.error_estimate = 0.5 * big_h * h;

    if (want_csv) {
        std::ofstream out(csv_hits_path);
        if (!out) throw Error("cannot open CSV output file: " + csv_hits_path);
        for (int i = 0; i < big_h; ++i) out << (i ? "," : "") << "t" << (i + 1);
        out << '\n' << counters.csv;
    }
    return est;
}

FrequencyResult empirical_frequency(const IntPolynomial& p, long n_from, long n_to) {
    if (!p.monic()) throw NonMonicError();
    if (n_from < 1 || n_to < n_from) throw Error("empirical_frequency requires 1 <= n_from <= n_to");

    FrequencyResult result;
    result.n_from = n_from;
    result.n_to = n_to;
    result.salem_verified = certify_direct(p).verdict == Verdict::Salem;

    const int d = p.degree();
    PowerScan scan(p);
    for (long n = 1; n <= n_to; ++n) {
        PowerPolyResult res = scan.next();
        if (n < n_from) continue;
        if (res.poly.degree() == d && res.poly.is_reciprocal() &&
            vieira_condition(res.poly, 1).satisfied)
            result.hits.push_back(n);
    }
    result.frequency =
        std::to_string(result.hits.size()) + "/" + std::to_string(n_to - n_from + 1);
    return result;
}

}  // namespace salemscope
