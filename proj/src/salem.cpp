#include "salemscope/salem.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "salemscope/rootcount.hpp"
#include "salemscope/roots.hpp"

namespace salemscope {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Salem: return "Salem";
        case Verdict::NotSalem: return "NotSalem";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::PowerCriterion: return "PowerCriterion";
        case Method::Direct: return "Direct";
        case Method::Both: return "Both";
    }
    return "?";
}

VieiraCheck vieira_condition(const IntPolynomial& p, int l) {
    if (!p.is_reciprocal()) throw NotReciprocalError();
    const int d = p.degree();
    if (l < 0 || 2 * l >= d) throw BadLError();
    VieiraCheck check;
    check.l = l;
    check.lhs = abs(p.coeff(d - l));
    mpz_class sum = 0;
    for (int k = 0; k <= d; ++k) {
        if (k == l || k == d - l) continue;
        sum += abs(p.coeff(k));
    }
    check.rhs_doubled = d * sum;
    check.satisfied = 2 * (d - 2 * l) * check.lhs > check.rhs_doubled;
    return check;
}

BoundCheckRecord growth_checks_with_tau(double tau, long n, const IntPolynomial& P_n,
                                        const IntPolynomial* P_prev) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const int d = P_n.degree();
    BoundCheckRecord rec;
    rec.n = n;

    const mpz_class a_top = abs(P_n.coeff(d - 1));
    const mpz_class b_rhs = a_top + (d - 2);

    // (b) tau^n + tau^-n <= |a_{d-1,n}| + d - 2, with a relative slack of
    // 1e-6 * tau^n guarding float error in tau.  Compared after dividing by
    // tau^n so that large n cannot overflow:  1 + tau^-2n <= rhs/tau^n + 1e-6.
    if (tau > 1.0) {
        const double log_tau = std::log(tau);
        const double scaled_rhs = std::exp(log_abs(b_rhs) - static_cast<double>(n) * log_tau);
        const double lhs = 1.0 + std::exp(-2.0 * static_cast<double>(n) * log_tau);
        rec.b_ok = lhs <= scaled_rhs + 1e-6;
    }

    // (c) exact integer binomial bounds for k = 1..d-3.
    rec.c_each.assign(d >= 4 ? static_cast<size_t>(d - 3) : 0, true);
    for (int k = 1; k <= d - 3; ++k) {
        mpz_class bound;
        mpz_class binom;
        mpz_bin_uiui(bound.get_mpz_t(), static_cast<unsigned long>(d - 2),
                     static_cast<unsigned long>(k));
        bound *= b_rhs;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d - 2),
                     static_cast<unsigned long>(k - 1));
        bound += binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d - 2),
                     static_cast<unsigned long>(k + 1));
        bound += binom;
        const bool ok = abs(P_n.coeff(d - k - 1)) <= bound;
        rec.c_each[static_cast<size_t>(k - 1)] = ok;
        if (!ok) rec.c_ok = false;
    }

    rec.ratio = nan;
    if (P_prev != nullptr && P_prev->coeff(d - 1) != 0) {
        mpq_class r(P_n.coeff(d - 1), P_prev->coeff(d - 1));
        r.canonicalize();
        rec.ratio = r.get_d();
    }
    rec.root_est =
        (a_top == 0) ? nan : std::exp(log_abs(a_top) / static_cast<double>(n));
    return rec;
}

BoundCheckRecord growth_checks(const IntPolynomial& p, long n, const IntPolynomial& P_n,
                               const IntPolynomial* P_prev) {
    return growth_checks_with_tau(tau_estimate(p), n, P_n, P_prev);
}

namespace {

// Structural rejections shared by both certifiers.  Returns true when a
// verdict was reached; fills counts/flags it computed along the way.
bool structural_checks(const IntPolynomial& p, CertificateReport& report) {
    const int d = p.degree();
    if (!p.is_reciprocal()) {
        report.verdict = Verdict::NotSalem;
        report.failure_reason = "polynomial is not self-reciprocal";
        return true;
    }
    if (d % 2 != 0) {
        report.verdict = Verdict::NotSalem;
        report.failure_reason = "degree is odd";
        return true;
    }
    if (d < 4) {
        report.verdict = Verdict::NotSalem;
        report.failure_reason = "degree is less than four";
        return true;
    }
    if (!p.is_squarefree()) {
        report.verdict = Verdict::NotSalem;
        report.failure_reason = "polynomial is not squarefree";
        return true;
    }
    report.cyclotomic_free = cyclotomic_free(p);
    if (!report.cyclotomic_free) {
        report.verdict = Verdict::NotSalem;
        report.failure_reason = "polynomial has a cyclotomic factor";
        return true;
    }
    report.roots_above_one = count_roots_above_one(p);
    report.unimodular_count = unimodular_root_count(p);
    if (report.roots_above_one != 1) {
        report.verdict = Verdict::NotSalem;
        report.failure_reason = "expected exactly one real root greater than 1, found " +
                                std::to_string(report.roots_above_one);
        return true;
    }
    report.tau_estimate = tau_estimate(p);
    return false;
}

}  // namespace

CertificateReport certify_power_criterion(const IntPolynomial& p, long max_n) {
    if (!p.monic()) throw NonMonicError();
    CertificateReport report;
    report.method = Method::PowerCriterion;
    if (structural_checks(p, report)) return report;

    const int d = p.degree();
    PowerScan scan(p);
    IntPolynomial prev;
    for (long n = 1; n <= max_n; ++n) {
        PowerPolyResult res = scan.next();
        BoundCheckRecord rec = growth_checks_with_tau(report.tau_estimate, n, res.poly,
                                                      n > 1 ? &prev : nullptr);
        report.bounds.push_back(rec);
        if (!rec.b_ok || !rec.c_ok) {
            report.verdict = Verdict::NotSalem;
            report.failure_reason =
                "coefficient growth bound violated at n = " + std::to_string(n);
            return report;
        }
        if (n >= 2 && res.poly.degree() == d && res.poly.is_reciprocal() &&
            vieira_condition(res.poly, 1).satisfied && res.poly.is_squarefree() &&
            cyclotomic_free(res.poly)) {
            report.verdict = Verdict::Salem;
            report.witness_n = n;
            return report;
        }
        prev = std::move(res.poly);
    }
    report.verdict = Verdict::Inconclusive;
    return report;
}

CertificateReport certify_direct(const IntPolynomial& p) {
    if (!p.monic()) throw NonMonicError();
    CertificateReport report;
    report.method = Method::Direct;
    if (structural_checks(p, report)) return report;
    const int d = p.degree();
    if (report.unimodular_count != d - 2) {
        report.verdict = Verdict::NotSalem;
        report.failure_reason = "expected " + std::to_string(d - 2) +
                                " unimodular roots, found " +
                                std::to_string(report.unimodular_count);
        return report;
    }
    // Reciprocal, squarefree, cyclotomic-free, one root above 1 and d-2 roots
    // on the circle: any proper factor would have all roots unimodular, hence
    // be cyclotomic (Kronecker), which is excluded; so p is irreducible and
    // its large root is a Salem number.
    report.verdict = Verdict::Salem;
    return report;
}

CertificateReport certify_both(const IntPolynomial& p, long max_n) {
    CertificateReport direct = certify_direct(p);
    CertificateReport power = certify_power_criterion(p, max_n);
    CertificateReport report = direct;  // exact evidence wins
    report.method = Method::Both;
    report.witness_n = power.witness_n;
    report.bounds = std::move(power.bounds);
    if (power.verdict != Verdict::Inconclusive && power.verdict != direct.verdict) {
        // Should be impossible: both certifiers are sound.  Surface loudly.
        throw Error("internal: certifier disagreement on " + p.to_string());
    }
    return report;
}

bool detect_cyclotomic_by_periodicity(const IntPolynomial& p, long period_bound) {
    if (!p.monic()) throw NonMonicError();
    const int d = p.degree();
    if (d < 1) throw DegreeTooSmallError("periodicity detection requires degree >= 1");
    if (period_bound <= 0) period_bound = 2L * d * d + 4;
    if (d == 1) return abs(p.coeff(0)) == 1;  // single root -a_0, a unit iff +-1
    PowerScan scan(p);
    std::map<std::vector<mpz_class>, long> seen;
    for (long n = 1; n <= period_bound; ++n) {
        PowerPolyResult res = scan.next();
        auto [it, inserted] = seen.try_emplace(res.poly.coeffs(), n);
        if (!inserted) return true;
    }
    return false;
}

}  // namespace salemscope
