#include "salemscope/powerpoly.hpp"

namespace salemscope {

BigIntMatrix BigIntMatrix::identity(int dim) {
    BigIntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

BigIntMatrix BigIntMatrix::operator*(const BigIntMatrix& other) const {
    const int d = dim_;
    BigIntMatrix out(d);
    mpz_class acc;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            acc = 0;
            for (int k = 0; k < d; ++k) acc += at(i, k) * other.at(k, j);
            out.at(i, j) = acc;
        }
    }
    return out;
}

mpz_class BigIntMatrix::trace() const {
    mpz_class t = 0;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

BigIntMatrix companion(const IntPolynomial& p) {
    if (!p.monic()) throw NonMonicError();
    const int d = p.degree();
    if (d < 2) throw DegreeTooSmallError("companion matrix requires degree >= 2");
    BigIntMatrix c(d);
    for (int i = 0; i + 1 < d; ++i) c.at(i, i + 1) = 1;
    for (int j = 0; j < d; ++j) c.at(d - 1, j) = -p.coeff(j);
    return c;
}

BigIntMatrix mat_pow(const BigIntMatrix& M, long n) {
    if (n < 1) throw Error("matrix power requires n >= 1");
    BigIntMatrix base = M;
    BigIntMatrix result = BigIntMatrix::identity(M.dim());
    bool started = false;
    while (n > 0) {
        if (n & 1) {
            result = started ? result * base : base;
            started = true;
        }
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

namespace {

// Coefficients of det(xI - M) from the traces of M, M^2, ..., M^d.
IntPolynomial char_poly_from_traces(const std::vector<mpz_class>& t, int d) {
    // k*e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} t_i; every division by k is exact.
    std::vector<mpz_class> e(static_cast<size_t>(d) + 1);
    e[0] = 1;
    for (int k = 1; k <= d; ++k) {
        mpz_class acc = 0;
        for (int i = 1; i <= k; ++i) {
            if (i & 1)
                acc += e[static_cast<size_t>(k - i)] * t[static_cast<size_t>(i)];
            else
                acc -= e[static_cast<size_t>(k - i)] * t[static_cast<size_t>(i)];
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(k)))
            throw InternalInexactDivisionError();
        e[static_cast<size_t>(k)] = acc / k;
    }
    std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        c[static_cast<size_t>(d - k)] = (k & 1) ? mpz_class(-e[static_cast<size_t>(k)])
                                                : e[static_cast<size_t>(k)];
    return IntPolynomial(std::move(c));
}

std::vector<mpz_class> traces_of_powers(const BigIntMatrix& M) {
    const int d = M.dim();
    std::vector<mpz_class> t(static_cast<size_t>(d) + 1);
    BigIntMatrix power = M;
    t[1] = power.trace();
    for (int k = 2; k <= d; ++k) {
        power = power * M;
        t[static_cast<size_t>(k)] = power.trace();
    }
    return t;
}

}  // namespace

IntPolynomial char_poly(const BigIntMatrix& M) {
    return char_poly_from_traces(traces_of_powers(M), M.dim());
}

PowerPolyResult power_min_poly(const IntPolynomial& p, long n) {
    if (n < 1) throw Error("power index n must be >= 1");
    if (!p.monic()) throw NonMonicError();
    if (p.degree() < 2) throw DegreeTooSmallError("power_min_poly requires degree >= 2");
    const BigIntMatrix w = mat_pow(companion(p), n);
    PowerPolyResult result;
    result.n = n;
    std::vector<mpz_class> t = traces_of_powers(w);
    result.poly = char_poly_from_traces(t, w.dim());
    result.trace_sums.assign(t.begin() + 1, t.end());
    return result;
}

PowerScan::PowerScan(const IntPolynomial& p) : c_(companion(p)), w_(c_.dim()) {}

PowerPolyResult PowerScan::next() {
    w_ = (n_ == 0) ? c_ : w_ * c_;
    ++n_;
    PowerPolyResult result;
    result.n = n_;
    std::vector<mpz_class> t = traces_of_powers(w_);
    result.poly = char_poly_from_traces(t, w_.dim());
    result.trace_sums.assign(t.begin() + 1, t.end());
    return result;
}

}  // namespace salemscope
