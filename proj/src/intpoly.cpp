#include "salemscope/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace salemscope {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::parse(const std::string& text, bool half_form) {
    std::istringstream in(text);
    std::vector<mpz_class> c;
    std::string tok;
    while (in >> tok) {
        mpz_class v;
        if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
            throw Error("invalid coefficient token: '" + tok + "'");
        c.push_back(std::move(v));
    }
    if (c.empty()) throw Error("polynomial input is empty");
    if (half_form) {
        // Input lists a_0..a_h with d = 2h; mirror a_{d-k} = a_k.
        const size_t h = c.size() - 1;
        for (size_t k = h + 1; k <= 2 * h; ++k) c.push_back(c[2 * h - k]);
    }
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ' ';
        out += c_[i].get_str();
    }
    return out;
}

const mpz_class& IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

const mpz_class& IntPolynomial::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& q) const {
    std::vector<mpz_class> out(std::max(c_.size(), q.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) out[i] += q.c_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& q) const {
    std::vector<mpz_class> out(std::max(c_.size(), q.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) out[i] -= q.c_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& q) const {
    if (c_.empty() || q.c_.empty()) return IntPolynomial();
    std::vector<mpz_class> out(c_.size() + q.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < q.c_.size(); ++j) out[i + j] += c_[i] * q.c_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<mpz_class> out(c_);
    for (auto& v : out) v = -v;
    return IntPolynomial(std::move(out));
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return IntPolynomial();
    std::vector<mpz_class> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(out));
}

bool IntPolynomial::is_reciprocal() const {
    if (c_.empty()) return false;
    const size_t d = c_.size() - 1;
    for (size_t k = 0; 2 * k <= d; ++k)
        if (c_[k] != c_[d - k]) return false;
    return true;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw Error("division by the zero polynomial");
    if (is_zero()) return IntPolynomial();
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<mpz_class> rem(c_);
    std::vector<mpz_class> quo(rem.size() - divisor.c_.size() + 1, 0);
    const mpz_class& lead = divisor.c_.back();
    for (size_t i = quo.size(); i-- > 0;) {
        mpz_class& top = rem[i + divisor.c_.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        quo[i] = top / lead;
        for (size_t j = 0; j < divisor.c_.size(); ++j) rem[i + j] -= quo[i] * divisor.c_[j];
    }
    for (const auto& v : rem)
        if (v != 0) return std::nullopt;
    return IntPolynomial(std::move(quo));
}

namespace {

// gcd of all coefficients, nonnegative.
mpz_class content(const IntPolynomial& p) {
    mpz_class g = 0;
    for (const auto& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    mpz_class g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<mpz_class> out(p.coeffs());
    for (auto& v : out) v /= g;
    return IntPolynomial(std::move(out));
}

// Pseudo-remainder: rem(lc(b)^(deg a - deg b + 1) * a, b), exact over Z.
IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> rem(a.coeffs());
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    int da = static_cast<int>(rem.size()) - 1;
    while (da >= db) {
        if (rem[static_cast<size_t>(da)] == 0) {
            --da;
            continue;
        }
        mpz_class q = rem[static_cast<size_t>(da)];
        for (auto& v : rem) v *= lb;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(da - db + j)] -= q * b.coeff(j);
        --da;
    }
    return IntPolynomial(std::move(rem));
}

}  // namespace

IntPolynomial gcd_primitive(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPolynomial() : primitive_part(r);
    }
    return a;
}

bool IntPolynomial::is_squarefree() const {
    if (is_zero()) throw Error("squarefreeness is undefined for the zero polynomial");
    if (degree() == 0) return true;
    return gcd_primitive(*this, derivative()).degree() == 0;
}

unsigned long euler_phi(unsigned long k) {
    unsigned long result = k;
    for (unsigned long p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            while (k % p == 0) k /= p;
            result -= result / p;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

IntPolynomial cyclotomic(unsigned long k) {
    if (k == 0) throw Error("cyclotomic index must be positive");
    static std::map<unsigned long, IntPolynomial> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    // x^k - 1 divided by the product of Phi_j over proper divisors j of k.
    std::vector<mpz_class> xk(k + 1, 0);
    xk[0] = -1;
    xk[k] = 1;
    IntPolynomial result(std::move(xk));
    for (unsigned long j = 1; j < k; ++j) {
        if (k % j != 0) continue;
        auto q = result.divide_exact(cyclotomic(j));
        if (!q) throw InternalInexactDivisionError("cyclotomic recursion division failed");
        result = std::move(*q);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(k, result);
    return result;
}

bool cyclotomic_free(const IntPolynomial& p) {
    if (!p.monic()) throw NonMonicError();
    const int d = p.degree();
    if (d < 1) throw DegreeTooSmallError("cyclotomic_free requires degree >= 1");
    // phi(k) >= sqrt(k/2), so k <= 2 d^2 covers every k with phi(k) <= d.
    const unsigned long bound = 2ul * static_cast<unsigned long>(d) * static_cast<unsigned long>(d);
    for (unsigned long k = 1; k <= bound; ++k) {
        if (euler_phi(k) > static_cast<unsigned long>(d)) continue;
        if (p.divide_exact(cyclotomic(k))) return false;
    }
    return true;
}

}  // namespace salemscope
