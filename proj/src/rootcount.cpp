#include "salemscope/rootcount.hpp"

namespace salemscope {

namespace {
const mpq_class kZeroQ = 0;
}

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& v : c_) v.canonicalize();
    trim();
}

RationalPolynomial::RationalPolynomial(const IntPolynomial& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
    trim();
}

void RationalPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& RationalPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroQ;
    return c_[static_cast<size_t>(k)];
}

const mpq_class& RationalPolynomial::leading() const {
    if (c_.empty()) return kZeroQ;
    return c_.back();
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (c_.size() <= 1) return RationalPolynomial();
    std::vector<mpq_class> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return RationalPolynomial(std::move(out));
}

mpq_class RationalPolynomial::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RationalPolynomial RationalPolynomial::remainder(const RationalPolynomial& divisor) const {
    if (divisor.is_zero()) throw Error("division by the zero polynomial");
    std::vector<mpq_class> rem(c_);
    const int db = divisor.degree();
    while (static_cast<int>(rem.size()) - 1 >= db) {
        if (rem.back() == 0) {
            rem.pop_back();
            continue;
        }
        const size_t da = rem.size() - 1;
        mpq_class q = rem.back() / divisor.leading();
        for (int j = 0; j <= db; ++j)
            rem[da - static_cast<size_t>(db) + static_cast<size_t>(j)] -= q * divisor.coeff(j);
        rem.pop_back();
    }
    return RationalPolynomial(std::move(rem));
}

RationalPolynomial RationalPolynomial::normalized_primitive() const {
    if (c_.empty()) return RationalPolynomial();
    // Multiply by lcm of denominators, divide by gcd of numerators: a positive
    // scaling, so every sign (hence every sign variation) is preserved.
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& v : c_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    std::vector<mpq_class> out(c_);
    for (auto& v : out) {
        v *= scale;
        v.canonicalize();
    }
    return RationalPolynomial(std::move(out));
}

SturmChain::SturmChain(const RationalPolynomial& q) {
    if (q.is_zero()) throw Error("Sturm chain requires a nonzero polynomial");
    polys_.push_back(q.normalized_primitive());
    RationalPolynomial d = q.derivative();
    if (!d.is_zero()) {
        polys_.push_back(d.normalized_primitive());
        while (true) {
            const RationalPolynomial& a = polys_[polys_.size() - 2];
            const RationalPolynomial& b = polys_.back();
            RationalPolynomial r = a.remainder(b);
            if (r.is_zero()) break;
            std::vector<mpq_class> neg(r.coeffs());
            for (auto& v : neg) v = -v;
            polys_.push_back(RationalPolynomial(std::move(neg)).normalized_primitive());
        }
    }
}

namespace {

int sign_of(const mpq_class& v) { return sgn(v); }

int sign_at(const RationalPolynomial& p, const RatBound& at) {
    if (p.is_zero()) return 0;
    switch (at.kind) {
        case RatBound::Kind::Finite:
            return sign_of(p.evaluate(at.value));
        case RatBound::Kind::PosInf:
            return sign_of(p.leading());
        case RatBound::Kind::NegInf:
            return (p.degree() % 2 == 0) ? sign_of(p.leading()) : -sign_of(p.leading());
    }
    return 0;
}

}  // namespace

int SturmChain::sign_variations(const RatBound& at) const {
    int variations = 0;
    int prev = 0;
    for (const auto& p : polys_) {
        int s = sign_at(p, at);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int SturmChain::count_roots(const RatBound& lo, const RatBound& hi) const {
    return sign_variations(lo) - sign_variations(hi);
}

IntPolynomial trace_transform(const IntPolynomial& p) {
    if (!p.is_reciprocal()) throw NotReciprocalError();
    const int d = p.degree();
    if (d % 2 != 0) throw OddDegreeError();
    const int m = d / 2;
    // T_j(y) with x^j + x^{-j} = T_j(x + 1/x): T_0 = 2, T_1 = y,
    // T_j = y*T_{j-1} - T_{j-2}.  Then P(x)/x^m = a_m + sum_j a_{m+j} T_j(y).
    IntPolynomial y({0, 1});
    IntPolynomial t_prev({2});
    IntPolynomial t_cur = y;
    IntPolynomial q(std::vector<mpz_class>{p.coeff(m)});
    for (int j = 1; j <= m; ++j) {
        if (j > 1) {
            IntPolynomial t_next = y * t_cur - t_prev;
            t_prev = std::move(t_cur);
            t_cur = std::move(t_next);
        }
        q = q + IntPolynomial(std::vector<mpz_class>{p.coeff(m + j)}) * t_cur;
    }
    return q;
}

namespace {

// Squarefree part p / gcd(p, p'), with multiplicities stripped.  The gcd is
// primitive, so by Gauss's lemma the division is exact over the integers.
IntPolynomial squarefree_part(const IntPolynomial& p) {
    IntPolynomial g = gcd_primitive(p, p.derivative());
    if (g.degree() == 0) return p;
    auto q = p.divide_exact(g);
    if (!q) throw InternalInexactDivisionError("squarefree part division failed");
    return *q;
}

}  // namespace

int count_real_roots(const RationalPolynomial& q, const RatBound& lo, const RatBound& hi) {
    if (q.is_zero()) throw Error("root counting requires a nonzero polynomial");
    if (q.degree() == 0) return 0;
    std::vector<mpz_class> num;
    num.reserve(q.coeffs().size());
    RationalPolynomial prim = q.normalized_primitive();
    for (const auto& v : prim.coeffs()) num.emplace_back(v.get_num());
    return count_real_roots(IntPolynomial(std::move(num)), lo, hi);
}

int count_real_roots(const IntPolynomial& q, const RatBound& lo, const RatBound& hi) {
    if (q.is_zero()) throw Error("root counting requires a nonzero polynomial");
    if (q.degree() == 0) return 0;
    SturmChain chain{RationalPolynomial(squarefree_part(q))};
    return chain.count_roots(lo, hi);
}

int unimodular_root_count(const IntPolynomial& p) {
    if (!p.is_reciprocal()) throw NotReciprocalError();
    if (p.degree() % 2 != 0) throw OddDegreeError();
    if (!p.is_squarefree()) throw NotSquarefreeError();
    IntPolynomial q = trace_transform(p);
    // Unimodular conjugate pairs map to y in the open interval (-2, 2); the
    // half-open Sturm count (-2, 2] must drop a root at y = 2 exactly.
    int inner = count_real_roots(q, RatBound::finite(-2), RatBound::finite(2));
    if (q.evaluate(2) == 0) --inner;
    int count = 2 * inner;
    if (p.evaluate(1) == 0) ++count;
    if (p.evaluate(-1) == 0) ++count;
    return count;
}

int count_roots_above_one(const IntPolynomial& p) {
    return count_real_roots(p, RatBound::finite(1), RatBound::pos_inf());
}

}  // namespace salemscope
