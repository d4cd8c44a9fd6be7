#include "kr2/scalar.hpp"

#include <algorithm>
#include <utility>

namespace kr2 {

namespace {

// Dense univariate polynomials over Q, ascending powers, used for the
// cyclotomic residue arithmetic. Always trimmed.
using UniPoly = std::vector<Rational>;

void trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

UniPoly uni_sub(UniPoly a, const UniPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

UniPoly uni_scale(UniPoly a, const Rational& c) {
    for (auto& v : a) v *= c;
    trim(a);
    return a;
}

// quotient/remainder; divisor must be nonzero
std::pair<UniPoly, UniPoly> uni_divmod(UniPoly a, const UniPoly& b) {
    UniPoly q;
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Rational c = a.back() / lead;
        if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
        q[shift] += c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
        if (a.empty()) break;
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

UniPoly uni_mod(UniPoly a, const UniPoly& b) { return uni_divmod(std::move(a), b).second; }

// extended Euclid: returns (g, s) with s*a = g mod b, g = gcd(a, b)
std::pair<UniPoly, UniPoly> uni_half_ext_gcd(UniPoly a, UniPoly b) {
    UniPoly s0{Rational(1)}, s1{};
    while (!b.empty()) {
        auto [q, r] = uni_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        UniPoly s2 = uni_sub(s0, uni_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return {std::move(a), std::move(s0)};
}

}  // namespace

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<Rational> cyclotomic_minimal_poly(long n) {
    if (n < 1) throw InvalidArgument("cyclotomic order must be >= 1");
    // Phi_n = (w^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<UniPoly> phi(static_cast<std::size_t>(n) + 1);
    for (long m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        UniPoly num(static_cast<std::size_t>(m) + 1, Rational(0));
        num[0] = -1;
        num.back() = 1;
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto [q, r] = uni_divmod(num, phi[static_cast<std::size_t>(d)]);
            if (!r.empty()) throw Error("cyclotomic recursion produced a nonzero remainder");
            num = std::move(q);
        }
        phi[static_cast<std::size_t>(m)] = std::move(num);
    }
    return phi[static_cast<std::size_t>(n)];
}

CycloContext::CycloContext(long n) : n_(n), min_poly_(cyclotomic_minimal_poly(n)) {}

CycloContextPtr CycloContext::make(long n) {
    return std::shared_ptr<const CycloContext>(new CycloContext(n));
}

Scalar::Scalar(CycloContextPtr ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    // collapse to the rational subfield when every non-constant coordinate is 0
    bool rational_value = true;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            rational_value = false;
            break;
        }
    }
    if (rational_value) {
        rat_ = coeffs_.empty() ? Rational(0) : coeffs_[0];
        ctx_.reset();
        coeffs_.clear();
    }
}

Scalar Scalar::zeta(const CycloContextPtr& ctx) {
    if (!ctx) throw InvalidArgument("zeta needs a cyclotomic context");
    UniPoly w{Rational(0), Rational(1)};
    return Scalar(ctx, uni_mod(std::move(w), ctx->minimal_poly()));
}

Scalar Scalar::cyclotomic(const CycloContextPtr& ctx, std::vector<Rational> coeffs) {
    if (!ctx) throw InvalidArgument("cyclotomic scalar needs a context");
    if (static_cast<long>(coeffs.size()) != ctx->degree())
        throw InvalidArgument("cyclotomic coordinate vector must have length phi(n)");
    return Scalar(ctx, std::move(coeffs));
}

const Rational& Scalar::rational() const {
    if (!is_rational()) throw InvalidArgument("scalar is not rational");
    return rat_;
}

const std::vector<Rational>& Scalar::coeffs() const {
    if (!is_cyclotomic()) throw InvalidArgument("scalar is not cyclotomic");
    return coeffs_;
}

bool Scalar::is_zero() const { return is_rational() && rat_ == 0; }

bool Scalar::is_one() const { return is_rational() && rat_ == 1; }

namespace {

// lift both operands into a common representation; throws on mixed orders
struct Aligned {
    CycloContextPtr ctx;  // null => both rational
    UniPoly a, b;
};

UniPoly as_coeffs(const Scalar& s, long degree) {
    UniPoly out;
    if (s.is_rational()) {
        if (s.rational() != 0) out.push_back(s.rational());
    } else {
        out = s.coeffs();
        trim(out);
    }
    (void)degree;
    return out;
}

Aligned align(const Scalar& a, const Scalar& b) {
    Aligned r;
    if (a.is_cyclotomic() && b.is_cyclotomic()) {
        if (a.context()->order() != b.context()->order())
            throw MixedCyclotomicOrders(a.context()->order(), b.context()->order());
        r.ctx = a.context();
    } else if (a.is_cyclotomic()) {
        r.ctx = a.context();
    } else if (b.is_cyclotomic()) {
        r.ctx = b.context();
    }
    long deg = r.ctx ? r.ctx->degree() : 0;
    r.a = as_coeffs(a, deg);
    r.b = as_coeffs(b, deg);
    return r;
}

Scalar from_uni(const CycloContextPtr& ctx, UniPoly v) {
    if (!ctx) {
        return Scalar(v.empty() ? Rational(0) : v[0]);
    }
    v.resize(static_cast<std::size_t>(ctx->degree()), Rational(0));
    return Scalar::cyclotomic(ctx, std::move(v));
}

}  // namespace

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(-rat_);
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v = -v;
    return Scalar::cyclotomic(ctx_, std::move(c));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rat_ + b.rat_);
    Aligned al = align(a, b);
    UniPoly s = al.a;
    if (s.size() < al.b.size()) s.resize(al.b.size(), Rational(0));
    for (std::size_t i = 0; i < al.b.size(); ++i) s[i] += al.b[i];
    trim(s);
    return from_uni(al.ctx, std::move(s));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rat_ * b.rat_);
    Aligned al = align(a, b);
    UniPoly prod = uni_mod(uni_mul(al.a, al.b), al.ctx->minimal_poly());
    return from_uni(al.ctx, std::move(prod));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return Scalar(Rational(1) / rat_);
    UniPoly a = coeffs_;
    trim(a);
    // Phi_n is irreducible over Q, so gcd(a, Phi_n) is a nonzero constant
    auto [g, s] = uni_half_ext_gcd(a, ctx_->minimal_poly());
    if (g.size() != 1) throw Error("cyclotomic inverse: unexpected non-constant gcd");
    UniPoly inv = uni_mod(uni_scale(std::move(s), Rational(1) / g[0]), ctx_->minimal_poly());
    return from_uni(ctx_, std::move(inv));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_rational() && b.is_rational()) return Scalar(a.rat_ / b.rat_);
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_rational() != b.is_rational()) return false;  // collapse makes this exact
    if (a.is_rational()) return a.rat_ == b.rat_;
    if (a.ctx_->order() != b.ctx_->order()) return false;
    return a.coeffs_ == b.coeffs_;
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar base = *this;
    Scalar acc(1);
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base *= base;
        e >>= 1UL;
    }
    return acc;
}

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string Scalar::str() const {
    if (is_rational()) return rational_str(rat_);
    // coordinates as a sum in zeta, highest power first
    std::string out;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const Rational& c = coeffs_[idx];
        if (c == 0) continue;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        std::string part;
        if (idx == 0) {
            part = rational_str(mag);
        } else {
            std::string power = idx == 1 ? "zeta" : "zeta^" + std::to_string(idx);
            part = (mag == 1) ? power : rational_str(mag) + "*" + power;
        }
        if (out.empty()) {
            out = negative ? "-" + part : part;
        } else {
            out += negative ? " - " + part : " + " + part;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace kr2
