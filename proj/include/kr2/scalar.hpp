#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <string>
#include <vector>

#include "kr2/errors.hpp"

namespace kr2 {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

long euler_phi(long n);

/// Coefficients of the n-th cyclotomic polynomial over Q, ascending powers,
/// monic, degree phi(n). Computed by dividing w^n - 1 by every proper Phi_d.
std::vector<Rational> cyclotomic_minimal_poly(long n);

/// The extension Q(zeta_n), fixed for a family of Scalar values.
class CycloContext {
public:
    static std::shared_ptr<const CycloContext> make(long n);

    long order() const { return n_; }
    long degree() const { return static_cast<long>(min_poly_.size()) - 1; }
    const std::vector<Rational>& minimal_poly() const { return min_poly_; }

private:
    explicit CycloContext(long n);
    long n_;
    std::vector<Rational> min_poly_;
};

using CycloContextPtr = std::shared_ptr<const CycloContext>;

/// Exact field scalar: a rational, or a residue class in Q(zeta_n).
///
/// Cyclotomic values whose non-constant coordinates vanish collapse back to
/// the rational they represent, so Q-values compare equal regardless of how
/// they were produced. Mixing two different orders n raises
/// MixedCyclotomicOrders; a plain rational silently promotes.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : rat_(v) {}  // NOLINT: implicit by design
    Scalar(Rational v) : rat_(std::move(v)) {}
    Scalar(BigInt v) : rat_(std::move(v)) {}

    /// The residue of w itself (reduced modulo Phi_n; for n <= 2 this is rational).
    static Scalar zeta(const CycloContextPtr& ctx);
    /// A residue class from explicit coordinates (length phi(n), ascending powers).
    static Scalar cyclotomic(const CycloContextPtr& ctx, std::vector<Rational> coeffs);

    bool is_rational() const { return ctx_ == nullptr; }
    bool is_cyclotomic() const { return ctx_ != nullptr; }
    const Rational& rational() const;
    const std::vector<Rational>& coeffs() const;
    const CycloContextPtr& context() const { return ctx_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
    Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;
    /// Exact integer power; negative exponents go through the inverse.
    Scalar pow(long k) const;

    std::string str() const;

private:
    Scalar(CycloContextPtr ctx, std::vector<Rational> coeffs);

    // rational when ctx_ == nullptr; otherwise coeffs_ has length phi(n)
    CycloContextPtr ctx_;
    Rational rat_;
    std::vector<Rational> coeffs_;
};

std::string rational_str(const Rational& r);

}  // namespace kr2
