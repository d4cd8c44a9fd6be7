#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "kr2/scalar.hpp"

namespace kr2 {

/// The closed ambient variable set x, y, z, t.
enum class Var : std::uint8_t { X = 0, Y = 1, Z = 2, T = 3 };

inline constexpr std::array<Var, 4> kVars{Var::X, Var::Y, Var::Z, Var::T};

char var_name(Var v);
std::optional<Var> var_from_name(char c);

/// Exponent vector over (x, y, z, t).
struct Monomial {
    std::array<std::uint32_t, 4> e{0, 0, 0, 0};

    static Monomial one() { return {}; }
    static Monomial var(Var v, std::uint32_t power = 1) {
        Monomial m;
        m.e[static_cast<std::size_t>(v)] = power;
        return m;
    }

    std::uint32_t operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }
    std::uint32_t& operator[](Var v) { return e[static_cast<std::size_t>(v)]; }

    long total_degree() const {
        return static_cast<long>(e[0]) + e[1] + e[2] + e[3];
    }
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < 4; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (std::size_t i = 0; i < 4; ++i) m.e[i] = a.e[i] + b.e[i];
        return m;
    }
    /// componentwise difference; pre: b.divides(a)
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (std::size_t i = 0; i < 4; ++i) m.e[i] = a.e[i] - b.e[i];
        return m;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a.e == b.e); }
};

/// Graded lexicographic order with x > y > z > t; the division order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        for (std::size_t i = 0; i < 4; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

/// Plain lexicographic order with x > y > z > t; the printing order (descending).
struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        for (std::size_t i = 0; i < 4; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

/// One integer weight per variable, in (x, y, z, t) order.
struct WeightVector {
    std::array<long, 4> w{0, 0, 0, 0};
    long operator[](Var v) const { return w[static_cast<std::size_t>(v)]; }
    friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w == b.w; }
};

/// Sparse multivariate polynomial over Scalar in x, y, z, t.
/// Zero coefficients are never stored; the zero polynomial has no terms.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Scalar, GrlexLess>;

    MultiPoly() = default;

    static MultiPoly constant(Scalar c);
    static MultiPoly variable(Var v);
    static MultiPoly term(Monomial m, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// total degree; -1 for the zero polynomial
    long total_degree() const;
    std::uint32_t degree_in(Var v) const;
    bool uses(Var v) const { return degree_in(v) > 0; }
    bool in_vars(std::initializer_list<Var> allowed) const;

    Scalar coeff(const Monomial& m) const;
    /// leading term in the division order; pre: nonzero
    const std::pair<const Monomial, Scalar>& leading() const;

    /// the coefficient of y^i, as a polynomial with the y-exponent cleared
    MultiPoly y_coefficient(std::uint32_t i) const;

    MultiPoly derivative(Var v) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Scalar& c, const MultiPoly& a);
    MultiPoly pow(std::uint32_t k) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Terms printed in lexicographic order (x > y > z > t), descending, so
    /// output re-parses to the same polynomial.
    std::string str() const;

    void add_term(Monomial m, const Scalar& c);  // accumulates, prunes zeros

private:
    TermMap terms_;
};

/// quotient and remainder of division by a single nonzero divisor:
/// a = q*b + r and no monomial of r is divisible by the leading monomial of b
std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& a, const MultiPoly& b);

/// exact quotient a / b, or nullopt when b does not divide a
std::optional<MultiPoly> exact_div(const MultiPoly& a, const MultiPoly& b);

/// simultaneous substitution; every variable occurring in a needs an image
MultiPoly substitute(const MultiPoly& a, const std::map<Var, MultiPoly>& images);

/// exact evaluation; every variable occurring in a needs a binding
Scalar evaluate(const MultiPoly& a, const std::map<Var, Scalar>& point);

/// common weighted degree of all terms, or nullopt when a is not homogeneous
/// for w; the zero polynomial is rejected
std::optional<long> weight_of(const MultiPoly& a, const WeightVector& w);

}  // namespace kr2
