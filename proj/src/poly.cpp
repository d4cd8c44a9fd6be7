#include "kr2/poly.hpp"

#include <algorithm>
#include <vector>

namespace kr2 {

char var_name(Var v) {
    switch (v) {
        case Var::X: return 'x';
        case Var::Y: return 'y';
        case Var::Z: return 'z';
        case Var::T: return 't';
    }
    return '?';
}

std::optional<Var> var_from_name(char c) {
    switch (c) {
        case 'x': return Var::X;
        case 'y': return Var::Y;
        case 'z': return Var::Z;
        case 't': return Var::T;
        default: return std::nullopt;
    }
}

MultiPoly MultiPoly::constant(Scalar c) {
    MultiPoly p;
    p.add_term(Monomial::one(), c);
    return p;
}

MultiPoly MultiPoly::variable(Var v) {
    MultiPoly p;
    p.add_term(Monomial::var(v), Scalar(1));
    return p;
}

MultiPoly MultiPoly::term(Monomial m, Scalar c) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

void MultiPoly::add_term(Monomial m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // the division order is graded, so the leading term has maximal degree
    return terms_.rbegin()->first.total_degree();
}

std::uint32_t MultiPoly::degree_in(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

bool MultiPoly::in_vars(std::initializer_list<Var> allowed) const {
    for (const auto& [m, c] : terms_) {
        for (Var v : kVars) {
            if (m[v] == 0) continue;
            if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
        }
    }
    return true;
}

Scalar MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

const std::pair<const Monomial, Scalar>& MultiPoly::leading() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return *terms_.rbegin();
}

MultiPoly MultiPoly::y_coefficient(std::uint32_t i) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        if (m[Var::Y] != i) continue;
        Monomial stripped = m;
        stripped[Var::Y] = 0;
        out.add_term(stripped, c);
    }
    return out;
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        std::uint32_t k = m[v];
        if (k == 0) continue;
        Monomial dm = m;
        dm[v] = k - 1;
        out.add_term(dm, Scalar(static_cast<long>(k)) * c);
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& a) {
    MultiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : a.terms_) out.add_term(m, c * v);
    return out;
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
    MultiPoly acc = MultiPoly::constant(Scalar(1));
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1U) acc = acc * base;
        base = base * base;
        k >>= 1U;
    }
    return acc;
}

std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly();
    MultiPoly q, r, work = a;
    const auto& [lm, lc] = b.leading();
    while (!work.is_zero()) {
        const auto& [wm, wc] = work.leading();
        if (lm.divides(wm)) {
            Monomial sm = wm / lm;
            Scalar sc = wc / lc;
            q.add_term(sm, sc);
            work -= MultiPoly::term(sm, sc) * b;
        } else {
            r.add_term(wm, wc);
            work.add_term(wm, -wc);
        }
    }
    return {std::move(q), std::move(r)};
}

std::optional<MultiPoly> exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DivisionByZeroPoly();
    // with a single divisor, any nonzero remainder step already decides
    MultiPoly q, work = a;
    const auto& [lm, lc] = b.leading();
    while (!work.is_zero()) {
        const auto& [wm, wc] = work.leading();
        if (!lm.divides(wm)) return std::nullopt;
        Monomial sm = wm / lm;
        Scalar sc = wc / lc;
        q.add_term(sm, sc);
        work -= MultiPoly::term(sm, sc) * b;
    }
    return q;
}

MultiPoly substitute(const MultiPoly& a, const std::map<Var, MultiPoly>& images) {
    // cache images^k per variable; exponents at desk scale stay small
    std::array<std::vector<MultiPoly>, 4> powers;
    for (Var v : kVars) powers[static_cast<std::size_t>(v)] = {MultiPoly::constant(Scalar(1))};

    auto power_of = [&](Var v, std::uint32_t k) -> const MultiPoly& {
        auto& cache = powers[static_cast<std::size_t>(v)];
        if (cache.size() <= k) {
            auto it = images.find(v);
            if (it == images.end()) throw MissingImage(var_name(v));
            while (cache.size() <= k) cache.push_back(cache.back() * it->second);
        }
        return cache[k];
    };

    MultiPoly out;
    for (const auto& [m, c] : a.terms()) {
        MultiPoly prod = MultiPoly::constant(c);
        for (Var v : kVars) {
            std::uint32_t k = m[v];
            if (k > 0) prod = prod * power_of(v, k);
        }
        out += prod;
    }
    return out;
}

Scalar evaluate(const MultiPoly& a, const std::map<Var, Scalar>& point) {
    Scalar out(0);
    for (const auto& [m, c] : a.terms()) {
        Scalar v = c;
        for (Var var : kVars) {
            std::uint32_t k = m[var];
            if (k == 0) continue;
            auto it = point.find(var);
            if (it == point.end()) throw MissingBinding(var_name(var));
            v *= it->second.pow(static_cast<long>(k));
        }
        out += v;
    }
    return out;
}

std::optional<long> weight_of(const MultiPoly& a, const WeightVector& w) {
    if (a.is_zero()) throw ZeroPolynomial();
    std::optional<long> common;
    for (const auto& [m, c] : a.terms()) {
        long wt = 0;
        for (Var v : kVars) wt += static_cast<long>(m[v]) * w[v];
        if (!common) {
            common = wt;
        } else if (*common != wt) {
            return std::nullopt;
        }
    }
    return common;
}

namespace {

// a scalar coefficient is "simple" when it prints as sign * single factor
struct CoeffPieces {
    bool negative = false;
    std::string factor;  // empty means magnitude one
    bool composite = false;
};

CoeffPieces coeff_pieces(const Scalar& c) {
    CoeffPieces out;
    if (c.is_rational()) {
        Rational r = c.rational();
        out.negative = r < 0;
        Rational mag = out.negative ? Rational(-r) : r;
        if (mag != 1) out.factor = rational_str(mag);
        return out;
    }
    const auto& coords = c.coeffs();
    std::size_t nonzero = 0, idx = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) {
            ++nonzero;
            idx = i;
        }
    }
    if (nonzero == 1 && idx >= 1) {
        const Rational& r = coords[idx];
        out.negative = r < 0;
        Rational mag = out.negative ? Rational(-r) : r;
        std::string power = idx == 1 ? "zeta" : "zeta^" + std::to_string(idx);
        out.factor = (mag == 1) ? power : rational_str(mag) + "*" + power;
        return out;
    }
    out.composite = true;
    out.factor = "(" + c.str() + ")";
    return out;
}

std::string monomial_str(const Monomial& m) {
    std::string out;
    for (Var v : kVars) {
        std::uint32_t k = m[v];
        if (k == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(v);
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Scalar>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return LexLess{}(b.first, a.first); });
    std::string out;
    for (const auto& [m, c] : sorted) {
        std::string mono = monomial_str(m);
        CoeffPieces pieces = coeff_pieces(c);
        std::string body = pieces.factor;
        if (mono.empty()) {
            if (body.empty()) body = "1";
        } else {
            body = body.empty() ? mono : body + "*" + mono;
        }
        if (out.empty()) {
            out = pieces.negative ? "-" + body : body;
        } else {
            out += pieces.negative ? " - " + body : " + " + body;
        }
    }
    return out;
}

}  // namespace kr2
