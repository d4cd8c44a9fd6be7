#include "kr2/membership_oracle.hpp"

namespace kr2 {

namespace {

using SparseRow = std::map<Monomial, Rational, GrlexLess>;

SparseRow to_row(const MultiPoly& p) {
    SparseRow row;
    for (const auto& [m, c] : p.terms()) {
        if (!c.is_rational()) throw InvalidArgument("membership oracle works over Q");
        if (m[Var::Y] != 0) throw InvalidArgument("membership oracle input has y");
        row.emplace(m, c.rational());
    }
    return row;
}

void axpy(SparseRow& target, const Rational& c, const SparseRow& source) {
    for (const auto& [m, v] : source) {
        auto [it, inserted] = target.emplace(m, c * v);
        if (!inserted) {
            it->second += c * v;
            if (it->second == 0) target.erase(it);
        }
    }
}

// monomials m of total degree <= bound in x, z, t
template <typename Fn>
void for_each_monomial(long bound, Fn&& fn) {
    for (long i = 0; i <= bound; ++i)
        for (long j = 0; i + j <= bound; ++j)
            for (long k = 0; i + j + k <= bound; ++k) {
                Monomial m;
                m[Var::X] = static_cast<std::uint32_t>(i);
                m[Var::Z] = static_cast<std::uint32_t>(j);
                m[Var::T] = static_cast<std::uint32_t>(k);
                fn(m);
            }
}

}  // namespace

void BoundedMembershipOracle::insert_reduced(SparseRow row) {
    while (!row.empty()) {
        auto lead = std::prev(row.end());
        auto pivot = rows_.find(lead->first);
        if (pivot == rows_.end()) {
            // normalize to a monic pivot row and keep it
            Rational inv_lc = 1 / lead->second;
            for (auto& [m, v] : row) v *= inv_lc;
            Monomial key = lead->first;
            rows_.emplace(key, std::move(row));
            return;
        }
        axpy(row, -lead->second, pivot->second);
    }
}

BoundedMembershipOracle::BoundedMembershipOracle(const ThreefoldParams& params, long degree_bound)
    : bound_(degree_bound) {
    MultiPoly fl = cusp_poly_power(params);
    MultiPoly gen2 = shifted_x(params);
    for (const MultiPoly& gen : {fl, gen2}) {
        SparseRow base = to_row(gen);
        for_each_monomial(bound_, [&](const Monomial& m) {
            SparseRow shifted;
            for (const auto& [mm, c] : base) shifted.emplace(mm * m, c);
            insert_reduced(std::move(shifted));
        });
    }
}

bool BoundedMembershipOracle::contains(const MultiPoly& q) const {
    SparseRow row = to_row(q);
    while (!row.empty()) {
        auto lead = std::prev(row.end());
        auto pivot = rows_.find(lead->first);
        if (pivot == rows_.end()) return false;
        axpy(row, -lead->second, pivot->second);
    }
    return true;
}

}  // namespace kr2
