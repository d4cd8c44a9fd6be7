#pragma once

#include "kr2/params.hpp"

namespace kr2 {

/// Independent decider for bounded-degree membership in I = (f^l, x + t^a3):
/// does Q equal A f^l + B (x + t^a3) with deg A, deg B <= bound?
///
/// This is a finite linear system over Q in the unknown coefficients of A
/// and B. The constructor row-reduces the generator family
///   { f^l m, (x + t^a3) m : deg m <= bound }
/// into an echelon basis keyed by leading monomial; a query is one more
/// reduction, landing at zero exactly for members. No polynomial division or
/// substitution is involved, so it cross-checks ideal_I_membership through a
/// different route. Because the two generators form a Groebner basis for the
/// graded order, bound >= deg Q decides true membership.
class BoundedMembershipOracle {
public:
    BoundedMembershipOracle(const ThreefoldParams& params, long degree_bound);

    /// pre: q has rational coefficients and no y
    bool contains(const MultiPoly& q) const;

    long degree_bound() const { return bound_; }

private:
    using SparseRow = std::map<Monomial, Rational, GrlexLess>;
    void insert_reduced(SparseRow row);

    long bound_;
    // echelon rows, keyed (and owned) by their leading monomial, monic
    std::map<Monomial, SparseRow, GrlexLess> rows_;
};

}  // namespace kr2
