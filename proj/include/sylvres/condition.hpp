#pragma once

// Random shifts and reversals that make both Sylvester matrices column
// reduced, and recovery of the last invariant factor of the original S_y.

#include <utility>

#include "sylvres/bipoly.hpp"

namespace sylvres {

struct ConditioningRecord {
    Fq alpha{0};  ///< y-shift
    Fq beta{0};   ///< x-shift
    int ea = 0, eb = 0;  ///< y-reversal degrees
    int da = 0, db = 0;  ///< x-reversal degrees
    bool y_stage = false;
    bool x_stage = false;
};

/// a'(x, y) = y^{e_a} a(x, 1/y + alpha), same for b with e_b.
IdealBasis condition_for_Sx(const IdealBasis& I, Fq alpha);
/// condition_for_Sx, then a''(x, y) = x^{d_a} a'(1/x + beta, y), same for b with d_b.
std::pair<IdealBasis, ConditioningRecord> condition_for_both(const IdealBasis& I, Fq alpha, Fq beta);

/// True when the conditioned basis kept the degrees of the original.
bool same_degrees(const IdealBasis& I, const IdealBasis& J);

/// Strips the power of x, reverses, shifts by -beta and makes monic (only the
/// monic step when the x-stage was not applied). Throws std::invalid_argument on zero.
UPoly recover_last_invariant(const UPoly& sigma, const ConditioningRecord& rec);

}  // namespace sylvres
