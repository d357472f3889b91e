#pragma once

#include "sylvres/bipoly.hpp"

namespace sylvres::testing {

// Characteristic 2: a = (x+1)y + x^2, b = (x+1)y^2 + y.
inline IdealBasis example1(const FieldPtr& F) {
    return IdealBasis(BiPoly::from_ints(F, {{1, 1, 1}, {1, 0, 1}, {1, 2, 0}}),
                      BiPoly::from_ints(F, {{1, 1, 2}, {1, 0, 2}, {1, 0, 1}}));
}

// a = x^2 y + y, b = x y^2 + x.
inline IdealBasis example2(const FieldPtr& F) {
    return IdealBasis(BiPoly::from_ints(F, {{1, 2, 1}, {1, 0, 1}}), BiPoly::from_ints(F, {{1, 1, 2}, {1, 1, 0}}));
}

// Characteristic 7: a = (x+3)y + x^2+5x+5, b = (x+3)(x+4)y + x^2+4x+2.
inline IdealBasis example3(const FieldPtr& F) {
    return IdealBasis(BiPoly::from_ints(F, {{1, 1, 1}, {3, 0, 1}, {1, 2, 0}, {5, 1, 0}, {5, 0, 0}}),
                      BiPoly::from_ints(F, {{1, 2, 1}, {7, 1, 1}, {12, 0, 1}, {1, 2, 0}, {4, 1, 0}, {2, 0, 0}}));
}

/// x^2 (x+1)^3 over characteristic 2.
inline UPoly example1_resultant(const FieldPtr& F) { return UPoly::from_ints(F, {0, 0, 1, 1, 1, 1}); }

}  // namespace sylvres::testing
