#pragma once

// Small dense matrices over Fq and over Fq[x], used by oracles and certificates.

#include <vector>

#include "sylvres/upoly.hpp"

namespace sylvres {

using ScalarMatrix = std::vector<std::vector<Fq>>;
using PolyMatrix = std::vector<std::vector<UPoly>>;

Fq determinant(const FieldCtx& F, ScalarMatrix M);
std::size_t rank(const FieldCtx& F, ScalarMatrix M);
/// Throws std::domain_error if M is singular.
ScalarMatrix inverse(const FieldCtx& F, ScalarMatrix M);
std::vector<Fq> apply(const FieldCtx& F, const ScalarMatrix& M, const std::vector<Fq>& v);
ScalarMatrix transpose(const ScalarMatrix& M);

/// Entry-wise evaluation at x0.
ScalarMatrix evaluate(const PolyMatrix& M, Fq x0);

}  // namespace sylvres
