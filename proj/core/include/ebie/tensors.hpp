#pragma once

#include <vector>

#include "ebie/kernels.hpp"
#include "ebie/linalg.hpp"

namespace ebie {

// Isotropic 4-tensors kept as coefficient-dyad lists: a multiple of the symmetric
// identity plus terms c (L (x) R) with L, R in {I, tau(x)tau, n(x)n}, applied to a
// symmetric strain as (L (x) R) E = (R : E) L. The frame (n, tau) is supplied at
// application time.
enum class DyadKind { identity, tautau, nn };

struct DyadTerm {
  double c;
  DyadKind left;
  DyadKind right;
};

struct IsoTensor4 {
  double c_sym = 0.0;  // coefficient on the symmetric identity (contributes c_sym * E)
  std::vector<DyadTerm> terms;
};

IsoTensor4 minus(const IsoTensor4& a, const IsoTensor4& b);

// Throws AsymmetricStrain when the strain is not symmetric.
Mat2 apply(const IsoTensor4& t, const Mat2& strain, const Vec2& n, const Vec2& tau);

// Hooke tensor: lambda I(x)I + 2mu Id.
IsoTensor4 build_C(const LamePair& p);

// Interface transfer tensors mapping one side's strain to the other side's
// tangential stress / normal gradient gap.
IsoTensor4 build_M(const LamePair& l, const LamePair& k);
IsoTensor4 build_K(const LamePair& l, const LamePair& k);

// The two equivalent exterior-trace perturbation tensors (five-coefficient forms).
IsoTensor4 build_S(const LamePair& bg, const LamePair& inc);
IsoTensor4 build_M_LY(const LamePair& bg, const LamePair& inc);

// Max entry difference of the two forms applied to a symmetric basis in a fixed frame.
double check_S_equals_M(const LamePair& bg, const LamePair& inc);

}  // namespace ebie
