#pragma once

#include "b3/pbwalg.hpp"

namespace b3 {

/// The nine deformation parameters, one per positive root, as polynomials
/// in the mu indeterminates.  Construction enforces the mask: mu_alpha is
/// identically zero whenever g_alpha^N = 1 or chi_alpha^N != epsilon.
class MuFamily {
  public:
    /// mu_alpha = its own indeterminate wherever the mask allows.
    static MuFamily symbolic(const Datum& d);
    /// All parameters zero (recovers the Nichols algebra).
    static MuFamily zero();
    /// Fixed scalar values; throws InvalidArgument on a masked entry
    /// receiving a nonzero value.
    static MuFamily constants(const Datum& d, const std::array<CycScalar, kNumRoots>& values);

    const MuScalar& operator[](Root r) const { return mu_[static_cast<size_t>(r)]; }

  private:
    std::array<MuScalar, kNumRoots> mu_;
};

/// The four auxiliary scalars entering the degree-5 deformation.
struct LambdaScalars {
    MuScalar lt31;  // xi2^N mu2
    MuScalar l31;   // 2 xi1^N (xi2^N mu2 mu3 - mu32)
    MuScalar l21;   // xi2^N (xi1^N xi2^N mu2 mu3^2 - 2 xi1^N mu3 mu32 + mut32)
    MuScalar l1;    // xi2^N (xi2^N mu2 mut32 - xi1^N mu32^2)
};

LambdaScalars lambda_scalars(const Datum& d, const MuFamily& mu);

/// [a,b]_c in the given system; both arguments Z^3-homogeneous.
AlgElement braided_commutator(const AlgElement& a, const AlgElement& b, const RewriteSystem& rs);

/// Closed-form right side of y_alpha^N: a combination of g_beta^N - 1
/// with polynomial mu coefficients.
AlgElement u_alpha(Root alpha, const MuFamily& mu, const Datum& d);

struct RecursionIssue {
    std::string root;
    std::string detail;
};

/// Substitutes the recursive deformation relations into each other and
/// compares with the closed forms, as identities in symbolic mu.
std::vector<RecursionIssue> expand_recursion_check(const Datum& d);

/// Rewrite system for A(Gamma, V, mu): power rules y_alpha^N -> u_alpha.
RewriteSystem build_lifting(const Datum& d, const MuFamily& mu);

}  // namespace b3
