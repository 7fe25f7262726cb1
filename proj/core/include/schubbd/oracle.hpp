#pragma once

#include <map>

#include "schubbd/polynomial.hpp"
#include "schubbd/weyl.hpp"

namespace schubbd {

// Ground-truth Schubert structure constants at small rank, via divided
// differences on polynomial representatives.  P_{w0} = (1/|W|) prod of
// the positive roots, P_w = (chain of BGG operators along a reduced
// word of w^{-1} w0) applied to P_{w0}, and
//   c_{u,v}^w = (the full chain for w) applied to P_u * P_v.
class BggOracle {
 public:
  BggOracle(LieType type, int rank);

  LieType lie_type() const { return roots_.type; }
  int rank() const { return roots_.rank; }
  const RootSystemData& roots() const { return roots_; }

  // Memoized; the cache is an implementation detail.
  const Polynomial& representative(const SignedPermutation& w);

  // c_{u,v}^w for l(u) + l(v) = l(w); throws LengthMismatch otherwise,
  // and NonIntegerResult if the computation does not land on a
  // nonnegative integer.
  long oracle_constant(const SignedPermutation& u, const SignedPermutation& v,
                       const SignedPermutation& w);

  // Applies the BGG chain for w to an arbitrary polynomial.
  Polynomial apply_chain(const SignedPermutation& w, Polynomial f) const;

  // Chevalley coefficients of P_{s_i} * P_w: for every reflection t with
  // l(w t) = l(w) + 1, the pairing <omega_i, alpha^vee>.  Computed from
  // root data alone, independently of the polynomial machinery.
  std::map<SignedPermutation, long> chevalley_coefficients(
      int i, const SignedPermutation& w) const;

 private:
  RootSystemData roots_;
  Polynomial top_;  // P_{w0}
  std::map<std::vector<int>, Polynomial> reps_;  // keyed by one-line images
};

}  // namespace schubbd
