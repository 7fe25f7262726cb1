#pragma once

#include <optional>
#include <vector>

#include "schubbd/signed_permutation.hpp"

namespace schubbd {

// All group elements in lexicographic one-line order.
std::vector<SignedPermutation> all_elements(int rank, LieType type);

// All elements of the given Coxeter length, lexicographic order.
std::vector<SignedPermutation> elements_of_length(int rank, LieType type,
                                                  int length);

// Bruhat order, decided by the lifting property along any left descent
// of b: a <= b iff min(a, s a) <= s b.
bool bruhat_leq(const SignedPermutation& a, const SignedPermutation& b);

// A left coset of W_P \ W, with P omitting alpha_1 = x_1 - x_2, is cut
// out by the position of 1 or 1bar in one-line notation.
struct CosetDescriptor {
  enum class Sign { positive, negative };
  Sign sign = Sign::positive;
  int position = 1;

  bool operator==(const CosetDescriptor&) const = default;
};

SignedPermutation coset_min_rep(const CosetDescriptor& desc, int rank,
                                LieType type);
SignedPermutation coset_max_rep(const CosetDescriptor& desc, int rank,
                                LieType type);

// Descriptor of the coset containing w.
CosetDescriptor coset_of(const SignedPermutation& w);

bool is_coset_min_rep(const SignedPermutation& w);
bool is_coset_max_rep(const SignedPermutation& w);

// All 2n coset descriptors, negative-then-positive within each position.
std::vector<CosetDescriptor> all_coset_descriptors(int rank);

// Closed-form comparability test for a maximal-length representative u
// against a minimal-length representative v.  Equivalent to
// bruhat_leq(v, u); the equivalence is what the test suite checks.
bool lemma_comparable(const SignedPermutation& u, const SignedPermutation& v);

}  // namespace schubbd
