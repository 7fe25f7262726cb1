#pragma once

#include <vector>

#include "schubbd/action.hpp"
#include "schubbd/clan.hpp"
#include "schubbd/weyl.hpp"

namespace schubbd {

enum class PairCase {
  C1_both_pos_equal,
  C2_both_pos_i_lt_j,
  C3_pos_neg_distinct,
  C4_pos_neg_equal_lt_n,
  C5_pos_neg_equal_n,  // type B only
};

struct PairClassification {
  PairCase case_id;
  int i = 0;  // v^{-1}(1)
  int j = 0;  // u^{-1}(1) or u^{-1}(1bar)
};

// Classifies a valid (max-rep u, min-rep v) pair with v positive.
// Throws NegativeVNotSupported, IncomparablePair, TypeDCase5Excluded or
// NotCosetRepresentatives.
PairClassification classify_pair(const SignedPermutation& u,
                                 const SignedPermutation& v);

// The clan of the L-orbit whose closure is the Richardson variety X_u^v.
Clan gamma_of_pair(const SignedPermutation& u, const SignedPermutation& v);

// The dense-orbit clan gamma_0 = (1,2,-,...,-,2,1).
Clan target_clan(int rank, LieType type);

struct ConstantResult {
  int value = 0;
  bool length_mismatch = false;  // l(w) != l(w0 u) + l(v); value forced to 0
  WordActionResult action;       // empty when length_mismatch
};

// The conjectural constant c_{w0 u, v}^w: act by a reduced word of w on
// gamma(u, v) and compare with gamma_0.  Type B scores 2 when the type-B
// rule (7) fired along the way; type D scores at most 1.
ConstantResult structure_constant(const SignedPermutation& u,
                                  const SignedPermutation& v,
                                  const SignedPermutation& w);

// Same, with the word supplied by the caller (must be reduced).
ConstantResult structure_constant_for_word(const SignedPermutation& u,
                                           const SignedPermutation& v,
                                           const Word& word);

struct ExpansionEntry {
  SignedPermutation w;
  Word word;  // canonical reduced word of w
  Clan acted;
  int coefficient = 0;
  bool rule7_fired = false;
};

struct ExpansionResult {
  int degree = 0;  // l(w0 u) + l(v)
  std::vector<ExpansionEntry> entries;  // all w of the stated length
};

// Full conjectural expansion of [X_u^v] over w of the appropriate length.
ExpansionResult expand_richardson_class(const SignedPermutation& u,
                                        const SignedPermutation& v);

}  // namespace schubbd
