#pragma once

#include <string>
#include <vector>

#include "schubbd/clan.hpp"

namespace schubbd {

enum class ActionRule {
  Fixed,
  B1, B2, B3, B4, B5, B6, B7,
  D1, D2, D3, D4, D5,
};

std::string to_string(ActionRule r);

struct ActionOutcome {
  Clan result;
  ActionRule rule = ActionRule::Fixed;
  bool rule7_fired = false;  // true iff rule == ActionRule::B7
};

// Action of the simple reflection s_i on a symmetric clan.  The clan
// must have signature (2, 2n-1) and 2n+1 characters (type B) or
// (2, 2n-2) and 2n characters (type D); 1 <= i <= n.
ActionOutcome act_simple(int i, const Clan& clan, LieType type);

struct ActionTraceStep {
  int letter = 0;
  ActionRule rule = ActionRule::Fixed;
  Clan after;
};

struct WordActionResult {
  Clan result;
  std::vector<ActionTraceStep> trace;  // in application order
  bool rule7_fired = false;
  int rule7_count = 0;
};

// Applies the letters right to left: [a_1,...,a_k] computes
// s_{a_1} . (s_{a_2} . ( ... (s_{a_k} . clan))).
WordActionResult act_word(const Word& word, const Clan& clan, LieType type);

}  // namespace schubbd
