#include "schubbd/action.hpp"

#include <algorithm>
#include <utility>

namespace schubbd {

std::string to_string(ActionRule r) {
  switch (r) {
    case ActionRule::Fixed: return "fixed";
    case ActionRule::B1: return "B1";
    case ActionRule::B2: return "B2";
    case ActionRule::B3: return "B3";
    case ActionRule::B4: return "B4";
    case ActionRule::B5: return "B5";
    case ActionRule::B6: return "B6";
    case ActionRule::B7: return "B7";
    case ActionRule::D1: return "D1";
    case ActionRule::D2: return "D2";
    case ActionRule::D3: return "D3";
    case ActionRule::D4: return "D4";
    case ActionRule::D5: return "D5";
  }
  return {};
}

namespace {

int rank_of_clan(const Clan& clan, LieType type) {
  const int len = clan.size();
  int n;
  if (type == LieType::B) {
    if (len % 2 == 0) throw WrongSignature("type B clan length must be odd");
    n = (len - 1) / 2;
  } else {
    if (len % 2 != 0) throw WrongSignature("type D clan length must be even");
    n = len / 2;
  }
  if (n < 2 || clan.signature().first != 2)
    throw WrongSignature("expected a (2, q)-clan of rank >= 2");
  return n;
}

// Fresh ids beyond any existing label; normalize() erases them again.
constexpr int kFreshA = 1001;
constexpr int kFreshB = 1002;

ActionOutcome outcome(std::vector<ClanChar> chars, ActionRule rule) {
  return {Clan::normalize(std::move(chars)), rule, rule == ActionRule::B7};
}

ActionOutcome fixed(const Clan& clan) {
  return {clan, ActionRule::Fixed, false};
}

// Rules for s_i, i < n, shared by both types.  Positions are 1-based;
// m(p) = len + 1 - p.
ActionOutcome act_low(int i, const Clan& clan, bool type_b) {
  const int len = clan.size();
  const auto m = [len](int p) { return len + 1 - p; };
  const ClanChar a = clan.at(i);
  const ClanChar b = clan.at(i + 1);
  std::vector<ClanChar> chars = clan.chars();

  if (a.is_sign() && b.is_sign() && a != b) {
    // (1): two new pairs, one in the window and one in its mirror.
    chars[i - 1] = ClanChar::number(kFreshA);
    chars[i] = ClanChar::number(kFreshA);
    chars[m(i + 1) - 1] = ClanChar::number(kFreshB);
    chars[m(i) - 1] = ClanChar::number(kFreshB);
    return outcome(std::move(chars), type_b ? ActionRule::B1 : ActionRule::D1);
  }
  const auto swap_both = [&](ActionRule rule) {
    std::swap(chars[i - 1], chars[i]);
    std::swap(chars[m(i + 1) - 1], chars[m(i) - 1]);
    return outcome(std::move(chars), rule);
  };
  if (a.is_sign() && b.is_number() && clan.mate(i + 1) > i + 1)
    return swap_both(type_b ? ActionRule::B2 : ActionRule::D2);
  if (a.is_number() && b.is_sign() && clan.mate(i) < i)
    return swap_both(type_b ? ActionRule::B3 : ActionRule::D3);
  if (a.is_number() && b.is_number() && a != b &&
      clan.mate(i) == m(i + 1) && clan.mate(i + 1) == m(i)) {
    // (4): interchange the window but not its mirror.
    std::swap(chars[i - 1], chars[i]);
    return outcome(std::move(chars), type_b ? ActionRule::B4 : ActionRule::D4);
  }
  return fixed(clan);
}

ActionOutcome act_top_b(int n, const Clan& clan) {
  std::vector<ClanChar> chars = clan.chars();
  const ClanChar a = clan.at(n);
  const ClanChar mid = clan.at(n + 1);
  const ClanChar b = clan.at(n + 2);
  if (a.is_number() && b.is_number() && a != b &&
      clan.mate(n) < clan.mate(n + 2)) {
    std::swap(chars[n - 1], chars[n + 1]);
    return outcome(std::move(chars), ActionRule::B5);
  }
  const bool plus_minus_plus = a.kind == ClanChar::Kind::Plus &&
                               mid.kind == ClanChar::Kind::Minus &&
                               b.kind == ClanChar::Kind::Plus;
  const bool minus_plus_minus = a.kind == ClanChar::Kind::Minus &&
                                mid.kind == ClanChar::Kind::Plus &&
                                b.kind == ClanChar::Kind::Minus;
  if (plus_minus_plus || minus_plus_minus) {
    chars[n - 1] = ClanChar::number(kFreshA);
    chars[n + 1] = ClanChar::number(kFreshA);
    chars[n] = plus_minus_plus ? ClanChar::plus() : ClanChar::minus();
    return outcome(std::move(chars),
                   plus_minus_plus ? ActionRule::B6 : ActionRule::B7);
  }
  return fixed(clan);
}

ActionOutcome act_top_d(int n, const Clan& clan) {
  std::vector<ClanChar> chars = clan.chars();
  const ClanChar c1 = clan.at(n - 1);
  const ClanChar c2 = clan.at(n);
  const ClanChar c3 = clan.at(n + 1);
  const ClanChar c4 = clan.at(n + 2);
  const auto interchange = [&](ActionRule rule) {
    std::swap(chars[n - 2], chars[n]);   // (c_{n-1}, c_{n+1})
    std::swap(chars[n - 1], chars[n + 1]);  // (c_n, c_{n+2})
    return outcome(std::move(chars), rule);
  };
  // (1) window (sign, 1, 1, sign)
  if (c1.is_sign() && c4.is_sign() && c2.is_number() && c2 == c3)
    return interchange(ActionRule::D1);
  // (2) window (sign, 1, 2, sign) with the inner mates straddling it
  if (c1.is_sign() && c4.is_sign() && c2.is_number() && c3.is_number() &&
      c2 != c3 && clan.mate(n) < n - 1 && clan.mate(n + 1) > n + 2)
    return interchange(ActionRule::D2);
  // (3) window (1, sign, sign, 2) with the outer mates straddling it
  if (c1.is_number() && c4.is_number() && c1 != c4 && c2.is_sign() &&
      c3.is_sign() && clan.mate(n - 1) < n - 1 && clan.mate(n + 2) > n + 2)
    return interchange(ActionRule::D3);
  // (4) window (+,-,-,+) or (-,+,+,-) becomes (1,2,1,2)
  const bool pmmp = c1.kind == ClanChar::Kind::Plus &&
                    c2.kind == ClanChar::Kind::Minus &&
                    c3.kind == ClanChar::Kind::Minus &&
                    c4.kind == ClanChar::Kind::Plus;
  const bool mppm = c1.kind == ClanChar::Kind::Minus &&
                    c2.kind == ClanChar::Kind::Plus &&
                    c3.kind == ClanChar::Kind::Plus &&
                    c4.kind == ClanChar::Kind::Minus;
  if (pmmp || mppm) {
    chars[n - 2] = ClanChar::number(kFreshA);
    chars[n - 1] = ClanChar::number(kFreshB);
    chars[n] = ClanChar::number(kFreshA);
    chars[n + 1] = ClanChar::number(kFreshB);
    return outcome(std::move(chars), ActionRule::D4);
  }
  // (5) window (1,1,2,2) becomes (1,2,2,1)
  if (c1.is_number() && c3.is_number() && c1 == c2 && c3 == c4 && c1 != c3) {
    chars[n - 2] = ClanChar::number(kFreshA);
    chars[n - 1] = ClanChar::number(kFreshB);
    chars[n] = ClanChar::number(kFreshB);
    chars[n + 1] = ClanChar::number(kFreshA);
    return outcome(std::move(chars), ActionRule::D5);
  }
  return fixed(clan);
}

}  // namespace

ActionOutcome act_simple(int i, const Clan& clan, LieType type) {
  const int n = rank_of_clan(clan, type);
  if (!clan.is_symmetric()) throw NotSymmetric("clan is not symmetric");
  if (i < 1 || i > n) throw InvalidPosition("reflection index out of range");
  if (i < n) return act_low(i, clan, type == LieType::B);
  if (type == LieType::B) return act_top_b(n, clan);
  return act_top_d(n, clan);
}

WordActionResult act_word(const Word& word, const Clan& clan, LieType type) {
  WordActionResult res;
  res.result = clan;
  res.trace.reserve(word.letters.size());
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    ActionOutcome step = act_simple(*it, res.result, type);
    if (step.rule7_fired) {
      res.rule7_fired = true;
      ++res.rule7_count;
    }
    res.result = step.result;
    res.trace.push_back({*it, step.rule, step.result});
  }
  return res;
}

}  // namespace schubbd
