#include "schubbd/richardson.hpp"

namespace schubbd {

PairClassification classify_pair(const SignedPermutation& u,
                                 const SignedPermutation& v) {
  if (u.rank() != v.rank() || u.lie_type() != v.lie_type())
    throw TypeMismatch("pair across different groups");
  if (!is_coset_max_rep(u) || !is_coset_min_rep(v))
    throw NotCosetRepresentatives(
        "expected a maximal-length u and a minimal-length v");
  const int n = u.rank();
  const int vp = v.position_of(1);
  const int up = u.position_of(1);
  if (v(vp) < 0)
    throw NegativeVNotSupported("the rule is defined for positive v only");
  if (u(up) > 0) {
    if (up < vp) throw IncomparablePair("u < v fails: 1 in u left of 1 in v");
    return {up == vp ? PairCase::C1_both_pos_equal : PairCase::C2_both_pos_i_lt_j,
            vp, up};
  }
  if (vp != up) return {PairCase::C3_pos_neg_distinct, vp, up};
  if (up < n) return {PairCase::C4_pos_neg_equal_lt_n, vp, up};
  if (u.lie_type() == LieType::D)
    throw TypeDCase5Excluded(
        "v^{-1}(1) = u^{-1}(1bar) = n is incomparable in type D");
  return {PairCase::C5_pos_neg_equal_n, vp, up};
}

Clan gamma_of_pair(const SignedPermutation& u, const SignedPermutation& v) {
  const PairClassification pc = classify_pair(u, v);
  const int n = u.rank();
  const int len = u.lie_type() == LieType::B ? 2 * n + 1 : 2 * n;
  const auto m = [len](int p) { return len + 1 - p; };
  std::vector<ClanChar> chars(len, ClanChar::minus());
  const auto one = ClanChar::number(1);
  const auto two = ClanChar::number(2);
  switch (pc.case_id) {
    case PairCase::C1_both_pos_equal:
      chars[pc.i - 1] = ClanChar::plus();
      chars[m(pc.i) - 1] = ClanChar::plus();
      break;
    case PairCase::C2_both_pos_i_lt_j:
      // pattern (1,1,2,2) on (i, j, m(j), m(i))
      chars[pc.i - 1] = one;
      chars[pc.j - 1] = one;
      chars[m(pc.j) - 1] = two;
      chars[m(pc.i) - 1] = two;
      break;
    case PairCase::C3_pos_neg_distinct:
      // pattern (1,2,1,2) on (i, j, m(j), m(i))
      chars[pc.i - 1] = one;
      chars[pc.j - 1] = two;
      chars[m(pc.j) - 1] = one;
      chars[m(pc.i) - 1] = two;
      break;
    case PairCase::C4_pos_neg_equal_lt_n:
      // pattern (1,2,2,1) on (i, i+1, m(i+1), m(i))
      chars[pc.i - 1] = one;
      chars[pc.i] = two;
      chars[m(pc.i + 1) - 1] = two;
      chars[m(pc.i) - 1] = one;
      break;
    case PairCase::C5_pos_neg_equal_n:
      chars[n - 1] = one;
      chars[n + 1] = one;
      chars[n] = ClanChar::plus();
      break;
  }
  return Clan::normalize(std::move(chars));
}

Clan target_clan(int rank, LieType type) {
  if (rank < 2) throw InvalidPosition("rank must be at least 2");
  const int len = type == LieType::B ? 2 * rank + 1 : 2 * rank;
  std::vector<ClanChar> chars(len, ClanChar::minus());
  chars[0] = ClanChar::number(1);
  chars[1] = ClanChar::number(2);
  chars[len - 2] = ClanChar::number(2);
  chars[len - 1] = ClanChar::number(1);
  return Clan::normalize(std::move(chars));
}

namespace {

int expected_degree(const SignedPermutation& u, const SignedPermutation& v) {
  const auto w0 =
      SignedPermutation::longest_element(u.rank(), u.lie_type());
  return (w0 * u).length() + v.length();
}

int score(const WordActionResult& acted, const Clan& goal, LieType type) {
  if (acted.result != goal) return 0;
  if (type == LieType::B && acted.rule7_fired) return 2;
  return 1;
}

}  // namespace

ConstantResult structure_constant_for_word(const SignedPermutation& u,
                                           const SignedPermutation& v,
                                           const Word& word) {
  const Clan gamma = gamma_of_pair(u, v);
  const LieType type = u.lie_type();
  const auto w = evaluate_word(word, u.rank(), type);
  if (static_cast<int>(word.letters.size()) != w.length())
    throw ParseError("word is not reduced");
  ConstantResult res;
  if (w.length() != expected_degree(u, v)) {
    res.length_mismatch = true;
    return res;
  }
  res.action = act_word(word, gamma, type);
  res.value = score(res.action, target_clan(u.rank(), type), type);
  return res;
}

ConstantResult structure_constant(const SignedPermutation& u,
                                  const SignedPermutation& v,
                                  const SignedPermutation& w) {
  return structure_constant_for_word(u, v, reduced_word(w));
}

ExpansionResult expand_richardson_class(const SignedPermutation& u,
                                        const SignedPermutation& v) {
  const Clan gamma = gamma_of_pair(u, v);
  const LieType type = u.lie_type();
  const Clan goal = target_clan(u.rank(), type);
  ExpansionResult res;
  res.degree = expected_degree(u, v);
  for (const auto& w : elements_of_length(u.rank(), type, res.degree)) {
    const Word word = reduced_word(w);
    const auto acted = act_word(word, gamma, type);
    res.entries.push_back(
        {w, word, acted.result, score(acted, goal, type), acted.rule7_fired});
  }
  return res;
}

}  // namespace schubbd
