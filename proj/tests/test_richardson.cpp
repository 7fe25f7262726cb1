#include <doctest.h>

#include <map>
#include <set>

#include "schubbd/richardson.hpp"
#include "schubbd/tables.hpp"
#include "schubbd/text.hpp"

using namespace schubbd;

namespace {

Clan gamma_b4(const char* u, const char* v) {
  return gamma_of_pair(parse_signed_perm(u, 4, LieType::B),
                       parse_signed_perm(v, 4, LieType::B));
}

}  // namespace

TEST_CASE("associated clans for the worked type B pairs") {
  CHECK(gamma_b4("-2,1,-3,-4", "2,1,3,4") == parse_clan("-,+,-,-,-,-,-,+,-"));
  CHECK(gamma_b4("-2,-3,1,-4", "2,1,3,4") == parse_clan("-,1,1,-,-,-,2,2,-"));
  CHECK(gamma_b4("-2,-3,-1,-4", "2,1,3,4") == parse_clan("-,1,2,-,-,-,1,2,-"));
  CHECK(gamma_b4("-2,-1,-3,-4", "2,1,3,4") == parse_clan("-,1,2,-,-,-,2,1,-"));
  CHECK(gamma_b4("-2,-3,-4,-1", "2,3,4,1") == parse_clan("-,-,-,1,+,1,-,-,-"));
}

TEST_CASE("associated clans for the shipped products") {
  CHECK(gamma_b4("-2,-3,-4,1", "2,3,4,1") ==
        parse_clan("-,-,-,+,-,+,-,-,-"));
  CHECK(gamma_of_pair(parse_signed_perm("-2,-3,4,1", 4, LieType::D),
                      parse_signed_perm("2,3,1,4", 4, LieType::D)) ==
        parse_clan("-,-,1,1,2,2,-,-"));
}

TEST_CASE("pair classification on the worked pairs") {
  auto cls = [](const char* u, const char* v) {
    return classify_pair(parse_signed_perm(u, 4, LieType::B),
                         parse_signed_perm(v, 4, LieType::B));
  };
  CHECK(cls("-2,1,-3,-4", "2,1,3,4").case_id == PairCase::C1_both_pos_equal);
  CHECK(cls("-2,-3,1,-4", "2,1,3,4").case_id == PairCase::C2_both_pos_i_lt_j);
  CHECK(cls("-2,-3,-1,-4", "2,1,3,4").case_id == PairCase::C3_pos_neg_distinct);
  CHECK(cls("-2,-1,-3,-4", "2,1,3,4").case_id ==
        PairCase::C4_pos_neg_equal_lt_n);
  auto c5 = cls("-2,-3,-4,-1", "2,3,4,1");
  CHECK(c5.case_id == PairCase::C5_pos_neg_equal_n);
  CHECK(c5.i == 4);
  CHECK(c5.j == 4);
}

TEST_CASE("classification errors") {
  // The final-position equal case is excluded in type D: such a pair is
  // incomparable there.
  CHECK_THROWS_AS(
      classify_pair(parse_signed_perm("-2,-3,-4,-1", 4, LieType::D),
                    parse_signed_perm("2,3,4,1", 4, LieType::D)),
      TypeDCase5Excluded);
  // Negative v is out of the rule's scope.
  CHECK_THROWS_AS(
      classify_pair(parse_signed_perm("-2,-3,-4,1", 4, LieType::B),
                    parse_signed_perm("2,3,4,-1", 4, LieType::B)),
      NegativeVNotSupported);
  // Not representatives at all.
  CHECK_THROWS_AS(
      classify_pair(parse_signed_perm("1,2,3,4", 4, LieType::B),
                    parse_signed_perm("2,3,4,1", 4, LieType::B)),
      NotCosetRepresentatives);
}

TEST_CASE("classification agrees with comparability and connectedness") {
  for (LieType type : {LieType::B, LieType::D}) {
    for (int n = 2; n <= 4; ++n) {
      for (const auto& du : all_coset_descriptors(n)) {
        auto u = coset_max_rep(du, n, type);
        for (const auto& dv : all_coset_descriptors(n)) {
          if (dv.sign != CosetDescriptor::Sign::positive) continue;
          auto v = coset_min_rep(dv, n, type);
          if (!lemma_comparable(u, v)) {
            bool excluded_d_case = type == LieType::D &&
                                   du.sign == CosetDescriptor::Sign::negative &&
                                   du.position == n && dv.position == n;
            if (excluded_d_case)
              CHECK_THROWS_AS(classify_pair(u, v), TypeDCase5Excluded);
            else
              CHECK_THROWS_AS(classify_pair(u, v), IncomparablePair);
            continue;
          }
          auto cls = classify_pair(u, v);
          auto gamma = gamma_of_pair(u, v);
          CHECK(gamma.is_symmetric());
          CHECK(gamma.signature().first == 2);
          bool split_case = cls.case_id == PairCase::C1_both_pos_equal ||
                            cls.case_id == PairCase::C2_both_pos_i_lt_j ||
                            cls.case_id == PairCase::C3_pos_neg_distinct;
          CHECK(gamma.is_disconnected() == split_case);
        }
      }
    }
  }
}

TEST_CASE("preimage counts of the associated clans") {
  // Within the positive-v sweep, only the alternating two-pair shape
  // has a second preimage (the roles of the two marked positions can
  // swap); the partner pair for the other split shapes has negative v
  // and falls outside the rule's scope.
  for (LieType type : {LieType::B, LieType::D}) {
    int n = 3;
    std::map<Clan, int> hits;
    for (const auto& du : all_coset_descriptors(n)) {
      auto u = coset_max_rep(du, n, type);
      for (const auto& dv : all_coset_descriptors(n)) {
        if (dv.sign != CosetDescriptor::Sign::positive) continue;
        auto v = coset_min_rep(dv, n, type);
        if (!lemma_comparable(u, v)) continue;
        ++hits[gamma_of_pair(u, v)];
      }
    }
    for (const auto& [clan, count] : hits) {
      auto cls = classify_symmetric(clan);
      bool alternating = cls.shape == SymmetricShape::TwoPairs &&
                         cls.pattern == PairPattern::P1212;
      CHECK(count == (alternating ? 2 : 1));
    }
  }
}

TEST_CASE("dense-orbit clan") {
  CHECK(target_clan(4, LieType::B) == parse_clan("1,2,-,-,-,-,-,2,1"));
  CHECK(target_clan(4, LieType::D) == parse_clan("1,2,-,-,-,-,2,1"));
  CHECK_FALSE(target_clan(3, LieType::B).is_disconnected());
}

TEST_CASE("structure constants of the shipped products") {
  auto u1 = parse_signed_perm("-2,-3,-4,1", 4, LieType::B);
  auto v1 = parse_signed_perm("2,3,4,1", 4, LieType::B);

  auto one = structure_constant(
      u1, v1, evaluate_word(parse_word("[1, 2, 1, 3, 2, 4, 3]", 4), 4,
                            LieType::B));
  CHECK(one.value == 1);
  CHECK_FALSE(one.length_mismatch);
  CHECK_FALSE(one.action.rule7_fired);

  auto two = structure_constant(
      u1, v1, evaluate_word(parse_word("[2, 1, 3, 2, 4, 3, 4]", 4), 4,
                            LieType::B));
  CHECK(two.value == 2);
  CHECK(two.action.rule7_fired);

  auto zero = structure_constant(
      u1, v1, evaluate_word(parse_word("[1, 2, 1, 4, 3, 2, 1]", 4), 4,
                            LieType::B));
  CHECK(zero.value == 0);

  auto short_w = SignedPermutation::simple_reflection(1, 4, LieType::B);
  auto mismatch = structure_constant(u1, v1, short_w);
  CHECK(mismatch.value == 0);
  CHECK(mismatch.length_mismatch);

  auto u2 = parse_signed_perm("-2,-3,4,1", 4, LieType::D);
  auto v2 = parse_signed_perm("2,3,1,4", 4, LieType::D);
  auto d_one = structure_constant(
      u2, v2, evaluate_word(parse_word("[1, 2, 1, 4, 2]", 4), 4, LieType::D));
  CHECK(d_one.value == 1);
}

TEST_CASE("full expansions match the embedded reference tables") {
  for (int which : {1, 2}) {
    const auto& table = reference_table(which);
    auto u = parse_signed_perm(table.u, table.rank, table.type);
    auto v = parse_signed_perm(table.v, table.rank, table.type);
    auto expansion = expand_richardson_class(u, v);
    REQUIRE(expansion.entries.size() == table.rows.size());
    // Rows are keyed by the group element; the word spellings differ.
    std::map<std::vector<int>, std::pair<std::string, int>> expected;
    for (const auto& row : table.rows) {
      auto w = evaluate_word(parse_word(row.word, table.rank), table.rank,
                             table.type);
      expected[w.images()] = {row.clan, row.coefficient};
    }
    REQUIRE(expected.size() == table.rows.size());
    for (const auto& entry : expansion.entries) {
      auto it = expected.find(entry.w.images());
      REQUIRE(it != expected.end());
      CHECK(format_clan_parens(entry.acted) == it->second.first);
      CHECK(entry.coefficient == it->second.second);
      CHECK(entry.w.length() == expansion.degree);
      CHECK(evaluate_word(entry.word, table.rank, table.type) == entry.w);
    }
  }
}

TEST_CASE("coefficient values stay in range by type") {
  auto u = parse_signed_perm("-2,-3,4,1", 4, LieType::D);
  auto v = parse_signed_perm("2,3,1,4", 4, LieType::D);
  for (const auto& entry : expand_richardson_class(u, v).entries) {
    CHECK(entry.coefficient >= 0);
    CHECK(entry.coefficient <= 1);
    CHECK_FALSE(entry.rule7_fired);
  }
}
