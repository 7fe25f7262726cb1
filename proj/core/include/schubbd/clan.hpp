#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubbd/signed_permutation.hpp"

namespace schubbd {

struct ClanChar {
  enum class Kind { Plus, Minus, Number };
  Kind kind = Kind::Minus;
  int pair_id = 0;  // meaningful only for Kind::Number

  static ClanChar plus() { return {Kind::Plus, 0}; }
  static ClanChar minus() { return {Kind::Minus, 0}; }
  static ClanChar number(int id) { return {Kind::Number, id}; }

  bool is_sign() const { return kind != Kind::Number; }
  bool is_number() const { return kind == Kind::Number; }

  bool operator==(const ClanChar&) const = default;
};

// A (p,q)-clan: a string of +, - and paired numbers, equivalent up to
// renumbering the pairs.  Always held in normal form (pair ids relabeled
// 1,2,... by first occurrence), so structural equality is clan equality.
class Clan {
 public:
  Clan() = default;  // the empty clan

  // Relabels pair ids by first occurrence.  Throws UnmatchedNumber if
  // some id does not occur exactly twice.
  static Clan normalize(std::vector<ClanChar> chars);

  int size() const { return static_cast<int>(chars_.size()); }
  const std::vector<ClanChar>& chars() const { return chars_; }
  const ClanChar& at(int pos) const { return chars_[pos - 1]; }  // 1-based

  // Position of the other occurrence of the pair at `pos`.
  int mate(int pos) const;

  // (p, q) with p - q = #plus - #minus and p + q = size.
  std::pair<int, int> signature() const;

  int count_pairs() const;
  int mirror(int pos) const { return size() + 1 - pos; }

  bool is_symmetric() const;

  // Trapa's predicate: no number sits opposite its own mate.
  // Meaningful for symmetric clans.
  bool is_disconnected() const;

  bool operator==(const Clan&) const = default;
  bool operator<(const Clan& rhs) const { return key() < rhs.key(); }

  std::string to_string() const;  // e.g. "-,1,2,-,-,-,1,2,-"

 private:
  // Comparison key: one int per character (+ -> -1, - -> -2, id otherwise).
  std::vector<int> key() const;

  std::vector<ClanChar> chars_;
};

// Shape of a symmetric clan with p = 2.
enum class SymmetricShape {
  TwoPlus,            // two + signs at mirrored positions
  TwoPairs,           // two pairs of numbers
  MiddlePlusPair,     // one pair and a + in the middle slot (odd length only)
};

enum class PairPattern { P1122, P1212, P1221 };

struct SymmetricClass {
  SymmetricShape shape;
  std::optional<PairPattern> pattern;  // set iff shape == TwoPairs
};

// Classifies a symmetric clan of signature (2, q).  Throws
// NotClassifiable otherwise.
SymmetricClass classify_symmetric(const Clan& clan);

// All symmetric clans of the signature attached to rank n: (2, 2n-1)
// with 2n+1 characters in type B, (2, 2n-2) with 2n characters in type D.
// Sorted, duplicate-free.
std::vector<Clan> enumerate_symmetric_clans(int rank, LieType type);

std::string to_string(PairPattern p);
std::string to_string(SymmetricShape s);

}  // namespace schubbd
