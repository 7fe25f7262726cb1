#include "schubbd/clan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace schubbd {

Clan Clan::normalize(std::vector<ClanChar> chars) {
  std::map<int, std::vector<int>> occurrences;
  for (int pos = 1; pos <= static_cast<int>(chars.size()); ++pos)
    if (chars[pos - 1].is_number())
      occurrences[chars[pos - 1].pair_id].push_back(pos);
  for (const auto& [id, positions] : occurrences)
    if (positions.size() != 2)
      throw UnmatchedNumber("pair id " + std::to_string(id) +
                            " occurs " + std::to_string(positions.size()) +
                            " times");
  std::map<int, int> relabel;
  for (auto& c : chars) {
    if (!c.is_number()) continue;
    auto [it, inserted] =
        relabel.emplace(c.pair_id, static_cast<int>(relabel.size()) + 1);
    c.pair_id = it->second;
  }
  Clan clan;
  clan.chars_ = std::move(chars);
  return clan;
}

int Clan::mate(int pos) const {
  const ClanChar& c = at(pos);
  if (!c.is_number()) throw UnmatchedNumber("character has no mate");
  for (int q = 1; q <= size(); ++q)
    if (q != pos && at(q) == c) return q;
  throw UnmatchedNumber("mate not found");  // unreachable in normal form
}

std::pair<int, int> Clan::signature() const {
  int plus = 0, minus = 0;
  for (const auto& c : chars_) {
    if (c.kind == ClanChar::Kind::Plus) ++plus;
    if (c.kind == ClanChar::Kind::Minus) ++minus;
  }
  const int n = size();
  const int p = (n + plus - minus) / 2;
  return {p, n - p};
}

int Clan::count_pairs() const {
  int numbers = 0;
  for (const auto& c : chars_)
    if (c.is_number()) ++numbers;
  return numbers / 2;
}

bool Clan::is_symmetric() const {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    const ClanChar& c = at(i);
    const ClanChar& r = at(mirror(i));
    if (c.is_sign()) {
      if (c != r) return false;
    } else {
      if (!r.is_number()) return false;
      // c_i = c_{n+1-j} must force c_j = c_{n+1-i}: the mirror image of
      // the pair partition is the pair partition itself.
      if (at(mirror(mate(i))) != at(mirror(i))) return false;
    }
  }
  return true;
}

bool Clan::is_disconnected() const {
  for (int i = 1; i <= size(); ++i)
    if (at(i).is_number() && mate(i) == mirror(i)) return false;
  return true;
}

std::vector<int> Clan::key() const {
  std::vector<int> k;
  k.reserve(chars_.size());
  for (const auto& c : chars_) {
    switch (c.kind) {
      case ClanChar::Kind::Plus: k.push_back(-1); break;
      case ClanChar::Kind::Minus: k.push_back(-2); break;
      case ClanChar::Kind::Number: k.push_back(c.pair_id); break;
    }
  }
  return k;
}

std::string Clan::to_string() const {
  std::ostringstream os;
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) os << ',';
    const ClanChar& c = at(i);
    switch (c.kind) {
      case ClanChar::Kind::Plus: os << '+'; break;
      case ClanChar::Kind::Minus: os << '-'; break;
      case ClanChar::Kind::Number: os << c.pair_id; break;
    }
  }
  return os.str();
}

SymmetricClass classify_symmetric(const Clan& clan) {
  if (!clan.is_symmetric() || clan.signature().first != 2)
    throw NotClassifiable("expected a symmetric clan of signature (2, q)");
  const int pairs = clan.count_pairs();
  if (pairs == 0) return {SymmetricShape::TwoPlus, std::nullopt};
  if (pairs == 1) {
    // The lone + must sit in the middle slot, which exists only for odd
    // length.
    if (clan.size() % 2 == 0)
      throw NotClassifiable("single-pair shape needs a middle + slot");
    const int mid = (clan.size() + 1) / 2;
    if (clan.at(mid).kind != ClanChar::Kind::Plus)
      throw NotClassifiable("single-pair shape needs + in the middle");
    return {SymmetricShape::MiddlePlusPair, std::nullopt};
  }
  // Two pairs: read the pattern off the sorted occupied positions.
  std::vector<int> positions;
  for (int i = 1; i <= clan.size(); ++i)
    if (clan.at(i).is_number()) positions.push_back(i);
  if (positions.size() != 4)
    throw NotClassifiable("more than two pairs");
  PairPattern pattern;
  if (clan.mate(positions[0]) == positions[1])
    pattern = PairPattern::P1122;
  else if (clan.mate(positions[0]) == positions[2])
    pattern = PairPattern::P1212;
  else
    pattern = PairPattern::P1221;
  return {SymmetricShape::TwoPairs, pattern};
}

namespace {

Clan all_minus_with(int length,
                    const std::vector<std::pair<int, ClanChar>>& overrides) {
  std::vector<ClanChar> chars(length, ClanChar::minus());
  for (const auto& [pos, c] : overrides) chars[pos - 1] = c;
  return Clan::normalize(std::move(chars));
}

}  // namespace

std::vector<Clan> enumerate_symmetric_clans(int rank, LieType type) {
  if (rank < 2) throw InvalidPosition("rank must be at least 2");
  const int n = rank;
  const int length = type == LieType::B ? 2 * n + 1 : 2 * n;
  auto mirror = [length](int pos) { return length + 1 - pos; };
  std::vector<Clan> out;
  // Two + signs at a mirrored pair of positions.
  for (int i = 1; i <= n; ++i)
    out.push_back(all_minus_with(
        length, {{i, ClanChar::plus()}, {mirror(i), ClanChar::plus()}}));
  // One pair across the mirror with + in the middle (odd length only).
  if (length % 2 == 1) {
    const int mid = (length + 1) / 2;
    for (int i = 1; i <= n; ++i)
      out.push_back(all_minus_with(length, {{i, ClanChar::number(1)},
                                            {mirror(i), ClanChar::number(1)},
                                            {mid, ClanChar::plus()}}));
  }
  // Two pairs on a mirror-closed position set {a, b, mirror(b), mirror(a)},
  // in each of the three symmetric patterns.
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const auto one = ClanChar::number(1);
      const auto two = ClanChar::number(2);
      out.push_back(all_minus_with(
          length, {{a, one}, {b, one}, {mirror(b), two}, {mirror(a), two}}));
      out.push_back(all_minus_with(
          length, {{a, one}, {b, two}, {mirror(b), one}, {mirror(a), two}}));
      out.push_back(all_minus_with(
          length, {{a, one}, {b, two}, {mirror(b), two}, {mirror(a), one}}));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(PairPattern p) {
  switch (p) {
    case PairPattern::P1122: return "(1,1,2,2)";
    case PairPattern::P1212: return "(1,2,1,2)";
    case PairPattern::P1221: return "(1,2,2,1)";
  }
  return {};
}

std::string to_string(SymmetricShape s) {
  switch (s) {
    case SymmetricShape::TwoPlus: return "two-plus";
    case SymmetricShape::TwoPairs: return "two-pairs";
    case SymmetricShape::MiddlePlusPair: return "middle-plus-pair";
  }
  return {};
}

}  // namespace schubbd
