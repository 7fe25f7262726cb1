#include "schubbd/weyl.hpp"

#include <algorithm>
#include <cstdlib>

namespace schubbd {

namespace {

void generate(int rank, LieType type, std::vector<int>& img,
              std::vector<char>& used, int negatives,
              std::vector<SignedPermutation>& out) {
  const int pos = static_cast<int>(img.size());
  if (pos == rank) {
    if (type == LieType::D && negatives % 2 != 0) return;
    out.push_back(SignedPermutation::make(img, type));
    return;
  }
  // Candidate values in increasing order keep the output lexicographic.
  for (int v = -rank; v <= rank; ++v) {
    if (v == 0 || used[std::abs(v)]) continue;
    used[std::abs(v)] = 1;
    img.push_back(v);
    generate(rank, type, img, used, negatives + (v < 0 ? 1 : 0), out);
    img.pop_back();
    used[std::abs(v)] = 0;
  }
}

}  // namespace

std::vector<SignedPermutation> all_elements(int rank, LieType type) {
  std::vector<SignedPermutation> out;
  std::vector<int> img;
  std::vector<char> used(rank + 1, 0);
  generate(rank, type, img, used, 0, out);
  return out;
}

std::vector<SignedPermutation> elements_of_length(int rank, LieType type,
                                                  int length) {
  std::vector<SignedPermutation> out;
  for (const auto& w : all_elements(rank, type))
    if (w.length() == length) out.push_back(w);
  return out;
}

bool bruhat_leq(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank() != b.rank() || a.lie_type() != b.lie_type())
    throw TypeMismatch("Bruhat comparison across different groups");
  SignedPermutation x = a;
  SignedPermutation y = b;
  while (true) {
    if (x == y || x.is_identity()) return true;
    if (x.length() >= y.length()) return false;
    int d = 0;
    for (int i = 1; i <= y.rank(); ++i) {
      if (y.is_left_descent(i)) {
        d = i;
        break;
      }
    }
    const auto s = SignedPermutation::simple_reflection(d, y.rank(), y.lie_type());
    y = s * y;
    if (x.is_left_descent(d)) x = s * x;
  }
}

namespace {

void check_position(int position, int rank) {
  if (position < 1 || position > rank)
    throw InvalidPosition("coset position out of range");
}

// One-line notation with `first` at `position` and `rest` filling the
// remaining slots left to right.
SignedPermutation place(int first, const std::vector<int>& rest, int position,
                        int rank, LieType type) {
  std::vector<int> img(rank, 0);
  img[position - 1] = first;
  size_t k = 0;
  for (int i = 0; i < rank; ++i)
    if (img[i] == 0) img[i] = rest[k++];
  return SignedPermutation::make(std::move(img), type);
}

}  // namespace

SignedPermutation coset_min_rep(const CosetDescriptor& desc, int rank,
                                LieType type) {
  check_position(desc.position, rank);
  const bool positive = desc.sign == CosetDescriptor::Sign::positive;
  std::vector<int> rest;
  for (int v = 2; v <= rank; ++v) rest.push_back(v);
  if (type == LieType::D && !positive) rest.back() = -rank;
  return place(positive ? 1 : -1, rest, desc.position, rank, type);
}

SignedPermutation coset_max_rep(const CosetDescriptor& desc, int rank,
                                LieType type) {
  check_position(desc.position, rank);
  const bool positive = desc.sign == CosetDescriptor::Sign::positive;
  std::vector<int> rest;
  for (int v = 2; v <= rank; ++v) rest.push_back(-v);
  if (type == LieType::D) {
    const bool unbar_last = (rank % 2 == 1) ? !positive : positive;
    if (unbar_last) rest.back() = rank;
  }
  return place(positive ? 1 : -1, rest, desc.position, rank, type);
}

CosetDescriptor coset_of(const SignedPermutation& w) {
  const int p = w.position_of(1);
  return CosetDescriptor{w(p) > 0 ? CosetDescriptor::Sign::positive
                                  : CosetDescriptor::Sign::negative,
                         p};
}

bool is_coset_min_rep(const SignedPermutation& w) {
  return w == coset_min_rep(coset_of(w), w.rank(), w.lie_type());
}

bool is_coset_max_rep(const SignedPermutation& w) {
  return w == coset_max_rep(coset_of(w), w.rank(), w.lie_type());
}

std::vector<CosetDescriptor> all_coset_descriptors(int rank) {
  std::vector<CosetDescriptor> out;
  for (int p = 1; p <= rank; ++p) {
    out.push_back({CosetDescriptor::Sign::negative, p});
    out.push_back({CosetDescriptor::Sign::positive, p});
  }
  return out;
}

bool lemma_comparable(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.rank() != v.rank() || u.lie_type() != v.lie_type())
    throw TypeMismatch("comparability across different groups");
  if (!is_coset_max_rep(u) || !is_coset_min_rep(v))
    throw NotCosetRepresentatives(
        "expected a maximal-length u and a minimal-length v");
  const int n = u.rank();
  const int up = u.position_of(1);
  const int vp = v.position_of(1);
  const bool u_positive = u(up) > 0;
  const bool v_positive = v(vp) > 0;
  if (v_positive) {
    if (!u_positive) {
      if (u.lie_type() == LieType::D && vp == n && up == n) return false;
      return true;
    }
    return up >= vp;
  }
  return !u_positive && up <= vp;
}

}  // namespace schubbd
