#include "schubbd/signed_permutation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace schubbd {

std::string to_string(LieType t) { return t == LieType::B ? "B" : "D"; }

namespace {

void check_same_group(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank() != b.rank() || a.lie_type() != b.lie_type())
    throw TypeMismatch("elements belong to different groups");
}

}  // namespace

SignedPermutation SignedPermutation::make(std::vector<int> images,
                                          LieType type) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n + 1, 0);
  int negatives = 0;
  for (int v : images) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[a])
      throw NotAPermutation("one-line notation is not a signed permutation");
    seen[a] = 1;
    if (v < 0) ++negatives;
  }
  if (type == LieType::D && negatives % 2 != 0)
    throw OddSignCountInTypeD("type D requires an even number of barred entries");
  return SignedPermutation(std::move(images), type);
}

SignedPermutation SignedPermutation::identity(int rank, LieType type) {
  std::vector<int> img(rank);
  std::iota(img.begin(), img.end(), 1);
  return SignedPermutation(std::move(img), type);
}

SignedPermutation SignedPermutation::longest_element(int rank, LieType type) {
  std::vector<int> img(rank);
  for (int i = 0; i < rank; ++i) img[i] = -(i + 1);
  if (type == LieType::D && rank % 2 != 0) img[rank - 1] = rank;
  return SignedPermutation(std::move(img), type);
}

SignedPermutation SignedPermutation::simple_reflection(int i, int rank,
                                                       LieType type) {
  if (i < 1 || i > rank) throw InvalidPosition("simple reflection index out of range");
  std::vector<int> img(rank);
  std::iota(img.begin(), img.end(), 1);
  if (i < rank) {
    std::swap(img[i - 1], img[i]);
  } else if (type == LieType::B) {
    img[rank - 1] = -rank;
  } else {
    if (rank < 2) throw InvalidPosition("type D needs rank >= 2");
    img[rank - 2] = -rank;
    img[rank - 1] = -(rank - 1);
  }
  return SignedPermutation(std::move(img), type);
}

int SignedPermutation::operator()(int i) const {
  if (i < 0) return -images_[static_cast<size_t>(-i) - 1];
  return images_[static_cast<size_t>(i) - 1];
}

SignedPermutation SignedPermutation::operator*(
    const SignedPermutation& rhs) const {
  check_same_group(*this, rhs);
  std::vector<int> img(rank());
  for (int i = 1; i <= rank(); ++i) img[i - 1] = (*this)(rhs(i));
  return SignedPermutation(std::move(img), type_);
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> img(rank());
  for (int i = 1; i <= rank(); ++i) {
    const int v = images_[i - 1];
    img[std::abs(v) - 1] = v < 0 ? -i : i;
  }
  return SignedPermutation(std::move(img), type_);
}

int SignedPermutation::length() const {
  // Positive roots: x_i - x_j and x_i + x_j (i < j), plus x_i in type B.
  // The image of x_i +- x_j is negative iff its lower-index coordinate
  // carries a minus sign.
  const int n = rank();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int wi = images_[i - 1];
      const int wj = images_[j - 1];
      // x_i - x_j |-> sgn(wi) x_|wi| - sgn(wj) x_|wj|
      if (std::abs(wi) < std::abs(wj)) {
        if (wi < 0) ++count;
      } else {
        if (wj > 0) ++count;
      }
      // x_i + x_j |-> sgn(wi) x_|wi| + sgn(wj) x_|wj|
      if (std::abs(wi) < std::abs(wj)) {
        if (wi < 0) ++count;
      } else {
        if (wj < 0) ++count;
      }
    }
    if (type_ == LieType::B && images_[i - 1] < 0) ++count;
  }
  return count;
}

bool SignedPermutation::is_identity() const {
  for (int i = 1; i <= rank(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

bool SignedPermutation::is_left_descent(int i) const {
  return (simple_reflection(i, rank(), type_) * *this).length() < length();
}

bool SignedPermutation::is_right_descent(int i) const {
  return (*this * simple_reflection(i, rank(), type_)).length() < length();
}

int SignedPermutation::position_of(int v) const {
  for (int i = 1; i <= rank(); ++i)
    if (images_[i - 1] == v || images_[i - 1] == -v) return i;
  throw InvalidPosition("value not present");
}

bool SignedPermutation::operator<(const SignedPermutation& rhs) const {
  check_same_group(*this, rhs);
  return images_ < rhs.images_;
}

Word reduced_word(const SignedPermutation& w) {
  Word word;
  SignedPermutation cur = w;
  while (!cur.is_identity()) {
    int d = 0;
    for (int i = 1; i <= cur.rank(); ++i) {
      if (cur.is_left_descent(i)) {
        d = i;
        break;
      }
    }
    word.letters.push_back(d);
    cur = SignedPermutation::simple_reflection(d, cur.rank(), cur.lie_type()) * cur;
  }
  return word;
}

SignedPermutation evaluate_word(const Word& word, int rank, LieType type) {
  SignedPermutation w = SignedPermutation::identity(rank, type);
  for (int a : word.letters)
    w = w * SignedPermutation::simple_reflection(a, rank, type);
  return w;
}

namespace {

void collect_words(const SignedPermutation& w, Word& prefix,
                   std::vector<Word>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int i = 1; i <= w.rank(); ++i) {
    if (!w.is_left_descent(i)) continue;
    prefix.letters.push_back(i);
    collect_words(
        SignedPermutation::simple_reflection(i, w.rank(), w.lie_type()) * w,
        prefix, out);
    prefix.letters.pop_back();
  }
}

}  // namespace

std::vector<Word> all_reduced_words(const SignedPermutation& w) {
  std::vector<Word> out;
  Word prefix;
  collect_words(w, prefix, out);
  return out;
}

}  // namespace schubbd
