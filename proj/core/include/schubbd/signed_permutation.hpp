#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "schubbd/errors.hpp"

namespace schubbd {

enum class LieType { B, D };

std::string to_string(LieType t);

// Number of simple reflections equals the rank n in both types.
// Simple roots: alpha_i = x_i - x_{i+1} for i < n, alpha_n = x_n (B)
// or alpha_n = x_{n-1} + x_n (D).

// An element of the hyperoctahedral group W(B_n), or of its even-sign
// subgroup W(D_n), stored in one-line notation: images[i-1] = w(i),
// negative values for barred entries.
class SignedPermutation {
 public:
  static SignedPermutation make(std::vector<int> images, LieType type);
  static SignedPermutation identity(int rank, LieType type);
  static SignedPermutation longest_element(int rank, LieType type);
  static SignedPermutation simple_reflection(int i, int rank, LieType type);

  int rank() const { return static_cast<int>(images_.size()); }
  LieType lie_type() const { return type_; }
  const std::vector<int>& images() const { return images_; }

  // w(i) for i in [-n,-1] or [1,n]; w(-i) = -w(i).
  int operator()(int i) const;

  SignedPermutation operator*(const SignedPermutation& rhs) const;
  SignedPermutation inverse() const;

  // Coxeter length, counted as the number of positive roots sent negative.
  int length() const;

  bool is_identity() const;

  // i is a left (right) descent iff l(s_i w) < l(w)  (l(w s_i) < l(w)).
  bool is_left_descent(int i) const;
  bool is_right_descent(int i) const;

  // Position of the entry +v or -v in one-line notation, i.e. |w^{-1}(v)|.
  int position_of(int v) const;

  bool operator==(const SignedPermutation& rhs) const = default;
  // Lexicographic on one-line notation; type must match.
  bool operator<(const SignedPermutation& rhs) const;

 private:
  SignedPermutation(std::vector<int> images, LieType type)
      : images_(std::move(images)), type_(type) {}

  std::vector<int> images_;
  LieType type_;
};

struct Word {
  std::vector<int> letters;

  bool operator==(const Word&) const = default;
};

// Canonical reduced word: repeatedly strip the smallest left descent,
// so w = s_{a_1} s_{a_2} ... s_{a_k} with a_1 the smallest descent of w.
Word reduced_word(const SignedPermutation& w);

// Product s_{a_1} ... s_{a_k} of the letters of a word.
SignedPermutation evaluate_word(const Word& word, int rank, LieType type);

// All reduced words of w, by backtracking over left descents.
std::vector<Word> all_reduced_words(const SignedPermutation& w);

}  // namespace schubbd
