#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "schubbd/signed_permutation.hpp"

namespace schubbd {

using Rational = boost::multiprecision::cpp_rational;

// Sparse multivariate polynomial over exact rationals.  Terms are keyed
// by exponent vectors; zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);  // x_i, 1-based
  // Integer linear form sum coeffs[i] * x_{i+1}.
  static Polynomial linear_form(const std::vector<int>& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  size_t term_count() const { return terms_.size(); }

  // The coefficient of the constant monomial.
  Rational constant_term() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Rational& c) const;

  bool operator==(const Polynomial& rhs) const = default;

  // x_i |-> sign(w(i)) x_{|w(i)|}.
  Polynomial substitute(const SignedPermutation& w) const;

  // Exact division by a linear form; throws NonIntegerResult-style
  // logic_error if the division leaves a remainder.
  Polynomial divide_exact_by_linear(const std::vector<int>& form) const;

  std::string to_string() const;  // for diagnostics

  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  void add_term(std::vector<int> exponents, const Rational& c);

 private:
  int nvars_;
  std::map<std::vector<int>, Rational> terms_;
};

// Root data for W(B_n) / W(D_n) acting on x_1..x_n.
struct RootSystemData {
  LieType type;
  int rank;

  // Positive roots as integer coefficient vectors.
  std::vector<std::vector<int>> positive_roots() const;
  // alpha_i as a coefficient vector.
  std::vector<int> simple_root(int i) const;
  // Group order: 2^n n! (B) or 2^{n-1} n! (D).
  long long group_order() const;
};

// BGG operator: (f - s_i f) / alpha_i.
Polynomial divided_difference(int i, const Polynomial& f,
                              const RootSystemData& roots);

}  // namespace schubbd
