#include "schubbd/oracle.hpp"

#include <numeric>

namespace schubbd {

namespace {

Polynomial top_representative(const RootSystemData& roots) {
  Polynomial p = Polynomial::constant(roots.rank,
                                      Rational(1, roots.group_order()));
  for (const auto& alpha : roots.positive_roots())
    p = p * Polynomial::linear_form(alpha);
  return p;
}

// The reflection through a positive root, as a signed permutation.
SignedPermutation root_reflection(const std::vector<int>& alpha, LieType type) {
  const int n = static_cast<int>(alpha.size());
  std::vector<int> support;
  for (int k = 0; k < n; ++k)
    if (alpha[k] != 0) support.push_back(k);
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  if (support.size() == 1) {
    img[support[0]] = -(support[0] + 1);
  } else {
    const int a = support[0], b = support[1];
    if (alpha[b] < 0) {  // e_a - e_b
      img[a] = b + 1;
      img[b] = a + 1;
    } else {  // e_a + e_b
      img[a] = -(b + 1);
      img[b] = -(a + 1);
    }
  }
  return SignedPermutation::make(std::move(img), type);
}

// 2 * <omega_i, alpha^vee>, an integer.
long twice_fundamental_pairing(int i, const std::vector<int>& alpha,
                               const RootSystemData& roots) {
  const int n = roots.rank;
  // omega_i in coordinates, scaled by 2 to stay integral.
  std::vector<long> twice_omega(n, 0);
  if (roots.type == LieType::B) {
    if (i < n)
      for (int k = 0; k < i; ++k) twice_omega[k] = 2;
    else
      for (int k = 0; k < n; ++k) twice_omega[k] = 1;
  } else {
    if (i <= n - 2) {
      for (int k = 0; k < i; ++k) twice_omega[k] = 2;
    } else {
      for (int k = 0; k < n; ++k) twice_omega[k] = 1;
      if (i == n - 1) twice_omega[n - 1] = -1;
    }
  }
  // alpha^vee = alpha for long roots, 2*alpha for the short roots x_i.
  int support = 0;
  for (int k = 0; k < n; ++k)
    if (alpha[k] != 0) ++support;
  const int covector_scale = support == 1 ? 2 : 1;
  long twice_pairing = 0;
  for (int k = 0; k < n; ++k)
    twice_pairing += twice_omega[k] * covector_scale * alpha[k];
  if (twice_pairing % 2 != 0)
    throw NonIntegerResult("fundamental pairing is not integral");
  return twice_pairing;
}

}  // namespace

BggOracle::BggOracle(LieType type, int rank)
    : roots_{type, rank}, top_(top_representative(roots_)) {}

const Polynomial& BggOracle::representative(const SignedPermutation& w) {
  if (w.rank() != roots_.rank || w.lie_type() != roots_.type)
    throw TypeMismatch("element from a different group");
  const auto it = reps_.find(w.images());
  if (it != reps_.end()) return it->second;
  const auto w0 = SignedPermutation::longest_element(roots_.rank, roots_.type);
  Polynomial value(roots_.rank);
  if (w == w0) {
    value = top_;
  } else {
    // P_w = d_i P_{w s_i} whenever l(w s_i) = l(w) + 1.
    int i = 0;
    for (int k = 1; k <= roots_.rank; ++k) {
      if (!w.is_right_descent(k)) {
        i = k;
        break;
      }
    }
    const auto longer =
        w * SignedPermutation::simple_reflection(i, roots_.rank, roots_.type);
    value = divided_difference(i, representative(longer), roots_);
  }
  return reps_.emplace(w.images(), std::move(value)).first->second;
}

Polynomial BggOracle::apply_chain(const SignedPermutation& w,
                                  Polynomial f) const {
  const Word word = reduced_word(w);
  // d_w = d_{a_1} ... d_{a_k}: the rightmost operator acts first.
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    f = divided_difference(*it, f, roots_);
  return f;
}

long BggOracle::oracle_constant(const SignedPermutation& u,
                                const SignedPermutation& v,
                                const SignedPermutation& w) {
  if (u.length() + v.length() != w.length())
    throw LengthMismatch("l(u) + l(v) must equal l(w)");
  const Polynomial product = representative(u) * representative(v);
  const Polynomial result = apply_chain(w, product);
  const Rational c = result.constant_term();
  Polynomial residue = result - Polynomial::constant(roots_.rank, c);
  if (!residue.is_zero() || denominator(c) != 1 || c < 0)
    throw NonIntegerResult("oracle constant is not a nonnegative integer");
  return static_cast<long>(numerator(c));
}

std::map<SignedPermutation, long> BggOracle::chevalley_coefficients(
    int i, const SignedPermutation& w) const {
  std::map<SignedPermutation, long> out;
  for (const auto& alpha : roots_.positive_roots()) {
    const auto t = root_reflection(alpha, roots_.type);
    const auto x = w * t;
    if (x.length() != w.length() + 1) continue;
    const long coeff = twice_fundamental_pairing(i, alpha, roots_) / 2;
    if (coeff != 0) out.emplace(x, coeff);
  }
  return out;
}

}  // namespace schubbd
