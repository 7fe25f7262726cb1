#include "schubbd/polynomial.hpp"

#include <sstream>

namespace schubbd {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  std::vector<int> e(nvars, 0);
  e[i - 1] = 1;
  p.add_term(std::move(e), 1);
  return p;
}

Polynomial Polynomial::linear_form(const std::vector<int>& coeffs) {
  Polynomial p(static_cast<int>(coeffs.size()));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::vector<int> e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(std::move(e), coeffs[i]);
  }
  return p;
}

int Polynomial::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int k : e) d += k;
    deg = std::max(deg, d);
  }
  return deg;
}

Rational Polynomial::constant_term() const {
  const auto it = terms_.find(std::vector<int>(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(std::vector<int> exponents, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(exponents), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      std::vector<int> e(nvars_);
      for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, coef] : terms_) out.add_term(e, coef * c);
  return out;
}

Polynomial Polynomial::substitute(const SignedPermutation& w) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne(nvars_, 0);
    Rational nc = c;
    for (int i = 1; i <= nvars_; ++i) {
      const int v = w(i);
      ne[std::abs(v) - 1] = e[i - 1];
      if (v < 0 && e[i - 1] % 2 != 0) nc = -nc;
    }
    out.add_term(std::move(ne), nc);
  }
  return out;
}

Polynomial Polynomial::divide_exact_by_linear(
    const std::vector<int>& form) const {
  int lead = -1;
  for (size_t i = 0; i < form.size(); ++i) {
    if (form[i] != 0) {
      lead = static_cast<int>(i);
      break;
    }
  }
  if (lead < 0) throw std::logic_error("division by the zero form");
  Polynomial quotient(nvars_);
  Polynomial rem = *this;
  while (!rem.is_zero()) {
    // Leading term under lex with x_1 > x_2 > ...
    const auto it = std::prev(rem.terms_.end());
    std::vector<int> e = it->first;
    const Rational c = it->second;
    if (e[lead] == 0)
      throw std::logic_error("polynomial is not divisible by the linear form");
    e[lead] -= 1;
    const Rational q = c / form[lead];
    quotient.add_term(e, q);
    // rem -= q * x^e * form
    for (size_t k = lead; k < form.size(); ++k) {
      if (form[k] == 0) continue;
      std::vector<int> me = e;
      me[k] += 1;
      rem.add_term(std::move(me), -q * form[k]);
    }
  }
  return quotient;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second;
    for (int k = 0; k < nvars_; ++k) {
      if (it->first[k] == 0) continue;
      os << "*x" << (k + 1);
      if (it->first[k] > 1) os << "^" << it->first[k];
    }
  }
  return os.str();
}

std::vector<std::vector<int>> RootSystemData::positive_roots() const {
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      std::vector<int> diff(rank, 0), sum(rank, 0);
      diff[i] = 1;
      diff[j] = -1;
      sum[i] = 1;
      sum[j] = 1;
      roots.push_back(diff);
      roots.push_back(sum);
    }
    if (type == LieType::B) {
      std::vector<int> e(rank, 0);
      e[i] = 1;
      roots.push_back(e);
    }
  }
  return roots;
}

std::vector<int> RootSystemData::simple_root(int i) const {
  std::vector<int> r(rank, 0);
  if (i < rank) {
    r[i - 1] = 1;
    r[i] = -1;
  } else if (type == LieType::B) {
    r[rank - 1] = 1;
  } else {
    r[rank - 2] = 1;
    r[rank - 1] = 1;
  }
  return r;
}

long long RootSystemData::group_order() const {
  long long order = 1;
  for (int k = 2; k <= rank; ++k) order *= k;
  for (int k = 0; k < (type == LieType::B ? rank : rank - 1); ++k) order *= 2;
  return order;
}

Polynomial divided_difference(int i, const Polynomial& f,
                              const RootSystemData& roots) {
  const auto s = SignedPermutation::simple_reflection(i, roots.rank, roots.type);
  const Polynomial num = f - f.substitute(s);
  return num.divide_exact_by_linear(roots.simple_root(i));
}

}  // namespace schubbd
