#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace okit {

using Coeff = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in one variable with exact integer coefficients.
// The variable is anonymous; callers track whether a value lives in q, v or u.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long c) {
    if (c != 0) terms_[0] = c;
  }

  static LaurentPoly monomial(Coeff c, int exp);
  static const LaurentPoly& zero();
  static const LaurentPoly& one();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  const std::map<int, Coeff>& terms() const { return terms_; }
  Coeff coeff(int exp) const;
  // min_exp/max_exp require a nonzero polynomial.
  int min_exp() const;
  int max_exp() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly& add_term(int exp, const Coeff& c);

  LaurentPoly shifted(int k) const;  // multiply by x^k
  LaurentPoly bar() const;           // x -> x^{-1}
  // x^e -> x^{scale*e + shift}; scale may be negative, never zero.
  LaurentPoly subst_monomial(int scale, int shift) const;
  LaurentPoly subst_neg() const;  // x -> -x
  LaurentPoly truncate_above(int maxexp) const;
  // Parts with exponent strictly above / strictly below zero.
  LaurentPoly positive_part() const;
  LaurentPoly negative_part() const;

  Coeff eval_one() const;  // sum of coefficients
  bool coeffs_nonnegative() const;

  std::string str(std::string_view var = "v") const;

  // [[exp, coeff], ...] sorted by exponent; coefficients must fit in 64 bits.
  std::vector<std::pair<int, long long>> pairs() const;
  static LaurentPoly from_pairs(const std::vector<std::pair<int, long long>>& ps);

 private:
  std::map<int, Coeff> terms_;  // exponent -> nonzero coefficient
};

inline LaurentPoly operator*(long c, const LaurentPoly& p) { return LaurentPoly(c) * p; }

}  // namespace okit
