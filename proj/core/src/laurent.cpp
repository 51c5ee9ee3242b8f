#include "okit/laurent.hpp"

#include <limits>
#include <sstream>

#include "okit/error.hpp"

namespace okit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonFiniteType: return "NonFiniteType";
    case Errc::RankLimit: return "RankLimit";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotComparable: return "NotComparable";
    case Errc::NotShortestRep: return "NotShortestRep";
    case Errc::NotInIndexSet: return "NotInIndexSet";
    case Errc::UnsupportedFlavor: return "UnsupportedFlavor";
    case Errc::EmptyIndexSet: return "EmptyIndexSet";
    case Errc::OrderViolation: return "OrderViolation";
    case Errc::InvariantBreach: return "InvariantBreach";
    case Errc::BlockMismatch: return "BlockMismatch";
    case Errc::NonInvertible: return "NonInvertible";
    case Errc::Parse: return "Parse";
  }
  return "Error";
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exp) {
  LaurentPoly p;
  if (c != 0) p.terms_[exp] = std::move(c);
  return p;
}

const LaurentPoly& LaurentPoly::zero() {
  static const LaurentPoly z;
  return z;
}

const LaurentPoly& LaurentPoly::one() {
  static const LaurentPoly o(1);
  return o;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Coeff LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Coeff(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) fail(Errc::InvariantBreach, "min_exp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) fail(Errc::InvariantBreach, "max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::add_term(int exp, const Coeff& c) {
  if (c == 0) return *this;
  auto [it, fresh] = terms_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::subst_monomial(int scale, int shift) const {
  if (scale == 0) fail(Errc::InvariantBreach, "subst_monomial with zero scale");
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[scale * e + shift] = c;
  return r;
}

LaurentPoly LaurentPoly::subst_neg() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = (e % 2 == 0) ? c : -c;
  return r;
}

LaurentPoly LaurentPoly::truncate_above(int maxexp) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    if (e <= maxexp) r.terms_[e] = c;
  }
  return r;
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_)
    if (e > 0) r.terms_[e] = c;
  return r;
}

LaurentPoly LaurentPoly::negative_part() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_)
    if (e < 0) r.terms_[e] = c;
  return r;
}

Coeff LaurentPoly::eval_one() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::coeffs_nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::string LaurentPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {  // ascending exponent
    Coeff a = c < 0 ? Coeff(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? '-' : '+');
    }
    if (e == 0) {
      out << a.str();
    } else {
      if (a != 1) out << a.str();
      out << var;
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

std::vector<std::pair<int, long long>> LaurentPoly::pairs() const {
  std::vector<std::pair<int, long long>> ps;
  ps.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
      fail(Errc::InvariantBreach, "coefficient does not fit in 64 bits for serialization");
    ps.emplace_back(e, static_cast<long long>(c));
  }
  return ps;
}

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<int, long long>>& ps) {
  LaurentPoly p;
  for (const auto& [e, c] : ps) p.add_term(e, Coeff(c));
  return p;
}

}  // namespace okit
