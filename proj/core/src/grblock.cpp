#include "okit/grblock.hpp"

#include "okit/error.hpp"

namespace okit {

void CharVector::add(std::uint32_t x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeff.emplace(x, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeff.erase(it);
  }
}

CharVector& CharVector::operator+=(const CharVector& o) {
  if (grp != o.grp || basis != o.basis)
    fail(Errc::BlockMismatch, "adding characters in different bases");
  for (const auto& [x, c] : o.coeff) add(x, c);
  return *this;
}

CharVector CharVector::scaled(const LaurentPoly& f) const {
  CharVector r(grp, basis);
  if (f.is_zero()) return r;
  for (const auto& [x, c] : coeff) r.coeff[x] = c * f;
  return r;
}

bool CharVector::operator==(const CharVector& o) const {
  return grp == o.grp && basis == o.basis && coeff == o.coeff;
}

bool CharVector::bar_invariant() const {
  for (const auto& [x, c] : coeff)
    if (c != c.bar()) return false;
  return true;
}

LaurentPoly dec_poly(const KLTable& t, std::uint32_t x, std::uint32_t y) {
  const Group& g = t.group();
  if (!g.bruhat_leq(x, y)) return LaurentPoly();
  int gap = g.length(y) - g.length(x);
  return t.kl(x, y).subst_monomial(-2, gap);
}

MultMatrix dec_matrix(const KLTable& t) {
  const Group& g = t.group();
  std::vector<std::uint32_t> all(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) all[i] = i;
  MultMatrix d(&g, all);
  for (std::uint32_t x = 0; x < g.size(); ++x)
    for (std::uint32_t y = x; y < g.size(); ++y) d.at(x, y) = dec_poly(t, x, y);
  return d;
}

MultMatrix cartan_from_dec(const MultMatrix& dec) { return dec.transpose_times(dec); }

MultMatrix cartan_matrix(const KLTable& t) { return cartan_from_dec(dec_matrix(t)); }

LaurentPoly tilting_flag_poly(const KLTable& t, std::uint32_t x, std::uint32_t y) {
  const Group& g = t.group();
  std::uint32_t w0 = g.longest();
  return dec_poly(t, g.product(w0, y), g.product(w0, x));
}

MultMatrix tilting_flag_matrix(const KLTable& t) {
  const Group& g = t.group();
  std::vector<std::uint32_t> all(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) all[i] = i;
  MultMatrix m(&g, all);
  for (std::uint32_t x = 0; x < g.size(); ++x)
    for (std::uint32_t y = 0; y < g.size(); ++y) m.at(x, y) = tilting_flag_poly(t, x, y);
  return m;
}

RegularBlockData build_regular_block(std::shared_ptr<const KLTable> kl) {
  RegularBlockData b;
  b.g = kl->group_ptr();
  b.kl = std::move(kl);
  b.dec = dec_matrix(*b.kl);
  b.cartan = cartan_from_dec(b.dec);
  return b;
}

CharVector theta_delta(const CharVector& c, int s) {
  if (c.basis != CharBasis::Delta)
    fail(Errc::BlockMismatch, "theta_delta expects a Delta-basis character");
  const Group& g = *c.grp;
  CharVector r(c.grp, CharBasis::Delta);
  for (const auto& [x, f] : c.coeff) {
    std::uint32_t xs = g.right_mult(x, s);
    bool up = g.length(xs) > g.length(x);
    r.add(xs, f);
    r.add(x, f.shifted(up ? 1 : -1));
  }
  return r;
}

TiltingMultiset theta_tilting(const RegularBlockData& b, std::uint32_t x, int s) {
  const Group& g = *b.g;
  TiltingMultiset out;
  std::uint32_t xs = g.right_mult(x, s);
  if (g.length(xs) > g.length(x)) {
    out[{x, 1}] += 1;
    out[{x, -1}] += 1;
    return out;
  }
  out[{xs, 0}] += 1;
  for (std::uint32_t y = x + 1; y < g.size(); ++y) {
    if (!g.bruhat_leq(x, y)) continue;
    if (g.length(g.right_mult(y, s)) < g.length(y)) continue;  // need ys > y
    long long m = ext1_simples(b.cartan, x, y);
    if (m != 0) out[{y, 0}] += m;
  }
  return out;
}

long long ext1_simples(const MultMatrix& cartan, std::uint32_t x, std::uint32_t y) {
  Coeff c = cartan.at(cartan.pos(x), cartan.pos(y)).coeff(1);
  return static_cast<long long>(c);
}

CharVector delta_to_simple(const MultMatrix& dec, const CharVector& c) {
  if (c.basis != CharBasis::Delta)
    fail(Errc::BlockMismatch, "delta_to_simple expects a Delta-basis character");
  CharVector r(c.grp, CharBasis::L);
  const auto& idx = dec.index();
  for (const auto& [x, f] : c.coeff) {
    std::size_t i = dec.pos(x);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const LaurentPoly& d = dec.at(i, j);
      if (!d.is_zero()) r.add(idx[j], f * d);
    }
  }
  return r;
}

CharVector tilting_char_delta(const KLTable& t, std::uint32_t x) {
  const Group& g = t.group();
  CharVector r(&g, CharBasis::Delta);
  for (std::uint32_t y = 0; y < g.size(); ++y) {
    LaurentPoly flag = tilting_flag_poly(t, x, y);
    // u^l marks <l>, which multiplies characters by v^{-l}.
    if (!flag.is_zero()) r.add(y, flag.bar());
  }
  return r;
}

CharVector projective_char_delta(const KLTable& t, std::uint32_t x) {
  const Group& g = t.group();
  CharVector r(&g, CharBasis::Delta);
  for (std::uint32_t z = 0; z < g.size(); ++z) {
    LaurentPoly d = dec_poly(t, z, x);
    if (!d.is_zero()) r.add(z, d);
  }
  return r;
}

}  // namespace okit
