#pragma once

#include <map>
#include <utility>

#include "okit/blockspec.hpp"
#include "okit/kl.hpp"
#include "okit/matrix.hpp"

namespace okit {

// Graded character calculus for the regular block.
//
// Grading dictionary: v^d marks internal degree d; the shift <k> acts on
// characters as multiplication by v^{-k}.  Decomposition numbers take the
// closed form d_{x,y}(v) = v^{l(y)-l(x)} P_{x,y}(v^{-2}).

enum class CharBasis { L, Delta, T, P };

// Finitely supported character vector over a block's index set.
struct CharVector {
  const Group* grp = nullptr;
  CharBasis basis = CharBasis::Delta;
  std::map<std::uint32_t, LaurentPoly> coeff;

  CharVector() = default;
  CharVector(const Group* g, CharBasis b) : grp(g), basis(b) {}

  void add(std::uint32_t x, const LaurentPoly& c);
  CharVector& operator+=(const CharVector& o);
  CharVector scaled(const LaurentPoly& f) const;
  bool operator==(const CharVector& o) const;
  bool bar_invariant() const;
};

LaurentPoly dec_poly(const KLTable& t, std::uint32_t x, std::uint32_t y);
MultMatrix dec_matrix(const KLTable& t);
MultMatrix cartan_matrix(const KLTable& t);
MultMatrix cartan_from_dec(const MultMatrix& dec);

// Delta-flag polynomial of T(x) in the shift variable u (u^l marks <l>):
// (T(x):Delta(y)<l>) = coefficient of u^l in d_{w0 y, w0 x}(u).
LaurentPoly tilting_flag_poly(const KLTable& t, std::uint32_t x, std::uint32_t y);
MultMatrix tilting_flag_matrix(const KLTable& t);

// Everything a regular-block computation needs, built once.
struct RegularBlockData {
  GroupPtr g;
  std::shared_ptr<const KLTable> kl;
  MultMatrix dec;     // D, in v
  MultMatrix cartan;  // D^T D, in v
};
RegularBlockData build_regular_block(std::shared_ptr<const KLTable> kl);

// Translation through the s-wall on Delta-basis characters:
//   xs > x:  [Delta(x)] -> [Delta(xs)] + v [Delta(x)]
//   xs < x:  [Delta(x)] -> [Delta(xs)] + v^{-1} [Delta(x)]
CharVector theta_delta(const CharVector& c, int s);

// Translation on an indecomposable tilting: multiset of (element, shift).
using TiltingMultiset = std::map<std::pair<std::uint32_t, int>, long long>;
TiltingMultiset theta_tilting(const RegularBlockData& b, std::uint32_t x, int s);

// dim Ext^1 between simples = coefficient of v in the Cartan entry.
long long ext1_simples(const MultMatrix& cartan, std::uint32_t x, std::uint32_t y);

// Character conversions (regular block).
CharVector delta_to_simple(const MultMatrix& dec, const CharVector& c);
CharVector tilting_char_delta(const KLTable& t, std::uint32_t x);  // c(T(x)), Delta basis
CharVector projective_char_delta(const KLTable& t, std::uint32_t x);

}  // namespace okit
