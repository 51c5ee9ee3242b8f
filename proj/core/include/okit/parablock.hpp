#pragma once

#include <map>
#include <vector>

#include "okit/blockspec.hpp"
#include "okit/grblock.hpp"
#include "okit/kl.hpp"

namespace okit {

// Graded multiplicity data for singular, parabolic and singular-parabolic
// blocks, all assembled from the regular-block decomposition numbers.

// d^H_{x,y}(v) = sum_{u in W_H} (-1)^{l(u)} v^{l(u)} d_{ux,y}(v), for x the
// shortest representative of its coset H x.  Vanishes off shortest y.
LaurentPoly parabolic_dec_poly(const KLTable& t, ParabolicSubset H, std::uint32_t x,
                               std::uint32_t y);

// Restriction of the regular decomposition number to W_G x W_G.
LaurentPoly singular_dec_poly(const KLTable& t, ParabolicSubset G, std::uint32_t x,
                              std::uint32_t y);

// A quasi-hereditary block with its index set, decomposition matrix, Cartan
// matrix and tilting transition matrix.  tilt row x gives the Delta-basis
// coefficients of c(T(x)) in the character variable v (exponents <= 0 off
// the diagonal, diagonal 1).
struct BlockData {
  BlockSpec spec;
  GroupPtr g;
  std::vector<std::uint32_t> index;
  MultMatrix dec;
  MultMatrix cartan;
  MultMatrix tilt;

  std::size_t pos(std::uint32_t x) const { return dec.pos(x); }
  CharVector delta_char_L(std::uint32_t x) const;      // c(Delta(x)) in L basis
  CharVector tilting_char_delta(std::uint32_t x) const;
  CharVector projective_char_delta(std::uint32_t x) const;
};

BlockData build_block(std::shared_ptr<const KLTable> kl, const BlockSpec& spec);

MultMatrix block_dec_matrix(const KLTable& t, const BlockSpec& spec);
MultMatrix block_cartan(const KLTable& t, const BlockSpec& spec);

// Tilting transition by self-dualization: the unique unitriangular matrix
// with rows tau_x supported on y >= x, off-diagonal entries in v^{-1}Z[v^{-1}],
// whose L-basis characters tau_x . D are bar-invariant.
MultMatrix tilting_transition(const MultMatrix& dec);

// Coinvariant Hilbert series of the parabolic subgroup: sum_u v^{2 l(u)}.
LaurentPoly coinvariant_hilbert(const Group& g, ParabolicSubset G);

// Character shadow of the induced resolution attached to the coset w W_G,
// for w in W_G (longest representatives): position i carries the elements
// of w W_G of length l(w w0^G) + i, with shift i.
struct BggProfile {
  std::uint32_t w = 0;
  ParabolicSubset G;
  // position -> multiset of (element, shift)
  std::map<int, std::map<std::pair<std::uint32_t, int>, long long>> positions;
};
BggProfile bgg_complex_profile(const Group& g, ParabolicSubset G, std::uint32_t w);

// Euler characteristic sum_i (-1)^i v^i (Delta-chars at position i).
CharVector bgg_euler_delta(const Group& g, const BggProfile& p);

}  // namespace okit
