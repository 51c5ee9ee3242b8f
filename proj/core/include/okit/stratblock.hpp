#pragma once

#include <nlohmann/json_fwd.hpp>

#include "okit/linres.hpp"
#include "okit/parablock.hpp"

namespace okit {

// Character-level models of the properly stratified blocks: the B flavor is
// the centralizer f A_e^H f cut out by the index set W_G^H, the C flavor is
// the centralizer q A q cut out by V_e^H.  Standard modules are free over
// the wall coinvariants, so Cartan data factors through the coinvariant
// Hilbert series of the wall group.

struct StratBlockData {
  BlockSpec spec;
  GroupPtr g;
  std::vector<std::uint32_t> index;
  MultMatrix cartan;       // centralizer Cartan: submatrix of the host block's
  ParabolicSubset wall;    // G for B flavor, H for C flavor
  LaurentPoly h;           // coinvariant Hilbert series of the wall group
};

// c(theta_out Delta_G(w)) = sum_{x in w W_G} v^{l(w)-l(x)} c(Delta(x)).
CharVector theta_out_char(const Group& g, ParabolicSubset G, std::uint32_t w);

StratBlockData b_block_data(std::shared_ptr<const KLTable> kl, ParabolicSubset G,
                            ParabolicSubset H);

struct T11Report {
  BlockSpec spec;
  bool pass = true;
  std::size_t checked_entries = 0;
  std::vector<std::string> failures;  // "x,y: lhs != rhs"
  nlohmann::json to_json() const;
};
// Checks Cartan_B(v) == h_G(v) * Cartan_{A_G^H}(v) entrywise, both sides
// computed by independent routes.
T11Report verify_t11_identity(std::shared_ptr<const KLTable> kl, ParabolicSubset G,
                              ParabolicSubset H);

StratBlockData c_block_data(std::shared_ptr<const KLTable> kl, ParabolicSubset H);

// Full working data for the C block: proper-standard characters are the
// parabolic ones transported along x -> w0^H x, standard characters are
// their h_H-expansions, tilting transitions transport likewise.
struct CBlock {
  StratBlockData data;
  BlockData proper;       // flavor C; dec = proper-standard matrix, tilt transported
  BlockData parabolic;    // the host A_e^H block
  std::uint32_t w0H = 0;
  int wall_length = 0;    // l(w0^H)

  std::uint32_t to_parabolic(std::uint32_t x) const;  // x -> w0^H x
  std::uint32_t from_parabolic(std::uint32_t xbar) const;
};
CBlock build_c_block(std::shared_ptr<const KLTable> kl, ParabolicSubset H);

struct CStandardData {
  CharVector proper_char;    // composition character of the proper standard, L basis
  CharVector standard_char;  // h_H-expansion of the proper character
  LaurentPoly proper_flag;   // proper-standard flag polynomial of the standard = h_H(v)
};
CStandardData c_standard_flags(const CBlock& cb, std::uint32_t x);

struct ExtEntry {
  int k;  // homological degree
  int m;  // grading shift of the proper standard argument
  long long dim;
};
struct ExtReport {
  std::uint32_t x = 0, y = 0;
  std::vector<ExtEntry> entries;
  long long rank = 0;       // occurrences of T(x)<K> at position K = l(x)-l(y)
  long long total_dim = 0;  // rank * h_H(1)
  bool bounds_ok = true;
  nlohmann::json to_json(const Group& g) const;
};
// Graded hom-profile of the proper standard of x against the linear tilting
// coresolution of the standard of y; every nonzero entry must satisfy
// m + 2 l(w0^H) <= k <= l(x) - l(y).
ExtReport c_ext_profile(const CBlock& cb, std::uint32_t x, std::uint32_t y);

ComplexProfile c_tilting_coresolution(const CBlock& cb, std::uint32_t x);

}  // namespace okit
