#pragma once

#include <map>
#include <string>
#include <vector>

#include "okit/parablock.hpp"

namespace okit {

// Character-level linear complexes: position l of a tilting coresolution
// holds summands shifted by exactly <l>; position l of a projective
// resolution holds summands generated in degree l (stored shift -l).

enum class ProfileKind { TiltingCoresolution, ProjectiveResolution };

struct ComplexProfile {
  std::string block;  // BlockSpec string of the owning block
  const Group* grp = nullptr;
  std::uint32_t x = 0;
  ProfileKind kind = ProfileKind::TiltingCoresolution;
  // position -> (element, shift) -> multiplicity
  std::map<int, std::map<std::pair<std::uint32_t, int>, long long>> positions;

  int max_position() const { return positions.empty() ? 0 : positions.rbegin()->first; }
  void check_invariants() const;  // linearity, nonnegativity, finite support
};

// Unique multiplicities solving
//   c(Delta(x)) = sum_l (-1)^l v^{-l} sum_y m_{l,y} c(T(y))
// in the block's tilting basis.  Flavors: regular and parabolic here; the
// C flavor is handled by the stratified-block interface via transport.
ComplexProfile linear_tilting_coresolution(const BlockData& b, std::uint32_t x);

// Regular block only: downward induction from Delta(w0) = T(w0), applying
// wall translations and cancelling the matched summand pairs.
ComplexProfile linear_coresolution_via_translation(const RegularBlockData& rb,
                                                   const BlockData& b, std::uint32_t x);

// Multiplicities solving
//   c(Delta(x)) = sum_l (-1)^l v^{l} sum_y p_{l,y} c(P(y)).
ComplexProfile linear_projective_resolution(const BlockData& b, std::uint32_t x);

struct ProfileDiff {
  int position;
  std::uint32_t element;
  int shift;
  long long left_mult;
  long long right_mult;
};
bool compare_profiles(const ComplexProfile& a, const ComplexProfile& b,
                      std::vector<ProfileDiff>* diff = nullptr);

// Re-expand a profile back to the Delta-basis Euler character (round-trip
// oracle: must reproduce c(Delta(x)) exactly).
CharVector profile_euler_delta(const BlockData& b, const ComplexProfile& p);

}  // namespace okit
