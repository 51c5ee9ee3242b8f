#pragma once

#include <string>
#include <string_view>

#include "okit/coxeter.hpp"

namespace okit {

enum class Flavor { Regular, Singular, Parabolic, SingularParabolic, B, C };

const char* flavor_name(Flavor f);
Flavor parse_flavor(std::string_view s);

// Names one graded algebra: a block cut out of the regular one by a
// singularity subset G and/or a parabolic truncation subset H.
struct BlockSpec {
  CoxeterDiagram diagram;
  ParabolicSubset G;
  ParabolicSubset H;
  Flavor flavor = Flavor::Regular;

  // "A3;G=1,2;H=3;flavor=singular-parabolic"; empty G/H are omitted.
  std::string str() const;
  static BlockSpec parse(std::string_view s);

  void validate() const;  // flavor/subset consistency
};

}  // namespace okit
