#pragma once

#include <functional>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "okit/parablock.hpp"

namespace okit {

// Numeric shadow of Koszul duality: for dual blocks the graded Cartan
// matrices satisfy C_A(-v)^{-1}_{x,y} = C_B(v)_{bij(x),bij(y)} as exact
// Laurent polynomials.

struct DualityReport {
  std::string theorem;
  std::string type;
  std::string G, H;
  bool pass = true;
  std::size_t checked_entries = 0;
  std::string worst;  // first failing entry, if any
  nlohmann::json to_json() const;
};

DualityReport koszul_identity_check(
    const std::string& theorem, const MultMatrix& cartan_a, const MultMatrix& cartan_b,
    const std::function<std::uint32_t(std::uint32_t)>& bij);

// Regular-block Koszul self-duality under x -> x^{-1} w0, plus the
// involution-composition consistency checks.
DualityReport verify_t21(std::shared_ptr<const KLTable> kl);

// Singular block of G against the G-parabolic block, bijection x -> x^{-1} w0.
DualityReport verify_tbgs(std::shared_ptr<const KLTable> kl, ParabolicSubset G);

// Singular-parabolic block (G,H) against (w0 H w0, G), same bijection.
DualityReport verify_tback(std::shared_ptr<const KLTable> kl, ParabolicSubset G,
                           ParabolicSubset H);

}  // namespace okit
