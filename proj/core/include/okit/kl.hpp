#pragma once

#include <cstdint>
#include <memory>
#include <nlohmann/json_fwd.hpp>
#include <unordered_map>

#include "okit/coxeter.hpp"
#include "okit/laurent.hpp"
#include "okit/matrix.hpp"

namespace okit {

// Kazhdan-Lusztig polynomials P_{x,y} in q, via the descent recursion with
// mu-correction terms, memoized.  R-polynomials serve as an independent
// oracle through the self-duality identity
//   q^{l(y)-l(x)} P_{x,y}(q^{-1}) = sum_{x<=z<=y} R_{x,z}(q) P_{z,y}(q).
//
// Lazy lookups mutate the memo; a table that has seen build_all() is
// effectively immutable and safe for concurrent reads.
class KLTable {
 public:
  explicit KLTable(GroupPtr g) : g_(std::move(g)) {}

  const Group& group() const { return *g_; }
  GroupPtr group_ptr() const { return g_; }

  const LaurentPoly& kl(std::uint32_t x, std::uint32_t y) const;
  long long mu(std::uint32_t x, std::uint32_t y) const;
  const LaurentPoly& r_poly(std::uint32_t x, std::uint32_t y) const;
  bool selfcheck(std::uint32_t x, std::uint32_t y) const;  // throws NotComparable

  void build_all() const;
  bool complete() const { return complete_; }

  // Whole-table cache file schema, version 1.
  nlohmann::json to_json() const;
  static std::shared_ptr<KLTable> from_json(GroupPtr g, const nlohmann::json& j);

 private:
  std::uint64_t key(std::uint32_t x, std::uint32_t y) const {
    return static_cast<std::uint64_t>(y) * g_->size() + x;
  }

  GroupPtr g_;
  mutable std::unordered_map<std::uint64_t, LaurentPoly> memo_;
  mutable std::unordered_map<std::uint64_t, LaurentPoly> rmemo_;
  mutable bool complete_ = false;
};

// Element-level wrappers with group-membership checks.
LaurentPoly kl_poly(const KLTable& t, Element x, Element y);
long long mu(const KLTable& t, Element x, Element y);
LaurentPoly r_poly(const KLTable& t, Element x, Element y);
bool kl_selfcheck(const KLTable& t, Element x, Element y);

// Inverse of the signed KL matrix [(-1)^{l(x)+l(y)} P_{x,y}(q)] over the full
// group; exact by unitriangularity.  Entries are nonnegative coefficientwise
// (the (x,y) entry equals P_{w0 y, w0 x}, by the KL inversion formula).
MultMatrix inverse_kl_matrix(const KLTable& t);

}  // namespace okit
