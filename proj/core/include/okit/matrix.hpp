#pragma once

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "okit/coxeter.hpp"
#include "okit/laurent.hpp"

namespace okit {

// Square matrix over LaurentPoly, indexed by an ordered list of group
// elements.  The index order is always (length, ShortLex), i.e. ascending
// element ids.
class MultMatrix {
 public:
  MultMatrix() = default;
  MultMatrix(const Group* g, std::vector<std::uint32_t> index);

  const Group* group() const { return g_; }
  const std::vector<std::uint32_t>& index() const { return index_; }
  std::size_t dim() const { return index_.size(); }

  LaurentPoly& at(std::size_t i, std::size_t j) { return m_[i * dim() + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return m_[i * dim() + j]; }

  // Position of an element id in the index list; throws NotInIndexSet.
  std::size_t pos(std::uint32_t x) const;
  bool contains(std::uint32_t x) const;

  MultMatrix transpose_times(const MultMatrix& other) const;  // this^T * other
  MultMatrix times(const MultMatrix& other) const;
  MultMatrix submatrix(const std::vector<std::uint32_t>& sub) const;
  MultMatrix subst_neg() const;  // entrywise v -> -v
  bool is_identity() const;
  bool is_symmetric() const;
  bool operator==(const MultMatrix& o) const;

  // Exact inverse of a matrix that is unitriangular for the index order
  // (entry (i,j) = 0 for i > j, diagonal 1).
  MultMatrix inverse_unitriangular() const;

  // Exact inverse of a matrix congruent to the identity at v=0 (constant
  // terms form the identity matrix), via a truncated geometric series that
  // is then validated by exact re-multiplication.  Throws NonInvertible.
  MultMatrix inverse_unipotent_at_zero() const;

  nlohmann::json to_json() const;
  std::string to_csv(std::string_view var = "v") const;
  std::string to_table(std::string_view var = "v") const;

 private:
  const Group* g_ = nullptr;
  std::vector<std::uint32_t> index_;
  std::vector<LaurentPoly> m_;
};

}  // namespace okit
