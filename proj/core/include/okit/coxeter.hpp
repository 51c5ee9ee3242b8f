#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace okit {

enum class Family { A, B, C, D, I2 };

// A finite-type Coxeter diagram.  Families A, B, C, D plus the dihedral
// types I2(m), which are handy as small test groups (I2(3)=A2, I2(4)=B2).
struct CoxeterDiagram {
  Family family = Family::A;
  int rank = 1;
  int m = 0;  // bond order for I2(m); unused otherwise

  static CoxeterDiagram parse(std::string_view s);  // "A3", "B2", "I2(7)"
  std::string name() const;

  // Entries of the Coxeter matrix, generators 1-based; m(s,s) = 1.
  int coxeter_m(int s, int t) const;
  unsigned long long group_order() const;
  void validate() const;  // throws NonFiniteType

  bool operator==(const CoxeterDiagram& o) const = default;
};

// Subset of simple generators, stored as a bitmask (generator s -> bit s-1).
struct ParabolicSubset {
  std::uint32_t mask = 0;

  static ParabolicSubset none() { return {}; }
  static ParabolicSubset of(std::initializer_list<int> gens);
  static ParabolicSubset parse(std::string_view s);  // "1,3"; "" = empty
  std::string str() const;

  bool contains(int s) const { return (mask >> (s - 1)) & 1u; }
  bool empty() const { return mask == 0; }
  ParabolicSubset& add(int s) {
    mask |= 1u << (s - 1);
    return *this;
  }
  bool operator==(const ParabolicSubset& o) const = default;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A group element: index into the element table of its group.  Elements are
// ordered by length, then ShortLex on the canonical word, and that order is
// the index order used by every matrix in this project.
struct Element {
  const Group* grp = nullptr;
  std::uint32_t idx = 0;

  bool operator==(const Element& o) const { return grp == o.grp && idx == o.idx; }
};

enum class Side { Left, Right };                // Left: cosets wG (W/G); Right: Gw (G\W)
enum class Extremity { Shortest, Longest };
enum class IndexKind { WG, WGH, VGH };
enum class InvolutionKind { InvW0, W0Left, ConjW0, RingelKoszul };

// Fully enumerated finite Coxeter group.  Immutable after construction and
// safe to share across threads.
class Group {
 public:
  using Word = std::vector<std::uint8_t>;

  static GroupPtr build(const CoxeterDiagram& diagram, std::size_t cap = 10000);

  const CoxeterDiagram& diagram() const { return diagram_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(words_.size()); }
  int rank() const { return rank_; }

  Element element(std::uint32_t i) const { return Element{this, i}; }
  Element identity() const { return element(0); }
  Element generator(int s) const;
  std::uint32_t longest() const { return static_cast<std::uint32_t>(size() - 1); }

  int length(std::uint32_t x) const { return len_[x]; }
  const Word& word(std::uint32_t x) const { return words_[x]; }
  std::string word_str(std::uint32_t x) const;

  std::uint32_t right_mult(std::uint32_t x, int s) const {
    return rmult_[x * rank_ + (s - 1)];
  }
  std::uint32_t left_mult(std::uint32_t x, int s) const {
    return lmult_[x * rank_ + (s - 1)];
  }
  std::uint32_t product(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t inverse(std::uint32_t x) const { return inv_[x]; }

  std::uint32_t rdesc(std::uint32_t x) const { return rdesc_[x]; }
  std::uint32_t ldesc(std::uint32_t x) const { return ldesc_[x]; }

  // Elements covered by y in the Bruhat order (all z < y with l(z)=l(y)-1).
  const std::vector<std::uint32_t>& coatoms(std::uint32_t y) const { return coatoms_[y]; }

  // Subword test along the canonical word of y.
  bool bruhat_leq(std::uint32_t x, std::uint32_t y) const;

  std::uint32_t from_word(std::span<const std::uint8_t> w) const;
  // Parse "1,2,1"; the empty string is the identity.
  std::uint32_t parse_word(std::string_view s) const;

  // --- parabolic machinery -------------------------------------------------

  // Elements of the standard parabolic subgroup W_G, in index order.
  std::vector<std::uint32_t> parabolic_elements(ParabolicSubset G) const;
  std::uint32_t longest_in(ParabolicSubset G) const;

  bool extremal_in_coset(std::uint32_t x, ParabolicSubset G, Side side, Extremity e) const;
  std::vector<std::uint32_t> coset_reps(ParabolicSubset G, Side side, Extremity e) const;
  std::vector<std::uint32_t> index_set(IndexKind kind, ParabolicSubset G,
                                       ParabolicSubset H) const;

  std::uint32_t involution(InvolutionKind kind, std::uint32_t x) const;

 private:
  Group() = default;

  CoxeterDiagram diagram_;
  int rank_ = 0;
  std::vector<Word> words_;                // canonical (ShortLex-least reduced) words
  std::vector<int> len_;
  std::vector<std::uint32_t> rmult_;       // x*s lookup, row-major by element
  std::vector<std::uint32_t> lmult_;       // s*x lookup
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> rdesc_;       // bitmasks
  std::vector<std::uint32_t> ldesc_;
  std::vector<std::vector<std::uint32_t>> coatoms_;
  std::vector<std::vector<std::int16_t>> perms_;  // backing signed permutations

  struct Builder;
};

// Element-level convenience wrappers.
Element product(Element x, Element y);
bool bruhat_leq(Element x, Element y);
Element longest_element(const Group& g, ParabolicSubset G);
Element involution(InvolutionKind kind, Element x);
void require_same_group(Element x, Element y);

std::string to_string(Element x);

}  // namespace okit
