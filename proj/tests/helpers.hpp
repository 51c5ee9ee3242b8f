#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <vector>

#include "okit/coxeter.hpp"
#include "okit/laurent.hpp"

namespace okit::testing {

inline LaurentPoly lp(std::initializer_list<std::pair<int, long long>> ps) {
  LaurentPoly p;
  for (auto [e, c] : ps) p.add_term(e, Coeff(c));
  return p;
}

inline GroupPtr group(const char* name) { return Group::build(CoxeterDiagram::parse(name)); }

// All reduced words of every element, by brute-force word enumeration.
// Small groups only.
inline std::map<std::uint32_t, std::vector<Group::Word>> all_reduced_words(const Group& g) {
  std::map<std::uint32_t, std::vector<Group::Word>> out;
  out[0].push_back({});
  std::vector<std::pair<std::uint32_t, Group::Word>> frontier{{0u, {}}};
  int maxlen = g.length(g.longest());
  for (int l = 1; l <= maxlen; ++l) {
    std::vector<std::pair<std::uint32_t, Group::Word>> next;
    for (const auto& [x, w] : frontier) {
      for (int s = 1; s <= g.rank(); ++s) {
        std::uint32_t xs = g.right_mult(x, s);
        if (g.length(xs) != l) continue;
        Group::Word w2 = w;
        w2.push_back(static_cast<std::uint8_t>(s));
        out[xs].push_back(w2);
        next.emplace_back(xs, std::move(w2));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Bruhat order by transitive closure of the covering relation.
struct BruhatClosure {
  std::vector<std::set<std::uint32_t>> below;  // below[y] = {x : x <= y}
  explicit BruhatClosure(const Group& g) : below(g.size()) {
    for (std::uint32_t y = 0; y < g.size(); ++y) {
      below[y].insert(y);
      for (std::uint32_t z : g.coatoms(y))
        below[y].insert(below[z].begin(), below[z].end());
    }
  }
  bool leq(std::uint32_t x, std::uint32_t y) const { return below[y].count(x) > 0; }
};

}  // namespace okit::testing
