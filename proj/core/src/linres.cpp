#include "okit/linres.hpp"

#include <algorithm>

#include "okit/error.hpp"

namespace okit {

void ComplexProfile::check_invariants() const {
  for (const auto& [pos, terms] : positions) {
    if (pos < 0) fail(Errc::InvariantBreach, "profile has a negative position");
    for (const auto& [ws, mult] : terms) {
      if (mult < 0) fail(Errc::InvariantBreach, "negative multiplicity in a linear complex");
      int expect = kind == ProfileKind::TiltingCoresolution ? pos : -pos;
      if (ws.second != expect)
        fail(Errc::InvariantBreach, "profile is not linear: shift does not match position");
    }
  }
}

namespace {

void require_member(const BlockData& b, std::uint32_t x) {
  if (x >= b.g->size())
    fail(Errc::NotInIndexSet, "element id out of range for " + b.spec.str());
  if (!b.dec.contains(x))
    fail(Errc::NotInIndexSet,
         b.g->word_str(x) + " is not in the index set of " + b.spec.str());
}

// Solve sum_y g_y row_y = e_x against a unitriangular transition matrix
// whose row y is supported on columns >= y.
std::vector<LaurentPoly> solve_against_rows(const MultMatrix& rows, std::size_t xpos) {
  const std::size_t n = rows.dim();
  std::vector<LaurentPoly> gcoef(n);
  for (std::size_t z = 0; z < n; ++z) {
    LaurentPoly rhs = z == xpos ? LaurentPoly(1) : LaurentPoly();
    for (std::size_t y = 0; y < z; ++y)
      if (!gcoef[y].is_zero()) rhs -= gcoef[y] * rows.at(y, z);
    gcoef[z] = std::move(rhs);  // rows.at(z,z) == 1
  }
  return gcoef;
}

}  // namespace

ComplexProfile linear_tilting_coresolution(const BlockData& b, std::uint32_t x) {
  if (b.spec.flavor != Flavor::Regular && b.spec.flavor != Flavor::Parabolic &&
      b.spec.flavor != Flavor::C)
    fail(Errc::UnsupportedFlavor, "tilting coresolutions: regular, parabolic or C blocks");
  require_member(b, x);
  const std::size_t xpos = b.pos(x);
  auto gcoef = solve_against_rows(b.tilt, xpos);

  ComplexProfile p;
  p.block = b.spec.str();
  p.grp = b.g.get();
  p.x = x;
  p.kind = ProfileKind::TiltingCoresolution;
  for (std::size_t y = 0; y < b.index.size(); ++y) {
    for (const auto& [e, c] : gcoef[y].terms()) {
      int l = -e;  // coefficient (-1)^l v^{-l}
      if (l < 0 || ((l % 2 == 0) ? c < 0 : c > 0))
        fail(Errc::InvariantBreach, "negative multiplicity in tilting coresolution of " +
                                        b.g->word_str(x));
      long long m = static_cast<long long>(l % 2 == 0 ? c : -c);
      p.positions[l][{b.index[y], l}] += m;
    }
  }
  p.check_invariants();
  if (p.positions.empty() || p.positions.begin()->first != 0 || p.positions.at(0).size() != 1 ||
      p.positions.at(0).begin()->first != std::pair<std::uint32_t, int>{x, 0} ||
      p.positions.at(0).begin()->second != 1)
    fail(Errc::InvariantBreach, "coresolution does not start with its own standard object");
  if (b.spec.flavor == Flavor::Regular) {
    int bound = b.g->length(b.g->longest()) - b.g->length(x);
    if (p.max_position() > bound)
      fail(Errc::InvariantBreach, "coresolution exceeds the length bound");
  }
  return p;
}

ComplexProfile linear_coresolution_via_translation(const RegularBlockData& rb,
                                                   const BlockData& b, std::uint32_t x) {
  if (b.spec.flavor != Flavor::Regular)
    fail(Errc::UnsupportedFlavor, "translation coresolutions live in the regular block");
  const Group& g = *b.g;
  std::uint32_t w0 = g.longest();

  ComplexProfile p;
  p.block = b.spec.str();
  p.grp = b.g.get();
  p.kind = ProfileKind::TiltingCoresolution;
  p.x = w0;
  p.positions[0][{w0, 0}] = 1;

  // Walk w0 -> x along a reduced word of x^{-1} w0, peeling one letter at a
  // time; each step converts the coresolution of Delta(y) into Delta(ys).
  const Group::Word path = g.word(g.product(g.inverse(x), w0));
  std::uint32_t cur = w0;
  for (std::size_t step = path.size(); step-- > 0;) {
    int s = path[step];
    std::uint32_t next = g.right_mult(cur, s);
    if (g.length(next) >= g.length(cur))
      fail(Errc::InvariantBreach, "translation path failed to descend");

    // Cone of theta_s(old complex) -> old complex <1>, with the matched
    // summand pairs cancelled.
    std::map<int, std::map<std::pair<std::uint32_t, int>, long long>> q;
    for (const auto& [l, terms] : p.positions) {
      for (const auto& [ws, mult] : terms) {
        auto img = theta_tilting(rb, ws.first, s);
        for (const auto& [zs, m2] : img) q[l][{zs.first, ws.second + zs.second}] += mult * m2;
        q[l + 1][{ws.first, ws.second + 1}] += mult;  // shifted copy of the old complex
      }
    }
    auto remove_one = [&q](int pos, std::uint32_t w, int shift, long long count) {
      auto pit = q.find(pos);
      if (pit == q.end())
        fail(Errc::InvariantBreach, "cone cancellation target position missing");
      auto it = pit->second.find({w, shift});
      if (it == pit->second.end() || it->second < count)
        fail(Errc::InvariantBreach, "cone cancellation target summand missing");
      it->second -= count;
      if (it->second == 0) pit->second.erase(it);
      if (pit->second.empty()) q.erase(pit);
    };
    for (const auto& [l, terms] : p.positions) {
      for (const auto& [ws, mult] : terms) {
        std::uint32_t w = ws.first;
        if (g.length(g.right_mult(w, s)) < g.length(w)) continue;  // only ws > w cancels
        remove_one(l, w, l + 1, mult);
        remove_one(l + 1, w, l + 1, mult);
        remove_one(l, w, l - 1, mult);
        remove_one(l - 1, w, l - 1, mult);
      }
    }
    p.positions = std::move(q);
    p.x = next;
    cur = next;
  }
  p.check_invariants();
  return p;
}

ComplexProfile linear_projective_resolution(const BlockData& b, std::uint32_t x) {
  if (b.spec.flavor != Flavor::Regular && b.spec.flavor != Flavor::Parabolic)
    fail(Errc::UnsupportedFlavor, "projective resolutions: regular or parabolic blocks");
  require_member(b, x);
  const std::size_t n = b.index.size();
  const std::size_t xpos = b.pos(x);

  // c(P(y)) = sum_z d_{z,y} c(Delta(z)): solve top-down against columns of D.
  std::vector<LaurentPoly> gcoef(n);
  for (std::size_t z = n; z-- > 0;) {
    LaurentPoly rhs = z == xpos ? LaurentPoly(1) : LaurentPoly();
    for (std::size_t y = z + 1; y < n; ++y)
      if (!gcoef[y].is_zero()) rhs -= gcoef[y] * b.dec.at(z, y);
    gcoef[z] = std::move(rhs);
  }

  ComplexProfile p;
  p.block = b.spec.str();
  p.grp = b.g.get();
  p.x = x;
  p.kind = ProfileKind::ProjectiveResolution;
  for (std::size_t y = 0; y < n; ++y) {
    for (const auto& [l, c] : gcoef[y].terms()) {
      if (l < 0 || ((l % 2 == 0) ? c < 0 : c > 0))
        fail(Errc::InvariantBreach, "negative multiplicity in projective resolution of " +
                                        b.g->word_str(x));
      long long m = static_cast<long long>(l % 2 == 0 ? c : -c);
      p.positions[l][{b.index[y], -l}] += m;
    }
  }
  p.check_invariants();
  if (b.spec.flavor == Flavor::Regular && p.max_position() > b.g->length(x))
    fail(Errc::InvariantBreach, "resolution exceeds the length bound");
  return p;
}

bool compare_profiles(const ComplexProfile& a, const ComplexProfile& b,
                      std::vector<ProfileDiff>* diff) {
  if (a.block != b.block) fail(Errc::BlockMismatch, "profiles from different blocks");
  bool equal = true;
  auto scan = [&](const ComplexProfile& l, const ComplexProfile& r, bool record) {
    for (const auto& [pos, terms] : l.positions) {
      for (const auto& [ws, mult] : terms) {
        long long other = 0;
        auto pit = r.positions.find(pos);
        if (pit != r.positions.end()) {
          auto it = pit->second.find(ws);
          if (it != pit->second.end()) other = it->second;
        }
        if (mult != other) {
          equal = false;
          if (record && diff)
            diff->push_back({pos, ws.first, ws.second, mult, other});
        }
      }
    }
  };
  scan(a, b, true);
  scan(b, a, false);  // entries missing from a
  if (diff) {
    for (const auto& [pos, terms] : b.positions)
      for (const auto& [ws, mult] : terms) {
        bool in_a = false;
        auto pit = a.positions.find(pos);
        if (pit != a.positions.end()) in_a = pit->second.contains(ws);
        if (!in_a) diff->push_back({pos, ws.first, ws.second, 0, mult});
      }
  }
  return equal;
}

CharVector profile_euler_delta(const BlockData& b, const ComplexProfile& p) {
  CharVector acc(b.g.get(), CharBasis::Delta);
  for (const auto& [pos, terms] : p.positions) {
    for (const auto& [ws, mult] : terms) {
      CharVector t = p.kind == ProfileKind::TiltingCoresolution
                         ? b.tilting_char_delta(ws.first)
                         : b.projective_char_delta(ws.first);
      // a summand with shift k contributes v^{-k} times its character
      LaurentPoly f = LaurentPoly(mult).shifted(-ws.second);
      if (pos % 2 != 0) f = -f;
      acc += t.scaled(f);
    }
  }
  return acc;
}

}  // namespace okit
