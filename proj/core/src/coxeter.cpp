#include "okit/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

#include "okit/error.hpp"

namespace okit {

// ---------------------------------------------------------------------------
// CoxeterDiagram

CoxeterDiagram CoxeterDiagram::parse(std::string_view s) {
  CoxeterDiagram d;
  if (s.empty()) fail(Errc::Parse, "empty diagram name");
  char fam = s[0];
  if (fam == 'I') {
    // "I2(m)"
    if (s.size() < 5 || s.substr(0, 3) != "I2(" || s.back() != ')')
      fail(Errc::Parse, "dihedral diagrams are written I2(m)");
    d.family = Family::I2;
    d.rank = 2;
    auto body = s.substr(3, s.size() - 4);
    int m = 0;
    auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), m);
    if (ec != std::errc() || p != body.data() + body.size())
      fail(Errc::Parse, "bad bond order in " + std::string(s));
    d.m = m;
  } else {
    switch (fam) {
      case 'A': d.family = Family::A; break;
      case 'B': d.family = Family::B; break;
      case 'C': d.family = Family::C; break;
      case 'D': d.family = Family::D; break;
      default: fail(Errc::NonFiniteType, "unknown family in " + std::string(s));
    }
    auto body = s.substr(1);
    int r = 0;
    auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), r);
    if (ec != std::errc() || p != body.data() + body.size() || r <= 0)
      fail(Errc::Parse, "bad rank in " + std::string(s));
    d.rank = r;
  }
  d.validate();
  return d;
}

std::string CoxeterDiagram::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::C: return "C" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::I2: return "I2(" + std::to_string(m) + ")";
  }
  return "?";
}

int CoxeterDiagram::coxeter_m(int s, int t) const {
  if (s == t) return 1;
  if (s > t) std::swap(s, t);
  switch (family) {
    case Family::A:
      return t == s + 1 ? 3 : 2;
    case Family::B:
    case Family::C:
      if (t == s + 1) return t == rank ? 4 : 3;
      return 2;
    case Family::D:
      if (t == s + 1 && t < rank) return 3;
      if (t == rank && s == rank - 2) return 3;
      return 2;
    case Family::I2:
      return m;
  }
  return 2;
}

unsigned long long CoxeterDiagram::group_order() const {
  auto fact = [](int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };
  switch (family) {
    case Family::A: return fact(rank + 1);
    case Family::B:
    case Family::C: return fact(rank) << rank;
    case Family::D: return fact(rank) << (rank - 1);
    case Family::I2: return 2ull * static_cast<unsigned long long>(m);
  }
  return 0;
}

void CoxeterDiagram::validate() const {
  switch (family) {
    case Family::A:
      if (rank < 1) fail(Errc::NonFiniteType, "A requires rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) fail(Errc::NonFiniteType, "B/C require rank >= 2 (use A1 for rank 1)");
      break;
    case Family::D:
      if (rank < 2) fail(Errc::NonFiniteType, "D requires rank >= 2");
      break;
    case Family::I2:
      if (rank != 2 || m < 2) fail(Errc::NonFiniteType, "I2(m) requires m >= 2");
      // The backing permutation acts on 2m points; cap m to keep it sane.
      if (m > 1024) fail(Errc::RankLimit, "I2(m) supported up to m = 1024");
      break;
  }
  if (rank > 30) fail(Errc::RankLimit, "rank capped at 30");
}

// ---------------------------------------------------------------------------
// ParabolicSubset

ParabolicSubset ParabolicSubset::of(std::initializer_list<int> gens) {
  ParabolicSubset p;
  for (int s : gens) p.add(s);
  return p;
}

ParabolicSubset ParabolicSubset::parse(std::string_view s) {
  ParabolicSubset p;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    auto tok = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    int g = 0;
    auto [q, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), g);
    if (ec != std::errc() || q != tok.data() + tok.size() || g < 1 || g > 30)
      fail(Errc::Parse, "bad generator list: " + std::string(s));
    p.add(g);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return p;
}

std::string ParabolicSubset::str() const {
  std::string out;
  for (int s = 1; s <= 30; ++s) {
    if (contains(s)) {
      if (!out.empty()) out += ',';
      out += std::to_string(s);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group construction

namespace {

using Perm = std::vector<std::int16_t>;

// Composition a∘b: (a∘b)(i) = a(b(i)), with p(-i) = -p(i).
Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    std::int16_t bi = b[i];
    r[i] = bi > 0 ? a[bi - 1] : static_cast<std::int16_t>(-a[-bi - 1]);
  }
  return r;
}

Perm invert(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    std::int16_t v = p[i];
    if (v > 0)
      r[v - 1] = static_cast<std::int16_t>(i + 1);
    else
      r[-v - 1] = static_cast<std::int16_t>(-(static_cast<int>(i) + 1));
  }
  return r;
}

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<std::int16_t>(i + 1);
  return p;
}

// Generator permutations per family; see the diagram conventions in
// CoxeterDiagram::coxeter_m.
std::vector<Perm> make_generators(const CoxeterDiagram& d) {
  std::vector<Perm> gens;
  auto swap_gen = [](int n, int i) {
    Perm p = identity_perm(n);
    std::swap(p[i - 1], p[i]);
    return p;
  };
  switch (d.family) {
    case Family::A: {
      int n = d.rank + 1;
      for (int s = 1; s <= d.rank; ++s) gens.push_back(swap_gen(n, s));
      break;
    }
    case Family::B:
    case Family::C: {
      int n = d.rank;
      for (int s = 1; s < d.rank; ++s) gens.push_back(swap_gen(n, s));
      Perm p = identity_perm(n);
      p[n - 1] = static_cast<std::int16_t>(-n);
      gens.push_back(p);
      break;
    }
    case Family::D: {
      int n = d.rank;
      for (int s = 1; s < d.rank; ++s) gens.push_back(swap_gen(n, s));
      Perm p = identity_perm(n);
      p[n - 2] = static_cast<std::int16_t>(-n);
      p[n - 1] = static_cast<std::int16_t>(-(n - 1));
      gens.push_back(p);
      break;
    }
    case Family::I2: {
      // Dihedral action on Z_{2m} (points 1..2m stand for residues 0..2m-1):
      // s1: j -> -j, s2: j -> 2-j.  Faithful for every m >= 2.
      int n = 2 * d.m;
      auto refl = [n](int c) {
        Perm p(n);
        for (int j = 0; j < n; ++j) p[j] = static_cast<std::int16_t>(((c - j) % n + n) % n + 1);
        return p;
      };
      gens.push_back(refl(0));
      gens.push_back(refl(2));
      break;
    }
  }
  return gens;
}

struct PermHash {
  size_t operator()(const Perm& p) const noexcept {
    size_t h = 1469598103934665603ull;
    for (auto v : p) {
      h ^= static_cast<size_t>(static_cast<std::uint16_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

struct Group::Builder {
  static GroupPtr run(const CoxeterDiagram& diagram, std::size_t cap) {
    diagram.validate();
    unsigned long long order = diagram.group_order();
    if (order > cap)
      fail(Errc::RankLimit, diagram.name() + " has " + std::to_string(order) +
                                " elements, above the cap of " + std::to_string(cap));

    auto g = std::shared_ptr<Group>(new Group());
    g->diagram_ = diagram;
    g->rank_ = diagram.rank;
    const auto gens = make_generators(diagram);
    const int rank = diagram.rank;

    // Breadth-first enumeration by right multiplication; BFS depth = length.
    std::vector<Perm> perms;
    std::vector<int> len;
    std::unordered_map<Perm, std::uint32_t, PermHash> id_of;
    perms.push_back(identity_perm(static_cast<int>(gens[0].size())));
    len.push_back(0);
    id_of.emplace(perms[0], 0);
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
      std::uint32_t x = queue.front();
      queue.pop_front();
      for (int s = 0; s < rank; ++s) {
        Perm p = compose(perms[x], gens[s]);
        if (id_of.find(p) == id_of.end()) {
          auto nid = static_cast<std::uint32_t>(perms.size());
          id_of.emplace(p, nid);
          perms.push_back(std::move(p));
          len.push_back(len[x] + 1);
          queue.push_back(nid);
        }
      }
    }
    if (perms.size() != order)
      fail(Errc::InvariantBreach, "enumeration of " + diagram.name() + " found " +
                                      std::to_string(perms.size()) + " elements, expected " +
                                      std::to_string(order));

    const auto n = static_cast<std::uint32_t>(perms.size());

    // Temporary left-multiplication table (needed for canonical words).
    std::vector<std::uint32_t> lmul(static_cast<size_t>(n) * rank);
    for (std::uint32_t x = 0; x < n; ++x)
      for (int s = 0; s < rank; ++s) lmul[x * rank + s] = id_of.at(compose(gens[s], perms[x]));

    // Canonical word: smallest left descent first, then recurse.  Elements
    // arrive from the BFS in non-decreasing length order, so s*x is done
    // before x whenever l(s*x) < l(x).
    std::vector<Word> cw(n);
    std::vector<std::uint32_t> by_level(n);
    for (std::uint32_t i = 0; i < n; ++i) by_level[i] = i;
    std::stable_sort(by_level.begin(), by_level.end(),
                     [&](auto a, auto b) { return len[a] < len[b]; });
    for (std::uint32_t i : by_level) {
      if (len[i] == 0) continue;
      for (int s = 0; s < rank; ++s) {
        std::uint32_t sx = lmul[i * rank + s];
        if (len[sx] < len[i]) {
          cw[i].reserve(cw[sx].size() + 1);
          cw[i].push_back(static_cast<std::uint8_t>(s + 1));
          cw[i].insert(cw[i].end(), cw[sx].begin(), cw[sx].end());
          break;
        }
      }
    }

    // Final element order: by length, then ShortLex on the canonical word.
    std::vector<std::uint32_t> sorted(by_level);
    std::sort(sorted.begin(), sorted.end(), [&](auto a, auto b) {
      if (len[a] != len[b]) return len[a] < len[b];
      return cw[a] < cw[b];
    });
    std::vector<std::uint32_t> pos(n);
    for (std::uint32_t i = 0; i < n; ++i) pos[sorted[i]] = i;

    g->words_.resize(n);
    g->len_.resize(n);
    g->perms_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      g->words_[pos[i]] = std::move(cw[i]);
      g->len_[pos[i]] = len[i];
      g->perms_[pos[i]] = std::move(perms[i]);
    }

    g->rmult_.resize(static_cast<size_t>(n) * rank);
    g->lmult_.resize(static_cast<size_t>(n) * rank);
    g->inv_.resize(n);
    g->rdesc_.resize(n);
    g->ldesc_.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (int s = 0; s < rank; ++s) {
        g->rmult_[x * rank + s] = pos[id_of.at(compose(g->perms_[x], gens[s]))];
        g->lmult_[x * rank + s] = pos[id_of.at(compose(gens[s], g->perms_[x]))];
      }
      g->inv_[x] = pos[id_of.at(invert(g->perms_[x]))];
      std::uint32_t rd = 0, ld = 0;
      for (int s = 0; s < rank; ++s) {
        if (g->len_[g->rmult_[x * rank + s]] < g->len_[x]) rd |= 1u << s;
        if (g->len_[g->lmult_[x * rank + s]] < g->len_[x]) ld |= 1u << s;
      }
      g->rdesc_[x] = rd;
      g->ldesc_[x] = ld;
    }

    // Coatoms: every coatom of y arises by deleting one letter of any fixed
    // reduced word of y (strong exchange).
    g->coatoms_.resize(n);
    for (std::uint32_t y = 0; y < n; ++y) {
      const Word& w = g->words_[y];
      std::set<std::uint32_t> cs;
      for (size_t skip = 0; skip < w.size(); ++skip) {
        std::uint32_t z = 0;
        for (size_t j = 0; j < w.size(); ++j) {
          if (j == skip) continue;
          z = g->rmult_[z * rank + (w[j] - 1)];
        }
        if (g->len_[z] == g->len_[y] - 1) cs.insert(z);
      }
      g->coatoms_[y].assign(cs.begin(), cs.end());
    }

    return g;
  }
};

GroupPtr Group::build(const CoxeterDiagram& diagram, std::size_t cap) {
  return Builder::run(diagram, cap);
}

Element Group::generator(int s) const {
  if (s < 1 || s > rank_) fail(Errc::Parse, "generator index out of range");
  return element(right_mult(0, s));
}

std::string Group::word_str(std::uint32_t x) const {
  std::string out;
  for (auto s : words_[x]) {
    if (!out.empty()) out += ',';
    out += std::to_string(static_cast<int>(s));
  }
  return out;
}

std::uint32_t Group::product(std::uint32_t x, std::uint32_t y) const {
  // Fold the shorter word through the multiplication tables.
  if (words_[x].size() <= words_[y].size()) {
    std::uint32_t r = y;
    const Word& w = words_[x];
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = left_mult(r, *it);
    return r;
  }
  std::uint32_t r = x;
  for (auto s : words_[y]) r = right_mult(r, s);
  return r;
}

bool Group::bruhat_leq(std::uint32_t x, std::uint32_t y) const {
  if (len_[x] > len_[y]) return false;
  // Greedy subword descent along the canonical word of y.
  std::uint32_t u = x;
  for (auto s : words_[y]) {
    if (u == 0) return true;
    std::uint32_t su = left_mult(u, s);
    if (len_[su] < len_[u]) u = su;
  }
  return u == 0;
}

std::uint32_t Group::from_word(std::span<const std::uint8_t> w) const {
  std::uint32_t r = 0;
  for (auto s : w) {
    if (s < 1 || s > rank_) fail(Errc::Parse, "generator index out of range in word");
    r = right_mult(r, s);
  }
  return r;
}

std::uint32_t Group::parse_word(std::string_view s) const {
  if (s.empty()) return 0;
  std::vector<std::uint8_t> w;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    auto tok = s.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    int gidx = 0;
    auto [q, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), gidx);
    if (ec != std::errc() || q != tok.data() + tok.size())
      fail(Errc::Parse, "bad element word: " + std::string(s));
    w.push_back(static_cast<std::uint8_t>(gidx));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_word(w);
}

std::vector<std::uint32_t> Group::parabolic_elements(ParabolicSubset G) const {
  std::vector<std::uint32_t> out;
  std::set<std::uint32_t> seen{0};
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (int s = 1; s <= rank_; ++s) {
      if (!G.contains(s)) continue;
      std::uint32_t xs = right_mult(x, s);
      if (seen.insert(xs).second) queue.push_back(xs);
    }
  }
  out.assign(seen.begin(), seen.end());  // element ids are already order-sorted
  return out;
}

std::uint32_t Group::longest_in(ParabolicSubset G) const {
  std::uint32_t w = 0;
  for (;;) {
    bool moved = false;
    for (int s = 1; s <= rank_; ++s) {
      if (!G.contains(s)) continue;
      std::uint32_t ws = right_mult(w, s);
      if (len_[ws] > len_[w]) {
        w = ws;
        moved = true;
        break;
      }
    }
    if (!moved) return w;
  }
}

bool Group::extremal_in_coset(std::uint32_t x, ParabolicSubset G, Side side,
                              Extremity e) const {
  // Extremal elements of wG are cut out by right descents in G; of Gw by
  // left descents.
  std::uint32_t desc = side == Side::Left ? rdesc_[x] : ldesc_[x];
  if (e == Extremity::Shortest) return (desc & G.mask) == 0;
  return (desc & G.mask) == G.mask;
}

std::vector<std::uint32_t> Group::coset_reps(ParabolicSubset G, Side side, Extremity e) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < size(); ++x)
    if (extremal_in_coset(x, G, side, e)) out.push_back(x);
  return out;
}

std::vector<std::uint32_t> Group::index_set(IndexKind kind, ParabolicSubset G,
                                            ParabolicSubset H) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < size(); ++x) {
    bool keep = false;
    switch (kind) {
      case IndexKind::WG:
        keep = extremal_in_coset(x, G, Side::Left, Extremity::Longest);
        break;
      case IndexKind::WGH:
        keep = extremal_in_coset(x, G, Side::Left, Extremity::Longest) &&
               extremal_in_coset(x, H, Side::Right, Extremity::Shortest);
        break;
      case IndexKind::VGH:
        keep = extremal_in_coset(x, G, Side::Left, Extremity::Longest) &&
               extremal_in_coset(x, H, Side::Right, Extremity::Longest);
        break;
    }
    if (keep) out.push_back(x);
  }
  return out;
}

std::uint32_t Group::involution(InvolutionKind kind, std::uint32_t x) const {
  std::uint32_t w0 = longest();
  switch (kind) {
    case InvolutionKind::InvW0: return product(inverse(x), w0);
    case InvolutionKind::W0Left: return product(w0, x);
    case InvolutionKind::ConjW0: return product(product(w0, x), w0);
    case InvolutionKind::RingelKoszul: return product(product(w0, inverse(x)), w0);
  }
  fail(Errc::Parse, "unknown involution kind");
}

// ---------------------------------------------------------------------------
// Element helpers

void require_same_group(Element x, Element y) {
  if (x.grp != y.grp) fail(Errc::GroupMismatch, "elements from different group handles");
}

Element product(Element x, Element y) {
  require_same_group(x, y);
  return Element{x.grp, x.grp->product(x.idx, y.idx)};
}

bool bruhat_leq(Element x, Element y) {
  require_same_group(x, y);
  return x.grp->bruhat_leq(x.idx, y.idx);
}

Element longest_element(const Group& g, ParabolicSubset G) {
  return Element{&g, g.longest_in(G)};
}

Element involution(InvolutionKind kind, Element x) {
  return Element{x.grp, x.grp->involution(kind, x.idx)};
}

std::string to_string(Element x) { return x.grp->word_str(x.idx); }

}  // namespace okit
