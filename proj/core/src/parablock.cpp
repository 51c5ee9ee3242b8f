#include "okit/parablock.hpp"

#include <algorithm>

#include "okit/error.hpp"

namespace okit {

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Regular: return "regular";
    case Flavor::Singular: return "singular";
    case Flavor::Parabolic: return "parabolic";
    case Flavor::SingularParabolic: return "singular-parabolic";
    case Flavor::B: return "B";
    case Flavor::C: return "C";
  }
  return "?";
}

Flavor parse_flavor(std::string_view s) {
  if (s == "regular") return Flavor::Regular;
  if (s == "singular") return Flavor::Singular;
  if (s == "parabolic") return Flavor::Parabolic;
  if (s == "singular-parabolic") return Flavor::SingularParabolic;
  if (s == "B") return Flavor::B;
  if (s == "C") return Flavor::C;
  fail(Errc::Parse, "unknown flavor: " + std::string(s));
}

std::string BlockSpec::str() const {
  std::string out = diagram.name();
  if (!G.empty()) out += ";G=" + G.str();
  if (!H.empty()) out += ";H=" + H.str();
  out += ";flavor=";
  out += flavor_name(flavor);
  return out;
}

BlockSpec BlockSpec::parse(std::string_view s) {
  BlockSpec b;
  bool have_flavor = false;
  size_t pos = 0;
  int field = 0;
  while (pos <= s.size()) {
    size_t semi = s.find(';', pos);
    auto tok = s.substr(pos, semi == std::string_view::npos ? semi : semi - pos);
    if (field == 0) {
      b.diagram = CoxeterDiagram::parse(tok);
    } else if (tok.starts_with("G=")) {
      b.G = ParabolicSubset::parse(tok.substr(2));
    } else if (tok.starts_with("H=")) {
      b.H = ParabolicSubset::parse(tok.substr(2));
    } else if (tok.starts_with("flavor=")) {
      b.flavor = parse_flavor(tok.substr(7));
      have_flavor = true;
    } else {
      fail(Errc::Parse, "bad block field: " + std::string(tok));
    }
    ++field;
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  if (!have_flavor) fail(Errc::Parse, "block spec is missing flavor=");
  b.validate();
  return b;
}

void BlockSpec::validate() const {
  for (int s = 1; s <= 30; ++s)
    if ((G.contains(s) || H.contains(s)) && s > diagram.rank)
      fail(Errc::Parse, "generator outside the diagram rank");
  switch (flavor) {
    case Flavor::Regular:
      if (!G.empty() || !H.empty())
        fail(Errc::UnsupportedFlavor, "regular blocks take no G or H");
      break;
    case Flavor::Singular:
      if (!H.empty()) fail(Errc::UnsupportedFlavor, "singular blocks take no H");
      break;
    case Flavor::Parabolic:
      if (!G.empty()) fail(Errc::UnsupportedFlavor, "parabolic blocks take no G");
      break;
    case Flavor::SingularParabolic:
    case Flavor::B:
      break;
    case Flavor::C:
      if (!G.empty())
        fail(Errc::UnsupportedFlavor, "C blocks are supported for trivial singularity only");
      break;
  }
}

LaurentPoly parabolic_dec_poly(const KLTable& t, ParabolicSubset H, std::uint32_t x,
                               std::uint32_t y) {
  const Group& g = t.group();
  if (g.ldesc(x) & H.mask)
    fail(Errc::NotShortestRep, g.word_str(x) + " is not the shortest element of its coset");
  LaurentPoly out;
  for (std::uint32_t u : g.parabolic_elements(H)) {
    LaurentPoly d = dec_poly(t, g.product(u, x), y);
    if (d.is_zero()) continue;
    int lu = g.length(u);
    d = d.shifted(lu);
    if (lu % 2 == 0)
      out += d;
    else
      out -= d;
  }
  return out;
}

LaurentPoly singular_dec_poly(const KLTable& t, ParabolicSubset G, std::uint32_t x,
                              std::uint32_t y) {
  const Group& g = t.group();
  if ((g.rdesc(x) & G.mask) != G.mask || (g.rdesc(y) & G.mask) != G.mask)
    fail(Errc::NotInIndexSet, "singular decomposition numbers need longest representatives");
  return dec_poly(t, x, y);
}

namespace {

std::vector<std::uint32_t> block_index(const Group& g, const BlockSpec& spec) {
  switch (spec.flavor) {
    case Flavor::Regular: {
      std::vector<std::uint32_t> all(g.size());
      for (std::uint32_t i = 0; i < g.size(); ++i) all[i] = i;
      return all;
    }
    case Flavor::Singular:
      return g.index_set(IndexKind::WG, spec.G, {});
    case Flavor::Parabolic:
      return g.coset_reps(spec.H, Side::Right, Extremity::Shortest);
    case Flavor::SingularParabolic:
      return g.index_set(IndexKind::WGH, spec.G, spec.H);
    case Flavor::B:
      return g.index_set(IndexKind::WGH, spec.G, spec.H);
    case Flavor::C:
      return g.index_set(IndexKind::VGH, {}, spec.H);
  }
  return {};
}

}  // namespace

MultMatrix block_dec_matrix(const KLTable& t, const BlockSpec& spec) {
  spec.validate();
  const Group& g = t.group();
  if (g.diagram() != spec.diagram) fail(Errc::GroupMismatch, "block spec names another group");
  if (spec.flavor == Flavor::B || spec.flavor == Flavor::C)
    fail(Errc::UnsupportedFlavor,
         "B and C blocks carry Cartan data only; see the stratified-block interface");
  auto idx = block_index(g, spec);
  if (idx.empty()) fail(Errc::EmptyIndexSet, "block index set is empty");
  MultMatrix d(&g, idx);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      switch (spec.flavor) {
        case Flavor::Regular:
          d.at(i, j) = dec_poly(t, idx[i], idx[j]);
          break;
        case Flavor::Singular:
          d.at(i, j) = singular_dec_poly(t, spec.G, idx[i], idx[j]);
          break;
        case Flavor::Parabolic:
        case Flavor::SingularParabolic:
          d.at(i, j) = parabolic_dec_poly(t, spec.H, idx[i], idx[j]);
          break;
        default:
          break;
      }
    }
  return d;
}

MultMatrix block_cartan(const KLTable& t, const BlockSpec& spec) {
  return cartan_from_dec(block_dec_matrix(t, spec));
}

MultMatrix tilting_transition(const MultMatrix& dec) {
  const std::size_t n = dec.dim();
  MultMatrix tau(dec.group(), dec.index());
  for (std::size_t xi = 0; xi < n; ++xi) {
    // chi = L-basis character of Delta(x), then self-dualize upward.
    std::vector<LaurentPoly> chi(n);
    for (std::size_t z = 0; z < n; ++z) chi[z] = dec.at(xi, z);
    tau.at(xi, xi) = LaurentPoly(1);
    for (std::size_t z = 0; z < n; ++z) {
      if (z == xi) continue;
      const LaurentPoly f = chi[z];
      LaurentPoly corr = f.positive_part().bar() - f.negative_part();
      if (corr.is_zero()) continue;
      if (!corr.coeffs_nonnegative())
        fail(Errc::InvariantBreach, "negative tilting flag multiplicity");
      for (std::size_t w = 0; w < n; ++w) {
        const LaurentPoly& d = dec.at(z, w);
        if (!d.is_zero()) chi[w] += corr * d;
      }
      tau.at(xi, z) = corr;
    }
    for (std::size_t z = 0; z < n; ++z)
      if (chi[z] != chi[z].bar())
        fail(Errc::InvariantBreach, "tilting character failed to self-dualize");
  }
  return tau;
}

BlockData build_block(std::shared_ptr<const KLTable> kl, const BlockSpec& spec) {
  BlockData b;
  b.spec = spec;
  b.g = kl->group_ptr();
  b.dec = block_dec_matrix(*kl, spec);
  b.index = b.dec.index();
  b.cartan = cartan_from_dec(b.dec);
  b.tilt = tilting_transition(b.dec);
  return b;
}

CharVector BlockData::delta_char_L(std::uint32_t x) const {
  CharVector c(g.get(), CharBasis::Delta);
  c.add(x, LaurentPoly(1));
  return delta_to_simple(dec, c);
}

CharVector BlockData::tilting_char_delta(std::uint32_t x) const {
  CharVector c(g.get(), CharBasis::Delta);
  std::size_t i = pos(x);
  for (std::size_t j = 0; j < index.size(); ++j) c.add(index[j], tilt.at(i, j));
  return c;
}

CharVector BlockData::projective_char_delta(std::uint32_t x) const {
  CharVector c(g.get(), CharBasis::Delta);
  std::size_t i = pos(x);
  for (std::size_t j = 0; j < index.size(); ++j) c.add(index[j], dec.at(j, i));
  return c;
}

LaurentPoly coinvariant_hilbert(const Group& g, ParabolicSubset G) {
  LaurentPoly h;
  for (std::uint32_t u : g.parabolic_elements(G)) h.add_term(2 * g.length(u), 1);
  return h;
}

BggProfile bgg_complex_profile(const Group& g, ParabolicSubset G, std::uint32_t w) {
  if ((g.rdesc(w) & G.mask) != G.mask)
    fail(Errc::NotInIndexSet, g.word_str(w) + " is not the longest element of its coset");
  BggProfile p;
  p.w = w;
  p.G = G;
  std::uint32_t shortest = g.product(w, g.longest_in(G));
  for (std::uint32_t u : g.parabolic_elements(G)) {
    int i = g.length(u);
    p.positions[i][{g.product(shortest, u), i}] += 1;
  }
  return p;
}

CharVector bgg_euler_delta(const Group& g, const BggProfile& p) {
  CharVector e(&g, CharBasis::Delta);
  for (const auto& [i, terms] : p.positions) {
    for (const auto& [ws, mult] : terms) {
      LaurentPoly c = LaurentPoly(mult).shifted(i);
      e.add(ws.first, i % 2 == 0 ? c : -c);
    }
  }
  return e;
}

}  // namespace okit
