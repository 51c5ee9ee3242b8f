#include "okit/stratblock.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "okit/error.hpp"

namespace okit {

CharVector theta_out_char(const Group& g, ParabolicSubset G, std::uint32_t w) {
  if ((g.rdesc(w) & G.mask) != G.mask)
    fail(Errc::NotInIndexSet, g.word_str(w) + " is not the longest element of its coset");
  CharVector c(&g, CharBasis::Delta);
  std::uint32_t shortest = g.product(w, g.longest_in(G));
  int lw = g.length(w);
  for (std::uint32_t u : g.parabolic_elements(G)) {
    std::uint32_t x = g.product(shortest, u);
    c.add(x, LaurentPoly(1).shifted(lw - g.length(x)));
  }
  return c;
}

StratBlockData b_block_data(std::shared_ptr<const KLTable> kl, ParabolicSubset G,
                            ParabolicSubset H) {
  const Group& g = kl->group();
  StratBlockData b;
  b.spec = BlockSpec{g.diagram(), G, H, Flavor::B};
  b.g = kl->group_ptr();
  b.index = g.index_set(IndexKind::WGH, G, H);
  if (b.index.empty()) fail(Errc::EmptyIndexSet, "W_G^H is empty");
  BlockSpec host{g.diagram(), {}, H, Flavor::Parabolic};
  b.cartan = block_cartan(*kl, host).submatrix(b.index);
  b.wall = G;
  b.h = coinvariant_hilbert(g, G);
  return b;
}

nlohmann::json T11Report::to_json() const {
  nlohmann::json j;
  j["theorem"] = "t11";
  j["params"] = {{"type", spec.diagram.name()}, {"G", spec.G.str()}, {"H", spec.H.str()}};
  j["pass"] = pass;
  j["checked_entries"] = checked_entries;
  if (!failures.empty()) j["failures"] = failures;
  return j;
}

T11Report verify_t11_identity(std::shared_ptr<const KLTable> kl, ParabolicSubset G,
                              ParabolicSubset H) {
  const Group& g = kl->group();
  StratBlockData b = b_block_data(kl, G, H);
  BlockSpec quotient{g.diagram(), G, H,
                     G.empty() ? (H.empty() ? Flavor::Regular : Flavor::Parabolic)
                               : (H.empty() ? Flavor::Singular : Flavor::SingularParabolic)};
  MultMatrix ca = block_cartan(*kl, quotient);
  if (ca.index() != b.index)
    fail(Errc::InvariantBreach, "centralizer and quotient index sets disagree");

  T11Report rep;
  rep.spec = b.spec;
  for (std::size_t i = 0; i < b.index.size(); ++i)
    for (std::size_t j = 0; j < b.index.size(); ++j) {
      ++rep.checked_entries;
      LaurentPoly rhs = b.h * ca.at(i, j);
      if (b.cartan.at(i, j) != rhs) {
        rep.pass = false;
        rep.failures.push_back(g.word_str(b.index[i]) + " , " + g.word_str(b.index[j]) + ": " +
                               b.cartan.at(i, j).str() + " != " + rhs.str());
      }
    }
  return rep;
}

StratBlockData c_block_data(std::shared_ptr<const KLTable> kl, ParabolicSubset H) {
  const Group& g = kl->group();
  StratBlockData c;
  c.spec = BlockSpec{g.diagram(), {}, H, Flavor::C};
  c.g = kl->group_ptr();
  c.index = g.index_set(IndexKind::VGH, {}, H);
  c.cartan = cartan_matrix(*kl).submatrix(c.index);
  c.wall = H;
  c.h = coinvariant_hilbert(g, H);
  return c;
}

std::uint32_t CBlock::to_parabolic(std::uint32_t x) const {
  return data.g->product(w0H, x);
}

std::uint32_t CBlock::from_parabolic(std::uint32_t xbar) const {
  return data.g->product(w0H, xbar);
}

CBlock build_c_block(std::shared_ptr<const KLTable> kl, ParabolicSubset H) {
  const Group& g = kl->group();
  CBlock cb;
  cb.data = c_block_data(kl, H);
  cb.parabolic = build_block(kl, BlockSpec{g.diagram(), {}, H, Flavor::Parabolic});
  cb.w0H = g.longest_in(H);
  cb.wall_length = g.length(cb.w0H);

  // Proper-standard characters and tilting transitions are the parabolic
  // ones, transported along the coset bijection x -> w0^H x.
  BlockData& pr = cb.proper;
  pr.spec = cb.data.spec;
  pr.g = kl->group_ptr();
  pr.index = cb.data.index;
  pr.dec = MultMatrix(&g, pr.index);
  pr.tilt = MultMatrix(&g, pr.index);
  std::vector<std::size_t> ppos(pr.index.size());
  for (std::size_t i = 0; i < pr.index.size(); ++i)
    ppos[i] = cb.parabolic.pos(cb.to_parabolic(pr.index[i]));
  for (std::size_t i = 0; i < pr.index.size(); ++i)
    for (std::size_t j = 0; j < pr.index.size(); ++j) {
      pr.dec.at(i, j) = cb.parabolic.dec.at(ppos[i], ppos[j]);
      pr.tilt.at(i, j) = cb.parabolic.tilt.at(ppos[i], ppos[j]);
    }
  pr.cartan = cb.data.cartan;  // centralizer Cartan, not dec^T dec
  return cb;
}

CStandardData c_standard_flags(const CBlock& cb, std::uint32_t x) {
  const Group& g = *cb.data.g;
  if (!cb.proper.dec.contains(x))
    fail(Errc::NotInIndexSet, g.word_str(x) + " is not in V for this block");
  CStandardData out;
  out.proper_char = CharVector(&g, CharBasis::L);
  std::size_t i = cb.proper.pos(x);
  for (std::size_t j = 0; j < cb.proper.index.size(); ++j) {
    const LaurentPoly& d = cb.proper.dec.at(i, j);
    if (!d.is_zero()) out.proper_char.add(cb.proper.index[j], d);
  }
  out.proper_flag = cb.data.h;
  out.standard_char = out.proper_char.scaled(cb.data.h);
  return out;
}

ComplexProfile c_tilting_coresolution(const CBlock& cb, std::uint32_t x) {
  return linear_tilting_coresolution(cb.proper, x);
}

nlohmann::json ExtReport::to_json(const Group& g) const {
  nlohmann::json j;
  j["x"] = g.word_str(x);
  j["y"] = g.word_str(y);
  auto es = nlohmann::json::array();
  for (const auto& e : entries) es.push_back({{"k", e.k}, {"m", e.m}, {"dim", e.dim}});
  j["entries"] = es;
  j["rank"] = rank;
  j["total_dim"] = total_dim;
  j["bounds_ok"] = bounds_ok;
  return j;
}

ExtReport c_ext_profile(const CBlock& cb, std::uint32_t x, std::uint32_t y) {
  const Group& g = *cb.data.g;
  if (!cb.proper.dec.contains(x) || !cb.proper.dec.contains(y))
    fail(Errc::NotInIndexSet, "arguments must lie in V for this block");
  if (x == y || !g.bruhat_leq(y, x))
    fail(Errc::OrderViolation, "c_ext_profile requires x > y in the induced order");

  const int twoL = 2 * cb.wall_length;
  const int K = g.length(x) - g.length(y);
  ComplexProfile cores = c_tilting_coresolution(cb, y);

  ExtReport rep;
  rep.x = x;
  rep.y = y;
  const std::size_t xpos = cb.proper.pos(x);

  for (const auto& [k, terms] : cores.positions) {
    // hom(ProperStandard(x)<m>, position-k term): pair against the
    // costandard flags of the tilting summands.  The costandard flag of
    // T(z) is v^{2 l(w0^H)} bar(tau_{z,x}) in the character variable.
    LaurentPoly series;
    for (const auto& [ws, mult] : terms) {
      const LaurentPoly& tau = cb.proper.tilt.at(cb.proper.pos(ws.first), xpos);
      if (tau.is_zero()) continue;
      series += LaurentPoly(mult) * tau.bar().shifted(twoL - k);
    }
    for (const auto& [e, c] : series.terms()) {
      int m = -e;  // coefficient of v^{-m}
      ExtEntry entry{k, m, static_cast<long long>(c)};
      rep.entries.push_back(entry);
      if (!(m + twoL <= k && k <= K)) rep.bounds_ok = false;
    }
  }

  auto kit = cores.positions.find(K);
  if (kit != cores.positions.end()) {
    auto it = kit->second.find({x, K});
    if (it != kit->second.end()) rep.rank = it->second;
  }
  rep.total_dim = rep.rank * static_cast<long long>(cb.data.h.eval_one());

  // Two routes to the rank: the summand count above, and the hom-profile
  // entry at the extreme degree (K, K - 2 l(w0^H)).
  long long rank2 = 0;
  for (const auto& e : rep.entries)
    if (e.k == K && e.m == K - twoL) rank2 += e.dim;
  if (rank2 != rep.rank)
    fail(Errc::InvariantBreach, "rank mismatch between summand count and hom profile");

  if (!rep.bounds_ok)
    fail(Errc::InvariantBreach, "ext profile entry violates the degree window");
  return rep;
}

}  // namespace okit
