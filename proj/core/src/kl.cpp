#include "okit/kl.hpp"

#include <bit>
#include <nlohmann/json.hpp>

#include "okit/error.hpp"

namespace okit {

namespace {
const LaurentPoly kZero;
const LaurentPoly kOne(1);
}  // namespace

const LaurentPoly& KLTable::kl(std::uint32_t x, std::uint32_t y) const {
  if (x == y) return kOne;
  if (!g_->bruhat_leq(x, y)) return kZero;
  auto it = memo_.find(key(x, y));
  if (it != memo_.end()) return it->second;

  const Group& g = *g_;
  // ShortLex-least right descent of y keeps the memo fill order deterministic.
  int s = std::countr_zero(g.rdesc(y)) + 1;
  std::uint32_t v = g.right_mult(y, s);
  std::uint32_t xs = g.right_mult(x, s);
  bool x_down = g.length(xs) < g.length(x);

  LaurentPoly p = x_down ? kl(xs, v) + kl(x, v).shifted(1)
                         : kl(xs, v).shifted(1) + kl(x, v);

  // mu-corrections: subtract mu(z,v) q^{(l(y)-l(z))/2} P_{x,z} over all
  // x <= z <= v with zs < z.
  const int ly = g.length(y);
  for (std::uint32_t z = x; z <= v; ++z) {
    if ((ly - g.length(z)) % 2 != 0) continue;
    if (!(g.rdesc(z) & (1u << (s - 1)))) continue;
    if (!g.bruhat_leq(x, z) || !g.bruhat_leq(z, v)) continue;
    long long m = mu(z, v);
    if (m != 0) p -= (LaurentPoly(m) * kl(x, z)).shifted((ly - g.length(z)) / 2);
  }

  return memo_.emplace(key(x, y), std::move(p)).first->second;
}

long long KLTable::mu(std::uint32_t x, std::uint32_t y) const {
  if (x == y || !g_->bruhat_leq(x, y)) return 0;
  int gap = g_->length(y) - g_->length(x);
  if (gap % 2 == 0) return 0;
  Coeff c = kl(x, y).coeff((gap - 1) / 2);
  return static_cast<long long>(c);
}

const LaurentPoly& KLTable::r_poly(std::uint32_t x, std::uint32_t y) const {
  if (x == y) return kOne;
  if (!g_->bruhat_leq(x, y)) return kZero;
  auto it = rmemo_.find(key(x, y));
  if (it != rmemo_.end()) return it->second;

  const Group& g = *g_;
  int s = std::countr_zero(g.rdesc(y)) + 1;
  std::uint32_t v = g.right_mult(y, s);
  std::uint32_t xs = g.right_mult(x, s);
  LaurentPoly r;
  if (g.length(xs) < g.length(x)) {
    r = r_poly(xs, v);
  } else {
    // (q-1) R_{x,v} + q R_{xs,v}
    r = r_poly(x, v).shifted(1) - r_poly(x, v) + r_poly(xs, v).shifted(1);
  }
  return rmemo_.emplace(key(x, y), std::move(r)).first->second;
}

bool KLTable::selfcheck(std::uint32_t x, std::uint32_t y) const {
  if (!g_->bruhat_leq(x, y)) fail(Errc::NotComparable, "selfcheck requires x <= y");
  int gap = g_->length(y) - g_->length(x);
  LaurentPoly lhs = kl(x, y).subst_monomial(-1, gap);
  LaurentPoly rhs;
  for (std::uint32_t z = x; z <= y; ++z) {
    if (!g_->bruhat_leq(x, z) || !g_->bruhat_leq(z, y)) continue;
    rhs += r_poly(x, z) * kl(z, y);
  }
  return lhs == rhs;
}

void KLTable::build_all() const {
  if (complete_) return;
  for (std::uint32_t y = 0; y < g_->size(); ++y)
    for (std::uint32_t x = 0; x <= y; ++x) kl(x, y);
  complete_ = true;
}

nlohmann::json KLTable::to_json() const {
  build_all();
  nlohmann::json j;
  j["version"] = 1;
  j["diagram"] = g_->diagram().name();
  auto entries = nlohmann::json::array();
  for (std::uint32_t y = 0; y < g_->size(); ++y)
    for (std::uint32_t x = 0; x <= y; ++x) {
      if (!g_->bruhat_leq(x, y)) continue;
      nlohmann::json e;
      e["x"] = g_->word_str(x);
      e["y"] = g_->word_str(y);
      auto pj = nlohmann::json::array();
      for (auto [exp, c] : kl(x, y).pairs()) pj.push_back({exp, c});
      e["p"] = pj;
      entries.push_back(std::move(e));
    }
  j["entries"] = std::move(entries);
  return j;
}

std::shared_ptr<KLTable> KLTable::from_json(GroupPtr g, const nlohmann::json& j) {
  if (!j.contains("version") || j["version"].get<int>() != 1)
    fail(Errc::Parse, "unsupported KL cache version");
  if (j["diagram"].get<std::string>() != g->diagram().name())
    fail(Errc::Parse, "KL cache diagram mismatch");
  auto t = std::make_shared<KLTable>(g);
  for (const auto& e : j["entries"]) {
    std::uint32_t x = g->parse_word(e["x"].get<std::string>());
    std::uint32_t y = g->parse_word(e["y"].get<std::string>());
    std::vector<std::pair<int, long long>> ps;
    for (const auto& pr : e["p"]) ps.emplace_back(pr[0].get<int>(), pr[1].get<long long>());
    if (x != y) t->memo_[t->key(x, y)] = LaurentPoly::from_pairs(ps);
  }
  t->complete_ = true;
  return t;
}

LaurentPoly kl_poly(const KLTable& t, Element x, Element y) {
  require_same_group(x, y);
  if (x.grp != &t.group()) fail(Errc::GroupMismatch, "elements do not belong to the table's group");
  return t.kl(x.idx, y.idx);
}

long long mu(const KLTable& t, Element x, Element y) {
  require_same_group(x, y);
  return t.mu(x.idx, y.idx);
}

LaurentPoly r_poly(const KLTable& t, Element x, Element y) {
  require_same_group(x, y);
  if (x.grp != &t.group()) fail(Errc::GroupMismatch, "elements do not belong to the table's group");
  return t.r_poly(x.idx, y.idx);
}

bool kl_selfcheck(const KLTable& t, Element x, Element y) {
  require_same_group(x, y);
  return t.selfcheck(x.idx, y.idx);
}

MultMatrix inverse_kl_matrix(const KLTable& t) {
  const Group& g = t.group();
  std::vector<std::uint32_t> all(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) all[i] = i;
  MultMatrix m(&g, all);
  for (std::uint32_t x = 0; x < g.size(); ++x)
    for (std::uint32_t y = x; y < g.size(); ++y) {
      if (!g.bruhat_leq(x, y)) continue;
      const LaurentPoly& p = t.kl(x, y);
      m.at(x, y) = ((g.length(x) + g.length(y)) % 2 == 0) ? p : -p;
    }
  MultMatrix inv = m.inverse_unitriangular();
  for (std::uint32_t x = 0; x < g.size(); ++x)
    for (std::uint32_t y = 0; y < g.size(); ++y)
      if (!inv.at(x, y).coeffs_nonnegative())
        fail(Errc::InvariantBreach, "inverse KL matrix entry with a negative coefficient");
  return inv;
}

}  // namespace okit
