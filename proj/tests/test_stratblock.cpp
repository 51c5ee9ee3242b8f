#include <doctest.h>

#include "helpers.hpp"
#include "okit/error.hpp"
#include "okit/stratblock.hpp"

using namespace okit;
using namespace okit::testing;

namespace {
std::shared_ptr<KLTable> table(const char* name) {
  return std::make_shared<KLTable>(group(name));
}
}  // namespace

TEST_CASE("stratblock: wall-crossing characters") {
  auto t = table("A2");
  const Group& g = t->group();

  // G empty: just the standard character
  CharVector c0 = theta_out_char(g, {}, g.generator(1).idx);
  CHECK(c0.coeff.size() == 1);
  CHECK(c0.coeff.at(g.generator(1).idx).is_one());

  // A1: the wall-crossing of the wall simple is the big projective
  auto t1 = table("A1");
  const Group& g1 = t1->group();
  CharVector c1 = theta_out_char(g1, ParabolicSubset::of({1}), g1.generator(1).idx);
  CHECK(c1.coeff.at(g1.generator(1).idx).is_one());
  CHECK(c1.coeff.at(0) == lp({{1, 1}}));

  // A2, G={1}, w=s2s1: Delta(s2s1) + v Delta(s2)
  CharVector c2 = theta_out_char(g, ParabolicSubset::of({1}), g.parse_word("2,1"));
  CHECK(c2.coeff.size() == 2);
  CHECK(c2.coeff.at(g.parse_word("2,1")).is_one());
  CHECK(c2.coeff.at(g.generator(2).idx) == lp({{1, 1}}));

  CHECK_THROWS_AS(theta_out_char(g, ParabolicSubset::of({1}), 0), Error);
}

TEST_CASE("stratblock: wall-crossing coefficients are the predicted monomials") {
  for (const char* name : {"A3", "B2"}) {
    auto t = table(name);
    const Group& g = t->group();
    for (std::uint32_t gm = 0; gm < (1u << g.rank()); ++gm) {
      ParabolicSubset G{gm};
      int lw0g = g.length(g.longest_in(G));
      for (auto w : g.index_set(IndexKind::WG, G, {})) {
        CharVector c = theta_out_char(g, G, w);
        CHECK(c.coeff.size() == g.parabolic_elements(G).size());
        for (const auto& [x, f] : c.coeff) {
          int e = g.length(w) - g.length(x);
          CHECK(f == lp({{e, 1}}));
          CHECK(e >= 0);
          CHECK(e <= lw0g);
        }
      }
    }
  }
}

TEST_CASE("stratblock: centralizer data for the A1 wall") {
  auto t = table("A1");
  const Group& g = t->group();
  StratBlockData b = b_block_data(t, ParabolicSubset::of({1}), {});
  CHECK(b.index == std::vector<std::uint32_t>{g.generator(1).idx});
  CHECK(b.cartan.at(0, 0) == lp({{0, 1}, {2, 1}}));
  CHECK(b.h == lp({{0, 1}, {2, 1}}));
  T11Report rep = verify_t11_identity(t, ParabolicSubset::of({1}), {});
  CHECK(rep.pass);
  CHECK(rep.checked_entries == 1);
}

TEST_CASE("stratblock: freeness identity over all A1/A2 walls") {
  for (const char* name : {"A1", "A2"}) {
    auto t = table(name);
    const Group& g = t->group();
    for (std::uint32_t gm = 0; gm < (1u << g.rank()); ++gm)
      for (std::uint32_t hm = 0; hm < (1u << g.rank()); ++hm) {
        ParabolicSubset G{gm}, H{hm};
        if (g.index_set(IndexKind::WGH, G, H).empty()) continue;
        T11Report rep = verify_t11_identity(t, G, H);
        CAPTURE(name);
        CAPTURE(gm);
        CAPTURE(hm);
        CHECK(rep.pass);
      }
  }
  auto t = table("A2");
  CHECK_THROWS_AS(
      verify_t11_identity(t, ParabolicSubset::of({1, 2}), ParabolicSubset::of({1})), Error);
}

TEST_CASE("stratblock: C-block data") {
  auto t = table("A2");
  const Group& g = t->group();

  // H empty: the whole regular block
  StratBlockData full = c_block_data(t, {});
  CHECK(full.index.size() == g.size());
  CHECK(full.h.is_one());

  auto t1 = table("A1");
  StratBlockData c1 = c_block_data(t1, ParabolicSubset::of({1}));
  CHECK(c1.index == std::vector<std::uint32_t>{t1->group().generator(1).idx});
  CHECK(c1.cartan.at(0, 0) == lp({{0, 1}, {2, 1}}));

  StratBlockData c2 = c_block_data(t, ParabolicSubset::of({1}));
  std::vector<std::string> names;
  for (auto x : c2.index) names.push_back(g.word_str(x));
  CHECK(names == std::vector<std::string>{"1", "1,2", "1,2,1"});
  CHECK(c2.cartan.is_symmetric());
  // v = 0 gives the identity
  for (std::size_t i = 0; i < c2.cartan.dim(); ++i)
    for (std::size_t j = 0; j < c2.cartan.dim(); ++j)
      CHECK(c2.cartan.at(i, j).coeff(0) == (i == j ? 1 : 0));
}

TEST_CASE("stratblock: index-level duality of the C block") {
  // Left w0-multiplication carries the C-block index V (longest in H w)
  // onto the shortest representatives for the w0-conjugated wall, the index
  // set of its quadratic-dual quotient algebra.
  for (const char* name : {"A2", "A3", "B2"}) {
    auto t = table(name);
    const Group& g = t->group();
    std::uint32_t w0 = g.longest();
    for (std::uint32_t hm = 0; hm < (1u << g.rank()); ++hm) {
      ParabolicSubset H{hm};
      ParabolicSubset Hc;
      for (int s = 1; s <= g.rank(); ++s)
        if (H.contains(s))
          for (int u = 1; u <= g.rank(); ++u)
            if (g.product(g.product(w0, g.generator(s).idx), w0) == g.generator(u).idx)
              Hc.add(u);
      std::vector<std::uint32_t> image;
      for (auto x : g.index_set(IndexKind::VGH, {}, H))
        image.push_back(g.involution(InvolutionKind::W0Left, x));
      std::sort(image.begin(), image.end());
      CHECK(image == g.coset_reps(Hc, Side::Right, Extremity::Shortest));
    }
  }
}

TEST_CASE("stratblock: standard and proper standard characters for C blocks") {
  auto t1 = table("A1");
  CBlock cb1 = build_c_block(t1, ParabolicSubset::of({1}));
  std::uint32_t s = t1->group().generator(1).idx;
  CStandardData d1 = c_standard_flags(cb1, s);
  CHECK(d1.proper_flag == lp({{0, 1}, {2, 1}}));
  // standard total = |W_H| times the proper standard total at v=1
  CHECK(d1.standard_char.coeff.at(s).eval_one() == 2 * d1.proper_char.coeff.at(s).eval_one());

  // H empty: standard = proper standard, flag polynomial 1
  auto t = table("A2");
  CBlock cb0 = build_c_block(t, {});
  CStandardData d0 = c_standard_flags(cb0, t->group().generator(1).idx);
  CHECK(d0.proper_flag.is_one());
  CHECK(d0.standard_char == d0.proper_char);

  // A2, H={1}, x=s1: proper character transported from the parabolic block
  CBlock cb = build_c_block(t, ParabolicSubset::of({1}));
  const Group& g = t->group();
  CStandardData d = c_standard_flags(cb, g.generator(1).idx);
  CHECK(d.proper_flag == lp({{0, 1}, {2, 1}}));
  CharVector want(&g, CharBasis::L);
  want.add(g.generator(1).idx, LaurentPoly(1));
  want.add(g.parse_word("1,2"), lp({{1, 1}}));
  CHECK(d.proper_char == want);

  CHECK_THROWS_AS(c_standard_flags(cb, 0), Error);
}

TEST_CASE("stratblock: C-block tilting characters satisfy the twisted self-duality") {
  for (const char* name : {"A2", "A3", "B2"}) {
    auto t = table(name);
    const Group& g = t->group();
    for (std::uint32_t hm = 0; hm < (1u << g.rank()); ++hm) {
      ParabolicSubset H{hm};
      CBlock cb = build_c_block(t, H);
      int twoL = 2 * cb.wall_length;
      for (auto x : cb.data.index) {
        // L-basis character of T_C(x): rows of tilt against standard chars
        CharVector chi(&g, CharBasis::L);
        std::size_t i = cb.proper.pos(x);
        for (std::size_t j = 0; j < cb.proper.index.size(); ++j) {
          const LaurentPoly& tau = cb.proper.tilt.at(i, j);
          if (tau.is_zero()) continue;
          CStandardData sd = c_standard_flags(cb, cb.proper.index[j]);
          chi += sd.standard_char.scaled(tau);
        }
        for (const auto& [z, f] : chi.coeff) CHECK(f.bar() == f.shifted(-twoL));
      }
    }
  }
}

TEST_CASE("stratblock: C coresolution transports the parabolic one") {
  auto t = table("A2");
  const Group& g = t->group();
  CBlock cb = build_c_block(t, ParabolicSubset::of({1}));
  ComplexProfile p = c_tilting_coresolution(cb, g.generator(1).idx);
  CHECK(p.positions.at(0).at({g.generator(1).idx, 0}) == 1);
  CHECK(p.positions.at(1).at({g.parse_word("1,2"), 1}) == 1);
  CHECK(p.positions.at(2).at({g.longest(), 2}) == 1);
  CHECK(p.max_position() == 2);
}

TEST_CASE("stratblock: ext profile for the A2 wall, frozen values") {
  auto t = table("A2");
  const Group& g = t->group();
  CBlock cb = build_c_block(t, ParabolicSubset::of({1}));
  ExtReport rep = c_ext_profile(cb, g.longest(), g.generator(1).idx);
  CHECK(rep.bounds_ok);
  CHECK(rep.rank == 1);
  CHECK(rep.total_dim == 2);
  REQUIRE(rep.entries.size() == 2);
  CHECK(rep.entries[0].k == 1);
  CHECK(rep.entries[0].m == -2);
  CHECK(rep.entries[0].dim == 1);
  CHECK(rep.entries[1].k == 2);
  CHECK(rep.entries[1].m == 0);
  CHECK(rep.entries[1].dim == 1);

  CHECK_THROWS_AS(c_ext_profile(cb, g.generator(1).idx, g.longest()), Error);
  try {
    c_ext_profile(cb, g.generator(1).idx, g.generator(1).idx);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrderViolation);
  }
}

TEST_CASE("stratblock: ext profiles respect the degree window everywhere") {
  for (const char* name : {"A2", "A3", "B2"}) {
    auto t = table(name);
    const Group& g = t->group();
    for (std::uint32_t hm = 0; hm < (1u << g.rank()); ++hm) {
      ParabolicSubset H{hm};
      if (g.parabolic_elements(H).size() > 6) continue;
      CBlock cb = build_c_block(t, H);
      int twoL = 2 * cb.wall_length;
      for (auto x : cb.data.index)
        for (auto y : cb.data.index) {
          if (x == y || !g.bruhat_leq(y, x)) continue;
          ExtReport rep = c_ext_profile(cb, x, y);
          CHECK(rep.bounds_ok);
          int K = g.length(x) - g.length(y);
          for (const auto& e : rep.entries) {
            CHECK(e.m + twoL <= e.k);
            CHECK(e.k <= K);
            CHECK(e.dim > 0);
          }
          CHECK(rep.total_dim == rep.rank * static_cast<long long>(cb.data.h.eval_one()));
        }
    }
  }
}

TEST_CASE("stratblock: degenerate wall reduces ext profiles to the regular block") {
  auto t = table("A2");
  const Group& g = t->group();
  CBlock cb = build_c_block(t, {});
  ExtReport rep = c_ext_profile(cb, g.longest(), 0);
  CHECK(rep.bounds_ok);
  for (const auto& e : rep.entries) {
    CHECK(0 <= e.k);
    CHECK(e.m <= e.k);  // the window at a trivial wall
    CHECK(e.k <= g.length(g.longest()));
  }
  CHECK(rep.total_dim == rep.rank);
}
