#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "wonderlat/lattice.hpp"

using namespace wlat;

namespace {

SphericalVec sv(const WonderfulLattice& L, std::initializer_list<Int> v) {
  SphericalVec g(v);
  REQUIRE((int)g.size() == L.n_sroots());
  return g;
}

DivisorVec dv(const WonderfulLattice& L, std::initializer_list<std::pair<const char*, Int>> v) {
  DivisorVec d = L.zero_divisor();
  for (auto& [label, c] : v) d[L.color_index(label)] = c;
  return d;
}

// independent oracle: covering pairs by double enumeration in a height box
std::set<SphericalVec> brute_covers(const WonderfulLattice& L, Int fbox, Int gbox) {
  std::set<SphericalVec> out;
  int m = L.n_colors(), n = L.n_sroots();
  std::vector<DivisorVec> divisors;
  DivisorVec f(m, 0);
  std::function<void(int, Int)> genf = [&](int i, Int used) {
    if (i == m) {
      divisors.push_back(f);
      return;
    }
    for (f[i] = 0; used + f[i] <= fbox; ++f[i]) genf(i + 1, used + f[i]);
    f[i] = 0;
  };
  genf(0, 0);
  std::vector<SphericalVec> gammas;
  SphericalVec g(n, 0);
  std::function<void(int, Int)> geng = [&](int j, Int used) {
    if (j == n) {
      if (used > 0) gammas.push_back(g);
      return;
    }
    for (g[j] = 0; used + g[j] <= gbox; ++g[j]) geng(j + 1, used + g[j]);
    g[j] = 0;
  };
  geng(0, 0);
  for (const DivisorVec& F : divisors)
    for (const SphericalVec& G : gammas) {
      DivisorVec E = ivec_sub(F, L.expand(G));
      if (!ivec_nonneg(E)) continue;
      bool mid = false;
      for (const SphericalVec& G2 : gammas) {
        if (G2 == G) continue;
        bool leq = true;
        for (int j = 0; j < n; ++j) leq &= G2[j] <= G[j];
        if (!leq) continue;
        if (ivec_nonneg(ivec_add(E, L.expand(G2)))) {
          mid = true;
          break;
        }
      }
      if (!mid) out.insert(G);
    }
  return out;
}

}  // namespace

TEST_CASE("catalog entries construct and validate") {
  for (const char* id :
       {"model:A2", "model:A5", "model:B4", "model:C4", "model:D5", "model:D6", "model:E6",
        "model:E7", "model:E8", "model:F4", "model:G2", "so-odd:4", "comodel:A4", "comodel:A5",
        "comodel:D4", "comodel:D5", "comodel:D7", "comodel:E6", "comodel:E7", "comodel:E8",
        "orbit-bd:11:3", "orbit-bd:12:4", "case-v", "case-x", "sl2-torus", "sp8-sym",
        "sp8-sym-closure", "e8-induced"}) {
    CAPTURE(id);
    CHECK_NOTHROW(catalog(id));
  }
  CHECK_THROWS_AS(catalog("model:H3"), InvalidType);
  CHECK_THROWS_AS(catalog("orbit-bd:9:4"), InvalidType);
}

TEST_CASE("sigma_leq") {
  WonderfulLattice c4 = catalog("model:C4");
  DivisorVec d2 = c4.color(1);
  auto g = sigma_leq(d2, ivec_scale(2, d2), c4);
  REQUIRE(g.has_value());
  CHECK(*g == sv(c4, {1, 1, 1}));  // D2 <= 2D2 with gamma = s1+s2+s3

  WonderfulLattice g2 = catalog("model:G2");
  auto gg = sigma_leq(g2.color(0), g2.color(1), g2);
  REQUIRE(gg.has_value());
  CHECK(*gg == sv(g2, {1}));  // D1 <= D2 with gamma = sigma

  auto refl = sigma_leq(d2, d2, c4);
  REQUIRE(refl.has_value());
  CHECK(ivec_zero(*refl));
  CHECK_FALSE(sigma_leq(ivec_scale(2, d2), d2, c4).has_value());
}

TEST_CASE("sigma_leq is a partial order on random vectors") {
  WonderfulLattice L = catalog("model:B4");
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    DivisorVec a(4), b(4), c(4);
    for (int i = 0; i < 4; ++i) {
      a[i] = rng() % 4;
      b[i] = rng() % 4;
      c[i] = rng() % 4;
    }
    CHECK(sigma_leq(a, a, L).has_value());
    auto ab = sigma_leq(a, b, L), ba = sigma_leq(b, a, L);
    if (ab && ba) CHECK(a == b);  // antisymmetry
    auto bc = sigma_leq(b, c, L);
    if (ab && bc) {
      auto ac = sigma_leq(a, c, L);
      REQUIRE(ac.has_value());
      CHECK(*ac == ivec_add(*ab, *bc));  // transitivity with additive witness
    }
  }
}

TEST_CASE("full-support covering differences: type A") {
  WonderfulLattice a4 = catalog("model:A4");
  auto cov = covering_differences(a4, true);
  CHECK(cov == std::vector<SphericalVec>{sv(a4, {1, 0, 1})});  // s1+s3 = D1+D4
  CHECK(a4.expand(sv(a4, {1, 0, 1})) == dv(a4, {{"D1", 1}, {"D4", 1}}));

  WonderfulLattice a5 = catalog("model:A5");
  auto cov5 = covering_differences(a5, true);
  CHECK(cov5 == std::vector<SphericalVec>{sv(a5, {1, 1, 1, 1})});
  CHECK(a5.expand(sv(a5, {1, 1, 1, 1})) == dv(a5, {{"D2", 1}, {"D4", 1}}));
}

TEST_CASE("full-support covering differences: types B and C") {
  WonderfulLattice b4 = catalog("model:B4");
  auto covb = covering_differences(b4, true);
  CHECK(covb == std::vector<SphericalVec>{sv(b4, {1, 0, 1})});
  CHECK(b4.expand(sv(b4, {1, 0, 1})) == dv(b4, {{"D1", 1}}));
  CHECK(covering_differences(catalog("model:B5"), true).empty());

  WonderfulLattice c4 = catalog("model:C4");
  auto covc = covering_differences(c4, true);
  CHECK(covc == std::vector<SphericalVec>{sv(c4, {1, 1, 1})});
  CHECK(c4.expand(sv(c4, {1, 1, 1})) == dv(c4, {{"D2", 1}}));
}

TEST_CASE("full-support covering differences: type D") {
  CHECK(covering_differences(catalog("model:D4"), true).empty());
  CHECK(covering_differences(catalog("model:D6"), true).empty());
  WonderfulLattice d5 = catalog("model:D5");
  auto cov = covering_differences(d5, true);
  REQUIRE(cov.size() == 2);  // j odd <= r-2: j in {1, 3}
  std::set<DivisorVec> images;
  for (auto& g : cov) images.insert(d5.expand(g));
  CHECK(images.count(dv(d5, {{"D1", 2}})));                         // j = 1
  CHECK(images.count(dv(d5, {{"D1", 1}, {"D2", -1}, {"D3", 1}})));  // j = 3
  CHECK(std::find(cov.begin(), cov.end(), sv(d5, {2, 0, 1, 1})) != cov.end());
  CHECK(std::find(cov.begin(), cov.end(), sv(d5, {1, 0, 1, 1})) != cov.end());
}

TEST_CASE("full-support covering differences: exceptional types") {
  WonderfulLattice e6 = catalog("model:E6");
  auto cov6 = covering_differences(e6, true);
  REQUIRE(cov6.size() == 2);
  CHECK(std::find(cov6.begin(), cov6.end(), sv(e6, {1, 1, 1, 1, 1})) != cov6.end());
  CHECK(std::find(cov6.begin(), cov6.end(), sv(e6, {2, 2, 1, 1, 2})) != cov6.end());
  CHECK(e6.expand(sv(e6, {1, 1, 1, 1, 1})) == dv(e6, {{"D4", 1}, {"D2", -1}}));
  CHECK(e6.expand(sv(e6, {2, 2, 1, 1, 2})) == dv(e6, {{"D1", 1}, {"D6", 1}}));

  WonderfulLattice e7 = catalog("model:E7");
  auto cov7 = covering_differences(e7, true);
  REQUIRE(cov7.size() == 1);
  CHECK(cov7[0] == sv(e7, {1, 1, 0, 1, 1, 1}));
  CHECK(e7.expand(cov7[0]) == dv(e7, {{"D1", 1}, {"D6", 1}, {"D3", -1}}));

  WonderfulLattice e8 = catalog("model:E8");
  auto cov8 = covering_differences(e8, true);
  REQUIRE(cov8.size() == 2);
  CHECK(std::find(cov8.begin(), cov8.end(), sv(e8, {1, 1, 1, 1, 2, 1, 1})) != cov8.end());
  CHECK(std::find(cov8.begin(), cov8.end(), sv(e8, {2, 2, 1, 1, 2, 0, 1})) != cov8.end());
  CHECK(e8.expand(sv(e8, {1, 1, 1, 1, 2, 1, 1})) == dv(e8, {{"D6", 1}, {"D2", -1}}));
  CHECK(e8.expand(sv(e8, {2, 2, 1, 1, 2, 0, 1})) ==
        dv(e8, {{"D1", 1}, {"D8", 1}, {"D7", -1}}));

  WonderfulLattice f4 = catalog("model:F4");
  auto covf = covering_differences(f4, true);
  REQUIRE(covf.size() == 2);
  CHECK(std::find(covf.begin(), covf.end(), sv(f4, {1, 1, 2})) != covf.end());
  CHECK(std::find(covf.begin(), covf.end(), sv(f4, {1, 0, 1})) != covf.end());
  CHECK(f4.expand(sv(f4, {1, 1, 2})) == dv(f4, {{"D4", 1}}));
  CHECK(f4.expand(sv(f4, {1, 0, 1})) == dv(f4, {{"D1", 1}, {"D4", 1}, {"D3", -1}}));

  WonderfulLattice g2 = catalog("model:G2");
  auto covg = covering_differences(g2, true);
  REQUIRE(covg.size() == 1);
  CHECK(g2.expand(covg[0]) == dv(g2, {{"D2", 1}, {"D1", -1}}));
}

TEST_CASE("case-v covering differences are the seven printed ones") {
  WonderfulLattice L = catalog("case-v");
  auto cov = covering_differences(L, false);
  std::vector<SphericalVec> expected = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1},
                                        {0, 1, 1}, {0, 2, 1}, {1, 1, 1}};
  std::sort(expected.begin(), expected.end());
  CHECK(cov == expected);
  for (auto& g : cov) CHECK(pos_height(L.expand(g)) == 2);
  // the same pairing underlies case-x
  CHECK(covering_differences(catalog("case-x"), false) == expected);
}

TEST_CASE("covering differences agree with brute-force double enumeration") {
  for (const char* id : {"model:A3", "model:B3", "model:C3", "model:G2", "model:B2",
                         "so-odd:3", "sp8-sym", "orbit-bd:11:2", "case-v", "sl2-torus"}) {
    CAPTURE(id);
    WonderfulLattice L = catalog(id);
    auto cov = L.covers();
    auto brute = brute_covers(L, 4, 6);
    for (const SphericalVec& g : brute)
      CHECK(std::find(cov.begin(), cov.end(), g) != cov.end());
    for (const SphericalVec& g : cov) {
      if (ivec_sum(g) > 6) continue;
      if (pos_height(L.expand(g)) > 4) continue;
      CHECK(brute.count(g) == 1);
    }
  }
}

TEST_CASE("covering difference endpoints are effective and re-embed") {
  for (const char* id : {"model:D5", "model:E7", "orbit-bd:13:4", "case-x"}) {
    WonderfulLattice L = catalog(id);
    for (const SphericalVec& g : L.covers()) {
      DivisorVec x = L.expand(g);
      DivisorVec gp(x.size()), gm(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        gp[i] = x[i] > 0 ? x[i] : 0;
        gm[i] = x[i] < 0 ? -x[i] : 0;
      }
      auto back = sigma_leq(gm, gp, L);
      REQUIRE(back.has_value());
      CHECK(*back == g);
    }
  }
}

TEST_CASE("check_2ht") {
  for (const char* id : {"model:E8", "model:F4", "orbit-bd:17:7", "orbit-bd:12:4",
                         "sl2-torus", "case-v", "case-x", "so-odd:4"}) {
    CAPTURE(id);
    CHECK(check_2ht(catalog(id)).holds());
  }
  WonderfulLattice sl2 = catalog("sl2-torus");
  REQUIRE(sl2.covers().size() == 1);
  CHECK(sl2.expand(sl2.covers()[0]) == DivisorVec{1, 1});  // alpha = D+ + D-
}

TEST_CASE("low fundamental triples: exceptional models") {
  WonderfulLattice e6 = catalog("model:E6");
  auto t6 = low_fundamental_triples(e6);
  std::set<Triple> s6(t6.begin(), t6.end());
  CHECK(t6.size() == 5);
  CHECK(s6.count({e6.color(0), e6.color(2), e6.color(1)}));        // (D1,D3,D2)
  CHECK(s6.count({e6.color(0), e6.color(4), e6.color(2)}));        // (D1,D5,D3)
  CHECK(s6.count({e6.color(0), e6.color(5), e6.zero_divisor()}));  // (D1,D6,0)
  CHECK(s6.count({e6.color(2), e6.color(5), e6.color(4)}));        // (D3,D6,D5)
  CHECK(s6.count({e6.color(4), e6.color(5), e6.color(1)}));        // (D5,D6,D2)

  WonderfulLattice e7 = catalog("model:E7");
  auto t7 = low_fundamental_triples(e7);
  std::set<Triple> s7(t7.begin(), t7.end());
  CHECK(t7.size() == 2);
  CHECK(s7.count({e7.color(0), e7.color(5), e7.color(2)}));  // (D1,D6,D3)
  CHECK(s7.count({e7.color(5), e7.color(5),
                  ivec_add(e7.color(1), e7.color(6))}));     // (D6,D6,D2+D7)

  WonderfulLattice e8 = catalog("model:E8");
  auto t8 = low_fundamental_triples(e8);
  std::set<Triple> s8(t8.begin(), t8.end());
  CHECK(t8.size() == 7);
  CHECK(s8.count({e8.color(0), e8.color(0), e8.color(1)}));                // (D1,D1,D2)
  CHECK(s8.count({e8.color(0), e8.color(4), ivec_scale(2, e8.color(1))})); // (D1,D5,2D2)
  CHECK(s8.count({e8.color(0), e8.color(6), e8.color(2)}));                // (D1,D7,D3)
  CHECK(s8.count({e8.color(0), e8.color(7), e8.color(6)}));                // (D1,D8,D7)
  CHECK(s8.count({e8.color(2), e8.color(7), e8.color(4)}));                // (D3,D8,D5)
  CHECK(s8.count({e8.color(4), e8.color(7),
                  ivec_add(e8.color(1), e8.color(6))}));                   // (D5,D8,D2+D7)
  CHECK(s8.count({e8.color(6), e8.color(7), e8.color(1)}));                // (D7,D8,D2)

  WonderfulLattice f4 = catalog("model:F4");
  auto tf = low_fundamental_triples(f4);
  REQUIRE(tf.size() == 1);
  CHECK(tf[0] == Triple{f4.color(0), f4.color(3), f4.color(2)});  // (D1,D4,D3)

  CHECK(low_fundamental_triples(catalog("model:G2")).empty());
}

TEST_CASE("low fundamental triples: classical models, small rank") {
  WonderfulLattice a4 = catalog("model:A4");
  auto t4 = low_fundamental_triples(a4);
  std::set<Triple> s4(t4.begin(), t4.end());
  CHECK(t4.size() == 2);  // (D1,D4,0), (D2,D3,0)
  CHECK(s4.count({a4.color(0), a4.color(3), a4.zero_divisor()}));
  CHECK(s4.count({a4.color(1), a4.color(2), a4.zero_divisor()}));

  WonderfulLattice a5 = catalog("model:A5");
  auto t5 = low_fundamental_triples(a5);
  REQUIRE(t5.size() == 1);  // r odd: p, q even
  CHECK(t5[0] == Triple{a5.color(1), a5.color(3), a5.zero_divisor()});

  // no full-support low triples in B and C
  CHECK(low_fundamental_triples(catalog("model:B4")).empty());
  CHECK(low_fundamental_triples(catalog("model:B5")).empty());
  CHECK(low_fundamental_triples(catalog("model:C4")).empty());

  WonderfulLattice d5 = catalog("model:D5");
  auto td = low_fundamental_triples(d5);
  std::set<Triple> sd(td.begin(), td.end());
  CHECK(td.size() == 3);
  CHECK(sd.count({d5.color(0), d5.color(0), d5.zero_divisor()}));  // (D1,D1,0)
  CHECK(sd.count({d5.color(0), d5.color(2), d5.color(1)}));        // (D1,D3,D2)
  CHECK(sd.count({d5.color(2), d5.color(2),
                  ivec_add(d5.color(3), d5.color(4))}));           // (D3,D3,D4+D5)
  CHECK(low_fundamental_triples(catalog("model:D4")).empty());
  CHECK(low_fundamental_triples(catalog("model:D6")).empty());
}

TEST_CASE("low fundamental triples: orbit family and the two orbit cases") {
  WonderfulLattice L = catalog("orbit-bd:13:4");  // s = 4 even
  auto ts = low_fundamental_triples(L);
  std::set<Triple> ss(ts.begin(), ts.end());
  CHECK(ts.size() == 4);
  CHECK(ss.count({L.color(0), L.color(0), L.zero_divisor()}));  // (D1,D1,0)
  CHECK(ss.count({L.color(0), L.color(2), L.color(1)}));        // (D1,D3,D2)
  CHECK(ss.count({L.color(0), L.color(4), L.color(3)}));        // (D1,D5,D4)
  CHECK(ss.count({L.color(2), L.color(2), L.color(3)}));        // (D3,D3,D4)
  // s odd: no full-support triples
  CHECK(low_fundamental_triples(catalog("orbit-bd:13:3")).empty());

  for (const char* id : {"case-v", "case-x"}) {
    CAPTURE(id);
    WonderfulLattice C = catalog(id);
    auto tc = low_fundamental_triples(C, false);  // all supports
    std::set<Triple> sc(tc.begin(), tc.end());
    auto D = [&](int i) { return C.color(i - 1); };
    CHECK(sc.count({D(1), D(1), D(3)}));
    CHECK(sc.count({D(2), D(4), D(3)}));
    CHECK(sc.count({D(3), D(3), ivec_add(D(1), ivec_scale(2, D(4)))}));
    CHECK(sc.count({D(1), D(3), ivec_scale(2, D(4))}));
    CHECK(sc.count({D(2), D(3), ivec_add(D(1), D(4))}));
    CHECK(sc.count({D(2), D(2), D(1)}));
    CHECK(sc.count({D(1), D(2), D(4)}));
    // exactly these seven besides the trivial gamma = 0 ones
    int nontrivial = 0;
    for (auto& t : tc)
      if (t.f != ivec_add(t.d, t.e)) ++nontrivial;
    CHECK(nontrivial == 7);
  }
}

TEST_CASE("low triple symmetry and trivial cases") {
  WonderfulLattice e7 = catalog("model:E7");
  CHECK(is_low_triple({e7.color(0), e7.color(5), e7.color(2)}, e7));
  CHECK(is_low_triple({e7.color(5), e7.color(0), e7.color(2)}, e7));
  CHECK(is_low_triple({e7.color(2), e7.color(4), ivec_add(e7.color(2), e7.color(4))}, e7));
  WonderfulLattice so4 = catalog("so-odd:4");
  CHECK(is_low_triple({so4.color(1), so4.color(1), so4.color(0)}, so4));
}

TEST_CASE("is_minuscule") {
  WonderfulLattice e8 = catalog("model:E8");
  CHECK(is_minuscule(e8.zero_divisor(), e8));
  CHECK(is_minuscule(e8.color(7), e8));        // D8
  CHECK(is_minuscule(e8.color(0), e8));        // D1
  CHECK_FALSE(is_minuscule(e8.color(5), e8));  // D2 <= D6
  WonderfulLattice b5 = catalog("model:B5");
  CHECK_FALSE(is_minuscule(b5.color(1), b5));  // D2 not in the B-odd family
  WonderfulLattice g2 = catalog("model:G2");
  CHECK(is_minuscule(g2.color(0), g2));
  CHECK_FALSE(is_minuscule(g2.color(1), g2));  // D2 covers D1
}

TEST_CASE("sections decompositions") {
  WonderfulLattice g2 = catalog("model:G2");
  auto sec = sections_decomposition(g2.color(1), g2);
  REQUIRE(sec.size() == 2);
  CHECK(sec[0].first == g2.color(1));
  CHECK(ivec_zero(sec[0].second));
  CHECK(sec[1].first == g2.color(0));
  CHECK(sec[1].second == sv(g2, {1}));

  // a minuscule divisor has a single section
  WonderfulLattice e8 = catalog("model:E8");
  CHECK(sections_decomposition(e8.color(7), e8).size() == 1);

  // so-odd:4: 2D2 decomposes with E = D1 and gamma = s1+2s2+s3+s4
  WonderfulLattice so4 = catalog("so-odd:4");
  auto sec2 = sections_decomposition(ivec_scale(2, so4.color(1)), so4);
  bool found = false;
  for (auto& [e, g] : sec2)
    if (e == so4.color(0)) {
      found = true;
      CHECK(g == sv(so4, {1, 2, 1, 1}));
    }
  CHECK(found);
}

TEST_CASE("distinguished subsets") {
  WonderfulLattice a5 = catalog("model:A5");
  CHECK(is_distinguished({0, 2, 4}, a5));  // D1, D3, D5
  WonderfulLattice e8 = catalog("model:E8");
  CHECK(is_distinguished({0, 3, 5, 7}, e8));  // D1, D4, D6, D8
  WonderfulLattice e6 = catalog("model:E6");
  CHECK(is_distinguished({1, 2, 3, 4}, e6));  // D2, D3, D4, D5
  WonderfulLattice c4 = catalog("model:C4");
  CHECK(is_distinguished({0, 2}, c4));  // D1, D3
  CHECK_FALSE(is_distinguished({0}, e8));
}

TEST_CASE("faithful divisors") {
  WonderfulLattice c4 = catalog("model:C4");
  DivisorVec full(4, 1);
  CHECK(is_faithful(full, c4));
  CHECK_FALSE(is_faithful(ivec_scale(2, c4.color(1)), c4));  // {D1,D3} misses 2D2
  WonderfulLattice e8 = catalog("model:E8");
  CHECK(is_faithful(e8.color(7), e8));  // theta = D8
}

TEST_CASE("supports_disjoint") {
  WonderfulLattice a4 = catalog("model:A4");
  CHECK(supports_disjoint(a4.color(0), a4.color(3), a4));
  CHECK(supports_disjoint(a4.color(0), a4.zero_divisor(), a4));
  WonderfulLattice e8 = catalog("model:E8");
  CHECK_FALSE(supports_disjoint(e8.color(0), e8.color(0), e8));
}

TEST_CASE("quotient of model C4 by {D1, D3} is the Sp(8) symmetric lattice") {
  WonderfulLattice c4 = catalog("model:C4");
  WonderfulLattice q = quotient_lattice(c4, {0, 2});
  WonderfulLattice sym = catalog("sp8-sym");
  REQUIRE(q.n_colors() == 2);
  REQUIRE(q.n_sroots() == 2);
  CHECK(q.colors == std::vector<std::string>{"D2", "D4"});
  std::set<IVec> qcols, scols;
  for (int j = 0; j < 2; ++j) {
    qcols.insert(IVec{q.pairing[0][j], q.pairing[1][j]});
    scols.insert(IVec{sym.pairing[0][j], sym.pairing[1][j]});
  }
  CHECK(qcols == scols);
}

TEST_CASE("rank-zero lattices are legal and everything is minuscule") {
  WonderfulLattice L = catalog("model:A4");
  WonderfulLattice loc = localization(L, {});
  CHECK(loc.n_sroots() == 0);
  CHECK(is_minuscule(dv(loc, {{"D2", 3}}), loc));
  CHECK(is_low_triple({loc.color(0), loc.color(1), ivec_add(loc.color(0), loc.color(1))}, loc));
}

TEST_CASE("subdiagram classification") {
  RootDatum e8 = build_root_system(RootFamily::E, 8);
  auto sd = classify_subdiagram(e8, {0, 1, 2, 3, 4, 5});  // nodes a1..a6
  CHECK(sd.family == RootFamily::E);
  CHECK(sd.rank == 6);
  auto sd2 = classify_subdiagram(e8, {2, 3, 4});
  CHECK(sd2.family == RootFamily::A);
  RootDatum f4 = build_root_system(RootFamily::F, 4);
  auto sd3 = classify_subdiagram(f4, {1, 2});  // a2, a3: doubled edge
  CHECK((sd3.family == RootFamily::B || sd3.family == RootFamily::C));
  RootDatum d6 = build_root_system(RootFamily::D, 6);
  auto sd4 = classify_subdiagram(d6, {1, 2, 3, 4, 5});
  CHECK(sd4.family == RootFamily::D);
  CHECK(sd4.rank == 5);
}

TEST_CASE("diagram components") {
  RootDatum e8 = build_root_system(RootFamily::E, 8);
  auto comps = diagram_components(e8, {0, 2, 3, 6, 7});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 2, 3});
  CHECK(comps[1] == std::vector<int>{6, 7});
}

TEST_CASE("distinguished subsets: supersets are re-solved, not assumed") {
  WonderfulLattice a5 = catalog("model:A5");
  std::vector<int> base{0, 2, 4};
  REQUIRE(is_distinguished(base, a5));
  for (int extra : {1, 3}) {
    std::vector<int> super = base;
    super.push_back(extra);
    std::sort(super.begin(), super.end());
    // the re-solve must terminate and return a definite answer either way
    bool v = is_distinguished(super, a5);
    (void)v;
  }
  // full color sets of the strict models solve as distinguished
  for (const char* id : {"model:A4", "model:C4", "model:E6"}) {
    WonderfulLattice L = catalog(id);
    std::vector<int> all;
    for (int i = 0; i < L.n_colors(); ++i) all.push_back(i);
    CHECK(is_distinguished(all, L));
  }
}

TEST_CASE("the comodel omega tables match the section-5 lists") {
  WonderfulLattice e8 = catalog("comodel:E8");
  auto fw = [&](std::initializer_list<int> idx) {
    Weight w(7, 0);
    for (int i : idx) w[i - 1] += 1;
    return w;
  };
  CHECK(e8.omega[0] == fw({3}));
  CHECK(e8.omega[1] == fw({4}));
  CHECK(e8.omega[2] == fw({3, 6}));
  CHECK(e8.omega[3] == fw({2, 4, 6}));
  CHECK(e8.omega[4] == fw({2, 5}));
  CHECK(e8.omega[5] == fw({1, 5}));
  CHECK(e8.omega[6] == fw({1, 7}));
  CHECK(e8.omega[7] == fw({7}));
  WonderfulLattice v = catalog("case-v");
  Weight w1(6, 0);
  w1[0] = w1[5] = 1;
  CHECK(v.omega[0] == w1);  // omega(D1) = omega_1 + omega_6
}
