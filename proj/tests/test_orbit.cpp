#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "wonderlat/orbit.hpp"
#include "wonderlat/root_system.hpp"

using namespace wlat;

TEST_CASE("orbit heights") {
  RootDatum e8 = build_root_system(RootFamily::E, 8);
  CHECK(orbit_height(IVec{0, 1, 0, 0, 0, 0, 0, 0}, e8).height == 3);
  CHECK(orbit_height(IVec(8, 0), e8).height == 0);
  RootDatum g2 = build_root_system(RootFamily::G, 2);
  auto hr = orbit_height(IVec{1, 0}, g2);
  CHECK(hr.height == 3);
  CHECK(hr.spherical);
  CHECK_FALSE(orbit_height(IVec(8, 2), e8).spherical);
  CHECK_THROWS_AS(orbit_height(IVec{3, 0}, g2), InvalidType);
  CHECK_THROWS_AS(orbit_height(IVec{1}, g2), InvalidType);
}

TEST_CASE("the eleven orbit cases reproduce the paper's verdicts") {
  auto cases = orbit_cases();
  std::set<std::string> seen;
  for (const OrbitCase& c : cases) {
    CAPTURE(c.case_id);
    NormalityVerdict v = normality_verdict(c);
    CHECK(v.faithful);
    std::string roman = c.case_id.substr(0, c.case_id.find(':'));
    seen.insert(roman);
    if (roman == "I" || roman == "XI") {
      CHECK(v.verdict == Normality::NonNormal);
    } else {
      CHECK(v.verdict == Normality::Normal);
    }
  }
  CHECK(seen == std::set<std::string>{"I", "II", "III", "IV", "V", "VI", "VII", "VIII",
                                      "IX", "X", "XI"});
}

TEST_CASE("theta inversions match the paper where printed") {
  auto cases = orbit_cases();
  auto theta_of = [&](const std::string& prefix) -> const OrbitCase& {
    for (auto& c : cases)
      if (c.case_id.rfind(prefix, 0) == 0) return c;
    throw std::runtime_error("missing case");
  };
  // II and IV: theta = D2
  CHECK(theta_of("II").theta == theta_of("II").lattice.color(1));
  CHECK(theta_of("IV").theta == theta_of("IV").lattice.color(1));
  // VI: theta = D1 on the quotient; VII: D1; VIII, IX: D8
  CHECK(theta_of("VI").theta ==
        theta_of("VI").lattice.color(theta_of("VI").lattice.color_index("D1")));
  CHECK(theta_of("VII").theta == theta_of("VII").lattice.color(0));
  CHECK(theta_of("VIII").theta ==
        theta_of("VIII").lattice.color(theta_of("VIII").lattice.color_index("D8")));
  CHECK(theta_of("IX").theta == theta_of("IX").lattice.color(7));
  // I: theta = D2 on the model of B_{2n+1}; III: D2
  CHECK(theta_of("I").theta == theta_of("I").lattice.color(1));
  CHECK(theta_of("III").theta == theta_of("III").lattice.color(1));
  // V: theta = D2 (the adjoint fundamental weight of E6)
  CHECK(theta_of("V").theta == theta_of("V").lattice.color(1));
}

TEST_CASE("verify_expansions returns the degree table") {
  auto degrees = verify_expansions();
  CHECK(degrees == std::vector<Int>{2, 4, 5, 7, 6, 4, 3, 1});
}

TEST_CASE("coordinate ring of the E8 model orbit") {
  WonderfulLattice e8 = catalog("model:E8");
  auto dec = coordinate_ring_degrees(e8, e8.color(7), e8.zero_divisor(), 7);
  CHECK(dec.multiplicity_free);
  CHECK(dec.positivity_ok);
  REQUIRE(dec.degrees.size() == 8);
  // degree 0: the trivial weight only
  REQUIRE(dec.degrees[0].size() == 1);
  CHECK(dec.degrees[0][0].weight == Weight(8, 0));
  // degree 1: the adjoint representation
  RootDatum dat = e8.datum;
  auto dims = graded_dimension(dec, dat);
  CHECK(dims[0] == 1);
  CHECK(dims[1] == 248);
  // degree 2 equals dim V(2 omega(D8)) + dim V(omega(D1))
  mpz_class expect2 = weyl_dim(ivec_scale(2, e8.omega_of(e8.color(7))), dat) +
                      weyl_dim(e8.omega_of(e8.color(0)), dat);
  CHECK(dims[2] == expect2);
  // first occurrence of each fundamental weight matches the expansion table
  std::vector<Int> first(8, -1);
  for (Int n = 0; n <= 7; ++n)
    for (auto& piece : dec.degrees[n])
      for (int i = 0; i < 8; ++i) {
        Weight fu(8, 0);
        fu[i] = 1;
        if (piece.weight == fu && first[i] < 0) first[i] = n;
      }
  CHECK(first == std::vector<Int>{2, 4, 5, 7, 6, 4, 3, 1});
  // semigroup closure at desk scale: weights at n=1 and n=2 add to weights at n=3
  std::set<Weight> deg3;
  for (auto& p : dec.degrees[3]) deg3.insert(p.weight);
  for (auto& p1 : dec.degrees[1])
    for (auto& p2 : dec.degrees[2]) CHECK(deg3.count(ivec_add(p1.weight, p2.weight)) == 1);
}

TEST_CASE("the Spin(16) analogue emits the D0-shifted weights") {
  WonderfulLattice L = catalog("e8-induced");
  int d8 = L.color_index("D8");
  int d0 = L.color_index("D0");
  auto plain = coordinate_ring_degrees(L, L.color(d8), L.zero_divisor(), 5);
  auto shifted = coordinate_ring_degrees(L, L.color(d8), L.color(d0), 5);
  CHECK(plain.multiplicity_free);
  CHECK(shifted.multiplicity_free);
  CHECK(plain.positivity_ok);
  CHECK(shifted.positivity_ok);
  Weight off = L.omega_of(L.color(d0));
  for (Int n = 0; n <= 5; ++n) {
    std::set<Weight> a, b;
    for (auto& p : plain.degrees[n]) a.insert(ivec_add(p.weight, off));
    for (auto& p : shifted.degrees[n]) b.insert(p.weight);
    CAPTURE(n);
    CHECK(a == b);
  }
  // the unshifted degrees match the complex model orbit degree by degree
  WonderfulLattice e8 = catalog("model:E8");
  auto model_dec = coordinate_ring_degrees(e8, e8.color(7), e8.zero_divisor(), 5);
  for (Int n = 0; n <= 5; ++n) CHECK(plain.degrees[n].size() == model_dec.degrees[n].size());
}

TEST_CASE("coordinate ring refuses a non-faithful divisor") {
  WonderfulLattice c4 = catalog("model:C4");
  CHECK_THROWS_AS(
      coordinate_ring_degrees(c4, ivec_scale(2, c4.color(1)), c4.zero_divisor(), 2),
      InvalidType);
}

TEST_CASE("minuscule catalog check against the direct search") {
  // the check asserts cover-based == direct-search agreement internally
  auto b4 = minuscule_catalog_check(RootFamily::B, 4, 3, 5);
  CHECK(b4.checked > 0);
  CHECK(b4.printed_list_disagreements.empty());
  auto b5 = minuscule_catalog_check(RootFamily::B, 5, 3, 5);
  CHECK(b5.printed_list_disagreements.empty());
  auto a4 = minuscule_catalog_check(RootFamily::A, 4, 3, 5);
  CHECK(a4.printed_list_disagreements.empty());
  auto a5 = minuscule_catalog_check(RootFamily::A, 5, 3, 5);
  CHECK(a5.printed_list_disagreements.empty());
  // the printed D-odd list conflicts with the paper's own section-3 covers
  // (2 D1 covers 0 through the j=1 covering difference), so disagreements
  // are expected and reported
  auto d5 = minuscule_catalog_check(RootFamily::D, 5, 3, 5);
  CHECK(!d5.printed_list_disagreements.empty());
  WonderfulLattice d5m = catalog("model:D5");
  for (int i = 0; i < 5; ++i) CHECK(is_minuscule(d5m.color(i), d5m));
  CHECK_FALSE(is_minuscule(ivec_scale(2, d5m.color(0)), d5m));
  // e8: the printed list says D6 although D2 <= D6 (section 3 covering (4))
  auto e8 = minuscule_catalog_check(RootFamily::E, 8, 2, 3);
  std::set<DivisorVec> dis(e8.printed_list_disagreements.begin(),
                           e8.printed_list_disagreements.end());
  WonderfulLattice L8 = catalog("model:E8");
  CHECK(dis.count(L8.color(5)) == 1);  // D6
  // spot checks of the spec's quoted instances
  CHECK(is_minuscule(L8.color(7), L8));
  WonderfulLattice b4m = catalog("model:B4");
  for (Int a = 0; a <= 3; ++a) {
    DivisorVec x = b4m.zero_divisor();
    x[1] = 1;
    x[3] = a;
    CHECK(is_minuscule(x, b4m));
  }
  CHECK_FALSE(is_minuscule(b4m.color(0), b4m));
}

TEST_CASE("the C model catalog: only multiples of D1 are minuscule") {
  // the printed list also contains D2..Dr and aD1+bDr, but sigma_{r-1} =
  // omega_r - omega_{r-2} puts D_{r-2} below D_r (classically: sections of
  // the r-th fundamental bundle contain the symplectic-form multiples)
  WonderfulLattice c4 = catalog("model:C4");
  CHECK(is_minuscule(ivec_scale(3, c4.color(0)), c4));
  CHECK_FALSE(is_minuscule(c4.color(3), c4));
  CHECK_FALSE(is_minuscule(c4.color(1), c4));
  auto chk = minuscule_catalog_check(RootFamily::C, 4, 2, 4);
  CHECK(!chk.printed_list_disagreements.empty());
}
