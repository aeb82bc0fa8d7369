#include "wonderlat/orbit.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wonderlat/root_system.hpp"

namespace wlat {

HeightReport orbit_height(const IVec& diagram, const RootDatum& datum) {
  if ((int)diagram.size() != datum.rank())
    throw InvalidType("orbit_height: diagram length mismatch");
  for (Int x : diagram)
    if (x < 0 || x > 2) throw InvalidType("orbit_height: entries must be 0, 1 or 2");
  IVec theta = datum.highest_root();
  HeightReport rep;
  for (int i = 0; i < datum.rank(); ++i) rep.height += theta[i] * diagram[i];
  rep.spherical = rep.height <= 3;
  return rep;
}

namespace {

DivisorVec invert_omega(const WonderfulLattice& L, const Weight& w) {
  int m = L.n_colors(), r = L.datum.rank();
  QMat a = qmat(r, m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < r; ++k) a[k][i] = (long)L.omega[i][k];
  auto sol = solve_full_column_rank(a, to_qvec(w));
  if (!sol) throw InvalidType(L.id + ": weight is not in the image of omega");
  auto iv = as_int_vec(*sol);
  if (!iv || !ivec_nonneg(*iv))
    throw InvalidType(L.id + ": omega-inverse is not an effective divisor");
  return *iv;
}

OrbitCase make_case(const std::string& id, RootFamily f, int rank, IVec diagram,
                    WonderfulLattice lat) {
  OrbitCase c{id, f, rank, std::move(diagram), std::move(lat), {}};
  RootDatum group = build_root_system(f, rank);
  Weight theta_w = group.weight_of_root_vec(group.highest_root());
  c.theta = invert_omega(c.lattice, theta_w);
  HeightReport hr = orbit_height(c.diagram, group);
  if (hr.height != 3)
    throw std::logic_error("orbit case " + id + ": diagram height is not 3");
  return c;
}

IVec kd(int rank, std::initializer_list<std::pair<int, Int>> ones) {
  IVec d(rank, 0);
  for (auto& [i, v] : ones) d[i - 1] = v;
  return d;
}

}  // namespace

std::vector<OrbitCase> orbit_cases() {
  std::vector<OrbitCase> out;
  for (int n : {1, 2}) {  // I: B_{2n+1}
    int r = 2 * n + 1;
    out.push_back(make_case("I:n=" + std::to_string(n), RootFamily::B, r,
                            kd(r, {{1, 1}, {r, 1}}), catalog("model:B" + std::to_string(r))));
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}) {  // II: B, k odd
    int k = 4 * n + 2 * m + 3, s = 2 * n + 1, r = k / 2;
    out.push_back(make_case(
        "II:n=" + std::to_string(n) + ",m=" + std::to_string(m), RootFamily::B, r,
        kd(r, {{1, 1}, {2 * n + 1, 1}}),
        catalog("orbit-bd:" + std::to_string(k) + ":" + std::to_string(s))));
  }
  for (int n : {1, 2}) {  // III: D_{2n+2}
    int r = 2 * n + 2;
    out.push_back(make_case("III:n=" + std::to_string(n), RootFamily::D, r,
                            kd(r, {{1, 1}, {r - 1, 1}, {r, 1}}),
                            catalog("model:D" + std::to_string(r))));
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}) {  // IV: D, k even
    int k = 4 * n + 2 * m + 4, s = 2 * n + 1, r = k / 2;
    out.push_back(make_case(
        "IV:n=" + std::to_string(n) + ",m=" + std::to_string(m), RootFamily::D, r,
        kd(r, {{1, 1}, {2 * n + 1, 1}}),
        catalog("orbit-bd:" + std::to_string(k) + ":" + std::to_string(s))));
  }
  out.push_back(make_case("V", RootFamily::E, 6, kd(6, {{4, 1}}), catalog("case-v")));
  {  // VI: E7, localization at sigma_3 then quotient by {D2, D5, D7}
    WonderfulLattice e7 = catalog("model:E7");
    WonderfulLattice loc = localization(e7, {0, 1, 3, 4, 5});  // drop s3 = a3+a4
    WonderfulLattice q = quotient_lattice(loc, {1, 4, 6});
    out.push_back(make_case("VI", RootFamily::E, 7, kd(7, {{3, 1}}), std::move(q)));
  }
  out.push_back(
      make_case("VII", RootFamily::E, 7, kd(7, {{2, 1}, {7, 1}}), catalog("model:E7")));
  {  // VIII: E8, localization at sigma_6 = a6+a7 then quotient by {D2..D5}
    WonderfulLattice e8 = catalog("model:E8");
    WonderfulLattice loc = localization(e8, {0, 1, 2, 3, 4, 6});
    WonderfulLattice q = quotient_lattice(loc, {1, 2, 3, 4});
    out.push_back(make_case("VIII", RootFamily::E, 8, kd(8, {{7, 1}}), std::move(q)));
  }
  out.push_back(make_case("IX", RootFamily::E, 8, kd(8, {{2, 1}}), catalog("model:E8")));
  out.push_back(make_case("X", RootFamily::F, 4, kd(4, {{2, 1}}), catalog("case-x")));
  out.push_back(make_case("XI", RootFamily::G, 2, kd(2, {{1, 1}}), catalog("model:G2")));
  return out;
}

NormalityVerdict normality_verdict(const OrbitCase& c, bool surjectivity_certified) {
  NormalityVerdict v;
  v.case_id = c.case_id;
  v.theta = c.theta;
  v.minuscule = is_minuscule(c.theta, c.lattice);
  v.faithful = is_faithful(c.theta, c.lattice);
  v.surjectivity_source =
      surjectivity_certified ? "certified" : "recorded: surjectivity theorem for orbit lattices";
  if (!v.faithful) {
    v.verdict = Normality::Inconclusive;
    return v;
  }
  v.verdict = v.minuscule ? Normality::Normal : Normality::NonNormal;
  return v;
}

std::vector<Int> verify_expansions() {
  WonderfulLattice e8 = catalog("model:E8");
  std::vector<Int> degrees;
  DivisorVec d8 = e8.color(7);
  for (const E8Expansion& ex : e8_expansions()) {
    DivisorVec lhs = ivec_add(e8.color(ex.color - 1), e8.expand(ex.gamma));
    if (lhs != ivec_scale(ex.degree, d8))
      throw std::logic_error("E8 expansion identity fails for D" + std::to_string(ex.color));
    degrees.push_back(ex.degree);
  }
  return degrees;
}

GradedDecomposition coordinate_ring_degrees(const WonderfulLattice& L, const DivisorVec& e,
                                            const DivisorVec& shift, Int n_max) {
  if (!is_faithful(e, L)) throw InvalidType(L.id + ": coordinate ring needs a faithful divisor");
  GradedDecomposition out;
  // the (n, gamma) solve is unique when the columns [E | Sigma] are
  // independent; verify once
  {
    int m = L.n_colors(), ns = L.n_sroots();
    QMat cols = qmat(m, ns + 1);
    for (int i = 0; i < m; ++i) {
      cols[i][0] = (long)e[i];
      for (int j = 0; j < ns; ++j) cols[i][j + 1] = (long)L.pairing[i][j];
    }
    QVec zero(m, mpq_class(0));
    auto sol = solve_full_column_rank(cols, zero);  // throws if rank-deficient
    (void)sol;
  }
  for (Int n = 0; n <= n_max; ++n) {
    DivisorVec target = shift;
    for (int i = 0; i < L.n_colors(); ++i) target[i] += n * e[i];
    std::vector<GradedPiece> level;
    std::set<Weight> seen;
    for (auto& [f, gamma] : sections_decomposition(target, L)) {
      GradedPiece piece{f, gamma, L.omega_of(f)};
      if (!seen.insert(piece.weight).second) out.multiplicity_free = false;
      // re-solve (n, gamma) from F alone and confirm positivity
      {
        int m = L.n_colors(), ns = L.n_sroots();
        QMat cols = qmat(m, ns + 1);
        for (int i = 0; i < m; ++i) {
          cols[i][0] = (long)e[i];
          for (int j = 0; j < ns; ++j) cols[i][j + 1] = (long)L.pairing[i][j];
        }
        // F = shift + n e - expand(gamma)  =>  n e - expand(gamma) = F - shift
        QVec rhs(m);
        for (int i = 0; i < m; ++i) rhs[i] = mpq_class((long)(f[i] - shift[i]));
        auto sol = solve_full_column_rank(cols, rhs);
        if (!sol) {
          out.positivity_ok = false;
        } else {
          // solution is (n, -gamma)
          if ((*sol)[0] != (long)n) out.positivity_ok = false;
          for (int j = 0; j < ns; ++j)
            if (-(*sol)[j + 1] != (long)gamma[j]) out.positivity_ok = false;
        }
      }
      level.push_back(std::move(piece));
    }
    std::sort(level.begin(), level.end(),
              [](const GradedPiece& a, const GradedPiece& b) { return a.weight < b.weight; });
    out.degrees.push_back(std::move(level));
  }
  return out;
}

std::vector<mpz_class> graded_dimension(const GradedDecomposition& d, const RootDatum& datum) {
  std::vector<mpz_class> out;
  for (auto& level : d.degrees) {
    mpz_class total = 0;
    for (auto& piece : level) total += weyl_dim(piece.weight, datum);
    out.push_back(total);
  }
  return out;
}

bool minuscule_by_direct_search(const DivisorVec& d, const WonderfulLattice& L, Int ht_cap) {
  int n = L.n_sroots();
  SphericalVec g(n, 0);
  bool found = false;
  std::function<void(int, Int)> rec = [&](int j, Int used) {
    if (found) return;
    if (j == n) {
      if (used > 0 && ivec_nonneg(ivec_sub(d, L.expand(g)))) found = true;
      return;
    }
    for (g[j] = 0; used + g[j] <= ht_cap && !found; ++g[j]) rec(j + 1, used + g[j]);
    g[j] = 0;
  };
  rec(0, 0);
  return !found;
}

namespace {

// membership in the printed section-7 catalog, as extracted
bool printed_minuscule(RootFamily f, int r, const DivisorVec& x) {
  auto supp_size = [&] {
    int s = 0;
    for (Int v : x)
      if (v != 0) ++s;
    return s;
  }();
  auto only_at = [&](std::vector<int> pos1) {  // 1-based positions allowed
    for (int i = 0; i < r; ++i) {
      bool allowed = std::find(pos1.begin(), pos1.end(), i + 1) != pos1.end();
      if (!allowed && x[i] != 0) return false;
    }
    return true;
  };
  auto coeff = [&](int i) { return x[i - 1]; };
  bool single = supp_size == 1 && ivec_sum(x) == 1;
  switch (f) {
    case RootFamily::A: {
      if (single) return true;
      if (r % 2 == 0) {
        if (only_at({1}) || only_at({r})) return true;
        for (int d = 1; d <= r; d += 2)
          if (only_at({1, d}) && coeff(d) == 1) return true;
        for (int m = 2; m <= r; m += 2)
          if (only_at({m, r}) && coeff(m) == 1) return true;
        return false;
      }
      if (only_at({1}) || only_at({r}) || only_at({1, r})) return true;
      // the odd-rank families combine: a D1 + D_m + b D_r with m odd
      for (int m = 3; m < r; m += 2)
        if (only_at({1, m, r}) && coeff(m) == 1) return true;
      return false;
    }
    case RootFamily::B: {
      if (r % 2 == 0) {
        if (only_at({r})) return true;
        for (int m = 2; m < r; m += 2)
          if (only_at({m, r}) && coeff(m) == 1) return true;
        return false;
      }
      if (only_at({1, r})) return true;
      for (int m = 3; m < r; m += 2)
        if (only_at({1, m, r}) && coeff(m) == 1) return true;
      return false;
    }
    case RootFamily::C:
      return single || only_at({1, r});
    case RootFamily::D: {
      if (single) return true;
      if (only_at({1, r - 1, r})) return true;
      if (r % 2 == 0) {
        for (int m = 3; m < r - 1; m += 2)
          if (only_at({1, r - 1, m, r}) && coeff(m) == 1) return true;
      } else {
        for (int m = 2; m < r - 1; m += 2)
          if (only_at({r - 1, m, r}) && coeff(m) == 1) return true;
      }
      return false;
    }
    case RootFamily::E: {
      if (r == 6 || r == 8) {
        if (r == 8 && (only_at({1}) || only_at({6}) || only_at({7}) || only_at({8})) &&
            ivec_sum(x) == 1)
          return true;
        if (r == 6 && (only_at({1}) || only_at({6})) && ivec_sum(x) == 1) return true;
        if (only_at({2})) return true;
        if (only_at({2, 3}) && coeff(3) == 1) return true;
        if (only_at({2, 5}) && coeff(5) == 1) return true;
        return false;
      }
      // E7
      if ((only_at({1}) || only_at({6})) && ivec_sum(x) == 1) return true;
      if (only_at({2, 7})) return true;
      if (only_at({2, 7, 3}) && coeff(3) == 1) return true;
      if (only_at({2, 7, 5}) && coeff(5) == 1) return true;
      return false;
    }
    case RootFamily::F:
      return only_at({1}) || x == DivisorVec{1, 1, 0, 0} || x == DivisorVec{0, 0, 1, 1} ||
             (single && (coeff(2) == 1 || coeff(3) == 1 || coeff(4) == 1));
    case RootFamily::G:
      return only_at({1}) || x == DivisorVec{0, 1};
  }
  return false;
}

}  // namespace

MinusculeCheck minuscule_catalog_check(RootFamily family, int rank, Int param_bound,
                                       Int ht_cap) {
  WonderfulLattice L = catalog("model:" + family_name(family) + std::to_string(rank));
  MinusculeCheck out;
  DivisorVec x(rank, 0);
  Int cap = std::max(ht_cap, param_bound);
  std::function<void(int, Int)> rec = [&](int i, Int used) {
    if (i == rank) {
      if (ivec_zero(x)) return;
      ++out.checked;
      bool computed = is_minuscule(x, L);
      bool direct = minuscule_by_direct_search(x, L, default_ht_bound());
      if (computed != direct)
        throw std::logic_error(L.id + ": cover-based and direct minuscule tests disagree");
      if (computed != printed_minuscule(family, rank, x))
        out.printed_list_disagreements.push_back(x);
      return;
    }
    for (x[i] = 0; used + x[i] <= cap; ++x[i]) rec(i + 1, used + x[i]);
    x[i] = 0;
  };
  rec(0, 0);
  return out;
}

}  // namespace wlat
