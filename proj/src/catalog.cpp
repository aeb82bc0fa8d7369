#include <algorithm>
#include <cstdio>

#include "wonderlat/lattice.hpp"

// Catalog of every lattice used in the project. Pairings are entered
// directly; validate() re-derives the omega/expansion consistency of each
// entry, so a transcription slip cannot survive construction.

namespace wlat {

namespace {

Weight fundamental(int rank, int i, Int k = 1) {
  Weight w(rank, 0);
  w[i - 1] = k;
  return w;
}

IVec cartan_column(const RootDatum& d, int j) {
  IVec col(d.rank());
  for (int i = 0; i < d.rank(); ++i) col[i] = d.cartan(i, j);
  return col;
}

// spherical roots of the model variety: sums of adjacent simple roots, in
// the section-3 ordering (type E: s1 = a1+a3, s2 = a2+a4)
std::vector<std::pair<int, int>> model_sigma_pairs(RootFamily f, int r) {
  std::vector<std::pair<int, int>> out;
  switch (f) {
    case RootFamily::A: case RootFamily::B: case RootFamily::C: case RootFamily::F:
      for (int i = 1; i < r; ++i) out.push_back({i, i + 1});
      break;
    case RootFamily::G:
      out.push_back({1, 2});
      break;
    case RootFamily::D:
      // s_i = a_i + a_{i+1} for i < r-1, s_{r-1} = a_{r-2} + a_r
      for (int i = 1; i <= r - 2; ++i) out.push_back({i, i + 1});
      out.push_back({r - 2, r});
      break;
    case RootFamily::E:
      out.push_back({1, 3});
      out.push_back({2, 4});
      for (int i = 3; i < r; ++i) out.push_back({i, i + 1});
      break;
  }
  return out;
}

WonderfulLattice model_lattice(RootFamily f, int r) {
  if ((f == RootFamily::A && r < 2) || (f == RootFamily::B && r < 2) ||
      (f == RootFamily::C && r < 3) || (f == RootFamily::D && r < 4))
    throw InvalidType("model lattice: rank out of catalog range");
  WonderfulLattice L;
  L.id = "model:" + family_name(f) + std::to_string(r);
  L.datum = build_root_system(f, r);
  L.strict = true;
  for (int i = 1; i <= r; ++i) {
    L.colors.push_back("D" + std::to_string(i));
    L.omega.push_back(fundamental(r, i));
  }
  auto pairs = model_sigma_pairs(f, r);
  L.pairing.assign(r, IVec(pairs.size(), 0));
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    L.sroots.push_back("s" + std::to_string(j + 1));
    IVec exp(r, 0);
    exp[pairs[j].first - 1] += 1;
    exp[pairs[j].second - 1] += 1;
    L.expansion.push_back(exp);
    IVec col = ivec_add(cartan_column(L.datum, pairs[j].first - 1),
                        cartan_column(L.datum, pairs[j].second - 1));
    for (int i = 0; i < r; ++i) L.pairing[i][j] = col[i];
  }
  L.validate();
  return L;
}

WonderfulLattice so_odd_model(int r) {
  if (r < 2) throw InvalidType("so-odd model: rank out of range");
  WonderfulLattice L;
  L.id = "so-odd:" + std::to_string(r);
  L.datum = build_root_system(RootFamily::B, r);
  L.strict = true;
  for (int i = 1; i <= r; ++i) {
    L.colors.push_back("D" + std::to_string(i));
    L.omega.push_back(fundamental(r, i, i == r ? 2 : 1));
  }
  // sigma_i = a_i + a_{i+1} (i < r), sigma_r = 2 a_r
  L.pairing.assign(r, IVec(r, 0));
  for (int j = 1; j <= r; ++j) {
    L.sroots.push_back("s" + std::to_string(j));
    IVec exp(r, 0);
    IVec w;
    if (j < r) {
      exp[j - 1] = exp[j] = 1;
      w = ivec_add(cartan_column(L.datum, j - 1), cartan_column(L.datum, j));
    } else {
      exp[r - 1] = 2;
      w = ivec_scale(2, cartan_column(L.datum, r - 1));
    }
    L.expansion.push_back(exp);
    for (int i = 0; i < r; ++i) {
      Int c = w[i];
      if (i == r - 1) {
        if (c % 2 != 0) throw std::logic_error("so-odd: non-integral pairing");
        c /= 2;
      }
      L.pairing[i][j - 1] = c;
    }
  }
  L.validate();
  return L;
}

struct ComodelFrame {
  RootDatum datum;
  int unprimed = 0;  // offset of the unprimed fundamental weights
  int primed = 0;    // offset of the primed ones
};

ComodelFrame comodel_frame(RootFamily cof, int r) {
  ComodelFrame fr{build_root_system(RootFamily::A, 1)};
  if (cof == RootFamily::A && r % 2 == 0) {
    int m = r / 2;
    fr.datum = m >= 2 ? RootDatum::product({{RootFamily::A, m - 1}, {RootFamily::A, m}})
                      : RootDatum::simple(RootFamily::A, m);
    fr.unprimed = 0;
    fr.primed = m >= 2 ? m - 1 : 0;
  } else if (cof == RootFamily::A) {
    int m = (r - 1) / 2;
    fr.datum = RootDatum::product({{RootFamily::A, m}, {RootFamily::A, m}});
    fr.unprimed = 0;
    fr.primed = m;
  } else if (cof == RootFamily::D && r % 2 == 0) {
    int m = r / 2;
    fr.datum = m == 2 ? RootDatum::product(
                            {{RootFamily::A, 1}, {RootFamily::A, 1}, {RootFamily::A, 1}})
                      : RootDatum::product({{RootFamily::A, m - 1}, {RootFamily::D, m}});
    fr.unprimed = 0;
    fr.primed = m - 1;
  } else if (cof == RootFamily::D) {
    int m = (r - 1) / 2;
    fr.datum = RootDatum::product({{RootFamily::A, m - 1}, {RootFamily::D, m + 1}});
    fr.unprimed = 0;
    fr.primed = m - 1;
  } else if (cof == RootFamily::E && r == 6) {
    fr.datum = RootDatum::simple(RootFamily::A, 5);
  } else if (cof == RootFamily::E && r == 7) {
    fr.datum = RootDatum::simple(RootFamily::A, 6);
  } else if (cof == RootFamily::E && r == 8) {
    fr.datum = RootDatum::simple(RootFamily::D, 7);
  } else {
    throw InvalidType("comodel: unsupported cotype");
  }
  return fr;
}

WonderfulLattice comodel_lattice(RootFamily cof, int r) {
  WonderfulLattice model = model_lattice(cof == RootFamily::E ? RootFamily::E : cof, r);
  ComodelFrame fr = comodel_frame(cof, r);
  WonderfulLattice L;
  L.id = "comodel:" + family_name(cof) + std::to_string(r);
  L.datum = fr.datum;
  L.strict = false;  // all spherical roots are simple roots of the acting group
  L.colors = model.colors;
  L.sroots = model.sroots;
  L.pairing = model.pairing;
  int rk = fr.datum.rank();
  auto uw = [&](int i) { return fundamental(rk, fr.unprimed + i); };
  auto pw = [&](int i) { return fundamental(rk, fr.primed + i); };
  std::vector<Weight> om(r, Weight(rk, 0));
  if (cof == RootFamily::A && r % 2 == 0) {
    int m = r / 2;
    om[0] = pw(1);
    for (int i = 1; i < m; ++i) om[2 * i - 1] = ivec_add(uw(i), pw(i));
    for (int i = 2; i <= m; ++i) om[2 * i - 2] = ivec_add(uw(i - 1), pw(i));
    om[2 * m - 1] = pw(m);
  } else if (cof == RootFamily::A) {
    int m = (r - 1) / 2;
    om[0] = uw(1);
    for (int i = 1; i <= m; ++i) om[2 * i - 1] = ivec_add(uw(i), pw(i));
    for (int i = 2; i <= m; ++i) om[2 * i - 2] = ivec_add(uw(i), pw(i - 1));
    om[2 * m] = pw(m);
  } else if (cof == RootFamily::D && r % 2 == 0) {
    int m = r / 2;
    om[0] = uw(1);
    for (int i = 1; i < m - 1; ++i) om[2 * i - 1] = ivec_add(uw(i), pw(i));
    for (int i = 2; i < m; ++i) om[2 * i - 2] = ivec_add(uw(i), pw(i - 1));
    om[2 * m - 3] = ivec_add(uw(m - 1), ivec_add(pw(m - 1), pw(m)));
    om[2 * m - 2] = pw(m - 1);
    om[2 * m - 1] = pw(m);
  } else if (cof == RootFamily::D) {
    int m = (r - 1) / 2;
    om[0] = pw(1);
    for (int i = 1; i < m; ++i) om[2 * i - 1] = ivec_add(uw(i), pw(i));
    for (int i = 2; i < m; ++i) om[2 * i - 2] = ivec_add(uw(i - 1), pw(i));
    om[2 * m - 2] = ivec_add(uw(m - 1), ivec_add(pw(m), pw(m + 1)));
    om[2 * m - 1] = pw(m);
    om[2 * m] = pw(m + 1);
  } else if (cof == RootFamily::E && r == 6) {
    om[0] = fundamental(5, 2);
    om[1] = fundamental(5, 3);
    om[2] = ivec_add(fundamental(5, 2), fundamental(5, 5));
    om[3] = ivec_add(fundamental(5, 1), ivec_add(fundamental(5, 3), fundamental(5, 5)));
    om[4] = ivec_add(fundamental(5, 1), fundamental(5, 4));
    om[5] = fundamental(5, 4);
  } else if (cof == RootFamily::E && r == 7) {
    om[0] = fundamental(6, 3);
    om[1] = fundamental(6, 4);
    om[2] = ivec_add(fundamental(6, 3), fundamental(6, 6));
    om[3] = ivec_add(fundamental(6, 2), ivec_add(fundamental(6, 4), fundamental(6, 6)));
    om[4] = ivec_add(fundamental(6, 2), fundamental(6, 5));
    om[5] = ivec_add(fundamental(6, 1), fundamental(6, 5));
    om[6] = fundamental(6, 1);
  } else {
    om[0] = fundamental(7, 3);
    om[1] = fundamental(7, 4);
    om[2] = ivec_add(fundamental(7, 3), fundamental(7, 6));
    om[3] = ivec_add(fundamental(7, 2), ivec_add(fundamental(7, 4), fundamental(7, 6)));
    om[4] = ivec_add(fundamental(7, 2), fundamental(7, 5));
    om[5] = ivec_add(fundamental(7, 1), fundamental(7, 5));
    om[6] = ivec_add(fundamental(7, 1), fundamental(7, 7));
    om[7] = fundamental(7, 7);
  }
  L.omega = om;
  // each spherical root of the comodel is a simple root of the acting group;
  // recover which one by pushing the pairing column through omega
  for (int j = 0; j < L.n_sroots(); ++j) {
    DivisorVec col(r);
    for (int i = 0; i < r; ++i) col[i] = L.pairing[i][j];
    Weight push = L.omega_of(col);
    int node = -1;
    for (int t = 0; t < rk; ++t)
      if (push == cartan_column(L.datum, t)) node = t;
    if (node < 0)
      throw std::logic_error(L.id + ": spherical root " + L.sroots[j] +
                             " is not a simple root of the acting group");
    IVec exp(rk, 0);
    exp[node] = 1;
    L.expansion.push_back(exp);
  }
  L.validate();
  return L;
}

WonderfulLattice orbit_bd_lattice(int k, int s) {
  if (k < 7 || s < 2 || 2 * s > k - 3)
    throw InvalidType("orbit-bd: need k >= 7 and 2 <= s <= (k-3)/2");
  int r = k / 2;
  bool odd = k % 2 == 1;
  WonderfulLattice L;
  L.id = "orbit-bd:" + std::to_string(k) + ":" + std::to_string(s);
  L.datum = build_root_system(odd ? RootFamily::B : RootFamily::D, r);
  L.strict = true;
  int m = s + 1;
  for (int i = 1; i <= m; ++i) {
    L.colors.push_back("D" + std::to_string(i));
    // omega(D_i) is the highest weight of Lambda^i of the standard module
    if (odd && i == r)
      L.omega.push_back(fundamental(r, r, 2));
    else if (!odd && i == r - 1)
      L.omega.push_back(ivec_add(fundamental(r, r - 1), fundamental(r, r)));
    else
      L.omega.push_back(fundamental(r, i));
  }
  L.pairing.assign(m, IVec(s, 0));
  for (int j = 1; j <= s; ++j) {
    L.sroots.push_back("s" + std::to_string(j));
    IVec exp(r, 0);
    if (j < s) {
      exp[j - 1] = exp[j] = 1;
      // sigma_j = D_j + D_{j+1} - D_{j-1} - D_{j+2}
      L.pairing[j - 1][j - 1] += 1;
      L.pairing[j][j - 1] += 1;
      if (j - 2 >= 0) L.pairing[j - 2][j - 1] -= 1;
      if (j + 1 < m) L.pairing[j + 1][j - 1] -= 1;
    } else {
      if (odd) {
        for (int t = s; t < r; ++t) exp[t] = 2;
      } else {
        for (int t = s; t < r - 2; ++t) exp[t] = 2;
        exp[r - 2] = exp[r - 1] = 1;
      }
      L.pairing[m - 1][s - 1] = 2;
      L.pairing[m - 2][s - 1] = -2;
    }
    L.expansion.push_back(exp);
  }
  L.validate();
  return L;
}

WonderfulLattice case_v_lattice() {
  WonderfulLattice L;
  L.id = "case-v";
  L.datum = build_root_system(RootFamily::E, 6);
  L.strict = true;
  L.colors = {"D1", "D2", "D3", "D4"};
  L.omega = {ivec_add(fundamental(6, 1), fundamental(6, 6)), fundamental(6, 2),
             ivec_add(fundamental(6, 3), fundamental(6, 5)), fundamental(6, 4)};
  L.sroots = {"s1", "s2", "s3"};
  L.expansion = {IVec{1, 0, 0, 0, 0, 1}, IVec{0, 1, 0, 1, 0, 0}, IVec{0, 0, 1, 0, 1, 0}};
  L.pairing = {IVec{2, 0, -1}, IVec{0, 1, 0}, IVec{-1, -1, 2}, IVec{0, 1, -2}};
  L.validate();
  return L;
}

WonderfulLattice case_x_lattice() {
  WonderfulLattice L;
  L.id = "case-x";
  L.datum = build_root_system(RootFamily::F, 4);
  L.strict = true;
  L.colors = {"D1", "D2", "D3", "D4"};
  // same Cartan pairing as case-v; the printed omega of D2 and D4 must be
  // swapped for the pairing columns to push onto the stated spherical roots
  L.omega = {fundamental(4, 4, 2), fundamental(4, 1), fundamental(4, 3, 2),
             fundamental(4, 2)};
  L.sroots = {"s1", "s2", "s3"};
  L.expansion = {IVec{0, 0, 0, 2}, IVec{1, 1, 0, 0}, IVec{0, 0, 2, 0}};
  L.pairing = {IVec{2, 0, -1}, IVec{0, 1, 0}, IVec{-1, -1, 2}, IVec{0, 1, -2}};
  L.validate();
  return L;
}

WonderfulLattice sl2_torus_lattice() {
  WonderfulLattice L;
  L.id = "sl2-torus";
  L.datum = build_root_system(RootFamily::A, 1);
  L.strict = false;
  L.colors = {"D+", "D-"};
  L.omega = {fundamental(1, 1), fundamental(1, 1)};
  L.sroots = {"s1"};
  L.expansion = {IVec{1}};
  L.pairing = {IVec{1}, IVec{1}};
  L.validate();
  return L;
}

WonderfulLattice sp8_sym_lattice(bool closure) {
  WonderfulLattice L;
  L.id = closure ? "sp8-sym-closure" : "sp8-sym";
  L.datum = build_root_system(RootFamily::C, 4);
  L.strict = false;
  L.colors = {"D2", "D4"};
  L.omega = {fundamental(4, 2), fundamental(4, 4)};
  L.sroots = {"s1", "s2"};
  if (!closure) {
    L.expansion = {IVec{1, 2, 1, 0}, IVec{0, 0, 1, 1}};
    L.pairing = {IVec{2, -1}, IVec{-1, 1}};
  } else {
    L.expansion = {IVec{1, 2, 1, 0}, IVec{0, 0, 2, 2}};
    L.pairing = {IVec{2, -2}, IVec{-1, 2}};
  }
  L.validate();
  return L;
}

}  // namespace

// the eight expansion identities D_i = n_i D_8 - gamma_i of the model of E8,
// with gamma_i in the section-3 numbering of the spherical roots
std::vector<E8Expansion> e8_expansions() {
  // as printed, in the D7-ordered numbering; dictionary to section 3:
  // tau_1..tau_7 = s6, s4, s1, s2, s5, s3, s7
  const int dict[8] = {0, 6, 4, 1, 2, 5, 3, 7};
  auto conv = [&](std::initializer_list<Int> tau) {
    SphericalVec g(7, 0);
    int j = 1;
    for (Int c : tau) {
      g[dict[j] - 1] = c;
      ++j;
    }
    return g;
  };
  return {
      {1, 2, conv({0, 0, 0, 1, 2, 1, 2})}, {2, 4, conv({1, 2, 3, 4, 6, 3, 5})},
      {3, 5, conv({1, 2, 3, 5, 7, 3, 6})}, {4, 7, conv({1, 2, 4, 6, 9, 4, 8})},
      {5, 6, conv({1, 2, 4, 6, 8, 4, 7})}, {6, 4, conv({0, 1, 2, 3, 4, 2, 4})},
      {7, 3, conv({0, 1, 2, 3, 4, 2, 3})}, {8, 1, conv({0, 0, 0, 0, 0, 0, 0})},
  };
}

namespace {

// The Spin(16) lattice lying over the comodel of cotype E8: nine colors, the
// seven spherical roots of the comodel, one extra color D0 whose omega is
// the first fundamental weight. The omega map is pinned by omega(D8) (the
// half-spin weight) together with the expansion identities above.
WonderfulLattice e8_induced_lattice() {
  WonderfulLattice co = comodel_lattice(RootFamily::E, 8);
  WonderfulLattice L;
  L.id = "e8-induced";
  L.datum = build_root_system(RootFamily::D, 8);
  L.strict = false;
  L.colors = {"D0"};
  for (auto& c : co.colors) L.colors.push_back(c);
  L.sroots = co.sroots;
  // expansion: comodel root j is the D7 simple root at node t; inside D8 the
  // D7 subdiagram sits on nodes 2..8
  for (int j = 0; j < co.n_sroots(); ++j) {
    int t = -1;
    for (int u = 0; u < 7; ++u)
      if (co.expansion[j][u] != 0) t = u;
    IVec exp(8, 0);
    exp[t + 1] = 1;
    L.expansion.push_back(exp);
  }
  L.omega.assign(9, Weight(8, 0));
  L.omega[0] = fundamental(8, 1);
  L.omega[8] = fundamental(8, 8);  // half-spin
  for (const auto& ex : e8_expansions()) {
    if (ex.color == 8) continue;
    Weight w = ivec_scale(ex.degree, L.omega[8]);
    for (int j = 0; j < 7; ++j)
      if (ex.gamma[j] != 0) {
        IVec root(8, 0);
        for (int k = 0; k < 8; ++k) root[k] = ex.gamma[j] * L.expansion[j][k];
        w = ivec_sub(w, L.datum.weight_of_root_vec(root));
      }
    L.omega[ex.color] = w;
  }
  // pairing: rows 1..8 are the comodel pairing; row 0 balances each column
  // so that it pushes onto the spherical root
  L.pairing.assign(9, IVec(7, 0));
  for (int j = 0; j < 7; ++j) {
    for (int i = 0; i < 8; ++i) L.pairing[i + 1][j] = co.pairing[i][j];
    Weight push(8, 0);
    for (int i = 1; i < 9; ++i)
      for (int k = 0; k < 8; ++k) push[k] += L.pairing[i][j] * L.omega[i][k];
    Weight target = L.datum.weight_of_root_vec(L.expansion[j]);
    Weight diff = ivec_sub(target, push);
    for (int k = 1; k < 8; ++k)
      if (diff[k] != 0)
        throw std::logic_error("e8-induced: column does not balance through D0");
    L.pairing[0][j] = diff[0];
  }
  L.recorded_faithful = {8};  // D8 cuts out the open orbit (section 8)
  L.validate();
  // consistency with the comodel omega map on the D7 subdiagram
  for (int i = 1; i < 9; ++i)
    for (int t = 1; t < 8; ++t)
      if (L.omega[i][t] != co.omega[i - 1][t - 1])
        throw std::logic_error("e8-induced: omega does not restrict to the comodel");
  return L;
}

}  // namespace

WonderfulLattice catalog(const std::string& id) {
  auto starts = [&](const std::string& p) { return id.rfind(p, 0) == 0; };
  if (starts("model:")) {
    std::string t = id.substr(6);
    return model_lattice(family_from_char(t[0]), std::atoi(t.c_str() + 1));
  }
  if (starts("so-odd:")) return so_odd_model(std::atoi(id.c_str() + 7));
  if (starts("comodel:")) {
    std::string t = id.substr(8);
    return comodel_lattice(family_from_char(t[0]), std::atoi(t.c_str() + 1));
  }
  if (starts("orbit-bd:")) {
    int k = 0, s = 0;
    if (std::sscanf(id.c_str(), "orbit-bd:%d:%d", &k, &s) != 2)
      throw InvalidType("orbit-bd: expected orbit-bd:<k>:<s>");
    return orbit_bd_lattice(k, s);
  }
  if (id == "case-v") return case_v_lattice();
  if (id == "case-x") return case_x_lattice();
  if (id == "sl2-torus") return sl2_torus_lattice();
  if (id == "sp8-sym") return sp8_sym_lattice(false);
  if (id == "sp8-sym-closure") return sp8_sym_lattice(true);
  if (id == "e8-induced") return e8_induced_lattice();
  throw InvalidType("unknown catalog id: " + id);
}

std::vector<std::string> catalog_fixed_ids() {
  return {"case-v", "case-x", "sl2-torus", "sp8-sym", "sp8-sym-closure", "e8-induced"};
}

}  // namespace wlat
