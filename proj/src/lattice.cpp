#include "wonderlat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "wonderlat/linfeas.hpp"

namespace wlat {

int WonderfulLattice::color_index(const std::string& label) const {
  for (int i = 0; i < n_colors(); ++i)
    if (colors[i] == label) return i;
  throw InvalidType(id + ": unknown color " + label);
}

DivisorVec WonderfulLattice::expand(const SphericalVec& g) const {
  DivisorVec out(n_colors(), 0);
  for (int i = 0; i < n_colors(); ++i)
    for (int j = 0; j < n_sroots(); ++j) out[i] += pairing[i][j] * g[j];
  return out;
}

Weight WonderfulLattice::omega_of(const DivisorVec& d) const {
  Weight w(datum.rank(), 0);
  for (int i = 0; i < n_colors(); ++i)
    for (int k = 0; k < datum.rank(); ++k) w[k] += d[i] * omega[i][k];
  return w;
}

IVec WonderfulLattice::simple_root_vec(const SphericalVec& g) const {
  IVec out(datum.rank(), 0);
  for (int j = 0; j < n_sroots(); ++j)
    for (int k = 0; k < datum.rank(); ++k) out[k] += g[j] * expansion[j][k];
  return out;
}

void WonderfulLattice::validate() const {
  int m = n_colors(), n = n_sroots(), r = datum.rank();
  if ((int)pairing.size() != m || (int)omega.size() != m || (int)expansion.size() != n)
    throw InvalidType(id + ": inconsistent catalog dimensions");
  // full column rank of the pairing
  QMat a = qmat(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = (long)pairing[i][j];
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = rank; i < m; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int i = 0; i < m; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      mpq_class f = a[i][col] / a[rank][col];
      for (int j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  if (rank != n)
    throw InvalidType(id + ": spherical roots are not independent in ZDelta");
  for (int i = 0; i < m; ++i)
    if (!datum.is_dominant(omega[i]))
      throw InvalidType(id + ": omega(" + colors[i] + ") is not dominant");
  // the pairing column of sigma, pushed through omega, is sigma itself
  for (int j = 0; j < n; ++j) {
    DivisorVec col(m);
    for (int i = 0; i < m; ++i) col[i] = pairing[i][j];
    if (omega_of(col) != datum.weight_of_root_vec(expansion[j]))
      throw InvalidType(id + ": pairing column of " + sroots[j] +
                        " does not match its simple-root expansion");
    bool nonneg = true, nonzero = false;
    for (int k = 0; k < r; ++k) {
      if (expansion[j][k] < 0) nonneg = false;
      if (expansion[j][k] != 0) nonzero = true;
    }
    if (!nonneg || !nonzero)
      throw InvalidType(id + ": invalid simple-root expansion of " + sroots[j]);
  }
}

std::optional<SphericalVec> sigma_leq(const DivisorVec& e, const DivisorVec& f,
                                      const WonderfulLattice& L) {
  int m = L.n_colors(), n = L.n_sroots();
  if (n == 0) return e == f ? std::optional<SphericalVec>(SphericalVec{}) : std::nullopt;
  QMat p = qmat(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) p[i][j] = (long)L.pairing[i][j];
  auto sol = solve_full_column_rank(p, to_qvec(ivec_sub(f, e)));
  if (!sol) return std::nullopt;
  auto iv = as_int_vec(*sol);
  if (!iv || !ivec_nonneg(*iv)) return std::nullopt;
  return iv;
}

Int pos_height(const DivisorVec& d) {
  Int s = 0;
  for (Int x : d)
    if (x > 0) s += x;
  return s;
}

namespace {

// Minimality test from the definition: gamma is a covering difference iff no
// 0 < gamma' < gamma (componentwise) has gamma- + expand(gamma') in NDelta.
bool is_covering(const SphericalVec& gamma, const WonderfulLattice& L) {
  DivisorVec x = L.expand(gamma);
  DivisorVec gminus(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) gminus[i] = x[i] < 0 ? -x[i] : 0;
  int n = L.n_sroots();
  SphericalVec gp(n, 0);
  bool found = false;
  std::function<void(int)> rec = [&](int j) {
    if (found) return;
    if (j == n) {
      bool zero = true, full = true;
      for (int t = 0; t < n; ++t) {
        if (gp[t] != 0) zero = false;
        if (gp[t] != gamma[t]) full = false;
      }
      if (zero || full) return;
      if (ivec_nonneg(ivec_add(gminus, L.expand(gp)))) found = true;
      return;
    }
    for (gp[j] = 0; gp[j] <= gamma[j] && !found; ++gp[j]) rec(j + 1);
    gp[j] = 0;
  };
  rec(0);
  return !found;
}

}  // namespace

std::vector<SphericalVec> covering_differences(const WonderfulLattice& L,
                                               bool support_filter, Int ht_bound) {
  if (ht_bound < 0) ht_bound = default_ht_bound();
  std::vector<SphericalVec> out;
  int n = L.n_sroots(), m = L.n_colors();
  if (n == 0) return out;
  // candidates whose positive part exceeds 2 by more than the margin cannot
  // cover; the margin keeps would-be (2-ht) violations visible instead of
  // assuming the property
  const Int pos_cap = 4;
  SphericalVec g(n, 0);
  DivisorVec acc(m, 0);  // expand(g), maintained incrementally
  std::function<void(int, Int)> rec = [&](int j, Int used) {
    if (j == n) {
      if (used == 0) return;
      if (pos_height(acc) > pos_cap) return;
      if (is_covering(g, L)) out.push_back(g);
      return;
    }
    for (g[j] = 0; used + g[j] <= ht_bound; ++g[j]) {
      rec(j + 1, used + g[j]);
      for (int i = 0; i < m; ++i) acc[i] += L.pairing[i][j];
    }
    for (int i = 0; i < m; ++i) acc[i] -= (g[j]) * L.pairing[i][j];
    g[j] = 0;
  };
  rec(0, 0);
  if (support_filter) {
    std::vector<SphericalVec> kept;
    for (auto& gamma : out) {
      IVec sv = L.simple_root_vec(gamma);
      bool full = true;
      for (Int v : sv)
        if (v == 0) full = false;
      if (full) kept.push_back(gamma);
    }
    out = std::move(kept);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<SphericalVec>& WonderfulLattice::covers() const {
  if (!covers_) covers_ = covering_differences(*this, false);
  return *covers_;
}

TwoHtReport check_2ht(const WonderfulLattice& L) {
  TwoHtReport rep;
  for (const SphericalVec& g : L.covers()) {
    Int h = pos_height(L.expand(g));
    rep.max_pos_height = std::max(rep.max_pos_height, h);
    if (h > 2) rep.violations.push_back(g);
  }
  return rep;
}

std::vector<std::pair<DivisorVec, SphericalVec>> sections_decomposition(
    const DivisorVec& f, const WonderfulLattice& L) {
  // closure of {f} under subtracting covering differences; every E <=_Sigma F
  // is reached because maximal chains step through covering differences
  std::map<DivisorVec, SphericalVec> seen;
  seen[f] = SphericalVec(L.n_sroots(), 0);
  std::vector<DivisorVec> stack{f};
  while (!stack.empty()) {
    DivisorVec cur = stack.back();
    stack.pop_back();
    SphericalVec gcur = seen[cur];
    for (const SphericalVec& g : L.covers()) {
      DivisorVec nx = ivec_sub(cur, L.expand(g));
      if (!ivec_nonneg(nx)) continue;
      SphericalVec gnx = ivec_add(gcur, g);
      auto it = seen.find(nx);
      if (it == seen.end()) {
        seen[nx] = gnx;
        stack.push_back(nx);
      } else if (it->second != gnx) {
        throw std::logic_error(L.id + ": ambiguous Sigma-coordinates in downset");
      }
    }
  }
  std::vector<std::pair<DivisorVec, SphericalVec>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
    Int ha = ivec_sum(a.second), hb = ivec_sum(b.second);
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  return out;
}

bool is_minuscule(const DivisorVec& d, const WonderfulLattice& L) {
  if (!ivec_nonneg(d)) throw InvalidType("is_minuscule: divisor not effective");
  for (const SphericalVec& g : L.covers())
    if (ivec_nonneg(ivec_sub(d, L.expand(g)))) return false;
  return true;
}

// search (gamma1, gamma2) != 0 with gamma1 + gamma2 <= gamma and both
// D - expand(gamma1), E - expand(gamma2) effective; returns the first hit in
// a fixed enumeration order, so callers are deterministic
std::optional<std::pair<SphericalVec, SphericalVec>> find_smaller_pair(
    const Triple& t, const SphericalVec& gamma, const WonderfulLattice& L) {
  int n = L.n_sroots();
  std::optional<std::pair<SphericalVec, SphericalVec>> hit;
  SphericalVec g1(n, 0);
  std::function<void(int)> rec1 = [&](int j1) {
    if (hit) return;
    if (j1 == n) {
      DivisorVec dp = ivec_sub(t.d, L.expand(g1));
      if (!ivec_nonneg(dp)) return;
      SphericalVec g2(n, 0);
      std::function<void(int)> rec2 = [&](int j2) {
        if (hit) return;
        if (j2 == n) {
          if (ivec_zero(g1) && ivec_zero(g2)) return;
          if (ivec_nonneg(ivec_sub(t.e, L.expand(g2)))) hit = {g1, g2};
          return;
        }
        for (g2[j2] = 0; g1[j2] + g2[j2] <= gamma[j2] && !hit; ++g2[j2]) rec2(j2 + 1);
        g2[j2] = 0;
      };
      rec2(0);
      return;
    }
    for (g1[j1] = 0; g1[j1] <= gamma[j1] && !hit; ++g1[j1]) rec1(j1 + 1);
    g1[j1] = 0;
  };
  rec1(0);
  return hit;
}

bool is_low_triple(const Triple& t, const WonderfulLattice& L) {
  auto g = sigma_leq(t.f, ivec_add(t.d, t.e), L);
  if (!g) throw InvalidType("is_low_triple: F is not <=_Sigma D+E");
  return !find_smaller_pair(t, *g, L).has_value();
}

std::vector<Triple> low_fundamental_triples(const WonderfulLattice& L, bool full_support) {
  std::vector<Triple> out;
  int m = L.n_colors();
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      DivisorVec de = ivec_add(L.color(a), L.color(b));
      for (auto& [f, gamma] : sections_decomposition(de, L)) {
        if (full_support) {
          IVec sv = L.simple_root_vec(gamma);
          bool full = true;
          for (Int v : sv)
            if (v == 0) full = false;
          if (!full) continue;
        }
        Triple t{L.color(a), L.color(b), f};
        if (is_low_triple(t, L)) out.push_back(t);
      }
    }
  std::sort(out.begin(), out.end(), [&](const Triple& x, const Triple& y) {
    Int hx = ivec_sum(ivec_sub(ivec_add(x.d, x.e), x.f));
    Int hy = ivec_sum(ivec_sub(ivec_add(y.d, y.e), y.f));
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return out;
}

bool is_distinguished(const std::vector<int>& subset, const WonderfulLattice& L) {
  if (subset.empty()) throw InvalidType("is_distinguished: empty subset");
  LinearSystem sys;
  sys.n_vars = (int)subset.size();
  for (std::size_t k = 0; k < subset.size(); ++k) {
    QVec row(sys.n_vars, mpq_class(0));
    row[k] = 1;
    sys.add(row, mpq_class(-1));  // x_k >= 1: strict positivity after scaling
  }
  for (int j = 0; j < L.n_sroots(); ++j) {
    QVec row(sys.n_vars, mpq_class(0));
    for (std::size_t k = 0; k < subset.size(); ++k)
      row[k] = (long)L.pairing[subset[k]][j];
    sys.add(row, mpq_class(0));  // sum x_D c(D, sigma_j) >= 0
  }
  return fm_feasible(sys);
}

const std::vector<std::vector<int>>& WonderfulLattice::distinguished_subsets() const {
  if (!distinguished_) {
    std::vector<std::vector<int>> all;
    int m = n_colors();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) subset.push_back(i);
      if (is_distinguished(subset, *this)) all.push_back(subset);
    }
    distinguished_ = std::move(all);
  }
  return *distinguished_;
}

bool is_faithful(const DivisorVec& d, const WonderfulLattice& L) {
  if (!ivec_nonneg(d)) throw InvalidType("is_faithful: divisor not effective");
  if (!L.strict) {
    for (int i : L.recorded_faithful)
      if (d == L.color(i)) return true;
    throw InvalidType(L.id + ": faithfulness test requires a strict lattice");
  }
  for (const auto& subset : L.distinguished_subsets()) {
    bool meets = false;
    for (int i : subset)
      if (d[i] != 0) meets = true;
    if (!meets) return false;
  }
  return true;
}

bool supports_disjoint(const DivisorVec& d, const DivisorVec& e,
                       const WonderfulLattice& L) {
  Weight wd = L.omega_of(d), we = L.omega_of(e);
  for (int k = 0; k < L.datum.rank(); ++k)
    if (wd[k] != 0 && we[k] != 0) return false;
  return true;
}

WonderfulLattice quotient_lattice(const WonderfulLattice& L, const std::vector<int>& subset) {
  if (!is_distinguished(subset, L))
    throw InvalidType(L.id + ": quotient by a non-distinguished subset");
  int n = L.n_sroots();
  auto in_kernel = [&](const SphericalVec& g) {
    DivisorVec x = L.expand(g);
    for (int i : subset)
      if (x[i] != 0) return false;
    return true;
  };
  // kernel members up to the configured height; their minimal elements are
  // the spherical roots of the quotient (the kernel semigroup is free)
  Int bound = default_ht_bound();
  std::vector<SphericalVec> members;
  SphericalVec g(n, 0);
  std::function<void(int, Int)> rec = [&](int j, Int used) {
    if (j == n) {
      if (used > 0 && in_kernel(g)) members.push_back(g);
      return;
    }
    for (g[j] = 0; used + g[j] <= bound; ++g[j]) rec(j + 1, used + g[j]);
    g[j] = 0;
  };
  rec(0, 0);
  std::vector<SphericalVec> basis;
  for (auto& mem : members) {
    bool minimal = true;
    for (auto& other : members) {
      if (other == mem) continue;
      IVec rest = ivec_sub(mem, other);
      if (ivec_nonneg(rest) && !ivec_zero(rest) && in_kernel(rest)) {
        minimal = false;
        break;
      }
    }
    if (minimal) basis.push_back(mem);
  }

  WonderfulLattice out;
  out.id = L.id + "/quotient";
  out.datum = L.datum;
  bool simply_laced = true;
  for (auto& c : L.datum.components())
    if (c.family == RootFamily::B || c.family == RootFamily::C ||
        c.family == RootFamily::F || c.family == RootFamily::G)
      simply_laced = false;
  out.strict = L.strict && simply_laced;
  std::vector<int> kept;
  for (int i = 0; i < L.n_colors(); ++i)
    if (std::find(subset.begin(), subset.end(), i) == subset.end()) kept.push_back(i);
  for (int i : kept) {
    out.colors.push_back(L.colors[i]);
    out.omega.push_back(L.omega[i]);
  }
  out.pairing.assign(kept.size(), IVec(basis.size(), 0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    out.sroots.push_back("t" + std::to_string(j + 1));
    DivisorVec x = L.expand(basis[j]);
    for (std::size_t i = 0; i < kept.size(); ++i) out.pairing[i][j] = x[kept[i]];
    out.expansion.push_back(L.simple_root_vec(basis[j]));
  }
  out.validate();
  return out;
}

WonderfulLattice localization(const WonderfulLattice& L, const std::vector<int>& keep_sroots) {
  WonderfulLattice out;
  out.id = L.id + "/loc";
  out.datum = L.datum;
  out.strict = L.strict;
  out.colors = L.colors;
  out.omega = L.omega;
  out.pairing.assign(L.n_colors(), IVec(keep_sroots.size(), 0));
  for (std::size_t j = 0; j < keep_sroots.size(); ++j) {
    out.sroots.push_back(L.sroots[keep_sroots[j]]);
    out.expansion.push_back(L.expansion[keep_sroots[j]]);
    for (int i = 0; i < L.n_colors(); ++i) out.pairing[i][j] = L.pairing[i][keep_sroots[j]];
  }
  out.validate();
  return out;
}

std::vector<std::vector<int>> diagram_components(const RootDatum& datum,
                                                 const std::vector<int>& nodes) {
  std::set<int> pending(nodes.begin(), nodes.end());
  std::vector<std::vector<int>> comps;
  while (!pending.empty()) {
    std::vector<int> comp{*pending.begin()};
    pending.erase(pending.begin());
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (auto it = pending.begin(); it != pending.end();) {
        if (datum.cartan(comp[k], *it) != 0) {
          comp.push_back(*it);
          it = pending.erase(it);
        } else
          ++it;
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

SubDiagram classify_subdiagram(const RootDatum& datum, const std::vector<int>& nodes) {
  int r = (int)nodes.size();
  for (RootFamily f : {RootFamily::A, RootFamily::B, RootFamily::C, RootFamily::D,
                       RootFamily::E, RootFamily::F, RootFamily::G}) {
    RootDatum model = [&]() -> RootDatum {
      try {
        return RootDatum::simple(f, r);
      } catch (const InvalidType&) {
        return RootDatum::simple(RootFamily::A, 1);
      }
    }();
    if (model.rank() != r) continue;
    std::vector<int> perm(r, -1);
    std::vector<bool> used(r, false);
    std::function<bool(int)> match = [&](int pos) {
      if (pos == r) return true;
      for (int cand = 0; cand < r; ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (int prev = 0; prev < pos && ok; ++prev) {
          if (model.cartan(pos, prev) != datum.cartan(nodes[cand], nodes[perm[prev]])) ok = false;
          if (ok && model.cartan(prev, pos) != datum.cartan(nodes[perm[prev]], nodes[cand]))
            ok = false;
        }
        if (!ok) continue;
        perm[pos] = cand;
        used[cand] = true;
        if (match(pos + 1)) return true;
        used[cand] = false;
        perm[pos] = -1;
      }
      return false;
    };
    if (match(0)) {
      SubDiagram sd;
      sd.family = f;
      sd.rank = r;
      sd.nodes.resize(r);
      for (int i = 0; i < r; ++i) sd.nodes[i] = nodes[perm[i]];
      return sd;
    }
  }
  throw InvalidType("classify_subdiagram: unrecognized diagram");
}

}  // namespace wlat
