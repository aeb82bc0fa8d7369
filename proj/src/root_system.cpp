#include "wonderlat/root_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

namespace wlat {

std::string family_name(RootFamily f) { return std::string(1, char(f)); }

RootFamily family_from_char(char c) {
  switch (c) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
      return RootFamily(c);
    default:
      throw InvalidType(std::string("unknown family '") + c + "'");
  }
}

namespace {

void check_type(RootFamily f, int r) {
  bool ok = false;
  switch (f) {
    case RootFamily::A: ok = r >= 1; break;
    case RootFamily::B: ok = r >= 2; break;
    case RootFamily::C: ok = r >= 2; break;  // C2 = B2 with roles swapped
    case RootFamily::D: ok = r >= 3; break;  // D3 = A3 with D-numbering
    case RootFamily::E: ok = r >= 6 && r <= 8; break;
    case RootFamily::F: ok = r == 4; break;
    case RootFamily::G: ok = r == 2; break;
  }
  if (!ok)
    throw InvalidType("invalid type " + family_name(f) + std::to_string(r));
}

// Adjacency and edge multiplicities of the Dynkin diagram, Bourbaki
// numbering (E: branch node 2 attached to node 4).
std::vector<std::pair<int, int>> diagram_edges(RootFamily f, int r) {
  std::vector<std::pair<int, int>> e;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) e.push_back({i, i + 1});
  };
  switch (f) {
    case RootFamily::A: case RootFamily::B: case RootFamily::C:
    case RootFamily::F: case RootFamily::G:
      chain(1, r);
      break;
    case RootFamily::D:
      chain(1, r - 1);
      e.pop_back();
      e.push_back({r - 2, r});
      e.push_back({r - 2, r - 1});
      break;
    case RootFamily::E:
      e.push_back({1, 3});
      e.push_back({3, 4});
      e.push_back({2, 4});
      chain(4, r);
      break;
  }
  return e;
}

}  // namespace

RootDatum RootDatum::simple(RootFamily family, int rank) {
  return product({{family, rank}});
}

RootDatum build_root_system(RootFamily family, int rank) {
  return RootDatum::simple(family, rank);
}

RootDatum RootDatum::product(const std::vector<SimpleComponent>& comps) {
  RootDatum d;
  d.comps_ = comps;
  d.rank_ = 0;
  for (auto& c : comps) {
    check_type(c.family, c.rank);
    if (!d.name_.empty()) d.name_ += "x";
    d.name_ += family_name(c.family) + std::to_string(c.rank);
    d.rank_ += c.rank;
  }
  d.init();
  return d;
}

void RootDatum::init() {
  cartan_.assign(rank_, IVec(rank_, 0));
  for (int i = 0; i < rank_; ++i) cartan_[i][i] = 2;
  int off = 0;
  for (auto& c : comps_) {
    for (auto [a, b] : diagram_edges(c.family, c.rank)) {
      int i = off + a - 1, j = off + b - 1;
      // cartan(i,j) = <alpha_j, alpha_i^vee>
      Int ij = -1, ji = -1;
      if (c.family == RootFamily::B && b == c.rank) ji = -2;       // alpha_r short
      if (c.family == RootFamily::C && b == c.rank) ij = -2;       // alpha_r long
      if (c.family == RootFamily::F && a == 2) ji = -2;            // 3,4 short
      if (c.family == RootFamily::G && a == 1) { ij = -3; }        // alpha_1 short
      cartan_[i][j] = ij;
      cartan_[j][i] = ji;
    }
    off += c.rank;
  }

  QMat qc = qmat(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) qc[i][j] = (long)cartan_[i][j];
  inv_cartan_ = qinverse(qc);

  // symmetrizer: d_i * cartan(i,j) = d_j * cartan(j,i), min 1 per component
  d_.assign(rank_, mpq_class(0));
  off = 0;
  for (auto& c : comps_) {
    d_[off] = 1;
    auto edges = diagram_edges(c.family, c.rank);
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [a, b] : edges) {
        int i = off + a - 1, j = off + b - 1;
        if (d_[i] != 0 && d_[j] == 0) {
          d_[j] = d_[i] * cartan_[i][j] / cartan_[j][i];
          changed = true;
        } else if (d_[j] != 0 && d_[i] == 0) {
          d_[i] = d_[j] * cartan_[j][i] / cartan_[i][j];
          changed = true;
        }
      }
    }
    mpq_class dmin = d_[off];
    for (int k = 1; k < c.rank; ++k) dmin = std::min(dmin, d_[off + k]);
    for (int k = 0; k < c.rank; ++k) d_[off + k] /= dmin;
    off += c.rank;
  }

  // positive roots by closure from the simple roots
  std::set<IVec> seen;
  std::vector<IVec> by_height[2];
  std::vector<IVec> current;
  for (int i = 0; i < rank_; ++i) {
    IVec e(rank_, 0);
    e[i] = 1;
    current.push_back(e);
    seen.insert(e);
    positive_roots_.push_back(e);
  }
  auto pairing_with_covee = [&](const IVec& beta, int i) {
    Int s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * beta[j];
    return s;
  };
  while (!current.empty()) {
    std::vector<IVec> next;
    for (const IVec& beta : current) {
      for (int i = 0; i < rank_; ++i) {
        IVec down = beta;
        Int p = 0;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !seen.count(down)) break;
          ++p;
        }
        if (p - pairing_with_covee(beta, i) > 0) {
          IVec up = beta;
          up[i] += 1;
          if (seen.insert(up).second) {
            positive_roots_.push_back(up);
            next.push_back(up);
          }
        }
      }
    }
    current = std::move(next);
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const IVec& a, const IVec& b) {
              Int ha = ivec_sum(a), hb = ivec_sum(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
}

QVec RootDatum::root_coords(const Weight& w) const {
  return qmatvec(inv_cartan_, to_qvec(w));
}

Weight RootDatum::weight_of_root_vec(const IVec& alpha_coords) const {
  Weight w(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[i] += cartan_[i][j] * alpha_coords[j];
  return w;
}

IVec RootDatum::highest_root() const {
  if (comps_.size() != 1)
    throw InvalidType("highest_root: datum is not irreducible");
  return positive_roots_.back();
}

mpq_class RootDatum::form(const Weight& a, const Weight& b) const {
  // (a,b) = sum_j rc(a)_j * d_j * b_j
  QVec rc = root_coords(a);
  mpq_class s = 0;
  for (int j = 0; j < rank_; ++j) s += rc[j] * d_[j] * (long)b[j];
  return s;
}

Weight RootDatum::reflect(const Weight& w, int i) const {
  Weight out = w;
  Int k = w[i];
  for (int j = 0; j < rank_; ++j) out[j] -= k * cartan_[j][i];
  return out;
}

bool dominance_leq(const Weight& lam, const Weight& mu, const RootDatum& datum) {
  QVec rc = datum.root_coords(ivec_sub(mu, lam));
  for (auto& q : rc)
    if (!is_integral(q) || q < 0) return false;
  return true;
}

mpq_class root_height(const Weight& w, const RootDatum& datum) {
  QVec rc = datum.root_coords(w);
  mpq_class s = 0;
  for (auto& q : rc) s += q;
  return s;
}

mpz_class weyl_dim(const Weight& lam, const RootDatum& datum) {
  if (!datum.is_dominant(lam))
    throw InvalidType("weyl_dim: weight is not dominant");
  Weight lr = ivec_add(lam, datum.rho());
  Weight rho = datum.rho();
  mpq_class prod = 1;
  for (const IVec& beta : datum.positive_roots()) {
    // (w, beta) with beta in alpha-coords: sum_j beta_j d_j w_j
    mpq_class num = 0, den = 0;
    for (int j = 0; j < datum.rank(); ++j) {
      if (beta[j] == 0) continue;
      num += mpq_class((long)beta[j]) * datum.symmetrizer()[j] * (long)lr[j];
      den += mpq_class((long)beta[j]) * datum.symmetrizer()[j] * (long)rho[j];
    }
    prod *= num / den;
  }
  prod.canonicalize();
  if (prod.get_den() != 1)
    throw std::logic_error("weyl_dim: non-integral result");
  return prod.get_num();
}

namespace {

// Enumerate dominant mu <= lam: mu = lam - sum c_i alpha_i with c in the box
// 0 <= c_i <= rc(lam)_i (dominant weights have nonnegative alpha-coords).
std::vector<Weight> dominant_box(const Weight& lam, const RootDatum& datum) {
  int r = datum.rank();
  QVec rc = datum.root_coords(lam);
  IVec bound(r);
  for (int i = 0; i < r; ++i) {
    mpz_class fl = rc[i].get_num() / rc[i].get_den();
    if (rc[i] < 0) return {};  // lam not dominant-compatible
    bound[i] = fl.fits_slong_p() ? fl.get_si() : 0;
  }
  std::vector<Weight> out;
  IVec c(r, 0);
  // DFS over the box, maintaining mu incrementally
  Weight mu = lam;
  std::vector<IVec> alpha_w(r);
  for (int j = 0; j < r; ++j) {
    IVec a(r, 0);
    a[j] = 1;
    alpha_w[j] = datum.weight_of_root_vec(a);
  }
  struct Rec {
    int r;
    const IVec& bound;
    const std::vector<IVec>& alpha_w;
    const RootDatum& datum;
    std::vector<Weight>& out;
    void go(int j, Weight& mu) {
      if (j == r) {
        if (ivec_nonneg(mu)) out.push_back(mu);
        return;
      }
      for (Int k = 0;; ++k) {
        if (k > bound[j]) break;
        go(j + 1, mu);
        for (int t = 0; t < r; ++t) mu[t] -= alpha_w[j][t];
      }
      for (int t = 0; t < r; ++t) mu[t] += (bound[j] + 1) * alpha_w[j][t];
    }
  } rec{r, bound, alpha_w, datum, out};
  rec.go(0, mu);
  return out;
}

Weight dominantize(Weight w, const RootDatum& datum) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < datum.rank(); ++i) {
      if (w[i] < 0) {
        w = datum.reflect(w, i);
        changed = true;
      }
    }
  }
  return w;
}

// reflect to the dominant chamber tracking the determinant sign;
// returns 0 sign if the weight lies on a wall.
int dominantize_signed(Weight& w, const RootDatum& datum) {
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < datum.rank(); ++i) {
      if (w[i] < 0) {
        w = datum.reflect(w, i);
        sign = -sign;
        changed = true;
      }
    }
  }
  for (int i = 0; i < datum.rank(); ++i)
    if (w[i] == 0) return 0;
  return sign;
}

}  // namespace

std::map<Weight, Int> weight_multiplicities(const Weight& lam, const RootDatum& datum,
                                            const mpz_class& dim_cap) {
  if (!datum.is_dominant(lam))
    throw InvalidType("weight_multiplicities: weight is not dominant");
  mpz_class dim = weyl_dim(lam, datum);
  if (dim > dim_cap)
    throw CapExceeded("weight_multiplicities: dim " + dim.get_str() + " exceeds cap " +
                      dim_cap.get_str());

  static std::map<std::pair<std::string, Weight>, std::map<Weight, Int>> cache;
  auto key = std::make_pair(datum.name(), lam);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<Weight> doms = dominant_box(lam, datum);
  std::sort(doms.begin(), doms.end(), [&](const Weight& a, const Weight& b) {
    mpq_class ha = root_height(ivec_sub(lam, a), datum);
    mpq_class hb = root_height(ivec_sub(lam, b), datum);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  std::map<Weight, Int> mult;
  Weight rho = datum.rho();
  mpq_class norm_lam = datum.form(ivec_add(lam, rho), ivec_add(lam, rho));
  for (const Weight& mu : doms) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    mpq_class num = 0;
    for (const IVec& beta : datum.positive_roots()) {
      Weight bw = datum.weight_of_root_vec(beta);
      Weight cur = mu;
      for (Int k = 1;; ++k) {
        cur = ivec_add(cur, bw);
        Weight dom = dominantize(cur, datum);
        auto mit = mult.find(dom);
        if (mit == mult.end()) {
          if (!dominance_leq(dom, lam, datum)) break;  // left the weight system
          continue;  // dominant weight of the system not reached yet: mult 0 region
        }
        num += 2 * mpq_class((long)mit->second) * datum.form(cur, bw);
      }
    }
    mpq_class den = norm_lam - datum.form(ivec_add(mu, rho), ivec_add(mu, rho));
    mpq_class m = num / den;
    m.canonicalize();
    if (m.get_den() != 1 || m < 0)
      throw std::logic_error("freudenthal: non-integral multiplicity");
    mult[mu] = m.get_num().get_si();
  }
  cache[key] = mult;
  return mult;
}

std::vector<Weight> weyl_orbit(const Weight& w, const RootDatum& datum) {
  std::set<Weight> orbit;
  std::vector<Weight> stack{w};
  orbit.insert(w);
  while (!stack.empty()) {
    Weight cur = stack.back();
    stack.pop_back();
    for (int i = 0; i < datum.rank(); ++i) {
      Weight nx = datum.reflect(cur, i);
      if (orbit.insert(nx).second) stack.push_back(nx);
    }
  }
  return std::vector<Weight>(orbit.begin(), orbit.end());
}

std::vector<std::pair<Weight, Int>> weight_system(const Weight& lam, const RootDatum& datum,
                                                  const mpz_class& dim_cap) {
  static std::map<std::pair<std::string, Weight>, std::vector<std::pair<Weight, Int>>> cache;
  auto key = std::make_pair(datum.name(), lam);
  auto it = cache.find(key);
  if (it != cache.end()) {
    if (weyl_dim(lam, datum) > dim_cap)
      throw CapExceeded("weight_system: dim exceeds cap " + dim_cap.get_str());
    return it->second;
  }
  std::vector<std::pair<Weight, Int>> out;
  for (auto& [mu, m] : weight_multiplicities(lam, datum, dim_cap))
    for (const Weight& w : weyl_orbit(mu, datum)) out.push_back({w, m});
  cache[key] = out;
  return out;
}

std::map<Weight, Int> tensor_decomposition(const Weight& lam, const Weight& mu,
                                           const RootDatum& datum, const mpz_class& dim_cap) {
  static std::map<std::tuple<std::string, Weight, Weight>, std::map<Weight, Int>> cache;
  auto key = std::make_tuple(datum.name(), std::min(lam, mu), std::max(lam, mu));
  {
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const Weight* big = &lam;
  const Weight* small = &mu;
  if (weyl_dim(mu, datum) > weyl_dim(lam, datum)) std::swap(big, small);
  if (weyl_dim(*small, datum) > dim_cap)
    throw CapExceeded("tensor_decomposition: smaller factor dim " +
                      weyl_dim(*small, datum).get_str() + " exceeds cap " + dim_cap.get_str());
  Weight rho = datum.rho();
  std::map<Weight, Int> out;
  for (auto& [w, m] : weight_system(*small, datum, dim_cap)) {
    Weight xi = ivec_add(ivec_add(*big, rho), w);
    int sign = dominantize_signed(xi, datum);
    if (sign == 0) continue;
    Weight nu = ivec_sub(xi, rho);
    out[nu] += sign * m;
    if (out[nu] == 0) out.erase(nu);
  }
  for (auto& [nu, m] : out)
    if (m < 0) throw std::logic_error("klimyk: negative multiplicity");
  cache[key] = out;
  return out;
}

Int tensor_multiplicity(const Weight& lam, const Weight& mu, const Weight& nu,
                        const RootDatum& datum, const mpz_class& dim_cap) {
  for (const Weight* w : {&lam, &mu, &nu})
    if (!datum.is_dominant(*w))
      throw InvalidType("tensor_multiplicity: non-dominant weight");
  auto dec = tensor_decomposition(lam, mu, datum, dim_cap);
  auto it = dec.find(nu);
  return it == dec.end() ? 0 : it->second;
}

std::vector<Weight> dominant_below(const Weight& lam, const RootDatum& datum) {
  if (!datum.is_dominant(lam))
    throw InvalidType("dominant_below: weight is not dominant");
  std::vector<Weight> out = dominant_box(lam, datum);
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    mpq_class ha = root_height(ivec_sub(lam, a), datum);
    mpq_class hb = root_height(ivec_sub(lam, b), datum);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

std::vector<IVec> weight_covering_differences(const RootDatum& datum, Int ht_cap,
                                              int rank_bound) {
  if (datum.rank() > rank_bound)
    throw CapExceeded("weight_covering_differences: rank " + std::to_string(datum.rank()) +
                      " exceeds bound " + std::to_string(rank_bound));
  if (ht_cap < 0) {
    ht_cap = 0;
    int off = 0;
    for (auto& c : datum.components()) {
      RootDatum comp = RootDatum::simple(c.family, c.rank);
      ht_cap = std::max(ht_cap, ivec_sum(comp.highest_root()) + 4);
      off += c.rank;
    }
  }
  int r = datum.rank();
  std::vector<IVec> covers;

  // Candidates with ht(gamma+) > 2 + margin are discarded before the
  // expensive minimality scan; the margin keeps the enumeration able to
  // surface would-be violations of ht(gamma+) <= 2 instead of assuming it.
  const Int pos_ht_margin = 2;

  // gamma is covering iff no intermediate dominant weight exists between
  // gamma- and gamma+; equivalently no 0 < gamma' < gamma (componentwise)
  // has gamma- + gamma' dominant.
  auto is_cover = [&](const IVec& gamma) {
    Weight x = datum.weight_of_root_vec(gamma);
    Int pos_ht = 0;
    for (int i = 0; i < r; ++i)
      if (x[i] > 0) pos_ht += x[i];
    if (pos_ht > 2 + pos_ht_margin) return false;
    Weight gminus(r, 0);
    for (int i = 0; i < r; ++i) gminus[i] = x[i] < 0 ? -x[i] : 0;
    IVec gp(r, 0);
    bool found_intermediate = false;
    struct Rec {
      int r;
      const IVec& gamma;
      const Weight& gminus;
      const RootDatum& datum;
      bool& found;
      IVec& gp;
      void go(int j) {
        if (found) return;
        if (j == r) {
          bool zero = true, full = true;
          for (int t = 0; t < r; ++t) {
            if (gp[t] != 0) zero = false;
            if (gp[t] != gamma[t]) full = false;
          }
          if (zero || full) return;
          Weight cand = ivec_add(gminus, datum.weight_of_root_vec(gp));
          if (ivec_nonneg(cand)) found = true;
          return;
        }
        for (gp[j] = 0; gp[j] <= gamma[j] && !found; ++gp[j]) go(j + 1);
        gp[j] = 0;
      }
    } rec{r, gamma, gminus, datum, found_intermediate, gp};
    rec.go(0);
    return !found_intermediate;
  };

  // enumerate candidates by total height
  IVec gamma(r, 0);
  struct Enum {
    int r;
    Int cap;
    const RootDatum& datum;
    std::vector<IVec>& covers;
    IVec& gamma;
    std::function<bool(const IVec&)> test;
    void go(int j, Int used) {
      if (j == r) {
        if (used > 0 && test(gamma)) covers.push_back(gamma);
        return;
      }
      for (gamma[j] = 0; used + gamma[j] <= cap; ++gamma[j]) go(j + 1, used + gamma[j]);
      gamma[j] = 0;
    }
  } en{r, ht_cap, datum, covers, gamma, is_cover};
  en.go(0, 0);
  std::sort(covers.begin(), covers.end());
  return covers;
}

mpz_class default_dim_cap() {
  if (const char* s = std::getenv("WONDERLAT_DIM_CAP")) return mpz_class(s);
  return mpz_class(1000000);
}

Int default_ht_bound() {
  if (const char* s = std::getenv("WONDERLAT_HT_BOUND")) return std::atol(s);
  return 24;
}

}  // namespace wlat
