#include "wonderlat/engine.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wonderlat/hvectors.hpp"
#include "wonderlat/root_system.hpp"

namespace wlat {

std::string to_string(LeafStatus s) {
  switch (s) {
    case LeafStatus::Trivial: return "trivial";
    case LeafStatus::VerifiedByVector: return "verified-by-vector";
    case LeafStatus::VerifiedByQuotientRule: return "verified-by-quotient-rule";
    case LeafStatus::MultiplicityNecessaryPass: return "multiplicity-necessary-pass";
    case LeafStatus::MultiplicityFail: return "multiplicity-fail";
    case LeafStatus::OutOfCap: return "out-of-cap";
  }
  return "?";
}

namespace {

struct LatticeKind {
  enum Family { Model, SoOdd, Comodel, OrbitBD, CaseV, CaseX, Other } family = Other;
  RootFamily type = RootFamily::A;
  int rank = 0;
  Int k = 0, s = 0;
};

LatticeKind parse_kind(const WonderfulLattice& L) {
  LatticeKind out;
  auto starts = [&](const char* p) { return L.id.rfind(p, 0) == 0; };
  if (starts("model:")) {
    out.family = LatticeKind::Model;
    out.type = family_from_char(L.id[6]);
    out.rank = std::atoi(L.id.c_str() + 7);
  } else if (starts("so-odd:")) {
    out.family = LatticeKind::SoOdd;
  } else if (starts("comodel:")) {
    out.family = LatticeKind::Comodel;
    out.type = family_from_char(L.id[8]);
    out.rank = std::atoi(L.id.c_str() + 9);
  } else if (starts("orbit-bd:")) {
    out.family = LatticeKind::OrbitBD;
    std::sscanf(L.id.c_str(), "orbit-bd:%ld:%ld", &out.k, &out.s);
  } else if (L.id == "case-v") {
    out.family = LatticeKind::CaseV;
  } else if (L.id == "case-x") {
    out.family = LatticeKind::CaseX;
  }
  return out;
}

// cached results of the fixed identity table
bool identity_holds(const std::string& id) {
  static std::map<std::string, bool> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, apply_projection(id).matched).first;
  return it->second;
}

// cached model lattices (for support analysis of comodels, and for the
// distinguished-subset side conditions of the quotient rules)
const WonderfulLattice& model_of(RootFamily f, int r) {
  static std::map<std::string, WonderfulLattice> cache;
  std::string id = "model:" + family_name(f) + std::to_string(r);
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, catalog(id)).first;
  return it->second;
}

bool odd_colors_distinguished(int r) {  // model(A, r), r odd
  static std::map<int, bool> cache;
  auto it = cache.find(r);
  if (it == cache.end()) {
    std::vector<int> odd;
    for (int i = 0; i < r; i += 2) odd.push_back(i);
    it = cache.emplace(r, is_distinguished(odd, model_of(RootFamily::A, r))).first;
  }
  return it->second;
}

bool e6_center_distinguished() {
  // {D2, D3, D4, D5} is distinguished on the E6 model, which is the reduced
  // system every E6-subdiagram triple lands on
  static const bool value = is_distinguished({1, 2, 3, 4}, model_of(RootFamily::E, 6));
  return value;
}

struct LeafShape {
  bool ok = false;
  SubDiagram sd;
  int p = 0, q = 0;        // positions of the two colors, 1-based, p <= q
  DivisorVec f_sub;        // F restricted to the subdiagram's color positions
};

// Analyse the support of D+E-F inside the expansion diagram `expn` (the
// lattice's own for models, the cotype model's for comodels). Colors are
// assumed to be node-indexed (color i <-> node i), which holds for every
// catalog family this dispatch serves.
LeafShape analyse(const WonderfulLattice& expn, int a, int b, const DivisorVec& f,
                  const SphericalVec& gamma) {
  LeafShape out;
  (void)f;
  IVec sv = expn.simple_root_vec(gamma);
  std::vector<int> nodes;
  for (int i = 0; i < (int)sv.size(); ++i)
    if (sv[i] != 0) nodes.push_back(i);
  if (nodes.empty()) return out;
  auto comps = diagram_components(expn.datum, nodes);
  if (comps.size() != 1) return out;
  out.sd = classify_subdiagram(expn.datum, nodes);
  int r = out.sd.rank;
  auto pos_of = [&](int node) {
    for (int i = 0; i < r; ++i)
      if (out.sd.nodes[i] == node) return i + 1;
    return 0;
  };
  out.p = pos_of(a);
  out.q = pos_of(b);
  if (out.p == 0 || out.q == 0) return out;
  if (out.p > out.q) std::swap(out.p, out.q);
  // the reduced triple lives on the Levi of the support: F~ is D+E minus
  // gamma, both restricted to the subdiagram's colors
  out.f_sub.assign(r, 0);
  out.f_sub[out.p - 1] += 1;
  out.f_sub[out.q - 1] += 1;
  DivisorVec ge = expn.expand(gamma);
  for (int i = 0; i < r; ++i) out.f_sub[i] -= ge[out.sd.nodes[i]];
  if (!ivec_nonneg(out.f_sub)) return out;
  out.ok = true;
  return out;
}

DivisorVec sub_color(int r, int i, Int c = 1) {  // 1-based
  DivisorVec d(r, 0);
  if (i >= 1) d[i - 1] = c;
  return d;
}

std::optional<TripleVerdict> dispatch_model_like(const WonderfulLattice& L, bool comodel,
                                                 int a, int b, const Triple& t,
                                                 const SphericalVec& gamma,
                                                 const WonderfulLattice& expn) {
  LeafShape sh = analyse(expn, a, b, t.f, gamma);
  if (!sh.ok) return std::nullopt;
  int r = sh.sd.rank;
  int p = sh.p, q = sh.q;
  TripleVerdict v{t, LeafStatus::Trivial, ""};
  switch (sh.sd.family) {
    case RootFamily::A: {
      if (p + q != r + 1 || !ivec_zero(sh.f_sub)) return std::nullopt;
      if (r % 2 == 1) {
        if (p % 2 != 0 || q % 2 != 0) return std::nullopt;
        if (!odd_colors_distinguished(r)) return std::nullopt;
        v.status = LeafStatus::VerifiedByQuotientRule;
        v.witness = "quotient by the odd colors of the type-A" + std::to_string(r) +
                    " subsystem onto an adjoint symmetric variety";
        return v;
      }
      if (comodel) {
        v.status = LeafStatus::VerifiedByQuotientRule;
        v.witness = "reductive generic stabilizer of the cotype-A" + std::to_string(r) +
                    " subsystem: dual spherical vectors pair to the identity";
        return v;
      }
      if (!project_model_a(r, p, q).nonzero) return std::nullopt;
      v.status = LeafStatus::VerifiedByVector;
      v.witness = "model-A:" + std::to_string(r) + ":" + std::to_string(p) + "," +
                  std::to_string(q);
      return v;
    }
    case RootFamily::D: {
      if (r % 2 == 0 || p % 2 == 0 || q % 2 == 0 || p > r - 2 || q > r - 2)
        return std::nullopt;
      DivisorVec expect = p + q == r + 1
                              ? ivec_add(sub_color(r, r - 1), sub_color(r, r))
                              : sub_color(r, p + q - 2);
      if (sh.f_sub != expect) return std::nullopt;
      ProjectionResult pr = comodel ? project_comodel_d((r - 1) / 2, p, q)
                                    : project_model_d(r, p, q);
      if (!pr.matched && !pr.nonzero) return std::nullopt;
      v.status = LeafStatus::VerifiedByVector;
      v.witness = pr.id;
      return v;
    }
    case RootFamily::E: {
      // the (D1, D6, 0) triple of an E6 subsystem reduces to a symmetric
      // variety through the distinguished set {D2..D5}
      if (r == 6 && ((p == 1 && q == 6)) && ivec_zero(sh.f_sub)) {
        if (!e6_center_distinguished()) return std::nullopt;
        v.status = LeafStatus::VerifiedByQuotientRule;
        v.witness = "quotient by {D2,D3,D4,D5} of the E6 subsystem onto a symmetric variety";
        return v;
      }
      if (!comodel) return std::nullopt;  // exceptional model triples: oracle only
      struct Entry {
        int p, q;
        DivisorVec f;
        const char* id;
      };
      std::vector<Entry> table;
      if (r == 6) {
        table = {{5, 6, sub_color(6, 2), "comodel-E6:D5,D6,D2"},
                 {3, 6, sub_color(6, 5), "comodel-E6:D3,D6,D5"}};
      } else if (r == 7) {
        table = {{1, 6, sub_color(7, 3), "comodel-E7:D1,D6,D3"},
                 {6, 6, ivec_add(sub_color(7, 2), sub_color(7, 7)), "comodel-E7:D6,D6,D2+D7"}};
      } else {
        table = {{1, 1, sub_color(8, 2), "comodel-E8:D1,D1,D2"},
                 {1, 5, sub_color(8, 2, 2), "comodel-E8:D1,D5,2D2"},
                 {1, 7, sub_color(8, 3), "comodel-E8:D1,D7,D3"},
                 {1, 8, sub_color(8, 7), "comodel-E8:D1,D8,D7"},
                 {3, 8, sub_color(8, 5), "comodel-E8:D3,D8,D5"},
                 {5, 8, ivec_add(sub_color(8, 2), sub_color(8, 7)), "comodel-E8:D5,D8,D2+D7"},
                 {7, 8, sub_color(8, 2), "comodel-E8:D7,D8,D2"}};
      }
      auto match = [&](int pp, int qq, const DivisorVec& ff) -> std::optional<TripleVerdict> {
        for (auto& en : table)
          if (en.p == pp && en.q == qq && en.f == ff) {
            if (!identity_holds(en.id)) return std::nullopt;
            TripleVerdict tv{t, LeafStatus::VerifiedByVector, en.id};
            return tv;
          }
        return std::nullopt;
      };
      if (auto got = match(p, q, sh.f_sub)) return got;
      if (r == 6) {
        // diagram flip 1<->6, 3<->5
        auto flip = [](int x) { return x == 1 ? 6 : x == 6 ? 1 : x == 3 ? 5 : x == 5 ? 3 : x; };
        int fp = flip(p), fq = flip(q);
        if (fp > fq) std::swap(fp, fq);
        DivisorVec ff(6, 0);
        for (int i = 1; i <= 6; ++i) ff[flip(i) - 1] = sh.f_sub[i - 1];
        if (auto got = match(fp, fq, ff)) {
          got->witness += " (through the diagram flip)";
          return got;
        }
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::optional<TripleVerdict> dispatch(const Triple& t, const WonderfulLattice& L) {
  int a = -1, b = -1;
  {
    std::vector<int> idx;
    for (int i = 0; i < L.n_colors(); ++i) {
      if (t.d[i] < 0 || t.e[i] < 0) return std::nullopt;
      for (Int c = 0; c < t.d[i]; ++c) idx.push_back(i);
      for (Int c = 0; c < t.e[i]; ++c) idx.push_back(i);
    }
    if (idx.size() != 2) return std::nullopt;  // only fundamental leaves
    if (ivec_sum(t.d) != 1 || ivec_sum(t.e) != 1) return std::nullopt;
    a = idx[0];
    b = idx[1];
  }
  auto gamma = sigma_leq(t.f, ivec_add(t.d, t.e), L);
  if (!gamma || ivec_zero(*gamma)) return std::nullopt;
  LatticeKind kind = parse_kind(L);
  switch (kind.family) {
    case LatticeKind::Model:
      return dispatch_model_like(L, false, a, b, t, *gamma, L);
    case LatticeKind::Comodel: {
      const WonderfulLattice& expn = model_of(kind.type, kind.rank);
      return dispatch_model_like(L, true, a, b, t, *gamma, expn);
    }
    case LatticeKind::OrbitBD: {
      // full-support triples carry the explicit contraction identity
      IVec sv = L.simple_root_vec(*gamma);
      for (Int x : sv)
        if (x == 0) return std::nullopt;
      int p = a + 1, q = b + 1;
      if (p > q) std::swap(p, q);
      if (p % 2 == 0 || q % 2 == 0 || p + q > kind.s + 2) return std::nullopt;
      DivisorVec expect(L.n_colors(), 0);
      if (p + q > 2) expect[p + q - 2 - 1] = 1;
      if (t.f != expect) return std::nullopt;
      ProjectionResult pr = project_orbit_bd(kind.k, kind.s, p, q);
      if (!pr.matched) return std::nullopt;
      TripleVerdict v{t, LeafStatus::VerifiedByVector, pr.id};
      return v;
    }
    case LatticeKind::CaseV:
    case LatticeKind::CaseX: {
      // the paper's case analysis: six of the seven low fundamental triples
      // reduce by localization and parabolic induction
      auto D = [&](int i) { return L.color(i - 1); };
      auto is = [&](int x, int y, const DivisorVec& f) {
        return ((t.d == D(x) && t.e == D(y)) || (t.d == D(y) && t.e == D(x))) && t.f == f;
      };
      const char* reduction = nullptr;
      if (is(1, 1, D(3)) || is(3, 3, ivec_add(D(1), ivec_scale(2, D(4)))) ||
          is(1, 3, ivec_scale(2, D(4))))
        reduction = "reduces to a symmetric wonderful variety by localization";
      else if (is(2, 4, D(3)))
        reduction = "reduces to a model wonderful variety by localization";
      else if (is(2, 3, ivec_add(D(1), D(4))) || is(2, 2, D(1)))
        reduction = "reduces to the spin orbit family by localization";
      if (!reduction) return std::nullopt;  // (D1,D2,D4): oracle only
      TripleVerdict v{t, LeafStatus::VerifiedByQuotientRule, reduction};
      return v;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

TripleVerdict default_leaf_oracle(const Triple& t, const WonderfulLattice& L) {
  if (t.f == ivec_add(t.d, t.e)) return {t, LeafStatus::Trivial, "gamma = 0"};
  if (auto v = dispatch(t, L)) return *v;
  // tensor-multiplicity oracle over the acting group: a necessary condition
  try {
    Int m = tensor_multiplicity(L.omega_of(t.d), L.omega_of(t.e), L.omega_of(t.f), L.datum,
                                default_dim_cap());
    if (m == 0)
      return {t, LeafStatus::MultiplicityFail,
              "V(omega_F) does not occur in V(omega_D) (x) V(omega_E)"};
    return {t, LeafStatus::MultiplicityNecessaryPass,
            "tensor multiplicity " + std::to_string(m)};
  } catch (const CapExceeded& e) {
    return {t, LeafStatus::OutOfCap, e.what()};
  }
}

namespace {

struct Measure {
  Int ht_sigma;
  Int ht_de;
  bool operator<(const Measure& o) const {
    return std::tie(ht_sigma, ht_de) < std::tie(o.ht_sigma, o.ht_de);
  }
};

Measure measure_of(const DivisorVec& d, const DivisorVec& e, const SphericalVec& g) {
  return {ivec_sum(g), ivec_sum(d) + ivec_sum(e)};
}

CertNode reduce_rec(const DivisorVec& d, const DivisorVec& e, const DivisorVec& f,
                    const WonderfulLattice& L, Int n, const LeafOracle& oracle, int depth) {
  if (depth > 512)
    throw std::logic_error(L.id + ": reduction depth guard tripped (measure must decrease)");
  auto gamma = sigma_leq(f, ivec_add(d, e), L);
  if (!gamma) throw InvalidType("reduce_triple: F is not <=_Sigma D+E");
  Triple t{d, e, f};
  CertNode node{t, "", std::nullopt, {}};
  Measure here = measure_of(d, e, *gamma);

  if (ivec_zero(*gamma)) {
    node.step = "leaf";
    node.verdict = oracle(t, L);
    return node;
  }

  if (auto smaller = find_smaller_pair(t, *gamma, L)) {
    // the triple is not low: replace (D, E) by the first strictly smaller
    // dominating pair of the fixed enumeration order
    DivisorVec dp = ivec_sub(d, L.expand(smaller->first));
    DivisorVec ep = ivec_sub(e, L.expand(smaller->second));
    node.step = "shrink";
    CertNode child = reduce_rec(dp, ep, f, L, n, oracle, depth + 1);
    auto cg = sigma_leq(f, ivec_add(dp, ep), L);
    if (!(measure_of(dp, ep, *cg) < here))
      throw std::logic_error("reduce_triple: measure did not decrease on shrink");
    node.children.push_back(std::move(child));
    return node;
  }

  if (ivec_sum(d) + ivec_sum(e) <= n) {
    node.step = "leaf";
    node.verdict = oracle(t, L);
    return node;
  }

  // low triple of large height: split through a covered divisor
  node.step = "split";
  DivisorVec de = ivec_add(d, e);
  struct Choice {
    DivisorVec f1;
    int d0;
    DivisorVec f2;
  };
  std::optional<Choice> best;
  for (const SphericalVec& gc : L.covers()) {
    DivisorVec f1 = ivec_sub(de, L.expand(gc));
    if (!ivec_nonneg(f1)) continue;
    auto above = sigma_leq(f, f1, L);
    if (!above) continue;
    for (int d0 = 0; d0 < L.n_colors(); ++d0) {
      if (f1[d0] <= 0 || de[d0] <= 0) continue;
      // minimal F2 in NDelta with F - D0 <= F2 <= F1 - D0
      DivisorVec f1md = f1;
      f1md[d0] -= 1;
      std::vector<DivisorVec> candidates;
      int m = L.n_sroots();
      SphericalVec gg(m, 0);
      std::function<void(int)> rec = [&](int j) {
        if (j == m) {
          DivisorVec f2 = ivec_sub(f1md, L.expand(gg));
          if (ivec_nonneg(f2)) candidates.push_back(f2);
          return;
        }
        for (gg[j] = 0; gg[j] <= (*above)[j]; ++gg[j]) rec(j + 1);
        gg[j] = 0;
      };
      rec(0);
      for (const DivisorVec& f2 : candidates) {
        bool minimal = true;
        for (const DivisorVec& other : candidates)
          if (other != f2 && sigma_leq(other, f2, L)) {
            minimal = false;
            break;
          }
        if (!minimal) continue;
        if (!best || std::tie(f1, d0, f2) <
                         std::tie(best->f1, best->d0, best->f2))
          best = Choice{f1, d0, f2};
      }
    }
  }
  if (!best)
    throw std::logic_error(L.id + ": no covered divisor shares support with D+E");
  DivisorVec d0v = L.color(best->d0);
  DivisorVec d1 = d, e1 = e;
  if (d[best->d0] > 0)
    d1[best->d0] -= 1;
  else
    e1[best->d0] -= 1;
  // subgoal 1: (D0, F2, F) is a low triple by the lemma's argument
  CertNode c1 = reduce_rec(d0v, best->f2, f, L, n, oracle, depth + 1);
  // subgoal 2: (D1, E1, F2)
  CertNode c2 = reduce_rec(d1, e1, best->f2, L, n, oracle, depth + 1);
  auto g1 = sigma_leq(f, ivec_add(d0v, best->f2), L);
  auto g2 = sigma_leq(best->f2, ivec_add(d1, e1), L);
  if (!(measure_of(d0v, best->f2, *g1) < here) || !(measure_of(d1, e1, *g2) < here))
    throw std::logic_error("reduce_triple: measure did not decrease on split");
  node.children.push_back(std::move(c1));
  node.children.push_back(std::move(c2));
  return node;
}

}  // namespace

CertNode reduce_triple(const DivisorVec& d, const DivisorVec& e, const DivisorVec& f,
                       const WonderfulLattice& L, Int n, const LeafOracle& oracle) {
  return reduce_rec(d, e, f, L, n, oracle, 0);
}

Certificate verify_multiplication(const DivisorVec& d, const DivisorVec& e,
                                  const WonderfulLattice& L, const LeafOracle& oracle) {
  Certificate cert;
  cert.d = d;
  cert.e = e;
  TwoHtReport rep = check_2ht(L);
  cert.lemma_constant = std::max<Int>(rep.max_pos_height, 2);
  cert.surjective = true;
  for (auto& [f, gamma] : sections_decomposition(ivec_add(d, e), L)) {
    CertNode tree = reduce_rec(d, e, f, L, cert.lemma_constant, oracle, 0);
    std::vector<const CertNode*> leaves;
    collect_leaves(tree, leaves);
    for (const CertNode* leaf : leaves) {
      switch (leaf->verdict->status) {
        case LeafStatus::Trivial:
        case LeafStatus::VerifiedByVector:
        case LeafStatus::VerifiedByQuotientRule:
          break;
        case LeafStatus::MultiplicityNecessaryPass:
        case LeafStatus::OutOfCap:
          cert.inconclusive = true;
          cert.surjective = false;
          break;
        case LeafStatus::MultiplicityFail:
          cert.refuted = true;
          cert.surjective = false;
          if (!cert.failing_leaf) cert.failing_leaf = leaf->triple;
          break;
      }
    }
    cert.trees.push_back(std::move(tree));
  }
  return cert;
}

bool closure_necessity_check(const DivisorVec& d, const DivisorVec& e, const DivisorVec& f,
                             const WonderfulLattice& L, const WonderfulLattice& L_closure) {
  if (L.colors != L_closure.colors)
    throw InvalidType("closure_necessity_check: mismatched color sets");
  return sigma_leq(d, ivec_add(e, f), L_closure).has_value();
}

bool degeneracy_flag(const WonderfulLattice& L) {
  for (const IVec& exp : L.expansion)
    if (ivec_sum(exp) == 1) return true;
  return false;
}

void collect_leaves(const CertNode& node, std::vector<const CertNode*>& out) {
  if (node.verdict) out.push_back(&node);
  for (const CertNode& c : node.children) collect_leaves(c, out);
}

}  // namespace wlat
