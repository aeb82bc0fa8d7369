#include "wonderlat/sparse_tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wlat {

int sort_sign(IVec& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

void SparseTensor::add_term(const Mono& m, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

SparseTensor& SparseTensor::operator+=(const SparseTensor& o) {
  if (sig != o.sig && !o.terms.empty() && !terms.empty())
    throw std::logic_error("tensor sum: incompatible factor signatures");
  if (terms.empty()) sig = o.sig;
  for (auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

SparseTensor& SparseTensor::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

SparseTensor tensor_product(const SparseTensor& a, const SparseTensor& b) {
  SparseTensor out;
  out.frame = a.frame ? a.frame : b.frame;
  out.sig = a.sig;
  out.sig.insert(out.sig.end(), b.sig.begin(), b.sig.end());
  for (auto& [ma, ca] : a.terms)
    for (auto& [mb, cb] : b.terms) {
      Mono m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  return out;
}

SparseTensor ext_monomial(const Frame& fr, int space, const IVec& idx, const mpq_class& c) {
  SparseTensor t;
  t.frame = &fr;
  t.sig = {FactorSig{FactorSig::Ext, space, (int)idx.size(), 0}};
  IVec v = idx;
  int s = sort_sign(v);
  if (s != 0) t.add_term({v}, c * s);
  return t;
}

SparseTensor spin_monomial(const Frame& fr, int parity, const IVec& subset, const mpq_class& c) {
  SparseTensor t;
  t.frame = &fr;
  t.sig = {FactorSig{FactorSig::Spin, -1, 0, parity}};
  if ((int)subset.size() % 2 != parity)
    throw std::logic_error("spin_monomial: parity mismatch");
  IVec v = subset;
  int s = sort_sign(v);
  if (s != 0) t.add_term({v}, c * s);
  return t;
}

SparseTensor wedge(const SparseTensor& x, const SparseTensor& y) {
  if (x.sig.size() != 1 || y.sig.size() != 1 || x.sig[0].kind != FactorSig::Ext ||
      y.sig[0].kind != FactorSig::Ext || x.sig[0].space != y.sig[0].space)
    throw std::logic_error("wedge: need single exterior factors over one space");
  SparseTensor out;
  out.frame = x.frame;
  out.sig = {FactorSig{FactorSig::Ext, x.sig[0].space, x.sig[0].degree + y.sig[0].degree, 0}};
  for (auto& [mx, cx] : x.terms)
    for (auto& [my, cy] : y.terms) {
      IVec v = mx[0];
      v.insert(v.end(), my[0].begin(), my[0].end());
      int s = sort_sign(v);
      if (s != 0) out.add_term({v}, cx * cy * s);
    }
  return out;
}

SparseTensor contract_dual(const SparseTensor& t, int a, int b) {
  const Frame& fr = *t.frame;
  const FactorSig& fa = t.sig[a];
  const FactorSig& fb = t.sig[b];
  if (fa.kind != FactorSig::Ext || fb.kind != FactorSig::Ext ||
      fr.spaces[fa.space].dual_space != fb.space)
    throw std::logic_error("contract_dual: factors are not dual exterior powers");
  if (fa.degree < 1 || fb.degree < 1)
    throw std::logic_error("contract_dual: degree underflow");
  SparseTensor out;
  out.frame = t.frame;
  out.sig = t.sig;
  out.sig[a].degree -= 1;
  out.sig[b].degree -= 1;
  for (auto& [m, c] : t.terms) {
    const IVec& u = m[a];
    const IVec& ph = m[b];
    for (std::size_t k = 0; k < u.size(); ++k)
      for (std::size_t l = 0; l < ph.size(); ++l) {
        if (u[k] != ph[l]) continue;  // dual pairing is the identity matrix
        Mono nm = m;
        nm[a].erase(nm[a].begin() + k);
        nm[b].erase(nm[b].begin() + l);
        int sign = ((k + l) % 2 == 0) ? 1 : -1;  // (-1)^{(k+1)+(l+1)}
        out.add_term(nm, c * sign);
      }
  }
  return out;
}

SparseTensor contract_bilinear(const SparseTensor& t, int a, int b) {
  const Frame& fr = *t.frame;
  const FactorSig& fa = t.sig[a];
  const FactorSig& fb = t.sig[b];
  if (fa.kind != FactorSig::Ext || fb.kind != FactorSig::Ext || fa.space != fb.space)
    throw std::logic_error("contract_bilinear: factors live on different spaces");
  const QMat& B = fr.spaces[fa.space].form;
  if (B.empty()) throw std::logic_error("contract_bilinear: no bilinear form");
  if (fa.degree < 1 || fb.degree < 1)
    throw std::logic_error("contract_bilinear: degree underflow");
  SparseTensor out;
  out.frame = t.frame;
  out.sig = t.sig;
  out.sig[a].degree = fa.degree + fb.degree - 2;
  out.sig.erase(out.sig.begin() + b);
  for (auto& [m, c] : t.terms) {
    const IVec& u = m[a];
    const IVec& v = m[b];
    for (std::size_t k = 0; k < u.size(); ++k)
      for (std::size_t l = 0; l < v.size(); ++l) {
        if (B[u[k]][v[l]] == 0) continue;
        IVec rest = u;
        rest.erase(rest.begin() + k);
        IVec vr = v;
        vr.erase(vr.begin() + l);
        rest.insert(rest.end(), vr.begin(), vr.end());
        int s = sort_sign(rest);
        if (s == 0) continue;
        int sign = ((k + l) % 2 == 0) ? 1 : -1;
        Mono nm = m;
        nm[a] = rest;
        nm.erase(nm.begin() + b);
        out.add_term(nm, c * B[u[k]][v[l]] * sign * s);
      }
  }
  return out;
}

SparseTensor merge_factors(const SparseTensor& t, int a, int b) {
  const FactorSig& fa = t.sig[a];
  const FactorSig& fb = t.sig[b];
  if (fa.kind != FactorSig::Ext || fb.kind != FactorSig::Ext || fa.space != fb.space)
    throw std::logic_error("merge_factors: factors live on different spaces");
  SparseTensor out;
  out.frame = t.frame;
  out.sig = t.sig;
  out.sig[a].degree = fa.degree + fb.degree;
  out.sig.erase(out.sig.begin() + b);
  for (auto& [m, c] : t.terms) {
    IVec v = m[a];
    v.insert(v.end(), m[b].begin(), m[b].end());
    int s = sort_sign(v);
    if (s == 0) continue;
    Mono nm = m;
    nm[a] = v;
    nm.erase(nm.begin() + b);
    out.add_term(nm, c * s);
  }
  return out;
}

SparseTensor drop_empty_factor(const SparseTensor& t, int a) {
  SparseTensor out;
  out.frame = t.frame;
  out.sig = t.sig;
  out.sig.erase(out.sig.begin() + a);
  for (auto& [m, c] : t.terms) {
    if (!m[a].empty()) throw std::logic_error("drop_empty_factor: factor not empty");
    Mono nm = m;
    nm.erase(nm.begin() + a);
    out.add_term(nm, c);
  }
  return out;
}

void sigma_vector(const Frame& fr, int carrier_basis, const IVec& subset,
                  std::vector<std::pair<IVec, mpq_class>>& out) {
  const Frame::SpinRole& role = fr.spin_role[carrier_basis];
  if (role.side == 0) throw std::logic_error("sigma_vector: basis vector has no spin role");
  if (role.side > 0) {
    // e_i: contraction kappa^{k,1}(phi_subset (x) e_i)
    for (std::size_t l = 0; l < subset.size(); ++l) {
      if (subset[l] != role.index) continue;
      IVec rest = subset;
      rest.erase(rest.begin() + l);
      int sign = (l % 2 == 0) ? 1 : -1;  // (-1)^{(l+1)+1}
      out.push_back({rest, role.coeff * sign});
    }
  } else {
    // f_i: wedge phi_i ^ phi_subset
    IVec v = subset;
    v.insert(v.begin(), role.index);
    int s = sort_sign(v);
    if (s != 0) out.push_back({v, role.coeff * s});
  }
}

void sigma_wedge(const Frame& fr, const IVec& carrier_mono, const IVec& subset,
                 const mpq_class& c, std::map<IVec, mpq_class>& out) {
  if (carrier_mono.empty()) {
    out[subset] += c;
    if (out[subset] == 0) out.erase(subset);
    return;
  }
  std::size_t k = carrier_mono.size();
  for (std::size_t i = 0; i < k; ++i) {
    IVec rest = carrier_mono;
    rest.erase(rest.begin() + i);
    int sign = (i % 2 == 0) ? 1 : -1;
    std::map<IVec, mpq_class> inner;
    sigma_wedge(fr, rest, subset, c, inner);
    for (auto& [sub, cc] : inner) {
      std::vector<std::pair<IVec, mpq_class>> acted;
      sigma_vector(fr, carrier_mono[i], sub, acted);
      for (auto& [s2, c2] : acted) {
        mpq_class v = cc * c2 * sign / (long)k;
        out[s2] += v;
        if (out[s2] == 0) out.erase(s2);
      }
    }
  }
}

mpq_class spin_pairing(const IVec& a, const IVec& b) {
  IVec v = a;
  v.insert(v.end(), b.begin(), b.end());
  if (v.size() != 7) return 0;
  int s = sort_sign(v);
  if (s == 0) return 0;
  for (int i = 0; i < 7; ++i)
    if (v[i] != i + 1) return 0;
  // the first argument enters with its factors reversed: the pairing on the
  // spin module is <phi_{a_k} ^ ... ^ phi_{a_1}, phi_B> / phi_{1..7}
  if ((a.size() / 2) % 2 == 1) s = -s;
  return s;
}

namespace {

// image of an so-matrix in Lambda^2 of the carrier: (1/2) sum_a (m u_a) ^ u^a
// with u^a the form-dual basis
std::vector<std::pair<std::pair<int, int>, mpq_class>> so_matrix_to_wedge(
    const Frame& fr, int space, const QMat& m) {
  const TensorSpace& S = fr.spaces[space];
  QMat formInv = qinverse(S.form);
  std::map<std::pair<int, int>, mpq_class> acc;
  for (int a = 0; a < S.dim; ++a)
    for (int i = 0; i < S.dim; ++i) {
      if (m[i][a] == 0) continue;
      for (int b = 0; b < S.dim; ++b) {
        if (formInv[b][a] == 0 || i == b) continue;
        mpq_class c = m[i][a] * formInv[b][a] / 2;
        if (i < b)
          acc[{i, b}] += c;
        else
          acc[{b, i}] -= c;
      }
    }
  std::vector<std::pair<std::pair<int, int>, mpq_class>> out;
  for (auto& [k, c] : acc)
    if (c != 0) out.push_back({k, c});
  return out;
}

}  // namespace

SparseTensor apply_generator(const Generator& g, const SparseTensor& t) {
  const Frame& fr = *t.frame;
  SparseTensor out;
  out.frame = t.frame;
  out.sig = t.sig;
  std::vector<std::pair<std::pair<int, int>, mpq_class>> spin_wedge;
  bool spin_ready = false;
  for (auto& [m, c] : t.terms) {
    for (std::size_t fpos = 0; fpos < t.sig.size(); ++fpos) {
      const FactorSig& fs = t.sig[fpos];
      if (fs.kind == FactorSig::Ext) {
        const QMat& M = g.action[fs.space];
        if (M.empty()) continue;
        const IVec& idx = m[fpos];
        for (std::size_t slot = 0; slot < idx.size(); ++slot) {
          for (int target = 0; target < fr.spaces[fs.space].dim; ++target) {
            if (M[target][idx[slot]] == 0) continue;
            IVec v = idx;
            v[slot] = target;
            int s = sort_sign(v);
            if (s == 0) continue;
            Mono nm = m;
            nm[fpos] = v;
            out.add_term(nm, c * M[target][idx[slot]] * s);
          }
        }
      } else {
        if (fr.spin_carrier < 0) throw std::logic_error("apply_generator: no spin carrier");
        const QMat& M = g.action[fr.spin_carrier];
        if (M.empty()) continue;
        if (!spin_ready) {
          spin_wedge = so_matrix_to_wedge(fr, fr.spin_carrier, M);
          spin_ready = true;
        }
        for (auto& [pr, cw] : spin_wedge) {
          IVec carrier{pr.first, pr.second};
          std::map<IVec, mpq_class> acted;
          // sigma_wedge carries the 1/2! normalization of sigma^2, which is
          // exactly the spin action of the wedge
          sigma_wedge(fr, carrier, m[fpos], cw, acted);
          for (auto& [sub, cc] : acted) {
            Mono nm = m;
            nm[fpos] = sub;
            out.add_term(nm, c * cc);
          }
        }
      }
    }
  }
  return out;
}

IVec mono_weight2(const Frame& fr, const std::vector<FactorSig>& sig, const Mono& m) {
  IVec w;
  auto addw = [&](const IVec& x) {
    if (w.empty()) w.assign(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) w[i] += x[i];
  };
  for (std::size_t f = 0; f < sig.size(); ++f) {
    if (sig[f].kind == FactorSig::Ext) {
      for (Int b : m[f]) addw(fr.spaces[sig[f].space].weight2[b]);
    } else {
      IVec x(7, 1);
      for (Int i : m[f]) x[i - 1] = -1;
      addw(x);
    }
  }
  return w;
}

QMat minus_transpose(const QMat& m) {
  QMat out = qmat(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = -m[j][i];
  return out;
}

std::string to_string(const SparseTensor& t) {
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t.terms) {
    if (!first) os << " + ";
    first = false;
    os << c << "*";
    for (std::size_t f = 0; f < m.size(); ++f) {
      if (f) os << "(x)";
      os << "[";
      for (std::size_t i = 0; i < m[f].size(); ++i) {
        if (i) os << ",";
        if (t.sig[f].kind == FactorSig::Ext && t.frame)
          os << t.frame->spaces[t.sig[f].space].labels[m[f][i]];
        else
          os << m[f][i];
      }
      os << "]";
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace wlat
