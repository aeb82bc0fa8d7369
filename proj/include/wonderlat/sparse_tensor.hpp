#pragma once

#include <map>
#include <string>
#include <vector>

#include "wonderlat/numeric.hpp"

// Exact sparse multilinear algebra on tensor products of exterior powers and
// spin modules. Basis monomials are per-factor strictly increasing index
// tuples; wedge antisymmetry is normalized on insertion. Spin factors are
// indexed by subsets of a seven-element frame and behave as exterior
// monomials in the dual frame vectors.

namespace wlat {

struct TensorSpace {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;
  QMat form;         // symmetric bilinear form (empty when undefined)
  int dual_space = -1;  // index of the dual space, pairing <x_i, y_j> = delta_ij
  std::vector<IVec> weight2;  // doubled torus weight per basis vector (optional)
};

struct Frame {
  std::vector<TensorSpace> spaces;
  int add_space(TensorSpace s) {
    spaces.push_back(std::move(s));
    return (int)spaces.size() - 1;
  }
  // spin decoration: the space whose vectors act on the spin module,
  // described by the isotropic frame e_1..e_7 / f_1..f_7
  int spin_carrier = -1;
  // per carrier-basis vector: side (+1 = e, -1 = f), frame index 1..7, scale
  struct SpinRole {
    int side = 0;
    int index = 0;
    mpq_class coeff = 0;
  };
  std::vector<SpinRole> spin_role;
  std::vector<IVec> spin_weight2;  // doubled weights of the 128 subsets? computed on demand
};

struct FactorSig {
  enum Kind { Ext, Spin } kind = Ext;
  int space = -1;  // for Ext
  int degree = 0;  // for Ext
  int parity = 0;  // for Spin: 1 = odd, 0 = even
  bool operator==(const FactorSig&) const = default;
};

using Mono = std::vector<IVec>;  // one index tuple per factor

struct SparseTensor {
  const Frame* frame = nullptr;
  std::vector<FactorSig> sig;
  std::map<Mono, mpq_class> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Mono& m, const mpq_class& c);
  SparseTensor& operator+=(const SparseTensor& o);
  SparseTensor& operator*=(const mpq_class& c);
  bool operator==(const SparseTensor& o) const {
    return sig == o.sig && terms == o.terms;
  }
};

SparseTensor tensor_product(const SparseTensor& a, const SparseTensor& b);

// sorts v ascending; returns the permutation sign, or 0 on a repeat
int sort_sign(IVec& v);

// single exterior factor from an index list
SparseTensor ext_monomial(const Frame& fr, int space, const IVec& idx,
                          const mpq_class& c = 1);
SparseTensor spin_monomial(const Frame& fr, int parity, const IVec& subset,
                           const mpq_class& c = 1);

// wedge product of two tensors that are single exterior factors over the
// same space
SparseTensor wedge(const SparseTensor& x, const SparseTensor& y);

// kappa^{ij}: contract factor a (Ext over S) against factor b (Ext over the
// dual of S); degrees drop by one on both sides
SparseTensor contract_dual(const SparseTensor& t, int a, int b);

// kappa~^{ij}: contract factors a and b (both Ext over the same space with a
// bilinear form); the surviving indices merge into a single factor at a
SparseTensor contract_bilinear(const SparseTensor& t, int a, int b);

// merge two exterior factors over the same space into one (wedge in place)
SparseTensor merge_factors(const SparseTensor& t, int a, int b);

// drop a factor that must be of degree 0 everywhere
SparseTensor drop_empty_factor(const SparseTensor& t, int a);

// spin action sigma(w (x) psi) of a carrier vector on a spin subset;
// appends results into out as (subset, coeff) pairs
void sigma_vector(const Frame& fr, int carrier_basis, const IVec& subset,
                  std::vector<std::pair<IVec, mpq_class>>& out);

// sigma^n on an antisymmetrized carrier wedge monomial (coefficient 1/n!)
void sigma_wedge(const Frame& fr, const IVec& carrier_mono, const IVec& subset,
                 const mpq_class& c, std::map<IVec, mpq_class>& out);

// natural pairing of opposite-parity spin vectors: (phi_A ^ phi_B) / phi_{1..7}
mpq_class spin_pairing(const IVec& a, const IVec& b);

// a Lie algebra element given by one matrix per space (empty = acts as zero);
// on spin factors it acts through sigma^2 of its image in Lambda^2 of the
// carrier (requires the carrier form)
struct Generator {
  std::string name;
  std::vector<QMat> action;  // indexed by space
};

SparseTensor apply_generator(const Generator& g, const SparseTensor& t);

// doubled torus weight of a monomial (all factor weights summed)
IVec mono_weight2(const Frame& fr, const std::vector<FactorSig>& sig, const Mono& m);

// minus transpose, the action on the dual basis
QMat minus_transpose(const QMat& m);

std::string to_string(const SparseTensor& t);

}  // namespace wlat
