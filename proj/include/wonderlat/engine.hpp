#pragma once

#include "wonderlat/lattice.hpp"

// Executable form of the reduction lemma: multiplication-surjectivity
// questions reduce along a measure that strictly decreases, ending in low
// triples of bounded height whose verdicts come from the invariant-vector
// engine, recorded quotient rules, or the tensor-multiplicity oracle.

namespace wlat {

enum class LeafStatus {
  Trivial,                    // gamma = 0
  VerifiedByVector,           // explicit invariant-vector projection is nonzero
  VerifiedByQuotientRule,     // reduction to a variety with known surjectivity
  MultiplicityNecessaryPass,  // necessary condition holds; not sufficient
  MultiplicityFail,           // V(omega_F) does not occur: inclusion impossible
  OutOfCap,                   // oracle refused at the configured cap
};

std::string to_string(LeafStatus s);

struct TripleVerdict {
  Triple triple;
  LeafStatus status = LeafStatus::Trivial;
  std::string witness;
};

struct CertNode {
  Triple triple;
  // "leaf", "shrink" (non-low triple replaced by a smaller dominating pair)
  // or "split" (low triple of large height split through a covered divisor)
  std::string step;
  std::optional<TripleVerdict> verdict;
  std::vector<CertNode> children;
};

struct Certificate {
  DivisorVec d, e;
  Int lemma_constant = 0;  // n with ht(gamma+) <= n for all covering differences
  std::vector<CertNode> trees;  // one per section F <_Sigma D+E
  bool surjective = false;      // every leaf conclusively positive
  bool refuted = false;         // some leaf carries a multiplicity refutation
  bool inconclusive = false;    // some leaf is open (cap or necessary-only)
  std::optional<Triple> failing_leaf;
};

// Oracle interface: produces the verdict of one low triple.
using LeafOracle = std::function<TripleVerdict(const Triple&, const WonderfulLattice&)>;

// the built-in oracle described above
TripleVerdict default_leaf_oracle(const Triple& t, const WonderfulLattice& L);

// Derivation tree for one triple F <=_Sigma D+E; measure decrease is
// asserted on every edge (violations throw, they would indicate a bug).
CertNode reduce_triple(const DivisorVec& d, const DivisorVec& e, const DivisorVec& f,
                       const WonderfulLattice& L, Int n, const LeafOracle& oracle);

Certificate verify_multiplication(const DivisorVec& d, const DivisorVec& e,
                                  const WonderfulLattice& L,
                                  const LeafOracle& oracle = default_leaf_oracle);

// true iff E + F - D lies in the nonnegative span of the closure lattice's
// spherical roots; false refutes the inclusion V_D in V_E V_F
bool closure_necessity_check(const DivisorVec& d, const DivisorVec& e, const DivisorVec& f,
                             const WonderfulLattice& L, const WonderfulLattice& L_closure);

// some spherical root is a single simple root
bool degeneracy_flag(const WonderfulLattice& L);

// walk a certificate and collect every leaf verdict
void collect_leaves(const CertNode& node, std::vector<const CertNode*>& out);

}  // namespace wlat
