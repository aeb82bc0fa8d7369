#pragma once

#include "wonderlat/lattice.hpp"

// The eleven spherical nilpotent orbit cases of height three, their
// normality verdicts, and the graded coordinate-ring decompositions of the
// model orbit of E8 and its Spin(16) analogue.

namespace wlat {

struct OrbitCase {
  std::string case_id;  // "I" .. "XI", with parameters appended when present
  RootFamily family;
  int rank;
  IVec diagram;  // Kostant-Dynkin string, entries 0/1/2
  WonderfulLattice lattice;
  DivisorVec theta;  // the highest root as an effective divisor
};

// height(O) = theta(h) and the sphericality flag height <= 3
struct HeightReport {
  Int height = 0;
  bool spherical = false;
};
HeightReport orbit_height(const IVec& diagram, const RootDatum& datum);

// the eleven cases; parametric families are instantiated at two parameter
// values each (smallest and next)
std::vector<OrbitCase> orbit_cases();

enum class Normality { Normal, NonNormal, Inconclusive };
struct NormalityVerdict {
  std::string case_id;
  DivisorVec theta;
  bool minuscule = false;
  bool faithful = false;
  Normality verdict = Normality::Inconclusive;
  std::string surjectivity_source;
};

// normal iff theta is minuscule and faithful, non-normal iff faithful and
// not minuscule; surjectivity of the lattice's multiplication enters as a
// recorded assumption unless a certificate is supplied by the caller
NormalityVerdict normality_verdict(const OrbitCase& c, bool surjectivity_certified = false);

// checks the eight identities D_i = n_i D_8 - gamma_i in ZDelta on the model
// of E8; throws on any mismatch and returns the degree table (2,4,5,7,6,4,3,1)
std::vector<Int> verify_expansions();

struct GradedPiece {
  DivisorVec f;
  SphericalVec gamma;
  Weight weight;  // omega(F)
};
struct GradedDecomposition {
  std::vector<std::vector<GradedPiece>> degrees;  // index n = 0..n_max
  bool multiplicity_free = true;
  bool positivity_ok = true;  // the (n, gamma) solve never leaves the positive cone
};

// all (F, gamma) with F + gamma = shift + nE for n = 0..n_max; E must be
// faithful in L
GradedDecomposition coordinate_ring_degrees(const WonderfulLattice& L, const DivisorVec& e,
                                            const DivisorVec& shift, Int n_max);

std::vector<mpz_class> graded_dimension(const GradedDecomposition& d, const RootDatum& datum);

// Exhaustive comparison of is_minuscule against the direct bounded search of
// the height-certified enumeration, over all divisors of height <= ht_cap,
// plus the comparison against the printed parametric catalog; returns the
// divisors where the printed catalog disagrees with the computation (known
// errata; empty disagreement with the computation itself is asserted).
struct MinusculeCheck {
  Int checked = 0;
  std::vector<DivisorVec> printed_list_disagreements;
};
MinusculeCheck minuscule_catalog_check(RootFamily family, int rank, Int param_bound = 3,
                                       Int ht_cap = 6);

// independent oracle for is_minuscule: enumerate gamma by increasing height
bool minuscule_by_direct_search(const DivisorVec& d, const WonderfulLattice& L, Int ht_cap);

}  // namespace wlat
