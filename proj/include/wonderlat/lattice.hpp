#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wonderlat/root_system.hpp"

// Colors, spherical roots and the partial order <=_Sigma on NDelta, together
// with the catalog of every lattice used by the rest of the project.
//
// A divisor is an integer vector in color coordinates, a spherical vector an
// integer vector in spherical-root coordinates. The pairing matrix embeds
// ZSigma into ZDelta; it always has full column rank, so <=_Sigma tests are
// exact linear solves.

namespace wlat {

using DivisorVec = IVec;    // indexed by colors
using SphericalVec = IVec;  // indexed by spherical roots

struct Triple {
  DivisorVec d, e, f;
  bool operator==(const Triple&) const = default;
  bool operator<(const Triple& o) const {
    return std::tie(d, e, f) < std::tie(o.d, o.e, o.f);
  }
};

class WonderfulLattice {
 public:
  std::string id;
  RootDatum datum;                    // acting group
  std::vector<std::string> colors;    // labels, e.g. "D1"
  std::vector<std::string> sroots;    // labels, e.g. "s1"
  std::vector<IVec> pairing;          // colors x sroots, c(D_i, sigma_j)
  std::vector<Weight> omega;          // omega(D_i), fundamental coords
  std::vector<IVec> expansion;        // sigma_j in simple-root coords
  bool strict = false;
  std::vector<int> recorded_faithful; // color indices of divisors known faithful
                                      // when the combinatorial test does not apply

  int n_colors() const { return (int)colors.size(); }
  int n_sroots() const { return (int)sroots.size(); }

  DivisorVec zero_divisor() const { return DivisorVec(n_colors(), 0); }
  DivisorVec color(int i) const {
    DivisorVec d = zero_divisor();
    d[i] = 1;
    return d;
  }
  int color_index(const std::string& label) const;

  // ZSigma -> ZDelta through the pairing
  DivisorVec expand(const SphericalVec& g) const;
  // omega extended linearly to ZDelta
  Weight omega_of(const DivisorVec& d) const;
  // simple-root coordinates of an element of NSigma
  IVec simple_root_vec(const SphericalVec& g) const;

  // checks every structural invariant; throws on failure
  void validate() const;

  // cached covering differences (no support filter), sorted
  const std::vector<SphericalVec>& covers() const;
  // cached list of all distinguished subsets of the color set
  const std::vector<std::vector<int>>& distinguished_subsets() const;

 private:
  mutable std::optional<std::vector<SphericalVec>> covers_;
  mutable std::optional<std::vector<std::vector<int>>> distinguished_;
};

// --- order operations ---------------------------------------------------

// gamma with F - E = expand(gamma), if it exists in NSigma.
std::optional<SphericalVec> sigma_leq(const DivisorVec& e, const DivisorVec& f,
                                      const WonderfulLattice& L);

// All covering differences with ht_Sigma <= ht_bound (default
// WONDERLAT_HT_BOUND). With support_filter, only those whose simple-root
// support is the whole basis of the acting group.
std::vector<SphericalVec> covering_differences(const WonderfulLattice& L,
                                               bool support_filter = false,
                                               Int ht_bound = -1);

struct TwoHtReport {
  std::vector<SphericalVec> violations;  // covering differences with ht(gamma+) > 2
  Int max_pos_height = 0;
  bool holds() const { return violations.empty(); }
};
TwoHtReport check_2ht(const WonderfulLattice& L);

Int pos_height(const DivisorVec& d);  // sum of positive coefficients

// All E <=_Sigma F (computed by closure under subtracting covering
// differences), each with its witness gamma; sorted by ht_Sigma(gamma) then
// lexicographically.
std::vector<std::pair<DivisorVec, SphericalVec>> sections_decomposition(
    const DivisorVec& f, const WonderfulLattice& L);

bool is_minuscule(const DivisorVec& d, const WonderfulLattice& L);

bool is_low_triple(const Triple& t, const WonderfulLattice& L);

// first (gamma1, gamma2) != (0,0) with gamma1+gamma2 <= gamma componentwise,
// D-expand(gamma1) and E-expand(gamma2) effective, in a fixed DFS order
std::optional<std::pair<SphericalVec, SphericalVec>> find_smaller_pair(
    const Triple& t, const SphericalVec& gamma, const WonderfulLattice& L);

// All low (D,E,F) with D,E single colors, F <=_Sigma D+E. With full_support,
// keeps only those whose difference has full simple-root support.
std::vector<Triple> low_fundamental_triples(const WonderfulLattice& L,
                                            bool full_support = true);

bool is_distinguished(const std::vector<int>& subset, const WonderfulLattice& L);

bool is_faithful(const DivisorVec& d, const WonderfulLattice& L);

bool supports_disjoint(const DivisorVec& d, const DivisorVec& e,
                       const WonderfulLattice& L);

// Quotient by a distinguished subset: colors Delta minus subset, spherical
// roots the free basis of {gamma in NSigma : c(D, gamma) = 0 on the subset}.
WonderfulLattice quotient_lattice(const WonderfulLattice& L,
                                  const std::vector<int>& subset);

// Localization: keep only the named spherical roots.
WonderfulLattice localization(const WonderfulLattice& L,
                              const std::vector<int>& keep_sroots);

// --- catalog --------------------------------------------------------------

// Known ids:
//   model:<T><r>          model wonderful variety of simply connected type
//   so-odd:<r>            model wonderful variety of SO(2r+1)
//   comodel:<T><r>        comodel variety of the given cotype (A,D,E6,E7,E8)
//   orbit-bd:<k>:<s>      the Spin(k) family of section 7 (2 <= s <= (k-3)/2)
//   case-v, case-x        the two orbit lattices with exceptional acting group
//   sl2-torus             P1 x P1 for SL(2)
//   sp8-sym               rank-two symmetric Sp(8) variety, and
//   sp8-sym-closure       its spherical closure
//   e8-induced            the nine-color Spin(16) lattice over the comodel of
//                         cotype E8
WonderfulLattice catalog(const std::string& id);

// the eight identities D_i = n_i D_8 - gamma_i from the model of E8
// (gamma in the section-3 ordering of the spherical roots)
struct E8Expansion {
  int color;  // 1..8
  Int degree;
  SphericalVec gamma;
};
std::vector<E8Expansion> e8_expansions();

std::vector<std::string> catalog_fixed_ids();  // non-parametric entries

// --- subdiagram classification (used by the reduction engine) -------------

struct SubDiagram {
  RootFamily family;
  int rank;
  // nodes[i] = ambient simple-root index of the i-th Bourbaki node (0-based)
  std::vector<int> nodes;
};

// Classify the sub-Dynkin diagram induced on a connected set of nodes.
SubDiagram classify_subdiagram(const RootDatum& datum, const std::vector<int>& nodes);

// Connected components of a node set in the Dynkin diagram.
std::vector<std::vector<int>> diagram_components(const RootDatum& datum,
                                                 const std::vector<int>& nodes);

}  // namespace wlat
