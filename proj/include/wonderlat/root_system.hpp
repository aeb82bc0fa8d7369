#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wonderlat/numeric.hpp"

// Exact root-system arithmetic: Cartan matrices, positive roots generated by
// closure, Weyl dimension formula, Freudenthal weight multiplicities and the
// Brauer/Klimyk tensor product rule. All weights are integer vectors in
// fundamental-weight coordinates; root coordinates are exact rationals.
//
// Simple roots are numbered as in Bourbaki; in type E the branch node is 2
// (so alpha_1 and alpha_3 are adjacent). Products of simple types are
// supported, with coordinates concatenated component by component.

namespace wlat {

enum class RootFamily : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleComponent {
  RootFamily family;
  int rank;
};

struct InvalidType : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weight in fundamental-weight coordinates of a fixed RootDatum.
using Weight = IVec;

class RootDatum {
 public:
  static RootDatum simple(RootFamily family, int rank);
  static RootDatum product(const std::vector<SimpleComponent>& comps);

  int rank() const { return rank_; }
  const std::vector<SimpleComponent>& components() const { return comps_; }
  const std::string& name() const { return name_; }

  // cartan(i, j) = <alpha_j, alpha_i^vee>; column j is alpha_j in
  // fundamental-weight coordinates.
  Int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<IVec>& cartan_matrix() const { return cartan_; }

  // alpha-coordinates of a weight given in fundamental-weight coordinates.
  QVec root_coords(const Weight& w) const;
  // fundamental-weight coordinates of an element of the root lattice given
  // in alpha-coordinates.
  Weight weight_of_root_vec(const IVec& alpha_coords) const;

  const std::vector<IVec>& positive_roots() const { return positive_roots_; }
  IVec highest_root() const;  // alpha-coords (requires an irreducible datum)

  // invariant symmetric form, normalized with d_i = (alpha_i,alpha_i)/2
  // and short roots of squared length 2 in each component.
  mpq_class form(const Weight& a, const Weight& b) const;
  const QVec& symmetrizer() const { return d_; }

  Weight rho() const { return Weight(rank_, 1); }
  bool is_dominant(const Weight& w) const { return ivec_nonneg(w); }

  Weight reflect(const Weight& w, int i) const;  // simple reflection s_i

 private:
  std::vector<SimpleComponent> comps_;
  int rank_ = 0;
  std::string name_;
  std::vector<IVec> cartan_;
  QMat inv_cartan_;
  QVec d_;
  std::vector<IVec> positive_roots_;

  void init();
};

RootDatum build_root_system(RootFamily family, int rank);

// mu - lam is a nonnegative integer combination of simple roots.
bool dominance_leq(const Weight& lam, const Weight& mu, const RootDatum& datum);

// Sum over simple roots of the alpha-coordinates (defined for root-lattice
// elements; exact rational for arbitrary weights).
mpq_class root_height(const Weight& w, const RootDatum& datum);

mpz_class weyl_dim(const Weight& lam, const RootDatum& datum);

// Freudenthal: multiplicities of the dominant weights of V(lam).
// Throws CapExceeded if weyl_dim(lam) > dim_cap.
std::map<Weight, Int> weight_multiplicities(const Weight& lam, const RootDatum& datum,
                                            const mpz_class& dim_cap);

// Full Weyl orbit of a (not necessarily dominant) weight.
std::vector<Weight> weyl_orbit(const Weight& w, const RootDatum& datum);

// All weights of V(lam) with multiplicities (orbit expansion of the above).
std::vector<std::pair<Weight, Int>> weight_system(const Weight& lam, const RootDatum& datum,
                                                  const mpz_class& dim_cap);

// Multiplicity of V(nu) in V(lam) (x) V(mu), by the Klimyk rule run over the
// smaller factor's weight system. Throws CapExceeded when
// min(dim lam, dim mu) > dim_cap.
Int tensor_multiplicity(const Weight& lam, const Weight& mu, const Weight& nu,
                        const RootDatum& datum, const mpz_class& dim_cap);

// Complete decomposition V(lam) (x) V(mu) = sum of V(nu) with multiplicity.
std::map<Weight, Int> tensor_decomposition(const Weight& lam, const Weight& mu,
                                           const RootDatum& datum, const mpz_class& dim_cap);

// All dominant mu <= lam in the dominance order, by increasing height of
// lam - mu (ties broken lexicographically).
std::vector<Weight> dominant_below(const Weight& lam, const RootDatum& datum);

// Covering differences of the dominance order on dominant weights: all
// gamma in NS \ {0} with ht_S(gamma) <= ht_cap such that gamma+ covers
// gamma-. Returned in alpha-coordinates, sorted. The default cap is
// ht_S(theta)+4 per component, summed; rank_bound guards the enumeration.
std::vector<IVec> weight_covering_differences(const RootDatum& datum, Int ht_cap = -1,
                                              int rank_bound = 7);

// Configuration knobs (environment defaults, see README).
mpz_class default_dim_cap();   // WONDERLAT_DIM_CAP, default 10^6
Int default_ht_bound();        // WONDERLAT_HT_BOUND, default 24

std::string family_name(RootFamily f);
RootFamily family_from_char(char c);

}  // namespace wlat
