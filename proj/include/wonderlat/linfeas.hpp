#pragma once

#include "wonderlat/numeric.hpp"

// Exact rational linear feasibility by Fourier-Motzkin elimination.
// Constraints are rows (a, c) meaning a.x + c >= 0. Dimensions in this
// project never exceed nine variables, so no redundancy control is needed
// beyond dropping duplicates.

namespace wlat {

struct LinearSystem {
  int n_vars = 0;
  std::vector<std::pair<QVec, mpq_class>> rows;

  void add(const QVec& a, const mpq_class& c) { rows.push_back({a, c}); }
};

inline bool fm_feasible(LinearSystem sys) {
  for (int v = sys.n_vars - 1; v >= 0; --v) {
    std::vector<std::pair<QVec, mpq_class>> pos, neg, zero;
    for (auto& r : sys.rows) {
      if (r.first[v] > 0)
        pos.push_back(r);
      else if (r.first[v] < 0)
        neg.push_back(r);
      else
        zero.push_back(r);
    }
    std::vector<std::pair<QVec, mpq_class>> next = zero;
    for (auto& p : pos)
      for (auto& n : neg) {
        // p: a.x + c >= 0 with a_v > 0  ->  x_v >= -(rest)/a_v
        // n: b.x + d >= 0 with b_v < 0  ->  x_v <= (rest)/(-b_v)
        QVec row(sys.n_vars, mpq_class(0));
        mpq_class c = p.second * (-n.first[v]) + n.second * p.first[v];
        for (int j = 0; j < sys.n_vars; ++j)
          row[j] = p.first[j] * (-n.first[v]) + n.first[j] * p.first[v];
        row[v] = 0;
        next.push_back({row, c});
      }
    sys.rows = std::move(next);
  }
  for (auto& r : sys.rows)
    if (r.second < 0) return false;
  return true;
}

}  // namespace wlat
