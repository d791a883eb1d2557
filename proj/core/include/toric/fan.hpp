#pragma once

#include <string>
#include <vector>

#include "toric/mat.hpp"
#include "toric/poly.hpp"

namespace toric {

// Sorted ray-index set.
using RaySet = std::vector<std::size_t>;

struct Diagnostics {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  std::string str() const;
};

// Simplicial fan given by a ray matrix (rows are ray generators) and its
// maximal cones. Cones are canonicalized on construction: each cone sorted
// ascending, the cone list sorted lexicographically and deduplicated.
// Structural invariants are diagnosed by validate(); every operation with a
// "validated fan" precondition calls require_valid().
class SimplicialFan {
 public:
  SimplicialFan(std::size_t d, Mat ray_matrix, std::vector<RaySet> max_cones);

  static SimplicialFan trivial();  // the 0-dimensional fan, one zero cone

  std::size_t dim() const { return d_; }
  std::size_t nrays() const { return u_.rows(); }
  const Mat& ray_matrix() const { return u_; }
  RatVec ray(std::size_t i) const { return u_.row(i); }
  const std::vector<RaySet>& max_cones() const { return cones_; }
  const VarSetPtr& x_vars() const { return xvars_; }

  std::vector<RaySet> d_cones() const;               // maximal cones of size d
  std::vector<RaySet> cones_of_dim(std::size_t k) const;
  bool is_cone(const RaySet& tau) const;             // face of some maximal cone

  const Diagnostics& basic_diagnostics() const { return diag_; }
  void require_valid() const;

 private:
  std::size_t d_;
  Mat u_;
  std::vector<RaySet> cones_;
  VarSetPtr xvars_;
  Diagnostics diag_;
};

// Default mode checks the type invariants; strict mode additionally certifies
// that every pair of maximal cones meets in a common face, via an exact
// separating hyperplane with all other generators strictly on their sides.
Diagnostics validate(const SimplicialFan& f, bool strict);

// Star fan data at a cone tau, with the deterministic T_tau normalization:
// rows of U*T_tau indexed by tau are the first |tau| standard basis vectors.
struct StarFanData {
  SimplicialFan base;                 // the star fan, in dimension d - |tau|
  RaySet tau;                         // source cone
  std::vector<std::size_t> ray_map;   // base ray index -> source ray (= nb(tau), ascending)
  std::vector<std::size_t> outside;   // source rays outside nb(tau) and tau
  Rat c_tau;                          // |det T_tau|
  Mat T_tau;
};

StarFanData star_fan(const SimplicialFan& f, const RaySet& tau);

SimplicialFan product_fan(const SimplicialFan& a, const SimplicialFan& b);

// Ridge-pairing completeness criterion on a strictly validated fan.
bool is_complete(const SimplicialFan& f);

struct BarFanResult {
  SimplicialFan fan;                      // the subfan of all d-cones and faces
  std::vector<std::size_t> kept_rays;     // source indices of the bar fan's rays
  std::vector<std::size_t> dropped_rays;  // Sigma(1) \ bar Sigma(1)
};

BarFanResult bar_fan(const SimplicialFan& f);

bool same_fan(const SimplicialFan& a, const SimplicialFan& b);

std::string rayset_str(const RaySet& s);  // 1-based, e.g. "{1,2,5}"

}  // namespace toric
