#pragma once

#include <vector>

#include "toric/mat.hpp"
#include "toric/poly.hpp"

namespace toric {

// Linear subspace of projective space, stored as independent homogeneous
// linear forms in echelon normal form (unique per subspace).
class LinearVariety {
 public:
  LinearVariety(VarSetPtr vars, const std::vector<RatVec>& coefficient_rows);
  static LinearVariety from_forms(const std::vector<SparsePoly>& forms);

  const VarSetPtr& vars() const { return vars_; }
  const std::vector<RatVec>& rows() const { return rows_; }
  std::size_t codim() const { return rows_.size(); }
  long proj_dim() const { return static_cast<long>(vars_->size()) - 1 - static_cast<long>(rows_.size()); }

  std::vector<SparsePoly> form_polys() const;
  bool contains_point(const RatVec& pt) const;

  // this ⊆ other, as subvarieties of projective space
  bool subset_of(const LinearVariety& other) const;

  // p with the pivot variables eliminated via the defining forms; the result
  // is identically zero iff p vanishes on the subspace.
  SparsePoly reduce(const SparsePoly& p) const;
  bool vanishes(const SparsePoly& p) const { return reduce(p).is_zero(); }

  // basis of the solution space in R^nvars
  std::vector<RatVec> solution_basis() const;

  bool operator==(const LinearVariety& o) const { return *vars_ == *o.vars_ && rows_ == o.rows_; }
  bool operator<(const LinearVariety& o) const;  // (codim, lex on rows)

  std::string str() const;

 private:
  VarSetPtr vars_;
  std::vector<RatVec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace toric
