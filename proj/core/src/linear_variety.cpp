#include "toric/linear_variety.hpp"

#include <algorithm>

namespace toric {

LinearVariety::LinearVariety(VarSetPtr vars, const std::vector<RatVec>& coefficient_rows)
    : vars_(std::move(vars)) {
  for (const auto& r : coefficient_rows)
    if (r.size() != vars_->size()) fail_pre("form arity mismatch");
  rows_ = echelon_rows(coefficient_rows);
  pivots_.clear();
  for (const auto& r : rows_) {
    std::size_t p = 0;
    while (p < r.size() && r[p].is_zero()) ++p;
    pivots_.push_back(p);
  }
}

LinearVariety LinearVariety::from_forms(const std::vector<SparsePoly>& forms) {
  if (forms.empty()) fail_pre("no forms given");
  VarSetPtr vars = forms[0].vars();
  std::vector<RatVec> rows;
  for (const auto& f : forms) {
    if (!(*f.vars() == *vars)) fail_pre("forms over different variable sets");
    if (f.total_degree() > 1) fail_pre("form of degree > 1");
    RatVec r(vars->size());
    for (const auto& [m, c] : f.terms()) {
      if (mono_degree(m) == 0) fail_pre("form has a constant part; not homogeneous");
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] == 1) r[i] = c;
    }
    rows.push_back(std::move(r));
  }
  return LinearVariety(vars, rows);
}

std::vector<SparsePoly> LinearVariety::form_polys() const {
  std::vector<SparsePoly> out;
  for (const auto& r : rows_) {
    SparsePoly f(vars_);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i].is_zero()) continue;
      Mono m(vars_->size(), 0);
      m[i] = 1;
      f.add_term(m, r[i]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool LinearVariety::contains_point(const RatVec& pt) const {
  if (pt.size() != vars_->size()) fail_pre("point arity mismatch");
  for (const auto& r : rows_) {
    Rat v(0);
    for (std::size_t i = 0; i < r.size(); ++i) v += r[i] * pt[i];
    if (!v.is_zero()) return false;
  }
  return true;
}

bool LinearVariety::subset_of(const LinearVariety& other) const {
  if (!(*vars_ == *other.vars_)) fail_pre("subspaces over different variable sets");
  // V(F_this) ⊆ V(F_other) iff rowspace(F_other) ⊆ rowspace(F_this)
  std::vector<RatVec> all = rows_;
  for (const auto& r : other.rows_) all.push_back(r);
  return echelon_rows(all).size() == rows_.size();
}

SparsePoly LinearVariety::reduce(const SparsePoly& p) const {
  if (!(*p.vars() == *vars_)) fail_pre("polynomial over different variable set");
  if (rows_.empty()) return p;
  std::map<std::size_t, SparsePoly> images;
  std::vector<bool> is_pivot(vars_->size(), false);
  for (std::size_t k = 0; k < rows_.size(); ++k) is_pivot[pivots_[k]] = true;
  for (std::size_t v = 0; v < vars_->size(); ++v) {
    if (!is_pivot[v]) {
      images.emplace(v, SparsePoly::variable(vars_, v));
      continue;
    }
    // pivot variable = -(free part of its row)
    std::size_t k = 0;
    while (pivots_[k] != v) ++k;
    SparsePoly img(vars_);
    for (std::size_t j = v + 1; j < vars_->size(); ++j) {
      if (rows_[k][j].is_zero()) continue;
      Mono m(vars_->size(), 0);
      m[j] = 1;
      img.add_term(m, -rows_[k][j]);
    }
    images.emplace(v, std::move(img));
  }
  return substitute(p, images, vars_);
}

std::vector<RatVec> LinearVariety::solution_basis() const {
  if (rows_.empty()) {
    std::vector<RatVec> basis;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      RatVec e(vars_->size());
      e[i] = Rat(1);
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return kernel_basis(Mat::from_rows(rows_));
}

bool LinearVariety::operator<(const LinearVariety& o) const {
  if (rows_.size() != o.rows_.size()) return rows_.size() < o.rows_.size();
  return rows_ < o.rows_;
}

std::string LinearVariety::str() const {
  std::string out = "{ ";
  auto forms = form_polys();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (i) out += " = ";
    out += forms[i].str();
  }
  out += forms.empty() ? "(whole space) }" : " = 0 }";
  return out;
}

}  // namespace toric
