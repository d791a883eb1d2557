#include "toric/fan.hpp"

#include <algorithm>
#include <set>

#include "toric/simplex.hpp"

namespace toric {

std::string Diagnostics::str() const {
  std::string out;
  for (const auto& s : issues) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

std::string rayset_str(const RaySet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

namespace {

bool is_subset(const RaySet& a, const RaySet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Diagnostics basic_validate(std::size_t d, const Mat& u, const std::vector<RaySet>& cones) {
  Diagnostics diag;
  const std::size_t n = u.rows();
  if (u.cols() != d) {
    diag.issues.push_back("ray matrix has " + std::to_string(u.cols()) + " columns, expected d=" +
                          std::to_string(d));
    return diag;
  }
  if (rank(u) != d) diag.issues.push_back("rank(U) != d");
  for (std::size_t i = 0; i < n; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < d; ++j)
      if (!u.at(i, j).is_zero()) zero = false;
    if (zero) diag.issues.push_back("zero ray u" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool equal = true, proportional = true;
      Rat dot(0);
      for (std::size_t k = 0; k < d; ++k) {
        if (!(u.at(i, k) == u.at(j, k))) equal = false;
        dot += u.at(i, k) * u.at(j, k);
      }
      if (d >= 1) {
        Mat pair = u.select_rows({i, j});
        proportional = rank(pair) <= 1;
      }
      if (equal)
        diag.issues.push_back("duplicate ray: u" + std::to_string(i + 1) + " = u" +
                              std::to_string(j + 1));
      else if (proportional && dot.sign() > 0)
        diag.issues.push_back("rays u" + std::to_string(i + 1) + ", u" + std::to_string(j + 1) +
                              " are positive multiples");
    }
  std::vector<bool> used(n, false);
  for (const auto& c : cones) {
    for (auto r : c) {
      if (r >= n) {
        diag.issues.push_back("cone " + rayset_str(c) + " has out-of-range ray index");
        return diag;
      }
      used[r] = true;
    }
    if (c.size() > d)
      diag.issues.push_back("cone " + rayset_str(c) + " has more than d rays");
    else if (!c.empty()) {
      std::vector<std::size_t> idx(c.begin(), c.end());
      if (rank(u.select_rows(idx)) != c.size())
        diag.issues.push_back("cone " + rayset_str(c) + " is not simplicial (dependent rays)");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) diag.issues.push_back("ray u" + std::to_string(i + 1) + " is in no maximal cone");
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = 0; j < cones.size(); ++j) {
      if (i == j) continue;
      if (is_subset(cones[i], cones[j]))
        diag.issues.push_back("maximal cone " + rayset_str(cones[i]) + " is contained in " +
                              rayset_str(cones[j]));
    }
  return diag;
}

}  // namespace

SimplicialFan::SimplicialFan(std::size_t d, Mat ray_matrix, std::vector<RaySet> max_cones)
    : d_(d), u_(std::move(ray_matrix)) {
  for (auto& c : max_cones) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::sort(max_cones.begin(), max_cones.end());
  max_cones.erase(std::unique(max_cones.begin(), max_cones.end()), max_cones.end());
  cones_ = std::move(max_cones);
  xvars_ = VarSet::x_vars(u_.rows());
  diag_ = basic_validate(d_, u_, cones_);
}

SimplicialFan SimplicialFan::trivial() { return SimplicialFan(0, Mat(0, 0), {RaySet{}}); }

std::vector<RaySet> SimplicialFan::d_cones() const {
  std::vector<RaySet> out;
  for (const auto& c : cones_)
    if (c.size() == d_) out.push_back(c);
  return out;
}

std::vector<RaySet> SimplicialFan::cones_of_dim(std::size_t k) const {
  std::set<RaySet> faces;
  for (const auto& c : cones_) {
    if (c.size() < k) continue;
    // all k-subsets of c
    std::vector<std::size_t> pick(k);
    std::vector<std::size_t> stack;
    // iterative combinations
    std::vector<std::size_t> comb(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
      if (depth == k) {
        RaySet f(comb.begin(), comb.end());
        faces.insert(f);
        return;
      }
      for (std::size_t i = start; i < c.size(); ++i) {
        comb[depth] = c[i];
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  return {faces.begin(), faces.end()};
}

bool SimplicialFan::is_cone(const RaySet& tau) const {
  RaySet t = tau;
  std::sort(t.begin(), t.end());
  for (const auto& c : cones_)
    if (is_subset(t, c)) return true;
  return false;
}

void SimplicialFan::require_valid() const {
  if (!diag_.ok()) fail_pre("invalid fan: " + diag_.str());
}

Diagnostics validate(const SimplicialFan& f, bool strict) {
  Diagnostics diag = f.basic_diagnostics();
  if (!strict || !diag.ok()) return diag;
  const auto& cones = f.max_cones();
  const Mat& u = f.ray_matrix();
  const std::size_t d = f.dim();
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      RaySet shared;
      std::set_intersection(cones[a].begin(), cones[a].end(), cones[b].begin(), cones[b].end(),
                            std::back_inserter(shared));
      std::vector<LinConstraint> cs;
      for (auto r : shared)
        cs.push_back({u.row(r), Rat(0), LinConstraint::Rel::Eq});
      for (auto r : cones[a])
        if (!std::binary_search(shared.begin(), shared.end(), r))
          cs.push_back({u.row(r), Rat(1), LinConstraint::Rel::Ge});
      for (auto r : cones[b])
        if (!std::binary_search(shared.begin(), shared.end(), r)) {
          RatVec neg = u.row(r);
          for (auto& v : neg) v = -v;
          cs.push_back({std::move(neg), Rat(1), LinConstraint::Rel::Ge});
        }
      if (!feasible_point(cs, d))
        diag.issues.push_back("cones " + rayset_str(cones[a]) + " and " + rayset_str(cones[b]) +
                              " do not intersect in a common face");
    }
  return diag;
}

StarFanData star_fan(const SimplicialFan& f, const RaySet& tau_in) {
  f.require_valid();
  RaySet tau = tau_in;
  std::sort(tau.begin(), tau.end());
  tau.erase(std::unique(tau.begin(), tau.end()), tau.end());
  if (!f.is_cone(tau)) fail_pre("tau " + rayset_str(tau) + " is not a cone of the fan");
  const std::size_t d = f.dim();
  const std::size_t k = tau.size();
  const Mat& u = f.ray_matrix();

  // Extend the rows of tau to a basis by greedily appending standard basis
  // vectors in index order, then invert.
  std::vector<RatVec> brows;
  for (auto r : tau) brows.push_back(u.row(r));
  for (std::size_t i = 0; i < d && brows.size() < d; ++i) {
    RatVec e(d);
    e[i] = Rat(1);
    brows.push_back(e);
    if (rank(Mat::from_rows(brows)) != brows.size()) brows.pop_back();
  }
  Mat b = Mat::from_rows(brows);
  check_internal(b.rows() == d && !det(b).is_zero(), "failed to extend tau rows to a basis");
  // T = B^{-1} via solving B X = I
  Mat t(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    RatVec e(d);
    e[col] = Rat(1);
    auto x = solve(b, e);
    check_internal(x.has_value(), "basis inversion failed");
    for (std::size_t i = 0; i < d; ++i) t.at(i, col) = (*x)[i];
  }
  Rat c_tau = det(t).abs();

  // nb(tau): rays extending tau to a bigger cone
  std::vector<std::size_t> nb;
  for (std::size_t r = 0; r < f.nrays(); ++r) {
    if (std::binary_search(tau.begin(), tau.end(), r)) continue;
    RaySet ext = tau;
    ext.push_back(r);
    std::sort(ext.begin(), ext.end());
    if (f.is_cone(ext)) nb.push_back(r);
  }

  Mat ut = u * t;
  Mat base_rays(nb.size(), d - k);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = k; j < d; ++j) base_rays.at(i, j - k) = ut.at(nb[i], j);

  std::vector<RaySet> base_cones;
  for (const auto& c : f.max_cones()) {
    if (!std::includes(c.begin(), c.end(), tau.begin(), tau.end())) continue;
    RaySet img;
    for (auto r : c) {
      if (std::binary_search(tau.begin(), tau.end(), r)) continue;
      auto it = std::lower_bound(nb.begin(), nb.end(), r);
      check_internal(it != nb.end() && *it == r, "cone ray missing from nb(tau)");
      img.push_back(static_cast<std::size_t>(it - nb.begin()));
    }
    base_cones.push_back(std::move(img));
  }

  StarFanData s{SimplicialFan(d - k, std::move(base_rays), std::move(base_cones)),
                tau,
                nb,
                {},
                c_tau,
                t};
  for (std::size_t r = 0; r < f.nrays(); ++r)
    if (!std::binary_search(tau.begin(), tau.end(), r) &&
        !std::binary_search(nb.begin(), nb.end(), r))
      s.outside.push_back(r);
  s.base.require_valid();

  // normalization identity |det (U_tau)_sigma-bar| = c_tau * |det U_sigma|
  for (const auto& c : f.max_cones()) {
    if (c.size() != d || !std::includes(c.begin(), c.end(), tau.begin(), tau.end())) continue;
    std::vector<std::size_t> bar;
    for (auto r : c)
      if (!std::binary_search(tau.begin(), tau.end(), r))
        bar.push_back(static_cast<std::size_t>(
            std::lower_bound(nb.begin(), nb.end(), r) - nb.begin()));
    Rat lhs = det(s.base.ray_matrix().select_rows(bar)).abs();
    Rat rhs = c_tau * det(u.select_rows(std::vector<std::size_t>(c.begin(), c.end()))).abs();
    check_internal(lhs == rhs, "star fan minor normalization failed");
  }
  return s;
}

SimplicialFan product_fan(const SimplicialFan& a, const SimplicialFan& b) {
  a.require_valid();
  b.require_valid();
  const std::size_t n1 = a.nrays(), n2 = b.nrays();
  const std::size_t d1 = a.dim(), d2 = b.dim();
  Mat u(n1 + n2, d1 + d2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < d1; ++j) u.at(i, j) = a.ray_matrix().at(i, j);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < d2; ++j) u.at(n1 + i, d1 + j) = b.ray_matrix().at(i, j);
  std::vector<RaySet> cones;
  for (const auto& c1 : a.max_cones())
    for (const auto& c2 : b.max_cones()) {
      RaySet c = c1;
      for (auto r : c2) c.push_back(n1 + r);
      cones.push_back(std::move(c));
    }
  return SimplicialFan(d1 + d2, std::move(u), std::move(cones));
}

bool is_complete(const SimplicialFan& f) {
  Diagnostics diag = validate(f, true);
  if (!diag.ok()) fail_pre("is_complete requires a strictly valid fan: " + diag.str());
  const std::size_t d = f.dim();
  if (d == 0) return f.max_cones() == std::vector<RaySet>{RaySet{}};
  for (const auto& c : f.max_cones())
    if (c.size() != d) return false;
  // each ridge of each d-cone must lie in exactly two d-cones
  std::map<RaySet, int> ridge_count;
  for (const auto& c : f.max_cones())
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      RaySet ridge;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (i != drop) ridge.push_back(c[i]);
      ridge_count[ridge]++;
    }
  for (const auto& [ridge, count] : ridge_count)
    if (count != 2) return false;
  return true;
}

BarFanResult bar_fan(const SimplicialFan& f) {
  f.require_valid();
  const std::size_t d = f.dim();
  std::vector<RaySet> dcones = f.d_cones();
  std::set<std::size_t> kept_set;
  for (const auto& c : dcones) kept_set.insert(c.begin(), c.end());
  std::vector<std::size_t> kept(kept_set.begin(), kept_set.end());
  std::vector<std::size_t> dropped;
  for (std::size_t r = 0; r < f.nrays(); ++r)
    if (!kept_set.count(r)) dropped.push_back(r);
  Mat u = f.ray_matrix().select_rows(kept);
  std::vector<RaySet> cones;
  for (const auto& c : dcones) {
    RaySet img;
    for (auto r : c)
      img.push_back(static_cast<std::size_t>(
          std::lower_bound(kept.begin(), kept.end(), r) - kept.begin()));
    cones.push_back(std::move(img));
  }
  return BarFanResult{SimplicialFan(d, std::move(u), std::move(cones)), kept, dropped};
}

bool same_fan(const SimplicialFan& a, const SimplicialFan& b) {
  return a.dim() == b.dim() && a.ray_matrix() == b.ray_matrix() && a.max_cones() == b.max_cones();
}

}  // namespace toric
