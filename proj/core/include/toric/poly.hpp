#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/rat.hpp"

namespace toric {

// Ordered, immutable variable list. Order fixed at creation; it defines the
// canonical term order of every polynomial over it.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> labels);

  static std::shared_ptr<const VarSet> make(std::vector<std::string> labels);
  static std::shared_ptr<const VarSet> x_vars(std::size_t n);  // x1..xn
  static std::shared_ptr<const VarSet> y_vars(std::size_t d);  // y1..yd

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index(const std::string& l) const;

  bool operator==(const VarSet& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// Exponent vector; length equals the variable count.
using Mono = std::vector<int>;

inline long mono_degree(const Mono& m) {
  long d = 0;
  for (int e : m) d += e;
  return d;
}

// Graded lexicographic, descending: higher total degree first, ties broken by
// lexicographically larger exponent vector (x1 most significant).
struct GrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    long da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse exact multivariate polynomial. No zero coefficients are stored;
// iteration order of terms() is the canonical graded-lex-descending order.
class SparsePoly {
 public:
  using TermMap = std::map<Mono, Rat, GrlexGreater>;

  explicit SparsePoly(VarSetPtr vars);

  static SparsePoly zero(VarSetPtr vars) { return SparsePoly(std::move(vars)); }
  static SparsePoly constant(VarSetPtr vars, const Rat& c);
  static SparsePoly variable(VarSetPtr vars, std::size_t idx);
  static SparsePoly monomial(VarSetPtr vars, Mono m, const Rat& coef);

  const VarSetPtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // 0 for the zero polynomial; errors if nonconstant
  long total_degree() const;   // -1 for the zero polynomial
  long degree_in(std::size_t var) const;
  bool occurs(std::size_t var) const { return degree_in(var) > 0; }
  Rat coeff(const Mono& m) const;

  void add_term(const Mono& m, const Rat& c);

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  SparsePoly scaled(const Rat& c) const;
  SparsePoly pow(unsigned e) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  SparsePoly derivative(std::size_t var) const;
  Rat evaluate(const RatVec& point) const;

  std::string str() const;
  static SparsePoly parse(VarSetPtr vars, const std::string& text);

 private:
  VarSetPtr vars_;
  TermMap terms_;
  void check_same_vars(const SparsePoly& o) const;
};

// Polynomial of total degree <= 1 (affine-linear form).
class LinForm {
 public:
  explicit LinForm(SparsePoly p);
  const SparsePoly& poly() const { return p_; }
  operator const SparsePoly&() const { return p_; }

 private:
  SparsePoly p_;
};

// --- operations -------------------------------------------------------------

// Exact composite: replace each variable of p by its image (a linear form over
// the target variables). Every variable occurring in p must have an image.
SparsePoly substitute(const SparsePoly& p, const std::map<std::size_t, SparsePoly>& images,
                      VarSetPtr target);

// Drop every term with positive exponent on any of the given variables.
SparsePoly restrict_zero(const SparsePoly& p, const std::vector<std::size_t>& zeroed);

// p = monomial * cofactor with the cofactor of trivial monomial content.
std::pair<Mono, SparsePoly> monomial_content(const SparsePoly& p);

// Exact quotient p / ell when the linear form divides p, else nullopt.
std::optional<SparsePoly> divide_linear(const SparsePoly& p, const SparsePoly& ell);

// Sylvester resultant of two polynomials sharing a two-variable VarSet,
// eliminating the named variable; p-rows first. Result is univariate in the
// kept variable (returned over a one-variable VarSet with the kept label).
SparsePoly resultant_bivar(const SparsePoly& p, const SparsePoly& q, std::size_t eliminate);

// --- univariate helpers -----------------------------------------------------

// Coefficient list c0..cdeg of a polynomial univariate in `var` (all other
// exponents must be zero).
std::vector<Rat> uni_coeffs(const SparsePoly& p, std::size_t var);
SparsePoly uni_from_coeffs(VarSetPtr vars, std::size_t var, const std::vector<Rat>& c);

// Monic gcd of two univariate polynomials over the same variable.
SparsePoly gcd_univariate(const SparsePoly& a, const SparsePoly& b, std::size_t var);

// All rational roots (with multiplicity collapsed) of a nonzero univariate
// polynomial; may miss roots whose numerator/denominator are too large to
// factor by trial division, in which case `complete` is set false.
std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs, bool& complete);

}  // namespace toric
