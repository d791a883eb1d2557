#include "toric/poly.hpp"

#include <algorithm>
#include <cctype>

#include "toric/mat.hpp"

namespace toric {

VarSet::VarSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) fail_pre("empty variable label");
    auto [it, fresh] = index_.emplace(labels_[i], i);
    if (!fresh) fail_pre("duplicate variable label '" + labels_[i] + "'");
  }
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> labels) {
  return std::make_shared<const VarSet>(std::move(labels));
}

std::shared_ptr<const VarSet> VarSet::x_vars(std::size_t n) {
  std::vector<std::string> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = "x" + std::to_string(i + 1);
  return make(std::move(l));
}

std::shared_ptr<const VarSet> VarSet::y_vars(std::size_t d) {
  std::vector<std::string> l(d);
  for (std::size_t i = 0; i < d; ++i) l[i] = "y" + std::to_string(i + 1);
  return make(std::move(l));
}

std::optional<std::size_t> VarSet::index(const std::string& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparsePoly::SparsePoly(VarSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_) fail_internal("null VarSet");
}

SparsePoly SparsePoly::constant(VarSetPtr vars, const Rat& c) {
  SparsePoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Mono(p.nvars(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(VarSetPtr vars, std::size_t idx) {
  SparsePoly p(std::move(vars));
  if (idx >= p.nvars()) fail_pre("variable index out of range");
  Mono m(p.nvars(), 0);
  m[idx] = 1;
  p.terms_.emplace(std::move(m), Rat(1));
  return p;
}

SparsePoly SparsePoly::monomial(VarSetPtr vars, Mono m, const Rat& coef) {
  SparsePoly p(std::move(vars));
  if (m.size() != p.nvars()) fail_pre("monomial length mismatch");
  for (int e : m)
    if (e < 0) fail_pre("negative exponent");
  if (!coef.is_zero()) p.terms_.emplace(std::move(m), coef);
  return p;
}

bool SparsePoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

Rat SparsePoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) fail_pre("polynomial is not constant");
  return terms_.begin()->second;
}

long SparsePoly::total_degree() const {
  if (terms_.empty()) return -1;
  return mono_degree(terms_.begin()->first);  // grlex-descending: first term has max degree
}

long SparsePoly::degree_in(std::size_t var) const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
  return d;
}

Rat SparsePoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SparsePoly::add_term(const Mono& m, const Rat& c) {
  if (m.size() != nvars()) fail_pre("monomial length mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SparsePoly::check_same_vars(const SparsePoly& o) const {
  if (!(*vars_ == *o.vars_)) fail_pre("polynomials over different variable sets");
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly p(vars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_same_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_same_vars(b);
  SparsePoly p(a.vars_);
  Mono m(a.nvars());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  return p;
}

SparsePoly SparsePoly::scaled(const Rat& c) const {
  SparsePoly p(vars_);
  if (c.is_zero()) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace(m, v * c);
  return p;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly r = constant(vars_, Rat(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
}

SparsePoly SparsePoly::derivative(std::size_t var) const {
  if (var >= nvars()) fail_pre("variable index out of range");
  SparsePoly p(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    p.add_term(d, c * Rat(m[var]));
  }
  return p;
}

Rat SparsePoly::evaluate(const RatVec& point) const {
  if (point.size() != nvars()) fail_pre("evaluation point arity mismatch");
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    total += t;
  }
  return total;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool has_vars = mono_degree(m) > 0;
    bool print_coef = !a.is_one() || !has_vars;
    if (print_coef) out += a.str();
    if (has_vars) {
      bool lead = !print_coef;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!lead) out += "*";
        lead = false;
        out += vars_->label(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
      }
    }
  }
  return out;
}

namespace {

// Replaces the unicode minus so pasted paper text parses.
std::string ascii_minus(const std::string& s) {
  std::string t;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
      t += '-';
      i += 2;
    } else {
      t += s[i];
    }
  }
  return t;
}

}  // namespace

SparsePoly SparsePoly::parse(VarSetPtr vars, const std::string& text) {
  std::string s = ascii_minus(text);
  SparsePoly out(vars);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) fail_input("empty polynomial text");
  if (s.compare(i, 1, "0") == 0 && i + 1 == s.size()) return out;
  bool expect_term = true;
  int sign = 1;
  while (i < s.size()) {
    skip_ws();
    if (i == s.size()) break;
    if (s[i] == '+' || s[i] == '-') {
      if (expect_term && s[i] == '+') {
        ++i;
        continue;
      }
      sign = (s[i] == '-') ? -sign : sign;
      ++i;
      expect_term = true;
      continue;
    }
    // one term: optional rational, variables with optional powers, '*'-joined
    Rat coef(1);
    Mono m(vars->size(), 0);
    bool saw_factor = false;
    for (;;) {
      skip_ws();
      if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) {
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        coef *= Rat::parse(s.substr(i, j - i));
        i = j;
        saw_factor = true;
      } else if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        std::size_t j = i;
        while (j < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
          ++j;
        std::string lbl = s.substr(i, j - i);
        auto idx = vars->index(lbl);
        if (!idx) fail_input("unknown variable '" + lbl + "'");
        i = j;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          std::size_t k = i;
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          if (k == i) fail_input("missing exponent");
          e = std::stoi(s.substr(i, k - i));
          i = k;
        }
        m[*idx] += e;
        saw_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!saw_factor) fail_input("malformed polynomial near position " + std::to_string(i));
    out.add_term(m, sign < 0 ? -coef : coef);
    sign = 1;
    expect_term = false;
  }
  return out;
}

LinForm::LinForm(SparsePoly p) : p_(std::move(p)) {
  if (p_.total_degree() > 1) fail_pre("linear form has degree > 1");
}

SparsePoly substitute(const SparsePoly& p, const std::map<std::size_t, SparsePoly>& images,
                      VarSetPtr target) {
  for (const auto& [v, img] : images) {
    if (v >= p.nvars()) fail_pre("substitution variable out of range");
    if (!(*img.vars() == *target)) fail_pre("substitution image over wrong variable set");
  }
  // power cache per substituted variable
  std::map<std::pair<std::size_t, int>, SparsePoly> powers;
  auto power = [&](std::size_t v, int e) -> const SparsePoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const SparsePoly& img = images.at(v);
    SparsePoly r = e == 1 ? img : power(v, e - 1) * img;
    return powers.emplace(key, std::move(r)).first->second;
  };
  SparsePoly out(target);
  for (const auto& [m, c] : p.terms()) {
    SparsePoly term = SparsePoly::constant(target, c);
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      auto it = images.find(v);
      if (it == images.end())
        fail_pre("no substitution image for variable '" + p.vars()->label(v) + "'");
      term = term * power(v, m[v]);
    }
    out += term;
  }
  return out;
}

SparsePoly restrict_zero(const SparsePoly& p, const std::vector<std::size_t>& zeroed) {
  for (auto v : zeroed)
    if (v >= p.nvars()) fail_pre("restriction variable out of range");
  SparsePoly out(p.vars());
  for (const auto& [m, c] : p.terms()) {
    bool keep = true;
    for (auto v : zeroed)
      if (m[v] > 0) {
        keep = false;
        break;
      }
    if (keep) out.add_term(m, c);
  }
  return out;
}

std::pair<Mono, SparsePoly> monomial_content(const SparsePoly& p) {
  if (p.is_zero()) fail_pre("monomial content of the zero polynomial");
  Mono content(p.nvars(), 0);
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      content = m;
      first = false;
    } else {
      for (std::size_t i = 0; i < content.size(); ++i)
        content[i] = std::min(content[i], m[i]);
    }
  }
  SparsePoly cof(p.vars());
  for (const auto& [m, c] : p.terms()) {
    Mono d = m;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= content[i];
    cof.add_term(d, c);
  }
  return {content, cof};
}

std::optional<SparsePoly> divide_linear(const SparsePoly& p, const SparsePoly& ell) {
  if (ell.is_zero()) fail_pre("division by the zero form");
  if (ell.total_degree() > 1) fail_pre("divisor is not a linear form");
  if (!(*p.vars() == *ell.vars())) fail_pre("polynomials over different variable sets");
  if (ell.is_constant()) return p.scaled(ell.constant_value().inv());
  // leading variable of ell
  std::size_t k = 0;
  Rat a;
  for (std::size_t v = 0; v < ell.nvars(); ++v) {
    Mono m(ell.nvars(), 0);
    m[v] = 1;
    Rat c = ell.coeff(m);
    if (!c.is_zero()) {
      k = v;
      a = c;
      break;
    }
  }
  SparsePoly b = ell;  // ell minus its x_k part
  {
    Mono m(ell.nvars(), 0);
    m[k] = 1;
    b.add_term(m, -a);
  }
  // split p by x_k power
  std::map<int, SparsePoly> layers;
  long top = 0;
  for (const auto& [m, c] : p.terms()) {
    int e = m[k];
    top = std::max<long>(top, e);
    Mono d = m;
    d[k] = 0;
    auto it = layers.find(e);
    if (it == layers.end()) it = layers.emplace(e, SparsePoly(p.vars())).first;
    it->second.add_term(d, c);
  }
  if (p.is_zero()) return SparsePoly::zero(p.vars());
  if (top == 0) return std::nullopt;  // nonzero, x_k-free: not divisible
  auto layer = [&](long e) -> SparsePoly {
    auto it = layers.find(static_cast<int>(e));
    return it == layers.end() ? SparsePoly::zero(p.vars()) : it->second;
  };
  SparsePoly quotient(p.vars());
  SparsePoly carry = layer(top);
  Rat ainv = a.inv();
  for (long j = top; j >= 1; --j) {
    SparsePoly qj = carry.scaled(ainv);
    Mono xk(p.nvars(), 0);
    xk[k] = static_cast<int>(j - 1);
    quotient += qj * SparsePoly::monomial(p.vars(), xk, Rat(1));
    carry = layer(j - 1) - qj * b;
  }
  if (!carry.is_zero()) return std::nullopt;
  return quotient;
}

std::vector<Rat> uni_coeffs(const SparsePoly& p, std::size_t var) {
  std::vector<Rat> c(static_cast<std::size_t>(std::max<long>(p.degree_in(var), 0)) + 1);
  for (const auto& [m, v] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != var && m[i] != 0) fail_pre("polynomial is not univariate in the given variable");
    c[m[var]] = v;
  }
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
  return c;
}

SparsePoly uni_from_coeffs(VarSetPtr vars, std::size_t var, const std::vector<Rat>& c) {
  SparsePoly p(vars);
  for (std::size_t e = 0; e < c.size(); ++e) {
    Mono m(vars->size(), 0);
    m[var] = static_cast<int>(e);
    p.add_term(m, c[e]);
  }
  return p;
}

SparsePoly resultant_bivar(const SparsePoly& p, const SparsePoly& q, std::size_t eliminate) {
  if (p.is_zero() || q.is_zero()) fail_pre("resultant of the zero polynomial");
  if (!(*p.vars() == *q.vars())) fail_pre("polynomials over different variable sets");
  if (p.nvars() != 2) fail_pre("resultant_bivar requires a two-variable ring");
  if (eliminate > 1) fail_pre("variable index out of range");
  std::size_t keep = 1 - eliminate;
  auto kept_vars = VarSet::make({p.vars()->label(keep)});

  long dp = p.degree_in(eliminate), dq = q.degree_in(eliminate);
  auto project = [&](const SparsePoly& f) {
    // f must be free of the eliminated variable here
    SparsePoly g(kept_vars);
    for (const auto& [m, c] : f.terms()) {
      Mono mm(1, m[keep]);
      g.add_term(mm, c);
    }
    return g;
  };
  if (dp == 0) return project(p).pow(static_cast<unsigned>(dq));
  if (dq == 0) return project(q).pow(static_cast<unsigned>(dp));

  // coefficient lists in the eliminated variable, entries univariate in keep
  auto coeff_layers = [&](const SparsePoly& f, long deg) {
    std::vector<std::vector<Rat>> layers(deg + 1);  // layers[e] = coeffs in keep var
    for (const auto& [m, c] : f.terms()) {
      auto& lay = layers[m[eliminate]];
      if (lay.size() <= static_cast<std::size_t>(m[keep])) lay.resize(m[keep] + 1);
      lay[m[keep]] = c;
    }
    return layers;
  };
  auto pl = coeff_layers(p, dp);
  auto ql = coeff_layers(q, dq);
  auto eval_layer = [&](const std::vector<Rat>& lay, const Rat& t) {
    Rat v(0), tp(1);
    for (const auto& c : lay) {
      v += c * tp;
      tp *= t;
    }
    return v;
  };

  const std::size_t n = static_cast<std::size_t>(dp + dq);
  auto deg_of = [&](const std::vector<Rat>& lay) {
    long d = -1;
    for (std::size_t i = 0; i < lay.size(); ++i)
      if (!lay[i].is_zero()) d = static_cast<long>(i);
    return d;
  };
  long bound = 0;
  for (long i = 0; i < dq; ++i) {
    long mx = 0;
    for (auto& lay : pl) mx = std::max(mx, deg_of(lay));
    bound += mx;
  }
  for (long i = 0; i < dp; ++i) {
    long mx = 0;
    for (auto& lay : ql) mx = std::max(mx, deg_of(lay));
    bound += mx;
  }

  // evaluation-interpolation of the Sylvester determinant
  std::vector<Rat> xs, ys;
  for (long t = 0; t <= bound; ++t) {
    Rat tv(t);
    Mat s(n, n);
    for (long r = 0; r < dq; ++r)
      for (long j = 0; j <= dp; ++j) s.at(r, r + j) = eval_layer(pl[dp - j], tv);
    for (long r = 0; r < dp; ++r)
      for (long j = 0; j <= dq; ++j) s.at(dq + r, r + j) = eval_layer(ql[dq - j], tv);
    xs.push_back(tv);
    ys.push_back(det(s));
  }
  // Lagrange interpolation
  std::size_t npts = xs.size();
  std::vector<Rat> coeffs(npts);
  for (std::size_t i = 0; i < npts; ++i) {
    // basis polynomial numerator coefficients, times y_i / denom
    std::vector<Rat> num{Rat(1)};
    Rat denom(1);
    for (std::size_t j = 0; j < npts; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(num.size() + 1);
      for (std::size_t k = 0; k < num.size(); ++k) {
        next[k] -= num[k] * xs[j];
        next[k + 1] += num[k];
      }
      num = std::move(next);
      denom *= xs[i] - xs[j];
    }
    Rat f = ys[i] / denom;
    for (std::size_t k = 0; k < num.size(); ++k) coeffs[k] += num[k] * f;
  }
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  return uni_from_coeffs(kept_vars, 0, coeffs);
}

SparsePoly gcd_univariate(const SparsePoly& a, const SparsePoly& b, std::size_t var) {
  auto normalize = [&](std::vector<Rat> c) {
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    return c;
  };
  std::vector<Rat> f = normalize(uni_coeffs(a, var));
  std::vector<Rat> g = normalize(uni_coeffs(b, var));
  auto is_zero = [](const std::vector<Rat>& c) { return c.size() == 1 && c[0].is_zero(); };
  while (!is_zero(g)) {
    // f mod g
    std::vector<Rat> r = f;
    long df = static_cast<long>(r.size()) - 1;
    long dg = static_cast<long>(g.size()) - 1;
    while (df >= dg && !(r.size() == 1 && r[0].is_zero())) {
      Rat q = r[df] / g[dg];
      for (long j = 0; j <= dg; ++j) r[df - dg + j] -= q * g[j];
      r = normalize(std::move(r));
      df = static_cast<long>(r.size()) - 1;
      bool all_zero = true;
      for (auto& c : r)
        if (!c.is_zero()) all_zero = false;
      if (all_zero) {
        r = {Rat(0)};
        break;
      }
      while (!r.empty() && r.back().is_zero()) r.pop_back();
      df = static_cast<long>(r.size()) - 1;
    }
    f = std::move(g);
    g = normalize(std::move(r));
  }
  // monic
  if (!(f.size() == 1 && f[0].is_zero())) {
    Rat lead = f.back();
    for (auto& c : f) c /= lead;
  }
  return uni_from_coeffs(a.vars(), var, f);
}

namespace {

std::vector<mpz_class> small_divisors(const mpz_class& n, bool& complete) {
  // all positive divisors by trial division; gives up on big leftovers
  complete = true;
  mpz_class m = abs(n);
  if (m == 0) return {};
  std::map<mpz_class, int> fac;
  for (mpz_class p = 2; p * p <= m && p < 100000; ++p) {
    while (m % p == 0) {
      fac[p]++;
      m /= p;
    }
  }
  if (m > 1) {
    if (m < mpz_class(1) << 40)
      fac[m]++;
    else {
      complete = false;
      fac[m]++;  // still usable as a candidate
    }
  }
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : fac) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs, bool& complete) {
  complete = true;
  std::vector<Rat> c = coeffs;
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
  if (c.size() <= 1) return {};
  std::vector<Rat> roots;
  // strip zero roots
  std::size_t shift = 0;
  while (shift < c.size() && c[shift].is_zero()) ++shift;
  if (shift > 0) {
    roots.push_back(Rat(0));
    c.erase(c.begin(), c.begin() + shift);
  }
  if (c.size() <= 1) return roots;
  // integer coefficients
  mpz_class l = 1;
  for (auto& x : c) l = lcm(l, x.den());
  std::vector<mpz_class> ic(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) ic[i] = c[i].num() * (l / c[i].den());
  if (c.size() == 2) {
    roots.push_back(Rat(-ic[0], ic[1]));
    return roots;
  }
  if (c.size() == 3) {
    // exact quadratic formula over Q
    mpz_class a = ic[2], b = ic[1], cc = ic[0];
    mpz_class disc = b * b - 4 * a * cc;
    if (sgn(disc) >= 0) {
      mpz_class r = sqrt(disc);
      if (r * r == disc) {
        roots.push_back(Rat(-b + r, 2 * a));
        roots.push_back(Rat(-b - r, 2 * a));
      }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
  }
  bool c0 = true, c1 = true;
  auto ps = small_divisors(ic.front(), c0);
  auto qs = small_divisors(ic.back(), c1);
  if (!c0 || !c1) complete = false;
  auto eval = [&](const Rat& r) {
    Rat v(0), rp(1);
    for (auto& x : ic) {
      v += Rat(x) * rp;
      rp *= r;
    }
    return v.is_zero();
  };
  for (const auto& pd : ps)
    for (const auto& qd : qs) {
      Rat cand(pd, qd);
      if (eval(cand)) roots.push_back(cand);
      if (eval(-cand)) roots.push_back(-cand);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace toric
