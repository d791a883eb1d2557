#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

// Error kinds map onto CLI exit codes: input=1, precondition=2, internal=3.
enum class ErrKind { Input = 1, Precondition = 2, Internal = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& m) { throw Error(ErrKind::Input, m); }
[[noreturn]] inline void fail_pre(const std::string& m) { throw Error(ErrKind::Precondition, m); }
[[noreturn]] inline void fail_internal(const std::string& m) { throw Error(ErrKind::Internal, m); }

inline void check_internal(bool ok, const std::string& m) {
  if (!ok) fail_internal(m);
}

// Exact rational scalar. Always canonical: gcd(|num|,den)=1, den>0, zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(int n) : v_(n) {}
  Rat(long n, long d) : v_(n, d) { canon(); }
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) { canon(); }
  explicit Rat(const mpq_class& q) : v_(q) { canon(); }

  // Exact conversion; every finite double is rational.
  static Rat from_double(double x) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rat(q);
  }

  // Accepts "p", "-p", "p/q"; rejects anything else (floats in particular).
  static Rat parse(const std::string& s);

  const mpz_class num() const { return v_.get_num(); }
  const mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) fail_pre("division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat inv() const {
    if (is_zero()) fail_pre("inverse of zero rational");
    return Rat(mpq_class(1) / v_);
  }

 private:
  void canon() {
    if (sgn(v_.get_den()) == 0) fail_pre("zero denominator");
    v_.canonicalize();
  }
  mpq_class v_;
};

using RatVec = std::vector<Rat>;

inline Rat Rat::parse(const std::string& s) {
  if (s.empty()) fail_input("empty rational literal");
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) fail_input("bad rational literal '" + s + "' (integers or p/q only)");
    return Rat(mpz_class(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  if (!is_int(p) || !is_int(q)) fail_input("bad rational literal '" + s + "'");
  mpz_class qq(q);
  if (sgn(qq) == 0) fail_input("zero denominator in '" + s + "'");
  return Rat(mpz_class(p), qq);
}

inline std::string vec_str(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

}  // namespace toric
