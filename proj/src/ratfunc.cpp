#include "braidrep/ratfunc.hpp"

#include <stdexcept>

namespace braidrep {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

RatFunc::RatFunc(const mpq_class& v)
    : num_(Poly(mpz_class(v.get_num()))), den_(Poly(mpz_class(v.get_den()))) {
  normalize();
}

RatFunc RatFunc::var_pow(int k) {
  if (k >= 0) return RatFunc(Poly::monomial(1, k), Poly(1));
  return RatFunc(Poly(1), Poly::monomial(1, -k));
}

RatFunc RatFunc::of_frac(long num, long den) { return RatFunc(Poly(num), Poly(den)); }

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!(g.degree() == 0 && g.coeff(0) == 1)) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool RatFunc::is_one() const {
  return num_.degree() == 0 && num_.coeff(0) == 1 && den_.degree() == 0 && den_.coeff(0) == 1;
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  // Cross-reduce before multiplying to keep intermediates small.
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  Poly n = num_.div_exact(g1) * o.num_.div_exact(g2);
  Poly d = den_.div_exact(g2) * o.den_.div_exact(g1);
  RatFunc r;
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  r.normalize();
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.leading() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFunc RatFunc::pow(int e) const {
  if (e == 0) return RatFunc(1);
  RatFunc base = e > 0 ? *this : inverse();
  int n = e > 0 ? e : -e;
  RatFunc acc(1);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool RatFunc::has_pole_at(const mpq_class& x) const { return den_.eval(x) == 0; }

mpq_class RatFunc::eval(const mpq_class& x) const {
  mpq_class d = den_.eval(x);
  if (d == 0) throw std::domain_error("RatFunc::eval: pole at evaluation point");
  mpq_class r = num_.eval(x) / d;
  r.canonicalize();
  return r;
}

std::string RatFunc::to_string(const std::string& var) const {
  std::string n = num_.to_string(var);
  if (den_.degree() == 0 && den_.coeff(0) == 1) return n;
  return n + " / " + den_.to_string(var);
}

RatFunc RatFunc::parse(const std::string& text, const std::string& var) {
  size_t slash = text.find(" / ");
  if (slash == std::string::npos) return RatFunc(Poly::parse(text, var), Poly(1));
  return RatFunc(Poly::parse(text.substr(0, slash), var),
                 Poly::parse(text.substr(slash + 3), var));
}

}  // namespace braidrep
