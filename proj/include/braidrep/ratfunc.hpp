#ifndef BRAIDREP_RATFUNC_HPP
#define BRAIDREP_RATFUNC_HPP

#include <gmpxx.h>

#include <string>

#include "braidrep/poly.hpp"

namespace braidrep {

// An element of Q(x): quotient of integer polynomials in canonical form.
// Canonical form: den != 0, gcd(num, den) = 1 (including integer content),
// contents of num and den coprime, den has positive leading coefficient.
// Equality of canonical forms is syntactic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly(1)) {}
  RatFunc(Poly num, Poly den);
  explicit RatFunc(const Poly& num) : num_(num), den_(Poly(1)) {}
  explicit RatFunc(long v) : num_(Poly(v)), den_(Poly(1)) {}
  explicit RatFunc(const mpz_class& v) : num_(Poly(v)), den_(Poly(1)) {}
  explicit RatFunc(const mpq_class& v);

  static RatFunc var_pow(int k);  // x^k, k may be negative
  static RatFunc of_frac(long num, long den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws on division by zero
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inverse() const;
  RatFunc pow(int e) const;

  // Exact evaluation; throws std::domain_error at a pole.
  mpq_class eval(const mpq_class& x) const;
  bool has_pole_at(const mpq_class& x) const;

  std::string to_string(const std::string& var = "s") const;
  static RatFunc parse(const std::string& text, const std::string& var = "s");

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace braidrep

#endif
