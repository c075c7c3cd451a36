#ifndef BRAIDREP_POLY_HPP
#define BRAIDREP_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace braidrep {

// Dense univariate polynomial with integer coefficients.  The variable is
// anonymous; callers supply a name only when printing/parsing.
// Invariant: coeffs_ has no trailing zeros (empty vector == zero polynomial).
class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpz_class& c);
  explicit Poly(long c);
  explicit Poly(std::vector<mpz_class> coeffs);

  static Poly monomial(const mpz_class& c, int deg);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& coeff(int i) const;
  const mpz_class& leading() const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const mpz_class& c) const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Multiplies by x^k.
  Poly shifted(int k) const;

  // Exact division; throws std::domain_error if the division has a remainder.
  Poly div_exact(const Poly& d) const;

  // gcd of all coefficients, nonnegative; content of 0 is 0.
  mpz_class content() const;
  Poly primitive_part() const;

  mpq_class eval(const mpq_class& x) const;

  std::string to_string(const std::string& var) const;
  static Poly parse(const std::string& text, const std::string& var);

  // Full gcd including integer content, normalized with positive leading
  // coefficient; gcd(0, 0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// lc(b)^(deg a - deg b + 1) * a = q*b + r; returns r.
Poly pseudo_rem(const Poly& a, const Poly& b);

}  // namespace braidrep

#endif
