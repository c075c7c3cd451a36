#ifndef BRAIDREP_JET_HPP
#define BRAIDREP_JET_HPP

#include <string>
#include <vector>

#include "braidrep/ratfunc.hpp"

namespace braidrep {

// Truncated power series in h modulo h^order, with coefficients in Q(k).
// All arithmetic is performed modulo h^order; mixing orders is an error.
class Jet {
 public:
  // Order-0 jet: the neutral additive zero, promoted on arithmetic with any
  // ordered jet.  Lets generic containers default-construct zeros.
  Jet() : order_(0) {}
  explicit Jet(int order);
  Jet(int order, std::vector<RatFunc> coeffs);

  static Jet constant(int order, const RatFunc& c);
  static Jet h(int order);  // the series h itself

  int order() const { return order_; }
  const RatFunc& coeff(int i) const { return c_[i]; }
  const std::vector<RatFunc>& coeffs() const { return c_; }

  bool is_zero() const;

  Jet operator-() const;
  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const;
  Jet operator*(const Jet& o) const;
  Jet operator*(const RatFunc& c) const;
  Jet& operator+=(const Jet& o) { return *this = *this + o; }

  bool operator==(const Jet& o) const {
    if (is_zero() && o.is_zero()) return true;
    return order_ == o.order_ && c_ == o.c_;
  }
  bool operator!=(const Jet& o) const { return !(*this == o); }

  // Multiplicative inverse; requires a nonzero constant term.
  Jet inverse() const;
  Jet operator/(const Jet& o) const { return *this * o.inverse(); }

  std::string to_string(const std::string& var = "k") const;
  static Jet parse(const std::string& text, const std::string& var = "k");

 private:
  void check_same(const Jet& o) const;
  int order_;
  std::vector<RatFunc> c_;
};

// Analytic functions of a jet, exact modulo h^order.
Jet jet_exp(const Jet& x);   // requires zero constant term
Jet jet_log(const Jet& x);   // requires constant term 1
Jet jet_sinh(const Jet& x);  // requires zero constant term
Jet jet_cosh(const Jet& x);  // requires zero constant term

}  // namespace braidrep

#endif
