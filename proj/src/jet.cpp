#include "braidrep/jet.hpp"

#include <sstream>
#include <stdexcept>

namespace braidrep {

Jet::Jet(int order) : order_(order), c_(order) {
  if (order < 1) throw std::invalid_argument("Jet: order must be positive");
}

Jet::Jet(int order, std::vector<RatFunc> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 1) throw std::invalid_argument("Jet: order must be positive");
  c_.resize(order_);
}

Jet Jet::constant(int order, const RatFunc& c) {
  Jet j(order);
  j.c_[0] = c;
  return j;
}

Jet Jet::h(int order) {
  Jet j(order);
  if (order > 1) j.c_[1] = RatFunc(1);
  return j;
}

bool Jet::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

void Jet::check_same(const Jet& o) const {
  if (order_ != o.order_) throw std::invalid_argument("Jet: mixed truncation orders");
}

Jet Jet::operator-() const {
  Jet r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Jet Jet::operator+(const Jet& o) const {
  if (order_ == 0) return o;
  if (o.order_ == 0) return *this;
  check_same(o);
  Jet r(*this);
  for (int i = 0; i < order_; ++i) r.c_[i] += o.c_[i];
  return r;
}

Jet Jet::operator-(const Jet& o) const { return *this + (-o); }

Jet Jet::operator*(const Jet& o) const {
  if (order_ == 0 || o.order_ == 0) return Jet();
  check_same(o);
  Jet r(order_);
  for (int i = 0; i < order_; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j < order_; ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

Jet Jet::operator*(const RatFunc& c) const {
  Jet r(*this);
  for (auto& x : r.c_) x = x * c;
  return r;
}

Jet Jet::inverse() const {
  if (c_[0].is_zero()) throw std::domain_error("Jet::inverse: zero constant term");
  Jet r(order_);
  RatFunc inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (int n = 1; n < order_; ++n) {
    RatFunc acc;
    for (int i = 1; i <= n; ++i) acc += c_[i] * r.c_[n - i];
    r.c_[n] = -(acc * inv0);
  }
  return r;
}

std::string Jet::to_string(const std::string& var) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < order_; ++i) {
    if (i) os << ", ";
    os << c_[i].to_string(var);
  }
  os << "] mod h^" << order_;
  return os.str();
}

Jet Jet::parse(const std::string& text, const std::string& var) {
  size_t open = text.find('[');
  size_t close = text.rfind(']');
  size_t mod = text.rfind(" mod h^");
  if (open == std::string::npos || close == std::string::npos || mod == std::string::npos)
    throw std::invalid_argument("Jet::parse: bad input: " + text);
  int order = std::stoi(text.substr(mod + 7));
  std::vector<RatFunc> cs;
  std::string body = text.substr(open + 1, close - open - 1);
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(", ", pos);
    std::string piece =
        body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    cs.push_back(RatFunc::parse(piece, var));
    pos = comma == std::string::npos ? body.size() : comma + 2;
  }
  return Jet(order, std::move(cs));
}

namespace {

// Sum of c_r * x^r for r >= 1 given coefficients c_r as exact rationals,
// assuming x has zero constant term (so x^order == 0).
Jet power_series(const Jet& x, const RatFunc& c0, const std::vector<RatFunc>& cs) {
  Jet acc = Jet::constant(x.order(), c0);
  Jet xp = Jet::constant(x.order(), RatFunc(1));
  for (int r = 1; r < x.order(); ++r) {
    xp = xp * x;
    if (r < static_cast<int>(cs.size()) + 1 && !cs[r - 1].is_zero()) acc += xp * cs[r - 1];
  }
  return acc;
}

}  // namespace

Jet jet_exp(const Jet& x) {
  if (!x.coeff(0).is_zero()) throw std::domain_error("jet_exp: nonzero constant term");
  std::vector<RatFunc> cs;
  mpz_class fact = 1;
  for (int r = 1; r < x.order(); ++r) {
    fact *= r;
    cs.push_back(RatFunc(mpq_class(mpz_class(1), fact)));
  }
  return power_series(x, RatFunc(1), cs);
}

Jet jet_log(const Jet& x) {
  if (!x.coeff(0).is_one()) throw std::domain_error("jet_log: constant term must be 1");
  Jet y = x - Jet::constant(x.order(), RatFunc(1));
  std::vector<RatFunc> cs;
  for (int r = 1; r < x.order(); ++r)
    cs.push_back(RatFunc(mpq_class(mpz_class(r % 2 == 1 ? 1 : -1), mpz_class(r))));
  return power_series(y, RatFunc(), cs);
}

Jet jet_sinh(const Jet& x) {
  if (!x.coeff(0).is_zero()) throw std::domain_error("jet_sinh: nonzero constant term");
  std::vector<RatFunc> cs;
  mpz_class fact = 1;
  for (int r = 1; r < x.order(); ++r) {
    fact *= r;
    cs.push_back(r % 2 == 1 ? RatFunc(mpq_class(mpz_class(1), fact)) : RatFunc());
  }
  return power_series(x, RatFunc(), cs);
}

Jet jet_cosh(const Jet& x) {
  if (!x.coeff(0).is_zero()) throw std::domain_error("jet_cosh: nonzero constant term");
  std::vector<RatFunc> cs;
  mpz_class fact = 1;
  for (int r = 1; r < x.order(); ++r) {
    fact *= r;
    cs.push_back(r % 2 == 0 ? RatFunc(mpq_class(mpz_class(1), fact)) : RatFunc());
  }
  return power_series(x, RatFunc(1), cs);
}

}  // namespace braidrep
