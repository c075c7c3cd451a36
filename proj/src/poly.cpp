#include "braidrep/poly.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>

namespace braidrep {

namespace {
const mpz_class kZero = 0;
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(long c) : Poly(mpz_class(c)) {}

Poly::Poly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const mpz_class& c, int deg) {
  if (c == 0) return Poly();
  std::vector<mpz_class> v(static_cast<size_t>(deg) + 1, mpz_class(0));
  v[deg] = c;
  return Poly(std::move(v));
}

const mpz_class& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

const mpz_class& Poly::leading() const {
  if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<mpz_class> v(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return Poly(std::move(v));
}

Poly Poly::operator*(const mpz_class& c) const {
  if (c == 0) return Poly();
  Poly r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::domain_error("Poly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<mpz_class> v(coeffs_.size() + k, mpz_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
  return Poly(std::move(v));
}

Poly Poly::div_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("Poly::div_exact: division by zero");
  if (is_zero()) return Poly();
  Poly rem(*this);
  std::vector<mpz_class> q(static_cast<size_t>(degree() - d.degree()) + 1, mpz_class(0));
  if (degree() < d.degree()) throw std::domain_error("Poly::div_exact: not divisible");
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    mpz_class c;
    mpz_class r;
    mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem.leading().get_mpz_t(), d.leading().get_mpz_t());
    if (r != 0) throw std::domain_error("Poly::div_exact: not divisible");
    int k = rem.degree() - d.degree();
    q[k] = c;
    rem = rem - d.shifted(k) * c;
  }
  if (!rem.is_zero()) throw std::domain_error("Poly::div_exact: not divisible");
  return Poly(std::move(q));
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return Poly();
  mpz_class c = content();
  Poly r(*this);
  for (auto& x : r.coeffs_) x /= c;
  return r;
}

mpq_class Poly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + mpq_class(coeffs_[i]);
  }
  acc.canonicalize();
  return acc;
}

Poly pseudo_rem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_rem: division by zero");
  Poly r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    mpz_class lr = r.leading();
    int k = r.degree() - db;
    r = r * b.leading() - b.shifted(k) * lr;
  }
  return r;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  mpz_class cg;
  mpz_class ca = a.content(), cb = b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly x = a.primitive_part();
  Poly y = b.primitive_part();
  // Primitive PRS; entries stay small at the sizes used here.
  while (!y.is_zero()) {
    Poly r = pseudo_rem(x, y);
    x = y;
    y = r.is_zero() ? Poly() : r.primitive_part();
  }
  if (x.leading() < 0) x = -x;
  return x * cg;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i].get_str() << "*" << var << "^" << i;
    first = false;
  }
  return os.str();
}

Poly Poly::parse(const std::string& text, const std::string& var) {
  auto fail = [&]() { throw std::invalid_argument("Poly::parse: bad input: " + text); };
  std::string t;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) fail();
  if (t == "0") return Poly();
  Poly acc;
  size_t pos = 0;
  while (pos < t.size()) {
    size_t next = t.find('+', pos + 1);  // '+' inside a term only as separator
    std::string term = t.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    size_t star = term.find('*');
    if (star == std::string::npos) fail();
    std::string cs = term.substr(0, star);
    std::string rest = term.substr(star + 1);
    if (rest.size() < var.size() + 2 || rest.compare(0, var.size(), var) != 0 ||
        rest[var.size()] != '^')
      fail();
    int deg = std::stoi(rest.substr(var.size() + 1));
    acc = acc + Poly::monomial(mpz_class(cs), deg);
    pos = next == std::string::npos ? t.size() : next + 1;
  }
  return acc;
}

}  // namespace braidrep
