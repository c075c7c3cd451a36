#include "braidrep/uqsl2.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace braidrep {

Rat s_pow(int n) { return RatFunc::var_pow(n); }
Rat q_pow(int n) { return RatFunc::var_pow(2 * n); }

Rat qint(int n) {
  if (n < 0) return -qint(-n);
  return (q_pow(n) - q_pow(-n)) / (q_pow(1) - q_pow(-1));
}

Rat qfact(int n) {
  Rat r(1);
  for (int i = 2; i <= n; ++i) r = r * qint(i);
  return r;
}

Mat RepData::K_pow(int e) const {
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, q_pow(e * weights[i]));
  return m;
}

Mat RepData::weight_projector(int w) const {
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i)
    if (weights[i] == w) m.set(i, i, Rat(1));
  return m;
}

Mat RepData::S_E() const { return (K_pow(-1) * E).negated(); }
Mat RepData::S_F() const { return (F * K_pow(1)).negated(); }

Mat RepData::gen(char g) const {
  switch (g) {
    case 'E':
      return E;
    case 'F':
      return F;
    case 'K':
      return K;
    case 'k':
      return K_pow(-1);
    default:
      throw std::invalid_argument("RepData::gen: unknown generator");
  }
}

Mat RepData::gen_word(const std::string& word) const {
  Mat m = Mat::identity(dim);
  for (char g : word) m = m * gen(g);
  return m;
}

Mat RepData::S_gen_word(const std::string& word) const {
  // S is an anti-homomorphism: S(xy) = S(y) S(x).
  Mat m = Mat::identity(dim);
  for (char g : word) {
    Mat sg;
    switch (g) {
      case 'E':
        sg = S_E();
        break;
      case 'F':
        sg = S_F();
        break;
      case 'K':
        sg = K_pow(-1);
        break;
      case 'k':
        sg = K_pow(1);
        break;
      default:
        throw std::invalid_argument("RepData::S_gen_word: unknown generator");
    }
    m = sg * m;
  }
  return m;
}

const RepData& irrep(int m) {
  if (m < 0) throw std::invalid_argument("irrep: negative highest weight");
  static std::map<int, RepData> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  RepData r;
  r.key = "V" + std::to_string(m);
  r.dim = m + 1;
  r.weights.resize(r.dim);
  r.E = Mat(r.dim, r.dim);
  r.F = Mat(r.dim, r.dim);
  r.K = Mat(r.dim, r.dim);
  for (int j = 0; j <= m; ++j) {
    r.weights[j] = m - 2 * j;
    r.K.set(j, j, q_pow(m - 2 * j));
    if (j >= 1) r.E.set(j - 1, j, qint(j));
    if (j < m) r.F.set(j + 1, j, qint(m - j));
  }
  return cache.emplace(m, std::move(r)).first->second;
}

RepData dual_rep(const RepData& a) {
  RepData r;
  r.key = a.key.empty() ? std::string() : a.key + "*";
  r.dim = a.dim;
  r.weights.resize(a.dim);
  for (int i = 0; i < a.dim; ++i) r.weights[i] = -a.weights[i];
  r.E = a.S_E().transposed();
  r.F = a.S_F().transposed();
  r.K = a.K_pow(-1).transposed();
  return r;
}

RepData tensor_rep(const RepData& a, const RepData& b) {
  RepData r;
  r.dim = a.dim * b.dim;
  r.weights.resize(r.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < b.dim; ++j) r.weights[i * b.dim + j] = a.weights[i] + b.weights[j];
  Mat ida = Mat::identity(a.dim), idb = Mat::identity(b.dim);
  r.E = a.E.kron(idb) + a.K.kron(b.E);
  r.F = a.F.kron(b.K_pow(-1)) + ida.kron(b.F);
  r.K = a.K.kron(b.K);
  return r;
}

std::vector<RTerm> rterms(const RepData& a, const RepData& b) {
  std::vector<RTerm> out;
  std::set<int> wa(a.weights.begin(), a.weights.end());
  std::set<int> wb(b.weights.begin(), b.weights.end());
  Rat qm1 = q_pow(1) - q_pow(-1);
  Mat Fn = Mat::identity(a.dim);
  Mat En = Mat::identity(b.dim);
  for (int n = 0;; ++n) {
    if (n > 0) {
      Fn = a.F * Fn;
      En = b.E * En;
      if (Fn.is_zero() || En.is_zero()) break;
    }
    Rat cn = s_pow(n * (n - 1)) * qm1.pow(n) / qfact(n);
    for (int lam : wa)
      for (int mu : wb) out.push_back(RTerm{cn * s_pow(lam * mu), n, lam, mu});
  }
  return out;
}

Mat rterm_plus(const RepData& a, const RTerm& t, bool antipode) {
  Mat Fn = Mat::identity(a.dim);
  for (int i = 0; i < t.n; ++i) Fn = (antipode ? a.S_F() : a.F) * Fn;
  if (antipode) return Fn * a.weight_projector(-t.lam);
  return a.weight_projector(t.lam) * Fn;
}

Mat rterm_minus(const RepData& b, const RTerm& t, bool antipode) {
  Mat En = Mat::identity(b.dim);
  for (int i = 0; i < t.n; ++i) En = (antipode ? b.S_E() : b.E) * En;
  if (antipode) return En * b.weight_projector(-t.mu);
  return b.weight_projector(t.mu) * En;
}

Mat eval_R(const RepData& a, const RepData& b) {
  static std::map<std::pair<std::string, std::string>, Mat> cache;
  static std::mutex mu;
  const bool cacheable = !a.key.empty() && !b.key.empty();
  if (cacheable) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({a.key, b.key});
    if (it != cache.end()) return it->second;
  }
  Mat r(a.dim * b.dim, a.dim * b.dim);
  for (const auto& t : rterms(a, b)) {
    Mat p = rterm_plus(a, t, false);
    if (p.is_zero()) continue;
    Mat m = rterm_minus(b, t, false);
    if (m.is_zero()) continue;
    r = r + p.kron(m).scaled(t.coeff);
  }
  if (cacheable) {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(a.key, b.key), r);
  }
  return r;
}

Mat eval_R_inv(const RepData& a, const RepData& b) { return inverse(eval_R(a, b)); }

Mat flip_mat(int dim_a, int dim_b) {
  Mat m(dim_a * dim_b, dim_a * dim_b);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_b; ++j) m.set(j * dim_a + i, i * dim_b + j, Rat(1));
  return m;
}

Mat braiding(const RepData& a, const RepData& b) {
  return flip_mat(a.dim, b.dim) * eval_R(a, b);
}

Mat double_braiding(const RepData& a, const RepData& b) {
  return braiding(b, a) * braiding(a, b);
}

Mat drinfeld_u(const RepData& v) {
  Mat u(v.dim, v.dim);
  for (const auto& t : rterms(v, v)) {
    if (t.lam != -t.mu) continue;  // P_{-mu} P_lam = 0 otherwise
    Mat sm = rterm_minus(v, t, true);
    if (sm.is_zero()) continue;
    Mat p = rterm_plus(v, t, false);
    if (p.is_zero()) continue;
    u = u + (sm * p).scaled(t.coeff);
  }
  return u;
}

Rat ribbon_scalar(int m) {
  static std::map<int, Rat> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  const RepData& v = irrep(m);
  Mat nu = drinfeld_u(v) * v.K;
  Rat theta = nu.get(0, 0);
  for (int i = 0; i < v.dim; ++i)
    for (int j = 0; j < v.dim; ++j)
      if (nu.get(i, j) != (i == j ? theta : Rat())) {
        throw std::logic_error("ribbon_scalar: u*K is not scalar on V_" + std::to_string(m));
      }
  cache.emplace(m, theta);
  return theta;
}

Mat ev_map(int m) {
  const int d = m + 1;
  Mat e(1, d * d);
  for (int i = 0; i < d; ++i) e.set(0, i * d + i, Rat(1));
  return e;
}

Mat coev_map(int m) {
  const int d = m + 1;
  Mat c(d * d, 1);
  for (int i = 0; i < d; ++i) c.set(i * d + i, 0, Rat(1));
  return c;
}

Mat ev_tilde(int m) {
  const RepData& v = irrep(m);
  const int d = m + 1;
  Mat e(1, d * d);
  for (int i = 0; i < d; ++i) e.set(0, i * d + i, q_pow(-v.weights[i]));
  return e;
}

Mat coev_tilde(int m) {
  const RepData& v = irrep(m);
  const int d = m + 1;
  Mat c(d * d, 1);
  for (int i = 0; i < d; ++i) c.set(i * d + i, 0, q_pow(v.weights[i]));
  return c;
}

int CGPair::index_of(int j) const {
  for (size_t i = 0; i < js.size(); ++i)
    if (js[i] == j) return static_cast<int>(i);
  throw std::invalid_argument("CGPair: no component V_" + std::to_string(j));
}

bool CGPair::has(int j) const {
  return std::find(js.begin(), js.end(), j) != js.end();
}

namespace {

CGPair build_cg_pair(int a, int b) {
  CGPair cg;
  cg.a = a;
  cg.b = b;
  const RepData t = tensor_rep(irrep(a), irrep(b));
  const int dim = t.dim;

  std::vector<Mat> incls;
  for (int j = a + b; j >= std::abs(a - b); j -= 2) {
    // Highest-weight vector of the V_j component: kernel of E restricted to
    // the weight-j subspace (multiplicity-free, so one-dimensional).
    std::vector<int> idx;
    for (int i = 0; i < dim; ++i)
      if (t.weights[i] == j) idx.push_back(i);
    Mat eres(dim, static_cast<int>(idx.size()));
    for (size_t c = 0; c < idx.size(); ++c)
      for (int r = 0; r < dim; ++r) {
        Rat v = t.E.get(r, idx[c]);
        if (!v.is_zero()) eres.set(r, static_cast<int>(c), v);
      }
    auto ker = kernel(eres);
    if (ker.size() != 1)
      throw std::logic_error("cg_pair: component multiplicity is not one");
    std::vector<Rat> hw(dim, Rat());
    for (size_t c = 0; c < idx.size(); ++c) hw[idx[c]] = ker[0][c];
    // Deterministic normalization: first nonzero coordinate equals 1.  For
    // the top component this is the coefficient of v_0 x v_0.
    Rat lead;
    for (const auto& x : hw)
      if (!x.is_zero()) {
        lead = x;
        break;
      }
    Rat leadinv = lead.inverse();
    for (auto& x : hw) x = x * leadinv;

    Mat incl(dim, j + 1);
    std::vector<Rat> col = hw;
    for (int r = 0;; ++r) {
      for (int i = 0; i < dim; ++i)
        if (!col[i].is_zero()) incl.set(i, r, col[i]);
      if (r == j) break;
      col = t.F.apply(col);
      Rat inv = qint(j - r).inverse();
      for (auto& x : col) x = x * inv;
    }
    cg.js.push_back(j);
    incls.push_back(std::move(incl));
  }

  // Projections from the inverse of the assembled change of basis.
  Mat btotal(dim, dim);
  int col0 = 0;
  for (const auto& incl : incls) {
    for (const auto& [r, row] : incl.data())
      for (const auto& [c, v] : row) btotal.set(r, col0 + c, v);
    col0 += incl.cols();
  }
  Mat binv = inverse(btotal);
  int row0 = 0;
  for (size_t i = 0; i < incls.size(); ++i) {
    const int j = cg.js[i];
    Mat proj(j + 1, dim);
    for (int r = 0; r <= j; ++r)
      for (int c = 0; c < dim; ++c) {
        Rat v = binv.get(row0 + r, c);
        if (!v.is_zero()) proj.set(r, c, v);
      }
    row0 += j + 1;
    cg.proj.push_back(std::move(proj));
  }
  cg.incl = std::move(incls);
  return cg;
}

}  // namespace

const CGPair& cg_pair(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("cg_pair: negative weight");
  static std::map<std::pair<int, int>, CGPair> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({a, b});
  if (it != cache.end()) return it->second;
  return cache.emplace(std::make_pair(a, b), build_cg_pair(a, b)).first->second;
}

}  // namespace braidrep
