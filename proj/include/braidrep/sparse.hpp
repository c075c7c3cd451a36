#ifndef BRAIDREP_SPARSE_HPP
#define BRAIDREP_SPARSE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "braidrep/jet.hpp"
#include "braidrep/ratfunc.hpp"

namespace braidrep {

// Multiplicative unit of the scalar type; only fields used in eliminations
// (RatFunc) provide one.
template <typename T>
T field_one();
template <>
inline RatFunc field_one<RatFunc>() { return RatFunc(1); }

// Sparse exact matrix over a coefficient ring T (RatFunc or Jet).
// Storage keeps only nonzero entries; every mutation drops entries whose
// canonical form is zero, so equality is syntactic equality of entry maps.
// The default-constructed T is the additive zero.
template <typename T>
class SparseMat {
 public:
  using Rows = std::map<int, std::map<int, T>>;

  SparseMat() : rows_(0), cols_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMat: negative dimension");
  }

  static SparseMat identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, field_one<T>());
    return m;
  }

  static SparseMat identity_like(int n, const T& one) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, one);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rows& data() const { return data_; }

  void set(int r, int c, const T& v) {
    check_index(r, c);
    if (v.is_zero()) {
      auto it = data_.find(r);
      if (it != data_.end()) {
        it->second.erase(c);
        if (it->second.empty()) data_.erase(it);
      }
      return;
    }
    data_[r][c] = v;
  }

  void add_to(int r, int c, const T& v) {
    check_index(r, c);
    if (v.is_zero()) return;
    auto& row = data_[r];
    auto it = row.find(c);
    if (it == row.end()) {
      row.emplace(c, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) {
        row.erase(it);
        if (row.empty()) data_.erase(r);
      }
    }
  }

  T get(int r, int c) const {
    check_index(r, c);
    auto it = data_.find(r);
    if (it == data_.end()) return T();
    auto jt = it->second.find(c);
    return jt == it->second.end() ? T() : jt->second;
  }

  bool is_zero() const { return data_.empty(); }
  size_t nnz() const {
    size_t n = 0;
    for (const auto& [r, row] : data_) n += row.size();
    return n;
  }

  bool operator==(const SparseMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const SparseMat& o) const { return !(*this == o); }

  SparseMat operator+(const SparseMat& o) const {
    require_shape(o.rows_, o.cols_, "add");
    SparseMat r(*this);
    for (const auto& [i, row] : o.data_)
      for (const auto& [j, v] : row) r.add_to(i, j, v);
    return r;
  }

  SparseMat operator-(const SparseMat& o) const { return *this + o.negated(); }

  SparseMat negated() const {
    SparseMat r(rows_, cols_);
    for (const auto& [i, row] : data_)
      for (const auto& [j, v] : row) r.data_[i][j] = -v;
    return r;
  }

  SparseMat scaled(const T& c) const {
    SparseMat r(rows_, cols_);
    if (c.is_zero()) return r;
    for (const auto& [i, row] : data_)
      for (const auto& [j, v] : row) r.set(i, j, v * c);
    return r;
  }

  // Matrix product this * o (operators acting on column vectors).
  SparseMat operator*(const SparseMat& o) const {
    if (cols_ != o.rows_)
      throw std::invalid_argument("SparseMat: shape mismatch in compose");
    SparseMat r(rows_, o.cols_);
    for (const auto& [i, row] : data_) {
      std::map<int, T> acc;
      for (const auto& [k, v] : row) {
        auto it = o.data_.find(k);
        if (it == o.data_.end()) continue;
        for (const auto& [j, w] : it->second) {
          auto jt = acc.find(j);
          if (jt == acc.end())
            acc.emplace(j, v * w);
          else
            jt->second += v * w;
        }
      }
      for (auto& [j, v] : acc)
        if (!v.is_zero()) r.data_[i][j] = std::move(v);
    }
    return r;
  }

  // Kronecker product; the first operand indexes the leftmost tensor slot.
  SparseMat kron(const SparseMat& o) const {
    SparseMat r(rows_ * o.rows_, cols_ * o.cols_);
    for (const auto& [i, row] : data_)
      for (const auto& [j, v] : row)
        for (const auto& [k, orow] : o.data_)
          for (const auto& [l, w] : orow)
            r.set(i * o.rows_ + k, j * o.cols_ + l, v * w);
    return r;
  }

  SparseMat transposed() const {
    SparseMat r(cols_, rows_);
    for (const auto& [i, row] : data_)
      for (const auto& [j, v] : row) r.set(j, i, v);
    return r;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw std::invalid_argument("SparseMat: shape mismatch in apply");
    std::vector<T> y(rows_, T());
    for (const auto& [i, row] : data_)
      for (const auto& [j, v] : row)
        if (!x[j].is_zero()) y[i] += v * x[j];
    return y;
  }

 private:
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("SparseMat: index out of range");
  }
  void require_shape(int r, int c, const char* what) const {
    if (rows_ != r || cols_ != c)
      throw std::invalid_argument(std::string("SparseMat: shape mismatch in ") + what);
  }

  int rows_, cols_;
  Rows data_;
};

namespace detail {

// Reduced row echelon form in place on dense rows over a field T.
// Returns the pivot column of each pivot row, in order.
template <typename T>
std::vector<int> rref(std::vector<std::vector<T>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
    int sel = -1;
    for (int i = row; i < static_cast<int>(m.size()); ++i) {
      if (!m[i][col].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    T inv = m[row][col].inverse();
    for (int j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      T f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(pivots.size(), std::vector<T>(cols, T()));
  return pivots;
}

}  // namespace detail

// Exact basis of the right nullspace {v : a*v = 0}, one vector per free
// column, ordered by ascending free column (canonical since RREF is unique).
template <typename T>
std::vector<std::vector<T>> kernel(const SparseMat<T>& a) {
  std::vector<std::vector<T>> m;
  for (const auto& [i, row] : a.data()) {
    std::vector<T> dense(a.cols(), T());
    for (const auto& [j, v] : row) dense[j] = v;
    m.push_back(std::move(dense));
  }
  std::vector<int> pivots = detail::rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(a.cols(), T());
    v[f] = field_one<T>();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves a*x = b exactly (free variables set to zero); returns nullopt when
// b is outside the column span.
template <typename T>
std::optional<std::vector<T>> solve(const SparseMat<T>& a, const std::vector<T>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve: shape mismatch");
  std::vector<std::vector<T>> m(a.rows(), std::vector<T>(a.cols() + 1, T()));
  for (const auto& [i, row] : a.data())
    for (const auto& [j, v] : row) m[i][j] = v;
  for (int i = 0; i < a.rows(); ++i) m[i][a.cols()] = b[i];
  std::vector<int> pivots = detail::rref(m);
  std::vector<T> x(a.cols(), T());
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;  // inconsistent system
    x[pivots[r]] = m[r][a.cols()];
  }
  std::vector<T> check = a.apply(x);
  for (int i = 0; i < a.rows(); ++i)
    if (!(check[i] - b[i]).is_zero()) return std::nullopt;
  return x;
}

// Embeds a square operator acting on the tensor factors listed in `slots`
// (in that order) into the full tensor product with the given factor
// dimensions, identity elsewhere.
template <typename T>
SparseMat<T> place_op(const std::vector<int>& dims, const std::vector<int>& slots,
                      const SparseMat<T>& op) {
  const int nfac = static_cast<int>(dims.size());
  long total = 1;
  for (int d : dims) total *= d;
  long opdim = 1;
  for (int s : slots) opdim *= dims[s];
  if (op.rows() != opdim || op.cols() != opdim)
    throw std::invalid_argument("place_op: operator does not match slot dimensions");

  std::vector<long> stride(nfac, 1);
  for (int i = nfac - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  std::vector<int> comp;
  for (int i = 0; i < nfac; ++i)
    if (std::find(slots.begin(), slots.end(), i) == slots.end()) comp.push_back(i);
  long ncomp = 1;
  for (int c : comp) ncomp *= dims[c];

  auto slot_indices = [&](long idx) {
    std::vector<int> out(slots.size());
    for (int i = static_cast<int>(slots.size()) - 1; i >= 0; --i) {
      out[i] = static_cast<int>(idx % dims[slots[i]]);
      idx /= dims[slots[i]];
    }
    return out;
  };

  SparseMat<T> r(static_cast<int>(total), static_cast<int>(total));
  for (const auto& [ri, rrow] : op.data()) {
    std::vector<int> rslots = slot_indices(ri);
    for (const auto& [ci, v] : rrow) {
      std::vector<int> cslots = slot_indices(ci);
      for (long e = 0; e < ncomp; ++e) {
        long rem = e;
        long base = 0;
        for (int i = static_cast<int>(comp.size()) - 1; i >= 0; --i) {
          base += stride[comp[i]] * (rem % dims[comp[i]]);
          rem /= dims[comp[i]];
        }
        long rg = base, cg = base;
        for (size_t i = 0; i < slots.size(); ++i) {
          rg += stride[slots[i]] * rslots[i];
          cg += stride[slots[i]] * cslots[i];
        }
        r.set(static_cast<int>(rg), static_cast<int>(cg), v);
      }
    }
  }
  return r;
}

// Exact inverse of a square matrix; throws if singular.
template <typename T>
SparseMat<T> inverse(const SparseMat<T>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  const int n = a.rows();
  std::vector<std::vector<T>> m(n, std::vector<T>(2 * n, T()));
  for (const auto& [i, row] : a.data())
    for (const auto& [j, v] : row) m[i][j] = v;
  for (int i = 0; i < n; ++i) m[i][n + i] = field_one<T>();
  std::vector<int> pivots = detail::rref(m);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw std::domain_error("inverse: singular matrix");
  SparseMat<T> r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!m[i][n + j].is_zero()) r.set(i, j, m[i][n + j]);
  return r;
}

}  // namespace braidrep

#endif
