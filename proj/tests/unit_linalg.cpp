#include "doctest.h"

#include <random>

#include "braidrep/linalg_io.hpp"
#include "braidrep/sparse.hpp"

using namespace braidrep;

namespace {
RatFunc s_pow(int k) { return RatFunc::var_pow(k); }
RatFunc rf(long v) { return RatFunc(v); }

SparseMat<RatFunc> diag2(const RatFunc& a, const RatFunc& b) {
  SparseMat<RatFunc> m(2, 2);
  m.set(0, 0, a);
  m.set(1, 1, b);
  return m;
}
}  // namespace

TEST_CASE("kron dimension law and slot convention") {
  SparseMat<RatFunc> a(2, 2), b(3, 3);
  CHECK(a.kron(b).rows() == 6);
  CHECK(a.kron(b).cols() == 6);

  // kron(diag(s,1), diag(1,s)) = diag(s, s^2, 1, s): first factor is the
  // leftmost (most significant) slot.
  SparseMat<RatFunc> k = diag2(s_pow(1), rf(1)).kron(diag2(rf(1), s_pow(1)));
  CHECK(k.get(0, 0) == s_pow(1));
  CHECK(k.get(1, 1) == s_pow(2));
  CHECK(k.get(2, 2) == rf(1));
  CHECK(k.get(3, 3) == s_pow(1));
}

TEST_CASE("compose with identity and shape errors") {
  SparseMat<RatFunc> a(2, 3);
  a.set(0, 1, s_pow(2));
  a.set(1, 2, rf(-3));
  CHECK(SparseMat<RatFunc>::identity(2) * a == a);
  CHECK(a * SparseMat<RatFunc>::identity(3) == a);
  CHECK_THROWS_AS(a * a, std::invalid_argument);
  CHECK_THROWS_AS(a + SparseMat<RatFunc>(3, 2), std::invalid_argument);
}

TEST_CASE("kernel of rank-1 matrix and of identity") {
  SparseMat<RatFunc> m(2, 2);
  m.set(0, 0, rf(1));
  m.set(0, 1, s_pow(1));
  m.set(1, 0, s_pow(1));
  m.set(1, 1, s_pow(2));
  auto basis = kernel(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == -s_pow(1));
  CHECK(basis[0][1] == rf(1));
  for (const auto& v : basis) {
    auto img = m.apply(v);
    for (const auto& x : img) CHECK(x.is_zero());
  }

  CHECK(kernel(SparseMat<RatFunc>::identity(4)).empty());
}

TEST_CASE("kernel count equals cols - rank, cross-checked by evaluation") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 10; ++t) {
    SparseMat<RatFunc> m(4, 5);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) {
        int c = coef(rng);
        int e = std::abs(coef(rng));
        if (c != 0) m.set(i, j, s_pow(e) * rf(c));
      }
    auto basis = kernel(m);
    for (const auto& v : basis) {
      auto img = m.apply(v);
      for (const auto& x : img) CHECK(x.is_zero());
    }
    // rank at a random point is a lower bound for the symbolic rank, and the
    // kernel dimension already gives cols - rank as an upper bound; evaluate
    // and compare.
    SparseMat<RatFunc> me = eval_matrix(m, mpq_class(7, 3));
    auto ebasis = kernel(me);
    CHECK(ebasis.size() <= basis.size() + 0);  // evaluation can only lose rank
    CHECK(5 - static_cast<int>(basis.size()) >= 5 - static_cast<int>(ebasis.size()));
  }
}

TEST_CASE("kron associativity and compose distributes over add") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto rnd = [&](int r, int c) {
    SparseMat<RatFunc> m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        int v = coef(rng);
        if (v) m.set(i, j, s_pow(std::abs(coef(rng))) * rf(v));
      }
    return m;
  };
  for (int t = 0; t < 6; ++t) {
    auto a = rnd(2, 2), b = rnd(2, 3), c = rnd(3, 2);
    CHECK(a.kron(b).kron(c) == a.kron(b.kron(c)));
    auto d = rnd(2, 2);
    CHECK(a * (d + d.scaled(s_pow(1))) == a * d + a * d.scaled(s_pow(1)));
  }
}

TEST_CASE("probably_equal one-sided contract") {
  SparseMat<RatFunc> a(2, 2), b(2, 2);
  a.set(0, 0, s_pow(3) + rf(1));
  b.set(0, 0, s_pow(3) + rf(1));
  CHECK(probably_equal(a, b, 5));

  // difference (s - 7) E_11: any point other than 7 detects it
  SparseMat<RatFunc> c = b;
  c.set(1, 1, s_pow(1) - rf(7));
  CHECK_FALSE(probably_equal(a, c, 3));

  // probabilistic "true" confirmed by the exact path
  CHECK((a == b));
}

TEST_CASE("solve and inverse") {
  SparseMat<RatFunc> m(2, 2);
  m.set(0, 0, s_pow(1));
  m.set(0, 1, rf(1));
  m.set(1, 1, s_pow(-1));
  auto minv = inverse(m);
  CHECK(m * minv == SparseMat<RatFunc>::identity(2));

  std::vector<RatFunc> b{rf(1), rf(2)};
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  auto back = m.apply(*x);
  CHECK(back[0] == b[0]);
  CHECK(back[1] == b[1]);

  // inconsistent system
  SparseMat<RatFunc> sing(2, 1);
  sing.set(0, 0, rf(1));
  sing.set(1, 0, rf(1));
  std::vector<RatFunc> bad{rf(0), rf(1)};
  CHECK(!solve(sing, bad).has_value());
}

TEST_CASE("matrix json round-trip, sorted and stable") {
  SparseMat<RatFunc> m(2, 3);
  m.set(1, 2, s_pow(-2));
  m.set(0, 1, rf(5));
  std::string j = matrix_to_json(m);
  CHECK(matrix_from_json(j) == m);
  CHECK(matrix_to_json(matrix_from_json(j)) == j);
  CHECK(j.find("\"rows\"") < j.find("\"cols\""));
  CHECK(j.find("[\n      0,\n      1") < j.find("[\n      1,\n      2"));
}
