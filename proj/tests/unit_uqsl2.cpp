#include "doctest.h"

#include "braidrep/uqsl2.hpp"

using namespace braidrep;

namespace {

Mat delta_op(const RepData& a, const RepData& b, char g) {
  // Co-opposite coproduct matrices on V_a x V_b.
  Mat ida = Mat::identity(a.dim), idb = Mat::identity(b.dim);
  switch (g) {
    case 'E':
      return ida.kron(b.E) + a.E.kron(b.K);
    case 'F':
      return a.K_pow(-1).kron(b.F) + a.F.kron(idb);
    case 'K':
      return a.K.kron(b.K);
    default:
      throw std::invalid_argument("delta_op");
  }
}

}  // namespace

TEST_CASE("irrep satisfies the defining relations") {
  for (int m = 0; m <= 4; ++m) {
    const RepData& v = irrep(m);
    Mat kinv = v.K_pow(-1);
    CHECK(v.K * v.E * kinv == v.E.scaled(q_pow(2)));
    CHECK(v.K * v.F * kinv == v.F.scaled(q_pow(-2)));
    Mat lhs = v.E * v.F - v.F * v.E;
    Mat rhs = (v.K - kinv).scaled((q_pow(1) - q_pow(-1)).inverse());
    CHECK(lhs == rhs);
  }
  const RepData& v1 = irrep(1);
  CHECK(v1.K.get(0, 0) == s_pow(2));
  CHECK(v1.K.get(1, 1) == s_pow(-2));
  const RepData& v0 = irrep(0);
  CHECK(v0.E.is_zero());
  CHECK(v0.F.is_zero());
  CHECK(v0.K == Mat::identity(1));
}

TEST_CASE("quasi-triangularity: R intertwines Delta and Delta-op") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const RepData& va = irrep(a);
      const RepData& vb = irrep(b);
      RepData t = tensor_rep(va, vb);
      Mat r = eval_R(va, vb);
      for (char g : {'E', 'F', 'K'}) {
        CHECK(r * t.gen(g) == delta_op(va, vb, g) * r);
      }
    }
}

TEST_CASE("R on simple vectors") {
  const RepData& v1 = irrep(1);
  Mat r = eval_R(v1, v1);
  CHECK(r.get(0, 0) == s_pow(1));  // highest vector: Cartan factor only
  for (int m = 0; m <= 3; ++m) {
    CHECK(eval_R(irrep(0), irrep(m)) == Mat::identity(m + 1));
    CHECK(eval_R(irrep(m), irrep(0)) == Mat::identity(m + 1));
  }
}

TEST_CASE("(S x id)R is the matrix inverse of R") {
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      const RepData& va = irrep(a);
      const RepData& vb = irrep(b);
      Mat r = eval_R(va, vb);
      Mat s_r(va.dim * vb.dim, va.dim * vb.dim);
      for (const auto& t : rterms(va, vb))
        s_r = s_r + rterm_plus(va, t, true).kron(rterm_minus(vb, t, false)).scaled(t.coeff);
      CHECK(s_r * r == Mat::identity(va.dim * vb.dim));
      CHECK(r * s_r == Mat::identity(va.dim * vb.dim));
    }
}

TEST_CASE("braiding: Hecke quadratic and Yang-Baxter") {
  const RepData& v1 = irrep(1);
  Mat sig = braiding(v1, v1);
  Mat id4 = Mat::identity(4);
  Mat hecke = (sig - id4.scaled(s_pow(1))) * (sig + id4.scaled(s_pow(-3)));
  CHECK(hecke.is_zero());
  CHECK(!(sig - id4.scaled(s_pow(1))).is_zero());
  CHECK(!(sig + id4.scaled(s_pow(-3))).is_zero());

  // braid-form YBE on mixed triples with a,b,c <= 2
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        const RepData &va = irrep(a), &vb = irrep(b), &vc = irrep(c);
        Mat ida = Mat::identity(a + 1), idb = Mat::identity(b + 1), idc = Mat::identity(c + 1);
        Mat lhs = braiding(vb, vc).kron(ida) * idb.kron(braiding(va, vc)) *
                  braiding(va, vb).kron(idc);
        Mat rhs = idc.kron(braiding(va, vb)) * braiding(va, vc).kron(idb) *
                  ida.kron(braiding(vb, vc));
        CHECK(lhs == rhs);
      }

  // sigma_{V0,Vm} is the identity reindexing
  for (int m = 0; m <= 3; ++m)
    CHECK(braiding(irrep(0), irrep(m)) == Mat::identity(m + 1));
}

TEST_CASE("ribbon scalar: computed pattern and unit") {
  CHECK(ribbon_scalar(0) == Rat(1));
  for (int m = 0; m <= 3; ++m) {
    Rat theta = ribbon_scalar(m);
    CHECK(theta == s_pow(-m * (m + 2)));
    CHECK(theta * theta.inverse() == Rat(1));
  }
}

TEST_CASE("double braiding acts on CG components by theta_a theta_b / theta_j") {
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      Mat db = double_braiding(irrep(a), irrep(b));
      const CGPair& cg = cg_pair(a, b);
      for (size_t i = 0; i < cg.js.size(); ++i) {
        int j = cg.js[i];
        Rat expect = ribbon_scalar(a) * ribbon_scalar(b) / ribbon_scalar(j);
        CHECK(db * cg.incl[i] == cg.incl[i].scaled(expect));
      }
    }
}

TEST_CASE("ev/coev are module maps and satisfy the zig-zags") {
  for (int m = 1; m <= 3; ++m) {
    const RepData& v = irrep(m);
    RepData dual = dual_rep(v);
    const int d = m + 1;
    Mat ev = ev_map(m), coev = coev_map(m);

    // module-map property: ev kills E/F actions on V* x V, fixes K
    RepData dv = tensor_rep(dual, v);
    CHECK((ev * dv.E).is_zero());
    CHECK((ev * dv.F).is_zero());
    CHECK(ev * dv.K == ev);
    RepData vd = tensor_rep(v, dual);
    CHECK((vd.E * coev).is_zero());
    CHECK((vd.F * coev).is_zero());
    CHECK(vd.K * coev == coev);

    // zig-zags for the plain pair
    Mat idv = Mat::identity(d);
    Mat z1 = idv.kron(ev) * coev.kron(idv);  // V -> V
    CHECK(z1 == idv);
    Mat z2 = ev.kron(idv) * idv.kron(coev);  // V* -> V*
    CHECK(z2 == idv);

    // pivotal partners close the other zig-zags
    Mat evt = ev_tilde(m), coevt = coev_tilde(m);
    CHECK((evt * vd.E).is_zero());
    CHECK((evt * vd.F).is_zero());
    CHECK((dv.E * coevt).is_zero());
    CHECK((dv.F * coevt).is_zero());
    Mat z3 = evt.kron(idv) * idv.kron(coevt);  // V -> V
    CHECK(z3 == idv);
    Mat z4 = idv.kron(evt) * coevt.kron(idv);  // V* -> V*
    CHECK(z4 == idv);
  }

  // categorical trace of the identity = quantum dimension [2]_q for V_1
  Mat qdim = ev_tilde(1) * coev_map(1);
  CHECK(qdim.get(0, 0) == qint(2));
}

TEST_CASE("Clebsch-Gordan data") {
  // orthogonality, completeness for pairs (m, 1), m <= 8
  for (int m = 0; m <= 8; ++m) {
    const CGPair& cg = cg_pair(m, 1);
    const int dim = (m + 1) * 2;
    Mat sum(dim, dim);
    for (size_t i = 0; i < cg.js.size(); ++i) {
      for (size_t j = 0; j < cg.js.size(); ++j) {
        Mat prod = cg.proj[i] * cg.incl[j];
        if (i == j)
          CHECK(prod == Mat::identity(cg.js[i] + 1));
        else
          CHECK(prod.is_zero());
      }
      sum = sum + cg.incl[i] * cg.proj[i];
    }
    CHECK(sum == Mat::identity(dim));
  }

  // intertwining for a mixed sample of pairs
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 3}, {2, 2}, {4, 1}}) {
    RepData t = tensor_rep(irrep(a), irrep(b));
    const CGPair& cg = cg_pair(a, b);
    for (size_t i = 0; i < cg.js.size(); ++i) {
      const RepData& vj = irrep(cg.js[i]);
      for (char g : {'E', 'F', 'K'}) {
        CHECK(t.gen(g) * cg.incl[i] == cg.incl[i] * vj.gen(g));
        CHECK(cg.proj[i] * t.gen(g) == vj.gen(g) * cg.proj[i]);
      }
    }
  }

  // cg(0): single component, identity reindexing of V_0 x V_1
  const CGPair& cg01 = cg_pair(0, 1);
  REQUIRE(cg01.js.size() == 1);
  CHECK(cg01.incl[0] == Mat::identity(2));

  // the V_0 inclusion in V_1 x V_1 is the q-antisymmetrizer direction
  const CGPair& cg11 = cg_pair(1, 1);
  REQUIRE(cg11.js.size() == 2);
  CHECK(cg11.js[0] == 2);
  CHECK(cg11.js[1] == 0);
  Mat iota0 = cg11.incl[1];
  CHECK(iota0.get(1, 0) == Rat(1));     // v0 x v1
  CHECK(iota0.get(2, 0) == -q_pow(1));  // -q v1 x v0
  CHECK(iota0.get(0, 0).is_zero());
  CHECK(iota0.get(3, 0).is_zero());

  // top normalization: highest-weight vector of V_{m+1} maps to v0 x v0
  for (int m = 1; m <= 4; ++m) {
    const CGPair& cg = cg_pair(m, 1);
    CHECK(cg.incl[0].get(0, 0) == Rat(1));
  }
}

TEST_CASE("double braiding on the top component is the Cartan scalar") {
  for (int m = 1; m <= 2; ++m) {
    Mat db = double_braiding(irrep(m), irrep(m));
    const CGPair& cg = cg_pair(m, m);
    Mat top = cg.incl[0];
    CHECK(db * top == top.scaled(s_pow(2 * m * m)));
  }
}
