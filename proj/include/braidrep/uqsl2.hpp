#ifndef BRAIDREP_UQSL2_HPP
#define BRAIDREP_UQSL2_HPP

#include <string>
#include <vector>

#include "braidrep/sparse.hpp"

namespace braidrep {

using Rat = RatFunc;
using Mat = SparseMat<Rat>;

// The quantum parameter is q = s^2, so that half-integer powers of q (the
// Cartan part of the R-matrix on odd-weight pairs) stay inside Q(s).
Rat s_pow(int n);
Rat q_pow(int n);
Rat qint(int n);   // [n]_q = (q^n - q^{-n})/(q - q^{-1})
Rat qfact(int n);  // [n]_q!

// A finite-dimensional weight representation: integer weight per basis
// vector together with the matrices of the generators.  K acts as q^{w_i}
// on the i-th basis vector.
struct RepData {
  std::string key;  // identifies cached reps; composites may leave it empty
  int dim = 0;
  std::vector<int> weights;
  Mat E, F, K;

  Mat K_pow(int e) const;          // diagonal q^{e*w_i}
  Mat weight_projector(int w) const;
  Mat S_E() const;                 // matrix of S(E) = -K^{-1} E
  Mat S_F() const;                 // matrix of S(F) = -F K
  Mat gen(char g) const;           // 'E', 'F', 'K', 'k' = K^{-1}
  Mat gen_word(const std::string& word) const;  // product of generators
  Mat S_gen_word(const std::string& word) const;  // matrix of S(word)
};

// Irreducible V_m on the weight basis v_0 (highest) .. v_m:
//   E v_j = [j] v_{j-1},  F v_j = [m-j] v_{j+1},  K v_j = q^{m-2j} v_j.
const RepData& irrep(int m);

// Dual module with action (x f)(v) = f(S(x) v) on the dual basis.
RepData dual_rep(const RepData& a);

// Tensor product along Delta(E) = E x 1 + K x E, Delta(F) = F x K^{-1} + 1 x F,
// Delta(K) = K x K; the first factor is the leftmost tensor slot.
RepData tensor_rep(const RepData& a, const RepData& b);

// One term of the universal R-matrix evaluated on a pair of weight reps:
//   R = q^{H x H / 2} * sum_n q^{n(n-1)/2} (q-q^{-1})^n/[n]! F^n x E^n,
// expanded over weight projectors as sum c_n s^{lam*mu} (P_lam F^n)(P_mu E^n).
struct RTerm {
  Rat coeff;
  int n;
  int lam;  // weight projector on the first leg
  int mu;   // weight projector on the second leg
};

std::vector<RTerm> rterms(const RepData& a, const RepData& b);
Mat rterm_plus(const RepData& a, const RTerm& t, bool antipode);
Mat rterm_minus(const RepData& b, const RTerm& t, bool antipode);

Mat eval_R(const RepData& a, const RepData& b);
Mat eval_R_inv(const RepData& a, const RepData& b);

// Permutation V_a x V_b -> V_b x V_a.
Mat flip_mat(int dim_a, int dim_b);

// Braiding sigma_{a,b} = flip . R: V_a x V_b -> V_b x V_a, and the double
// braiding sigma_{b,a} . sigma_{a,b}, an endomorphism of V_a x V_b.
Mat braiding(const RepData& a, const RepData& b);
Mat double_braiding(const RepData& a, const RepData& b);

// Drinfeld element u = sum S(r^-) r^+ evaluated on a rep.
Mat drinfeld_u(const RepData& v);

// Scalar by which the ribbon element u*K acts on V_m (a power of s); the
// opposite ribbon convention uses its inverse.  Computed, not hard-coded.
Rat ribbon_scalar(int m);

// Duality data for V_m.  ev: V_m^* x V_m -> 1 is the natural pairing and
// coev: 1 -> V_m x V_m^* the coevaluation; the pivotal partners ev_tilde:
// V_m x V_m^* -> 1, v x f -> f(K^{-1} v) and coev_tilde: 1 -> V_m^* x V_m,
// 1 -> sum e_i^* x K e_i make the zig-zags close on both sides.
Mat ev_map(int m);
Mat coev_map(int m);
Mat ev_tilde(int m);
Mat coev_tilde(int m);

// Clebsch-Gordan data for the (multiplicity-free) pair V_a x V_b:
// inclusions and projections for each component V_j, j = a+b, a+b-2, ...,
// |a-b|, with proj . incl = Id and the completeness relation
// sum_j incl_j proj_j = Id.  The top inclusion sends the highest-weight
// vector to v_0 x v_0; lower components are normalized so that the first
// nonzero coordinate of the highest-weight vector is 1.
struct CGPair {
  int a = 0, b = 0;
  std::vector<int> js;
  std::vector<Mat> incl;
  std::vector<Mat> proj;

  int index_of(int j) const;
  bool has(int j) const;
};

const CGPair& cg_pair(int a, int b);

}  // namespace braidrep

#endif
