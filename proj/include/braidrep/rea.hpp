#ifndef BRAIDREP_REA_HPP
#define BRAIDREP_REA_HPP

#include <map>
#include <string>
#include <vector>

#include "braidrep/report.hpp"
#include "braidrep/uqsl2.hpp"

namespace braidrep {

// ---------------------------------------------------------------------------
// The truncated reflection equation algebra A_{<=K} = sum_{m<=K} V_m^* x V_m.
// Layer m is stored functional-slot major: index i*(m+1)+j <-> e_i^* x e_j,
// identified with the matrix coefficient c_{e_i^*, e_j} of V_m.
// ---------------------------------------------------------------------------

inline int layer_dim(int m) { return (m + 1) * (m + 1); }

// Layer m as a module: the functional slot carries the dual action through
// the antipode, the vector slot the plain action; the adjoint action is the
// resulting tensor action.
const RepData& layer_ad_rep(int m);

// Bimodule halves on layer m, as representations of generator words.
Mat act_left(int m, const std::string& word);   // functional slot, through S
Mat act_right(int m, const std::string& word);  // vector slot
Mat ad_action(int m, char gen);

// Which slot of A carries the module action of U in the quantum D-module
// structure (the action the Y-operators braid against).
enum class ModuleSlot { Vector, Functional };
RepData module_slot_rep(int m, ModuleSlot slot);
Mat module_slot_word(int m, const std::string& word, ModuleSlot slot);

// The adjoint-invariant vector of layer m (the quantum character
// sum_i e_i^* x K e_i) and the unit of A (layer 0).
std::vector<Rat> qchar_layer(int m);

// An element of A_{<=K}; absent layers are zero.  `window` is the largest
// layer in which results are unaffected by truncation; multiplying by a
// degree-a coefficient costs a.
struct LayeredElement {
  int K = 0;
  std::map<int, std::vector<Rat>> layers;
  int window = 0;

  static LayeredElement zero(int K);
  static LayeredElement unit(int K);
  static LayeredElement basis(int K, int m, int idx);
  static LayeredElement single(int K, int m, std::vector<Rat> coords);

  bool is_zero() const;
  bool same_layers(const LayeredElement& o) const;

  std::string to_json() const;
  static LayeredElement from_json(const std::string& text);
};

// The block of the braided product mapping a degree-a coefficient against
// layer m into layer j: a matrix (V_j^* x V_j) <- (V_a^* x V_a) x (V_m^* x V_m).
// Built from the R-matrix correction, the plain coefficient product, and the
// Clebsch-Gordan push; cached per (a, m, j).
const Mat& mult_block(int a, int m, int j);

// Braided product of a degree-a coefficient (coords in V_a^* x V_a) with e.
LayeredElement mult_general(int a, const std::vector<Rat>& c, const LayeredElement& e);

// Degree-one case; requires e.window >= 1, else throws (window exhausted).
LayeredElement mult_coeff(const std::vector<Rat>& c, const LayeredElement& e);

// Braided antipode of A restricted to degree-one coefficients, as a 4x4
// matrix on V_1^* x V_1.  Solved exactly from the antipode axioms
// mu(S x id)Delta = mu(id x S)Delta = unit . counit.
const Mat& antipode_coeff_matrix();

// ---------------------------------------------------------------------------
// Ambient vectors V_1^{x n} x A_{<=K} with truncation-exactness tracking, and
// layer-block operators on them.  `floor` is the lowest possibly-contaminated
// layer (INT_MAX when none); `true_support` bounds the support of the
// untruncated computation.
// ---------------------------------------------------------------------------

struct LayerVec {
  int nslots = 0;
  int K = 0;
  std::map<int, std::vector<Rat>> layers;
  int true_support = 0;
  int floor = kNoFloor;

  static constexpr int kNoFloor = 1 << 28;
  int exact_up_to() const { return std::min(K, floor - 1); }
};

struct LayerOp {
  std::string name;
  int xdeg = 0;
  std::map<std::pair<int, int>, Mat> blocks;  // (m_out, m_in) -> matrix

  LayerVec apply(const LayerVec& v) const;
};

// Composes words right-to-left: word.back() is applied first.
LayerVec apply_word(const std::vector<const LayerOp*>& word, const LayerVec& v);

// Equality of two results on all layers both sides hold exactly; reports the
// compared bound through `compared_up_to` when non-null.  Vacuous (no layer
// comparable) counts as equal with compared_up_to = -1.
bool exact_equal(const LayerVec& a, const LayerVec& b, int* compared_up_to = nullptr);

// ---------------------------------------------------------------------------
// Executable checks.
// ---------------------------------------------------------------------------

// Reflection equation L01 R12 L02 R21 = R12 L02 R21 L01 on V x V x A_{<=K}.
// With `mutate_r21_to_r12` the R21 factors are deliberately replaced by R12;
// the check is then expected to fail (negative control).
Report reflection_check(int K, bool mutate_r21_to_r12 = false);

// Commutation rule between the module action of U and multiplication by
// degree-one coefficients, checked as exact matrix identities per generator
// and source layer.
Report dmodule_axiom_check(int K, ModuleSlot slot = ModuleSlot::Vector);

}  // namespace braidrep

#endif
