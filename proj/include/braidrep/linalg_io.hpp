#ifndef BRAIDREP_LINALG_IO_HPP
#define BRAIDREP_LINALG_IO_HPP

#include <cstdint>
#include <string>

#include "braidrep/sparse.hpp"

namespace braidrep {

// Dense evaluation of a RatFunc matrix at a rational point.
// Throws std::domain_error if any entry has a pole there.
SparseMat<RatFunc> eval_matrix(const SparseMat<RatFunc>& a, const mpq_class& x);

// One-sided probabilistic equality: compares a and b at `trials` random
// rational points (poles re-drawn).  A "false" result is always correct; a
// "true" result is correct with overwhelming probability and is confirmable
// by the exact comparison a == b.
bool probably_equal(const SparseMat<RatFunc>& a, const SparseMat<RatFunc>& b, int trials,
                    uint64_t seed = 0x9e3779b97f4a7c15ull);

// JSON in the fixed schema
//   { "rows": r, "cols": c, "entries": [[r, c, "scalar"], ...] }
// with entries sorted lexicographically by (row, col); byte-stable.
std::string matrix_to_json(const SparseMat<RatFunc>& a, const std::string& var = "s");
SparseMat<RatFunc> matrix_from_json(const std::string& text, const std::string& var = "s");

std::string matrix_to_json(const SparseMat<Jet>& a, const std::string& var = "k");

}  // namespace braidrep

#endif
