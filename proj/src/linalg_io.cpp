#include "braidrep/linalg_io.hpp"

#include <random>

#include "json.hpp"

namespace braidrep {

SparseMat<RatFunc> eval_matrix(const SparseMat<RatFunc>& a, const mpq_class& x) {
  SparseMat<RatFunc> r(a.rows(), a.cols());
  for (const auto& [i, row] : a.data())
    for (const auto& [j, v] : row) r.set(i, j, RatFunc(v.eval(x)));
  return r;
}

bool probably_equal(const SparseMat<RatFunc>& a, const SparseMat<RatFunc>& b, int trials,
                    uint64_t seed) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  SparseMat<RatFunc> d = a - b;
  if (d.is_zero()) return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-997, 997);
  std::uniform_int_distribution<int> den(1, 97);
  for (int t = 0; t < trials; ++t) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 64) throw std::runtime_error("probably_equal: cannot avoid poles");
      mpq_class x(num(rng), den(rng));
      x.canonicalize();
      bool pole = false;
      for (const auto& [i, row] : d.data()) {
        for (const auto& [j, v] : row)
          if (v.has_pole_at(x)) {
            pole = true;
            break;
          }
        if (pole) break;
      }
      if (pole) continue;
      for (const auto& [i, row] : d.data())
        for (const auto& [j, v] : row)
          if (v.eval(x) != 0) return false;
      break;
    }
  }
  return true;
}

std::string matrix_to_json(const SparseMat<RatFunc>& a, const std::string& var) {
  nlohmann::ordered_json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [r, row] : a.data())
    for (const auto& [c, v] : row)
      entries.push_back(nlohmann::ordered_json::array({r, c, v.to_string(var)}));
  j["entries"] = entries;
  return j.dump(2);
}

SparseMat<RatFunc> matrix_from_json(const std::string& text, const std::string& var) {
  auto j = nlohmann::json::parse(text);
  SparseMat<RatFunc> m(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries"))
    m.set(e.at(0).get<int>(), e.at(1).get<int>(), RatFunc::parse(e.at(2).get<std::string>(), var));
  return m;
}

std::string matrix_to_json(const SparseMat<Jet>& a, const std::string& var) {
  nlohmann::ordered_json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [r, row] : a.data())
    for (const auto& [c, v] : row)
      entries.push_back(nlohmann::ordered_json::array({r, c, v.to_string(var)}));
  j["entries"] = entries;
  return j.dump(2);
}

}  // namespace braidrep
