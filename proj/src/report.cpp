#include "braidrep/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace braidrep {

bool Report::all_pass() const {
  for (const auto& l : lines)
    if (!l.pass && !l.vacuous) return false;
  return true;
}

void Report::add(CheckLine line) { lines.push_back(std::move(line)); }

void Report::merge(const Report& other) {
  for (const auto& l : other.lines) lines.push_back(l);
  for (const auto& [k, v] : other.constants) constants[k] = v;
  for (const auto& [k, v] : other.conventions) conventions[k] = v;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "== " << title << " ==\n";
  for (const auto& [k, v] : conventions) os << "# convention " << k << ": " << v << "\n";
  for (const auto& l : lines) {
    os << std::left << std::setw(44) << l.name << " " << std::setw(26) << l.window << " "
       << (l.vacuous ? "VACUOUS" : (l.pass ? "PASS" : "FAIL")) << "  " << std::fixed
       << std::setprecision(1) << l.ms << " ms";
    if (!l.note.empty()) os << "  [" << l.note << "]";
    os << "\n";
  }
  for (const auto& [k, v] : constants) os << "# measured " << k << " = " << v << "\n";
  os << (all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title;
  j["conventions"] = conventions;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& l : lines) {
    nlohmann::ordered_json e;
    e["name"] = l.name;
    e["window"] = l.window;
    e["status"] = l.vacuous ? "VACUOUS" : (l.pass ? "PASS" : "FAIL");
    e["ms"] = l.ms;
    if (!l.note.empty()) e["note"] = l.note;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["constants"] = constants;
  j["all_pass"] = all_pass();
  return j.dump(2);
}

std::map<std::string, std::string> convention_ledger() {
  return {
      {"comultiplication", "Delta(E)=E x 1 + K x E, Delta(F)=F x K^-1 + 1 x F, Delta(K)=K x K"},
      {"quantum_parameter", "q = s^2"},
      {"R_matrix",
       "q^{H x H/2} . sum_n q^{n(n-1)/2} (q-q^-1)^n/[n]! F^n x E^n; braiding = flip . R"},
      {"ribbon", "u*K with u = sum S(r^-) r^+; theta_m = s^{-m(m+2)}"},
      {"daha_parameters", "(q_D, t_D) = (s, s^2): Hecke roots q_D^-1 t_D = s, -q_D^-1 t_D^-1 = -s^-3"},
      {"layer_storage", "V_m^* x V_m (functional slot major)"},
  };
}

}  // namespace braidrep
