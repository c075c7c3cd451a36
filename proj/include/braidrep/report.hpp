#ifndef BRAIDREP_REPORT_HPP
#define BRAIDREP_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace braidrep {

// One relation or identity check: name, window it ran on, verdict, timing.
struct CheckLine {
  std::string name;
  std::string window;  // human-readable description of the layers compared
  bool pass = false;
  bool vacuous = false;  // nothing to compare (reported, counts as pass)
  std::string note;
  double ms = 0.0;
};

struct Report {
  std::string title;
  std::vector<CheckLine> lines;
  // Measured scalars (exact strings) and the convention ledger, so exported
  // data is self-describing.
  std::map<std::string, std::string> constants;
  std::map<std::string, std::string> conventions;

  bool all_pass() const;
  void add(CheckLine line);
  void merge(const Report& other);

  std::string to_text() const;
  std::string to_json() const;
};

// The fixed convention choices baked into the engine, included in reports.
std::map<std::string, std::string> convention_ledger();

}  // namespace braidrep

#endif
