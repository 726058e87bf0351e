#ifndef NCPH_REPORT_HPP
#define NCPH_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace ncph {

// Outcome of an exhaustive check. Failures are content, not exceptions; at
// most 20 are kept.
struct CheckReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string what) {
    if (failures.size() < 20) failures.push_back(std::move(what));
    else if (failures.size() == 20) failures.push_back("...");
  }
  void merge(const CheckReport& other) {
    checked += other.checked;
    for (const auto& f : other.failures) fail(f);
  }
};

}  // namespace ncph

#endif  // NCPH_REPORT_HPP
