#ifndef CYCHOM_REPORT_HPP
#define CYCHOM_REPORT_HPP

#include <string>
#include <vector>

namespace cychom {

// One violated identity, located by name and degree (degree -1 when the
// identity is not degreewise).
struct Violation {
  std::string identity;
  int degree = -1;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Coverage bookkeeping for partially verified (bounded) law checks.
  long long checked = 0;
  long long skipped = 0;

  bool ok() const { return violations.empty(); }
  void fail(std::string identity, int degree, std::string detail = "") {
    violations.push_back({std::move(identity), degree, std::move(detail)});
  }
  void merge(const ValidationReport& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    checked += o.checked;
    skipped += o.skipped;
  }
  std::string str() const;
};

// A degreewise quantity that may be a truncation-affected lower bound.
struct Betti {
  int dim = 0;
  bool truncated = false;
  bool operator==(const Betti& o) const { return dim == o.dim && truncated == o.truncated; }
};

}  // namespace cychom

#endif
