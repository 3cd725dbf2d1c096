#pragma once

#include <string>
#include <vector>

namespace branching::verify {

struct CriterionReport {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string summary;
  std::vector<std::string> details;  // table rows and diagnostics

  std::string status_line() const;
};

CriterionReport criterion_simple_pole();        // 1
CriterionReport criterion_double_pole();        // 2
CriterionReport criterion_planar_singular();    // 3
CriterionReport criterion_branching_hilbert();  // 4
CriterionReport criterion_branching_gl3();      // 5
CriterionReport criterion_no_branching();       // 6
CriterionReport criterion_winding();            // 7
CriterionReport criterion_casimir();            // 8
CriterionReport criterion_eisenstein();         // 9

CriterionReport run_criterion(int id);

/// singular-integrals, planar, branching-hilbert, branching-gl3, no-branching,
/// winding, casimir, eisenstein, all.
const std::vector<std::string>& suite_names();
/// Criterion ids making up a suite; empty for unknown names.
std::vector<int> suite_criteria(const std::string& name);

}  // namespace branching::verify
