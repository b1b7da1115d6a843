#pragma once

#include <string>
#include <vector>

namespace hilbeq::acceptance {

/// Full runs every criterion at its stated size; quick shrinks sample counts.
enum class Level { Quick, Full };

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

CriterionResult run_a1(Level level);  // equations vs oracle on a t+2 corpus
CriterionResult run_a2(Level level);  // R = r-1 sharpness witness
CriterionResult run_a3(Level level);  // Hilb^1(P^1) conic
CriterionResult run_a4(Level level);  // constant polynomial 2 on P^2
CriterionResult run_a5(Level level);  // p(R+1) = p(R)^{<R>}
CriterionResult run_a6(Level level);  // Macaulay and Green bounds
CriterionResult run_a7(Level level);  // quiver points
CriterionResult run_a8(Level level);  // conductor rationality
CriterionResult run_a9(Level level);  // small prime fields

/// Runs the criteria whose ids appear in `only` (all when empty), in order.
std::vector<CriterionResult> run_all(Level level, const std::vector<std::string>& only = {});

/// One line per criterion: "A1  PASS  <title>  (<detail>)  1.23s".
std::string format_line(const CriterionResult& r);

}  // namespace hilbeq::acceptance
