#pragma once

#include <string>
#include <vector>

namespace brauer {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

CheckResult check_round_trip(int max_size, const std::vector<int>& deltas);
CheckResult check_key_lemma(int max_size, const std::vector<int>& deltas);
CheckResult check_king_multiplicity(int max_size, const std::vector<int>& deltas);
CheckResult check_A_delta(int max_size, const std::vector<int>& deltas);
CheckResult check_dimensions(int max_n);
CheckResult check_decomposition(int max_n, const std::vector<int>& deltas);
CheckResult check_restriction(int max_n, const std::vector<int>& deltas);
CheckResult check_generic_relations(int max_n, int samples, unsigned seed = 7);
CheckResult check_specialization(int max_n, const std::vector<int>& deltas);
CheckResult check_diamonds(int max_size, const std::vector<int>& deltas);
CheckResult check_oracle(int max_n_relations, int max_n_assoc, int random_n = 0);

// The full acceptance ranges.
std::vector<CheckResult> run_acceptance();
// Every check restricted to one (n, delta).
std::vector<CheckResult> run_scoped(int n, int delta);

std::string format_result(const CheckResult& r);

}  // namespace brauer
