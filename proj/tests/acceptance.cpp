#include <iostream>

#include "brauer/verify.hpp"

int main() {
  bool ok = true;
  for (auto& r : brauer::run_acceptance()) {
    std::cout << brauer::format_result(r) << std::endl;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
