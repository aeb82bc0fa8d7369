#include <iostream>

#include "wonderlat/acceptance.hpp"

int main() {
  auto results = wlat::run_acceptance(std::cout);
  int failures = 0;
  for (auto& r : results)
    if (!r.pass) ++failures;
  std::cout << (failures == 0 ? "acceptance: all criteria pass"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
