#include <iostream>

#include "sheaflab/acceptance.hpp"

int main() {
  auto results = sheaflab::acceptance::run_suite();
  std::cout << sheaflab::acceptance::format_table(results);
  return sheaflab::acceptance::all_passed(results) ? 0 : 1;
}
