#include <cstdlib>
#include <iostream>
#include <string>

#include "tambara/check/acceptance.hpp"

int main(int argc, char** argv) {
  int threads = 1;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--threads" && i + 1 < argc) threads = std::atoi(argv[++i]);
    else if (a == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  bool ok = true;
  for (int id = 1; id <= tambara::check::kCriteria; ++id) {
    if (only && id != only) continue;
    auto r = tambara::check::run_criterion(id, threads);
    std::cout << tambara::check::format_result(r) << std::endl;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
