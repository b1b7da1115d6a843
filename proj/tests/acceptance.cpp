#include <cstring>
#include <iostream>
#include <string>

#include "hilbeq/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace hilbeq::acceptance;
  Level level = Level::Full;
  std::vector<std::string> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--level") == 0 && i + 1 < argc) {
      const std::string v = argv[++i];
      if (v != "quick" && v != "full") {
        std::cerr << "unknown level '" << v << "'\n";
        return 2;
      }
      level = v == "quick" ? Level::Quick : Level::Full;
    } else {
      only.emplace_back(argv[i]);
    }
  }
  bool all = true;
  for (const auto& r : run_all(level, only)) {
    std::cout << format_line(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
