#include "hilbeq/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hilbeq {

unsigned worker_count() {
  unsigned requested = 0;
  if (const char* env = std::getenv("HILBEQ_THREADS")) {
    try {
      requested = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      requested = 0;
    }
  }
  if (requested == 0) requested = std::thread::hardware_concurrency();
  return requested == 0 ? 1 : requested;
}

}  // namespace hilbeq
