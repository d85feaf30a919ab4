#include "spinhom/parallel.hpp"

#include <cstdlib>
#include <string>

namespace spinhom {

unsigned thread_count() {
  if (const char* env = std::getenv("SPINHOM_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace spinhom
