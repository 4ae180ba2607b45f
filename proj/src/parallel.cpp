#include "tricert/parallel.hpp"

#include <cstdlib>
#include <string>

namespace tricert {

int resolve_jobs(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("TRICERT_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace tricert
