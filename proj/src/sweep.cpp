#include "iwahori/sweep.hpp"

namespace iwahori {

SweepMode& sweep_mode() {
  static SweepMode mode = SweepMode::Parallel;
  return mode;
}

}  // namespace iwahori
