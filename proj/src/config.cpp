#include "perdoub/config.hpp"

namespace perdoub {

const Defaults& defaults() {
  static const Defaults d{};
  return d;
}

}  // namespace perdoub
