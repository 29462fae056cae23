#pragma once

#include <cstddef>

namespace perdoub {

// Finite proxies used wherever a statement quantifies over an infinite word.
// All of them are printed by `perdoub verify --show-config` so the horizons
// and windows behind every verdict stay auditable.
struct Defaults {
  std::size_t horizon = 64;               // extendability search depth
  std::size_t slide_horizon = 48;         // horizon for slide-style checks
  std::size_t horizon_step = 16;          // stability re-check increment
  std::size_t factor_window_floor = 4096; // minimum factor-search window in d
  std::size_t factor_window_scale = 32;   // window >= scale * |query|
  std::size_t factor_query_bound = 64;    // max |query| for factor checks
  std::size_t witness_max_image = 8;      // image cap for positive witnesses
  std::size_t witness_window_cap = 8192;  // d-prefix cap for witness search
  std::size_t negative_max_image = 6;     // image cap for negative oracle runs
  std::size_t negative_window = 4096;     // d-prefix for negative oracle runs
  std::size_t enum_bound = 22;            // enumerate_good cap (PERDOUB_MAX_ENUM)
  std::size_t fife_depth_bound = 8;       // accepted_words depth cap
};

const Defaults& defaults();

}  // namespace perdoub
