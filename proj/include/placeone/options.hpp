#pragma once

#include "placeone/tower.hpp"

namespace placeone {

/// Knobs shared by the analysis entry points.
struct EngineOptions {
  TowerLimits limits;
  int trunc_start = 16;
  unsigned seed = 0;
};

}  // namespace placeone
