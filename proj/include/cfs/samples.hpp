#pragma once

#include <string>

#include "cfs/types.hpp"

namespace cfs {

/// Built-in benchmark function, id 1..8, with exact derivatives to order 6
/// and a = b = 1. Ids 1-4 are one-dimensional, 5-8 two-dimensional.
struct SampleCase {
  int id = 0;
  bool two_dim = false;
  SeriesKind1D kind1d = SeriesKind1D::FullRange;
  SeriesKind2D kind2d = SeriesKind2D::FullRange;
  FunctionSpec1D f1;
  FunctionSpec2D f2;
  std::string description;
};

SampleCase get_sample(int id);

/// Largest derivative order the built-in samples provide exactly.
inline constexpr int kSampleMaxOrder = 6;

} // namespace cfs
