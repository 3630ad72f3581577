#pragma once

#include <cstddef>

namespace amg {

/// Size caps. Defaults can be overridden with the environment variables
/// AMG_MAX_GROUP_ORDER, AMG_MAX_WORD_DEGREE, AMG_MAX_TRUNCATION,
/// AMG_MAX_UNKNOWNS and AMG_MAX_TENSOR_DIM.
struct Limits {
  int max_group_order = 24;
  int max_word_degree = 6;
  int max_truncation = 4;
  std::size_t max_unknowns = 8192;
  std::size_t max_tensor_dim = 256;

  /// Defaults overlaid with the environment; read once per call.
  static Limits current();
};

}  // namespace amg
