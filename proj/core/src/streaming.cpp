#include "spatialdiar/streaming.hpp"

#include <cmath>

namespace spatialdiar {

BlockLayout BlockLayout::from(const BlockConfig& cfg, int sample_rate,
                              long item_hop) {
  if (cfg.l_chunk <= 0.0) throw std::invalid_argument("l_chunk must be positive");
  if (cfg.l_left < 0.0 || cfg.l_right < 0.0)
    throw std::invalid_argument("contexts must be non-negative");
  if (item_hop <= 0) throw std::invalid_argument("item_hop must be positive");

  auto snap = [&](double seconds) {
    return static_cast<long>(
               std::llround(seconds * sample_rate / static_cast<double>(item_hop))) *
           item_hop;
  };
  BlockLayout layout;
  layout.item_hop = item_hop;
  layout.left = snap(cfg.l_left);
  layout.right = snap(cfg.l_right);
  layout.chunk = std::max(item_hop, snap(cfg.l_chunk));
  return layout;
}

}  // namespace spatialdiar
