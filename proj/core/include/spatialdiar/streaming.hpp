#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "spatialdiar/wav.hpp"

namespace spatialdiar {

/// Block-wise sliding-window contexts in seconds. Window w covers
/// [w*l_chunk - l_left, w*l_chunk + l_chunk + l_right); only the chunk
/// region's outputs are emitted, so emissions tile the timeline exactly once
/// and the per-frame latency is l_chunk + l_right.
struct BlockConfig {
  double l_left = 1.6;
  double l_chunk = 0.64;
  double l_right = 0.16;

  double total() const { return l_left + l_chunk + l_right; }
  double latency() const { return l_chunk + l_right; }
};

/// Sample-domain block layout. Region lengths are snapped to multiples of
/// item_hop so chunk boundaries align with the output grid (item i sits at
/// sample i*item_hop).
struct BlockLayout {
  long left = 0;
  long chunk = 0;
  long right = 0;
  long item_hop = 1;

  static BlockLayout from(const BlockConfig& cfg, int sample_rate, long item_hop);
  long window_samples() const { return left + chunk + right; }
};

/// Incremental block-wise executor. Feed audio as it arrives; window w runs
/// as soon as input through sample (w+1)*chunk + right exists (or at EOF),
/// which is what bounds the emission latency.
template <typename Item>
class BlockStreamer {
 public:
  using WindowFn = std::function<std::vector<Item>(const MultiChannelAudio&)>;

  struct Emitted {
    long item_index = 0;        // global: item at sample item_index * item_hop
    long available_samples = 0; // input buffered when this item was emitted
    Item item;
  };

  BlockStreamer(const BlockLayout& layout, int channels, int sample_rate,
                WindowFn process_window)
      : layout_(layout), fn_(std::move(process_window)) {
    if (layout_.chunk <= 0) throw std::invalid_argument("chunk must be positive");
    if (layout_.item_hop <= 0 || layout_.chunk % layout_.item_hop ||
        layout_.left % layout_.item_hop || layout_.right % layout_.item_hop)
      throw std::invalid_argument("block regions must be multiples of item_hop");
    if (channels <= 0) throw std::invalid_argument("channels must be positive");
    buffer_.sample_rate = sample_rate;
    buffer_.channels.assign(channels, {});
  }

  void feed(const MultiChannelAudio& chunk) {
    if (finished_) throw std::logic_error("feed after finish");
    if (chunk.channel_count() != buffer_.channel_count())
      throw std::invalid_argument("channel count changed mid-stream");
    for (int c = 0; c < buffer_.channel_count(); ++c)
      buffer_.channels[c].insert(buffer_.channels[c].end(),
                                 chunk.channels[c].begin(),
                                 chunk.channels[c].end());
    run_ready_windows();
  }

  void finish() {
    finished_ = true;
    run_ready_windows();
  }

  /// Moves out everything emitted since the last drain.
  std::vector<Emitted> drain() { return std::exchange(pending_, {}); }

  long total_items() const {
    // Defined once the stream is finished: items covering [0, len).
    const long len = static_cast<long>(buffer_.sample_count());
    return (len + layout_.item_hop - 1) / layout_.item_hop;
  }

 private:
  bool window_ready(long w) const {
    const long needed = (w + 1) * layout_.chunk + layout_.right;
    return static_cast<long>(buffer_.sample_count()) >= needed;
  }

  void run_ready_windows() {
    const long len = static_cast<long>(buffer_.sample_count());
    while (true) {
      const long w = next_window_;
      const bool in_range = w * layout_.chunk < len;
      if (finished_ && !in_range) break;
      if (!window_ready(w) && !(finished_ && in_range)) break;
      run_window(w);
      ++next_window_;
    }
  }

  void run_window(long w) {
    const long start = w * layout_.chunk - layout_.left;
    const long len = static_cast<long>(buffer_.sample_count());
    MultiChannelAudio window;
    window.sample_rate = buffer_.sample_rate;
    window.channels.assign(buffer_.channel_count(),
                           std::vector<double>(layout_.window_samples(), 0.0));
    for (int c = 0; c < buffer_.channel_count(); ++c) {
      for (long i = 0; i < layout_.window_samples(); ++i) {
        const long src = start + i;
        if (src >= 0 && src < len) window.channels[c][i] = buffer_.channels[c][src];
      }
    }

    std::vector<Item> items = fn_(window);
    const long first_local = layout_.left / layout_.item_hop;
    const long chunk_items = layout_.chunk / layout_.item_hop;
    if (static_cast<long>(items.size()) < first_local + chunk_items)
      throw std::runtime_error("window processor returned too few items");

    const long global_base = (w * layout_.chunk - layout_.left) / layout_.item_hop;
    for (long j = first_local; j < first_local + chunk_items; ++j) {
      const long idx = global_base + j;
      if (idx * layout_.item_hop >= len) break;  // past EOF on the final chunk
      pending_.push_back({idx, len, std::move(items[j])});
    }
  }

  BlockLayout layout_;
  WindowFn fn_;
  MultiChannelAudio buffer_;
  long next_window_ = 0;
  bool finished_ = false;
  std::vector<Emitted> pending_;
};

/// Batch form: feeds the whole recording, finishes, and returns the emitted
/// items in timeline order.
template <typename Item>
std::vector<Item> stream_blocks(
    const MultiChannelAudio& audio, const BlockConfig& cfg, long item_hop,
    const typename BlockStreamer<Item>::WindowFn& process_window) {
  BlockLayout layout = BlockLayout::from(cfg, audio.sample_rate, item_hop);
  BlockStreamer<Item> streamer(layout, audio.channel_count(), audio.sample_rate,
                               process_window);
  streamer.feed(audio);
  streamer.finish();
  std::vector<Item> out;
  for (auto& e : streamer.drain()) out.push_back(std::move(e.item));
  return out;
}

}  // namespace spatialdiar
