#include "spatialdiar/stft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "spatialdiar/geometry.hpp"

namespace spatialdiar {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

std::vector<double> StftConfig::used_bin_freqs() const {
  std::vector<double> freqs(used_bin_count());
  for (int k = 1; k <= used_bin_count(); ++k)
    freqs[k - 1] = static_cast<double>(k) * sample_rate / fft_size;
  return freqs;
}

void StftConfig::validate() const {
  if (sample_rate <= 0) throw std::invalid_argument("sample_rate must be positive");
  if (hop <= 0 || hop > fft_size)
    throw std::invalid_argument("hop must satisfy 0 < hop <= fft_size");
  if (fft_size < 2 || (fft_size & (fft_size - 1)) != 0)
    throw std::invalid_argument("fft_size must be a power of two");
}

struct StftComputer::Plan {
  fftw_plan plan = nullptr;
  double* in = nullptr;
  fftw_complex* out = nullptr;
  int fft_size = 0;

  explicit Plan(int n) : fft_size(n) {
    in = fftw_alloc_real(n);
    out = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(n, in, out, FFTW_ESTIMATE);
    if (!plan) throw std::runtime_error("fftw plan creation failed");
  }
  ~Plan() {
    {
      std::lock_guard<std::mutex> lock(planner_mutex());
      if (plan) fftw_destroy_plan(plan);
    }
    fftw_free(in);
    fftw_free(out);
  }
};

StftComputer::StftComputer(StftConfig cfg) : cfg_(cfg) {
  cfg_.validate();
  window_.resize(cfg_.fft_size);
  for (int i = 0; i < cfg_.fft_size; ++i)
    window_[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * i / cfg_.fft_size);
  plan_ = std::make_unique<Plan>(cfg_.fft_size);
}

StftComputer::~StftComputer() = default;

StftFrames StftComputer::compute(const MultiChannelAudio& audio) const {
  if (audio.channel_count() == 0)
    throw std::invalid_argument("stft needs at least one channel");
  if (audio.sample_rate != cfg_.sample_rate)
    throw std::runtime_error("sample rate mismatch: audio " +
                             std::to_string(audio.sample_rate) + " Hz, config " +
                             std::to_string(cfg_.sample_rate) + " Hz");
  const std::size_t len = audio.sample_count();
  for (const auto& ch : audio.channels)
    if (ch.size() != len) throw std::invalid_argument("channel lengths differ");
  if (len < static_cast<std::size_t>(cfg_.fft_size))
    throw std::runtime_error("input too short");

  const int frames =
      static_cast<int>((len - cfg_.fft_size) / cfg_.hop) + 1;
  const int bins = cfg_.used_bin_count();

  StftFrames out;
  out.config = cfg_;
  out.channels = audio.channel_count();
  out.frame_count = frames;
  out.values.resize(static_cast<std::size_t>(out.channels) * frames * bins);

  for (int c = 0; c < out.channels; ++c) {
    const double* x = audio.channels[c].data();
    for (int n = 0; n < frames; ++n) {
      const double* seg = x + static_cast<std::size_t>(n) * cfg_.hop;
      for (int i = 0; i < cfg_.fft_size; ++i) plan_->in[i] = seg[i] * window_[i];
      fftw_execute_dft_r2c(plan_->plan, plan_->in, plan_->out);
      std::complex<double>* dst = out.frame(c, n);
      for (int k = 1; k <= bins; ++k)
        dst[k - 1] = {plan_->out[k][0], plan_->out[k][1]};
    }
  }
  return out;
}

StftFrames stft(const MultiChannelAudio& audio, const StftConfig& cfg) {
  return StftComputer(cfg).compute(audio);
}

}  // namespace spatialdiar
