#include "unicomp/haar_stream.h"

#include <bit>

namespace unicomp {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

HaarStream::HaarStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index) {
  key_ = mix64(seed ^ mix64(stream_index + kGolden));
  // Odd increment; distinct streams walk distinct Weyl sequences.
  gamma_ = mix64(key_ ^ 0xD1B54A32D192ED03ULL) | 1ULL;
  // Same sparse-gamma guard as SplittableRandom.
  if (std::popcount(gamma_ ^ (gamma_ >> 1)) < 24) {
    gamma_ ^= 0xAAAAAAAAAAAAAAAAULL;
  }
}

std::uint64_t HaarStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * gamma_);
}

double HaarStream::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

HaarStream HaarStream::substream(std::uint64_t index) const {
  return HaarStream(seed_, mix64(stream_index_ * kGolden + mix64(index + 1)));
}

}  // namespace unicomp
