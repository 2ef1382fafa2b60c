#ifndef UNICOMP_HAAR_STREAM_H_
#define UNICOMP_HAAR_STREAM_H_

#include <cstdint>

namespace unicomp {

// Counter-based random source. The k-th output of a stream is a pure
// function of (seed, stream_index, k): a SplitMix64 finalizer applied to
// key + (k + 1) * gamma, where key and gamma are derived from the seed and
// stream index. Sequences are identical on every platform.
class HaarStream {
 public:
  HaarStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }
  // Number of 64-bit words consumed so far.
  std::uint64_t position() const { return counter_; }

  std::uint64_t next_u64();
  // 53-bit uniform on [0, 1).
  double next_uniform();
  // 53-bit uniform on (0, 1].
  double next_uniform_open_closed() { return 1.0 - next_uniform(); }

  // Independent child stream with a derived stream index, same seed.
  // substream(i) of the same parent is always the same stream.
  HaarStream substream(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::uint64_t key_;
  std::uint64_t gamma_;
  std::uint64_t counter_ = 0;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

}  // namespace unicomp

#endif  // UNICOMP_HAAR_STREAM_H_
