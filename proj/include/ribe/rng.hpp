#pragma once

#include <random>

#include "ribe/hash.hpp"

namespace ribe {

// Seedable deterministic random generator (SHA-256 in counter mode). Used
// both as the library's CSPRNG (seeded from the OS) and, seeded explicitly,
// for reproducible test transcripts.
class HashDrbg {
 public:
  explicit HashDrbg(ByteSpan seed) {
    Sha256 h;
    h.update("RIBE:drbg:v1");
    h.update(seed);
    key_ = h.final();
  }

  explicit HashDrbg(uint64_t seed)
      : HashDrbg(ByteSpan(reinterpret_cast<const uint8_t*>(&seed), 8)) {}

  static HashDrbg from_os_entropy() {
    std::random_device rd;
    std::array<uint8_t, 32> seed;
    for (size_t i = 0; i < seed.size(); i += 4) {
      uint32_t w = rd();
      for (int j = 0; j < 4; j++) seed[i + j] = uint8_t(w >> (8 * j));
    }
    return HashDrbg(ByteSpan(seed.data(), seed.size()));
  }

  void fill_bytes(std::span<uint8_t> out) {
    size_t off = 0;
    while (off < out.size()) {
      if (avail_ == 0) refill();
      size_t take = std::min(out.size() - off, avail_);
      std::memcpy(out.data() + off, block_.data() + (block_.size() - avail_),
                  take);
      avail_ -= take;
      off += take;
    }
  }

  uint64_t next_u64() {
    uint8_t b[8];
    fill_bytes(b);
    uint64_t v = 0;
    for (int i = 7; i >= 0; i--) v = (v << 8) | b[i];
    return v;
  }

 private:
  Sha256::Digest key_;
  std::array<uint8_t, 32> block_;
  size_t avail_ = 0;
  uint64_t counter_ = 0;

  void refill() {
    Sha256 h;
    h.update(ByteSpan(key_.data(), key_.size()));
    uint8_t ctr[8];
    for (int i = 0; i < 8; i++) ctr[i] = uint8_t(counter_ >> (8 * i));
    counter_++;
    h.update(ByteSpan(ctr, 8));
    block_ = h.final();
    avail_ = block_.size();
  }
};

}  // namespace ribe
