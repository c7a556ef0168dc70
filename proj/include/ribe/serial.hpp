#pragma once

#include "ribe/common.hpp"

namespace ribe {

class ByteWriter {
 public:
  Bytes take() { return std::move(buf_); }
  const Bytes& data() const { return buf_; }

  void u8(uint8_t v) { buf_.push_back(v); }
  void u16(uint16_t v) {
    for (int i = 0; i < 2; i++) buf_.push_back(uint8_t(v >> (8 * i)));
  }
  void u32(uint32_t v) {
    for (int i = 0; i < 4; i++) buf_.push_back(uint8_t(v >> (8 * i)));
  }
  void u64(uint64_t v) {
    for (int i = 0; i < 8; i++) buf_.push_back(uint8_t(v >> (8 * i)));
  }
  void bytes(ByteSpan b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
  void text(std::string_view s) {
    buf_.insert(buf_.end(), s.begin(), s.end());
  }
  void blob(ByteSpan b) {
    u32(uint32_t(b.size()));
    bytes(b);
  }

 private:
  Bytes buf_;
};

class ByteReader {
 public:
  explicit ByteReader(ByteSpan data) : data_(data) {}

  size_t remaining() const { return data_.size() - pos_; }

  uint8_t u8() { return take(1)[0]; }
  uint16_t u16() { return uint16_t(le(2)); }
  uint32_t u32() { return uint32_t(le(4)); }
  uint64_t u64() { return le(8); }

  ByteSpan bytes(size_t n) { return take(n); }

  Bytes blob() {
    uint32_t n = u32();
    auto b = take(n);
    return Bytes(b.begin(), b.end());
  }

  // consume a '\n'-terminated ASCII line (the artifact header line)
  std::string line(size_t max_len = 256) {
    std::string s;
    while (s.size() < max_len) {
      char c = char(u8());
      if (c == '\n') return s;
      s.push_back(c);
    }
    throw FormatError("unterminated header line");
  }

  void expect_end() const {
    if (pos_ != data_.size()) throw FormatError("trailing bytes");
  }

 private:
  ByteSpan data_;
  size_t pos_ = 0;

  ByteSpan take(size_t n) {
    if (remaining() < n) throw FormatError("truncated input");
    auto s = data_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

  uint64_t le(size_t n) {
    auto b = take(n);
    uint64_t v = 0;
    for (size_t i = n; i-- > 0;) v = (v << 8) | b[i];
    return v;
  }
};

}  // namespace ribe
