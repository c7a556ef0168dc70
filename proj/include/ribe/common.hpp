#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribe {

using Bytes = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or non-canonical serialized data.
struct FormatError : Error {
  using Error::Error;
};

// All N_max leaves are in use.
struct CapacityError : Error {
  using Error::Error;
};

// Violation of the non-decreasing-time rules for updates/revocations.
struct TimeOrderError : Error {
  using Error::Error;
};

// Request conflicts with previously created state (e.g. share variant).
struct StateError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

inline Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

}  // namespace ribe
