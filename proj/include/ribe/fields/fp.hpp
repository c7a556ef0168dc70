#pragma once

#include "ribe/fields/bls12_381_params.hpp"
#include "ribe/fields/mont.hpp"

namespace ribe::bls381 {

struct FpParams {
  static constexpr int kLimbs = 6;
  static constexpr bool kSqrtMinus3Mod4 = true;
  static constexpr const uint64_t (&modulus())[6] { return params::kFpModulus; }
  static constexpr const uint64_t (&r1())[6] { return params::kFpR1; }
  static constexpr const uint64_t (&r2())[6] { return params::kFpR2; }
  static constexpr const uint64_t (&shift())[6] { return params::kFpShift384; }
  static constexpr uint64_t inv64() { return params::kFpInv64; }
};

struct FrParams {
  static constexpr int kLimbs = 4;
  static constexpr bool kSqrtMinus3Mod4 = false;
  static constexpr const uint64_t (&modulus())[4] { return params::kFrModulus; }
  static constexpr const uint64_t (&r1())[4] { return params::kFrR1; }
  static constexpr const uint64_t (&r2())[4] { return params::kFrR2; }
  static constexpr const uint64_t (&shift())[4] { return params::kFrShift256; }
  static constexpr uint64_t inv64() { return params::kFrInv64; }
};

using Fp = MontElem<FpParams>;
using Fr = MontElem<FrParams>;

inline constexpr size_t kFpBytes = 48;
inline constexpr size_t kFrBytes = 32;

}  // namespace ribe::bls381
