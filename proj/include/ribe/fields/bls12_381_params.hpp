// Generated by tools/gen_bls12_381_params.py. Do not edit by hand.
#pragma once

#include <cstdint>

namespace ribe::bls381::params {

inline constexpr int kFpLimbs = 6;
inline constexpr int kFrLimbs = 4;

inline constexpr uint64_t kFpModulus[6] = {0xb9feffffffffaaabull, 0x1eabfffeb153ffffull, 0x6730d2a0f6b0f624ull, 0x64774b84f38512bfull, 0x4b1ba7b6434bacd7ull, 0x1a0111ea397fe69aull};
inline constexpr uint64_t kFpR1[6] = {0x760900000002fffdull, 0xebf4000bc40c0002ull, 0x5f48985753c758baull, 0x77ce585370525745ull, 0x5c071a97a256ec6dull, 0x15f65ec3fa80e493ull};
inline constexpr uint64_t kFpR2[6] = {0xf4df1f341c341746ull, 0x0a76e6a609d104f1ull, 0x8de5476c4c95b6d5ull, 0x67eb88a9939d83c0ull, 0x9a793e85b519952dull, 0x11988fe592cae3aaull};
inline constexpr uint64_t kFpInv64 = 0x89f3fffcfffcfffdull;
inline constexpr uint64_t kFpShift384[6] = {0x760900000002fffdull, 0xebf4000bc40c0002ull, 0x5f48985753c758baull, 0x77ce585370525745ull, 0x5c071a97a256ec6dull, 0x15f65ec3fa80e493ull};

inline constexpr uint64_t kFrModulus[4] = {0xffffffff00000001ull, 0x53bda402fffe5bfeull, 0x3339d80809a1d805ull, 0x73eda753299d7d48ull};
inline constexpr uint64_t kFrR1[4] = {0x00000001fffffffeull, 0x5884b7fa00034802ull, 0x998c4fefecbc4ff5ull, 0x1824b159acc5056full};
inline constexpr uint64_t kFrR2[4] = {0xc999e990f3f29c6dull, 0x2b6cedcb87925c23ull, 0x05d314967254398full, 0x0748d9d99f59ff11ull};
inline constexpr uint64_t kFrInv64 = 0xfffffffeffffffffull;
inline constexpr uint64_t kFrShift256[4] = {0x00000001fffffffeull, 0x5884b7fa00034802ull, 0x998c4fefecbc4ff5ull, 0x1824b159acc5056full};

// Curve parameter z (negative); |z| drives the Miller loop and the
// final-exponentiation chain.
inline constexpr uint64_t kAbsZ = 0xd201000000010000ull;

// Generators (canonical, non-Montgomery residues).
inline constexpr uint64_t kG1GenX[6] = {0xfb3af00adb22c6bbull, 0x6c55e83ff97a1aefull, 0xa14e3a3f171bac58ull, 0xc3688c4f9774b905ull, 0x2695638c4fa9ac0full, 0x17f1d3a73197d794ull};
inline constexpr uint64_t kG1GenY[6] = {0x0caa232946c5e7e1ull, 0xd03cc744a2888ae4ull, 0x00db18cb2c04b3edull, 0xfcf5e095d5d00af6ull, 0xa09e30ed741d8ae4ull, 0x08b3f481e3aaa0f1ull};
inline constexpr uint64_t kG2GenX[2][6] = {{0xd48056c8c121bdb8ull, 0x0bac0326a805bbefull, 0xb4510b647ae3d177ull, 0xc6e47ad4fa403b02ull, 0x260805272dc51051ull, 0x024aa2b2f08f0a91ull}, {0xe5ac7d055d042b7eull, 0x334cf11213945d57ull, 0xb5da61bbdc7f5049ull, 0x596bd0d09920b61aull, 0x7dacd3a088274f65ull, 0x13e02b6052719f60ull}};
inline constexpr uint64_t kG2GenY[2][6] = {{0xe193548608b82801ull, 0x923ac9cc3baca289ull, 0x6d429a695160d12cull, 0xadfd9baa8cbdd3a7ull, 0x8cc9cdc6da2e351aull, 0x0ce5d527727d6e11ull}, {0xaaa9075ff05f79beull, 0x3f370d275cec1da1ull, 0x267492ab572e99abull, 0xcb3e287e85a763afull, 0x32acd2b02bc28b99ull, 0x0606c4a02ea734ccull}};

// gamma1[k-1] = xi^{k(p-1)/6} for k = 1..5, xi = 1 + u.
inline constexpr uint64_t kFrobGamma1[5][2][6] = {
    {{0x8d0775ed92235fb8ull, 0xf67ea53d63e7813dull, 0x7b2443d784bab9c4ull, 0x0fd603fd3cbd5f4full, 0xc231beb4202c0d1full, 0x1904d3bf02bb0667ull}, {0x2cf78a126ddc4af3ull, 0x282d5ac14d6c7ec2ull, 0xec0c8ec971f63c5full, 0x54a14787b6c7b36full, 0x88e9e902231f9fb8ull, 0x00fc3e2b36c4e032ull}},
    {{0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}, {0x8bfd00000000aaacull, 0x409427eb4f49fffdull, 0x897d29650fb85f9bull, 0xaa0d857d89759ad4ull, 0xec02408663d4de85ull, 0x1a0111ea397fe699ull}},
    {{0xc81084fbede3cc09ull, 0xee67992f72ec05f4ull, 0x77f76e17009241c5ull, 0x48395dabc2d3435eull, 0x6831e36d6bd17ffeull, 0x06af0e0437ff400bull}, {0xc81084fbede3cc09ull, 0xee67992f72ec05f4ull, 0x77f76e17009241c5ull, 0x48395dabc2d3435eull, 0x6831e36d6bd17ffeull, 0x06af0e0437ff400bull}},
    {{0x8bfd00000000aaadull, 0x409427eb4f49fffdull, 0x897d29650fb85f9bull, 0xaa0d857d89759ad4ull, 0xec02408663d4de85ull, 0x1a0111ea397fe699ull}, {0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull, 0x0000000000000000ull}},
    {{0x9b18fae980078116ull, 0xc63a3e6e257f8732ull, 0x8beadf4d8e9c0566ull, 0xf39816240c0b8feeull, 0xdf47fa6b48b1e045ull, 0x05b2cfd9013a5fd8ull}, {0x1ee605167ff82995ull, 0x5871c1908bd478cdull, 0xdb45f3536814f0bdull, 0x70df3560e77982d0ull, 0x6bd3ad4afa99cc91ull, 0x144e4211384586c1ull}},
};

// Tonelli-Shanks data for square roots in Fp2: p^2 - 1 = 2^3 * t.
inline constexpr int kFp2TwoAdicity = 3;
inline constexpr uint64_t kFp2TsZ[2][6] = {{0xc81084fbede3cc09ull, 0xee67992f72ec05f4ull, 0x77f76e17009241c5ull, 0x48395dabc2d3435eull, 0x6831e36d6bd17ffeull, 0x06af0e0437ff400bull}, {0xf1ee7b04121bdea2ull, 0x304466cf3e67fa0aull, 0xef396489f61eb45eull, 0x1c3dedd930b1cf60ull, 0xe2e9c448d77a2cd9ull, 0x135203e60180a68eull}};
inline constexpr int kFp2TsTBytes = 95;
// t, big-endian, 759 bits
inline constexpr uint8_t kFp2TsT[95] = {0x54, 0x86, 0xf4, 0x97, 0x18, 0x6b, 0xf8, 0xe9, 0x7a, 0x4f, 0x1d, 0x54, 0x45, 0xe4, 0xbd, 0x3c, 0x5b, 0x92, 0x1c, 0xa1, 0xce, 0x08, 0xd6, 0x8c, 0xdc, 0xb3, 0xc9, 0x26, 0x93, 0xd1, 0x7a, 0x0a, 0x14, 0xc5, 0x9f, 0xa2, 0xdb, 0xb9, 0x4d, 0xde, 0xa6, 0x29, 0x26, 0x61, 0x2f, 0x1d, 0xe0, 0x23, 0xad, 0x0c, 0x33, 0x90, 0xc3, 0x0b, 0x8f, 0x65, 0x25, 0xd0, 0xb5, 0x0e, 0x12, 0x34, 0x09, 0x2c, 0xd7, 0xf2, 0x3d, 0xa7, 0xce, 0x36, 0xe8, 0x62, 0xc5, 0x86, 0x70, 0x6c, 0x42, 0x27, 0x9f, 0xaf, 0x9d, 0xad, 0x63, 0xae, 0xc7, 0x05, 0xd5, 0x64, 0xd5, 0x40, 0x00, 0x03, 0x8e, 0x31, 0xc7};
inline constexpr int kFp2TsTPlus1Half2Bytes = 95;
inline constexpr uint8_t kFp2TsTPlus1Half[95] = {0x2a, 0x43, 0x7a, 0x4b, 0x8c, 0x35, 0xfc, 0x74, 0xbd, 0x27, 0x8e, 0xaa, 0x22, 0xf2, 0x5e, 0x9e, 0x2d, 0xc9, 0x0e, 0x50, 0xe7, 0x04, 0x6b, 0x46, 0x6e, 0x59, 0xe4, 0x93, 0x49, 0xe8, 0xbd, 0x05, 0x0a, 0x62, 0xcf, 0xd1, 0x6d, 0xdc, 0xa6, 0xef, 0x53, 0x14, 0x93, 0x30, 0x97, 0x8e, 0xf0, 0x11, 0xd6, 0x86, 0x19, 0xc8, 0x61, 0x85, 0xc7, 0xb2, 0x92, 0xe8, 0x5a, 0x87, 0x09, 0x1a, 0x04, 0x96, 0x6b, 0xf9, 0x1e, 0xd3, 0xe7, 0x1b, 0x74, 0x31, 0x62, 0xc3, 0x38, 0x36, 0x21, 0x13, 0xcf, 0xd7, 0xce, 0xd6, 0xb1, 0xd7, 0x63, 0x82, 0xea, 0xb2, 0x6a, 0xa0, 0x00, 0x01, 0xc7, 0x18, 0xe4};

}  // namespace ribe::bls381::params
