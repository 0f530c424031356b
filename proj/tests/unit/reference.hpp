#pragma once

// Values produced by tests/oracles/reference_values.py (mpmath, 60 digits).
namespace ref {

inline constexpr double kBinaryEntropy09 = 0.32508297339144824;
inline constexpr double kFInvSqrt2 = 0.8329910613993749;
inline constexpr double kF09 = 0.39703048669174511;
inline constexpr double kG09 = 0.48622296466179228;
inline constexpr double kG08 = 0.65341819479370178;
inline constexpr double kMInf05 = 0.93892254722841641;
inline constexpr double kMInf06 = 0.79118629383967729;
inline constexpr double kPb07At08 = 0.99592726671576064;
inline constexpr double kE1Lower06 = 0.54485484173548773;
inline constexpr double kE1Lower09 = -0.56884030399226904;
inline constexpr double kKkt075 = 0.95142615089634597;
inline constexpr double kKEndpoint05 = 1.718962011097161;
inline constexpr double kCStar = 0.8335565596009647;
inline constexpr double kCDagger = 0.61097377056486769;

struct H1Point {
  double c;
  double value;
  double root;
};

inline constexpr H1Point kH1[] = {
    {0.71, 0.69310867877752692, 0.50474620321272603},
    {0.75, 0.68305758770936797, 0.58421589172035244},
    {0.80, 0.63642217908417652, 0.72360679774997897},
    {0.82, 0.60263210234643103, 0.80521977137859387},
};

}  // namespace ref
