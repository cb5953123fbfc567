// constants.hpp
// One table for every numeric constant the bound functions depend on.
// Mathematical constants carry >= 30 significant digits (the decimal
// literal rounds to the nearest double; enclose_constant() recovers a
// rigorous bracket). The tuning constants of the explicit bounds live
// here too so audits have a single place to look.

#pragma once

#include "kappa/interval.hpp"

namespace kappa {

// Euler-Mascheroni constant.
inline constexpr double kGamma = 0.577215664901532860606512090082402431;
// exp(gamma) and exp(-gamma).
inline constexpr double kExpGamma = 1.781072417990197985236504103107179549;
inline constexpr double kExpMinusGamma = 0.561459483566885169824143214790880787;
// Riemann zeta at 3/2, 2, 3, 4 (reference values for cross-checks; the
// series evaluator reproduces them).
inline constexpr double kZeta3Half = 2.612375348685488343348567567924071631;
inline constexpr double kZeta2 = 1.644934066848226436472415166646025189;
inline constexpr double kZeta3 = 1.202056903159594285399738161511449991;
inline constexpr double kZeta4 = 1.082323233711138191516003696541167903;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

// --------------------------------------------------------------------
// Tuning constants of the explicit bounds, by role.
// --------------------------------------------------------------------

// Main theorem: exponent constant in both the upper and lower residue
// bounds; 18.3 and 18.5 are the sharper values the two derivations reach
// before rounding up to the single published 19.
inline constexpr double kThmConst = 19.0;
inline constexpr double kThmConstUpperSharp = 18.3;
inline constexpr double kThmConstLowerSharp = 18.5;

// Short-sum theorem, degree term: 3e/(8 pi) + 1.45/ln x. The 1.35 is the
// sharper composite value; 1.45 is the stated one.
inline constexpr double kShortSumDegree = 1.45;
inline constexpr double kShortSumDegreeSharp = 1.35;
// Short-sum theorem, discriminant term: 3e/(4 pi) + 6.01/ln x.
inline constexpr double kShortSumDisc = 6.01;
// F1 residual cap: F1 - 1 - 3/(4 pi) <= 0.54/ln x.
inline constexpr double kF1Residual = 0.54;

// Residue-bound assembly: coefficients multiplying (ln x)^3/sqrt(x) and
// (ln x)^2 ln|D|/sqrt(x) after rounding the short-sum constants.
inline constexpr double kAssembleDegree = 0.44;
inline constexpr double kAssembleDegreeSharp = 0.435;
inline constexpr double kAssembleDisc = 1.11;

// Caps for the three |D| >= 1.6e6 error terms and their total.
inline constexpr double kCapDegree = 18.38;
inline constexpr double kCapDisc = 50.4;
inline constexpr double kCapPsi = 0.06;
inline constexpr double kCapTotal = 69.84;   // 1 + 18.38 + 50.4 + 0.06

// Sigma lower bound: tail coefficients 1.3 (ln x/x term) and the
// 0.8 cap on sum_p ln p/(p(p-1)).
inline constexpr double kSigmaLowerTail = 1.3;
inline constexpr double kLogOverPSquaredCap = 0.8;

// Unconditional comparison bounds.
inline constexpr double kUncondLower = 0.36232;
// Conditional comparison (Pal-Simonic): exponent constant and domain.
inline constexpr double kPalSimConst = 2.475;
inline constexpr double kPalSimMinDisc = 5.4e6;

// Theorem domain thresholds.
inline constexpr double kMinDiscMain = 14.0;      // |D| >= 14
inline constexpr double kShortSumMinX = 5.0e5;    // x >= 5e5
inline constexpr double kDiscLargeRegime = 1.6e6; // |D| >= 1.6e6

inline Interval gamma_interval() { return enclose_constant(kGamma); }
inline Interval exp_minus_gamma_interval() { return enclose_constant(kExpMinusGamma); }
inline Interval zeta3half_interval() { return enclose_constant(kZeta3Half); }
inline Interval pi_interval() { return enclose_constant(kPi); }

}  // namespace kappa
