// quadratic.hpp
// Self-contained quadratic-field corpus: fundamental discriminants with
// the residue computed exactly from finite character sums, so corpus runs
// need no external data.
//
//   D < 0 : h = (sum_{0<a<|D|/2} chi_D(a)) / (2 - chi_D(2))  for D < -4,
//           kappa = 2 pi h / (w sqrt|D|).
//   D > 0 : kappa = L(1, chi_D)
//                 = -(2/sqrt D) sum_{0<a<D/2} chi_D(a) ln sin(pi a/D).

#pragma once

#include <cstdint>
#include <vector>

#include "kappa/field_store.hpp"

namespace kappa {

// Kronecker symbol (a|n), full generality (n may be zero or negative).
int kronecker_symbol(long long a, long long n);

// All fundamental discriminants D with 3 <= |D| <= max_abs_disc, both
// signs, as validated FieldRecords carrying the exact residue. Records
// come back sorted by |D| then sign, labelled Q(sqrt(d)) with d the
// squarefree kernel; each has its defining polynomial and ramified-prime
// decompositions attached. Deterministic for any thread count.
std::vector<FieldRecord> generate_quadratic_fields(long long max_abs_disc,
                                                   unsigned threads = 0);

// The residue of the quadratic field of fundamental discriminant D, by
// the character formulas above. Exposed for oracle use in tests.
double quadratic_residue(long long D);

// Class number of the imaginary quadratic field of fundamental
// discriminant D < 0 (exact integer).
long long quadratic_class_number(long long D);

bool is_fundamental_discriminant(long long D);

}  // namespace kappa
