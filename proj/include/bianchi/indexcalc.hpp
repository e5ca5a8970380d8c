#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bianchi/matgroup.hpp"

namespace bianchi {

// Caps shared by the verification routines. ring_cap bounds quotient-ring
// sizes, tuple_cap bounds the quartic brute-force scan, group_cap bounds
// enumerated group orders.
struct VerifyCaps {
  long ring_cap = QuotientRing::kDefaultCap;
  long tuple_cap = 400000000LL;
  long group_cap = FiniteMatrixGroup::kMaxElements;
};

// Closed form N(I)^3 * prod(1 - N(P)^-2) against the brute-force count.
struct IndexReport {
  Ideal ideal;
  Int closed_form;
  std::optional<Int> oracle;
  FactoredIdeal factors;
  bool match = false;  // true iff oracle present and equal
};

struct SurjectivityReport {
  Ideal ideal;
  Int closed_form;
  long closure_order = 0;
  bool surjective = false;
};

struct FiltrationReport {
  Ideal prime;
  long m = 0;
  long kernel_order = 0;
  Int expected;  // N(P)^3
  long characteristic = 0;
  bool elementary_abelian = false;
  std::vector<std::string> witnesses;
  bool witnesses_generate = false;
  bool ok = false;
};

struct MultiplicativityReport {
  Ideal lhs, rhs, product;
  Int index_lhs, index_rhs, index_product;
  bool multiplicative = false;
  std::optional<Int> oracle;
  bool oracle_match = false;  // true iff oracle absent or equal
  bool ok = false;
};

struct ClosureReport {
  long m = 0, n = 0;
  long ambient_order = 0;
  long closure_order = 0;
  long kernel_order = 0;
  bool equal = false;
};

// N(P)^{3e} (1 - N(P)^-2) for a prime ideal P.
Int local_order(const Ideal& P, long e, const RingSpec& R);

// Rejects the unit ideal. The oracle is filled whenever the quotient ring
// and the quartic scan fit the caps.
IndexReport index_formula(const RingSpec& R, const Ideal& I,
                          const VerifyCaps& caps = {});

// Closure of {S, T_1, T_w} against the closed form.
SurjectivityReport verify_surjectivity(const RingSpec& R, const Ideal& I,
                                       const VerifyCaps& caps = {});

// Kernel of SL(2, O/P^{m+1}) -> SL(2, O/P^m), enumerated directly from
// the N(P)^4 candidate matrices congruent to I mod P^m: order N(P)^3,
// elementary abelian of exponent char, generated by the translation
// witnesses X_i and their S-, T_1 S-conjugates.
FiltrationReport verify_filtration(const RingSpec& R, const Ideal& P, long m,
                                   const VerifyCaps& caps = {});

// Requires A + B = O; the common factor is named when the check fails.
MultiplicativityReport verify_multiplicativity(const RingSpec& R,
                                               const Ideal& A, const Ideal& B,
                                               const VerifyCaps& caps = {});

// In SL(2, O/(mn)): normal closure of {T_1^m, T_w^m} versus the mod-m
// reduction kernel.
ClosureReport verify_wohlfahrt_closure(const RingSpec& R, long m, long n,
                                       const VerifyCaps& caps = {});

}  // namespace bianchi
