#pragma once

#include "mhopf/coproduct.hpp"

namespace mhopf {

// Counit derived from scalar extraction: E(a)b = m T1^{-1}(a (x) b) must act
// as a scalar for every basis a; the scalars form the functional.
struct Counit {
  LinearFunctional functional;
  enum class From { t1, t4 } provenance = From::t1;
};

// Antipode as a linear bijection of A together with its inverse (derived
// independently from the T4 side).
struct Antipode {
  Matrix map;      // columns are S(e_i)
  Matrix inverse;  // columns are S'(e_i); S' = S^{-1}
};

// Direct T2/T3 matrices reproduced from the one-sided data:
//   T3 = (i (x) S') T1^{-1} (i (x) S)     T2 = (S (x) i) T4^{-1} (S' (x) i)
// The match flags record entry-by-entry equality against the membership-route
// maps, which are computed without ever consulting the antipode.
struct RegularityCertificate {
  Matrix t2, t3;
  bool t2_match = false;
  bool t3_match = false;
};

// Derivations throw DerivationError when a postcondition cannot be
// established ("not-scalar", "counit-mismatch", "membership-failure",
// "inverse-membership-failure", "inverse-mismatch", "direct-mismatch",
// "rank-deficient").

Counit derive_counit_left(const Coproduct& d, const CanonicalOperator& t1);
Counit derive_counit_right(const Coproduct& d, const CanonicalOperator& t4);

CheckResult counit_match(const Counit& left, const Counit& right);
CheckResult counit_identity_t1(const Coproduct& d, const CanonicalOperator& t1,
                               const Counit& eps);
CheckResult counit_identity_t4(const Coproduct& d, const CanonicalOperator& t4,
                               const Counit& eps);
CheckResult counit_homomorphism(const Coproduct& d, const Counit& eps);
// The defining system (eps (x) i)T1(a (x) b) = ab pins the functional down
// uniquely: its coefficient matrix must have a trivial kernel.
CheckResult counit_uniqueness(const Coproduct& d, const CanonicalOperator& t1);

Antipode derive_antipode(const Coproduct& d, const Counit& eps, const CanonicalOperator& t1,
                         const CanonicalOperator& t4);

CheckResult antipode_image_spans(const Coproduct& d, const Antipode& s);  // S(A)A = A

// Cancellation identities, each computed through covered expressions only:
//   t1 route:          sum a1 (x) S(a2)b  agrees with T1^{-1}(a (x) b) under
//                      every covering c, and collapses under m to eps(a)b.
//   t1 swapped route:  m((S (x) i) T1(a (x) b)) = eps(a) b
//   t4 route:          sum S'(a1)c (x) a2 agrees with T4^{-1}(c (x) a), and
//                      collapses under m-op to eps(a)c.
//   t4 swapped route:  m-op((i (x) S') T4(c (x) a)) = eps(a) c
CheckResult antipode_cancellation_t1(const Coproduct& d, const Counit& eps, const Antipode& s,
                                     const CanonicalOperator& t1, const CanonicalOperator& t4);
CheckResult antipode_cancellation_t1_swapped(const Coproduct& d, const Counit& eps,
                                             const Antipode& s, const CanonicalOperator& t1);
CheckResult antipode_cancellation_t4(const Coproduct& d, const Counit& eps, const Antipode& s,
                                     const CanonicalOperator& t1, const CanonicalOperator& t4);
CheckResult antipode_cancellation_t4_swapped(const Coproduct& d, const Counit& eps,
                                             const Antipode& s, const CanonicalOperator& t4);

CheckResult antipode_antihomomorphism(const Coproduct& d, const Antipode& s);
// S(S'(a)c) = S(c)a and S'(S(a)b) = S'(b)a on all basis pairs.
CheckResult antipode_cross_inverse(const Coproduct& d, const Antipode& s);

// D(S(a)b)(1 (x) c) = (S (x) S)(flip D(a)) D(b)(1 (x) c), with the right side
// evaluated through the inverse-map composite on the triple tensor power.
CheckResult antipode_flips_coproduct(const Coproduct& d, const Counit& eps, const Antipode& s,
                                     const CanonicalOperator& t1);

RegularityCertificate complete_to_regular(const Coproduct& d, const Antipode& s,
                                          const CanonicalOperator& t1,
                                          const CanonicalOperator& t4,
                                          const CanonicalOperator& t2_direct,
                                          const CanonicalOperator& t3_direct);

// D(A)(A (x) A) = A (x) A and (A (x) A) D(A) = A (x) A.
CheckResult coproduct_nondegeneracy(const Coproduct& d);

}  // namespace mhopf
