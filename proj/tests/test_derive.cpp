#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhopf/derive.hpp"
#include "mhopf/gallery.hpp"
#include "test_oracles.hpp"

using namespace mhopf;

namespace {

struct Derived {
  CanonicalOperator t1, t2, t3, t4;
  Counit eps;
  Antipode s;
};

Derived derive_all(const Coproduct& d) {
  Derived out{canonical_map(d, CanonicalWhich::t1), canonical_map(d, CanonicalWhich::t2),
              canonical_map(d, CanonicalWhich::t3), canonical_map(d, CanonicalWhich::t4),
              {}, {}};
  out.eps = derive_counit_left(d, out.t1);
  out.s = derive_antipode(d, out.eps, out.t1, out.t4);
  return out;
}

}  // namespace

TEST_CASE("counit and antipode of the cyclic group algebras match the closed forms") {
  for (Index k = 2; k <= 8; ++k) {
    const Instance inst = gallery_instance("cyclic-" + std::to_string(k));
    const Derived d = derive_all(inst.coproduct);
    CAPTURE(k);
    CHECK(d.eps.functional.coords == oracles::cyclic_group_epsilon(k));
    CHECK(d.s.map == oracles::cyclic_antipode(k));
    CHECK(d.s.inverse == oracles::cyclic_antipode(k));
    CHECK(counit_uniqueness(inst.coproduct, d.t1).passed());
  }
}

TEST_CASE("counit and antipode of the function algebra match the closed forms") {
  const Instance inst = gallery_instance("fc2-function-algebra");
  const Derived d = derive_all(inst.coproduct);
  CHECK(d.eps.functional.coords == oracles::cyclic_function_epsilon(2));
  CHECK(d.s.map == oracles::cyclic_antipode(2));
}

TEST_CASE("the h4 antipode has order four") {
  const Instance inst = gallery_instance("sweedler-h4");
  const Derived d = derive_all(inst.coproduct);
  CHECK(d.eps.functional.coords == oracles::h4_epsilon());
  CHECK(d.s.map == oracles::h4_antipode());
  CHECK(d.s.inverse == oracles::h4_antipode_inverse());
  const Matrix eye = Matrix::identity(4);
  CHECK(d.s.map * d.s.inverse == eye);
  CHECK(d.s.inverse * d.s.map == eye);
  CHECK(d.s.map * d.s.map != eye);
  CHECK(d.s.map * d.s.map * d.s.map * d.s.map == eye);
}

TEST_CASE("both counit routes agree and satisfy their identities") {
  for (const std::string name :
       {"qc2-group-algebra", "fc2-function-algebra", "cyclic-6", "sweedler-h4"}) {
    const Instance inst = gallery_instance(name);
    const Derived d = derive_all(inst.coproduct);
    const Counit right = derive_counit_right(inst.coproduct, d.t4);
    CAPTURE(name);
    CHECK(counit_match(d.eps, right).passed());
    CHECK(counit_identity_t1(inst.coproduct, d.t1, d.eps).passed());
    CHECK(counit_identity_t4(inst.coproduct, d.t4, d.eps).passed());
    CHECK(counit_homomorphism(inst.coproduct, d.eps).passed());
    CHECK(counit_uniqueness(inst.coproduct, d.t1).passed());
  }
}

TEST_CASE("cancellation, antihomomorphism and flip identities hold on the positives") {
  for (const std::string name :
       {"qc2-group-algebra", "fc2-function-algebra", "cyclic-4", "sweedler-h4"}) {
    const Instance inst = gallery_instance(name);
    const Derived d = derive_all(inst.coproduct);
    CAPTURE(name);
    CHECK(antipode_image_spans(inst.coproduct, d.s).passed());
    CHECK(antipode_cancellation_t1(inst.coproduct, d.eps, d.s, d.t1, d.t4).passed());
    CHECK(antipode_cancellation_t1_swapped(inst.coproduct, d.eps, d.s, d.t1).passed());
    CHECK(antipode_cancellation_t4(inst.coproduct, d.eps, d.s, d.t1, d.t4).passed());
    CHECK(antipode_cancellation_t4_swapped(inst.coproduct, d.eps, d.s, d.t4).passed());
    CHECK(antipode_antihomomorphism(inst.coproduct, d.s).passed());
    CHECK(antipode_cross_inverse(inst.coproduct, d.s).passed());
    CHECK(antipode_flips_coproduct(inst.coproduct, d.eps, d.s, d.t1).passed());
  }
}

TEST_CASE("completion reproduces the direct maps entrywise at full rank") {
  for (const std::string name : {"qc2-group-algebra", "cyclic-7", "sweedler-h4"}) {
    const Instance inst = gallery_instance(name);
    const Derived d = derive_all(inst.coproduct);
    const RegularityCertificate cert =
        complete_to_regular(inst.coproduct, d.s, d.t1, d.t4, d.t2, d.t3);
    CAPTURE(name);
    CHECK(cert.t2_match);
    CHECK(cert.t3_match);
    CHECK(cert.t2 == *d.t2.matrix);
    CHECK(cert.t3 == *d.t3.matrix);
    const Index n2 = inst.algebra->dimension() * inst.algebra->dimension();
    CHECK(rank(cert.t2) == n2);
    CHECK(rank(cert.t3) == n2);
  }
}

TEST_CASE("a tampered antipode breaks the completion certificate") {
  const Instance inst = gallery_instance("sweedler-h4");
  const Derived d = derive_all(inst.coproduct);
  Antipode bad = d.s;
  bad.map.set(0, 0, Rational(2));  // no longer the inverse of bad.inverse
  const RegularityCertificate cert =
      complete_to_regular(inst.coproduct, bad, d.t1, d.t4, d.t2, d.t3);
  CHECK_FALSE(cert.t2_match);
}

TEST_CASE("derivation failures carry machine-readable codes") {
  const Instance zero = gallery_instance("zero-coproduct");
  const auto t1 = canonical_map(zero.coproduct, CanonicalWhich::t1);
  CHECK_FALSE(t1.bijective);
  CHECK_THROWS_AS(derive_counit_left(zero.coproduct, t1), DerivationError);
  try {
    derive_counit_left(zero.coproduct, t1);
    FAIL("expected a DerivationError");
  } catch (const DerivationError& e) {
    CHECK(e.code() == "rank-deficient");
  }
}

TEST_CASE("coproduct nondegeneracy verdicts") {
  CHECK(coproduct_nondegeneracy(gallery_instance("sweedler-h4").coproduct).passed());
  const CheckResult zero = coproduct_nondegeneracy(gallery_instance("zero-coproduct").coproduct);
  CHECK(zero.failed());
  REQUIRE(zero.witness.has_value());
  // The coproduct of the collapsed second leg still covers the square: the
  // image of the unit acts as the identity there.
  CHECK(coproduct_nondegeneracy(gallery_instance("broken-t4").coproduct).passed());
}
