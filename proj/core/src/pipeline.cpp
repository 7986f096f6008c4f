#include "mhopf/pipeline.hpp"

#include <chrono>
#include <optional>
#include <utility>

namespace mhopf {

namespace {

class EntrySink {
 public:
  explicit EntrySink(CheckReport& report) : report_(report) {}

  void add(const std::string& name, const CheckResult& result, std::int64_t ms = 0,
           std::optional<std::string> detail = std::nullopt) {
    report_.entries.push_back({name, result.status, result.witness, ms, std::move(detail)});
  }

  void add_skipped(const std::string& name) { add(name, CheckResult::skipped()); }

 private:
  CheckReport& report_;
};

template <typename F>
auto timed(std::int64_t& ms, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                             start)
           .count();
  return result;
}

struct DerivationSource {
  const Coproduct* coproduct = nullptr;
  const CanonicalOperator* t1 = nullptr;
  const CanonicalOperator* t2 = nullptr;
  const CanonicalOperator* t3 = nullptr;
  const CanonicalOperator* t4 = nullptr;
  bool via_opposite = false;
};

const char* const kCounitNames[] = {"counit_scalar_t1", "counit_scalar_t4", "counit_match",
                                    "counit_identity_t1", "counit_identity_t4",
                                    "counit_homomorphism", "counit_uniqueness"};
const char* const kAntipodeNames[] = {
    "antipode_in_algebra",        "antipode_inverse_in_algebra",
    "antipode_bijective",         "antipode_image_spans",
    "antipode_cancellation_t1",   "antipode_cancellation_t1_swapped",
    "antipode_cancellation_t4",   "antipode_cancellation_t4_swapped",
    "antipode_antihomomorphism",  "antipode_cross_inverse",
    "antipode_flips_coproduct",   "completion_t3",
    "completion_t2"};

}  // namespace

CheckReport run_pipeline(const Instance& instance, const PipelineOptions& options) {
  CheckReport report;
  report.instance = instance.name;
  report.dimension = instance.algebra->dimension();
  EntrySink sink(report);
  const Coproduct& d = instance.coproduct;

  AxiomRun run;
  for (Index t = 0; t < 4; ++t) {
    run.maps[t].which = static_cast<CanonicalWhich>(t + 1);
    run.regular[t] = CheckResult::skipped();
    run.bijective[t] = CheckResult::skipped();
  }
  run.homomorphism = CheckResult::skipped();
  run.coassoc_left = CheckResult::skipped();
  run.coassoc_right = CheckResult::skipped();
  run.pentagon = CheckResult::skipped();
  run.fullness = CheckResult::skipped();

  std::int64_t ms = 0;
  run.nondegenerate = instance.algebra->nondegenerate();
  sink.add("nondegenerate", run.nondegenerate);
  run.idempotent = instance.algebra->idempotency_check();
  sink.add("idempotent", run.idempotent);

  const bool foundation = run.nondegenerate.passed() && run.idempotent.passed();
  if (foundation) {
    run.homomorphism = timed(ms, [&] { return check_homomorphism(d); });
    sink.add("homomorphism", run.homomorphism, ms);
    std::int64_t map_ms[4] = {};
    for (Index t = 0; t < 4; ++t) {
      run.maps[t] =
          timed(map_ms[t], [&] { return canonical_map(d, static_cast<CanonicalWhich>(t + 1)); });
      run.regular[t] = run.maps[t].regular ? CheckResult::pass()
                                           : CheckResult::fail(*run.maps[t].irregularity);
      if (!run.maps[t].regular) {
        run.bijective[t] = CheckResult::skipped();
      } else if (run.maps[t].bijective) {
        run.bijective[t] = CheckResult::pass();
      } else {
        run.bijective[t] = CheckResult::fail(Witness{{}, *run.maps[t].kernel_vector});
      }
      sink.add("t" + std::to_string(t + 1) + "_regular", run.regular[t], map_ms[t]);
    }
    run.coassoc_left = timed(ms, [&] { return check_coassoc_left(d, run.maps[0], run.maps[3]); });
    sink.add("coassoc_left", run.coassoc_left, ms);
    run.coassoc_right =
        timed(ms, [&] { return check_coassoc_right(d, run.maps[1], run.maps[2]); });
    sink.add("coassoc_right", run.coassoc_right, ms);
    for (Index t = 0; t < 4; ++t) {
      sink.add("t" + std::to_string(t + 1) + "_bijective", run.bijective[t]);
    }
    if (run.homomorphism.passed() && run.maps[0].regular && run.maps[3].regular &&
        run.coassoc_left.passed()) {
      run.pentagon = timed(ms, [&] { return check_pentagon(d, run.maps[0]); });
      sink.add("pentagon", run.pentagon, ms);
    } else {
      sink.add_skipped("pentagon");
    }
    if (run.maps[0].regular && run.maps[3].regular) {
      run.fullness = timed(ms, [&] { return check_fullness(d, run.maps[0], run.maps[3]); });
      sink.add("fullness", run.fullness, ms);
    } else {
      sink.add_skipped("fullness");
    }
  } else {
    sink.add_skipped("homomorphism");
    for (Index t = 0; t < 4; ++t) sink.add_skipped("t" + std::to_string(t + 1) + "_regular");
    sink.add_skipped("coassoc_left");
    sink.add_skipped("coassoc_right");
    for (Index t = 0; t < 4; ++t) sink.add_skipped("t" + std::to_string(t + 1) + "_bijective");
    sink.add_skipped("pentagon");
    sink.add_skipped("fullness");
  }
  finalize_classification(run);
  report.classification = run.classification;

  // Derivation side selection: explicit sides are honored as requested; the
  // default prefers the left structure and falls back to the reduction
  // through the opposite algebra.
  bool attempt_left = false, attempt_right = false;
  switch (options.side) {
    case Side::left:
      attempt_left = run.classification.is_left;
      break;
    case Side::right:
      attempt_right = run.classification.is_right;
      break;
    case Side::both:
      attempt_left = run.classification.is_left;
      attempt_right = !attempt_left && run.classification.is_right;
      break;
  }

  std::optional<Coproduct> reduced;
  std::array<CanonicalOperator, 4> reduced_maps;
  DerivationSource src;
  if (attempt_left) {
    src = {&d, &run.maps[0], &run.maps[1], &run.maps[2], &run.maps[3], false};
  } else if (attempt_right) {
    reduced = d.opposite_reduction();
    for (Index t = 0; t < 4; ++t) {
      reduced_maps[t] = canonical_map(*reduced, static_cast<CanonicalWhich>(t + 1));
    }
    src = {&*reduced, &reduced_maps[0], &reduced_maps[1], &reduced_maps[2], &reduced_maps[3],
           true};
  }

  const std::optional<std::string> via =
      src.via_opposite ? std::optional<std::string>("via opposite reduction") : std::nullopt;

  std::optional<Counit> eps_left, eps_right;
  std::optional<Antipode> antipode;
  if (src.coproduct != nullptr) {
    const Coproduct& dd = *src.coproduct;
    try {
      eps_left = timed(ms, [&] { return derive_counit_left(dd, *src.t1); });
      sink.add("counit_scalar_t1", CheckResult::pass(), ms, via);
    } catch (const DerivationError& e) {
      sink.add("counit_scalar_t1", CheckResult::fail(e.witness()), 0, e.code());
    }
    try {
      eps_right = timed(ms, [&] { return derive_counit_right(dd, *src.t4); });
      sink.add("counit_scalar_t4", CheckResult::pass(), ms, via);
    } catch (const DerivationError& e) {
      sink.add("counit_scalar_t4", CheckResult::fail(e.witness()), 0, e.code());
    }
    bool eps_ok = eps_left && eps_right;
    if (eps_ok) {
      const CheckResult match = counit_match(*eps_left, *eps_right);
      sink.add("counit_match", match, 0, via);
      eps_ok = match.passed();
    } else {
      sink.add_skipped("counit_match");
    }
    if (eps_ok) {
      const Counit& eps = *eps_left;
      sink.add("counit_identity_t1",
               timed(ms, [&] { return counit_identity_t1(dd, *src.t1, eps); }), ms, via);
      sink.add("counit_identity_t4",
               timed(ms, [&] { return counit_identity_t4(dd, *src.t4, eps); }), ms, via);
      sink.add("counit_homomorphism", timed(ms, [&] { return counit_homomorphism(dd, eps); }),
               ms, via);
      sink.add("counit_uniqueness", timed(ms, [&] { return counit_uniqueness(dd, *src.t1); }),
               ms, via);
      try {
        antipode = timed(ms, [&] { return derive_antipode(dd, eps, *src.t1, *src.t4); });
        sink.add("antipode_in_algebra", CheckResult::pass(), ms, via);
        const bool involutive = antipode->map == antipode->inverse;
        sink.add("antipode_inverse_in_algebra", CheckResult::pass(), 0,
                 involutive ? via
                            : std::optional<std::string>(
                                  "inverse differs from the forward map (S squared is not the "
                                  "identity)"));
        sink.add("antipode_bijective", CheckResult::pass(), 0, via);
      } catch (const DerivationError& e) {
        if (e.code() == "inverse-membership-failure") {
          sink.add("antipode_in_algebra", CheckResult::pass(), 0, via);
          sink.add("antipode_inverse_in_algebra", CheckResult::fail(e.witness()), 0, e.code());
          sink.add_skipped("antipode_bijective");
        } else if (e.code() == "inverse-mismatch") {
          sink.add("antipode_in_algebra", CheckResult::pass(), 0, via);
          sink.add("antipode_inverse_in_algebra", CheckResult::pass(), 0, via);
          sink.add("antipode_bijective", CheckResult::fail(e.witness()), 0, e.code());
        } else {
          sink.add("antipode_in_algebra", CheckResult::fail(e.witness()), 0, e.code());
          sink.add_skipped("antipode_inverse_in_algebra");
          sink.add_skipped("antipode_bijective");
        }
      }
      if (antipode) {
        const Antipode& s = *antipode;
        sink.add("antipode_image_spans", timed(ms, [&] { return antipode_image_spans(dd, s); }),
                 ms, via);
        sink.add("antipode_cancellation_t1",
                 timed(ms, [&] { return antipode_cancellation_t1(dd, eps, s, *src.t1, *src.t4); }),
                 ms, via);
        sink.add("antipode_cancellation_t1_swapped",
                 timed(ms, [&] { return antipode_cancellation_t1_swapped(dd, eps, s, *src.t1); }),
                 ms, via);
        sink.add("antipode_cancellation_t4",
                 timed(ms, [&] { return antipode_cancellation_t4(dd, eps, s, *src.t1, *src.t4); }),
                 ms, via);
        sink.add("antipode_cancellation_t4_swapped",
                 timed(ms, [&] { return antipode_cancellation_t4_swapped(dd, eps, s, *src.t4); }),
                 ms, via);
        sink.add("antipode_antihomomorphism",
                 timed(ms, [&] { return antipode_antihomomorphism(dd, s); }), ms, via);
        sink.add("antipode_cross_inverse",
                 timed(ms, [&] { return antipode_cross_inverse(dd, s); }), ms, via);
        sink.add("antipode_flips_coproduct",
                 timed(ms, [&] { return antipode_flips_coproduct(dd, eps, s, *src.t1); }), ms,
                 via);
        try {
          const RegularityCertificate cert = timed(
              ms, [&] { return complete_to_regular(dd, s, *src.t1, *src.t4, *src.t2, *src.t3); });
          sink.add("completion_t3",
                   cert.t3_match ? CheckResult::pass() : CheckResult::fail(Witness{}), ms, via);
          sink.add("completion_t2",
                   cert.t2_match ? CheckResult::pass() : CheckResult::fail(Witness{}), 0, via);
        } catch (const DerivationError& e) {
          sink.add("completion_t3", CheckResult::fail(e.witness()), 0, e.code());
          sink.add("completion_t2", CheckResult::fail(e.witness()), 0, e.code());
        }
      } else {
        for (const char* name : {"antipode_image_spans", "antipode_cancellation_t1",
                                 "antipode_cancellation_t1_swapped", "antipode_cancellation_t4",
                                 "antipode_cancellation_t4_swapped", "antipode_antihomomorphism",
                                 "antipode_cross_inverse", "antipode_flips_coproduct",
                                 "completion_t3", "completion_t2"}) {
          sink.add_skipped(name);
        }
      }
    } else {
      for (const char* name : {"counit_identity_t1", "counit_identity_t4",
                               "counit_homomorphism", "counit_uniqueness"}) {
        sink.add_skipped(name);
      }
      for (const char* name : kAntipodeNames) sink.add_skipped(name);
    }
  } else {
    for (const char* name : kCounitNames) sink.add_skipped(name);
    for (const char* name : kAntipodeNames) sink.add_skipped(name);
  }

  if (foundation) {
    sink.add("coproduct_nondegenerate", timed(ms, [&] { return coproduct_nondegeneracy(d); }),
             ms);
    sink.add("local_units_left", timed(ms, [&] { return local_units_left(*instance.algebra); }),
             ms);
    sink.add("local_units_right",
             timed(ms, [&] { return local_units_right(*instance.algebra); }), ms);
    sink.add("local_units_common",
             timed(ms, [&] { return local_unit_common(*instance.algebra).result; }), ms);
  } else {
    sink.add_skipped("coproduct_nondegenerate");
    sink.add_skipped("local_units_left");
    sink.add_skipped("local_units_right");
    sink.add_skipped("local_units_common");
  }

  if (options.include_derived && eps_left && antipode) {
    report.derived =
        DerivedData{eps_left->functional.coords, antipode->map, antipode->inverse};
  }
  return report;
}

}  // namespace mhopf
