#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "mhopf/gallery.hpp"
#include "mhopf/groupmodel.hpp"
#include "mhopf/io.hpp"
#include "mhopf/pipeline.hpp"
#include "mhopf/report.hpp"

namespace {

mhopf::Side parse_side(const std::string& side) {
  if (side == "left") return mhopf::Side::left;
  if (side == "right") return mhopf::Side::right;
  if (side == "both") return mhopf::Side::both;
  throw mhopf::InputError("unknown side (expected left, right or both): " + side);
}

void print_report(const mhopf::CheckReport& report, const std::vector<std::string>& labels,
                  const std::string& format) {
  if (format == "json") {
    std::cout << mhopf::serialize_report_json(report, labels);
  } else if (format == "text") {
    std::cout << mhopf::to_text(report, labels);
  } else {
    throw mhopf::InputError("unknown format (expected text or json): " + format);
  }
}

// Compares the pipeline-derived counit and antipode against the group-oracle
// route under the basis dictionary (basis i <-> i-th group element).
mhopf::CheckEntry cross_backend_entry(const mhopf::GroupOracle& g, bool function_model,
                                      mhopf::Index radius, const mhopf::DerivedData& derived) {
  const std::vector<mhopf::Token> elems = g.elements();
  std::map<mhopf::Token, mhopf::Index> index;
  for (mhopf::Index i = 0; i < elems.size(); ++i) index[elems[i]] = i;

  const mhopf::KgDerivation kgd = mhopf::kg_derive(g, radius);
  mhopf::CheckEntry entry;
  entry.check = "cross_backend_agreement";
  entry.status = mhopf::Status::pass;
  entry.detail = function_model ? "pipeline derivation vs generic window derivation"
                                : "pipeline derivation vs group inversion";
  for (mhopf::Index i = 0; i < elems.size(); ++i) {
    const mhopf::Rational expected_eps =
        function_model ? kgd.epsilon.at(elems[i]) : mhopf::Rational(1);
    const mhopf::Token target =
        function_model ? kgd.antipode.at(elems[i]) : g.invert(elems[i]);
    const mhopf::Index target_index = index.at(target);
    bool ok = derived.epsilon[i] == expected_eps;
    for (mhopf::Index r = 0; ok && r < elems.size(); ++r) {
      const mhopf::Rational expected = r == target_index ? 1 : 0;
      ok = derived.antipode.at(r, i) == expected;
    }
    if (!ok) {
      entry.status = mhopf::Status::fail;
      entry.witness = mhopf::Witness{{i}, {}};
      entry.detail = "backends disagree at " + elems[i];
      break;
    }
  }
  return entry;
}

int cmd_check(const std::string& path, const std::string& side, bool derive,
              const std::string& format, mhopf::Index max_dim) {
  const mhopf::Instance instance = mhopf::load_instance_file(path, max_dim);
  mhopf::PipelineOptions options;
  options.side = parse_side(side);
  options.include_derived = derive;
  const mhopf::CheckReport report = mhopf::run_pipeline(instance, options);
  print_report(report, instance.algebra->basis_labels(), format);
  return mhopf::exit_code(report);
}

int cmd_examples_list() {
  for (const mhopf::GalleryEntry& e : mhopf::gallery_entries()) {
    std::cout << e.name << "\n    " << e.summary << "\n    expected: " << e.expected << "\n";
  }
  return 0;
}

int cmd_examples_emit(const std::string& name, const std::string& out) {
  const mhopf::Instance instance = mhopf::gallery_instance(name);
  const std::string text = mhopf::serialize_instance_json(instance);
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out);
  if (!file) throw mhopf::InputError("cannot write to " + out);
  file << text;
  return 0;
}

int cmd_group(const std::string& spec, const std::string& model, mhopf::Index window,
              const std::string& format, bool derive, mhopf::Index max_dim, std::uint64_t seed,
              mhopf::Index samples) {
  const mhopf::OracleRef g = mhopf::parse_group_spec(spec);
  if (model != "kg" && model != "qg") {
    throw mhopf::InputError("unknown model (expected kg or qg): " + model);
  }
  const bool function_model = model == "kg";

  if (!g->is_finite() && !function_model) {
    std::cout << "window-only: the group " << g->name()
              << " is infinite, so its group algebra has no finite basis to verify here.\n"
                 "No global verdict is issued; use --model kg for window-scoped checks.\n";
    return 0;
  }
  if (!g->is_finite()) {
    const mhopf::CheckReport report = mhopf::run_kg_window_suite(g, window, seed, samples);
    print_report(report, {}, format);
    return mhopf::exit_code(report);
  }

  const mhopf::Instance instance = function_model
                                       ? mhopf::function_algebra_instance(g, max_dim)
                                       : mhopf::group_algebra_instance(g, max_dim);
  mhopf::PipelineOptions options;
  options.include_derived = true;
  mhopf::CheckReport report = mhopf::run_pipeline(instance, options);
  if (report.derived) {
    report.entries.push_back(cross_backend_entry(*g, function_model, window, *report.derived));
  } else {
    report.entries.push_back(
        {"cross_backend_agreement", mhopf::Status::skipped, std::nullopt, 0, std::nullopt});
  }
  if (!report.classification.first_failure) {
    for (const mhopf::CheckEntry& e : report.entries) {
      if (e.status == mhopf::Status::fail) {
        report.classification.first_failure = e.check;
        break;
      }
    }
  }
  if (!derive) report.derived.reset();
  print_report(report, instance.algebra->basis_labels(), format);
  return mhopf::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for multiplier Hopf algebra structures"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "verify an instance file");
  std::string check_path;
  std::string check_side = "both";
  bool check_derive = false;
  std::string check_format = "text";
  mhopf::Index check_max_dim = 32;
  check->add_option("file", check_path, "instance JSON file")->required();
  check->add_option("--side", check_side, "which one-sided structure to derive")
      ->check(CLI::IsMember({"left", "right", "both"}));
  check->add_flag("--derive", check_derive, "include the derived counit and antipode");
  check->add_option("--format", check_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--max-dim", check_max_dim, "dimension guard for instances");

  auto* examples = app.add_subcommand("examples", "built-in instance gallery");
  examples->require_subcommand(1);
  auto* list = examples->add_subcommand("list", "list gallery instances");
  auto* emit = examples->add_subcommand("emit", "write a gallery instance as JSON");
  std::string emit_name;
  std::string emit_out;
  emit->add_option("name", emit_name, "gallery instance name")->required();
  emit->add_option("--out", emit_out, "output path (default: stdout)");

  auto* group = app.add_subcommand("group", "verify a group-backed model");
  std::string group_spec;
  std::string group_model;
  mhopf::Index group_window = 10;
  std::string group_format = "text";
  bool group_derive = false;
  mhopf::Index group_max_dim = 32;
  std::uint64_t group_seed = 20260814;
  mhopf::Index group_samples = 500;
  group->add_option("--group", group_spec, "group spec: z, z^d, cyclic:n, cayley:<path>")
      ->required();
  group->add_option("--model", group_model, "kg (function algebra) or qg (group algebra)")
      ->required();
  group->add_option("--window", group_window, "window radius for infinite groups");
  group->add_option("--format", group_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  group->add_flag("--derive", group_derive, "include the derived counit and antipode");
  group->add_option("--max-dim", group_max_dim, "dimension guard for finite groups");
  group->add_option("--seed", group_seed, "seed for the window round-trip samples");
  group->add_option("--samples", group_samples, "number of window round-trip samples");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      return cmd_check(check_path, check_side, check_derive, check_format, check_max_dim);
    }
    if (list->parsed()) return cmd_examples_list();
    if (emit->parsed()) return cmd_examples_emit(emit_name, emit_out);
    if (group->parsed()) {
      return cmd_group(group_spec, group_model, group_window, group_format, group_derive,
                       group_max_dim, group_seed, group_samples);
    }
  } catch (const mhopf::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const mhopf::InfiniteGroupVerdictRefused& e) {
    std::cout << "window-only: " << e.what() << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
