// Command-line front-end: decide realizability of Gauss paragraphs, compute
// the genus of virtual strings, enumerate word-wise partitions, and fuzz the
// checker against the genus oracle.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gp/checker.hpp"
#include "gp/json_io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitInputError = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gp::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int exit_code(gp::Verdict v) {
  switch (v) {
    case gp::Verdict::pass:
      return kExitPass;
    case gp::Verdict::fail:
      return kExitFail;
    case gp::Verdict::indeterminate:
      return kExitIndeterminate;
  }
  return kExitInputError;
}

const char* verdict_word(gp::Verdict v) {
  switch (v) {
    case gp::Verdict::pass:
      return "realizable";
    case gp::Verdict::fail:
      return "not_realizable";
    case gp::Verdict::indeterminate:
      return "indeterminate";
  }
  return "?";
}

int run_check(const std::string& paragraph_path,
              const std::string& partition_path, bool json_mode,
              std::size_t max_cyclic) {
  const gp::GaussParagraph p = gp::GaussParagraph::parse(slurp(paragraph_path));

  if (!partition_path.empty()) {
    const gp::WordWisePartition P = gp::partition_from_json(
        nlohmann::json::parse(slurp(partition_path)));
    const gp::WordWiseCheck ww = gp::is_word_wise(p, P);
    if (!ww.ok)
      throw gp::Error("partition is not word-wise (" + ww.violated_clause +
                      "): " + ww.detail);
    const gp::DpFamily family = gp::enumerate_Dp(p, max_cyclic);
    const gp::ConditionReport report = gp::check_conditions(p, P, family);
    if (json_mode) {
      nlohmann::json out = {{"schema", gp::kSchema},
                            {"verdict", verdict_word(report.overall)},
                            {"partition", gp::partition_to_json(P)},
                            {"conditions", gp::report_to_json(report)},
                            {"oracle", nullptr}};
      if (report.overall == gp::Verdict::pass) {
        out["oracle"] =
            gp::surface_to_json(gp::genus(gp::construct_from_pair(p, P)));
      }
      std::cout << out.dump() << "\n";
    } else {
      for (size_t k = 0; k < report.conditions.size(); ++k) {
        const gp::ConditionStatus& c = report.conditions[k];
        std::cout << "condition (" << gp::kConditionNames[k] << "): "
                  << (c.verdict == gp::Verdict::pass          ? "pass"
                      : c.verdict == gp::Verdict::fail        ? "fail"
                                                              : "indeterminate");
        if (!c.witness.empty()) std::cout << "  [" << c.witness << "]";
        std::cout << "\n";
      }
      std::cout << "verdict: " << verdict_word(report.overall) << "\n";
    }
    return exit_code(report.overall);
  }

  const gp::RealizabilityResult result = gp::realizable(p, max_cyclic);
  if (json_mode) {
    nlohmann::json out = {{"schema", gp::kSchema},
                          {"verdict", verdict_word(result.verdict)},
                          {"partitions_tried", result.partitions_tried},
                          {"partition", nullptr},
                          {"conditions", nullptr},
                          {"oracle", nullptr}};
    if (!result.reason.empty()) out["reason"] = result.reason;
    if (result.certificate) {
      out["partition"] = gp::partition_to_json(result.certificate->partition);
      out["conditions"] = gp::report_to_json(result.certificate->report);
      out["oracle"] = gp::surface_to_json(result.certificate->oracle);
      out["oracle"]["embedding"] = result.certificate->embedding;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "verdict: " << verdict_word(result.verdict) << "\n";
    if (!result.reason.empty()) std::cout << "reason: " << result.reason << "\n";
    if (result.certificate) {
      std::cout << "partition: "
                << gp::partition_to_json(result.certificate->partition).dump()
                << "\n";
      std::cout << "genus: " << result.certificate->oracle.genus
                << " (boundary components: "
                << result.certificate->oracle.boundary_components << ")\n";
    }
  }
  return exit_code(result.verdict);
}

int run_genus(const std::string& input_path, const std::string& partition_path,
              bool json_mode) {
  const std::string text = slurp(input_path);
  gp::VirtualString alpha = [&] {
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      return gp::vstring_from_json(nlohmann::json::parse(text));
    }
    if (partition_path.empty())
      throw gp::Error("paragraph input needs --partition");
    const gp::GaussParagraph p = gp::GaussParagraph::parse(text);
    const gp::WordWisePartition P = gp::partition_from_json(
        nlohmann::json::parse(slurp(partition_path)));
    return gp::construct_from_pair(p, P);
  }();

  const gp::SurfaceSummary s = gp::genus(alpha);
  if (json_mode) {
    nlohmann::json out = gp::surface_to_json(s);
    out["schema"] = gp::kSchema;
    out["embedding"] =
        s.planar() ? nlohmann::json(gp::trace_boundaries(gp::build_ribbon(alpha)))
                   : nlohmann::json(nullptr);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "boundary components: " << s.boundary_components << "\n"
              << "euler characteristic: " << s.euler_characteristic << "\n"
              << "genus: " << s.genus << "\n"
              << "planar: " << (s.planar() ? "yes" : "no") << "\n";
  }
  return kExitPass;
}

int run_partitions(const std::string& paragraph_path) {
  const gp::GaussParagraph p = gp::GaussParagraph::parse(slurp(paragraph_path));
  gp::for_each_partition(p, [](const gp::WordWisePartition& P) {
    std::cout << gp::partition_to_json(P).dump() << "\n";
    return true;
  });
  return kExitPass;
}

int run_fuzz(std::uint64_t seed, int count, int max_arrows, int max_circles,
             std::size_t max_cyclic, bool json_mode) {
  int agreements = 0;
  int indeterminate = 0;
  std::vector<nlohmann::json> failures;
  for (int case_idx = 0; case_idx < count; ++case_idx) {
    const std::uint64_t case_seed = seed + static_cast<std::uint64_t>(case_idx);
    std::mt19937_64 rng(case_seed);
    const gp::VirtualString alpha =
        gp::random_virtual_string(rng, max_arrows, max_circles);
    const gp::StringCheck check = gp::cross_validate_string(alpha, max_cyclic);
    if (check.agreement == gp::Verdict::pass) {
      ++agreements;
    } else if (check.agreement == gp::Verdict::indeterminate) {
      ++indeterminate;
    } else {
      failures.push_back({{"seed", case_seed},
                          {"string", gp::vstring_to_json(alpha)},
                          {"genus", check.oracle.genus},
                          {"detail", check.detail}});
      if (!json_mode) {
        std::cout << "disagreement at seed " << case_seed << ": "
                  << check.detail << "\n";
      }
    }
  }
  if (json_mode) {
    std::cout << nlohmann::json({{"schema", gp::kSchema},
                                 {"cases", count},
                                 {"agreements", agreements},
                                 {"indeterminate", indeterminate},
                                 {"failures", failures}})
                     .dump()
              << "\n";
  } else {
    std::cout << "agreements: " << agreements << "/" << count;
    if (indeterminate) std::cout << " (indeterminate: " << indeterminate << ")";
    std::cout << "\n";
  }
  return failures.empty() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss paragraph realizability checker"};
  app.require_subcommand(1);

  std::string paragraph_path, partition_path, input_path;
  bool json_mode = false;
  std::size_t max_cyclic = 100000;
  std::uint64_t seed = 1;
  int count = 100, max_arrows = 6, max_circles = 3;

  CLI::App* check = app.add_subcommand(
      "check", "Decide whether a Gauss paragraph is realizable");
  check->add_option("paragraph", paragraph_path, "paragraph file")->required();
  check->add_option("--partition", partition_path,
                    "check this word-wise partition instead of searching");
  check->add_flag("--json", json_mode, "machine-readable output");
  check->add_option("--max-cyclic", max_cyclic,
                    "cap on the cyclic-sequence family");

  CLI::App* genus_cmd = app.add_subcommand(
      "genus", "Genus of a virtual string, or of the string built from a "
               "paragraph and partition");
  genus_cmd->add_option("input", input_path, "string JSON or paragraph file")
      ->required();
  genus_cmd->add_option("--partition", partition_path,
                        "partition file (paragraph input)");
  genus_cmd->add_flag("--json", json_mode, "machine-readable output");

  CLI::App* partitions = app.add_subcommand(
      "partitions", "List word-wise partitions, one JSON object per line");
  partitions->add_option("paragraph", paragraph_path, "paragraph file")
      ->required();

  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "Random strings: checker verdict vs. genus oracle");
  fuzz->add_option("--seed", seed, "base seed");
  fuzz->add_option("--count", count, "number of cases");
  fuzz->add_option("--arrows", max_arrows, "max arrows per string");
  fuzz->add_option("--circles", max_circles, "max circles per string");
  fuzz->add_option("--max-cyclic", max_cyclic,
                   "cap on the cyclic-sequence family");
  fuzz->add_flag("--json", json_mode, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return run_check(paragraph_path, partition_path, json_mode, max_cyclic);
    if (genus_cmd->parsed())
      return run_genus(input_path, partition_path, json_mode);
    if (partitions->parsed()) return run_partitions(paragraph_path);
    if (fuzz->parsed())
      return run_fuzz(seed, count, max_arrows, max_circles, max_cyclic,
                      json_mode);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const gp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
