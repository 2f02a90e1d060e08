#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bisyz/report.hpp"
#include "bisyz/verify.hpp"

namespace {

using bisyz::BiDegree;

BiDegree parse_degree_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("expected k,k'");
  return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

void print_report(const bisyz::Json& sections) {
  std::cout << bisyz::serialize_report(sections);
}

int run_verify(const std::string& only, const std::string& data_dir,
               bool json) {
  bisyz::VerifyOptions options;
  options.only = only;
  if (!data_dir.empty()) options.data_dir = data_dir;
  const std::vector<bisyz::ClaimResult> results =
      bisyz::run_reference_claims(options);

  if (json) {
    bisyz::Json j;
    bisyz::Json claims = bisyz::Json::array();
    for (const auto& r : results) {
      bisyz::Json c;
      c["id"] = r.id;
      c["description"] = r.description;
      c["pass"] = r.pass;
      c["detail"] = r.detail;
      c["millis"] = static_cast<long long>(r.millis + 0.5);
      claims.push_back(std::move(c));
    }
    j["claims"] = std::move(claims);
    j["all_pass"] = bisyz::all_passed(results);
    print_report(j);
  } else {
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.id.size());
    for (const auto& r : results)
      std::printf("%s  %-*s  %s (%.0f ms)\n", r.pass ? "PASS" : "FAIL",
                  static_cast<int>(width), r.id.c_str(), r.detail.c_str(),
                  r.millis);
    std::printf("%zu/%zu checks passed\n",
                static_cast<std::size_t>(
                    std::count_if(results.begin(), results.end(),
                                  [](const auto& r) { return r.pass; })),
                results.size());
  }
  if (results.empty()) {
    std::cerr << "no checks matched the requested id\n";
    return 1;
  }
  return bisyz::all_passed(results) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "bisyz: syzygies, saturations, Hilbert functions and base-point "
      "invariants for bihomogeneous ideals on P1xP1"};
  app.require_subcommand(1);

  std::string path, point_text, syzygy_text, at_text, only, data_dir;
  std::string max_degree_text = "9,9";
  bool json_flag = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", path, "ideal file")->required();
    cmd->add_flag("--json", json_flag, "emit JSON (the default for analyses)");
  };

  CLI::App* basepoints = app.add_subcommand(
      "basepoints", "rational base points of the ideal, with completeness");
  add_input(basepoints);

  CLI::App* saturate_cmd = app.add_subcommand(
      "saturate", "saturation of the ideal by the irrelevant ideal");
  add_input(saturate_cmd);

  CLI::App* syzygies = app.add_subcommand(
      "syzygies", "generators of the syzygy module of the ideal");
  add_input(syzygies);

  CLI::App* koszul_check = app.add_subcommand(
      "koszul-check", "decide whether a syzygy lies in the Koszul submodule");
  add_input(koszul_check);
  koszul_check
      ->add_option("--syzygy", syzygy_text,
                   "syzygy vector as three comma-separated polynomials")
      ->required();

  CLI::App* lci = app.add_subcommand(
      "lci", "local complete intersection verdicts, global and pointwise");
  add_input(lci);
  lci->add_option("--point", point_text, "one point as s:u;t:v");

  CLI::App* hilbert_cmd = app.add_subcommand(
      "hilbert", "Hilbert polynomials, degree of Z, conormal constant");
  add_input(hilbert_cmd);

  CLI::App* slice = app.add_subcommand(
      "slice", "compare slices of the Koszul and vanishing-syzygy modules");
  add_input(slice);
  slice->add_option("--at", at_text, "one module bidegree k,k'");
  slice->add_option("--max-degree", max_degree_text,
                    "sweep bound k,k' when --at is absent");

  CLI::App* theorem = app.add_subcommand(
      "theorem", "check K^sat = V against the LCI criterion on one ideal");
  add_input(theorem);

  CLI::App* verify = app.add_subcommand(
      "verify-paper", "run every recorded claim about the bundled examples");
  verify->add_flag("--json", json_flag, "machine-readable output");
  verify->add_option("--only", only, "run only claims whose id starts here");
  verify->add_option("--data-dir", data_dir,
                     "load ex2.ideal/ex3.ideal/i3.ideal from this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (verify->parsed()) return run_verify(only, data_dir, json_flag);

    const bisyz::IdealSpec ideal = bisyz::parse_ideal_file(path);
    if (basepoints->parsed()) {
      print_report(bisyz::basepoints_sections(ideal));
    } else if (saturate_cmd->parsed()) {
      print_report(bisyz::saturate_sections(ideal));
    } else if (syzygies->parsed()) {
      print_report(bisyz::syzygies_sections(ideal));
    } else if (koszul_check->parsed()) {
      print_report(bisyz::koszul_check_sections(
          ideal, bisyz::parse_poly_list(syzygy_text)));
    } else if (lci->parsed()) {
      std::optional<bisyz::PointP1xP1> point;
      if (!point_text.empty()) point = bisyz::parse_point(point_text);
      print_report(bisyz::lci_sections(ideal, point));
    } else if (hilbert_cmd->parsed()) {
      print_report(bisyz::hilbert_sections(ideal));
    } else if (slice->parsed()) {
      std::optional<BiDegree> at;
      if (!at_text.empty()) at = parse_degree_pair(at_text);
      print_report(bisyz::slice_sections(ideal, at,
                                         parse_degree_pair(max_degree_text)));
    } else if (theorem->parsed()) {
      const bisyz::Json sections = bisyz::theorem_sections(ideal);
      print_report(sections);
      if (!sections.at("biconditional_holds").get<bool>()) return 2;
    }
  } catch (const bisyz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
