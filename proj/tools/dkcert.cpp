// Command-line front end: solve, certify, radii, compare-sor.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dkcert/error.hpp"
#include "dkcert/report.hpp"

namespace {

using namespace dkcert;

void emit(const std::string& command, const Json& report, bool text) {
  if (text) {
    std::cout << render_text(command, report);
  } else {
    std::cout << report.dump() << "\n";
  }
}

int run_file_command(const std::string& command, const std::string& path, bool text) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitInputError;
  }
  std::vector<Json> docs;
  try {
    docs = read_documents(in);
  } catch (const Error& err) {
    emit(command, Json{{"error", {{"code", "ParseError"}, {"message", err.what()}}}}, text);
    std::cerr << err.what() << "\n";
    return kExitInputError;
  }
  if (docs.empty()) {
    std::cerr << "error: " << path << " holds no problem documents\n";
    return kExitInputError;
  }

  // Documents are independent; run them concurrently, report in file order.
  std::vector<CommandResult> results(docs.size());
  const auto count = static_cast<std::ptrdiff_t>(docs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    results[static_cast<std::size_t>(i)] = run_document(command, docs[static_cast<std::size_t>(i)]);
  }

  int code = kExitOk;
  for (const auto& r : results) {
    emit(command, r.report, text);
    if (r.exit_code == kExitInputError) {
      std::cerr << r.report["error"]["message"].get<std::string>() << "\n";
      code = kExitInputError;
    } else if (r.exit_code != kExitOk && code == kExitOk) {
      code = r.exit_code;
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous polynomial root finding with Weierstrass convergence certificates"};
  app.require_subcommand(1);

  std::string output = "json";
  app.add_option("--output", output, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string file;
  auto* solve = app.add_subcommand("solve", "Run the iteration and report every iterate");
  solve->add_option("file", file, "Problem file (JSON documents)")->required();
  auto* certify = app.add_subcommand("certify", "Check the initial point without iterating");
  certify->add_option("file", file, "Problem file (JSON documents)")->required();
  auto* compare = app.add_subcommand("compare-sor", "Compare the two SOR step parameters");
  compare->add_option("file", file, "Problem file (JSON documents)")->required();

  std::size_t n = 2;
  std::string p_text = "inf";
  auto* radii = app.add_subcommand("radii", "Tabulate every convergence radius at (n, p)");
  radii->add_option("--n", n, "Polynomial degree")->required()->check(CLI::Range(2, 100000));
  radii->add_option("--p", p_text, "Norm exponent: number >= 1 or inf")->capture_default_str();

  for (auto* sub : {solve, certify, compare, radii}) {
    sub->add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }
  const bool text = output == "text";

  if (radii->parsed()) {
    try {
      const NormIndex p = p_text == "inf" ? NormIndex::infinity() : NormIndex(std::stod(p_text));
      emit("radii", cmd_radii(n, p).report, text);
      return kExitOk;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInputError;
    }
  }
  const std::string command = solve->parsed()     ? "solve"
                              : certify->parsed() ? "certify"
                                                  : "compare-sor";
  return run_file_command(command, file, text);
}
