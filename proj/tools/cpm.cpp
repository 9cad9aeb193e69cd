// Command-line front end: analyze inputs, print examples, validate files.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "cpm/examples.hpp"
#include "cpm/io.hpp"

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kInconsistent = 2, kMissingInput = 3 };

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream file(path);
  if (!file) throw cpm::Error(cpm::ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

int exit_code_for(cpm::ErrorKind kind) {
  switch (kind) {
    case cpm::ErrorKind::MissingB1Input:
    case cpm::ErrorKind::NoB1Data:
    case cpm::ErrorKind::MissingAbelianizationImages:
    case cpm::ErrorKind::MissingAdjoint:
    case cpm::ErrorKind::ScalarFieldTooSmall:
      return kMissingInput;
    default:
      return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of compact quotients of complex Lie groups"};
  app.require_subcommand(1);

  std::string input_path;
  bool as_json = false;
  int depth = 0;
  auto* analyze = app.add_subcommand("analyze", "Compute h1, b1, rigidity and the Albanese dimension");
  analyze->add_option("input", input_path, "Analysis input file, or - for standard input")->required();
  analyze->add_flag("--json", as_json, "Print the report as JSON");
  analyze->add_option("--depth", depth, "Word length for the non-commuting W check (overrides the input)")
      ->check(CLI::PositiveNumber);

  std::string kind;
  long p = 2, dim = 1, rank = 1;
  bool with_i = false;
  auto* example = app.add_subcommand("example", "Print a built-in analysis input");
  example->add_option("kind", kind, "pell, iwasawa, torus or sl2c")
      ->required()
      ->check(CLI::IsMember({"pell", "iwasawa", "torus", "sl2c"}));
  example->add_option("--p", p, "Pell parameter (non-square, at least 2)");
  example->add_flag("--with-i", with_i, "Add the unit i to the pell lattice");
  example->add_option("--dim", dim, "Torus dimension");
  example->add_option("--rank", rank, "Rank of the abelianized SL2 lattice");

  auto* verify = app.add_subcommand("verify", "Validate an analysis input without computing invariants");
  verify->add_option("input", input_path, "Analysis input file, or - for standard input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*example) {
      cpm::AnalysisInput in;
      if (kind == "pell") in = cpm::examples::unit_solvmanifold(p, with_i);
      else if (kind == "iwasawa") in = cpm::examples::iwasawa();
      else if (kind == "torus") in = cpm::examples::torus(dim);
      else in = cpm::examples::sl2_times_c(rank);
      std::cout << cpm::io::input_to_json(in);
      return kOk;
    }
    cpm::AnalysisInput in = cpm::io::parse_input(read_input(input_path));
    if (*verify) {
      cpm::validate_lie_algebra(in.lie);
      cpm::validate_lattice(in.lie, in.lattice);
      std::cout << "ok\n";
      return kOk;
    }
    if (depth > 0) in.depth = depth;
    cpm::InvariantReport report = cpm::analyze(in);
    std::cout << (as_json ? cpm::io::report_to_json(report) : cpm::io::report_to_text(report));
    return report.rigid == cpm::Rigidity::Inconsistent ? kInconsistent : kOk;
  } catch (const cpm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}
