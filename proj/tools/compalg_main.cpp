#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "compalg/commands.hpp"
#include "compalg/document.hpp"
#include "compalg/fixtures.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw compalg::InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for pairs of compatible associative products"};
  std::string command, path, fixture_name, output;
  int max_degree = compalg::kDefaultMaxDegree;

  std::string joined;
  for (const std::string& n : compalg::command_names()) {
    if (!joined.empty()) joined += ", ";
    joined += n;
  }
  app.add_option("command", command, "one of: " + joined)->required();
  app.add_option("document", path, "JSON document describing the input");
  app.add_option("--fixture", fixture_name,
                 "use a built-in example instead of a document file");
  app.add_option("--max-degree", max_degree,
                 "top cohomology / homology degree")
      ->capture_default_str();
  app.add_option("--output", output,
                 "write the report to a file instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  compalg::CommandResult result;
  try {
    compalg::AlgebraDocument doc;
    if (!fixture_name.empty() && !path.empty())
      throw compalg::InputError(
          "pass either a document file or --fixture, not both");
    if (!fixture_name.empty()) {
      doc = compalg::fixture_document(fixture_name);
    } else if (!path.empty()) {
      doc = compalg::parse_document(read_file(path));
    } else {
      throw compalg::InputError("no input: pass a document file or --fixture");
    }
    result = compalg::run_command(command, doc, max_degree);
  } catch (const compalg::InputError& e) {
    result = compalg::input_error_result(command, e.what());
  } catch (const std::exception& e) {
    result = compalg::input_error_result(command, e.what());
  }

  if (output.empty()) {
    std::cout << result.report;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return 2;
    }
    out << result.report;
  }
  return result.exit_code;
}
