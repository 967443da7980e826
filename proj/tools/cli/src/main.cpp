#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hzcli/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hzcli: henselization of Q at a prime, driven by a script"};
  std::string script;
  std::string format = "text";
  std::size_t precision = hz::oracle::kDefaultPrecision;
  app.add_option("--script", script, "Script file (default: standard input)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--precision", precision, "Oracle precision N for check")->check(CLI::Range(1, 100000));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const auto fmt = format == "structured" ? hzcli::Format::Structured : hzcli::Format::Text;
  if (script.empty()) return hzcli::run_script(std::cin, std::cout, std::cerr, fmt, precision);
  std::ifstream in(script);
  if (!in) {
    std::cerr << "cannot open " << script << "\n";
    return 2;
  }
  return hzcli::run_script(in, std::cout, std::cerr, fmt, precision);
}
