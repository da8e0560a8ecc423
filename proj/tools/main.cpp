#include "circramsey/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  namespace cli = circramsey::cli;
  const cli::ParseOutcome parsed = cli::parse_command_line(argc, argv);
  if (!parsed.config) {
    std::cout << parsed.message;
    return parsed.exit_code;
  }
  const cli::RunResult result = cli::run(*parsed.config);
  for (const std::string& warning : result.warnings) {
    std::cerr << "warning: " << warning << '\n';
  }
  if (result.exit_code == cli::kSuccess && !parsed.config->output.empty()) {
    const std::filesystem::path path = parsed.config->output;
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << result.output;
      if (!out) {
        std::cerr << "error: cannot write " << tmp << '\n';
        return cli::kInvalidConfig;
      }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
      std::cerr << "error: cannot write " << path << ": " << ec.message() << '\n';
      return cli::kInvalidConfig;
    }
    return result.exit_code;
  }
  std::cout << result.output;
  return result.exit_code;
}
