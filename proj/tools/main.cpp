// Batch and interactive front end for the knowledge-base engine.
//
//   dlkb [options] [script]
//
// With a script file, executes its commands and exits: 0 on success, 1 when
// any update was rejected or a declared concept is incoherent, 2 on a parse
// or scope error.  Without a script, runs a read-eval-print loop.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dlkb/parse.hpp"
#include "dlkb/session.hpp"

namespace {

struct Printer {
  bool verbose;

  void operator()(const dlkb::CommandResult& r) const {
    for (const std::string& line : r.lines) std::cout << line << '\n';
    if (verbose) {
      for (const std::string& line : r.verbose) std::cout << line << '\n';
    }
  }
};

int run_file(dlkb::Session& session, const std::string& path,
             const Printer& print) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<dlkb::KbCommand> commands;
  try {
    commands = dlkb::parse_command_file(buf.str());
  } catch (const dlkb::ParseError& e) {
    std::cerr << path << ":" << e.what() << '\n';
    return 2;
  }
  for (const dlkb::KbCommand& cmd : commands) {
    try {
      print(session.execute(cmd));
    } catch (const dlkb::ScopeError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
  }
  return session.exit_status();
}

int run_repl(dlkb::Session& session, const Printer& print) {
  std::string buffer;
  std::string line;
  std::cout << "> " << std::flush;
  while (std::getline(std::cin, line)) {
    if (buffer.empty()) {
      if (line == ":quit") return 0;
      if (line == ":fingerprint") {
        std::cout << session.fingerprint();
        std::cout << "> " << std::flush;
        continue;
      }
    }
    buffer += line;
    buffer += '\n';
    if (!dlkb::forms_balanced(buffer)) {
      continue;  // keep reading until the form closes
    }
    try {
      for (const dlkb::KbCommand& cmd : dlkb::parse_command_file(buffer)) {
        print(session.execute(cmd));
      }
    } catch (const dlkb::ParseError& e) {
      std::cout << "error: " << e.what() << '\n';
    } catch (const dlkb::ScopeError& e) {
      std::cout << "error: " << e.what() << '\n';
    }
    buffer.clear();
    std::cout << "> " << std::flush;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"description-logic knowledge base engine"};

  std::string preload;
  std::string script;
  bool verbose = false;
  bool print_fingerprint = false;
  long budget = dlkb::Budget::kDefault;
  bool no_links = false;

  app.add_option("--kb", preload, "knowledge-base file to preload");
  app.add_flag("--verbose", verbose, "print declaration and update reports");
  app.add_option("--budget", budget, "reasoning step budget per operation");
  app.add_flag("--fingerprint", print_fingerprint,
               "print the state fingerprint on exit");
  app.add_flag("--no-dependency-links", no_links,
               "full rescans instead of dependency links (diagnostic)");
  app.add_option("script", script, "command file to execute");

  CLI11_PARSE(app, argc, argv);

  dlkb::SessionOptions options;
  options.budget = budget;
  options.use_dependency_links = !no_links;
  dlkb::Session session(options);
  Printer print{verbose};

  int status = 0;
  if (!preload.empty()) {
    status = run_file(session, preload, print);
    if (status == 2) return 2;
  }
  if (!script.empty()) {
    int s = run_file(session, script, print);
    if (s == 2) return 2;
    status = std::max(status, s);
  } else {
    run_repl(session, print);
    status = std::max(status, session.exit_status());
  }
  if (print_fingerprint) std::cout << session.fingerprint();
  return status;
}
