#include "app.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <map>

#include "commands.hpp"
#include "gincs/errors.hpp"

namespace gincs::cli {

namespace {

struct Command {
  const char* name;
  const char* help;
  Outcome (*run)(const RunConfig&);
};

const Command kCommands[] = {
    {"gin", "multigraded generic initial ideal from random block changes", cmd_gin},
    {"check-cs", "Cartwright-Sturmfels test (exit 0 certified, 10 not CS, 20 inconclusive)", cmd_check_cs},
    {"predict", "predicted gin generators of I_G(m) from connected subsets", cmd_predict},
    {"classify", "combinatorial classification of I_H(m)", cmd_classify},
    {"kpoly", "multigraded K-polynomial of S/I", cmd_kpoly},
    {"psi", "the bijection between bounded ideals of T and Brad(S)", cmd_psi},
};

void add_common(CLI::App& sub, RunConfig& c, std::optional<std::uint32_t>& cross) {
  sub.add_option("--graph", c.graph_file, "graph file ('n 2' header, one edge per line)")->check(CLI::ExistingFile);
  sub.add_option("--hypergraph", c.hypergraph_file, "hypergraph file ('n s' header)")->check(CLI::ExistingFile);
  sub.add_option("--gens", c.gens_file, "one polynomial per line, optional 'blocks ...' line")->check(CLI::ExistingFile);
  sub.add_option("--all-graphs", c.all_graphs, "every labeled graph on this many vertices");
  sub.add_option("--rows", c.rows, "matrix rows m (block size)");
  sub.add_option("--cols", c.cols, "matrix columns n");
  sub.add_option("--blocks", c.blocks, "block sizes m_1,...,m_n")->delimiter(',');
  sub.add_option("--prime", c.prime, "field characteristic")->capture_default_str();
  sub.add_option("--cross-check-prime", cross, "second characteristic for check-cs");
  sub.add_option("--order", c.order, "lex or degrevlex")->capture_default_str();
  sub.add_option("--grading", c.grading, "columns or rows")->capture_default_str();
  sub.add_option("--samples", c.samples, "random coordinate changes")->capture_default_str();
  sub.add_option("--seed", c.seed, "base seed; sample k uses seed + k")->capture_default_str();
  sub.add_option("--timeout", c.timeout_s, "seconds before giving up")->capture_default_str();
  sub.add_flag("--timings", c.timings, "add wall-clock timings to the report");
  sub.add_option("--output,-o", c.output, "write the JSON report here instead of stdout");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gincs: multigraded generic initial ideals and Cartwright-Sturmfels checks"};
  app.require_subcommand(1);
  RunConfig config;
  std::optional<std::uint32_t> cross;
  std::map<CLI::App*, const Command*> subs;
  for (const Command& cmd : kCommands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    add_common(*sub, config, cross);
    subs[sub] = &cmd;
    if (std::string(cmd.name) == "predict" || std::string(cmd.name) == "classify")
      sub->add_flag("--verify", config.verify, "cross-check against the Groebner engine");
    if (std::string(cmd.name) == "psi") {
      sub->add_option("--t-ideal", config.t_ideal, "comma-separated monomials of T, e.g. \"y1*y2, y2^2\"");
      sub->add_option("--bounds", config.blocks, "exponent bounds, equal to the block sizes of S")->delimiter(',');
      sub->add_flag("--inverse", config.inverse, "apply psi^-1 to --s-ideal");
      sub->add_option("--s-ideal", config.s_ideal, "comma-separated monomials of S");
    }
  }

  std::vector<std::string> args;
  for (int k = argc - 1; k >= 1; --k) args.emplace_back(argv[k]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.cross_check_prime = cross;

  const Command* cmd = nullptr;
  for (auto& [sub, c] : subs)
    if (sub->parsed()) cmd = c;

  Json report{{"schema", kSchema}, {"command", cmd->name}};
  {
    Json echo = Json::array();
    for (int k = 1; k < argc; ++k) echo.push_back(argv[k]);
    report["argv"] = std::move(echo);
  }
  int code = kExitOk;
  const auto start = std::chrono::steady_clock::now();
  try {
    config.validate();
    report["config"] = config.to_json();
    Outcome outcome = cmd->run(config);
    report["status"] = "ok";
    report["result"] = std::move(outcome.result);
    code = outcome.exit_code;
    if (!outcome.summary.empty()) err << cmd->name << ": " << outcome.summary << "\n";
  } catch (const Timeout&) {
    report["status"] = "TIMEOUT";
    report["result"] = nullptr;
    code = kExitInconclusive;
    err << cmd->name << ": timed out after " << config.timeout_s << " s\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (config.timings) {
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report["timings"] = Json{{"wall_seconds", seconds}};
  }

  const std::string text = report.dump(2) + "\n";
  if (config.output.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output);
    if (!file) {
      err << "error: cannot write " << config.output << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return code;
}

}  // namespace gincs::cli
