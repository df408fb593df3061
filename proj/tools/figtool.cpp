// figtool: analyze presented FI_G-modules and sweep random presentations.

#include "fig/module_io.hpp"
#include "fig/report.hpp"
#include "fig/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

constexpr int exit_failed_check = 1;
constexpr int exit_parse = 2;
constexpr int exit_truncation = 3;
constexpr int exit_internal = 4;

struct Config {
  std::string input;
  std::string output;
  int truncation = 0;
  int ceiling = 10;
  std::string field;
  std::string group;
  std::uint64_t seed = 1;
  int count = 10;
  std::string format = "text";
  std::vector<std::string> invariants;
  int threads = 1;
  int i_max = 3;
  int d_max = 2;
  int r_max = 3;
  bool partial = false;
};

struct TruncationError {
  std::string message;
};

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw fig::ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception &e) {
    throw fig::ParseError(path + ": " + e.what());
  }
}

std::vector<std::string> split_commas(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty())
      out.push_back(item);
  return out;
}

json group_json(const std::string &spec) {
  if (!spec.empty() && spec[0] == '@')
    return read_json_file(spec.substr(1));
  return spec;
}

fig::FiniteGroup parse_group_flag(const std::string &spec) {
  try {
    return fig::parse_group(group_json(spec));
  } catch (const fig::ParseError &) {
    throw;
  } catch (const std::exception &e) {
    throw fig::ParseError("group " + spec + ": " + e.what());
  }
}

fig::FieldSpec parse_field_flag(const std::string &spec) {
  try {
    return fig::FieldSpec::parse(spec);
  } catch (const std::exception &e) {
    throw fig::ParseError("field " + spec + ": " + e.what());
  }
}

std::vector<fig::Invariant> requested(const Config &cfg) {
  if (cfg.invariants.empty())
    return fig::all_invariants();
  std::vector<fig::Invariant> out;
  for (const auto &name : cfg.invariants) {
    auto inv = fig::parse_invariant(name);
    if (!inv)
      throw fig::ParseError("unknown invariant " + name);
    out.push_back(*inv);
  }
  return out;
}

fig::ModuleFile load(const Config &cfg) {
  auto j = read_json_file(cfg.input);
  if (!cfg.field.empty()) {
    j["field"] = cfg.field;
    j.erase("p");
  }
  if (!cfg.group.empty())
    j["group"] = group_json(cfg.group);
  return fig::parse_module_file(j);
}

void emit(const Config &cfg, const json &report) {
  if (cfg.format == "json")
    std::cout << report.dump(2) << '\n';
  else
    std::cout << fig::text_report(report);
}

/// Truncation for a presentation: flag, then file, then the certified
/// requirement capped by the ceiling.
int choose_truncation(const Config &cfg, const fig::ModuleFile &mf, const fig::ReportOptions &opts) {
  const auto &p = mf.presentation;
  int d = p.generation_degree(), r = p.relation_degree();
  int need = std::max({1, d, r});
  for (auto inv : opts.invariants)
    need = std::max(need, fig::required_truncation(inv, d, r, opts.i_max));
  int n = cfg.truncation > 0 ? cfg.truncation : mf.truncation ? *mf.truncation : std::min(need, cfg.ceiling);
  if (n < std::max({1, d, r}))
    throw TruncationError{"truncation " + std::to_string(n) + " is below the presentation degree; need " +
                          std::to_string(std::max({1, d, r}))};
  return n;
}

void require_windows(const Config &cfg, const fig::Analysis &an, const fig::ReportOptions &opts) {
  auto missing = fig::missing_windows(an, opts);
  if (missing.empty() || cfg.partial)
    return;
  std::string msg = "truncation " + std::to_string(an.truncation()) + " does not certify";
  int need = 0;
  for (auto &[inv, n] : missing) {
    msg += " " + fig::invariant_name(inv) + " (needs " + std::to_string(n) + ")";
    need = std::max(need, n);
  }
  throw TruncationError{msg + "; rerun with --truncation " + std::to_string(need) + " or --partial"};
}

int run_module_command(const std::string &cmd, const Config &cfg) {
  auto mf = load(cfg);
  fig::ReportOptions opts;
  opts.i_max = cfg.i_max;
  if (cmd == "analyze")
    opts.invariants = requested(cfg);
  else if (cmd == "hilbert")
    opts.invariants = {fig::Invariant::hilbert};
  else
    opts.invariants = {fig::Invariant::filtration};
  fig::Analysis an(mf.presentation, choose_truncation(cfg, mf, opts));
  require_windows(cfg, an, opts);
  json report;
  if (cmd == "analyze")
    report = fig::analysis_report(an, opts);
  else if (cmd == "hilbert")
    report = fig::hilbert_report(an);
  else
    report = fig::filtration_report(an);
  if (cmd != "analyze")
    report["truncation"] = an.truncation();
  emit(cfg, report);
  return 0;
}

fig::RandomParams random_params(const Config &cfg) {
  fig::RandomParams p;
  p.seed = cfg.seed;
  p.count = cfg.count;
  p.d_max = cfg.d_max;
  p.r_max = cfg.r_max;
  if (!cfg.field.empty()) {
    p.fields.clear();
    for (const auto &f : split_commas(cfg.field))
      p.fields.push_back(parse_field_flag(f));
  }
  if (!cfg.group.empty()) {
    p.groups.clear();
    for (const auto &g : split_commas(cfg.group))
      p.groups.push_back(parse_group_flag(g));
  }
  return p;
}

void print_verify_text(const json &report) {
  for (const auto &inst : report["instances"]) {
    std::cout << "instance " << inst["index"].get<int>() << "  " << inst["field"].get<std::string>() << " "
              << inst["group"].get<std::string>() << "  d=" << inst["d"].get<int>()
              << " r=" << inst["r"].get<int>() << "  " << (inst["passed"].get<bool>() ? "pass" : "FAIL") << '\n';
    for (const auto &c : inst["checks"])
      if (!c["passed"].get<bool>() || !c["certified"].get<bool>())
        std::cout << "  " << c["name"].get<std::string>() << ": "
                  << (c["passed"].get<bool>() ? "uncertified" : "FAIL") << "  " << c["witness"].get<std::string>()
                  << '\n';
  }
  for (const auto &c : report["suite_checks"])
    std::cout << "suite " << c["name"].get<std::string>() << "  " << (c["passed"].get<bool>() ? "pass" : "FAIL")
              << "  " << c["witness"].get<std::string>() << '\n';
  std::cout << (report["passed"].get<bool>() ? "all checks passed" : "some checks failed") << '\n';
}

int run_verify(const Config &cfg) {
  fig::VerifyOptions opts;
  opts.truncation = cfg.truncation > 0 ? cfg.truncation : 8;
  opts.i_max = cfg.i_max;
  opts.threads = cfg.threads;
  if (!cfg.input.empty()) {
    auto mf = load(cfg);
    if (cfg.truncation <= 0 && mf.truncation)
      opts.truncation = *mf.truncation;
    auto rep = fig::verify_instance(mf.presentation, opts);
    auto j = fig::to_json(rep);
    if (cfg.format == "json")
      std::cout << j.dump(2) << '\n';
    else
      print_verify_text({{"instances", json::array({j})}, {"suite_checks", json::array()}, {"passed", rep.passed()}});
    return rep.passed() ? 0 : exit_failed_check;
  }
  auto params = random_params(cfg);
  if (opts.truncation < params.r_max)
    throw TruncationError{"truncation must be at least the relation degree bound " + std::to_string(params.r_max)};
  auto report = fig::verify_theorems(params, opts);
  auto j = fig::to_json(report);
  if (cfg.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    print_verify_text(j);
  return report.passed() ? 0 : exit_failed_check;
}

int run_random(const Config &cfg) {
  auto params = random_params(cfg);
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32)};
  std::mt19937_64 rng(seq);
  auto p = fig::random_presentation(rng, params.fields.front(), params.groups.front(), params);
  std::optional<int> n;
  if (cfg.truncation > 0)
    n = cfg.truncation;
  auto text = fig::to_json(p, n).dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output);
    if (!out)
      throw fig::ParseError("cannot write " + cfg.output);
    out << text;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact invariants of finitely presented FI_G-modules"};
  app.require_subcommand(1);
  Config cfg;
  std::string invariants;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--truncation", cfg.truncation, "Truncation degree N")->check(CLI::PositiveNumber);
    sub->add_option("--field", cfg.field, "Q or Fp:<p>");
    sub->add_option("--group", cfg.group, "trivial, Z2, Z3, S3 or @file");
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--i-max", cfg.i_max, "Largest homological index")->check(CLI::Range(1, 8));
  };
  auto module_cmd = [&](const std::string &name, const std::string &help) {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("input", cfg.input, "Module description file")->required();
    common(sub);
    sub->add_option("--ceiling", cfg.ceiling, "Largest default truncation")->check(CLI::PositiveNumber);
    sub->add_flag("--partial", cfg.partial, "Report uncertified values instead of failing");
    return sub;
  };
  auto *analyze = module_cmd("analyze", "Full invariant report");
  analyze->add_option("--invariants", invariants, "Comma separated list, e.g. depth,reg,hilbert");
  module_cmd("hilbert", "Hilbert function, polynomial and stable range");
  module_cmd("filtration", "Sharp filtration or the failing H_1 degree");

  auto sweep = [&](CLI::App *sub) {
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--d-max", cfg.d_max, "Largest generator degree")->check(CLI::Range(0, 4));
    sub->add_option("--r-max", cfg.r_max, "Largest relation degree")->check(CLI::Range(0, 6));
  };
  auto *verify = app.add_subcommand("verify", "Check the structural theorems on random presentations");
  verify->add_option("input", cfg.input, "Check a single module file instead");
  common(verify);
  sweep(verify);
  verify->add_option("--count", cfg.count, "Number of instances")->check(CLI::PositiveNumber);
  verify->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--invariants", invariants, "Accepted for symmetry with analyze");
  auto *random = app.add_subcommand("random", "Write a seeded random presentation");
  common(random);
  sweep(random);
  random->add_option("-o,--output", cfg.output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return exit_parse;
  }
  cfg.invariants = split_commas(invariants);

  try {
    auto *sub = app.get_subcommands().front();
    const auto &name = sub->get_name();
    if (name == "verify")
      return run_verify(cfg);
    if (name == "random")
      return run_random(cfg);
    return run_module_command(name, cfg);
  } catch (const fig::ParseError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const TruncationError &e) {
    std::cerr << "insufficient truncation: " << e.message << '\n';
    return exit_truncation;
  } catch (const std::domain_error &e) {
    std::cerr << "insufficient truncation: " << e.what() << '\n';
    return exit_truncation;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
}
