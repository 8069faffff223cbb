#include "liemc/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "liemc/error.hpp"
#include "liemc/json_io.hpp"
#include "liemc/presets.hpp"

namespace liemc::cli {

namespace {

struct InputError {
  std::string message;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError{fmt::format("input '{}': cannot open file", path)};
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError{fmt::format("input '{}': malformed JSON: {}", path, e.what())};
  }
}

std::vector<Scalar> parse_csv(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Scalar v = 0;
    const auto* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, v);
    if (ec != std::errc() || ptr != end) throw InputError{fmt::format("field 'minpoly': '{}' is not a nonnegative integer", item)};
    out.push_back(v);
  }
  if (out.empty()) throw InputError{"field 'minpoly': empty coefficient list"};
  return out;
}

FieldTower search_tower(unsigned p, const std::string& minpoly) {
  const auto coeffs = parse_csv(minpoly);
  for (Scalar c : coeffs) {
    if (c >= p) throw InputError{fmt::format("field 'minpoly': coefficient {} not reduced mod p = {}", c, p)};
  }
  try {
    return FieldTower::finite(p, coeffs);
  } catch (const Error& e) {
    const char* name = e.code() == Errc::NonPrimeCharacteristic ? "p" : "minpoly";
    throw InputError{fmt::format("field '{}': {}", name, e.what())};
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with graded Lie algebras of maximal class"};
  app.name("liemc");
  app.require_subcommand(1, 1);

  std::string format = "text";
  std::uint64_t seed = 0;
  std::string out_path;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  auto* seed_opt = app.add_option("--seed", seed, "Sampling seed (overrides the job's)");
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  std::string input;
  auto* validate_cmd = app.add_subcommand("validate", "Validate an algebra given by its centraliser lines");
  validate_cmd->add_option("algebra", input, "algebra.json")->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full analysis on a job file");
  analyze_cmd->add_option("job", input, "job.json")->required();
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a named preset");
  reproduce_cmd->add_option("name", input, "Preset name")->required()->check(CLI::IsMember(preset_names()));

  unsigned p = 2;
  std::string minpoly = "1,1";
  int depth = 0;
  int max_centralisers = 2;
  std::uint64_t budget = 10'000'000;
  auto* search_cmd = app.add_subcommand("search", "Enumerate valid centraliser sequences");
  search_cmd->add_option("--p", p, "Characteristic")->required();
  search_cmd->add_option("--minpoly", minpoly, "Minimal polynomial coefficients, constant term first");
  search_cmd->add_option("--depth", depth, "Truncation depth N")->required()->check(CLI::Range(3, 64));
  search_cmd->add_option("--max-centralisers", max_centralisers, "Distinct lines allowed")->check(CLI::Range(1, 2));
  search_cmd->add_option("--budget", budget, "Maximum prefixes examined");

  for (auto* sub : {validate_cmd, analyze_cmd, reproduce_cmd, search_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "liemc: " << e.what() << "\n";
    return 2;
  }

  const bool json = format == "json";
  std::string report;
  int code = 0;
  try {
    if (*validate_cmd) {
      MaxClassAlgebra m = algebra_from_json(read_json(input));
      const ValidationReport r = validate(m);
      report = json ? Json{{"validation", to_json(r)}, {"algebra", to_json(m)}}.dump(2) + "\n" : render_text(r);
      code = r.ok ? 0 : 1;
    } else if (*analyze_cmd || *reproduce_cmd) {
      AnalysisReport r;
      if (*analyze_cmd) {
        AnalysisJob job = job_from_json(read_json(input));
        if (seed_opt->count()) job.seed = seed;
        r = analyze(job);
      } else {
        Preset pr = preset(input);
        if (seed_opt->count()) pr.job.seed = seed;
        r = reproduce(pr);
      }
      report = json ? to_json(r).dump(2) + "\n" : render_text(r);
      code = r.passed() ? 0 : 1;
    } else {
      const FieldTower tower = search_tower(p, minpoly);
      const SearchResult r = search_sequences(tower, depth, max_centralisers, budget);
      report = json ? to_json(r, tower, depth, max_centralisers, budget).dump(2) + "\n" : render_text(r, tower, depth);
      code = r.exhausted ? 1 : 0;
    }
  } catch (const InputError& e) {
    err << "liemc: " << e.message << "\n";
    return 2;
  } catch (const Error& e) {
    err << "liemc: " << e.what() << "\n";
    return 2;
  }

  if (out_path.empty()) {
    out << report;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << fmt::format("liemc: field 'out': cannot write '{}'\n", out_path);
      return 2;
    }
    f << report;
  }
  return code;
}

}  // namespace liemc::cli
