#include "prism/cli.hpp"

#include "prism/cube.hpp"
#include "prism/dispersion.hpp"
#include "prism/error.hpp"
#include "prism/fixtures.hpp"
#include "prism/json_io.hpp"
#include "prism/oracle/oracles.hpp"
#include "prism/report.hpp"
#include "prism/snapshot.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace prism::cli {

namespace {

struct Options {
  unsigned bound = 4;
  std::string format = "text";
  std::string out;
  std::string space;
  std::string candidate;
  std::string group;
  std::string suite = "all";
  unsigned n = 0;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "dot") return Format::dot;
  return Format::text;
}

FlaggedPriestley load_space(const std::string& spec, unsigned bound) {
  if (auto b = fixtures::builtin_space(spec)) return *b;
  if (looks_like_group(spec)) return flagged_snapshot(parse_group(spec), bound).space;
  return flagged_from_json(read_file(spec));
}

std::string run_oracle(const std::string& suite, bool& clean) {
  std::vector<std::string> names = suite == "all" ? oracle::suite_names() : std::vector<std::string>{suite};
  std::ostringstream os;
  clean = true;
  for (const auto& name : names) {
    const auto r = oracle::run_suite(name);
    os << r.name << "\t" << r.checks << " checks\t" << r.mismatches.size() << " mismatches\n";
    for (const auto& m : r.mismatches) os << "  " << m << "\n";
    clean = clean && r.mismatches.empty();
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Priestley spaces, dispersions and punctured-cube decompositions", "prism"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--bound", o.bound, "snapshot bound for group spaces")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out", o.out, "write output to this file");
  };
  const char* space_help = "group id, nstar:<k>, or flagged-priestley/v1 JSON file";

  auto* show = app.add_subcommand("show", "print a space");
  show->add_option("space", o.space, space_help)->required();
  auto* heights = app.add_subcommand("heights", "Thomason heights");
  heights->add_option("space", o.space, space_help)->required();
  auto* check = app.add_subcommand("check-dispersion", "test a candidate dispersion");
  check->add_option("space", o.space, space_help)->required();
  check->add_option("candidate", o.candidate, "candidate JSON file")->required();
  auto* closed = app.add_subcommand("closed-sets", "shape classes of clopen down-sets");
  closed->add_option("space", o.space, space_help)->required();
  auto* noeth = app.add_subcommand("noetherian", "Noetherian verdict for a group");
  noeth->add_option("group", o.group, "group id")->required();
  auto* cube = app.add_subcommand("cube", "punctured-cube decomposition");
  cube->add_option("space", o.space, space_help)->required();
  auto* isomax = app.add_subcommand("isomax", "isomax undercategories of the punctured n-cube");
  isomax->add_option("n", o.n, "cube height")->required()->check(CLI::Range(0u, 12u));
  auto* orc = app.add_subcommand("oracle", "compare fast paths with brute force");
  orc->add_option("suite", o.suite, "isomax | snf | derivative | downsets | all")
      ->check(CLI::IsMember({"all", "isomax", "snf", "derivative", "downsets"}));
  for (auto* sub : {show, heights, check, closed, noeth, cube, isomax, orc}) common(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : 2;
  }

  const Format fmt = parse_format(o.format);
  std::string text;
  int code = 0;
  try {
    if (*show) {
      text = render_space(load_space(o.space, o.bound), fmt);
    } else if (*heights) {
      const auto p = load_space(o.space, o.bound);
      text = render_heights(p, thomason_heights(p), fmt);
    } else if (*check) {
      const auto p = load_space(o.space, o.bound);
      text = render_verdict(is_dispersion(p, candidate_from_json(read_file(o.candidate))), fmt);
    } else if (*closed) {
      const auto p = load_space(o.space, o.bound);
      text = render_clopen(p, clopen_down_sets(p), fmt);
    } else if (*noeth) {
      text = render_noetherian(noetherian_report(parse_group(o.group), o.bound), fmt);
    } else if (*cube) {
      const auto d = looks_like_group(o.space) ? build_decomposition(parse_group(o.space), o.bound)
                                               : build_decomposition(load_space(o.space, o.bound));
      text = render_cube(d, fmt);
    } else if (*isomax) {
      text = render_isomax(o.n, isomax_table(o.n), fmt);
    } else if (*orc) {
      bool clean = true;
      text = run_oracle(o.suite, clean);
      code = clean ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.name() == errors::kSchema ? 2 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "error: cannot write '" << o.out << "'\n";
      return 1;
    }
    file << text;
  }
  return code;
}

}  // namespace prism::cli
