#include "permrep/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "permrep/analysis.hpp"
#include "permrep/sims.hpp"

namespace permrep {

namespace {

std::string strip_comment(const std::string& line) {
  const std::size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

GeneratorFile read_generator_stream(std::istream& in, const std::string& name) {
  GeneratorFile file;
  file.path = name;
  file.gens.label = name;

  std::string line;
  long line_no = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (blank(body)) continue;
    const std::string where = name + ":" + std::to_string(line_no);
    if (!have_degree) {
      std::istringstream iss(body);
      std::string keyword;
      long long n = 0;
      if (!(iss >> keyword >> n) || keyword != "degree")
        throw ParseError(ParseError::Kind::Syntax,
                         where + ": expected 'degree n' as the first entry", 0);
      std::string extra;
      if (iss >> extra)
        throw ParseError(ParseError::Kind::Syntax,
                         where + ": trailing data after degree", 0);
      if (n < 1 || n > 1000000)
        throw std::out_of_range(where + ": degree must be in 1..1000000");
      file.degree = static_cast<int>(n);
      file.gens.degree = file.degree;
      have_degree = true;
      continue;
    }
    try {
      file.gens.perms.push_back(parse_cycles(body, file.degree));
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), where + ": " + e.what(), e.position());
    }
  }
  if (!have_degree)
    throw ParseError(ParseError::Kind::Syntax,
                     name + ": missing 'degree n' line", 0);
  return file;
}

GeneratorFile read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  return read_generator_stream(in, path);
}

namespace {

Strategy strategy_from_name(const std::string& name) {
  if (name == "recursive") return Strategy::Recursive;
  if (name == "iterative") return Strategy::Iterative;
  throw CLI::ValidationError("--strategy", "must be recursive or iterative");
}

// "1,2,3" or "1..20" (inclusive range).
std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  const std::size_t dots = text.find("..");
  if (dots != std::string::npos) {
    const std::uint64_t lo = std::stoull(text.substr(0, dots));
    const std::uint64_t hi = std::stoull(text.substr(dots + 2));
    if (hi < lo || hi - lo > 100000)
      throw std::invalid_argument("bad seed range '" + text + "'");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::istringstream iss(text);
  std::string item;
  while (std::getline(iss, item, ',')) seeds.push_back(std::stoull(item));
  return seeds;
}

std::vector<int> parse_size_list(const std::string& text) {
  std::vector<int> sizes;
  std::istringstream iss(text);
  std::string item;
  while (std::getline(iss, item, ',')) sizes.push_back(std::stoi(item));
  if (sizes.empty()) throw std::invalid_argument("empty size list");
  return sizes;
}

int cmd_build(const std::string& path, const std::string& strategy_name_,
              bool stats_flag, bool dump_flag, std::ostream& out) {
  const GeneratorFile file = read_generator_file(path);
  const Strategy strategy = strategy_from_name(strategy_name_);
  auto [sys, stats] = build(file.gens, strategy);

  out << "order " << order(sys).str() << "\n";
  for (int k = 1; k <= sys.degree(); ++k)
    if (sys.s(k) > 1)
      out << "level " << k << " s " << sys.s(k) << " t " << sys.t(k) << "\n";
  out << "strong-generators " << strong_generators(sys).size() << "\n";

  if (stats_flag) {
    out << "stats strategy " << strategy_name(strategy) << "\n"
        << "stats membership-tests " << stats.membership_tests << "\n"
        << "stats product-tests " << stats.product_tests << "\n"
        << "stats b-invocations " << stats.b_invocations << "\n"
        << "stats mult-cost-units " << stats.mult_cost_units << "\n"
        << "stats slots-filled " << stats.slots_filled << "\n";
  }
  if (dump_flag) {
    for (int k = 2; k <= sys.degree(); ++k)
      for (int j = 1; j < k; ++j)
        if (sys.slot_defined(k, j))
          out << "sigma " << k << " " << j << " "
              << format_cycles(sys.slot_direct(k, j)) << "\n";
  }
  return kExitOk;
}

int cmd_member(const std::string& path, const std::string& perm_text,
               std::ostream& out) {
  const GeneratorFile file = read_generator_file(path);
  const Perm p = parse_cycles(perm_text, file.degree);
  auto [sys, stats] = build(file.gens, Strategy::Recursive);

  const MembershipTrace trace = sift(sys, p);
  if (trace.member) {
    out << "MEMBER path ";
    if (trace.path.empty()) {
      out << "-";
    } else {
      for (const auto& [k, j] : trace.path) out << "(" << k << "," << j << ")";
    }
    out << " cost " << trace.cost_units << "\n";
    return kExitOk;
  }
  out << "NON-MEMBER failure (" << trace.failure_level << ","
      << trace.failure_column << ") residue " << format_cycles(trace.residue)
      << "\n";
  return kExitNonMember;
}

int cmd_bench(const std::string& family_spec, const std::string& sizes_text,
              const std::string& strategy_name_, const std::string& seeds_text,
              const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  const Strategy strategy = strategy_from_name(strategy_name_);
  std::vector<BenchRow> rows;
  std::vector<int> sizes;

  if (sizes_text == "-") {
    // Single instance taken verbatim from the family spec.
    const GeneratorSet gens = family_from_spec(family_spec);
    const std::string name = family_spec.substr(0, family_spec.find(':'));
    const auto start = std::chrono::steady_clock::now();
    auto [sys, stats] = build(gens, strategy);
    const auto stop = std::chrono::steady_clock::now();
    BenchRow row;
    row.family = name;
    row.label = gens.label;
    row.n = gens.degree;
    row.strategy = strategy;
    row.mult_cost_units = stats.mult_cost_units;
    row.product_tests = stats.product_tests;
    row.b_invocations = stats.b_invocations;
    row.slots_filled = stats.slots_filled;
    row.order = order(sys);
    row.theta_g = theta(row.order);
    row.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(std::move(row));
  } else {
    sizes = parse_size_list(sizes_text);
    const std::string name = family_spec.substr(0, family_spec.find(':'));
    const std::vector<std::uint64_t> seeds =
        seeds_text.empty() ? std::vector<std::uint64_t>{}
                           : parse_seed_list(seeds_text);
    rows = run_bench(name, sizes, strategy, seeds);
  }

  // CSV is the machine-readable product: it goes to the file when --out is
  // given (summary then uses stdout), otherwise to stdout (summary to err).
  std::ostream* summary = &err;
  if (!out_path.empty()) {
    std::ofstream csv(out_path);
    if (!csv) throw std::runtime_error("cannot open '" + out_path + "'");
    write_csv(csv, rows);
    summary = &out;
  } else {
    write_csv(out, rows);
  }

  if (sizes.size() > 1) {
    const GrowthFit fit = fit_rows(rows.front().family, sizes, rows);
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", fit.pairwise_exponents[i]);
      *summary << "exponent " << sizes[i] << " " << sizes[i + 1] << " " << buf
               << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"permutation group engine"};
  app.name("permgroup");
  app.require_subcommand(1);

  std::string file_path, perm_text, strategy = "recursive";
  std::string family, sizes, seeds, csv_out;
  bool stats_flag = false, dump_flag = false;

  CLI::App* build_cmd =
      app.add_subcommand("build", "build a system from a generator file");
  build_cmd->add_option("file", file_path, "generator file")->required();
  build_cmd->add_option("--strategy", strategy,
                        "recursive (default) or iterative");
  build_cmd->add_flag("--stats", stats_flag, "print build statistics");
  build_cmd->add_flag("--dump", dump_flag, "print every stored transversal");

  CLI::App* member_cmd =
      app.add_subcommand("member", "test a perm against a generator file");
  member_cmd->add_option("file", file_path, "generator file")->required();
  member_cmd->add_option("perm", perm_text, "perm in cycle notation")
      ->required();

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "build family instances and report costs");
  bench_cmd->add_option("--family", family, "family spec, e.g. two-gen")
      ->required();
  bench_cmd->add_option("--sizes", sizes, "comma list of n, or - for one instance")
      ->required();
  bench_cmd->add_option("--strategy", strategy,
                        "recursive (default) or iterative");
  bench_cmd->add_option("--seeds", seeds, "comma list or lo..hi range");
  bench_cmd->add_option("--out", csv_out, "write CSV here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (build_cmd->parsed())
      return cmd_build(file_path, strategy, stats_flag, dump_flag, out);
    if (member_cmd->parsed()) return cmd_member(file_path, perm_text, out);
    return cmd_bench(family, sizes, strategy, seeds, csv_out, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ParseError::Kind::PointOutOfRange ? kExitDegree
                                                         : kExitParse;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitDegree;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace permrep
