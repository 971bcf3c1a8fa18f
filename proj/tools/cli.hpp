#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xfs/detail/number.hpp"
#include "xfs/xfs.hpp"

namespace xfs::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string num(double v) { return detail::format_display(v); }

inline std::vector<std::size_t> parse_id_list(const std::string& text, std::size_t expected,
                                              const std::string& flag) {
  std::vector<std::size_t> ids;
  std::string_view rest(text);
  while (true) {
    auto comma = rest.find(',');
    auto id = detail::parse_integer<std::size_t>(rest.substr(0, comma));
    if (!id) break;
    ids.push_back(*id);
    if (comma == std::string_view::npos) {
      rest = {};
      break;
    }
    rest.remove_prefix(comma + 1);
  }
  if (ids.size() != expected || !rest.empty()) {
    throw UsageError(flag + " expects " + std::to_string(expected) + " comma-separated vertex ids, got \"" +
                     text + "\"");
  }
  return ids;
}

inline CompleteWeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("file not found: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

inline EnumerationOptions enumeration_options(std::optional<std::size_t> cap) {
  EnumerationOptions options;
  if (cap) options.max_order = *cap;
  return options;
}

/// Runs one command line. Standard output is only written once the command
/// has fully succeeded, so domain errors never leave partial data behind.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extra-factorial sums and Hamiltonian cycle statistics for complete weighted graphs", "xfs"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Only print machine-readable output");

  std::string file, file_b, edge_text, pair_text, output_path;
  bool csv = false;
  std::optional<std::size_t> limit, cap;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  double gen_lo = 0.0, gen_hi = 1.0;

  auto* stats = app.add_subcommand("stats", "Order, total weight, mean and mean squared cycle length");
  stats->add_option("file", file, "Graph file")->required();

  auto* efs = app.add_subcommand("efs", "Extra-factorial sum of one edge, or the ranked profile as CSV");
  efs->add_option("file", file, "Graph file")->required();
  efs->add_option("--edge", edge_text, "Edge as u,v");
  efs->add_flag("--csv", csv, "CSV output");

  auto* enumerate = app.add_subcommand("enumerate", "List Hamiltonian cycles with their lengths");
  enumerate->add_option("file", file, "Graph file")->required();
  auto* through_opt = enumerate->add_option("--through", edge_text, "Only cycles through edge u,v");
  enumerate->add_option("--pair", pair_text, "Only cycles through edges u,v and x,y")->excludes(through_opt);
  enumerate->add_option("--limit", limit, "Print at most k cycles");
  enumerate->add_option("--max-n-override", cap, "Raise or lower the enumeration cap (default 12)");

  auto* verify = app.add_subcommand("verify", "Check every closed form against enumeration");
  verify->add_option("file", file, "Graph file")->required();
  verify->add_option("--max-n-override", cap, "Raise or lower the enumeration cap (default 12)");

  auto* compare = app.add_subcommand("compare", "Compare the ranked profiles of two graphs");
  compare->add_option("fileA", file, "First graph file")->required();
  compare->add_option("fileB", file_b, "Second graph file")->required();

  auto* gen = app.add_subcommand("gen", "Write a seeded random graph");
  gen->add_option("--n", gen_n, "Order")->required();
  gen->add_option("--seed", gen_seed, "Seed")->required();
  gen->add_option("--lo", gen_lo, "Lower weight bound (default 0)");
  gen->add_option("--hi", gen_hi, "Upper weight bound (default 1)");
  gen->add_option("-o,--output", output_path, "Output file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  std::ostringstream buf;
  try {
    if (stats->parsed()) {
      const auto g = load_graph(file);
      buf << "order " << g.order() << "\n"
          << "edges " << g.edge_count() << "\n"
          << "total_weight " << num(g.total_weight()) << "\n"
          << "mean_length " << num(mean_length_all(g)) << "\n"
          << "mean_squared_length " << num(mean_squared_length(g)) << "\n";
    } else if (efs->parsed()) {
      const auto g = load_graph(file);
      if (!edge_text.empty()) {
        auto ids = parse_id_list(edge_text, 2, "--edge");
        const EdgeKey e(ids[0], ids[1]);
        const EfsBreakdown b = efs_breakdown(g, e);
        const EdgeStatistics s = edge_statistics(g, e);
        const std::string not_through = s.mean_not_through ? num(*s.mean_not_through) : "";
        if (csv) {
          buf << "u,v,x1,x2,x3,efs,mean_through,mean_not_through\n"
              << e.u() << "," << e.v() << "," << num(b.x1) << "," << num(b.x2) << "," << num(b.x3) << ","
              << num(b.efs) << "," << num(s.mean_through) << "," << not_through << "\n";
        } else {
          buf << "edge " << to_string(e) << "\n"
              << "x1 " << num(b.x1) << "\n"
              << "x2 " << num(b.x2) << "\n"
              << "x3 " << num(b.x3) << "\n"
              << "efs " << num(b.efs) << "\n"
              << "mean " << num(s.mean_through) << "\n";
          if (s.mean_not_through) buf << "mean_not_through " << not_through << "\n";
        }
      } else {
        buf << export_profile_csv(ranked_profile(g));
      }
    } else if (enumerate->parsed()) {
      const auto g = load_graph(file);
      const auto options = enumeration_options(cap);
      auto emit = [&](CycleStream& stream) {
        std::size_t printed = 0;
        for (const auto& c : stream) {
          if (limit && printed >= *limit) break;
          buf << render_cycle(c) << "  " << num(cycle_length(g, c)) << "\n";
          ++printed;
        }
      };
      if (!edge_text.empty()) {
        auto ids = parse_id_list(edge_text, 2, "--through");
        auto stream = enumerate_through_edge(g.order(), EdgeKey(ids[0], ids[1]), options);
        emit(stream);
      } else if (!pair_text.empty()) {
        auto ids = parse_id_list(pair_text, 4, "--pair");
        auto pair = enumerate_through_pair(g.order(), ids[0], ids[1], ids[2], ids[3], options);
        if (!quiet) err << "# " << to_string(pair.kind) << " pair\n";
        emit(pair.cycles);
      } else {
        auto stream = enumerate_all(g.order(), options);
        emit(stream);
      }
    } else if (verify->parsed()) {
      const auto g = load_graph(file);
      const VerifyReport report = verify_graph(g, enumeration_options(cap));
      for (const auto& c : report.checks) {
        if (!quiet) {
          buf << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases
              << " cases, worst relative error " << num(c.worst_error) << ")\n";
        }
      }
      buf << (report.all_passed() ? "PASS" : "FAIL") << "\n";
      out << buf.str();
      return report.all_passed() ? kSuccess : kDomainError;
    } else if (compare->parsed()) {
      const auto a = load_graph(file);
      const auto b = load_graph(file_b);
      const ProfileComparison cmp = compare_profiles(ranked_profile(a), ranked_profile(b));
      buf << "ranking " << (cmp.same_ranking ? "same" : "different") << "\n"
          << "scale " << (cmp.scale_factor ? num(*cmp.scale_factor) : std::string("none")) << "\n"
          << "deviation " << num(cmp.max_relative_deviation) << "\n";
    } else if (gen->parsed()) {
      const auto g = random_graph(gen_n, gen_seed, gen_lo, gen_hi);
      const std::string text = serialize_graph(g);
      if (output_path.empty()) {
        buf << text;
      } else {
        std::ofstream file_out(output_path);
        if (!file_out) throw UsageError("cannot write " + output_path);
        file_out << text;
        if (!quiet) err << "wrote " << output_path << "\n";
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  out << buf.str();
  return kSuccess;
}

}  // namespace xfs::cli
