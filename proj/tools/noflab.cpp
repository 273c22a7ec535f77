#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nof/bounds.hpp"
#include "nof/closure.hpp"
#include "nof/covers.hpp"
#include "nof/exact_protocols.hpp"
#include "nof/json_io.hpp"
#include "nof/rs_graphs.hpp"
#include "nof/search.hpp"

namespace {

using namespace nof;

constexpr int kExitOk = 0;
constexpr int kExitIncorrect = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::vector<long long> parse_ll_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

// Table argument: inline family (xor:4, modn:8, zmd:2,3) or a JSON path.
GraphFunctionTable parse_table(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string family = spec.substr(0, colon);
    const auto args = parse_ll_list(spec.substr(colon + 1));
    if (family == "xor" && args.size() == 1) return xor_table(static_cast<int>(args[0]));
    if (family == "modn" && args.size() == 1) return mod_table(static_cast<int>(args[0]));
    if (family == "zmd" && args.size() == 2) {
      const int m = static_cast<int>(args[0]);
      const int d = static_cast<int>(args[1]);
      return zmd_table(m, d, Coords(d, 0));
    }
    if (family == "xor" || family == "modn" || family == "zmd") {
      throw std::invalid_argument("bad arguments for table family " + family);
    }
  }
  return table_from_json(load_json_file(spec));
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << text;
}

struct RunOptions {
  std::string protocol;
  long long n = 0;
  int m = 0;
  int d = 1;
  std::string T, x, y, z;
  bool exhaustive = false;
  uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
};

int cmd_run(const RunOptions& opt) {
  ProtocolSpec p;
  std::function<int(const Coords&)> oracle;
  std::string label = opt.protocol;

  if (opt.protocol == "exactly_n") {
    if (opt.n < 2) throw ConfigError("exactly_n needs --n >= 2");
    const int m = opt.m > 0 ? opt.m : choose_base(opt.n);
    p = exactly_n_protocol(opt.n, m);
    const long long n = opt.n;
    oracle = [n](const Coords& in) { return in[0] + in[1] + in[2] == n ? 1 : 0; };
  } else if (opt.protocol == "exact_t_zd") {
    if (opt.m < 1) throw ConfigError("exact_t_zd needs --m");
    const auto T = opt.T.empty() ? std::vector<long long>(opt.d, 0) : parse_ll_list(opt.T);
    p = exact_t_vector_protocol(opt.m, opt.d, T);
    const int m = opt.m, d = opt.d;
    oracle = [m, d, T](const Coords& in) {
      for (int i = 0; i < d; ++i) {
        long long s = 0;
        for (int c : in) s += to_digits(c, m, d)[i];
        if (s != T[i]) return 0;
      }
      return 1;
    };
  } else if (opt.protocol == "zmd") {
    if (opt.m < 2) throw ConfigError("zmd needs --m >= 2");
    const auto T = opt.T.empty() ? std::vector<long long>(opt.d, 0) : parse_ll_list(opt.T);
    p = zmd_modular_protocol(opt.m, opt.d, T);
    const int m = opt.m, d = opt.d;
    oracle = [m, d, T](const Coords& in) {
      for (int i = 0; i < d; ++i) {
        long long s = 0;
        for (int c : in) s += to_digits(c, m, d)[i];
        if (s % m != T[i]) return 0;
      }
      return 1;
    };
  } else if (opt.protocol == "cfl_baseline") {
    if (opt.n < 2) throw ConfigError("cfl_baseline needs --n >= 2");
    const CflBaseline base = cfl_baseline_protocol(opt.n, opt.seed);
    p = base.protocol;
    const long long n = opt.n;
    oracle = [n](const Coords& in) {
      return (in[0] + in[1] + in[2]) % n == 0 ? 1 : 0;
    };
  } else {
    throw ConfigError("unknown protocol: " + opt.protocol);
  }

  if (!opt.exhaustive) {
    if (opt.x.empty() || opt.y.empty() || opt.z.empty()) {
      throw ConfigError("give --x --y --z or --exhaustive");
    }
    auto pack = [&](const std::string& s) {
      const auto digits = parse_ll_list(s);
      if (digits.size() == 1 && opt.d == 1) return static_cast<int>(digits[0]);
      return static_cast<int>(from_digits(digits, opt.m));
    };
    const Coords input = {pack(opt.x), pack(opt.y), pack(opt.z)};
    const Transcript tr = run_protocol(p, input);
    emit(opt.out, transcript_to_json(tr).dump(2) + "\n");
    if (tr.output != oracle(input)) {
      std::cerr << "incorrect output on input " << json(input).dump() << "\n";
      return kExitIncorrect;
    }
    return kExitOk;
  }

  long long max_bits = 0, total = 0, correct = 0, count = 0;
  Coords in(3);
  for (in[0] = 0; in[0] < p.coord_range[0]; ++in[0]) {
    for (in[1] = 0; in[1] < p.coord_range[1]; ++in[1]) {
      for (in[2] = 0; in[2] < p.coord_range[2]; ++in[2]) {
        const Transcript tr = run_protocol(p, in);
        max_bits = std::max(max_bits, tr.total_bits);
        total += tr.total_bits;
        ++count;
        if (tr.output == oracle(in)) {
          ++correct;
        } else if (correct == count - 1) {
          std::cerr << "counterexample: input " << json(in).dump() << " output "
                    << tr.output << " expected " << oracle(in) << "\n";
        }
      }
    }
  }
  const double mean = count ? static_cast<double>(total) / count : 0.0;
  const double frac = count ? static_cast<double>(correct) / count : 1.0;
  std::ostringstream row;
  if (opt.format == "json") {
    row << json{{"n", opt.n},
                {"protocol", label},
                {"max_bits", max_bits},
                {"mean_bits", mean},
                {"correct_fraction", frac}}
               .dump(2)
        << "\n";
  } else {
    row << "n,protocol,max_bits,mean_bits,correct_fraction\n"
        << opt.n << "," << label << "," << max_bits << "," << mean << "," << frac << "\n";
  }
  emit(opt.out, row.str());
  return correct == count ? kExitOk : kExitIncorrect;
}

struct SearchOptions {
  std::string kind;
  std::string table;
  std::string pattern;
  int n = 0, N = 0, k = 3;
  long long budget = kDefaultNodeBudget;
  bool require_exhaustive = false;
  std::string out;
};

XPattern parse_pattern(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return xpattern_catalog(spec);
  return xpattern_catalog(spec.substr(0, colon),
                          static_cast<int>(std::stoll(spec.substr(colon + 1))));
}

int cmd_search(const SearchOptions& opt) {
  bool exhaustive = false;
  long long value = 0;
  json witness;

  if (opt.kind == "alpha") {
    const SearchResult r = alpha_exact(parse_table(opt.table), opt.budget);
    exhaustive = r.exhaustive;
    value = r.value;
    witness = witness_to_json("alpha", r);
  } else if (opt.kind == "alphabar") {
    const SearchResult r = alpha_bar_exact(opt.n, opt.N, opt.k, opt.budget);
    exhaustive = r.exhaustive;
    value = r.value;
    witness = witness_to_json("alphabar", r);
  } else if (opt.kind == "xfree") {
    const XFreeResult r = xfree_max(parse_pattern(opt.pattern), opt.n, opt.budget);
    exhaustive = r.exhaustive;
    value = r.value;
    witness = json{{"quantity", "xfree"},
                   {"exhaustive", r.exhaustive},
                   {"value", r.value},
                   {"vectors", r.witness}};
  } else if (opt.kind == "chi") {
    const GraphFunctionTable t = parse_table(opt.table);
    const ChiResult r = chi_exact(t, opt.budget);
    exhaustive = r.exhaustive;
    value = r.value;
    witness = coloring_to_json(r.coloring);
    witness["quantity"] = "chi";
    witness["exhaustive"] = r.exhaustive;
    witness["value"] = r.value;
  } else {
    throw ConfigError("unknown search kind: " + opt.kind);
  }

  if (!opt.out.empty()) {
    save_json_file(opt.out, witness);
    // Re-read and re-verify before reporting success.
    const json back = load_json_file(opt.out);
    if (back.contains("points")) {
      const PointSet s = pointset_from_json(back);
      if (!is_star_free(s)) throw std::logic_error("persisted witness fails the star scan");
    }
  }
  std::cout << "value=" << value << " exhaustive=" << (exhaustive ? "true" : "false") << "\n";
  if (opt.require_exhaustive && !exhaustive) return kExitBudget;
  return kExitOk;
}

struct VerifyOptions {
  std::string kind;
  std::string file;
  std::string table;
  std::string coloring;
};

int cmd_verify(const VerifyOptions& opt) {
  if (opt.kind == "starfree") {
    const PointSet s = pointset_from_json(load_json_file(opt.file));
    const auto stars = find_stars(s);
    if (!stars.empty()) {
      std::cerr << "star found with center " << json(stars[0].center).dump() << "\n";
      return kExitIncorrect;
    }
    return kExitOk;
  }
  if (opt.kind == "cover") {
    const GraphFunctionTable t = parse_table(opt.table);
    const Cover c = cover_from_json(load_json_file(opt.file));
    try {
      validate_cover(t, c);
    } catch (const CoverError& e) {
      std::cerr << e.what() << "\n";
      return kExitIncorrect;
    }
    return kExitOk;
  }
  if (opt.kind == "matchings") {
    const json j = load_json_file(opt.file);
    MatchingFamily m;
    m.rows = j.at("rows").get<int>();
    m.cols = j.at("cols").get<int>();
    for (const auto& cls : j.at("classes")) {
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : cls) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      m.classes.push_back(std::move(edges));
    }
    if (!is_induced_family(m)) {
      std::cerr << "family violates the induced-matching invariants\n";
      return kExitIncorrect;
    }
    return kExitOk;
  }
  if (opt.kind == "trace") {
    const GraphFunctionTable t = parse_table(opt.table);
    const Coloring c = coloring_from_json(load_json_file(opt.coloring));
    try {
      lemma37_extract(t, c);
    } catch (const std::logic_error& e) {
      std::cerr << e.what() << "\n";
      return kExitIncorrect;
    }
    return kExitOk;
  }
  throw ConfigError("unknown verify kind: " + opt.kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NOF protocol laboratory"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "run a protocol");
  run->add_option("--protocol", run_opt.protocol)->required();
  run->add_option("--n", run_opt.n);
  run->add_option("--m", run_opt.m);
  run->add_option("--d", run_opt.d);
  run->add_option("--T", run_opt.T);
  run->add_option("--x", run_opt.x);
  run->add_option("--y", run_opt.y);
  run->add_option("--z", run_opt.z);
  run->add_flag("--exhaustive", run_opt.exhaustive);
  run->add_option("--seed", run_opt.seed);
  run->add_option("--format", run_opt.format)->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--out", run_opt.out);

  SearchOptions search_opt;
  CLI::App* search = app.add_subcommand("search", "search an extremal quantity");
  search->add_option("kind", search_opt.kind)->required();
  search->add_option("--table", search_opt.table);
  search->add_option("--pattern", search_opt.pattern);
  search->add_option("--n", search_opt.n);
  search->add_option("--N", search_opt.N);
  search->add_option("--k", search_opt.k);
  search->add_option("--budget", search_opt.budget);
  search->add_flag("--require-exhaustive", search_opt.require_exhaustive);
  search->add_option("--out", search_opt.out);

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "verify a witness file");
  verify->add_option("kind", verify_opt.kind)->required();
  verify->add_option("--file", verify_opt.file);
  verify->add_option("--table", verify_opt.table);
  verify->add_option("--coloring", verify_opt.coloring);

  CLI::App* bounds = app.add_subcommand("bounds", "lower-bound machinery");
  long long bn = 0, bN = 0, bL = 0;
  std::string btable, bcoloring, bfile, bout;
  CLI::App* least = bounds->add_subcommand("least-L", "least L passing Lemma 37");
  least->add_option("--n", bn)->required();
  least->add_option("--N", bN)->required();
  CLI::App* check = bounds->add_subcommand("check", "evaluate both inequalities");
  check->add_option("--n", bn)->required();
  check->add_option("--N", bN)->required();
  check->add_option("--L", bL)->required();
  CLI::App* extract = bounds->add_subcommand("extract", "run the Lemma 37 recursion");
  extract->add_option("--table", btable)->required();
  extract->add_option("--coloring", bcoloring)->required();
  extract->add_option("--out", bout);
  CLI::App* closure = bounds->add_subcommand("closure", "closure statistics");
  closure->add_option("--file", bfile)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_opt);
    if (search->parsed()) return cmd_search(search_opt);
    if (verify->parsed()) return cmd_verify(verify_opt);
    if (bounds->parsed()) {
      if (least->parsed()) {
        std::cout << least_l(bn, bN) << "\n";
        return kExitOk;
      }
      if (check->parsed()) {
        std::cout << bound_report_to_json(bound_checks(bn, bN, bL)).dump(2) << "\n";
        return kExitOk;
      }
      if (extract->parsed()) {
        const GraphFunctionTable t = parse_table(btable);
        const Coloring c = coloring_from_json(load_json_file(bcoloring));
        const ExtractionTrace trace = lemma37_extract(t, c);
        emit(bout, trace_to_json(trace).dump(2) + "\n");
        return kExitOk;
      }
      if (closure->parsed()) {
        const PointSet s = pointset_from_json(load_json_file(bfile));
        const auto [size, closed] = closure_stats(s);
        std::cout << json{{"size", size}, {"closure", closed}}.dump(2) << "\n";
        return kExitOk;
      }
      throw ConfigError("bounds needs a subcommand");
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIncorrect;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
