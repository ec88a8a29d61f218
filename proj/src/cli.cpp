#include "dfin/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "dfin/oracle.hpp"

namespace dfin::cli {

namespace {

using json = nlohmann::json;

std::string join_tokens(const TransactionDB& db, const FrequentItemset& itemset) {
  std::string line;
  for (ItemId item : itemset.items) {
    if (!line.empty()) line += ' ';
    line += db.token(item);
  }
  return line;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

// Fails with a message on `err` instead of throwing, so each command can
// return the usage exit code.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      stream_ = &file_;
    }
  }
  bool ok() const { return static_cast<bool>(*stream_); }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct ThresholdFlags {
  double relative = -1;
  std::uint64_t absolute = 0;
  CLI::Option* relative_opt = nullptr;
  CLI::Option* absolute_opt = nullptr;

  void attach(CLI::App& cmd) {
    relative_opt = cmd.add_option("--minsup", relative, "relative minimum support in [0,1]");
    absolute_opt = cmd.add_option("--minsup-abs", absolute, "absolute minimum support count");
    relative_opt->excludes(absolute_opt);
  }

  std::optional<MiningConfig> config(std::ostream& err) const {
    if (absolute_opt->count() > 0) return MiningConfig::absolute(absolute);
    if (relative_opt->count() == 0) {
      err << "error: one of --minsup or --minsup-abs is required\n";
      return std::nullopt;
    }
    if (!(relative >= 0.0 && relative <= 1.0)) {
      err << "error: --minsup must lie in [0, 1]\n";
      return std::nullopt;
    }
    return MiningConfig::relative(relative);
  }
};

std::optional<TransactionDB> read_input(const std::string& path, std::ostream& err) {
  try {
    return load_transactions(path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return std::nullopt;
  }
}

}  // namespace

MiningResult run_algorithm(const TransactionDB& db, const MiningConfig& cfg) {
  if (cfg.algo != Algorithm::oracle) return mine(db, cfg);
  const auto start = std::chrono::steady_clock::now();
  MiningResult result;
  result.threshold = resolve_threshold(cfg, db.size());
  result.itemsets = oracle_mine(db, cfg).itemsets;
  result.timings.total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void write_itemsets(std::ostream& out, Format format, const TransactionDB& db,
                    const MiningResult& result) {
  switch (format) {
    case Format::text:
      for (const auto& itemset : result.itemsets) {
        out << join_tokens(db, itemset) << " (#SUP: " << itemset.support << ")\n";
      }
      break;
    case Format::csv:
      out << "itemset,support\n";
      for (const auto& itemset : result.itemsets) {
        out << csv_field(join_tokens(db, itemset)) << ',' << itemset.support << '\n';
      }
      break;
    case Format::json: {
      json doc;
      doc["threshold"] = result.threshold;
      doc["transactions"] = db.size();
      doc["itemsets"] = json::array();
      for (const auto& itemset : result.itemsets) {
        json tokens = json::array();
        for (ItemId item : itemset.items) tokens.push_back(db.token(item));
        doc["itemsets"].push_back({{"items", std::move(tokens)}, {"support", itemset.support}});
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

void write_stats(std::ostream& out, Format format, const StatsReport& report) {
  if (format == Format::json) {
    json doc;
    doc["threshold"] = report.threshold;
    doc["itemset_count"] = report.itemset_count;
    doc["avg_diffnodeset_len"] = report.avg_diffnodeset_len;
    doc["avg_nodeset_len"] = report.avg_nodeset_len;
    doc["reduction_ratio"] =
        report.reduction_ratio ? json(*report.reduction_ratio) : json(nullptr);
    doc["per_length"] = json::object();
    for (const auto& [length, stats] : report.per_length) {
      doc["per_length"][std::to_string(length)] = {
          {"mean_diffnodeset_len", stats.mean_diffnodeset_len},
          {"mean_nodeset_len", stats.mean_nodeset_len},
          {"itemset_count", stats.itemset_count}};
    }
    out << doc.dump(2) << '\n';
    return;
  }
  std::ostringstream ratio;
  if (report.reduction_ratio) {
    ratio << std::fixed << std::setprecision(2) << *report.reduction_ratio;
  } else {
    ratio << "n/a";
  }
  out << std::fixed << std::setprecision(3);
  out << "threshold            " << report.threshold << '\n'
      << "itemsets (k >= 2)    " << report.itemset_count << '\n'
      << "avg DiffNodeset len  " << report.avg_diffnodeset_len << '\n'
      << "avg Nodeset len      " << report.avg_nodeset_len << '\n'
      << "reduction ratio      " << ratio.str() << '\n';
  if (!report.per_length.empty()) {
    out << "length  itemsets  avg_dn  avg_ns\n";
    for (const auto& [length, stats] : report.per_length) {
      out << std::setw(6) << length << "  " << std::setw(8) << stats.itemset_count << "  "
          << std::setw(6) << stats.mean_diffnodeset_len << "  " << std::setw(6)
          << stats.mean_nodeset_len << '\n';
    }
  }
  out.unsetf(std::ios::floatfield);
}

int run_bench(const TransactionDB& db, const BenchOptions& options, std::ostream& out,
              std::ostream& err) {
  out << kBenchHeader << '\n';
  for (double minsup : options.minsups) {
    std::optional<std::size_t> expected;
    Algorithm expected_algo = Algorithm::dfin;
    for (Algorithm algo : options.algos) {
      for (int repeat = 0; repeat < options.repeats; ++repeat) {
        const MiningResult result = options.runner(db, MiningConfig::relative(minsup, algo));
        const auto& t = result.timings;
        out << options.dataset_id << ',' << minsup << ',' << to_string(algo) << ',' << repeat
            << ',' << std::fixed << std::setprecision(3) << t.total_ms << ',' << t.build_ms << ','
            << t.pairs_ms << ',' << t.deep_ms << ',' << result.itemsets.size() << ','
            << result.counters.nodes_visited << ',' << result.counters.promotions << '\n';
        out.unsetf(std::ios::floatfield);
        if (!expected) {
          expected = result.itemsets.size();
          expected_algo = algo;
        } else if (*expected != result.itemsets.size()) {
          out.flush();
          err << "error: result mismatch at minsup " << minsup << ": " << to_string(algo)
              << " found " << result.itemsets.size() << " itemsets, "
              << to_string(expected_algo) << " found " << *expected << '\n';
          return kExitMismatch;
        }
      }
    }
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frequent itemset mining with DiffNodesets"};
  app.require_subcommand(1);

  // mine
  std::string input;
  std::string output;
  std::string algo_name = "dfin";
  std::string format_name = "text";
  ThresholdFlags mine_threshold;
  auto* mine_cmd = app.add_subcommand("mine", "mine all frequent itemsets");
  mine_cmd->add_option("--input", input, "FIMI-format transaction file")->required();
  mine_threshold.attach(*mine_cmd);
  mine_cmd->add_option("--algo", algo_name, "dfin | fin | oracle");
  mine_cmd->add_option("--output", output, "output path (default stdout)");
  mine_cmd->add_option("--format", format_name, "text | json | csv");

  // stats
  ThresholdFlags stats_threshold;
  auto* stats_cmd = app.add_subcommand("stats", "average DiffNodeset vs Nodeset sizes");
  stats_cmd->add_option("--input", input, "FIMI-format transaction file")->required();
  stats_threshold.attach(*stats_cmd);
  stats_cmd->add_option("--format", format_name, "text | json");

  // gen
  GenConfig gen;
  gen.num_patterns = 10;
  auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic transaction database");
  gen_cmd->add_option("--transactions", gen.num_transactions, "number of transactions")
      ->required();
  gen_cmd->add_option("--items", gen.num_items, "number of distinct items")->required();
  gen_cmd->add_option("--avg-len", gen.avg_len, "mean transaction length")->required();
  gen_cmd->add_option("--patterns", gen.num_patterns, "number of seeded patterns");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--output", output, "output path (default stdout)");

  // bench
  std::string minsup_list;
  std::string algo_list = "dfin,fin";
  int repeats = 3;
  auto* bench_cmd = app.add_subcommand("bench", "runtime sweep over minimum supports");
  bench_cmd->add_option("--input", input, "FIMI-format transaction file")->required();
  bench_cmd->add_option("--minsup-list", minsup_list, "comma-separated relative supports")
      ->required();
  bench_cmd->add_option("--algos", algo_list, "comma-separated subset of dfin,fin,oracle");
  bench_cmd->add_option("--repeats", repeats, "runs per (minsup, algo)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mine_cmd) {
      const auto cfg = mine_threshold.config(err);
      if (!cfg) return kExitUsage;
      MiningConfig mining = *cfg;
      const auto algo = parse_algorithm(algo_name);
      const auto format = parse_format(format_name);
      if (!algo || !format) {
        err << "error: unknown --algo or --format value\n";
        return kExitUsage;
      }
      mining.algo = *algo;
      const auto db = read_input(input, err);
      if (!db) return kExitUsage;
      const MiningResult result = run_algorithm(*db, mining);
      Output sink(output, out);
      if (!sink.ok()) {
        err << "error: cannot open output file: " << output << '\n';
        return kExitUsage;
      }
      write_itemsets(sink.stream(), *format, *db, result);
      return kExitOk;
    }

    if (*stats_cmd) {
      const auto cfg = stats_threshold.config(err);
      if (!cfg) return kExitUsage;
      const auto format = parse_format(format_name);
      if (!format || *format == Format::csv) {
        err << "error: --format must be text or json\n";
        return kExitUsage;
      }
      const auto db = read_input(input, err);
      if (!db) return kExitUsage;
      write_stats(out, *format, compute_stats(*db, *cfg));
      return kExitOk;
    }

    if (*gen_cmd) {
      TransactionDB db;
      try {
        db = generate_synthetic(gen);
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
      }
      Output sink(output, out);
      if (!sink.ok()) {
        err << "error: cannot open output file: " << output << '\n';
        return kExitUsage;
      }
      write_transactions(sink.stream(), db);
      return kExitOk;
    }

    if (*bench_cmd) {
      BenchOptions options;
      options.dataset_id = std::filesystem::path(input).stem().string();
      options.repeats = repeats;
      for (const auto& part : split(minsup_list, ',')) {
        double value = -1;
        try {
          std::size_t used = 0;
          value = std::stod(part, &used);
          if (used != part.size()) value = -1;
        } catch (const std::exception&) {
        }
        if (!(value >= 0.0 && value <= 1.0)) {
          err << "error: invalid minimum support in --minsup-list: " << part << '\n';
          return kExitUsage;
        }
        options.minsups.push_back(value);
      }
      for (const auto& part : split(algo_list, ',')) {
        const auto algo = parse_algorithm(part);
        if (!algo) {
          err << "error: unknown algorithm in --algos: " << part << '\n';
          return kExitUsage;
        }
        options.algos.push_back(*algo);
      }
      if (repeats < 0) {
        err << "error: --repeats must be non-negative\n";
        return kExitUsage;
      }
      const auto db = read_input(input, err);
      if (!db) return kExitUsage;
      return run_bench(*db, options, out, err);
    }
  } catch (const std::length_error& e) {
    // The oracle refusing a large lattice.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dfin::cli
