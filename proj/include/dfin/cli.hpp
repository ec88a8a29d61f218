#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dfin/dataset.hpp"
#include "dfin/itemset.hpp"
#include "dfin/miner.hpp"
#include "dfin/stats.hpp"

namespace dfin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

/// Entry point shared by the `dfin` executable and the tests. `args` holds
/// the full command line, program name first.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// mine() for dfin/fin; the oracle result wrapped into a MiningResult
/// otherwise.
MiningResult run_algorithm(const TransactionDB& db, const MiningConfig& cfg);

enum class Format { text, json, csv };

/// Itemsets in canonical order. Text: tokens byte-ascending joined by single
/// spaces, then " (#SUP: n)". CSV: header "itemset,support". JSON: object
/// with "threshold", "transactions" and "itemsets" ([{items, support}]).
void write_itemsets(std::ostream& out, Format format, const TransactionDB& db,
                    const MiningResult& result);

/// JSON carries avg_diffnodeset_len, avg_nodeset_len, reduction_ratio (null
/// when undefined) and per_length; text prints "n/a" for an undefined ratio.
void write_stats(std::ostream& out, Format format, const StatsReport& report);

using Runner = std::function<MiningResult(const TransactionDB&, const MiningConfig&)>;

struct BenchOptions {
  std::string dataset_id;
  std::vector<double> minsups;
  std::vector<Algorithm> algos;
  int repeats = 3;
  /// Swappable for fault-injection tests.
  Runner runner = run_algorithm;
};

inline constexpr const char* kBenchHeader =
    "dataset,minsup,algo,repeat,total_ms,phase1_ms,phase2_ms,phase3_ms,itemset_count,"
    "nodes_visited,promotions";

/// One CSV row per (minsup, algo, repeat). Returns kExitMismatch as soon as
/// two algorithms disagree on the itemset count for one minsup.
int run_bench(const TransactionDB& db, const BenchOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace dfin::cli
