// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dfin/cli.hpp"
#include "dfin/diffnodesets.hpp"
#include "dfin/miner.hpp"
#include "dfin/oracle.hpp"
#include "dfin/stats.hpp"
#include "support/test_support.hpp"

namespace {

using namespace dfin;
using Clock = std::chrono::steady_clock;

// Tolerances and sizes.
constexpr double kTreeBuildBudgetMs = 1.0;
constexpr int kTreeBuildRuns = 25;
constexpr int kRandomDatabases = 600;
constexpr double kRandomSuiteBudgetS = 60.0;
constexpr int kDenseDatabases = 60;
constexpr double kChessMinsup = 0.15;
constexpr double kChessRatio = 735.0;
constexpr double kChessRelTolerance = 0.15;
constexpr std::uint64_t kSuiteSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int id, const std::string& name, const Outcome& o, int& failures) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << name;
  if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
  std::cout << '\n';
  if (!o.pass) ++failures;
}

const ItemNodeset& item_ns(const std::vector<ItemNodeset>& ns, const TransactionDB& db,
                           const ItemOrder& order, const char* token) {
  return ns[testing::rank(db, order, token)];
}

Outcome golden_tree() {
  Outcome o;
  const TransactionDB db = testing::example1();
  const ItemOrder order = scan_frequent_items(db, MiningConfig::relative(0.4));
  const auto ns = extract_item_nodesets(construct_ppc_tree(db, order));
  const std::vector<std::pair<const char*, ItemNodeset>> expected{
      {"e", {{5, 11, 8}}},
      {"d", {{6, 7, 6}}},
      {"c", {{2, 3, 2}, {7, 6, 1}, {10, 10, 2}}},
      {"b", {{3, 2, 1}, {8, 5, 1}, {11, 9, 2}}},
      {"a", {{4, 1, 1}, {9, 4, 1}, {12, 8, 2}}}};
  if (ns.size() != expected.size()) o.fail("wrong number of frequent items");
  for (const auto& [token, codes] : expected) {
    if (item_ns(ns, db, order, token) != codes) o.fail(std::string("Nodeset of ") + token);
  }

  double best = 1e9;
  for (int run = 0; run < kTreeBuildRuns; ++run) {
    const auto start = Clock::now();
    const ItemOrder o2 = scan_frequent_items(db, MiningConfig::relative(0.4));
    const auto ns2 = extract_item_nodesets(construct_ppc_tree(db, o2));
    best = std::min(best, ms_since(start));
    if (ns2.size() != ns.size()) o.fail("unstable build");
  }
  std::ostringstream d;
  d << "best build " << best << " ms";
  if (best >= kTreeBuildBudgetMs) o.fail(d.str() + " over budget");
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome golden_structures() {
  Outcome o;
  const TransactionDB db = testing::example1();
  const ItemOrder order = scan_frequent_items(db, 4);
  const auto ns = extract_item_nodesets(construct_ppc_tree(db, order));
  const auto& c = item_ns(ns, db, order, "c");
  const auto& d = item_ns(ns, db, order, "d");
  const auto& e = item_ns(ns, db, order, "e");

  const Nodeset ns_ce = nodeset_2itemset(c, e);
  const Nodeset ns_cd = nodeset_2itemset(c, d);
  const Nodeset ns_cde = nodeset_intersect(ns_cd, ns_ce);
  const DiffNodeset dn_ce = build_2itemset_dn(c, e);
  const DiffNodeset dn_cd = build_2itemset_dn(c, d);
  const DiffNodeset dn_cde = diff_subtract(dn_ce, dn_cd);
  const std::uint64_t sup_c = nodeset_support(c);
  const std::uint64_t sup_ce = support_from_diff(sup_c, dn_ce);
  const std::uint64_t sup_cd = support_from_diff(sup_c, dn_cd);
  const std::uint64_t sup_cde = support_from_diff(sup_cd, dn_cde);

  if (ns_ce != Nodeset{{7, 1}, {10, 2}}) o.fail("NS(ce)");
  if (ns_cd != Nodeset{{7, 1}}) o.fail("NS(cd)");
  if (ns_cde != Nodeset{{7, 1}}) o.fail("NS(cde)");
  if (dn_ce != DiffNodeset{{2, 2}}) o.fail("DN(ce)");
  if (dn_cd != DiffNodeset{{2, 2}, {10, 2}}) o.fail("DN(cd)");
  if (!dn_cde.empty()) o.fail("DN(cde)");
  if (sup_ce != 3) o.fail("support(ce)");
  if (sup_cd != 1) o.fail("support(cd)");
  if (sup_cde != 1) o.fail("support(cde)");
  if (nodeset_support(ns_ce) != 3 || nodeset_support(ns_cde) != 1) o.fail("Nodeset supports");
  return o;
}

struct RandomSuite {
  Outcome equivalence;
  Outcome identities;
  Outcome complexity;
  Outcome visits;
  double seconds = 0;
  std::uint64_t itemsets_checked = 0;
  std::uint64_t dn_calls = 0;
};

MiningConfig abs_cfg(std::uint64_t threshold, Algorithm algo, bool promotion = true) {
  MiningConfig cfg = MiningConfig::absolute(threshold, algo);
  cfg.promotion = promotion;
  return cfg;
}

RandomSuite random_suite() {
  RandomSuite r;
  std::mt19937_64 rng(kSuiteSeed);
  const auto start = Clock::now();
  for (int trial = 0; trial < kRandomDatabases; ++trial) {
    const TransactionDB db = testing::random_db(rng);
    // Cycle through the whole range 1..|DB|/2.
    const std::uint64_t top = std::max<std::uint64_t>(1, db.size() / 2);
    const std::uint64_t threshold = 1 + static_cast<std::uint64_t>(trial) % top;
    const std::string tag = "db " + std::to_string(trial);

    // Equivalence.
    const auto expected = oracle_mine(db, MiningConfig::absolute(threshold)).itemsets;
    const MiningResult dfin_run = mine(db, abs_cfg(threshold, Algorithm::dfin));
    const MiningResult fin_run = mine(db, abs_cfg(threshold, Algorithm::fin));
    const MiningResult plain_run = mine(db, abs_cfg(threshold, Algorithm::dfin, false));
    if (dfin_run.itemsets != expected) r.equivalence.fail(tag + ": dfin differs from oracle");
    if (fin_run.itemsets != expected) r.equivalence.fail(tag + ": fin differs from oracle");
    if (plain_run.itemsets != expected) r.equivalence.fail(tag + ": no-promotion run differs");
    if (dfin_run.counters.nodes_visited > plain_run.counters.nodes_visited) {
      r.visits.fail(tag + ": promotion visited more nodes");
    }

    // Identities and complexity.
    const ItemOrder order = scan_frequent_items(db, threshold);
    const auto ns = extract_item_nodesets(construct_ppc_tree(db, order));
    for (Rank x = 0; x < order.size(); ++x) {
      const ItemId single[] = {order.item(x)};
      if (nodeset_support(ns[x]) != oracle_support(db, single)) {
        r.identities.fail(tag + ": item Nodeset count-sum");
      }
      for (Rank y = 0; y < x; ++y) {
        std::uint64_t iterations = 0;
        const DiffNodeset dn = build_2itemset_dn(ns[x], ns[y], &iterations);
        ++r.dn_calls;
        const std::uint64_t bound = ns[x].size() + ns[y].size();
        if (iterations > bound) r.complexity.fail(tag + ": merge exceeded m+n");
        if (dn != testing::definitional_filter(ns[x], ns[y], false)) {
          r.identities.fail(tag + ": 2-itemset DiffNodeset differs from definition");
        }
      }
    }
    testing::walk_structures(
        order, ns, threshold,
        [&](const testing::ItemsetStructures& s, const Nodeset& p1_ns, std::uint64_t p1_support,
            const Nodeset*) {
          ++r.itemsets_checked;
          const std::uint64_t truth = oracle_support(db, testing::to_items(order, s.itemset));
          if (s.support_from_ns != truth) r.identities.fail(tag + ": Nodeset count-sum");
          if (s.support_from_dn != truth) r.identities.fail(tag + ": support_from_diff");
          if (s.dn != testing::set_minus(p1_ns, s.ns)) {
            r.identities.fail(tag + ": DiffNodeset differs from Nodeset difference");
          }
          if (nodeset_support(s.ns) + nodeset_support(s.dn) != p1_support ||
              s.ns.size() + s.dn.size() != p1_ns.size()) {
            r.identities.fail(tag + ": partition of generator Nodeset");
          }
        });
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream d;
  d << kRandomDatabases << " databases in " << r.seconds << " s";
  if (r.seconds >= kRandomSuiteBudgetS) r.equivalence.fail(d.str() + ", over budget");
  if (r.equivalence.pass) r.equivalence.detail = d.str();
  if (r.identities.pass) {
    r.identities.detail = std::to_string(r.itemsets_checked) + " itemsets of length >= 2";
  }
  if (r.complexity.pass) r.complexity.detail = std::to_string(r.dn_calls) + " merges";
  return r;
}

Outcome size_reduction() {
  Outcome o;
  std::mt19937_64 rng(kSuiteSeed + 1);
  testing::RandomDBOptions opts;
  opts.max_items = 16;
  opts.max_transactions = 200;
  opts.min_density = 0.5;
  opts.max_density = 0.95;
  double worst = 0;
  int measured = 0;
  for (int trial = 0; trial < kDenseDatabases; ++trial) {
    const TransactionDB db = testing::random_db(rng, opts);
    if (db.empty()) continue;
    const double avg_len =
        static_cast<double>(db.total_items()) / static_cast<double>(db.size());
    if (avg_len < 0.5 * static_cast<double>(db.universe().size())) continue;
    for (double minsup : {0.3, 0.5, 0.7}) {
      const StatsReport s = compute_stats(db, MiningConfig::relative(minsup));
      if (s.itemset_count == 0) continue;
      ++measured;
      worst = std::max(worst, s.avg_diffnodeset_len / std::max(s.avg_nodeset_len, 1e-300));
      if (s.avg_diffnodeset_len > s.avg_nodeset_len) {
        o.fail("dense db " + std::to_string(trial) + " minsup " + std::to_string(minsup));
      }
    }
  }
  if (measured == 0) o.fail("no dense database produced itemsets");
  std::ostringstream d;
  d << measured << " dense runs, max DN/NS " << worst;

  if (const char* chess = std::getenv("DFIN_CHESS_PATH")) {
    const StatsReport s = compute_stats(load_transactions(chess), MiningConfig::relative(kChessMinsup));
    const double ratio = s.reduction_ratio.value_or(0.0);
    d << "; chess ratio " << ratio;
    if (std::abs(ratio - kChessRatio) > kChessRelTolerance * kChessRatio) {
      o.fail(d.str() + " outside tolerance");
    }
  } else {
    d << "; chess check skipped, DFIN_CHESS_PATH unset";
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome bench_gate(const Outcome& visits) {
  Outcome o = visits;
  const TransactionDB db = generate_synthetic({300, 12, 5.0, 6, kSuiteSeed});
  cli::BenchOptions options;
  options.dataset_id = "gate";
  options.minsups = {0.05, 0.1, 0.2};
  options.algos = {Algorithm::dfin, Algorithm::fin, Algorithm::oracle};
  options.repeats = 1;
  std::ostringstream out;
  std::ostringstream err;
  if (cli::run_bench(db, options, out, err) != cli::kExitOk) o.fail("agreeing run not exit 0");

  options.runner = [](const TransactionDB& d, const MiningConfig& cfg) {
    MiningResult result = cli::run_algorithm(d, cfg);
    if (cfg.algo == Algorithm::fin && !result.itemsets.empty()) result.itemsets.pop_back();
    return result;
  };
  if (cli::run_bench(db, options, out, err) != cli::kExitMismatch) {
    o.fail("injected mismatch not exit 3");
  }
  return o;
}

Outcome example_end_to_end(const std::string& path) {
  Outcome o;
  const std::string expected =
      "a (#SUP: 4)\nb (#SUP: 4)\nc (#SUP: 5)\nd (#SUP: 6)\ne (#SUP: 8)\n"
      "a b (#SUP: 4)\na c (#SUP: 4)\nb c (#SUP: 4)\nd e (#SUP: 6)\na b c (#SUP: 4)\n";
  std::string first;
  for (int run = 0; run < 3; ++run) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli({"dfin", "mine", "--input", path, "--minsup", "0.4"}, out, err);
    if (code != cli::kExitOk) o.fail("exit " + std::to_string(code) + ": " + err.str());
    if (run == 0) first = out.str();
    if (out.str() != first) o.fail("output not byte-stable");
  }
  if (first != expected) o.fail("output differs from expected itemsets");
  return o;
}

template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::exception& e) {
    decltype(fn()) result;
    result.fail(std::string("exception: ") + e.what());
    return result;
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string example_path = argc > 1 ? argv[1] : "tests/data/ex1.dat";
  int failures = 0;
  report(1, "worked example: item Nodesets", guarded(golden_tree), failures);
  report(2, "worked example: Nodesets, DiffNodesets, supports", guarded(golden_structures),
         failures);
  RandomSuite suite;
  try {
    suite = random_suite();
  } catch (const std::exception& e) {
    for (Outcome* o : {&suite.equivalence, &suite.identities, &suite.complexity, &suite.visits}) {
      o->fail(std::string("exception: ") + e.what());
    }
  }
  report(3, "oracle equivalence on random databases", suite.equivalence, failures);
  report(4, "structure identities on random databases", suite.identities, failures);
  report(5, "2-itemset merge within m+n iterations", suite.complexity, failures);
  report(6, "DiffNodesets no longer than Nodesets on dense data", guarded(size_reduction), failures);
  report(7, "bench gate and promotion visit bound", guarded([&] { return bench_gate(suite.visits); }), failures);
  report(8, "worked example end to end", guarded([&] { return example_end_to_end(example_path); }),
         failures);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
