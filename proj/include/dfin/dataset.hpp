#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dfin {

/// Dense id of an item token. Ids are assigned in byte-wise token order, so
/// comparing ids compares tokens.
using ItemId = std::uint32_t;

/// Position of a frequent item in the support-descending order (0 = most
/// frequent).
using Rank = std::uint32_t;
inline constexpr Rank kNoRank = std::numeric_limits<Rank>::max();

struct DBAccess;

/// Ordered collection of transactions over an interned token universe.
///
/// Each transaction is a duplicate-free set of items; the items of one
/// transaction are kept in the order they first appeared in the input so that
/// serializing and re-parsing reproduces the database exactly.
class TransactionDB {
 public:
  TransactionDB() = default;

  /// Builds a database from token rows. Duplicate tokens within a row are
  /// collapsed to their first occurrence. Empty rows are kept as empty
  /// transactions.
  static TransactionDB from_rows(const std::vector<std::vector<std::string>>& rows);

  std::size_t size() const { return offsets_.size() - 1; }
  bool empty() const { return size() == 0; }

  std::span<const ItemId> transaction(std::size_t index) const {
    return {items_.data() + offsets_[index], offsets_[index + 1] - offsets_[index]};
  }

  /// The item universe, byte-wise ascending. `ItemId` indexes into it.
  const std::vector<std::string>& universe() const { return universe_; }
  const std::string& token(ItemId id) const { return universe_[id]; }
  std::optional<ItemId> find(std::string_view token) const;

  /// Sum of transaction lengths.
  std::size_t total_items() const { return items_.size(); }

  friend bool operator==(const TransactionDB&, const TransactionDB&) = default;

 private:
  friend struct DBAccess;

  std::vector<std::string> universe_;
  std::vector<ItemId> items_;
  std::vector<std::size_t> offsets_{0};
};

/// Parses FIMI-style text: one transaction per line, tokens separated by runs
/// of spaces or tabs. Blank lines are ignored and tokens without any printable
/// character are skipped.
TransactionDB parse_transactions(std::istream& in);
TransactionDB parse_transactions(std::string_view text);

/// Reads a file via parse_transactions. Throws std::runtime_error if the file
/// cannot be opened.
TransactionDB load_transactions(const std::string& path);

/// Writes one line per transaction, tokens joined by a single space.
void write_transactions(std::ostream& out, const TransactionDB& db);

enum class Algorithm { dfin, fin, oracle };

std::string_view to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct MiningConfig {
  /// Exactly one of the two thresholds is expected to be set. When both are
  /// set, the absolute one wins.
  std::optional<double> minsup_relative;
  std::optional<std::uint64_t> minsup_absolute;
  Algorithm algo = Algorithm::dfin;
  /// Superset-equivalence pruning; disabling it only affects counters.
  bool promotion = true;

  static MiningConfig relative(double minsup, Algorithm algo = Algorithm::dfin);
  static MiningConfig absolute(std::uint64_t minsup, Algorithm algo = Algorithm::dfin);
};

/// Smallest support an itemset needs to be frequent in a database of
/// `db_size` transactions: ceil(minsup * db_size) for a relative threshold.
/// Never below 1. Throws std::invalid_argument for a relative threshold
/// outside [0, 1] or a config with no threshold.
std::uint64_t resolve_threshold(const MiningConfig& cfg, std::size_t db_size);

struct RankedItem {
  ItemId item;
  std::uint64_t support;

  friend bool operator==(const RankedItem&, const RankedItem&) = default;
};

/// Frequent items sorted by support descending, ties by token descending.
/// Item a precedes item b (a ≺ b) when b has the smaller rank.
class ItemOrder {
 public:
  ItemOrder() = default;
  ItemOrder(std::vector<RankedItem> ranked, std::size_t universe_size);

  std::size_t size() const { return ranked_.size(); }
  bool empty() const { return ranked_.empty(); }
  const RankedItem& operator[](Rank rank) const { return ranked_[rank]; }
  const std::vector<RankedItem>& ranked() const { return ranked_; }

  /// kNoRank for items that are not frequent.
  Rank rank(ItemId item) const {
    return item < rank_of_.size() ? rank_of_[item] : kNoRank;
  }
  ItemId item(Rank rank) const { return ranked_[rank].item; }
  std::uint64_t support(Rank rank) const { return ranked_[rank].support; }

 private:
  std::vector<RankedItem> ranked_;
  std::vector<Rank> rank_of_;
};

ItemOrder scan_frequent_items(const TransactionDB& db, std::uint64_t threshold);
ItemOrder scan_frequent_items(const TransactionDB& db, const MiningConfig& cfg);

/// Drops infrequent items and returns the ranks of the rest, ascending (most
/// frequent first). `out` is cleared first so callers can reuse its storage.
void filter_and_sort(std::span<const ItemId> transaction, const ItemOrder& order,
                     std::vector<Rank>& out);
std::vector<Rank> filter_and_sort(std::span<const ItemId> transaction,
                                  const ItemOrder& order);

struct GenConfig {
  std::size_t num_transactions = 0;
  std::size_t num_items = 0;
  double avg_len = 0.0;
  std::size_t num_patterns = 0;
  std::uint64_t seed = 0;
};

/// Pattern-mixture generator. Tokens are the integers 1..num_items. Each
/// transaction draws a target length (1 + Poisson(avg_len - 1), capped at
/// num_items) and is filled from randomly weighted seeded patterns, with
/// per-item corruption and uniform noise items. Deterministic per seed.
/// Throws std::invalid_argument when avg_len > num_items, or when
/// transactions are requested with avg_len < 1.
TransactionDB generate_synthetic(const GenConfig& cfg);

}  // namespace dfin
