#include "dfin/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dfin {

namespace {

// Interns tokens in arrival order and renumbers them byte-wise on finish().
class DBBuilder {
 public:
  void begin_transaction() { row_start_ = items_.size(); }

  void add(std::string_view token) {
    auto [it, inserted] = ids_.try_emplace(std::string(token), static_cast<ItemId>(tokens_.size()));
    if (inserted) tokens_.push_back(it->first);
    const ItemId id = it->second;
    // Rows are short; a linear scan keeps first-occurrence order without a set.
    if (std::find(items_.begin() + static_cast<std::ptrdiff_t>(row_start_), items_.end(), id) ==
        items_.end()) {
      items_.push_back(id);
    }
  }

  void end_transaction() { offsets_.push_back(items_.size()); }

  // Drops the open row, used for lines that turned out to be blank.
  void abandon_transaction() { items_.resize(row_start_); }

  bool row_empty() const { return items_.size() == row_start_; }

  TransactionDB finish();

 private:
  std::unordered_map<std::string, ItemId> ids_;
  std::vector<std::string> tokens_;
  std::vector<ItemId> items_;
  std::vector<std::size_t> offsets_{0};
  std::size_t row_start_ = 0;
};

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

bool has_printable(std::string_view token) {
  return std::any_of(token.begin(), token.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isgraph(u);
  });
}

void parse_line(std::string_view line, DBBuilder& builder) {
  builder.begin_transaction();
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_separator(line[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !is_separator(line[pos])) ++pos;
    if (pos > start) {
      const std::string_view token = line.substr(start, pos - start);
      if (has_printable(token)) builder.add(token);
    }
  }
  if (builder.row_empty()) {
    builder.abandon_transaction();
  } else {
    builder.end_transaction();
  }
}

}  // namespace

// Access to TransactionDB internals for the builder.
struct DBAccess {
  static TransactionDB make(std::vector<std::string> universe, std::vector<ItemId> items,
                            std::vector<std::size_t> offsets);
};

TransactionDB DBBuilder::finish() {
  std::vector<ItemId> by_token(tokens_.size());
  std::iota(by_token.begin(), by_token.end(), ItemId{0});
  std::sort(by_token.begin(), by_token.end(),
            [&](ItemId a, ItemId b) { return tokens_[a] < tokens_[b]; });
  std::vector<ItemId> remap(tokens_.size());
  std::vector<std::string> universe(tokens_.size());
  for (ItemId final_id = 0; final_id < by_token.size(); ++final_id) {
    remap[by_token[final_id]] = final_id;
    universe[final_id] = std::move(tokens_[by_token[final_id]]);
  }
  for (ItemId& item : items_) item = remap[item];
  return DBAccess::make(std::move(universe), std::move(items_), std::move(offsets_));
}

TransactionDB DBAccess::make(std::vector<std::string> universe, std::vector<ItemId> items,
                             std::vector<std::size_t> offsets) {
  TransactionDB db;
  db.universe_ = std::move(universe);
  db.items_ = std::move(items);
  db.offsets_ = std::move(offsets);
  return db;
}

TransactionDB TransactionDB::from_rows(const std::vector<std::vector<std::string>>& rows) {
  DBBuilder builder;
  for (const auto& row : rows) {
    builder.begin_transaction();
    for (const auto& token : row) builder.add(token);
    builder.end_transaction();
  }
  return builder.finish();
}

std::optional<ItemId> TransactionDB::find(std::string_view token) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), token);
  if (it == universe_.end() || *it != token) return std::nullopt;
  return static_cast<ItemId>(it - universe_.begin());
}

TransactionDB parse_transactions(std::istream& in) {
  DBBuilder builder;
  std::string line;
  while (std::getline(in, line)) parse_line(line, builder);
  return builder.finish();
}

TransactionDB parse_transactions(std::string_view text) {
  DBBuilder builder;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    parse_line(text.substr(0, eol), builder);
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return builder.finish();
}

TransactionDB load_transactions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return parse_transactions(in);
}

void write_transactions(std::ostream& out, const TransactionDB& db) {
  for (std::size_t t = 0; t < db.size(); ++t) {
    bool first = true;
    for (ItemId item : db.transaction(t)) {
      if (!first) out << ' ';
      out << db.token(item);
      first = false;
    }
    out << '\n';
  }
}

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::dfin: return "dfin";
    case Algorithm::fin: return "fin";
    case Algorithm::oracle: return "oracle";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "dfin") return Algorithm::dfin;
  if (name == "fin") return Algorithm::fin;
  if (name == "oracle") return Algorithm::oracle;
  return std::nullopt;
}

MiningConfig MiningConfig::relative(double minsup, Algorithm algo) {
  MiningConfig cfg;
  cfg.minsup_relative = minsup;
  cfg.algo = algo;
  return cfg;
}

MiningConfig MiningConfig::absolute(std::uint64_t minsup, Algorithm algo) {
  MiningConfig cfg;
  cfg.minsup_absolute = minsup;
  cfg.algo = algo;
  return cfg;
}

std::uint64_t resolve_threshold(const MiningConfig& cfg, std::size_t db_size) {
  std::uint64_t threshold = 0;
  if (cfg.minsup_absolute) {
    threshold = *cfg.minsup_absolute;
  } else if (cfg.minsup_relative) {
    const double xi = *cfg.minsup_relative;
    if (!(xi >= 0.0 && xi <= 1.0)) {
      throw std::invalid_argument("relative minimum support must lie in [0, 1]");
    }
    // The product carries a few ulps of error (0.7 * 10 = 7.000000000000001);
    // shave that off before rounding up.
    const double exact = xi * static_cast<double>(db_size);
    threshold = static_cast<std::uint64_t>(std::ceil(exact - exact * 1e-12));
  } else {
    throw std::invalid_argument("mining config carries no minimum support");
  }
  return std::max<std::uint64_t>(threshold, 1);
}

ItemOrder::ItemOrder(std::vector<RankedItem> ranked, std::size_t universe_size)
    : ranked_(std::move(ranked)), rank_of_(universe_size, kNoRank) {
  for (Rank r = 0; r < ranked_.size(); ++r) rank_of_[ranked_[r].item] = r;
}

ItemOrder scan_frequent_items(const TransactionDB& db, std::uint64_t threshold) {
  std::vector<std::uint64_t> support(db.universe().size(), 0);
  for (std::size_t t = 0; t < db.size(); ++t) {
    for (ItemId item : db.transaction(t)) ++support[item];
  }
  std::vector<RankedItem> ranked;
  for (ItemId item = 0; item < support.size(); ++item) {
    if (support[item] >= threshold) ranked.push_back({item, support[item]});
  }
  // Ids follow byte-wise token order, so id-descending is token-descending.
  std::sort(ranked.begin(), ranked.end(), [](const RankedItem& a, const RankedItem& b) {
    return a.support != b.support ? a.support > b.support : a.item > b.item;
  });
  return ItemOrder(std::move(ranked), db.universe().size());
}

ItemOrder scan_frequent_items(const TransactionDB& db, const MiningConfig& cfg) {
  return scan_frequent_items(db, resolve_threshold(cfg, db.size()));
}

void filter_and_sort(std::span<const ItemId> transaction, const ItemOrder& order,
                     std::vector<Rank>& out) {
  out.clear();
  for (ItemId item : transaction) {
    const Rank r = order.rank(item);
    if (r != kNoRank) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
}

std::vector<Rank> filter_and_sort(std::span<const ItemId> transaction, const ItemOrder& order) {
  std::vector<Rank> out;
  filter_and_sort(transaction, order, out);
  return out;
}

TransactionDB generate_synthetic(const GenConfig& cfg) {
  if (!(cfg.avg_len >= 0.0)) throw std::invalid_argument("avg_len must be non-negative");
  if (cfg.avg_len > static_cast<double>(cfg.num_items)) {
    throw std::invalid_argument("avg_len must not exceed the number of items");
  }
  if (cfg.num_transactions == 0) return {};
  if (cfg.avg_len < 1.0) {
    throw std::invalid_argument("avg_len must be at least 1 when transactions are requested");
  }

  constexpr double kNoiseRate = 0.2;
  constexpr double kCorruption = 0.25;
  constexpr double kPatternOverlap = 0.5;

  std::mt19937_64 rng(cfg.seed);
  const std::size_t n = cfg.num_items;
  std::uniform_int_distribution<std::size_t> any_item(0, n - 1);

  // Patterns: length 1 + Poisson(avg_len / 2 - 1); consecutive patterns share
  // part of their items so that co-occurrences correlate across patterns.
  const double pattern_mean = std::max(0.0, cfg.avg_len / 2.0 - 1.0);
  std::poisson_distribution<std::size_t> pattern_len(pattern_mean > 0 ? pattern_mean : 1e-9);
  std::bernoulli_distribution overlap(kPatternOverlap);
  std::vector<std::vector<std::size_t>> patterns(cfg.num_patterns);
  for (std::size_t p = 0; p < cfg.num_patterns; ++p) {
    const std::size_t len = std::min(n, 1 + pattern_len(rng));
    auto& pattern = patterns[p];
    if (p > 0) {
      for (std::size_t item : patterns[p - 1]) {
        if (pattern.size() < len && overlap(rng)) pattern.push_back(item);
      }
    }
    while (pattern.size() < len) {
      const std::size_t item = any_item(rng);
      if (std::find(pattern.begin(), pattern.end(), item) == pattern.end()) {
        pattern.push_back(item);
      }
    }
  }
  std::vector<double> weights(cfg.num_patterns);
  std::exponential_distribution<double> weight(1.0);
  for (double& w : weights) w = weight(rng);
  std::discrete_distribution<std::size_t> pick_pattern(weights.begin(), weights.end());

  std::poisson_distribution<std::size_t> extra_len(cfg.avg_len > 1.0 ? cfg.avg_len - 1.0 : 1e-9);
  std::bernoulli_distribution noise(cfg.num_patterns == 0 ? 1.0 : kNoiseRate);
  std::bernoulli_distribution keep(1.0 - kCorruption);

  std::vector<std::vector<std::string>> rows(cfg.num_transactions);
  std::vector<char> present(n);
  std::vector<std::size_t> items;
  for (auto& row : rows) {
    const std::size_t len = std::min(n, 1 + extra_len(rng));
    items.clear();
    auto add = [&](std::size_t item) {
      if (items.size() < len && !present[item]) {
        present[item] = 1;
        items.push_back(item);
      }
    };
    while (items.size() < len) {
      if (noise(rng)) {
        add(any_item(rng));
      } else {
        for (std::size_t item : patterns[pick_pattern(rng)]) {
          if (keep(rng)) add(item);
        }
      }
    }
    std::sort(items.begin(), items.end());
    row.reserve(items.size());
    for (std::size_t item : items) {
      present[item] = 0;
      row.push_back(std::to_string(item + 1));
    }
  }
  return TransactionDB::from_rows(rows);
}

}  // namespace dfin
