#ifndef ANTIGRAM_EVALUATION_HPP
#define ANTIGRAM_EVALUATION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antigram/antigram.hpp"
#include "antigram/similarity.hpp"

namespace antigram {

/// A labeled word pair from the gold dataset. word_a < word_b; when
/// label is true the two words are anagrams of each other.
struct GoldRecord {
  std::string word_a;
  std::string word_b;
  bool label = false;  // true = antigram
};

struct GoldDataset {
  std::vector<GoldRecord> records;
  std::vector<std::string> warnings;  // rejected / duplicate lines, with line numbers
  std::size_t duplicate_count = 0;
  std::size_t rejected_count = 0;
};

/// Loads a gold TSV: word_a TAB word_b TAB yes|no (label case-insensitive),
/// '#'-prefixed lines are comments. Pairs are normalized and canonically
/// ordered; duplicates collapse with a warning; 'yes' records whose words
/// are not anagrams are rejected with their line number.
/// Throws ParseError on malformed lines, ConfigError when nothing loads.
GoldDataset load_gold(const std::string& path);

/// Confusion counts from joining system verdicts to gold labels.
/// Indeterminate (unscorable) pairs and gold pairs with no verdict are
/// counted separately and excluded from the quotient metrics.
struct EvalMetrics {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
  std::size_t indeterminate = 0;
  std::size_t missing = 0;

  std::size_t determinate() const { return tp + fp + tn + fn; }
  std::optional<double> accuracy() const {
    if (determinate() == 0) return std::nullopt;
    return static_cast<double>(tp + tn) / static_cast<double>(determinate());
  }
  std::optional<double> precision() const {
    if (tp + fp == 0) return std::nullopt;
    return static_cast<double>(tp) / static_cast<double>(tp + fp);
  }
  std::optional<double> recall() const {
    if (tp + fn == 0) return std::nullopt;
    return static_cast<double>(tp) / static_cast<double>(tp + fn);
  }
};

/// Joins verdicts to gold by canonical pair. Every gold record lands in
/// exactly one bucket: tp/fp/tn/fn, indeterminate, or missing.
EvalMetrics evaluate(std::span<const AnagramPair> verdicts, std::span<const GoldRecord> gold);

/// One row of the antonym similarity report.
struct AntonymRow {
  std::string word_a;
  std::string word_b;
  SimilarityResult result;
};

struct AntonymReport {
  std::vector<AntonymRow> rows;       // input order
  std::optional<double> mean;         // over scored rows; empty when none scored
  std::size_t scored = 0;
  std::size_t oov = 0;
};

/// Scores each pair and reports the arithmetic mean of the present scores.
/// OOV pairs are flagged and excluded from the mean.
AntonymReport antonym_report(const PairScorer& scorer,
                             std::span<const std::pair<std::string, std::string>> pairs);

AntonymReport antonym_report(const EmbeddingTable& table,
                             std::span<const std::pair<std::string, std::string>> pairs);

/// Loads a two-column TSV of word pairs ('#' comments allowed).
/// Throws ParseError on malformed lines, ConfigError when empty.
std::vector<std::pair<std::string, std::string>> load_pairs(const std::string& path);

}  // namespace antigram

#endif  // ANTIGRAM_EVALUATION_HPP
