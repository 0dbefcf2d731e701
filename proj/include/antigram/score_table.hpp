#ifndef ANTIGRAM_SCORE_TABLE_HPP
#define ANTIGRAM_SCORE_TABLE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "antigram/similarity.hpp"

namespace antigram {

/// Injected pair scores, keyed by the canonically ordered token pair.
/// Replaces an embedding table in test runs so classifier and metric logic
/// can be exercised bit-exactly without a vector file.
///
/// File format: word_a TAB word_b TAB score, one pair per line;
/// '#'-prefixed lines are comments. Scores must lie in [-1, 1].
class ScoreTable {
 public:
  static ScoreTable load(const std::string& path);

  /// Score for the unordered pair, or an OOV-style outcome naming the pair.
  SimilarityResult similarity(std::string_view w1, std::string_view w2) const;

  std::size_t size() const { return scores_.size(); }
  std::size_t duplicate_count() const { return duplicate_count_; }
  const std::string& source_path() const { return source_path_; }

 private:
  std::map<std::pair<std::string, std::string>, double> scores_;
  std::string source_path_;
  std::size_t duplicate_count_ = 0;
};

/// Adapts a score table to the generic PairScorer interface. The table must
/// outlive the returned scorer.
PairScorer make_scorer(const ScoreTable& table);

}  // namespace antigram

#endif  // ANTIGRAM_SCORE_TABLE_HPP
