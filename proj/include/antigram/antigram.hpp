#ifndef ANTIGRAM_ANTIGRAM_HPP
#define ANTIGRAM_ANTIGRAM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antigram/anagram.hpp"
#include "antigram/embeddings.hpp"
#include "antigram/lexicon.hpp"
#include "antigram/similarity.hpp"

namespace antigram {

/// Default similarity threshold for the antigram rule.
inline constexpr double kDefaultThreshold = 0.3;

/// True iff the score is at or below the threshold (inclusive comparison).
inline bool classify_score(SimilarityScore z, double threshold) {
  return z.value() <= threshold;
}

/// An unordered anagram pair with its score and verdict. c0 < c1.
/// is_antigram is empty (indeterminate) when the pair could not be scored.
struct AnagramPair {
  std::string c0;
  std::string c1;
  std::optional<SimilarityScore> score;
  std::string oov_token;  // set iff !score
  std::optional<bool> is_antigram;
};

/// Every unique unordered pair over {root} + anagrams, scored and classified.
struct AntigramReport {
  std::string root;
  double threshold = kDefaultThreshold;
  std::vector<AnagramPair> pairs;          // sorted by (c0, c1)
  std::vector<AnagramPair> antigram_list;  // subset with is_antigram == true
};

/// Builds the anagram list of `raw`, forms all n(n-1)/2 pairs over the root
/// and its anagrams, scores each pair and applies the threshold rule.
/// Unscorable pairs get an indeterminate verdict and stay out of
/// antigram_list but remain in pairs with the missing token(s) named.
/// Throws InputError when `raw` fails normalization.
AntigramReport find_antigrams(const Lexicon& lex, const PairScorer& scorer, std::string_view raw,
                              double threshold = kDefaultThreshold);

AntigramReport find_antigrams(const Lexicon& lex, const EmbeddingTable& table,
                              std::string_view raw, double threshold = kDefaultThreshold);

}  // namespace antigram

#endif  // ANTIGRAM_ANTIGRAM_HPP
