#include "antigram/antigram.hpp"

#include <algorithm>

namespace antigram {

AntigramReport find_antigrams(const Lexicon& lex, const PairScorer& scorer, std::string_view raw,
                              double threshold) {
  const AnagramResult anagrams = anagrams_of(lex, raw);

  std::vector<std::string> members = anagrams.anagrams;  // root participates in pairing
  members.push_back(anagrams.root);
  std::sort(members.begin(), members.end());

  AntigramReport report;
  report.root = anagrams.root;
  report.threshold = threshold;
  const std::size_t n = members.size();
  report.pairs.reserve(n * (n - 1) / 2);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      AnagramPair pair;
      pair.c0 = members[i];
      pair.c1 = members[j];
      const SimilarityResult res = scorer(pair.c0, pair.c1);
      if (res.score) {
        pair.score = res.score;
        pair.is_antigram = classify_score(*res.score, threshold);
      } else {
        pair.oov_token = res.oov_token;
      }
      if (pair.is_antigram == true) report.antigram_list.push_back(pair);
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

AntigramReport find_antigrams(const Lexicon& lex, const EmbeddingTable& table,
                              std::string_view raw, double threshold) {
  return find_antigrams(lex, make_scorer(table), raw, threshold);
}

}  // namespace antigram
