#include "antigram/anagram.hpp"

#include <algorithm>

#include "antigram/errors.hpp"

namespace antigram {

std::vector<std::string> permutations(std::string_view word, std::size_t length_cap) {
  if (word.size() > length_cap) {
    throw InputError("word '" + std::string(word) + "' has " + std::to_string(word.size()) +
                     " letters; the permutation generator is capped at " +
                     std::to_string(length_cap));
  }
  std::string letters(word);
  std::sort(letters.begin(), letters.end());
  // std::next_permutation enumerates each distinct multiset arrangement
  // exactly once, in ascending order.
  std::vector<std::string> out;
  do {
    out.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

AnagramResult anagrams_of(const Lexicon& lex, std::string_view raw) {
  const auto root = normalize_word(raw);
  if (!root) {
    throw InputError("not a valid query word: '" + std::string(raw) + "'");
  }
  AnagramResult result;
  result.root = *root;
  result.lexicon_id = lex.source_path();
  const auto& bucket = lex.words_for_signature(signature(result.root));
  result.anagrams.reserve(bucket.size());
  for (const auto& w : bucket) {
    if (w != result.root) result.anagrams.push_back(w);
  }
  return result;
}

}  // namespace antigram
