#ifndef ANTIGRAM_ANAGRAM_HPP
#define ANTIGRAM_ANAGRAM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "antigram/lexicon.hpp"

namespace antigram {

/// Longest word the brute-force permutation generator accepts (9! = 362880
/// arrangements worst case). The signature-index path has no such cap.
inline constexpr std::size_t kPermutationLengthCap = 9;

/// All distinct letter arrangements of `word`, sorted ascending.
/// Duplicates from repeated letters collapse, so the result size is
/// |word|! / prod(letter multiplicities!). Throws InputError past the cap.
std::vector<std::string> permutations(std::string_view word,
                                      std::size_t length_cap = kPermutationLengthCap);

/// Dictionary anagrams of a root word. The root itself is excluded.
struct AnagramResult {
  std::string root;                   // normalized query word
  std::vector<std::string> anagrams;  // sorted, unique, root excluded
  std::string lexicon_id;             // source path of the lexicon consulted
};

/// Anagram lookup via the signature index; output-equivalent to filtering
/// permutations(root) through the lexicon. The root need not itself be a
/// lexicon word. Throws InputError when `raw` fails normalization.
AnagramResult anagrams_of(const Lexicon& lex, std::string_view raw);

}  // namespace antigram

#endif  // ANTIGRAM_ANAGRAM_HPP
