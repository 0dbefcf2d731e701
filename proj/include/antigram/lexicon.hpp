#ifndef ANTIGRAM_LEXICON_HPP
#define ANTIGRAM_LEXICON_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace antigram {

/// Lowercases a word and accepts it iff it then consists solely of [a-z].
/// Apostrophes, hyphens, digits, diacritics and whitespace all reject.
/// Rejection is a value-level outcome, not a fault.
std::optional<std::string> normalize_word(std::string_view raw);

/// Canonical sorted-letter key. Two words have equal Signature iff they
/// are anagrams of each other.
class Signature {
 public:
  Signature() = default;
  /// Builds the signature of a normalized word (letters sorted ascending).
  static Signature of_word(std::string_view normalized);

  const std::string& key() const { return key_; }
  std::size_t length() const { return key_.size(); }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  explicit Signature(std::string key) : key_(std::move(key)) {}
  std::string key_;
};

/// Signature of a normalized word; length-preserving, permutation-invariant.
inline Signature signature(std::string_view normalized) {
  return Signature::of_word(normalized);
}

/// Immutable word set with a signature index for O(1) anagram-class lookup.
/// Safe for concurrent reads after construction.
class Lexicon {
 public:
  /// Reads a newline-delimited word list (UTF-8, LF or CRLF, lines trimmed).
  /// Lines failing normalization are skipped and counted; duplicates collapse.
  /// Throws IoError if unreadable, ConfigError if no usable words remain.
  static Lexicon load(const std::string& path);

  /// Builds a lexicon from raw word strings; same normalization policy.
  static Lexicon from_words(const std::vector<std::string>& raw_words,
                            std::string source_id = "<memory>");

  /// True iff the normalized form of `word` is in the lexicon.
  bool contains(std::string_view word) const;

  /// All lexicon words in the anagram class of `sig`, sorted ascending.
  const std::vector<std::string>& words_for_signature(const Signature& sig) const;

  /// All words, sorted ascending. Stable across runs for a given input file.
  const std::vector<std::string>& words() const { return words_; }

  std::size_t word_count() const { return words_.size(); }
  const std::string& source_path() const { return source_path_; }

  /// Non-empty input lines that failed normalization.
  std::size_t rejected_count() const { return rejected_count_; }

  /// Lexicons are equal when they hold the same word set.
  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.words_ == b.words_;
  }

 private:
  Lexicon() = default;
  void build_index();

  std::vector<std::string> words_;  // sorted, unique
  std::unordered_map<std::string, std::vector<std::string>> index_;  // key -> sorted words
  std::string source_path_;
  std::size_t rejected_count_ = 0;
};

}  // namespace antigram

template <>
struct std::hash<antigram::Signature> {
  std::size_t operator()(const antigram::Signature& s) const noexcept {
    return std::hash<std::string>{}(s.key());
  }
};

#endif  // ANTIGRAM_LEXICON_HPP
