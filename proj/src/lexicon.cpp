#include "antigram/lexicon.hpp"

#include <algorithm>
#include <fstream>

#include "antigram/errors.hpp"
#include "antigram/text.hpp"

namespace antigram {

std::optional<std::string> normalize_word(std::string_view raw) {
  if (raw.empty()) return std::nullopt;
  std::string out;
  out.reserve(raw.size());
  for (const char c : raw) {
    if (c >= 'a' && c <= 'z') {
      out.push_back(c);
    } else if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<char>(c - 'A' + 'a'));
    } else {
      return std::nullopt;
    }
  }
  return out;
}

Signature Signature::of_word(std::string_view normalized) {
  std::string key(normalized);
  std::sort(key.begin(), key.end());
  return Signature(std::move(key));
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open word list: " + path);

  Lexicon lex;
  lex.source_path_ = path;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view trimmed = trim(line);
    if (trimmed.empty()) continue;
    if (auto word = normalize_word(trimmed)) {
      lex.words_.push_back(std::move(*word));
    } else {
      ++lex.rejected_count_;
    }
  }
  if (in.bad()) throw IoError("read failure on word list: " + path);

  std::sort(lex.words_.begin(), lex.words_.end());
  lex.words_.erase(std::unique(lex.words_.begin(), lex.words_.end()), lex.words_.end());
  if (lex.words_.empty()) throw ConfigError("no usable words in: " + path);
  lex.build_index();
  return lex;
}

Lexicon Lexicon::from_words(const std::vector<std::string>& raw_words, std::string source_id) {
  Lexicon lex;
  lex.source_path_ = std::move(source_id);
  for (const auto& raw : raw_words) {
    if (auto word = normalize_word(trim(raw))) {
      lex.words_.push_back(std::move(*word));
    } else {
      ++lex.rejected_count_;
    }
  }
  std::sort(lex.words_.begin(), lex.words_.end());
  lex.words_.erase(std::unique(lex.words_.begin(), lex.words_.end()), lex.words_.end());
  if (lex.words_.empty()) throw ConfigError("no usable words in: " + lex.source_path_);
  lex.build_index();
  return lex;
}

void Lexicon::build_index() {
  // words_ is sorted, so each bucket fills in ascending order.
  for (const auto& w : words_) {
    index_[signature(w).key()].push_back(w);
  }
}

bool Lexicon::contains(std::string_view word) const {
  const auto normalized = normalize_word(word);
  if (!normalized) return false;
  return std::binary_search(words_.begin(), words_.end(), *normalized);
}

const std::vector<std::string>& Lexicon::words_for_signature(const Signature& sig) const {
  static const std::vector<std::string> kEmpty;
  const auto it = index_.find(sig.key());
  return it == index_.end() ? kEmpty : it->second;
}

}  // namespace antigram
