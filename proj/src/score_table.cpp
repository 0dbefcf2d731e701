#include "antigram/score_table.hpp"

#include <charconv>
#include <fstream>

#include "antigram/errors.hpp"
#include "antigram/text.hpp"

namespace antigram {

namespace {

std::pair<std::string, std::string> canonical_pair(std::string_view w1, std::string_view w2) {
  std::string a = ascii_lower(trim(w1));
  std::string b = ascii_lower(trim(w2));
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace

ScoreTable ScoreTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open score table: " + path);

  ScoreTable table;
  table.source_path_ = path;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;

    const auto fields = split(content, '\t');
    if (fields.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected word_a<TAB>word_b<TAB>score");
    }
    const std::string_view score_field = trim(fields[2]);
    double score = 0.0;
    const auto [ptr, ec] =
        std::from_chars(score_field.data(), score_field.data() + score_field.size(), score);
    if (ec != std::errc() || ptr != score_field.data() + score_field.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": bad score '" +
                       std::string(score_field) + "'");
    }
    if (score < -1.0 - 1e-9 || score > 1.0 + 1e-9) {
      throw ParseError("line " + std::to_string(line_no) + ": score out of [-1, 1]");
    }
    auto key = canonical_pair(fields[0], fields[1]);
    if (key.first.empty() || key.second.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": empty word field");
    }
    if (!table.scores_.emplace(std::move(key), score).second) {
      ++table.duplicate_count_;  // first occurrence wins
    }
  }
  if (in.bad()) throw IoError("read failure on score table: " + path);
  if (table.scores_.empty()) throw ConfigError("no usable scores in: " + path);
  return table;
}

SimilarityResult ScoreTable::similarity(std::string_view w1, std::string_view w2) const {
  const auto key = canonical_pair(w1, w2);
  const auto it = scores_.find(key);
  if (it == scores_.end()) {
    return SimilarityResult::oov(key.first + "," + key.second);
  }
  return SimilarityResult::of(it->second);
}

PairScorer make_scorer(const ScoreTable& table) {
  return [&table](std::string_view a, std::string_view b) { return table.similarity(a, b); };
}

}  // namespace antigram
