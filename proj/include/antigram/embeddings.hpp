#ifndef ANTIGRAM_EMBEDDINGS_HPP
#define ANTIGRAM_EMBEDDINGS_HPP

#include <Eigen/Core>

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "antigram/errors.hpp"
#include "antigram/similarity.hpp"
#include "antigram/text.hpp"

namespace antigram {

namespace detail {

template <typename Scalar>
bool parse_number(std::string_view field, Scalar& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

// A count/dimension header is a line of exactly two nonnegative integers.
inline bool is_count_header(std::string_view line) {
  const auto fields = split(line, ' ');
  if (fields.size() != 2) return false;
  long v = 0;
  return parse_number(fields[0], v) && v >= 0 && parse_number(fields[1], v) && v >= 0;
}

}  // namespace detail

/// Immutable token -> dense vector map of uniform dimension, with
/// precomputed Euclidean norms. Safe for concurrent reads after load.
///
/// Text format, one entry per line:
///   token SP value SP value ... LF
/// with an optional leading "count dimension" header line (auto-detected).
/// Dimension is inferred from the first data line. Tokens are lowercased;
/// on a duplicate token the first occurrence wins. Zero-norm vectors are
/// skipped. Both kinds of skip are counted, not fatal.
template <typename Scalar>
class BasicEmbeddingTable {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  static BasicEmbeddingTable load(const std::string& path);

  /// Programmatic construction; rows of `vectors` pair with `tokens`.
  /// Enforces the same invariants as load().
  BasicEmbeddingTable(std::vector<std::string> tokens, Matrix vectors,
                      std::string source_id = "<memory>");

  Eigen::Index dimension() const { return vectors_.cols(); }
  std::size_t size() const { return tokens_.size(); }
  const std::string& source_path() const { return source_path_; }
  std::size_t duplicate_count() const { return duplicate_count_; }
  std::size_t zero_norm_count() const { return zero_norm_count_; }

  /// Row id for a token (lowercased), if present.
  std::optional<Eigen::Index> id(std::string_view token) const {
    const auto it = ids_.find(ascii_lower(token));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& token(Eigen::Index i) const { return tokens_[static_cast<std::size_t>(i)]; }
  auto row(Eigen::Index i) const { return vectors_.row(i); }
  Scalar norm(Eigen::Index i) const { return norms_[i]; }

  /// Stored vector for a token, or nullopt when out of vocabulary.
  std::optional<Vector> vector(std::string_view token) const {
    const auto i = id(token);
    if (!i) return std::nullopt;
    return Vector(vectors_.row(*i).transpose());
  }

  /// Cosine similarity via precomputed norms. Symmetric in its arguments;
  /// an OOV outcome names the absent token(s).
  SimilarityResult similarity(std::string_view w1, std::string_view w2) const {
    const auto i1 = id(w1);
    const auto i2 = id(w2);
    if (!i1 || !i2) {
      std::string missing;
      if (!i1) missing = ascii_lower(w1);
      if (!i2) {
        if (!missing.empty()) missing += ',';
        missing += ascii_lower(w2);
      }
      return SimilarityResult::oov(std::move(missing));
    }
    const Scalar dot = vectors_.row(*i1).dot(vectors_.row(*i2));
    return SimilarityResult::of(static_cast<double>(dot / (norms_[*i1] * norms_[*i2])));
  }

 private:
  BasicEmbeddingTable() = default;

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Eigen::Index> ids_;
  Matrix vectors_;  // one row per token
  Vector norms_;
  std::string source_path_;
  std::size_t duplicate_count_ = 0;
  std::size_t zero_norm_count_ = 0;
};

using EmbeddingTable = BasicEmbeddingTable<double>;

template <typename Scalar>
BasicEmbeddingTable<Scalar> BasicEmbeddingTable<Scalar>::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open vector file: " + path);

  BasicEmbeddingTable table;
  table.source_path_ = path;

  std::vector<Scalar> flat;
  std::vector<Scalar> row;
  Eigen::Index dim = -1;
  std::size_t line_no = 0;
  bool may_be_header = true;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    // tolerate CRLF and a trailing space, both common in the wild
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    if (may_be_header && detail::is_count_header(line)) {
      may_be_header = false;
      continue;
    }
    may_be_header = false;

    std::string_view view(line);
    const auto sep = view.find(' ');
    if (sep == std::string_view::npos || sep == 0) {
      throw ParseError("line " + std::to_string(line_no) + ": expected token and values");
    }
    const std::string token = ascii_lower(view.substr(0, sep));

    row.clear();
    for (std::string_view field : split(view.substr(sep + 1), ' ')) {
      Scalar v{};
      if (!detail::parse_number(field, v)) {
        throw ParseError("line " + std::to_string(line_no) + ": non-numeric component '" +
                         std::string(field) + "'");
      }
      if (!std::isfinite(static_cast<double>(v))) {
        throw ParseError("line " + std::to_string(line_no) + ": non-finite component");
      }
      row.push_back(v);
    }

    if (dim < 0) {
      if (row.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": no vector components");
      }
      dim = static_cast<Eigen::Index>(row.size());
    } else if (static_cast<Eigen::Index>(row.size()) != dim) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                       " components, got " + std::to_string(row.size()));
    }

    if (table.ids_.contains(token)) {
      ++table.duplicate_count_;
      continue;
    }
    double sum_sq = 0.0;
    for (const Scalar v : row) sum_sq += static_cast<double>(v) * static_cast<double>(v);
    if (sum_sq == 0.0) {
      ++table.zero_norm_count_;
      continue;
    }

    table.ids_.emplace(token, static_cast<Eigen::Index>(table.tokens_.size()));
    table.tokens_.push_back(token);
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (in.bad()) throw IoError("read failure on vector file: " + path);
  if (table.tokens_.empty()) throw ConfigError("no usable vectors in: " + path);

  const auto rows = static_cast<Eigen::Index>(table.tokens_.size());
  table.vectors_ = Eigen::Map<const Matrix>(flat.data(), rows, dim);
  table.norms_ = table.vectors_.rowwise().norm();
  return table;
}

template <typename Scalar>
BasicEmbeddingTable<Scalar>::BasicEmbeddingTable(std::vector<std::string> tokens, Matrix vectors,
                                                 std::string source_id)
    : source_path_(std::move(source_id)) {
  if (static_cast<Eigen::Index>(tokens.size()) != vectors.rows()) {
    throw ConfigError("token count does not match vector rows");
  }
  if (vectors.cols() == 0 && !tokens.empty()) {
    throw ConfigError("vectors must have at least one dimension");
  }
  vectors_ = std::move(vectors);
  for (const auto& t : tokens) {
    std::string token = ascii_lower(t);
    if (ids_.contains(token)) throw ConfigError("duplicate token: " + token);
    ids_.emplace(token, static_cast<Eigen::Index>(tokens_.size()));
    tokens_.push_back(std::move(token));
  }
  norms_ = vectors_.rowwise().norm();
  for (Eigen::Index i = 0; i < norms_.size(); ++i) {
    if (!(norms_[i] > Scalar(0))) throw ConfigError("zero-norm vector for: " + tokens_[i]);
  }
  if (tokens_.empty()) throw ConfigError("empty embedding table");
}

/// Free-function form of table.similarity(w1, w2).
template <typename Scalar>
SimilarityResult cosine_similarity(const BasicEmbeddingTable<Scalar>& table, std::string_view w1,
                                   std::string_view w2) {
  return table.similarity(w1, w2);
}

/// Adapts a table to the generic PairScorer interface. The table must
/// outlive the returned scorer.
template <typename Scalar>
PairScorer make_scorer(const BasicEmbeddingTable<Scalar>& table) {
  return [&table](std::string_view a, std::string_view b) { return table.similarity(a, b); };
}

extern template class BasicEmbeddingTable<double>;
extern template class BasicEmbeddingTable<float>;

}  // namespace antigram

#endif  // ANTIGRAM_EMBEDDINGS_HPP
