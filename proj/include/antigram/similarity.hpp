#ifndef ANTIGRAM_SIMILARITY_HPP
#define ANTIGRAM_SIMILARITY_HPP

#include <Eigen/Core>

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace antigram {

/// Cosine similarity value, clamped to [-1, 1] on construction.
class SimilarityScore {
 public:
  explicit SimilarityScore(double raw) : value_(std::clamp(raw, -1.0, 1.0)) {}
  double value() const { return value_; }

  friend bool operator==(const SimilarityScore&, const SimilarityScore&) = default;

 private:
  double value_;
};

/// A score, or an out-of-vocabulary outcome naming the missing token(s).
struct SimilarityResult {
  std::optional<SimilarityScore> score;
  std::string oov_token;  // set iff !score; "a,b" when both tokens are missing

  static SimilarityResult of(double raw) { return {SimilarityScore(raw), {}}; }
  static SimilarityResult oov(std::string token) { return {std::nullopt, std::move(token)}; }
};

/// Anything that maps a token pair to a similarity outcome: an embedding
/// table, an injected score table, or a test stub.
using PairScorer = std::function<SimilarityResult(std::string_view, std::string_view)>;

/// Cosine of the angle between two dense vectors. Accepts any pair of Eigen
/// vector expressions with a common scalar type.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cosine(const Eigen::MatrixBase<DerivedA>& a,
                                 const Eigen::MatrixBase<DerivedB>& b) {
  return a.dot(b) / (a.norm() * b.norm());
}

}  // namespace antigram

#endif  // ANTIGRAM_SIMILARITY_HPP
