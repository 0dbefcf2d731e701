#include "antigram/embeddings.hpp"

namespace antigram {

template class BasicEmbeddingTable<double>;
template class BasicEmbeddingTable<float>;

}  // namespace antigram
