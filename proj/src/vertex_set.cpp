#include "nctb/vertex_set.hpp"

#include <sstream>

namespace nctb {

std::strong_ordering operator<=>(const VertexSet &a, const VertexSet &b) {
  if (a.universe_ != b.universe_) return a.universe_ <=> b.universe_;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    // Lowest differing member decides: the set holding it is smaller unless
    // the other set has nothing beyond it (then the other is a prefix).
    int bit = std::countr_zero(diff);
    Vertex pivot = static_cast<Vertex>(i * 64 + bit);
    const VertexSet &holder = ((a.words_[i] >> bit) & 1U) ? a : b;
    const VertexSet &other = (&holder == &a) ? b : a;
    bool other_continues = other.next(pivot + 1) >= 0;
    bool a_first = (&holder == &a) == other_continues;
    return a_first ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string VertexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first_item = true;
  for_each([&](Vertex v) {
    if (!first_item) out << ',';
    out << v;
    first_item = false;
  });
  out << '}';
  return out.str();
}

} // namespace nctb
