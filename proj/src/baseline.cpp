#include "valign/baseline.hpp"

#include "valign/similarity.hpp"

namespace valign {

std::vector<ScoredGlobalPair> jaccard_align(const Document& d1,
                                            const Document& d2,
                                            double threshold) {
  std::vector<ScoredGlobalPair> out;
  for (std::size_t p1 = 1; p1 <= d1.size(); ++p1) {
    for (std::size_t s1 = 1; s1 <= d1.paragraph(p1).size(); ++s1) {
      const TextUnit u =
          TextUnit::of_sentence(d1.paragraph(p1).sentence(s1));
      for (std::size_t p2 = 1; p2 <= d2.size(); ++p2) {
        for (std::size_t s2 = 1; s2 <= d2.paragraph(p2).size(); ++s2) {
          const TextUnit v =
              TextUnit::of_sentence(d2.paragraph(p2).sentence(s2));
          const double score = jaccard(u, v);
          if (score > threshold) {
            out.push_back({{{p1, s1}, {p2, s2}}, score});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace valign
