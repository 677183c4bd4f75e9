#include "doctest.h"

#include "oracle/reference_aligners.hpp"
#include "test_util.hpp"
#include "valign/errors.hpp"
#include "valign/para_align.hpp"

using namespace valign;
using valign::testing::as_set;
using valign::testing::random_matrix;
using valign::testing::reference_align_paragraphs;

namespace {

SimilarityMatrix constant_matrix(std::size_t rows, std::size_t cols,
                                 double value) {
  SimilarityMatrix m(rows, cols);
  for (std::size_t x = 1; x <= rows; ++x) {
    for (std::size_t y = 1; y <= cols; ++y) m.set(x, y, value);
  }
  return m;
}

void check_monotone(const AlignmentPath& path) {
  for (std::size_t i = 1; i < path.pairs.size(); ++i) {
    CHECK(path.pairs[i].x >= path.pairs[i - 1].x);
    CHECK(path.pairs[i].y >= path.pairs[i - 1].y);
    CHECK(path.pairs[i].x + path.pairs[i].y >
          path.pairs[i - 1].x + path.pairs[i - 1].y);
  }
}

}  // namespace

TEST_CASE("a strong diagonal is followed step by step") {
  SimilarityMatrix m = constant_matrix(3, 3, 0.1);
  for (std::size_t i = 1; i <= 3; ++i) m.set(i, i, 0.9);
  const auto path = align_paragraphs(m, {0.5});
  CHECK(path.pairs == std::vector<IndexPair>{{1, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("the 1x1 matrix is anchored regardless of alpha") {
  const SimilarityMatrix m = constant_matrix(1, 1, 0.0);
  for (double alpha : {0.0, 0.5, 1.0}) {
    const auto path = align_paragraphs(m, {alpha});
    CHECK(path.pairs == std::vector<IndexPair>{{1, 1}});
  }
}

TEST_CASE("the anchor is marked even when below alpha") {
  SimilarityMatrix m = constant_matrix(2, 2, 0.05);
  m.set(2, 2, 0.9);
  AlignTrace trace;
  const auto path = align_paragraphs(m, {0.5}, &trace);
  REQUIRE(!path.pairs.empty());
  CHECK(path.pairs.front() == IndexPair{1, 1});
  CHECK(trace.origins.front() == PairOrigin::Anchor);
  // Every non-anchor pair clears the threshold.
  for (std::size_t i = 1; i < path.pairs.size(); ++i) {
    CHECK(m.at(path.pairs[i].x, path.pairs[i].y) >= 0.5);
  }
}

TEST_CASE("a low immediate vicinity falls back to the single-skip cells") {
  // All immediate neighbors of (1,1) and the skip cell (2,3) stay at 0.1;
  // (3,2) qualifies, so paragraph 2 of the source is skipped. The rest of
  // the path follows the strong cells (4,3) and (4,4).
  SimilarityMatrix m = constant_matrix(4, 4, 0.1);
  m.set(3, 2, 0.8);
  m.set(4, 3, 0.9);
  m.set(4, 4, 0.7);
  AlignTrace trace;
  const auto path = align_paragraphs(m, {0.5}, &trace);
  CHECK(path.pairs ==
        std::vector<IndexPair>{{1, 1}, {3, 2}, {4, 3}, {4, 4}});
  CHECK(trace.origins[1] == PairOrigin::Vicinity2Skip);
  CHECK(as_set(path) ==
        as_set(reference_align_paragraphs(m, 0.5)));
}

TEST_CASE("long-distance jumps leave paragraphs null-aligned") {
  SimilarityMatrix m = constant_matrix(6, 6, 0.1);
  m.set(5, 4, 0.7);
  m.set(6, 5, 0.8);
  AlignTrace trace;
  const auto path = align_paragraphs(m, {0.5}, &trace);
  CHECK(path.pairs == std::vector<IndexPair>{{1, 1}, {5, 4}, {6, 5}});
  CHECK(trace.origins[1] == PairOrigin::Vicinity3Jump);
  CHECK(as_set(path) == as_set(reference_align_paragraphs(m, 0.5)));
}

TEST_CASE("diagonal wins ties in the immediate vicinity") {
  SimilarityMatrix m = constant_matrix(2, 2, 0.0);
  m.set(1, 2, 0.8);
  m.set(2, 1, 0.8);
  m.set(2, 2, 0.8);
  const auto path = align_paragraphs(m, {0.5});
  CHECK(path.pairs == std::vector<IndexPair>{{1, 1}, {2, 2}});
}

TEST_CASE("empty matrices are rejected") {
  CHECK_THROWS_AS(align_paragraphs(SimilarityMatrix(), {0.5}),
                  EmptyMatrixError);
}

TEST_CASE("paragraph aligner equals the reference interpreter on random matrices") {
  Rng rng(404);
  for (int round = 0; round < 400; ++round) {
    const std::size_t rows = rng.next_between(1, 12);
    const std::size_t cols = rng.next_between(1, 12);
    const SimilarityMatrix m = random_matrix(rng, rows, cols);
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      AlignTrace trace;
      const auto path = align_paragraphs(m, {alpha}, &trace);
      const auto expected = reference_align_paragraphs(m, alpha);
      REQUIRE(path.pairs == expected);

      check_monotone(path);
      CHECK(trace.iterations <= rows + cols);
      for (std::size_t i = 1; i < path.pairs.size(); ++i) {
        CHECK(m.at(path.pairs[i].x, path.pairs[i].y) >= alpha);
      }
    }
  }
}

TEST_CASE("concatenate_group") {
  const Document d1 = parse_document("t\n\na1\na2\n\nb1", "d1");
  const Document d2 = parse_document("t\n\nc1\n\nd1\nd2\nd3", "d2");

  SUBCASE("a 1-1 group returns the original paragraphs") {
    const auto [p1, p2] = concatenate_group(d1, d2, {{2, 2}, {2, 2}});
    CHECK(p1.size() == 2);
    CHECK(p2.size() == 1);
    CHECK(p1.sentence(1).text == "a1");
    CHECK(p2.sentence(1).text == "c1");
  }
  SUBCASE("a 1-2 group concatenates in order and re-indexes") {
    const auto [p1, p2] = concatenate_group(d1, d2, {{2, 2}, {2, 3}});
    CHECK(p1.size() == 2);
    REQUIRE(p2.size() == 4);
    CHECK(p2.sentence(1).text == "c1");
    CHECK(p2.sentence(2).text == "d1");
    CHECK(p2.sentence(4).text == "d3");
    for (std::size_t s = 1; s <= p2.size(); ++s) {
      CHECK(p2.sentence(s).index == s);
    }
  }
  SUBCASE("an N-N group preserves document order on both sides") {
    const auto [p1, p2] = concatenate_group(d1, d2, {{2, 3}, {2, 3}});
    REQUIRE(p1.size() == 3);
    CHECK(p1.sentence(1).text == "a1");
    CHECK(p1.sentence(2).text == "a2");
    CHECK(p1.sentence(3).text == "b1");
    CHECK(p2.size() == 4);
  }
  SUBCASE("out-of-bounds ranges are rejected") {
    CHECK_THROWS_AS(concatenate_group(d1, d2, {{2, 4}, {1, 1}}),
                    OutOfBoundsError);
  }
}
