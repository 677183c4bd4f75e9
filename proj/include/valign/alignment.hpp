#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "valign/similarity.hpp"

namespace valign {

// 1-based matrix coordinate.
struct IndexPair {
  std::size_t x = 0;
  std::size_t y = 0;

  auto operator<=>(const IndexPair&) const = default;
};

// Ordered set of aligned coordinates within an n_rows x n_cols matrix.
// Pairs appear in cursor (marking) order and are monotone: each successive
// pair moves forward on both axes with a strict increase in x + y.
struct AlignmentPath {
  std::vector<IndexPair> pairs;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;

  bool operator==(const AlignmentPath&) const = default;
};

// Inclusive 1-based range.
struct IndexRange {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t size() const { return hi - lo + 1; }
  auto operator<=>(const IndexRange&) const = default;
};

enum class GroupKind { OneToOne, OneToMany, ManyToOne, ManyToMany };

// Maximal cluster of alignment pairs connected by shared rows/columns,
// covering contiguous ranges on both axes.
struct AlignmentGroup {
  IndexRange src;
  IndexRange tgt;

  GroupKind kind() const;
  bool operator==(const AlignmentGroup&) const = default;
};

// Partitions a monotone path into maximal components under the relation
// "shares a row or column", emitted in ascending (min src, min tgt) order.
// Throws NonContiguousComponentError if a component's rows or columns do
// not form contiguous ranges (defensive; requires a gapped same-row or
// same-column jump).
std::vector<AlignmentGroup> group_alignments(const AlignmentPath& path);

// Same partition, but a component whose rows or columns skip over
// null-aligned indices is covered by its bounding ranges instead of
// rejected. Long-distance jumps within a row or column produce such
// components legitimately; the paragraphs inside the gap stay unaligned
// unless the sentence stage finds matches for them. Output ranges remain
// pairwise disjoint and ordered per axis.
std::vector<AlignmentGroup> group_alignments_bounded(const AlignmentPath& path);

// Global sentence coordinates: (paragraph, sentence), both 1-based.
struct SentenceRef {
  std::size_t par = 0;
  std::size_t sent = 0;

  auto operator<=>(const SentenceRef&) const = default;
};

struct GlobalPair {
  SentenceRef src;
  SentenceRef tgt;

  auto operator<=>(const GlobalPair&) const = default;
};

// Queryable similarity over a (pseudo-)paragraph pair: plain entries plus
// similarities of one unit against a concatenated run of units on the other
// axis. All indices 1-based; ranges inclusive. Length-1 ranges reduce
// exactly to the plain matrix entry.
class SimilaritySource {
 public:
  virtual ~SimilaritySource() = default;

  virtual std::size_t rows() const = 0;
  virtual std::size_t cols() const = 0;
  virtual double at(std::size_t x, std::size_t y) const = 0;
  // Similarity of row unit x against the concatenation of column units
  // y_lo..y_hi.
  virtual double row_concat(std::size_t x, std::size_t y_lo,
                            std::size_t y_hi) const = 0;
  // Similarity of the concatenation of row units x_lo..x_hi against column
  // unit y.
  virtual double col_concat(std::size_t x_lo, std::size_t x_hi,
                            std::size_t y) const = 0;
};

// How a pair entered the path; recorded in AlignTrace for diagnostics and
// property checks.
enum class PairOrigin {
  Anchor,           // unconditional (1,1) of the paragraph aligner
  Vicinity1,        // immediate-neighbor pick (paragraph aligner)
  Vicinity2Skip,    // single-skip pick (paragraph aligner)
  Vicinity3Jump,    // long-distance jump (paragraph aligner)
  Initial,          // initial point of the sentence aligner
  Diagonal,         // 1-1 step (sentence aligner)
  HorizontalEntry,  // first pair of a 1-N case
  VerticalEntry,    // first pair of an N-1 case
  Expansion,        // pair added by an expansion loop
  Jump,             // long-distance jump (sentence aligner)
};

struct AlignTrace {
  std::size_t iterations = 0;
  std::vector<PairOrigin> origins;  // parallel to AlignmentPath::pairs
};

}  // namespace valign
