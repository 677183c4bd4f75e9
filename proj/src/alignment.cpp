#include "valign/alignment.hpp"

#include "valign/errors.hpp"

namespace valign {

GroupKind AlignmentGroup::kind() const {
  const bool one_src = src.size() == 1;
  const bool one_tgt = tgt.size() == 1;
  if (one_src && one_tgt) return GroupKind::OneToOne;
  if (one_src) return GroupKind::OneToMany;
  if (one_tgt) return GroupKind::ManyToOne;
  return GroupKind::ManyToMany;
}

namespace {

std::vector<AlignmentGroup> group_core(const AlignmentPath& path,
                                       bool reject_gaps) {
  std::vector<AlignmentGroup> groups;
  if (path.pairs.empty()) return groups;

  for (const IndexPair& p : path.pairs) {
    if (p.x < 1 || p.x > path.n_rows || p.y < 1 || p.y > path.n_cols) {
      throw OutOfBoundsError("alignment pair out of matrix bounds");
    }
  }
  for (std::size_t i = 1; i < path.pairs.size(); ++i) {
    const IndexPair& prev = path.pairs[i - 1];
    const IndexPair& cur = path.pairs[i];
    if (cur.x < prev.x || cur.y < prev.y ||
        cur.x + cur.y <= prev.x + prev.y) {
      throw Error("alignment path is not monotone");
    }
  }

  // Pairs are monotone, so pairs sharing a row or column are consecutive:
  // a component ends exactly where both axes advance at once.
  AlignmentGroup current{{path.pairs[0].x, path.pairs[0].x},
                         {path.pairs[0].y, path.pairs[0].y}};
  for (std::size_t i = 1; i < path.pairs.size(); ++i) {
    const IndexPair& prev = path.pairs[i - 1];
    const IndexPair& cur = path.pairs[i];
    const bool connected = cur.x == prev.x || cur.y == prev.y;
    if (!connected) {
      groups.push_back(current);
      current = AlignmentGroup{{cur.x, cur.x}, {cur.y, cur.y}};
      continue;
    }
    if (reject_gaps &&
        (cur.x > current.src.hi + 1 || cur.y > current.tgt.hi + 1)) {
      throw NonContiguousComponentError(
          "alignment component covers a gapped row or column range");
    }
    current.src.hi = std::max(current.src.hi, cur.x);
    current.tgt.hi = std::max(current.tgt.hi, cur.y);
  }
  groups.push_back(current);
  return groups;
}

}  // namespace

std::vector<AlignmentGroup> group_alignments(const AlignmentPath& path) {
  return group_core(path, /*reject_gaps=*/true);
}

std::vector<AlignmentGroup> group_alignments_bounded(const AlignmentPath& path) {
  return group_core(path, /*reject_gaps=*/false);
}

}  // namespace valign
