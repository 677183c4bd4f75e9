#include "valign/eval.hpp"

namespace valign {

EvalReport evaluate_counts(std::size_t tp, std::size_t fp, std::size_t fn) {
  EvalReport r;
  r.true_positives = tp;
  r.false_positives = fp;
  r.false_negatives = fn;
  r.precision = tp + fp > 0
                    ? static_cast<double>(tp) / static_cast<double>(tp + fp)
                    : 0.0;
  r.recall = tp + fn > 0
                 ? static_cast<double>(tp) / static_cast<double>(tp + fn)
                 : 0.0;
  r.f1 = r.precision + r.recall > 0.0
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  return r;
}

EvalReport evaluate(const std::set<GlobalPair>& predicted,
                    const GoldAlignment& gold) {
  std::size_t tp = 0;
  for (const GlobalPair& p : predicted) tp += gold.pairs.count(p);
  return evaluate_counts(tp, predicted.size() - tp, gold.pairs.size() - tp);
}

}  // namespace valign
