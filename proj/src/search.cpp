#include <cmath>
#include <optional>

#include "starslice/parallel.hpp"
#include "starslice/slicing.hpp"

namespace starslice {

namespace {

struct AscentResult {
  Subspace end;
  long probes = 0;
};

AscentResult ascend(Subspace start, const std::function<double(const Subspace&)>& objective,
                    const SearchOptions& opts, RandomSource rng) {
  Subspace current = std::move(start);
  double value = objective(current);
  long probes = 1;
  double step = opts.step;
  while (step >= opts.min_step && probes < opts.max_probes) {
    std::optional<Subspace> best;
    double best_value = value;
    for (int p = 0; p < opts.proposals && probes < opts.max_probes; ++p) {
      Subspace candidate = subspace_perturb(current, step, rng);
      const double v = objective(candidate);
      ++probes;
      if (v > best_value) {
        best_value = v;
        best.emplace(std::move(candidate));
      }
    }
    const bool significant = best && (best_value - value) > opts.tol * std::abs(value);
    if (best) {
      current = std::move(*best);
      value = best_value;
    }
    if (!significant) step *= 0.5;
  }
  return {std::move(current), probes};
}

}  // namespace

ExtremalSection maximize_over_grassmannian(int n, int m,
                                           const std::function<double(const Subspace&)>& search_objective,
                                           const std::function<Estimate(const Subspace&)>& final_objective,
                                           const SearchOptions& opts) {
  if (m < 1 || m >= n) throw Error("maximize_over_grassmannian: need 1 <= m < n");
  RandomSource root(opts.seed);
  std::vector<Subspace> starts = coordinate_subspaces(n, m);
  if (opts.restarts > 0) {
    RandomSource sampler = root.split(0xfeedULL);
    for (auto& h : grassmann_sample(n, m, opts.restarts, sampler)) starts.push_back(std::move(h));
  }

  const std::size_t count = starts.size();
  std::vector<std::optional<AscentResult>> ends(count);
  std::vector<Estimate> scores(count);
  parallel_for(count, [&](std::size_t i) {
    ends[i] = ascend(starts[i], search_objective, opts, root.split(i));
    scores[i] = final_objective(ends[i]->end);
  });

  ExtremalSection result{ends[0]->end, scores[0].value, scores[0].error, 0, {}};
  for (std::size_t i = 0; i < count; ++i) {
    result.probe_count += ends[i]->probes;
    result.restart_log.emplace_back(ends[i]->end, scores[i].value);
    if (scores[i].value > result.value) {
      result.subspace = ends[i]->end;
      result.value = scores[i].value;
      result.error = scores[i].error;
    }
  }
  return result;
}

}  // namespace starslice
