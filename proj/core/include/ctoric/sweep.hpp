#ifndef CTORIC_SWEEP_HPP
#define CTORIC_SWEEP_HPP

#include <functional>
#include <vector>

#include "ctoric/theorems.hpp"

namespace ctoric {

/// Runs verify_theorem_main on every labeled poset with exactly n elements.
/// Instances are evaluated in parallel when jobs > 1; reports are delivered
/// to the callback in instance order regardless of completion order.
void sweep_posets(int n, const std::vector<int>& d_list, int jobs,
                  const std::function<void(int, const TheoremMainReport&)>& emit);

/// Runs verify_theorem_sc on every labeled graph with exactly n vertices.
void sweep_graphs(int n, int jobs,
                  const std::function<void(int, const TheoremSCReport&)>& emit);

long long labeled_graph_count(int n);

} // namespace ctoric

#endif
