#include "ctoric/sweep.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace ctoric {

namespace {

template <class Result, class Work>
void run_indexed(int count, int jobs, const Work& work,
                 const std::function<void(int, const Result&)>& emit) {
    jobs = std::max(1, jobs);
    std::vector<std::optional<Result>> results(count);
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) results[i] = work(i);
    } else {
        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    results[i] = work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }
    for (int i = 0; i < count; ++i) emit(i, *results[i]);
}

} // namespace

void sweep_posets(int n, const std::vector<int>& d_list, int jobs,
                  const std::function<void(int, const TheoremMainReport&)>& emit) {
    if (n < 1 || n > 5) throw SizeLimitExceeded("poset sweep is guarded to n <= 5");
    std::vector<Poset> posets = enumerate_posets(n);
    run_indexed<TheoremMainReport>(
        static_cast<int>(posets.size()), jobs,
        [&](int i) { return verify_theorem_main(posets[i], d_list); }, emit);
}

long long labeled_graph_count(int n) {
    return 1LL << (n * (n - 1) / 2);
}

void sweep_graphs(int n, int jobs,
                  const std::function<void(int, const TheoremSCReport&)>& emit) {
    if (n < 1 || n > 6) throw SizeLimitExceeded("graph sweep is guarded to n <= 6");
    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    const long long count = labeled_graph_count(n);
    run_indexed<TheoremSCReport>(
        static_cast<int>(count), jobs,
        [&](int idx) {
            std::vector<std::pair<int, int>> edges;
            for (size_t b = 0; b < all_pairs.size(); ++b)
                if ((idx >> b) & 1) edges.push_back(all_pairs[b]);
            return verify_theorem_sc(Graph::from_edges(n, std::move(edges)));
        },
        emit);
}

} // namespace ctoric
