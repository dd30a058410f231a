#include "hamlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hamlab {

int thread_count() {
    if (const char* env = std::getenv("HAMLAB_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return n;
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body,
                  std::int64_t min_chunk) {
    const std::int64_t workers = std::min<std::int64_t>(thread_count(), (n + min_chunk - 1) / std::max<std::int64_t>(min_chunk, 1));
    if (workers <= 1) {
        if (n > 0) body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const std::int64_t chunk = (n + workers - 1) / workers;
    for (std::int64_t w = 0; w < workers; ++w) {
        const std::int64_t b = w * chunk, e = std::min(n, b + chunk);
        if (b < e) pool.emplace_back(body, b, e);
    }
    for (auto& t : pool) t.join();
}

}  // namespace hamlab
