#include "chamberlab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace chamberlab {

namespace {
std::atomic<unsigned> g_limit{0};
}

void set_thread_limit(unsigned n) { g_limit = n; }

unsigned thread_limit()
{
    const unsigned l = g_limit.load();
    if (l) return l;
    return std::max(1u, std::thread::hardware_concurrency());
}

unsigned parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, unsigned)>& fn, std::size_t min_chunk)
{
    const std::size_t by_size = std::max<std::size_t>(1, n / std::max<std::size_t>(1, min_chunk));
    const auto workers = static_cast<unsigned>(std::min<std::size_t>(thread_limit(), by_size));
    if (workers <= 1) {
        fn(0, n, 0);
        return 1;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t b = n * w / workers, e = n * (w + 1) / workers;
        pool.emplace_back([&, b, e, w] {
            try {
                fn(b, e, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return workers;
}

} // namespace chamberlab
