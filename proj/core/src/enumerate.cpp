#include "mpw/enumerate.hpp"

#include <condition_variable>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mpw/extremal.hpp"

namespace mpw {

namespace {

std::vector<std::string> flip_neighbor_codes(const Embedding& e) {
    std::vector<std::string> out;
    const int n = e.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v : e.rotation(u)) {
            if (u >= v) continue;  // one attempt per undirected edge
            if (auto flipped = flip_edge(e, u, v))
                out.push_back(canonical_code(*flipped).bytes);
        }
    }
    return out;
}

}  // namespace

TriangulationSet enumerate_triangulations(int n, EnumerateOptions opt) {
    if (n < 4) throw std::invalid_argument("enumerate_triangulations: need n >= 4");
    if (n > opt.cap) throw std::invalid_argument("enumerate_triangulations: n above enumeration cap");

    TriangulationSet set;
    set.n = n;

    const std::string seed = canonical_code(construct_tn(n)).bytes;
    std::deque<std::string> queue{seed};
    set.classes.emplace(seed, embedding_from_code_bytes(seed));

    std::mutex mu;
    std::condition_variable cv;
    int active = 0;

    auto worker = [&] {
        std::unique_lock lk(mu);
        for (;;) {
            cv.wait(lk, [&] { return !queue.empty() || active == 0; });
            if (queue.empty()) return;  // active == 0: closure reached
            const std::string code = std::move(queue.front());
            queue.pop_front();
            ++active;
            lk.unlock();

            const Embedding emb = embedding_from_code_bytes(code);
            const auto discovered = flip_neighbor_codes(emb);

            lk.lock();
            bool added = false;
            for (const auto& c : discovered) {
                if (set.classes.count(c)) continue;
                set.classes.emplace(c, embedding_from_code_bytes(c));
                queue.push_back(c);
                added = true;
            }
            --active;
            if (added || (queue.empty() && active == 0)) cv.notify_all();
        }
    };

    int jobs = opt.jobs > 0 ? opt.jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return set;
}

}  // namespace mpw
