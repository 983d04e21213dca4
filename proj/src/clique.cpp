#include "ddf/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ddf {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
    int n, words;
    std::vector<std::uint64_t> adj;  // reordered adjacency, row-major
    std::vector<int> order;          // internal index -> original index

    std::vector<int> best;     // internal indices
    std::vector<int> current;
    std::uint64_t nodes = 0;
    bool aborted = false;

    std::optional<Clock::time_point> deadline;

    // scratch per depth: candidate sets and coloring buffers
    std::vector<std::vector<std::uint64_t>> pbuf;
    std::vector<std::vector<int>> lbuf, cbuf;

    const std::uint64_t* row(int v) const { return adj.data() + static_cast<std::size_t>(v) * words; }

    bool out_of_time() {
        if (!deadline) return false;
        if ((nodes & 1023u) == 0 && Clock::now() > *deadline) aborted = true;
        return aborted;
    }

    static int popcount_words(const std::uint64_t* p, int words) {
        int c = 0;
        for (int w = 0; w < words; ++w) c += std::popcount(p[w]);
        return c;
    }

    // Greedy coloring of the candidate set; emits vertices in color order.
    int color_sort(const std::uint64_t* cand, int* verts, int* colors) {
        thread_local std::vector<std::uint64_t> rem, cls;
        rem.assign(cand, cand + words);
        cls.resize(words);
        int count = 0, color = 0;
        while (true) {
            bool any = false;
            for (int w = 0; w < words; ++w)
                if (rem[w]) {
                    any = true;
                    break;
                }
            if (!any) break;
            ++color;
            std::copy(rem.begin(), rem.end(), cls.begin());
            while (true) {
                int v = -1;
                for (int w = 0; w < words; ++w)
                    if (cls[w]) {
                        v = w * 64 + std::countr_zero(cls[w]);
                        break;
                    }
                if (v < 0) break;
                cls[v / 64] &= ~(1ull << (v % 64));
                rem[v / 64] &= ~(1ull << (v % 64));
                const std::uint64_t* rv = row(v);
                for (int w = 0; w < words; ++w) cls[w] &= ~rv[w];
                verts[count] = v;
                colors[count] = color;
                ++count;
            }
        }
        return count;
    }

    void expand(std::uint64_t* cand, int depth) {
        ++nodes;
        if (out_of_time()) return;
        if (static_cast<int>(pbuf.size()) <= depth) {
            pbuf.emplace_back(words);
            lbuf.emplace_back(n);
            cbuf.emplace_back(n);
        }
        int* verts = lbuf[depth].data();
        int* colors = cbuf[depth].data();
        int count = color_sort(cand, verts, colors);
        for (int k = count - 1; k >= 0; --k) {
            if (static_cast<int>(current.size()) + colors[k] <= static_cast<int>(best.size()))
                return;  // color bound prunes this and all earlier candidates
            int v = verts[k];
            current.push_back(v);
            std::uint64_t* next = pbuf[depth].data();
            const std::uint64_t* rv = row(v);
            bool nonempty = false;
            for (int w = 0; w < words; ++w) {
                next[w] = cand[w] & rv[w];
                nonempty |= next[w] != 0;
            }
            if (nonempty) {
                expand(next, depth + 1);
            } else if (current.size() > best.size()) {
                best = current;
            }
            current.pop_back();
            cand[v / 64] &= ~(1ull << (v % 64));
            if (aborted) return;
        }
    }
};

}  // namespace

CliqueResult max_clique(const BitMatrix& adjacency,
                        std::optional<std::chrono::milliseconds> budget) {
    auto start = Clock::now();
    CliqueResult result;
    int n = adjacency.n;
    if (n == 0) return result;

    Searcher s;
    s.n = n;
    s.words = (n + 63) / 64;
    if (budget) {
        if (budget->count() <= 0) throw std::invalid_argument("budget must be positive");
        s.deadline = start + *budget;
    }

    // Order vertices by non-increasing degree (stable) so the root coloring is
    // tight early; internal index i maps to original order[i].
    std::vector<int> degree(n, 0);
    for (int v = 0; v < n; ++v) {
        auto r = adjacency.row(v);
        for (auto w : r) degree[v] += std::popcount(w);
    }
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[s.order[i]] = i;

    s.adj.assign(static_cast<std::size_t>(n) * s.words, 0);
    for (int v = 0; v < n; ++v) {
        auto r = adjacency.row(v);
        for (int w = 0; w < adjacency.words; ++w) {
            std::uint64_t word = r[w];
            while (word) {
                int bit = std::countr_zero(word);
                word &= word - 1;
                int u = w * 64 + bit;
                int a = rank[v], b = rank[u];
                s.adj[static_cast<std::size_t>(a) * s.words + b / 64] |= 1ull << (b % 64);
            }
        }
    }

    // Greedy warm start: improves the initial bound without affecting exactness.
    {
        std::vector<std::uint64_t> cand(s.words, 0);
        for (int i = 0; i < n; ++i) cand[i / 64] |= 1ull << (i % 64);
        std::vector<int> greedy;
        std::vector<std::uint64_t> cur = cand;
        for (int i = 0; i < n; ++i) {
            if (!((cur[i / 64] >> (i % 64)) & 1u)) continue;
            greedy.push_back(i);
            const std::uint64_t* ri = s.row(i);
            for (int w = 0; w < s.words; ++w) cur[w] &= ri[w];
        }
        s.best = greedy;
    }

    std::vector<std::uint64_t> all(s.words, 0);
    for (int i = 0; i < n; ++i) all[i / 64] |= 1ull << (i % 64);
    s.expand(all.data(), 0);

    result.size = static_cast<int>(s.best.size());
    result.members.reserve(s.best.size());
    for (int v : s.best) result.members.push_back(s.order[v]);
    std::sort(result.members.begin(), result.members.end());
    result.exact = !s.aborted;
    result.nodes = s.nodes;
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return result;
}

}  // namespace ddf
