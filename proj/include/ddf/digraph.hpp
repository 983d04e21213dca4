#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ddf {

// Directed graph on vertices 1..n, no self-arcs.  Row v holds the
// out-neighborhood of v as a bitset (bit w-1 = arc v -> w).
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);

    int n() const { return n_; }
    int words() const { return words_; }
    int arc_count() const { return arcs_; }

    void add_arc(int from, int to);
    bool has_arc(int from, int to) const;
    std::span<const std::uint64_t> out_row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v - 1) * words_,
                static_cast<std::size_t>(words_)};
    }
    int out_degree(int v) const;
    std::vector<std::pair<int, int>> arcs() const;  // ascending (from, to)

    bool operator==(const Digraph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator<(const Digraph& o) const;

    std::string key_string() const;

private:
    int n_ = 0;
    int words_ = 0;
    int arcs_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Image of g under the vertex relabeling perm (perm[v-1] = new label of v).
Digraph relabel(const Digraph& g, std::span<const int> perm);

}  // namespace ddf
