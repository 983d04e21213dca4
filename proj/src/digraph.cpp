#include "ddf/digraph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ddf {

Digraph::Digraph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Digraph::add_arc(int from, int to) {
    if (from == to) throw std::invalid_argument("self-arc at " + std::to_string(from));
    if (from < 1 || from > n_ || to < 1 || to > n_)
        throw std::invalid_argument("arc endpoint outside 1.." + std::to_string(n_));
    std::uint64_t& word = bits_[static_cast<std::size_t>(from - 1) * words_ + (to - 1) / 64];
    std::uint64_t bit = 1ull << ((to - 1) % 64);
    if (!(word & bit)) {
        word |= bit;
        ++arcs_;
    }
}

bool Digraph::has_arc(int from, int to) const {
    if (from < 1 || from > n_ || to < 1 || to > n_) return false;
    return (bits_[static_cast<std::size_t>(from - 1) * words_ + (to - 1) / 64] >>
            ((to - 1) % 64)) & 1u;
}

int Digraph::out_degree(int v) const {
    int d = 0;
    for (auto w : out_row(v)) d += std::popcount(w);
    return d;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arcs_);
    for (int v = 1; v <= n_; ++v) {
        auto row = out_row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t word = row[w];
            while (word) {
                int bit = std::countr_zero(word);
                word &= word - 1;
                out.emplace_back(v, w * 64 + bit + 1);
            }
        }
    }
    return out;
}

bool Digraph::operator<(const Digraph& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (arcs_ != o.arcs_) return arcs_ < o.arcs_;
    return arcs() < o.arcs();
}

std::string Digraph::key_string() const {
    std::ostringstream os;
    os << "d" << n_ << ":";
    bool first = true;
    for (auto [a, b] : arcs()) {
        if (!first) os << ",";
        first = false;
        os << a << ">" << b;
    }
    return os.str();
}

Digraph relabel(const Digraph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.n())
        throw std::invalid_argument("permutation size mismatch");
    Digraph out(g.n());
    for (auto [a, b] : g.arcs()) out.add_arc(perm[a - 1], perm[b - 1]);
    return out;
}

}  // namespace ddf
