#ifndef QPART_DIAGRAM_HPP
#define QPART_DIAGRAM_HPP

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qpart/errors.hpp"

namespace qpart {

// A set-partition diagram on K top vertices 1..K and K bottom vertices
// -1..-K (written with a bar in the literature; negative here). Vertices are
// totally ordered 1 < 2 < ... < K < -1 < -2 < ... < -K. Blocks are stored
// sorted internally by that order and listed by minimal vertex, so two equal
// set partitions are structurally identical.
class Diagram {
public:
    Diagram(int size, std::vector<std::vector<int>> blocks)
        : size_(size), blocks_(std::move(blocks)) {
        canonicalize();
    }

    int size() const { return size_; }

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    // Position of vertex v in the total order, 0-based.
    static int vertex_key(int v, int K) { return v > 0 ? v - 1 : K + (-v) - 1; }

    int vertex_key(int v) const { return vertex_key(v, size_); }

    // Index into blocks() of the block containing v.
    int block_index_of(int v) const {
        const int key = vertex_key(v);
        if (v == 0 || key < 0 || key >= 2 * size_)
            throw IndexOutOfRange("vertex " + std::to_string(v) + " outside diagram of size " +
                                  std::to_string(size_));
        return vertex_block_[key];
    }

    const std::vector<int>& block_containing(int v) const { return blocks_[block_index_of(v)]; }

    bool same_block(int u, int v) const { return block_index_of(u) == block_index_of(v); }

    int propagating_number() const {
        int p = 0;
        for (const auto& b : blocks_) {
            bool top = false, bottom = false;
            for (int v : b) (v > 0 ? top : bottom) = true;
            if (top && bottom) ++p;
        }
        return p;
    }

    bool is_singleton_block(int v) const { return block_containing(v).size() == 1; }

    std::vector<int> singletons() const {
        std::vector<int> out;
        for (const auto& b : blocks_)
            if (b.size() == 1) out.push_back(b[0]);
        return out;
    }

    bool has_singleton() const {
        for (const auto& b : blocks_)
            if (b.size() == 1) return true;
        return false;
    }

    // Singleton block {v} with |v| <= bound (the strands a projector touches).
    bool has_singleton_within(int bound) const {
        for (const auto& b : blocks_)
            if (b.size() == 1 && std::abs(b[0]) <= bound) return true;
        return false;
    }

    bool has_top_singleton() const {
        for (const auto& b : blocks_)
            if (b.size() == 1 && b[0] > 0) return true;
        return false;
    }

    // Top vertices k+1 and bottom -(k+1) share a block; the defining
    // constraint of the half algebra inside size k+1.
    bool is_half_diagram() const { return size_ >= 1 && same_block(size_, -size_); }

    bool operator==(const Diagram& o) const { return size_ == o.size_ && blocks_ == o.blocks_; }
    bool operator!=(const Diagram& o) const { return !(*this == o); }

    // Strict order compatible with the canonical form (size, then blocks
    // compared by vertex keys); used for deterministic maps and listings.
    bool operator<(const Diagram& o) const {
        if (size_ != o.size_) return size_ < o.size_;
        return key_blocks() < o.key_blocks();
    }

    std::string to_string() const {
        std::ostringstream out;
        out << "{";
        for (size_t i = 0; i < blocks_.size(); ++i) {
            out << (i ? "," : "") << "{";
            for (size_t j = 0; j < blocks_[i].size(); ++j) out << (j ? "," : "") << blocks_[i][j];
            out << "}";
        }
        out << "}";
        return out.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["k"] = size_;
        j["blocks"] = blocks_;
        return j;
    }

    static Diagram from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("k") || !j.contains("blocks"))
            throw ParseError("diagram JSON must be {\"k\": K, \"blocks\": [[..], ..]}");
        try {
            return Diagram(j.at("k").get<int>(), j.at("blocks").get<std::vector<std::vector<int>>>());
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad diagram JSON: ") + e.what());
        }
    }

private:
    std::vector<std::vector<int>> key_blocks() const {
        std::vector<std::vector<int>> kb(blocks_.size());
        for (size_t i = 0; i < blocks_.size(); ++i) {
            kb[i].reserve(blocks_[i].size());
            for (int v : blocks_[i]) kb[i].push_back(vertex_key(v));
        }
        return kb;
    }

    void canonicalize() {
        if (size_ < 0) throw ParseError("diagram size must be nonnegative");
        std::vector<int> seen(2 * size_, 0);
        for (auto& b : blocks_) {
            if (b.empty()) throw ParseError("diagram blocks must be nonempty");
            for (int v : b) {
                if (v == 0 || std::abs(v) > size_)
                    throw ParseError("vertex " + std::to_string(v) + " outside diagram of size " +
                                     std::to_string(size_));
                if (seen[vertex_key(v)]++)
                    throw ParseError("vertex " + std::to_string(v) + " appears twice");
            }
            std::sort(b.begin(), b.end(),
                      [this](int a, int c) { return vertex_key(a) < vertex_key(c); });
        }
        for (int key = 0; key < 2 * size_; ++key)
            if (!seen[key])
                throw ParseError("diagram blocks do not cover all vertices of size " +
                                 std::to_string(size_));
        std::sort(blocks_.begin(), blocks_.end(), [this](const auto& a, const auto& b) {
            return vertex_key(a[0]) < vertex_key(b[0]);
        });
        vertex_block_.assign(2 * size_, -1);
        for (size_t i = 0; i < blocks_.size(); ++i)
            for (int v : blocks_[i]) vertex_block_[vertex_key(v)] = static_cast<int>(i);
    }

    int size_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> vertex_block_;
};

// ---------------------------------------------------------------------------
// Algebra contexts. Whole(k) is P_k / QP_k on size-k diagrams; Half(k) is the
// half algebra sitting inside size k+1 with k+1 ~ -(k+1); Tilde(k) is the
// size-(k+1) variant whose basis diagrams merely avoid singletons among
// +-1..+-k. In all three cases `k` counts the strands the projector touches.
// ---------------------------------------------------------------------------

enum class Kind { Whole, Half, Tilde };

// Stable external label for an algebra kind, used in JSON reports and CLI
// options.
inline std::string kind_label(Kind kind) {
    switch (kind) {
        case Kind::Whole: return "qp";
        case Kind::Half: return "qp-half";
        default: return "tilde";
    }
}

struct Context {
    Kind kind = Kind::Whole;
    int k = 0;

    Context() = default;
    Context(Kind kd, int kk) : kind(kd), k(kk) {
        if (k < 0) throw IndexOutOfRange("context parameter must be nonnegative");
    }

    // Size K of the diagrams the context acts on.
    int strands() const { return kind == Kind::Whole ? k : k + 1; }

    // Strands covered by the unit projector (vertices +-1..+-active()).
    int active() const { return k; }

    bool operator==(const Context& o) const { return kind == o.kind && k == o.k; }
    bool operator!=(const Context& o) const { return !(*this == o); }

    // Whether d is a legal diagram for this context's ambient algebra.
    bool admits(const Diagram& d) const {
        if (d.size() != strands()) return false;
        if (kind == Kind::Half) return d.is_half_diagram();
        return true;
    }

    // Whether d indexes a basis element of the projected algebra: no
    // singleton within the active strands, plus the half constraint.
    bool is_basis_leader(const Diagram& d) const {
        return admits(d) && !d.has_singleton_within(active());
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::Whole: return "whole(" + std::to_string(k) + ")";
            case Kind::Half: return "half(" + std::to_string(k) + ")";
            default: return "tilde(" + std::to_string(k + 1) + ")";
        }
    }
};

// ---------------------------------------------------------------------------
// Generators and named diagrams.
// ---------------------------------------------------------------------------

inline Diagram identity_diagram(int k) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= k; ++i) blocks.push_back({i, -i});
    return Diagram(k, std::move(blocks));
}

// Transposition of strands i, i+1.
inline Diagram gen_s(int k, int i) {
    if (i < 1 || i + 1 > k) throw IndexOutOfRange("s_i needs 1 <= i <= k-1");
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= k; ++j) {
        if (j == i)
            blocks.push_back({j, -(j + 1)});
        else if (j == i + 1)
            blocks.push_back({j, -(j - 1)});
        else
            blocks.push_back({j, -j});
    }
    return Diagram(k, std::move(blocks));
}

// Strand j cut into two singletons.
inline Diagram gen_p(int k, int j) {
    if (j < 1 || j > k) throw IndexOutOfRange("p_j needs 1 <= j <= k");
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= k; ++i) {
        if (i == j) {
            blocks.push_back({i});
            blocks.push_back({-i});
        } else {
            blocks.push_back({i, -i});
        }
    }
    return Diagram(k, std::move(blocks));
}

// Strands i, i+1 merged into one four-vertex block.
inline Diagram gen_b(int k, int i) {
    if (i < 1 || i + 1 > k) throw IndexOutOfRange("b_i needs 1 <= i <= k-1");
    std::vector<std::vector<int>> blocks;
    blocks.push_back({i, i + 1, -i, -(i + 1)});
    for (int j = 1; j <= k; ++j)
        if (j != i && j != i + 1) blocks.push_back({j, -j});
    return Diagram(k, std::move(blocks));
}

// {i,i+1} on top, {-i,-(i+1)} on the bottom; equals b_i p_i p_{i+1} b_i up to
// the power of x produced by the composition.
inline Diagram gen_e(int k, int i) {
    if (i < 1 || i + 1 > k) throw IndexOutOfRange("e_i needs 1 <= i <= k-1");
    std::vector<std::vector<int>> blocks;
    blocks.push_back({i, i + 1});
    blocks.push_back({-i, -(i + 1)});
    for (int j = 1; j <= k; ++j)
        if (j != i && j != i + 1) blocks.push_back({j, -j});
    return Diagram(k, std::move(blocks));
}

// First m strands kept, the remaining k-m strands cut into singletons.
inline Diagram ptilde(int k, int m) {
    if (m < 0 || m > k) throw IndexOutOfRange("ptilde needs 0 <= m <= k");
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= m; ++i) blocks.push_back({i, -i});
    for (int i = m + 1; i <= k; ++i) {
        blocks.push_back({i});
        blocks.push_back({-i});
    }
    return Diagram(k, std::move(blocks));
}

// sigma maps 1..m to images sigma[i-1]; strands m+1..k are left alone.
inline Diagram perm_diagram(int k, const std::vector<int>& sigma) {
    const int m = static_cast<int>(sigma.size());
    if (m > k) throw IndexOutOfRange("permutation longer than diagram size");
    std::vector<int> seen(m + 1, 0);
    for (int v : sigma) {
        if (v < 1 || v > m || seen[v]++)
            throw ParseError("not a permutation of 1..m");
    }
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= m; ++i) blocks.push_back({i, -sigma[i - 1]});
    for (int i = m + 1; i <= k; ++i) blocks.push_back({i, -i});
    return Diagram(k, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Product and tensor product.
// ---------------------------------------------------------------------------

struct ComposeResult {
    int power;  // exponent of x: closed middle components
    Diagram d;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace detail

// Stack d1 above d2, glue d1's bottom row to d2's top row, read off the
// visible set partition and count the components that stayed in the middle.
inline ComposeResult compose(const Diagram& d1, const Diagram& d2) {
    if (d1.size() != d2.size())
        throw SizeMismatch("compose needs equal sizes, got " + std::to_string(d1.size()) +
                           " and " + std::to_string(d2.size()));
    const int K = d1.size();
    // Nodes: 0..K-1 top (d1 top i -> i-1), K..2K-1 middle (glued row, j ->
    // K+j-1), 2K..3K-1 bottom (d2 bottom -j -> 2K+j-1).
    detail::UnionFind uf(3 * K);
    for (const auto& b : d1.blocks())
        for (size_t i = 1; i < b.size(); ++i) {
            auto node = [&](int v) { return v > 0 ? v - 1 : K + (-v) - 1; };
            uf.unite(node(b[0]), node(b[i]));
        }
    for (const auto& b : d2.blocks())
        for (size_t i = 1; i < b.size(); ++i) {
            auto node = [&](int v) { return v > 0 ? K + v - 1 : 2 * K + (-v) - 1; };
            uf.unite(node(b[0]), node(b[i]));
        }
    std::vector<std::vector<int>> visible(3 * K);  // root -> visible vertices
    std::vector<char> has_middle(3 * K, 0), has_visible(3 * K, 0);
    for (int t = 0; t < K; ++t) {
        int r = uf.find(t);
        visible[r].push_back(t + 1);
        has_visible[r] = 1;
    }
    for (int j = 0; j < K; ++j) has_middle[uf.find(K + j)] = 1;
    for (int j = 0; j < K; ++j) {
        int r = uf.find(2 * K + j);
        visible[r].push_back(-(j + 1));
        has_visible[r] = 1;
    }
    int m = 0;
    std::vector<std::vector<int>> blocks;
    for (int r = 0; r < 3 * K; ++r) {
        if (uf.find(r) != r) continue;
        if (has_visible[r])
            blocks.push_back(std::move(visible[r]));
        else if (has_middle[r])
            ++m;
    }
    return ComposeResult{m, Diagram(K, std::move(blocks))};
}

// Side-by-side juxtaposition: d2's vertices are shifted past d1's.
inline Diagram tensor(const Diagram& d1, const Diagram& d2) {
    const int k1 = d1.size();
    std::vector<std::vector<int>> blocks = d1.blocks();
    for (const auto& b : d2.blocks()) {
        std::vector<int> shifted;
        shifted.reserve(b.size());
        for (int v : b) shifted.push_back(v > 0 ? v + k1 : v - k1);
        blocks.push_back(std::move(shifted));
    }
    return Diagram(k1 + d2.size(), std::move(blocks));
}

// ---------------------------------------------------------------------------
// Refinement orders used by the conjugation coefficients.
// ---------------------------------------------------------------------------

// Every block of dp lies inside a block of d.
inline bool refines(const Diagram& dp, const Diagram& d) {
    if (dp.size() != d.size()) throw SizeMismatch("refines needs equal sizes");
    for (const auto& b : dp.blocks()) {
        for (size_t i = 1; i < b.size(); ++i)
            if (!d.same_block(b[0], b[i])) return false;
    }
    return true;
}

// dp refines d and splits each block of d into at most one part of size >= 2
// plus singletons.
inline bool refines_star(const Diagram& dp, const Diagram& d) {
    if (!refines(dp, d)) return false;
    for (const auto& b : d.blocks()) {
        int big_parts = 0;
        // The parts of dp inside b are dp-blocks; count the non-singletons.
        std::vector<int> seen;
        for (int v : b) {
            int idx = dp.block_index_of(v);
            if (std::find(seen.begin(), seen.end(), idx) != seen.end()) continue;
            seen.push_back(idx);
            if (dp.blocks()[idx].size() >= 2) ++big_parts;
        }
        if (big_parts > 1) return false;
    }
    return true;
}

// Number of singleton blocks of dp inside the vertex set B.
inline int block_singleton_count(const Diagram& dp, const std::vector<int>& B) {
    int count = 0;
    for (int v : B)
        if (dp.is_singleton_block(v)) ++count;
    return count;
}

// ---------------------------------------------------------------------------
// The singleton-filling bijection between all size-k diagrams and the
// no-singleton half diagrams of size k+1: every singleton of d is absorbed
// into the block holding the new pair {k+1, -(k+1)}.
// ---------------------------------------------------------------------------

inline Diagram fill_singletons(const Diagram& d) {
    const int k = d.size();
    std::vector<std::vector<int>> blocks;
    std::vector<int> pair_block = {k + 1, -(k + 1)};
    for (const auto& b : d.blocks()) {
        if (b.size() == 1)
            pair_block.push_back(b[0]);
        else
            blocks.push_back(b);
    }
    blocks.push_back(std::move(pair_block));
    return Diagram(k + 1, std::move(blocks));
}

inline Diagram extract_singletons(const Diagram& dh) {
    const int K = dh.size();
    if (!dh.is_half_diagram())
        throw Error("extract_singletons needs " + std::to_string(K) + " and " +
                    std::to_string(-K) + " in one block");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : dh.blocks()) {
        if (dh.same_block(b[0], K)) {
            for (int v : b)
                if (v != K && v != -K) blocks.push_back({v});
        } else {
            blocks.push_back(b);
        }
    }
    return Diagram(K - 1, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Enumeration. Set partitions of the 2K vertices are produced in restricted-
// growth order over the vertex sequence 1..K,-1..-K, which lands each diagram
// directly in canonical form; the order is deterministic.
// ---------------------------------------------------------------------------

template <typename F>
void for_each_diagram(int K, F&& f) {
    const int n = 2 * K;
    if (n == 0) {
        f(Diagram(0, {}));
        return;
    }
    std::vector<std::vector<int>> blocks;
    auto vertex = [K](int idx) { return idx < K ? idx + 1 : -(idx - K + 1); };
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == n) {
            f(Diagram(K, blocks));
            return;
        }
        const int v = vertex(idx);
        const size_t existing = blocks.size();
        for (size_t bi = 0; bi < existing; ++bi) {
            blocks[bi].push_back(v);
            self(self, idx + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({v});
        self(self, idx + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

inline std::vector<Diagram> all_diagrams(int K) {
    std::vector<Diagram> out;
    for_each_diagram(K, [&](Diagram&& d) { out.push_back(std::move(d)); });
    return out;
}

// Diagrams indexing the conjugated basis of the context's algebra.
inline std::vector<Diagram> leader_diagrams(const Context& ctx) {
    std::vector<Diagram> out;
    for_each_diagram(ctx.strands(), [&](Diagram&& d) {
        if (ctx.is_basis_leader(d)) out.push_back(std::move(d));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Module diagrams: exactly m propagating blocks, each holding exactly one of
// the bottoms -1..-m, with -(m+1)..-k singleton. In the standard form the
// propagating blocks are sorted so that the block containing -j has the j-th
// smallest maximal top vertex.
// ---------------------------------------------------------------------------

inline bool is_vkm_diagram(const Diagram& d, int m) {
    const int k = d.size();
    if (m < 0 || m > k) return false;
    if (d.propagating_number() != m) return false;
    for (int j = 1; j <= m; ++j) {
        const auto& b = d.block_containing(-j);
        int bottoms = 0;
        for (int v : b)
            if (v < 0) ++bottoms;
        if (bottoms != 1) return false;
    }
    for (int j = m + 1; j <= k; ++j)
        if (!d.is_singleton_block(-j)) return false;
    return true;
}

inline int top_max(const std::vector<int>& block) {
    int mx = 0;
    for (int v : block)
        if (v > 0 && v > mx) mx = v;
    return mx;
}

inline bool is_km_standard(const Diagram& d, int m) {
    if (!is_vkm_diagram(d, m)) return false;
    for (int j = 1; j + 1 <= m; ++j)
        if (top_max(d.block_containing(-j)) >= top_max(d.block_containing(-(j + 1)))) return false;
    return true;
}

// Half variant inside size k+1: additionally one block pairs k+1 with
// -(k+1) (and no other bottom vertex); it stays out of the sorting.
inline bool is_half_vkm_diagram(const Diagram& d, int m) {
    const int K = d.size();
    const int k = K - 1;
    if (K < 1 || m < 0 || m > k) return false;
    if (!d.is_half_diagram()) return false;
    const auto& h = d.block_containing(K);
    int h_bottoms = 0;
    for (int v : h)
        if (v < 0) ++h_bottoms;
    if (h_bottoms != 1) return false;
    if (d.propagating_number() != m + 1) return false;
    for (int j = 1; j <= m; ++j) {
        const auto& b = d.block_containing(-j);
        if (d.same_block(-j, K)) return false;
        int bottoms = 0;
        for (int v : b)
            if (v < 0) ++bottoms;
        if (bottoms != 1) return false;
    }
    for (int j = m + 1; j <= k; ++j)
        if (!d.is_singleton_block(-j)) return false;
    return true;
}

inline bool is_half_km_standard(const Diagram& d, int m) {
    if (!is_half_vkm_diagram(d, m)) return false;
    for (int j = 1; j + 1 <= m; ++j)
        if (top_max(d.block_containing(-j)) >= top_max(d.block_containing(-(j + 1)))) return false;
    return true;
}

inline std::vector<Diagram> km_standard_diagrams(int k, int m) {
    std::vector<Diagram> out;
    for_each_diagram(k, [&](Diagram&& d) {
        if (is_km_standard(d, m)) out.push_back(std::move(d));
    });
    return out;
}

inline std::vector<Diagram> half_km_standard_diagrams(int k, int m) {
    std::vector<Diagram> out;
    for_each_diagram(k + 1, [&](Diagram&& d) {
        if (is_half_km_standard(d, m)) out.push_back(std::move(d));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Factorization d = d_std * sigma of a module diagram into its standard form
// and a permutation of 1..m (m = number of sorted propagating blocks).
// ---------------------------------------------------------------------------

struct FactorResult {
    Diagram standard;
    std::vector<int> sigma;  // sigma[j-1] = image of j, an element of S_m
};

namespace detail {

// Shared core: reattach bottoms -1..-m to the propagating blocks in order of
// ascending maximal top vertex. `exempt` marks blocks left untouched (the
// half block). Returns the standard diagram and sigma with
// sigma[j-1] = i when the block with j-th smallest top maximum held -i.
inline FactorResult refactor_sorted(const Diagram& d, int m, int exempt_vertex) {
    struct Prop {
        int top_max;
        int bottom;  // the i with -i in the block
        std::vector<int> tops;
    };
    std::vector<Prop> props;
    std::vector<std::vector<int>> rest;
    for (const auto& b : d.blocks()) {
        if (exempt_vertex != 0 && d.same_block(b[0], exempt_vertex)) {
            rest.push_back(b);
            continue;
        }
        int bottom = 0;
        std::vector<int> tops;
        for (int v : b) {
            if (v > 0)
                tops.push_back(v);
            else
                bottom = -v;
        }
        if (bottom != 0 && !tops.empty() && bottom <= m)
            props.push_back({top_max(b), bottom, std::move(tops)});
        else
            rest.push_back(b);
    }
    std::sort(props.begin(), props.end(),
              [](const Prop& a, const Prop& b) { return a.top_max < b.top_max; });
    std::vector<int> sigma(m);
    std::vector<std::vector<int>> blocks = std::move(rest);
    for (int j = 1; j <= m; ++j) {
        sigma[j - 1] = props[j - 1].bottom;
        std::vector<int> block = props[j - 1].tops;
        block.push_back(-j);
        blocks.push_back(std::move(block));
    }
    return FactorResult{Diagram(d.size(), std::move(blocks)), std::move(sigma)};
}

} // namespace detail

inline FactorResult factor_standard(const Diagram& d) {
    const int m = d.propagating_number();
    if (!is_vkm_diagram(d, m))
        throw NotAVkmDiagram("diagram " + d.to_string() + " is not a module diagram");
    return detail::refactor_sorted(d, m, 0);
}

inline FactorResult half_factor_standard(const Diagram& d) {
    const int m = d.propagating_number() - 1;
    if (!is_half_vkm_diagram(d, m))
        throw NotAVkmDiagram("diagram " + d.to_string() + " is not a half module diagram");
    return detail::refactor_sorted(d, m, d.size());
}

} // namespace qpart

#endif // QPART_DIAGRAM_HPP
