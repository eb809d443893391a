// Permutations of {1..n} with explicit degree, plus orbit and block machinery.
//
// Composition convention: compose(p, q) applies the right factor first,
// compose(p, q)(i) = p(q(i)).  Group words coming from path products are
// evaluated with word(), which applies the leftmost factor first; this is the
// order in which sheet monodromy composes along a concatenated path.
#pragma once

#include "arith.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace seifert {

class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n) {
        check_degree(n);
        Permutation p;
        p.img_.resize(n);
        std::iota(p.img_.begin(), p.img_.end(), 1);
        return p;
    }

    // images[i] is the image of point i+1, values in 1..n.
    static Permutation from_images(std::vector<int> images) {
        int n = static_cast<int>(images.size());
        check_degree(n);
        std::vector<bool> seen(n, false);
        for (int v : images) {
            if (v < 1 || v > n) throw error("permutation image out of range");
            if (seen[v - 1]) throw error("permutation images are not a bijection");
            seen[v - 1] = true;
        }
        Permutation p;
        p.img_ = std::move(images);
        return p;
    }

    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        Permutation p = identity(n);
        std::vector<bool> used(n, false);
        for (const auto& c : cycles) {
            if (c.size() < 2) throw error("cycle of length < 2");
            for (int v : c) {
                if (v < 1 || v > n) throw error("cycle entry out of range");
                if (used[v - 1]) throw error("cycles are not disjoint");
                used[v - 1] = true;
            }
            for (size_t k = 0; k < c.size(); ++k)
                p.img_[c[k] - 1] = c[(k + 1) % c.size()];
        }
        return p;
    }

    // n-cycle (1,2,...,n)
    static Permutation big_cycle(int n) {
        check_degree(n);
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = (i + 1) % n + 1;
        return from_images(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }

    int operator()(int point) const { return img_[point - 1]; }

    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i + 1) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> img(img_.size());
        for (int i = 0; i < degree(); ++i) img[img_[i] - 1] = i + 1;
        Permutation p;
        p.img_ = std::move(img);
        return p;
    }

    Permutation power(long long k) const;

    // Cycles rotated to start at their minimal point, sorted by that point.
    std::vector<std::vector<int>> cycles(bool include_fixed_points = false) const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(degree(), false);
        for (int start = 1; start <= degree(); ++start) {
            if (seen[start - 1]) continue;
            std::vector<int> c;
            int x = start;
            do {
                seen[x - 1] = true;
                c.push_back(x);
                x = img_[x - 1];
            } while (x != start);
            if (c.size() >= 2 || include_fixed_points) out.push_back(std::move(c));
        }
        return out;
    }

    long long order() const {
        long long o = 1;
        for (const auto& c : cycles()) o = lcm_ll(o, static_cast<long long>(c.size()));
        return o;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
    static void check_degree(int n) {
        if (n < 1) throw error("permutation degree must be positive");
    }
    std::vector<int> img_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw error("compose: degree mismatch");
    std::vector<int> img(p.degree());
    for (int i = 1; i <= p.degree(); ++i) img[i - 1] = p(q(i));
    return Permutation::from_images(std::move(img));
}

inline Permutation Permutation::power(long long k) const {
    Permutation base = *this;
    if (k < 0) {
        base = inverse();
        k = -k;
    }
    Permutation acc = identity(degree());
    while (k > 0) {
        if (k & 1) acc = compose(acc, base);
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

// Evaluate the word w[0] w[1] ... w[k-1] as a sheet permutation: the leftmost
// factor acts first.
inline Permutation word(const std::vector<Permutation>& w, int degree_if_empty = 0) {
    if (w.empty()) {
        if (degree_if_empty < 1) throw error("word: empty word with no degree");
        return Permutation::identity(degree_if_empty);
    }
    Permutation acc = Permutation::identity(w.front().degree());
    for (const auto& p : w) acc = compose(p, acc);
    return acc;
}

// Commutator x y x^-1 y^-1 as a word (leftmost factor first).
inline Permutation commutator(const Permutation& x, const Permutation& y) {
    return word({x, y, x.inverse(), y.inverse()});
}

inline Permutation conjugate(const Permutation& p, const Permutation& c) {
    return compose(compose(c, p), c.inverse());
}

inline bool commute(const Permutation& a, const Permutation& b) {
    return compose(a, b) == compose(b, a);
}

// Fixed points counted apart from the multiset of nontrivial cycle lengths.
struct CycleProfile {
    int fixed_points = 0;
    std::vector<std::pair<int, int>> cycles; // (length >= 2, count), lengths ascending

    friend bool operator==(const CycleProfile&, const CycleProfile&) = default;
};

inline CycleProfile cycle_profile(const Permutation& p) {
    CycleProfile prof;
    std::vector<int> lengths;
    for (const auto& c : p.cycles(true)) {
        if (c.size() == 1)
            ++prof.fixed_points;
        else
            lengths.push_back(static_cast<int>(c.size()));
    }
    std::sort(lengths.begin(), lengths.end());
    for (int len : lengths) {
        if (!prof.cycles.empty() && prof.cycles.back().first == len)
            ++prof.cycles.back().second;
        else
            prof.cycles.emplace_back(len, 1);
    }
    return prof;
}

// Orbit partition of {1..n} under a set of permutations.
struct OrbitPartition {
    int degree = 0;
    std::vector<std::vector<int>> orbits; // sorted by minimal element, each ascending
    std::vector<int> orbit_of;            // 1-based point -> 0-based orbit index

    bool is_transitive() const { return orbits.size() == 1; }
};

inline OrbitPartition orbits(int n, const std::vector<Permutation>& gens) {
    if (n < 1) throw error("orbits: degree must be positive");
    for (const auto& g : gens)
        if (g.degree() != n) throw error("orbits: generator degree mismatch");
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : gens)
        for (int i = 1; i <= n; ++i) {
            int a = find(i - 1), b = find(g(i) - 1);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    OrbitPartition part;
    part.degree = n;
    part.orbit_of.assign(n + 1, -1);
    std::vector<int> root_to_orbit(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (root_to_orbit[r] == -1) {
            root_to_orbit[r] = static_cast<int>(part.orbits.size());
            part.orbits.emplace_back();
        }
        part.orbits[root_to_orbit[r]].push_back(i + 1);
        part.orbit_of[i + 1] = root_to_orbit[r];
    }
    return part;
}

inline OrbitPartition orbits(const std::vector<Permutation>& gens) {
    if (gens.empty()) throw error("orbits: empty generator list with undeclared degree");
    return orbits(gens.front().degree(), gens);
}

// Quotient of a transitive action by the orbit partition of a normal subgroup.
// Blocks are numbered by their minimal element, ascending.
struct BlockQuotient {
    int num_blocks = 0;
    int block_size = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;              // 1-based point -> 1-based block id
    std::vector<Permutation> quotient_gens; // induced action of the input gens on blocks

    // Induced permutation of blocks.
    Permutation quotient_of(const Permutation& p) const {
        std::vector<int> img(num_blocks);
        for (int b = 1; b <= num_blocks; ++b) {
            int target = block_of[p(blocks[b - 1][0])];
            for (int pt : blocks[b - 1])
                if (block_of[p(pt)] != target)
                    throw error("block_quotient: partition not invariant under permutation");
            img[b - 1] = target;
        }
        return Permutation::from_images(std::move(img));
    }

    // Restriction to a block (1-based id) the permutation stabilizes setwise.
    // Points of the block are renumbered 1..block_size in ascending order.
    Permutation restrict_to_block(const Permutation& p, int block_id = 1) const {
        const auto& blk = blocks[block_id - 1];
        std::vector<int> pos(block_of.size(), 0);
        for (int k = 0; k < block_size; ++k) pos[blk[k]] = k + 1;
        std::vector<int> img(block_size);
        for (int k = 0; k < block_size; ++k) {
            int image = p(blk[k]);
            if (pos[image] == 0) throw error("restrict_to_block: permutation does not stabilize block");
            img[k] = pos[image];
        }
        return Permutation::from_images(std::move(img));
    }
};

inline BlockQuotient block_quotient(const std::vector<Permutation>& gens,
                                    const std::vector<Permutation>& normal_gens) {
    if (gens.empty()) throw error("block_quotient: empty generator list");
    const int n = gens.front().degree();
    OrbitPartition whole = orbits(n, gens);
    if (!whole.is_transitive()) throw error("block_quotient: generators are not transitive");

    OrbitPartition kernel_orbits = orbits(n, normal_gens);
    BlockQuotient bq;
    bq.blocks = kernel_orbits.orbits;
    bq.num_blocks = static_cast<int>(bq.blocks.size());
    bq.block_size = n / bq.num_blocks;
    bq.block_of.assign(n + 1, 0);
    for (int b = 0; b < bq.num_blocks; ++b) {
        if (static_cast<int>(bq.blocks[b].size()) != bq.block_size)
            throw error("block_quotient: blocks have unequal sizes");
        for (int pt : bq.blocks[b]) bq.block_of[pt] = b + 1;
    }
    // quotient_of throws if some generator fails to permute the blocks, which
    // signals that normal_gens was not normal in the generated group.
    for (const auto& g : gens) bq.quotient_gens.push_back(bq.quotient_of(g));
    return bq;
}

} // namespace seifert
