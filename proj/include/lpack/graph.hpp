#pragma once

// Vertices, edges/arcs, permutations and the two shape predicates every other
// module relies on. Vertices are 0-based indices in [0, n).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lpack {

using Vertex = int;

/// An edge {u, v} or an arc u -> v, depending on the set holding it.
struct Link {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Link&) const = default;
};

/// Set of edges (undirected, stored with u < v) or arcs on n vertices.
///
/// Backed by an n x n membership bitmap, so insert/contains are O(1) and
/// iteration yields links in lexicographic order.
class LinkSet {
public:
    LinkSet() = default;
    LinkSet(int n, bool directed);

    static LinkSet edges(int n) { return LinkSet(n, false); }
    static LinkSet arcs(int n) { return LinkSet(n, true); }

    /// Inserts l (canonicalised when undirected). Returns false if already present.
    /// Throws ParameterError for loops or endpoints outside [0, n).
    bool insert(Link l);
    bool erase(Link l);
    bool contains(Link l) const;

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    int order() const { return n_; }
    bool directed() const { return directed_; }

    /// All links, lexicographically sorted.
    std::vector<Link> links() const;

    /// Canonical form of l for this set: (min, max) when undirected.
    Link canonical(Link l) const;

    bool operator==(const LinkSet& other) const;

private:
    std::size_t index(Link l) const;
    void check(Link l) const;

    int n_ = 0;
    bool directed_ = false;
    std::vector<std::uint8_t> bits_;
    std::size_t size_ = 0;
};

/// A map on [0, n). Bijectivity is not enforced at construction so that
/// malformed certificates can still be represented and reported by verify().
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Vertex> image) : image_(std::move(image)) {}

    static Permutation identity(int n);

    Vertex operator()(Vertex v) const { return image_[static_cast<std::size_t>(v)]; }
    int size() const { return static_cast<int>(image_.size()); }
    std::span<const Vertex> images() const { return image_; }

    bool is_bijection() const;
    bool is_identity() const;

    /// Requires is_bijection().
    Permutation inverse() const;

    /// (*this ∘ inner)(v) = (*this)(inner(v)).
    Permutation compose(const Permutation& inner) const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<Vertex> image_;
};

/// {{i, i+1 mod n}}: the cycle C_n. Requires n >= 3.
LinkSet cycle_edges(int n);

/// {(i, i+1 mod n)}: the circuit on n vertices. Requires n >= 2.
LinkSet circuit_arcs(int n);

/// Size n, all degrees 2 and connected, i.e. isomorphic to C_n.
bool is_single_cycle(const LinkSet& edges, int n);

/// In- and out-degree 1 everywhere and one directed cycle through all n vertices.
bool is_single_circuit(const LinkSet& arcs, int n);

/// Image of every link under perm. perm must be a bijection on the set's vertices.
LinkSet apply_permutation(const Permutation& perm, const LinkSet& links);

/// Cyclic vertex order -> edge or arc set.
LinkSet links_from_sequence(std::span<const Vertex> order, int n, bool directed);

/// Euclidean remainder, always in [0, m).
constexpr long long euclid_mod(long long a, long long m)
{
    const long long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace lpack
