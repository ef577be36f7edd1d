#include "lpack/graph.hpp"

#include "lpack/errors.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace lpack {

LinkSet::LinkSet(int n, bool directed)
    : n_(n)
    , directed_(directed)
    , bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0)
{
    if (n < 0)
        throw ParameterError("negative order");
}

Link LinkSet::canonical(Link l) const
{
    if (!directed_ && l.u > l.v)
        std::swap(l.u, l.v);
    return l;
}

void LinkSet::check(Link l) const
{
    if (l.u < 0 || l.v < 0 || l.u >= n_ || l.v >= n_)
        throw ParameterError("endpoint outside [0, " + std::to_string(n_) + ")");
    if (l.u == l.v)
        throw ParameterError("loop at vertex " + std::to_string(l.u));
}

std::size_t LinkSet::index(Link l) const
{
    l = canonical(l);
    return static_cast<std::size_t>(l.u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(l.v);
}

bool LinkSet::insert(Link l)
{
    check(l);
    auto& bit = bits_[index(l)];
    if (bit)
        return false;
    bit = 1;
    ++size_;
    return true;
}

bool LinkSet::erase(Link l)
{
    check(l);
    auto& bit = bits_[index(l)];
    if (!bit)
        return false;
    bit = 0;
    --size_;
    return true;
}

bool LinkSet::contains(Link l) const
{
    if (l.u < 0 || l.v < 0 || l.u >= n_ || l.v >= n_ || l.u == l.v)
        return false;
    return bits_[index(l)] != 0;
}

std::vector<Link> LinkSet::links() const
{
    std::vector<Link> out;
    out.reserve(size_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = 0; v < n_; ++v)
            if (bits_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)])
                out.push_back({u, v});
    return out;
}

bool LinkSet::operator==(const LinkSet& other) const
{
    return n_ == other.n_ && directed_ == other.directed_ && bits_ == other.bits_;
}

Permutation Permutation::identity(int n)
{
    std::vector<Vertex> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

bool Permutation::is_bijection() const
{
    std::vector<char> seen(image_.size(), 0);
    for (Vertex v : image_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < size(); ++i)
        if (image_[static_cast<std::size_t>(i)] != i)
            return false;
    return true;
}

Permutation Permutation::inverse() const
{
    if (!is_bijection())
        throw ParameterError("inverse of a non-bijective map");
    std::vector<Vertex> inv(image_.size());
    for (int i = 0; i < size(); ++i)
        inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& inner) const
{
    if (inner.size() != size())
        throw ParameterError("composing permutations of different orders");
    std::vector<Vertex> out(image_.size());
    for (int i = 0; i < size(); ++i)
        out[static_cast<std::size_t>(i)] = (*this)(inner(i));
    return Permutation(std::move(out));
}

LinkSet cycle_edges(int n)
{
    if (n < 3)
        throw ParameterError("order-too-small: a cycle needs n >= 3, got " + std::to_string(n));
    LinkSet s = LinkSet::edges(n);
    for (Vertex i = 0; i < n; ++i)
        s.insert({i, (i + 1) % n});
    return s;
}

LinkSet circuit_arcs(int n)
{
    if (n < 2)
        throw ParameterError("order-too-small: a circuit needs n >= 2, got " + std::to_string(n));
    LinkSet s = LinkSet::arcs(n);
    for (Vertex i = 0; i < n; ++i)
        s.insert({i, (i + 1) % n});
    return s;
}

bool is_single_cycle(const LinkSet& edges, int n)
{
    if (edges.directed() || edges.order() != n || n < 3 || edges.size() != static_cast<std::size_t>(n))
        return false;
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const Link& e : edges.links()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (const auto& a : adj)
        if (a.size() != 2)
            return false;
    // Walk the unique cycle through vertex 0.
    int length = 0;
    Vertex prev = -1;
    Vertex cur = 0;
    do {
        const auto& a = adj[static_cast<std::size_t>(cur)];
        const Vertex next = a[0] != prev ? a[0] : a[1];
        prev = cur;
        cur = next;
        ++length;
    } while (cur != 0 && length <= n);
    return length == n;
}

bool is_single_circuit(const LinkSet& arcs, int n)
{
    if (!arcs.directed() || arcs.order() != n || n < 2 || arcs.size() != static_cast<std::size_t>(n))
        return false;
    std::vector<Vertex> succ(static_cast<std::size_t>(n), -1);
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (const Link& a : arcs.links()) {
        if (succ[static_cast<std::size_t>(a.u)] != -1)
            return false;
        succ[static_cast<std::size_t>(a.u)] = a.v;
        ++indeg[static_cast<std::size_t>(a.v)];
    }
    for (int d : indeg)
        if (d != 1)
            return false;
    int length = 0;
    Vertex cur = 0;
    do {
        cur = succ[static_cast<std::size_t>(cur)];
        ++length;
    } while (cur != 0 && length <= n);
    return length == n;
}

LinkSet apply_permutation(const Permutation& perm, const LinkSet& links)
{
    if (perm.size() != links.order())
        throw ParameterError("permutation order differs from the link set's order");
    if (!perm.is_bijection())
        throw ParameterError("apply_permutation needs a bijection");
    LinkSet out(links.order(), links.directed());
    for (const Link& l : links.links())
        out.insert({perm(l.u), perm(l.v)});
    return out;
}

LinkSet links_from_sequence(std::span<const Vertex> order, int n, bool directed)
{
    LinkSet out(n, directed);
    const std::size_t len = order.size();
    for (std::size_t i = 0; i < len; ++i)
        out.insert({order[i], order[(i + 1) % len]});
    return out;
}

} // namespace lpack
