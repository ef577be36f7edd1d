#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace lpack {

/// Disjoint sets with union by size and no path compression, so that every
/// union can be undone in LIFO order (the oracle backtracks through them).
class UnionFind {
public:
    explicit UnionFind(int n)
        : parent_(static_cast<std::size_t>(n))
        , size_(static_cast<std::size_t>(n), 1)
        , components_(n)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) const
    {
        while (parent_[static_cast<std::size_t>(v)] != v)
            v = parent_[static_cast<std::size_t>(v)];
        return v;
    }

    /// Returns true if a merge happened. Always pushes a history entry.
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            history_.push_back(-1);
            return false;
        }
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)])
            std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        --components_;
        history_.push_back(b);
        return true;
    }

    /// Reverts the most recent unite().
    void undo()
    {
        const int b = history_.back();
        history_.pop_back();
        if (b < 0)
            return;
        const int a = parent_[static_cast<std::size_t>(b)];
        size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        parent_[static_cast<std::size_t>(b)] = b;
        ++components_;
    }

    int components() const { return components_; }
    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
    int components_;
};

} // namespace lpack
