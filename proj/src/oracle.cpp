#include "lpack/oracle.hpp"

#include "lpack/bounds.hpp"
#include "lpack/errors.hpp"
#include "lpack/union_find.hpp"
#include "lpack/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <string>

namespace lpack {

namespace {

class PlacementSearch {
public:
    PlacementSearch(int n, int k, bool directed, const SearchBudget& budget)
        : n_(n)
        , k_(k)
        , directed_(directed)
        , budget_(budget)
        , used_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0)
        , taken_(static_cast<std::size_t>(k) * static_cast<std::size_t>(n), 0)
        , image_(static_cast<std::size_t>(k), std::vector<Vertex>(static_cast<std::size_t>(n)))
        , uf_(n)
        , order_(static_cast<std::size_t>(n))
        , start_(std::chrono::steady_clock::now())
    {
        std::iota(order_.begin(), order_.end(), 0);
        if (!budget.deterministic_order) {
            std::mt19937 rng(std::random_device{}());
            std::shuffle(order_.begin(), order_.end(), rng);
        }
        std::iota(image_[0].begin(), image_[0].end(), 0);
        for (Vertex v = 0; v < n; ++v)
            mark(v, (v + 1) % n, 1);
        // The partition bound holds for every n, so reaching it ends the search.
        ceiling_ = n >= 3 ? partition_bound(n, k, directed ? Weights::Circuit : Weights::Cycle).p_max : n;
    }

    LambdaOutcome run()
    {
        place(1, 0, true);
        LambdaOutcome out;
        out.status = exhausted_ ? SearchStatus::BudgetExhausted : SearchStatus::Exact;
        out.p = best_;
        out.nodes = nodes_;
        if (best_ > 0) {
            LabeledPacking w;
            w.n = n_;
            w.directed = directed_;
            w.base = directed_ ? circuit_arcs(n_) : cycle_edges(n_);
            for (auto& img : best_images_)
                w.placements.emplace_back(img);
            w.labeling = max_labels_of_placement(w.placements, n_).labeling;
            out.witness = std::move(w);
        }
        return out;
    }

private:
    std::uint8_t& slot(Vertex a, Vertex b)
    {
        return used_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
    }

    bool free(Vertex a, Vertex b) { return slot(a, b) == 0; }

    void mark(Vertex a, Vertex b, std::uint8_t value)
    {
        slot(a, b) = value;
        if (!directed_)
            slot(b, a) = value;
    }

    std::uint8_t& taken(int j, Vertex w)
    {
        return taken_[static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(w)];
    }

    bool stop()
    {
        if (exhausted_ || best_ >= ceiling_)
            return true;
        if (nodes_ >= budget_.max_nodes)
            exhausted_ = true;
        else if ((nodes_ & 0x3fff) == 0
                 && std::chrono::steady_clock::now() - start_ >= std::chrono::seconds(budget_.max_seconds))
            exhausted_ = true;
        return exhausted_;
    }

    void leaf()
    {
        if (uf_.components() > best_) {
            best_ = uf_.components();
            best_images_ = image_;
        }
    }

    // Assigns σ_j(v). Copies j >= 2 are kept in lexicographic order; `tight`
    // says σ_j agrees with σ_{j-1} on every vertex before v.
    void place(int j, Vertex v, bool tight)
    {
        if (j == k_) {
            leaf();
            return;
        }
        if (v == n_) {
            place(j + 1, 0, true);
            return;
        }
        auto& row = image_[static_cast<std::size_t>(j)];
        const Vertex floor = (j >= 2 && tight) ? image_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(v)] : 0;
        for (Vertex w : order_) {
            if (w < floor || taken(j, w))
                continue;
            const Vertex prev = v > 0 ? row[static_cast<std::size_t>(v - 1)] : -1;
            if (prev >= 0 && !free(prev, w))
                continue;
            const bool closing = v == n_ - 1;
            if (closing && !free(w, row[0]))
                continue;
            ++nodes_;
            if (stop())
                return;
            row[static_cast<std::size_t>(v)] = w;
            taken(j, w) = 1;
            if (prev >= 0)
                mark(prev, w, 1);
            if (closing)
                mark(w, row[0], 1);
            uf_.unite(v, w);
            if (uf_.components() > best_)
                place(j, v + 1, tight && w == floor);
            uf_.undo();
            if (closing)
                mark(w, row[0], 0);
            if (prev >= 0)
                mark(prev, w, 0);
            taken(j, w) = 0;
            if (exhausted_ || best_ >= ceiling_)
                return;
        }
    }

    int n_;
    int k_;
    bool directed_;
    SearchBudget budget_;
    std::vector<std::uint8_t> used_;
    std::vector<std::uint8_t> taken_;
    std::vector<std::vector<Vertex>> image_;
    UnionFind uf_;
    std::vector<Vertex> order_;
    std::chrono::steady_clock::time_point start_;
    std::int64_t nodes_ = 0;
    bool exhausted_ = false;
    int ceiling_ = 0;
    int best_ = 0;
    std::vector<std::vector<Vertex>> best_images_;
};

} // namespace

LambdaOutcome lambda_exact(int n, int k, bool directed, const SearchBudget& budget)
{
    if (n < 3 || k < 1)
        throw ParameterError("out-of-range: the oracle needs n >= 3 and k >= 1");
    const long long host = directed ? 1LL * n * (n - 1) : 1LL * n * (n - 1) / 2;
    if (1LL * k * n > host)
        throw CapacityViolation("capacity-violation: " + std::to_string(k) + " copies of order " + std::to_string(n)
                                + " need " + std::to_string(1LL * k * n) + " links, the host has " + std::to_string(host));
    LambdaOutcome out = PlacementSearch(n, k, directed, budget).run();
    if (out.status == SearchStatus::Exact && out.p == 0)
        throw CapacityViolation("capacity-violation: no " + std::to_string(k) + "-placement of order "
                                + std::to_string(n) + " exists");
    return out;
}

} // namespace lpack
