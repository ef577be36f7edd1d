#include "lpack/oracle.hpp"

#include "lpack/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <stdexcept>

namespace lpack {

namespace {

constexpr int kClasses = 7;
constexpr int kCopies = 9;
constexpr int kOrder = 21;
constexpr std::int64_t kNodesPerTour = 20'000'000;

// Column of a vertex: the occurrence of its class that σ_j sends it to, per copy.
using Column = std::array<std::uint8_t, kCopies>;

bool orthogonal(const Column& a, const Column& b)
{
    unsigned seen = 0;
    for (int j = 0; j < kCopies; ++j) {
        const unsigned bit = 1u << (a[j] * 3 + b[j]);
        if (seen & bit)
            return false;
        seen |= bit;
    }
    return true;
}

bool row_disjoint(const Column& a, const Column& b)
{
    for (int j = 0; j < kCopies; ++j)
        if (a[j] == b[j])
            return false;
    return true;
}

// Balanced columns (each occurrence used by three copies) starting with `first`.
std::vector<Column> balanced_columns(std::uint8_t first)
{
    std::vector<Column> out;
    Column c{};
    c[0] = first;
    std::array<int, 3> count{};
    count[first] = 1;
    auto rec = [&](auto&& self, int j) -> void {
        if (j == kCopies) {
            out.push_back(c);
            return;
        }
        for (std::uint8_t v = 0; v < 3; ++v)
            if (count[v] < 3) {
                ++count[v];
                c[static_cast<std::size_t>(j)] = v;
                self(self, j + 1);
                --count[v];
            }
    };
    rec(rec, 1);
    return out;
}

// Hierholzer's algorithm on K_7; `adjacency` fixes the neighbour order.
std::vector<int> euler_tour(const std::array<std::vector<int>, kClasses>& adjacency)
{
    std::array<std::array<bool, kClasses>, kClasses> used{};
    std::array<std::size_t, kClasses> next{};
    std::vector<int> stack{0};
    std::vector<int> circuit;
    while (!stack.empty()) {
        const int u = stack.back();
        auto& nb = adjacency[static_cast<std::size_t>(u)];
        std::size_t& i = next[static_cast<std::size_t>(u)];
        while (i < nb.size() && used[static_cast<std::size_t>(u)][static_cast<std::size_t>(nb[i])])
            ++i;
        if (i == nb.size()) {
            circuit.push_back(u);
            stack.pop_back();
        } else {
            const int w = nb[i];
            used[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = true;
            used[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] = true;
            stack.push_back(w);
        }
    }
    circuit.pop_back();
    return circuit;
}

class ColumnSearch {
public:
    ColumnSearch(const std::vector<int>& tour, const std::array<std::vector<Column>, 3>& domains)
        : tour_(tour), domains_(domains)
    {
        std::array<int, kClasses> seen{};
        for (int t = 0; t < kOrder; ++t) {
            const int c = tour[static_cast<std::size_t>(t)];
            occurrence_[static_cast<std::size_t>(t)] = seen[static_cast<std::size_t>(c)]++;
            first_pos_[static_cast<std::size_t>(c)][static_cast<std::size_t>(occurrence_[static_cast<std::size_t>(t)])] = t;
        }
    }

    bool run(std::int64_t node_limit, std::chrono::steady_clock::time_point deadline)
    {
        limit_ = node_limit;
        deadline_ = deadline;
        return descend(0);
    }

    std::int64_t nodes() const { return nodes_; }
    bool cut_off() const { return cut_off_; }

    LabeledPacking packing() const
    {
        LabeledPacking out;
        out.n = kOrder;
        out.directed = false;
        out.base = cycle_edges(kOrder);
        std::vector<Label> labels(tour_.begin(), tour_.end());
        out.labeling = Labeling(std::move(labels), kClasses).canonical();
        for (int j = 0; j < kCopies; ++j) {
            std::vector<Vertex> image(kOrder);
            for (int t = 0; t < kOrder; ++t) {
                const int c = tour_[static_cast<std::size_t>(t)];
                image[static_cast<std::size_t>(t)]
                    = first_pos_[static_cast<std::size_t>(c)][column_[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]];
            }
            out.placements.emplace_back(std::move(image));
        }
        return out;
    }

private:
    bool descend(int t)
    {
        if (++nodes_ > limit_ || ((nodes_ & 0xffff) == 0 && std::chrono::steady_clock::now() >= deadline_)) {
            cut_off_ = true;
            return false;
        }
        if (t == kOrder)
            return orthogonal(column_[kOrder - 1], column_[0]);
        const int c = tour_[static_cast<std::size_t>(t)];
        const int o = occurrence_[static_cast<std::size_t>(t)];
        const auto& first = first_pos_[static_cast<std::size_t>(c)];
        if (o == 2) {
            // The class's three columns must be a permutation of {0,1,2} in every copy.
            const Column& a = column_[static_cast<std::size_t>(first[0])];
            const Column& b = column_[static_cast<std::size_t>(first[1])];
            Column z{};
            for (int j = 0; j < kCopies; ++j)
                z[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(3 - a[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(j)]);
            if (!orthogonal(column_[static_cast<std::size_t>(t - 1)], z))
                return false;
            column_[static_cast<std::size_t>(t)] = z;
            return descend(t + 1);
        }
        for (const Column& cand : domains_[static_cast<std::size_t>(o)]) {
            if (t == 0 && cand != Column{0, 0, 0, 1, 1, 1, 2, 2, 2})
                continue; // copies 2..9 are interchangeable
            if (t > 0 && !orthogonal(column_[static_cast<std::size_t>(t - 1)], cand))
                continue;
            if (o == 1 && !row_disjoint(cand, column_[static_cast<std::size_t>(first[0])]))
                continue;
            column_[static_cast<std::size_t>(t)] = cand;
            if (descend(t + 1))
                return true;
            if (cut_off_)
                return false;
        }
        return false;
    }

    const std::vector<int>& tour_;
    const std::array<std::vector<Column>, 3>& domains_;
    std::array<int, kOrder> occurrence_{};
    std::array<std::array<int, 3>, kClasses> first_pos_{};
    std::array<Column, kOrder> column_{};
    std::int64_t nodes_ = 0;
    std::int64_t limit_ = 0;
    std::chrono::steady_clock::time_point deadline_;
    bool cut_off_ = false;
};

} // namespace

CounterexampleOutcome guided_counterexample_search(const SearchBudget& budget)
{
    const std::array<std::vector<Column>, 3> domains{balanced_columns(0), balanced_columns(1), balanced_columns(2)};
    const auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(budget.max_seconds);

    std::array<std::vector<int>, kClasses> adjacency;
    for (int a = 0; a < kClasses; ++a)
        for (int b = 0; b < kClasses; ++b)
            if (a != b)
                adjacency[static_cast<std::size_t>(a)].push_back(b);
    std::mt19937 rng(budget.deterministic_order ? 1u : std::random_device{}());

    CounterexampleOutcome out;
    while (out.nodes < budget.max_nodes && std::chrono::steady_clock::now() < deadline) {
        // First tour: sorted neighbours; later tours reshuffle them.
        if (out.tours_tried > 0)
            for (auto& nb : adjacency)
                std::shuffle(nb.begin(), nb.end(), rng);
        const std::vector<int> tour = euler_tour(adjacency);
        ++out.tours_tried;

        ColumnSearch search(tour, domains);
        const bool found = search.run(std::min(kNodesPerTour, budget.max_nodes - out.nodes), deadline);
        out.nodes += search.nodes();
        if (found) {
            LabeledPacking packing = search.packing();
            if (!verify(packing).valid() || packing.labeling.label_count() != kClasses)
                throw std::logic_error("guided search produced a packing that does not verify");
            out.status = CounterexampleStatus::Found;
            out.packing = std::move(packing);
            return out;
        }
    }
    return out;
}

} // namespace lpack
