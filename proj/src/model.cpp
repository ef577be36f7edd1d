#include "lpack/model.hpp"

#include "lpack/errors.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace lpack {

Labeling::Labeling(std::vector<Label> labels)
    : labels_(std::move(labels))
{
    declared_ = labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()) + 1;
}

Labeling::Labeling(std::vector<Label> labels, int declared_count)
    : labels_(std::move(labels))
    , declared_(declared_count)
{}

Labeling Labeling::discrete(int n)
{
    std::vector<Label> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        labels[static_cast<std::size_t>(i)] = i;
    return Labeling(std::move(labels));
}

Labeling Labeling::uniform(int n)
{
    return Labeling(std::vector<Label>(static_cast<std::size_t>(n), 0));
}

int Labeling::distinct_count() const
{
    std::vector<Label> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::vector<int> Labeling::class_sizes() const
{
    std::vector<int> sizes(static_cast<std::size_t>(std::max(declared_, 0)), 0);
    for (Label l : labels_)
        if (l >= 0 && l < declared_)
            ++sizes[static_cast<std::size_t>(l)];
    return sizes;
}

Labeling Labeling::canonical() const
{
    std::unordered_map<Label, Label> rename;
    std::vector<Label> out;
    out.reserve(labels_.size());
    for (Label l : labels_) {
        auto [it, inserted] = rename.try_emplace(l, static_cast<Label>(rename.size()));
        out.push_back(it->second);
    }
    const int count = static_cast<int>(rename.size());
    return Labeling(std::move(out), count);
}

int q_min(const Labeling& labeling)
{
    const auto sizes = labeling.class_sizes();
    int q = labeling.size();
    for (int s : sizes)
        if (s > 0)
            q = std::min(q, s);
    return q;
}

std::vector<Vertex> label_class(const Labeling& labeling, Label l)
{
    if (l < 0 || l >= labeling.label_count())
        throw ParameterError("unknown-label: " + std::to_string(l));
    std::vector<Vertex> members;
    for (Vertex v = 0; v < labeling.size(); ++v)
        if (labeling[v] == l)
            members.push_back(v);
    return members;
}

std::vector<Vertex> fixed_points(const PlacementSet& placements, int n)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
        const bool fixed = std::all_of(placements.begin(), placements.end(),
                                       [v](const Permutation& p) { return p(v) == v; });
        if (fixed)
            out.push_back(v);
    }
    return out;
}

PlacementSet normalize_first_copy(const PlacementSet& placements)
{
    if (placements.empty())
        return {};
    const Permutation first_inv = placements.front().inverse();
    PlacementSet out;
    out.reserve(placements.size());
    for (const Permutation& p : placements)
        out.push_back(first_inv.compose(p));
    return out;
}

LabeledPacking reroot(const LabeledPacking& packing, int j)
{
    if (j < 0 || j >= packing.k())
        throw ParameterError("copy index out of range");
    const Permutation& pivot = packing.placements[static_cast<std::size_t>(j)];
    const Permutation pivot_inv = pivot.inverse();
    LabeledPacking out = packing;
    out.base = apply_permutation(pivot, packing.base);
    for (std::size_t i = 0; i < out.placements.size(); ++i)
        out.placements[i] = packing.placements[i].compose(pivot_inv);
    // Keep the new base copy in front.
    std::swap(out.placements[0], out.placements[static_cast<std::size_t>(j)]);
    return out;
}

} // namespace lpack
