#pragma once

// The labeled-packing data model: labelings, placements and the aggregate
// that is verified and serialized.

#include "lpack/graph.hpp"

#include <span>
#include <vector>

namespace lpack {

using Label = int;

/// Per-vertex labels. Labels are expected to be 0..p-1 where p is the declared
/// count; verify() reports instances where the declared and actual counts differ.
class Labeling {
public:
    Labeling() = default;
    /// Declared count = max label + 1.
    explicit Labeling(std::vector<Label> labels);
    Labeling(std::vector<Label> labels, int declared_count);

    /// Every vertex in its own class.
    static Labeling discrete(int n);
    /// All vertices share label 0.
    static Labeling uniform(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    int label_count() const { return declared_; }
    int distinct_count() const;
    Label operator[](Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    std::span<const Label> labels() const { return labels_; }

    /// Size of each class, indexed by label (labels outside [0, p) are ignored).
    std::vector<int> class_sizes() const;

    /// Renumbers labels in order of first appearance by vertex index.
    Labeling canonical() const;

    bool operator==(const Labeling&) const = default;

private:
    std::vector<Label> labels_;
    int declared_ = 0;
};

using PlacementSet = std::vector<Permutation>;

/// A base copy (edges or arcs), a labeling, and the k placements.
struct LabeledPacking {
    int n = 0;
    bool directed = false;
    LinkSet base;
    Labeling labeling;
    PlacementSet placements;

    int k() const { return static_cast<int>(placements.size()); }
};

/// Smallest class size.
int q_min(const Labeling& labeling);

/// Vertices carrying label l, in increasing index order. Throws ParameterError
/// (unknown-label) when l is outside [0, label_count()).
std::vector<Vertex> label_class(const Labeling& labeling, Label l);

/// Vertices mapped to themselves by every placement.
std::vector<Vertex> fixed_points(const PlacementSet& placements, int n);

/// Conjugates every placement by the inverse of the first, so the first becomes
/// the identity: σ_j -> σ_1⁻¹ ∘ σ_j. The base is unchanged.
PlacementSet normalize_first_copy(const PlacementSet& placements);

/// Makes copy j the base copy: base' = σ_j(base), σ_i' = σ_i ∘ σ_j⁻¹. The
/// labeling is unchanged and the set of copies is the same.
LabeledPacking reroot(const LabeledPacking& packing, int j);

} // namespace lpack
