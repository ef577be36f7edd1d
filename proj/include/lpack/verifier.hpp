#pragma once

#include "lpack/model.hpp"

#include <string>
#include <vector>

namespace lpack {

/// Independent pass/fail flags; verify() evaluates all of them.
struct VerificationReport {
    bool base_shape = false;         // base is one n-cycle / n-circuit
    bool bijections = false;         // every σ_j is a permutation of [0, n)
    bool disjointness = false;       // |∪ σ_j(base)| = k·n
    bool label_preservation = false; // label(σ_j(v)) = label(σ_1(v)) for all v, j
    bool capacity = false;           // k·n fits in K_n or the complete digraph
    bool label_count = false;        // declared p = number of distinct labels

    bool valid() const
    {
        return base_shape && bijections && disjointness && label_preservation && capacity && label_count;
    }

    /// Names of the failing flags, in declaration order.
    std::vector<std::string> failures() const;
};

VerificationReport verify(const LabeledPacking& packing);

struct OrbitLabeling {
    int p = 0;
    Labeling labeling;
};

/// Connected components of the relation σ_j(v) ~ σ_j'(v): the largest labeling
/// compatible with these placements. Components are numbered by their smallest
/// vertex, so the result is deterministic.
OrbitLabeling max_labels_of_placement(const PlacementSet& placements, int n);

} // namespace lpack
