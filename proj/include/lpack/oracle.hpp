#pragma once

// Exhaustive k-placement search for exact λ^k on small cycles and circuits,
// and the structured search for a 7-labeled packing of 9 copies of C_21.

#include "lpack/model.hpp"

#include <cstdint>
#include <optional>

namespace lpack {

struct SearchBudget {
    std::int64_t max_nodes = 100'000'000;
    int max_seconds = 60;
    /// When false, candidate images are tried in a shuffled order.
    bool deterministic_order = true;
};

enum class SearchStatus { Exact, BudgetExhausted };

struct LambdaOutcome {
    SearchStatus status = SearchStatus::BudgetExhausted;
    int p = 0;                             // exact value, or best found so far
    std::optional<LabeledPacking> witness; // verifying packing attaining p
    std::int64_t nodes = 0;
};

/// Largest max_labels_of_placement over all k-placements of the standard
/// n-cycle (or n-circuit) with σ_1 = id. Throws CapacityViolation when k·n
/// exceeds the host or when no k-placement exists at all.
LambdaOutcome lambda_exact(int n, int k, bool directed, const SearchBudget& budget);

enum class CounterexampleStatus { Found, NotFoundWithinBudget };

struct CounterexampleOutcome {
    CounterexampleStatus status = CounterexampleStatus::NotFoundWithinBudget;
    std::optional<LabeledPacking> packing;
    std::int64_t nodes = 0;
    int tours_tried = 0;
};

/// Seven classes of three vertices, the base 21-cycle following an Euler tour
/// of K_7 on the classes (one base edge per pair of classes, none inside a
/// class), each σ_j permuting every class. For a base edge between classes c
/// and d the nine images must be exactly the nine c–d edges of K_21, which
/// makes the per-vertex image columns of adjacent vertices orthogonal.
CounterexampleOutcome guided_counterexample_search(const SearchBudget& budget);

} // namespace lpack
