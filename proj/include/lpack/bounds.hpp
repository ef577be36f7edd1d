#pragma once

// Closed-form values and bounds on λ^k for cycles (n = 2km + x) and circuits,
// the partition-counting upper bound, and the unresolved-instance table.

#include <optional>
#include <string>
#include <vector>

namespace lpack {

/// A bound together with the name of the result that produced it.
struct ClosedBound {
    int bound = 0;
    std::string provenance;

    bool operator==(const ClosedBound&) const = default;
};

enum class Weights { Cycle, Circuit };

struct PartitionBoundResult {
    int p_max = 0;
    std::vector<int> witness; // non-increasing, sums to n, p_max parts
};

struct BoundReport {
    int n = 0;
    int k = 0;
    int x = 0;
    int m = 0;
    bool directed = false;
    int lower = 0;
    std::string lower_provenance;
    std::optional<ClosedBound> upper_closed;
    std::optional<int> upper_partition;
    std::vector<int> partition_witness;
    std::optional<ClosedBound> exact;
};

bool is_prime(int k);
bool is_power_of_two(int k);

/// λ^k(C_n) for n = 2km + x with k, m >= 2 and 0 <= x < 2k.
int lambda_exact_large_cycle(int k, int m, int x);

/// 2 if x = 1 and k is even, x + 2 otherwise (k >= 2, 1 <= x <= 2k-1).
int cycle_lower_bound(int k, int x);

/// Smallest applicable closed-form upper bound on λ^k(C_{2k+x}); ties go to
/// the result listed first. Results about a given labeling (qtheorem,
/// upper_x=1) only fire when its smallest class size q is supplied.
std::optional<ClosedBound> cycle_closed_upper(int k, int x, std::optional<int> q = std::nullopt);

/// Left side of the edge-counting inequality for a partition of n.
long long partition_weight(const std::vector<int>& parts, int k, Weights w);

/// Largest p such that some partition of n into p parts, each of size at
/// least min_part, has partition_weight >= n. Throws ParameterError if none.
PartitionBoundResult partition_bound(int n, int k, Weights w, int min_part = 1);

/// ⌊n/2⌋ + ⌊⌈n/2⌉/k⌋.
int circuit_upper_lemma(int n, int k);

/// x + 2 when x² >= k - 1, or when q <= x is supplied (k >= 2, 1 <= x <= k-1).
std::optional<ClosedBound> circuit_closed_upper(int k, int x, std::optional<int> q = std::nullopt);

struct Table1Row {
    int k = 0;
    int x = 0;
    int n = 0;
    int p_max = 0;
    std::vector<int> witness;

    bool operator==(const Table1Row&) const = default;
};

/// Instances n = 2k + x, k <= k_max, not settled by any instance-level upper
/// bound, whose partition bound still allows x + 3 labels. Labelings with a
/// class of size 1 or at most x/2 are already capped at x + 2, so the
/// partition search only considers parts of size >= max(2, ⌊x/2⌋ + 1).
/// Sorted by (n, k). threads = 0 uses the hardware concurrency.
std::vector<Table1Row> table1(int k_max, unsigned threads = 0);

/// Exact λ^k when a known result settles the instance.
std::optional<ClosedBound> lambda_known(int n, int k, bool directed);

/// Everything known about the cycle of order 2km + x (m = 1 when x >= 1 is
/// the open range). The partition bound is only computed for m = 1.
BoundReport cycle_bound_report(int k, int x, int m = 1);

/// Everything known about the circuit of order k + x.
BoundReport circuit_bound_report(int k, int x);

} // namespace lpack
