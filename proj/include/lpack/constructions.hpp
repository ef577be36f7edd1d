#pragma once

// Explicit labeled packings: the five cycle cases with n = 2k + x, the circuit
// constructions for n >= 2k and k + 1 <= n <= 2k - 1, and two unlabeled
// directed packings (2 copies of the 4-circuit, 4 copies of the 6-circuit).
//
// Every construction builds its first copy from a vertex sequence, derives the
// placements from a closed-form shift, and inserts extra fixed points by
// subdividing the lexicographically smallest eligible edges of that copy.

#include "lpack/model.hpp"

#include <string_view>
#include <vector>

namespace lpack {

enum class CycleCase {
    OddSmallX,  // k odd, 1 <= x <= k-1
    OddLargeX,  // k odd, k <= x <= 2k-1
    EvenX1,     // k even, x = 1
    EvenSmallX, // k even, 2 <= x <= k-1
    EvenLargeX, // k even, k <= x <= 2k-1
};

std::string_view to_string(CycleCase c);

/// Throws ParameterError unless k >= 2 and 1 <= x <= 2k-1.
CycleCase cycle_case(int k, int x);

/// Labeled packing of k copies of C_{2k+x} with 2 labels when x = 1 and k is
/// even, x + 2 labels otherwise. σ_1 is the identity.
LabeledPacking construct_cycle_packing(int k, int x);

// Closed forms driving the k even, 2 <= x <= k-1 construction. All results are
// Euclidean residues mod 2k.

/// Zig-zag of alternating a/b vertices; α(k, k-1..2k-1) is the a–b part of the
/// first copy.
int alpha(int k, int i);
/// Non-fixed neighbours of the two fixed points: β(k, 1) next to v_2k,
/// β(k, 0) next to v_{2k+1}.
int beta(int k, int i);
/// 2, -2, 4, -4, ...: the a–a path after v_0.
int gamma(int k, int i);

/// k copies of the n-circuit for n >= 2k; ⌊n/2⌋ + ⌊⌈n/2⌉/k⌋ labels.
LabeledPacking construct_circuit_packing_large(int k, int n);

/// k even, 1 <= x <= k-1: x + 1 labels on the (k+x)-circuit.
LabeledPacking construct_circuit_packing_small_even(int k, int x);

/// k odd, 2 <= x <= k-1: the even construction for k+1 copies minus its last copy; x labels.
LabeledPacking construct_circuit_packing_small_odd(int k, int x);

/// The two unlabeled (p = 1) packings: 2 copies of the 4-circuit and 4 copies
/// of the 6-circuit.
std::vector<LabeledPacking> builtin_directed_exceptions();

/// True iff n >= k + 1 and (n - k, n) is not (1, 4) or (1, 6).
bool circuit_placement_exists(int k, int n);

} // namespace lpack
