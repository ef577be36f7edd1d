#include "lpack/constructions.hpp"

#include "lpack/errors.hpp"
#include "lpack/verifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace lpack {

namespace {

constexpr int kFixed = -1;

long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

long long ceil_div(long long a, long long b)
{
    return -floor_div(-a, b);
}

int sign_pow(long long e) // (-1)^e
{
    return euclid_mod(e, 2) == 0 ? 1 : -1;
}

std::string range_message(int k, int x)
{
    return "out-of-range: (k=" + std::to_string(k) + ", x=" + std::to_string(x) + ")";
}

// First copy as a cyclic vertex sequence over [0, n0) plus, per vertex, either
// kFixed or a class id 0..C-1. Moving vertices are sent by shift(j, v) in
// copy j (1-based); fixed vertices stay put.
struct Blueprint {
    int k = 0;
    bool directed = false;
    std::vector<Vertex> sequence;
    std::vector<int> cls;
    std::function<Vertex(int, Vertex)> shift;
    int subdivisions = 0;
};

bool eligible(const Blueprint& bp, Link l)
{
    const int cu = bp.cls[static_cast<std::size_t>(l.u)];
    const int cv = bp.cls[static_cast<std::size_t>(l.v)];
    if (cu == kFixed || cv == kFixed)
        return false;
    // Undirected: the new fixed point's two edges only stay disjoint across
    // copies when its neighbours carry different labels.
    return bp.directed || cu != cv;
}

LabeledPacking realise(const Blueprint& bp)
{
    const int n0 = static_cast<int>(bp.sequence.size());
    const int n = n0 + bp.subdivisions;

    // Pick the lexicographically smallest eligible links of the first copy.
    const LinkSet first = links_from_sequence(bp.sequence, n0, bp.directed);
    std::map<Link, Vertex> inserted;
    for (const Link& l : first.links()) {
        if (static_cast<int>(inserted.size()) == bp.subdivisions)
            break;
        if (eligible(bp, l))
            inserted.emplace(l, n0 + static_cast<int>(inserted.size()));
    }
    if (static_cast<int>(inserted.size()) != bp.subdivisions)
        throw std::logic_error("not enough eligible links to subdivide");

    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < bp.sequence.size(); ++i) {
        const Vertex a = bp.sequence[i];
        const Vertex b = bp.sequence[(i + 1) % bp.sequence.size()];
        order.push_back(a);
        if (auto it = inserted.find(first.canonical({a, b})); it != inserted.end())
            order.push_back(it->second);
    }

    std::vector<int> cls = bp.cls;
    cls.resize(static_cast<std::size_t>(n), kFixed);

    // Fixed points first in vertex order, then the classes in id order.
    int fixed_count = 0;
    for (int c : cls)
        if (c == kFixed)
            ++fixed_count;
    std::vector<Label> labels(static_cast<std::size_t>(n));
    int next_fixed = 0;
    int classes = 0;
    for (Vertex v = 0; v < n; ++v) {
        const int c = cls[static_cast<std::size_t>(v)];
        if (c == kFixed) {
            labels[static_cast<std::size_t>(v)] = next_fixed++;
        } else {
            labels[static_cast<std::size_t>(v)] = fixed_count + c;
            classes = std::max(classes, c + 1);
        }
    }

    PlacementSet placements;
    placements.reserve(static_cast<std::size_t>(bp.k));
    for (int j = 1; j <= bp.k; ++j) {
        std::vector<Vertex> image(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            image[static_cast<std::size_t>(v)] = cls[static_cast<std::size_t>(v)] == kFixed ? v : bp.shift(j, v);
        placements.emplace_back(std::move(image));
    }

    LabeledPacking out;
    out.n = n;
    out.directed = bp.directed;
    out.base = links_from_sequence(order, n, bp.directed);
    out.labeling = Labeling(std::move(labels), fixed_count + classes);
    out.placements = std::move(placements);
    return out;
}

// v_0, v_{2k-1}, v_1, v_{2k-2}, ..., v_{k-1}, v_k: Walecki's zig-zag on 2k vertices.
std::vector<Vertex> zigzag(int m)
{
    std::vector<Vertex> seq;
    for (int i = 0; i < m / 2; ++i) {
        seq.push_back(i);
        seq.push_back(m - 1 - i);
    }
    return seq;
}

Blueprint odd_small_x(int k, int x)
{
    Blueprint bp;
    bp.k = k;
    bp.sequence = zigzag(2 * k);
    bp.sequence.push_back(2 * k);
    bp.cls.assign(static_cast<std::size_t>(2 * k + 1), kFixed);
    for (Vertex v = 0; v < 2 * k; ++v)
        bp.cls[static_cast<std::size_t>(v)] = v % 2;
    bp.shift = [k](int j, Vertex v) { return static_cast<Vertex>(euclid_mod(v + 2 * (j - 1), 2 * k)); };
    bp.subdivisions = x - 1;
    return bp;
}

Blueprint odd_large_x(int k, int x)
{
    Blueprint bp;
    bp.k = k;
    const int m = 3 * k;
    for (Vertex v = 0; v < m; ++v) {
        bp.sequence.push_back(v);
        bp.cls.push_back(v % 3 == 0 ? kFixed : v % 3 - 1);
    }
    // a-vertices (1 mod 3) rotate forwards, b-vertices (2 mod 3) backwards.
    bp.shift = [m](int j, Vertex v) {
        const int step = 3 * (j - 1);
        return static_cast<Vertex>(euclid_mod(v % 3 == 1 ? v + step : v - step, m));
    };
    bp.subdivisions = x - k;
    return bp;
}

Blueprint even_x1(int k)
{
    Blueprint bp;
    bp.k = k;
    bp.sequence = zigzag(2 * k);
    bp.sequence.push_back(2 * k);
    bp.cls.assign(static_cast<std::size_t>(2 * k), 0);
    bp.cls.push_back(kFixed);
    bp.shift = [k](int j, Vertex v) { return static_cast<Vertex>(euclid_mod(v + (j - 1), 2 * k)); };
    return bp;
}

std::vector<int> parity_classes(int k, int n0)
{
    std::vector<int> cls(static_cast<std::size_t>(n0), kFixed);
    for (Vertex v = 0; v < 2 * k; ++v)
        cls[static_cast<std::size_t>(v)] = v % 2;
    return cls;
}

Blueprint even_small_x(int k, int x)
{
    Blueprint bp;
    bp.k = k;
    const int m = 2 * k;
    // a-path 0, γ(0), ..., γ(k/2-2); b-path is the same path shifted by (-1)^{k/2}.
    std::vector<Vertex> a_path{0};
    for (int i = 0; i <= k / 2 - 2; ++i)
        a_path.push_back(gamma(k, i));
    const int offset = sign_pow(k / 2);
    std::vector<Vertex> b_path;
    for (Vertex v : a_path)
        b_path.push_back(static_cast<Vertex>(euclid_mod(v + offset, m)));
    if (b_path.back() != alpha(k, k - 1))
        throw std::logic_error("b-path does not end where the a-b zig-zag starts");

    bp.sequence = a_path;
    bp.sequence.push_back(m);
    bp.sequence.insert(bp.sequence.end(), b_path.begin(), b_path.end());
    for (int i = k; i <= m - 1; ++i)
        bp.sequence.push_back(alpha(k, i));
    bp.sequence.push_back(m + 1);
    bp.cls = parity_classes(k, m + 2);
    bp.shift = [m](int j, Vertex v) { return static_cast<Vertex>(euclid_mod(v + 2 * (j - 1), m)); };
    bp.subdivisions = x - 2;
    return bp;
}

Blueprint even_large_x(int k, int x)
{
    Blueprint bp;
    bp.k = k;
    const int m = 2 * k;
    for (int i = 0; i < k; ++i) {
        bp.sequence.push_back(m + i);
        bp.sequence.push_back(i);
    }
    for (int t = 0; t < k / 2; ++t) {
        bp.sequence.push_back(m - 2 - 2 * t);
        bp.sequence.push_back(k + 1 + 2 * t);
    }
    bp.cls = parity_classes(k, 3 * k);
    bp.shift = [m](int j, Vertex v) { return static_cast<Vertex>(euclid_mod(v + 2 * (j - 1), m)); };
    bp.subdivisions = x - k;
    return bp;
}

LabeledPacking from_copies(int n, const std::vector<std::vector<Vertex>>& copies)
{
    LabeledPacking out;
    out.n = n;
    out.directed = true;
    out.base = circuit_arcs(n);
    out.labeling = Labeling::uniform(n);
    for (const auto& c : copies)
        out.placements.emplace_back(c);
    return out;
}

} // namespace

std::string_view to_string(CycleCase c)
{
    switch (c) {
    case CycleCase::OddSmallX:
        return "OddSmallX";
    case CycleCase::OddLargeX:
        return "OddLargeX";
    case CycleCase::EvenX1:
        return "EvenX1";
    case CycleCase::EvenSmallX:
        return "EvenSmallX";
    case CycleCase::EvenLargeX:
        return "EvenLargeX";
    }
    return "unknown";
}

CycleCase cycle_case(int k, int x)
{
    if (k < 2 || x < 1 || x > 2 * k - 1)
        throw ParameterError(range_message(k, x) + " needs k >= 2 and 1 <= x <= 2k-1");
    if (k % 2 == 1)
        return x <= k - 1 ? CycleCase::OddSmallX : CycleCase::OddLargeX;
    if (x == 1)
        return CycleCase::EvenX1;
    return x <= k - 1 ? CycleCase::EvenSmallX : CycleCase::EvenLargeX;
}

LabeledPacking construct_cycle_packing(int k, int x)
{
    switch (cycle_case(k, x)) {
    case CycleCase::OddSmallX:
        return realise(odd_small_x(k, x));
    case CycleCase::OddLargeX:
        return realise(odd_large_x(k, x));
    case CycleCase::EvenX1:
        return realise(even_x1(k));
    case CycleCase::EvenSmallX:
        return realise(even_small_x(k, x));
    case CycleCase::EvenLargeX:
        return realise(even_large_x(k, x));
    }
    throw std::logic_error("unreachable");
}

int alpha(int k, int i)
{
    if (k < 4 || k % 2 != 0)
        throw ParameterError("alpha needs an even k >= 4");
    const long long half = k / 2;
    const int even_i = i % 2 == 0 ? 1 : 0; // ((-1)^i + 1) / 2
    const long long inner = 1 + 2 * ceil_div(half - 1, 2) + sign_pow(even_i) * 2 * floor_div(i - k + 1, 2);
    const long long value = sign_pow(half) * inner + even_i * (k + sign_pow(half - 1));
    return static_cast<int>(euclid_mod(value, 2LL * k));
}

int beta(int k, int i)
{
    if (k < 2 || k % 2 != 0)
        throw ParameterError("beta needs an even k");
    const int indicator = (sign_pow(k / 2 + i) + 1) / 2;
    return static_cast<int>(euclid_mod(k / 2 + indicator * (k + 1), 2LL * k));
}

int gamma(int k, int i)
{
    if (k < 2 || k % 2 != 0)
        throw ParameterError("gamma needs an even k");
    return static_cast<int>(euclid_mod(2LL * sign_pow(i) * ceil_div(i + 1, 2), 2LL * k));
}

bool circuit_placement_exists(int k, int n)
{
    if (k < 1 || n < k + 1)
        return false;
    const int x = n - k;
    return !(x == 1 && (n == 4 || n == 6));
}

LabeledPacking construct_circuit_packing_large(int k, int n)
{
    if (k < 1 || n < 2 * k || n < 2)
        throw ParameterError("out-of-range: large circuit construction needs k >= 1 and n >= 2k (k="
                             + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    if (!circuit_placement_exists(k, n))
        throw ExcludedInstance("excluded-instance: (x, n) = (1, " + std::to_string(n) + ") has no k-placement");

    const int half_floor = n / 2;
    const int half_ceil = (n + 1) / 2;
    const int groups = half_ceil / k;

    Blueprint bp;
    bp.k = k;
    bp.directed = true;
    bp.cls.assign(static_cast<std::size_t>(n), kFixed);
    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(groups));
    for (Vertex i = 0; i < n; ++i) {
        bp.sequence.push_back(i);
        if (i % 2 == 0 && i <= 2 * (half_floor - 1))
            continue;
        // Blocks of k odd vertices; the remainder (and v_{n-1} when n is odd)
        // joins the last full block.
        const int c = std::min(i / (2 * k), groups - 1);
        bp.cls[static_cast<std::size_t>(i)] = c;
        members[static_cast<std::size_t>(c)].push_back(i);
    }
    std::vector<int> position(static_cast<std::size_t>(n), 0);
    for (const auto& group : members)
        for (std::size_t p = 0; p < group.size(); ++p)
            position[static_cast<std::size_t>(group[p])] = static_cast<int>(p);

    // σ_j(l_i) = l_{i + j - 1 mod L} inside each class.
    bp.shift = [members, position, cls = bp.cls](int j, Vertex v) {
        const auto& group = members[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])];
        const long long len = static_cast<long long>(group.size());
        return group[static_cast<std::size_t>(euclid_mod(position[static_cast<std::size_t>(v)] + j - 1, len))];
    };
    return realise(bp);
}

LabeledPacking construct_circuit_packing_small_even(int k, int x)
{
    if (k < 2 || k % 2 != 0 || x < 1 || x > k - 1)
        throw ParameterError(range_message(k, x) + " needs k even >= 2 and 1 <= x <= k-1");
    if (!circuit_placement_exists(k, k + x))
        throw ExcludedInstance("excluded-instance: (x, n) = (1, " + std::to_string(k + x) + ") has no k-placement");
    Blueprint bp;
    bp.k = k;
    bp.directed = true;
    bp.sequence = zigzag(k);
    bp.sequence.push_back(k);
    bp.cls.assign(static_cast<std::size_t>(k), 0);
    bp.cls.push_back(kFixed);
    bp.shift = [k](int j, Vertex v) { return static_cast<Vertex>(euclid_mod(v + (j - 1), k)); };
    bp.subdivisions = x - 1;
    return realise(bp);
}

LabeledPacking construct_circuit_packing_small_odd(int k, int x)
{
    if (k < 3 || k % 2 != 1 || x < 2 || x > k - 1)
        throw ParameterError(range_message(k, x) + " needs k odd >= 3 and 2 <= x <= k-1");
    LabeledPacking out = construct_circuit_packing_small_even(k + 1, x - 1);
    out.placements.pop_back();
    if (!verify(out).valid())
        throw std::logic_error("dropping a copy broke the even construction");
    return out;
}

std::vector<LabeledPacking> builtin_directed_exceptions()
{
    return {
        from_copies(4, {{0, 1, 2, 3}, {0, 3, 2, 1}}),
        from_copies(6, {{0, 1, 2, 3, 4, 5}, {0, 5, 4, 3, 2, 1}, {0, 2, 4, 1, 5, 3}, {0, 3, 5, 1, 4, 2}}),
    };
}

} // namespace lpack
