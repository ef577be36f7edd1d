#include "lpack/bounds.hpp"

#include "lpack/constructions.hpp"
#include "lpack/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace lpack {

namespace {

void require_cycle_range(int k, int x)
{
    if (k < 2 || x < 1 || x > 2 * k - 1)
        throw ParameterError("out-of-range: cycle bounds need k >= 2 and 1 <= x <= 2k-1 (k=" + std::to_string(k)
                             + ", x=" + std::to_string(x) + ")");
}

void require_circuit_range(int k, int x)
{
    if (k < 2 || x < 1 || x > k - 1)
        throw ParameterError("out-of-range: circuit bounds need k >= 2 and 1 <= x <= k-1 (k=" + std::to_string(k)
                             + ", x=" + std::to_string(x) + ")");
}

void offer(std::optional<ClosedBound>& best, int bound, const char* name)
{
    if (!best || bound < best->bound)
        best = ClosedBound{bound, name};
}

class PartitionSearch {
public:
    PartitionSearch(int n, int k, Weights w, int min_part)
        : n_(n), k_(k), w_(w), min_part_(min_part)
    {
    }

    bool feasible(int p)
    {
        parts_.clear();
        return descend(p, n_, n_, 0, 0);
    }

    const std::vector<int>& parts() const { return parts_; }

private:
    long long within(long long a) const
    {
        return w_ == Weights::Cycle ? a * (a - 1) / (2LL * k_) : a * (a - 1) / k_;
    }

    long long cross(long long a, long long b) const
    {
        return w_ == Weights::Cycle ? a * b / k_ : 2 * a * b / k_;
    }

    // Without floors the weight of any completion is fixed, so it bounds
    // every completion of the current prefix.
    bool reachable(long long cur, long long rem, long long placed) const
    {
        const long long open = rem * rem - rem + 2 * rem * placed;
        if (w_ == Weights::Cycle)
            return 2LL * k_ * cur + open >= 2LL * n_ * k_;
        return 1LL * k_ * cur + open >= 1LL * n_ * k_;
    }

    bool descend(int slots, int rem, int cap, long long cur, long long placed)
    {
        if (slots == 0)
            return rem == 0 && cur >= n_;
        if (!reachable(cur, rem, placed))
            return false;
        const int hi = std::min(cap, rem - (slots - 1) * min_part_);
        const int lo = std::max(min_part_, (rem + slots - 1) / slots);
        for (int a = hi; a >= lo; --a) {
            long long gain = within(a);
            for (int b : parts_)
                gain += cross(a, b);
            parts_.push_back(a);
            if (descend(slots - 1, rem - a, a, cur + gain, placed + a))
                return true;
            parts_.pop_back();
        }
        return false;
    }

    int n_;
    int k_;
    Weights w_;
    int min_part_;
    std::vector<int> parts_;
};

} // namespace

bool is_prime(int k)
{
    if (k < 2)
        return false;
    for (int d = 2; d * d <= k; ++d)
        if (k % d == 0)
            return false;
    return true;
}

bool is_power_of_two(int k)
{
    return k >= 1 && (k & (k - 1)) == 0;
}

int lambda_exact_large_cycle(int k, int m, int x)
{
    if (k < 2 || m < 2 || x < 0 || x >= 2 * k)
        throw ParameterError("out-of-range: needs k >= 2, m >= 2, 0 <= x < 2k (k=" + std::to_string(k)
                             + ", m=" + std::to_string(m) + ", x=" + std::to_string(x) + ")");
    const int n = 2 * k * m + x;
    if (m == 2 && k > 2 && x % 4 == 2)
        return n / 2 + 1;
    if (x == 2 * k - 1)
        return n / 2 + m + 1;
    return n / 2 + m;
}

int cycle_lower_bound(int k, int x)
{
    require_cycle_range(k, x);
    return (x == 1 && k % 2 == 0) ? 2 : x + 2;
}

std::optional<ClosedBound> cycle_closed_upper(int k, int x, std::optional<int> q)
{
    require_cycle_range(k, x);
    std::optional<ClosedBound> best;
    if (q) {
        if (x == 1 && k % 2 == 0 && *q == 1)
            offer(best, 2, "upper_x=1");
        if (*q == 1 || 2 * *q <= x)
            offer(best, x + 2, "qtheorem");
    }
    const int n = 2 * k + x;
    if (x >= 2 * k - 3 && !(k == 2 && n == 5))
        offer(best, x + 2, "xbetween");
    if (x == 1 && is_power_of_two(k))
        offer(best, 2, "x1_kpowerof2");
    if (x == 1 && is_prime(k))
        offer(best, x + 2, "x1_kprime");
    if (x == 2 && k % 2 == 0)
        offer(best, x + 2, "x2_keven");
    if (1LL * x * x >= 4LL * k - 2)
        offer(best, x + 2, "xtheorem");
    return best;
}

long long partition_weight(const std::vector<int>& parts, int k, Weights w)
{
    long long total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const long long a = parts[i];
        total += w == Weights::Cycle ? a * (a - 1) / (2LL * k) : a * (a - 1) / k;
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            const long long b = parts[j];
            total += w == Weights::Cycle ? a * b / k : 2 * a * b / k;
        }
    }
    return total;
}

PartitionBoundResult partition_bound(int n, int k, Weights w, int min_part)
{
    if (n < 3 || k < 1 || min_part < 1)
        throw ParameterError("out-of-range: partition bound needs n >= 3, k >= 1, min_part >= 1");
    PartitionSearch search(n, k, w, min_part);
    for (int p = n / min_part; p >= 1; --p)
        if (search.feasible(p))
            return {p, search.parts()};
    throw ParameterError("infeasible: no partition of " + std::to_string(n) + " satisfies the inequality");
}

int circuit_upper_lemma(int n, int k)
{
    if (k < 1 || n <= k || !circuit_placement_exists(k, n))
        throw ParameterError("out-of-range: needs n > k and (n-k, n) not in {(1,4), (1,6)} (k=" + std::to_string(k)
                             + ", n=" + std::to_string(n) + ")");
    return n / 2 + ((n + 1) / 2) / k;
}

std::optional<ClosedBound> circuit_closed_upper(int k, int x, std::optional<int> q)
{
    require_circuit_range(k, x);
    std::optional<ClosedBound> best;
    if (q && *q <= x)
        offer(best, x + 2, "qtheorem_circuits");
    if (1LL * x * x >= k - 1LL)
        offer(best, x + 2, "xtheorem_circuits");
    return best;
}

std::vector<Table1Row> table1(int k_max, unsigned threads)
{
    if (k_max < 2)
        throw ParameterError("out-of-range: table needs k_max >= 2");
    std::vector<std::pair<int, int>> open;
    for (int k = 2; k <= k_max; ++k)
        for (int x = 1; x <= 2 * k - 1; ++x)
            if (!cycle_closed_upper(k, x))
                open.emplace_back(k, x);

    std::vector<std::optional<Table1Row>> slots(open.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < open.size(); i = next++) {
            const auto [k, x] = open[i];
            const int n = 2 * k + x;
            const int min_part = std::max(2, x / 2 + 1);
            if (n / min_part < x + 3)
                continue;
            const PartitionBoundResult r = partition_bound(n, k, Weights::Cycle, min_part);
            if (r.p_max >= x + 3)
                slots[i] = Table1Row{k, x, n, r.p_max, r.witness};
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, open.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    std::vector<Table1Row> rows;
    for (auto& s : slots)
        if (s)
            rows.push_back(std::move(*s));
    std::sort(rows.begin(), rows.end(), [](const Table1Row& a, const Table1Row& b) {
        return std::pair(a.n, a.k) < std::pair(b.n, b.k);
    });
    return rows;
}

std::optional<ClosedBound> lambda_known(int n, int k, bool directed)
{
    if (k < 1 || n < (directed ? 2 : 3))
        return std::nullopt;
    if (directed) {
        if (n >= 2 * k && circuit_placement_exists(k, n))
            return ClosedBound{circuit_upper_lemma(n, k), "large_circuit"};
        return std::nullopt;
    }
    if (k == 1)
        return ClosedBound{n, "single_copy"};
    if (n <= 2 * k)
        return std::nullopt;
    const int m = n / (2 * k);
    const int x = n % (2 * k);
    if (m >= 2)
        return ClosedBound{lambda_exact_large_cycle(k, m, x), "large_cycle"};
    const auto upper = cycle_closed_upper(k, x);
    if (upper && upper->bound == cycle_lower_bound(k, x))
        return upper;
    return std::nullopt;
}

BoundReport cycle_bound_report(int k, int x, int m)
{
    BoundReport r;
    r.k = k;
    r.x = x;
    r.m = m;
    if (m >= 2) {
        r.n = 2 * k * m + x;
        r.lower = lambda_exact_large_cycle(k, m, x);
        r.lower_provenance = "large_cycle";
        r.upper_closed = ClosedBound{r.lower, "large_cycle"};
        r.exact = r.upper_closed;
        return r;
    }
    if (m != 1)
        throw ParameterError("out-of-range: m must be >= 1");
    r.n = 2 * k + x;
    r.lower = cycle_lower_bound(k, x);
    r.lower_provenance = "construction";
    r.upper_closed = cycle_closed_upper(k, x);
    const PartitionBoundResult pb = partition_bound(r.n, k, Weights::Cycle);
    r.upper_partition = pb.p_max;
    r.partition_witness = pb.witness;
    r.exact = lambda_known(r.n, k, false);
    return r;
}

BoundReport circuit_bound_report(int k, int x)
{
    if (k < 1 || x < 1)
        throw ParameterError("out-of-range: circuit bounds need k >= 1 and x >= 1");
    BoundReport r;
    r.k = k;
    r.x = x;
    r.n = k + x;
    r.directed = true;
    if (!circuit_placement_exists(k, r.n))
        throw ExcludedInstance("excluded-instance: (x, n) = (1, " + std::to_string(r.n) + ") has no k-placement");
    if (r.n >= 2 * k) {
        r.m = r.n / (2 * k);
        r.exact = lambda_known(r.n, k, true);
        r.lower = r.exact->bound;
        r.lower_provenance = "large_circuit";
        r.upper_closed = r.exact;
    } else {
        r.lower = k % 2 == 0 ? x + 1 : (x >= 2 ? x : 1);
        r.lower_provenance = (k % 2 == 1 && x == 1) ? "placement_exists" : "construction";
        r.upper_closed = circuit_closed_upper(k, x);
    }
    if (r.n >= 3) {
        const PartitionBoundResult pb = partition_bound(r.n, k, Weights::Circuit);
        r.upper_partition = pb.p_max;
        r.partition_witness = pb.witness;
    }
    return r;
}

} // namespace lpack
