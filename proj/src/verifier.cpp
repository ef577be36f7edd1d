#include "lpack/verifier.hpp"

#include "lpack/errors.hpp"
#include "lpack/union_find.hpp"

#include <algorithm>

namespace lpack {

std::vector<std::string> VerificationReport::failures() const
{
    std::vector<std::string> out;
    if (!base_shape)
        out.emplace_back("base_shape");
    if (!bijections)
        out.emplace_back("bijections");
    if (!disjointness)
        out.emplace_back("disjointness");
    if (!label_preservation)
        out.emplace_back("label_preservation");
    if (!capacity)
        out.emplace_back("capacity");
    if (!label_count)
        out.emplace_back("label_count");
    return out;
}

VerificationReport verify(const LabeledPacking& packing)
{
    VerificationReport report;
    const int n = packing.n;
    const int k = packing.k();

    if (packing.base.order() == n && packing.base.directed() == packing.directed)
        report.base_shape = packing.directed ? is_single_circuit(packing.base, n)
                                             : is_single_cycle(packing.base, n);

    report.bijections = k >= 1 && std::all_of(packing.placements.begin(), packing.placements.end(),
                                              [n](const Permutation& p) { return p.size() == n && p.is_bijection(); });

    // Images are only well defined for bijections on a base of the right order.
    if (report.bijections && packing.base.order() == n) {
        LinkSet used(n, packing.directed);
        std::size_t total = 0;
        const auto base_links = packing.base.links();
        for (const Permutation& p : packing.placements)
            for (const Link& l : base_links) {
                used.insert({p(l.u), p(l.v)});
                ++total;
            }
        report.disjointness = used.size() == total
            && total == static_cast<std::size_t>(k) * static_cast<std::size_t>(n);
    }

    const Labeling& f = packing.labeling;
    if (report.bijections && f.size() == n) {
        const Permutation& first = packing.placements.front();
        report.label_preservation = true;
        for (Vertex v = 0; v < n && report.label_preservation; ++v) {
            const Label expected = f[first(v)];
            for (const Permutation& p : packing.placements)
                if (f[p(v)] != expected) {
                    report.label_preservation = false;
                    break;
                }
        }
    }

    const long long nn = n;
    const long long host = packing.directed ? nn * (nn - 1) : nn * (nn - 1) / 2;
    report.capacity = n >= 1 && static_cast<long long>(k) * nn <= host;

    report.label_count = f.size() == n && f.label_count() == f.distinct_count()
        && std::all_of(f.labels().begin(), f.labels().end(),
                       [&f](Label l) { return l >= 0 && l < f.label_count(); });
    return report;
}

OrbitLabeling max_labels_of_placement(const PlacementSet& placements, int n)
{
    for (const Permutation& p : placements)
        if (p.size() != n || !p.is_bijection())
            throw ParameterError("max_labels_of_placement needs bijections on [0, n)");

    UnionFind uf(n);
    if (!placements.empty()) {
        const Permutation& first = placements.front();
        for (Vertex v = 0; v < n; ++v)
            for (std::size_t j = 1; j < placements.size(); ++j)
                uf.unite(first(v), placements[j](v));
    }
    std::vector<Label> root_label(static_cast<std::size_t>(n), -1);
    std::vector<Label> labels(static_cast<std::size_t>(n));
    int next = 0;
    for (Vertex v = 0; v < n; ++v) {
        auto& slot = root_label[static_cast<std::size_t>(uf.find(v))];
        if (slot < 0)
            slot = next++;
        labels[static_cast<std::size_t>(v)] = slot;
    }
    return {next, Labeling(std::move(labels), next)};
}

} // namespace lpack
