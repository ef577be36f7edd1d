#include "lpack/io.hpp"

#include "lpack/errors.hpp"

#include <sstream>

namespace lpack {

namespace {

Json closed_bound_json(const std::optional<ClosedBound>& b)
{
    if (!b)
        return nullptr;
    return Json{{"bound", b->bound}, {"provenance", b->provenance}};
}

const Json& field(const Json& doc, const char* name)
{
    auto it = doc.find(name);
    if (it == doc.end())
        throw FormatError(std::string("certificate: missing field \"") + name + "\"");
    return *it;
}

int integer(const Json& value, const char* what)
{
    if (!value.is_number_integer())
        throw FormatError(std::string("certificate: ") + what + " must be an integer");
    const auto v = value.get<long long>();
    if (v < -(1LL << 30) || v > (1LL << 30))
        throw FormatError(std::string("certificate: ") + what + " out of range");
    return static_cast<int>(v);
}

const Json& array(const Json& value, const char* what)
{
    if (!value.is_array())
        throw FormatError(std::string("certificate: ") + what + " must be an array");
    return value;
}

} // namespace

Json certificate_json(const LabeledPacking& packing)
{
    Json base = Json::array();
    for (const Link& l : packing.base.links())
        base.push_back({l.u, l.v});
    Json perms = Json::array();
    for (const Permutation& p : packing.placements)
        perms.push_back(Json(std::vector<Vertex>(p.images().begin(), p.images().end())));
    Json doc;
    doc["n"] = packing.n;
    doc["k"] = packing.k();
    doc["directed"] = packing.directed;
    doc["base"] = std::move(base);
    doc["labels"] = std::vector<Label>(packing.labeling.labels().begin(), packing.labeling.labels().end());
    doc["perms"] = std::move(perms);
    return doc;
}

std::string write_certificate(const LabeledPacking& packing)
{
    return certificate_json(packing).dump() + "\n";
}

LabeledPacking read_certificate(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("certificate: ") + e.what());
    }
    if (!doc.is_object())
        throw FormatError("certificate: top level must be an object");

    LabeledPacking out;
    out.n = integer(field(doc, "n"), "n");
    if (out.n < 1)
        throw FormatError("certificate: n must be positive");
    const int k = integer(field(doc, "k"), "k");
    const Json& directed = field(doc, "directed");
    if (!directed.is_boolean())
        throw FormatError("certificate: directed must be a boolean");
    out.directed = directed.get<bool>();

    out.base = LinkSet(out.n, out.directed);
    for (const Json& pair : array(field(doc, "base"), "base")) {
        if (!pair.is_array() || pair.size() != 2)
            throw FormatError("certificate: base entries must be [u, v] pairs");
        const Link l{integer(pair[0], "base vertex"), integer(pair[1], "base vertex")};
        try {
            out.base.insert(l);
        } catch (const ParameterError& e) {
            throw FormatError(std::string("certificate: base: ") + e.what());
        }
    }

    std::vector<Label> labels;
    for (const Json& l : array(field(doc, "labels"), "labels")) {
        labels.push_back(integer(l, "label"));
        if (labels.back() < 0)
            throw FormatError("certificate: labels must be non-negative");
    }
    if (static_cast<int>(labels.size()) != out.n)
        throw FormatError("certificate: expected " + std::to_string(out.n) + " labels");
    out.labeling = Labeling(std::move(labels));

    for (const Json& perm : array(field(doc, "perms"), "perms")) {
        std::vector<Vertex> image;
        for (const Json& v : array(perm, "perm"))
            image.push_back(integer(v, "perm entry"));
        if (static_cast<int>(image.size()) != out.n)
            throw FormatError("certificate: every perm needs " + std::to_string(out.n) + " entries");
        out.placements.emplace_back(std::move(image));
    }
    if (out.k() != k)
        throw FormatError("certificate: k = " + std::to_string(k) + " but " + std::to_string(out.k()) + " perms");
    return out;
}

Json report_json(const VerificationReport& report)
{
    Json doc;
    doc["valid"] = report.valid();
    doc["base_shape"] = report.base_shape;
    doc["bijections"] = report.bijections;
    doc["disjointness"] = report.disjointness;
    doc["label_preservation"] = report.label_preservation;
    doc["capacity"] = report.capacity;
    doc["label_count"] = report.label_count;
    return doc;
}

Json bound_report_json(const BoundReport& report)
{
    Json doc;
    doc["kind"] = report.directed ? "circuit" : "cycle";
    doc["n"] = report.n;
    doc["k"] = report.k;
    doc["x"] = report.x;
    doc["m"] = report.m;
    doc["lower"] = report.lower;
    doc["lower_provenance"] = report.lower_provenance;
    doc["upper_closed"] = closed_bound_json(report.upper_closed);
    doc["upper_partition"] = report.upper_partition ? Json(*report.upper_partition) : Json(nullptr);
    doc["partition_witness"] = report.partition_witness;
    doc["exact"] = closed_bound_json(report.exact);
    return doc;
}

std::string table_csv(const std::vector<Table1Row>& rows)
{
    std::ostringstream out;
    out << "k,x,n,p_max\n";
    for (const Table1Row& r : rows)
        out << r.k << ',' << r.x << ',' << r.n << ',' << r.p_max << '\n';
    return out.str();
}

Json table_json(const std::vector<Table1Row>& rows)
{
    Json list = Json::array();
    for (const Table1Row& r : rows)
        list.push_back(Json{{"k", r.k}, {"x", r.x}, {"n", r.n}, {"p_max", r.p_max}, {"witness", r.witness}});
    return Json{{"rows", std::move(list)}};
}

std::string to_dot(const LabeledPacking& packing)
{
    const char* kind = packing.directed ? "digraph" : "graph";
    const char* link = packing.directed ? " -> " : " -- ";
    const auto base = packing.base.links();
    for (const Permutation& p : packing.placements)
        if (p.size() != packing.n || !p.is_bijection())
            throw ParameterError("export needs every perm to be a bijection on [0, n)");
    std::ostringstream out;
    for (int j = 0; j < packing.k(); ++j) {
        const Permutation& p = packing.placements[static_cast<std::size_t>(j)];
        out << kind << " copy" << j + 1 << " {\n";
        for (Vertex v = 0; v < packing.n; ++v)
            out << "  " << v << " [label=\"" << v << "\", vlabel=" << packing.labeling[v] << "];\n";
        for (const Link& l : base)
            out << "  " << p(l.u) << link << p(l.v) << ";\n";
        out << "}\n";
    }
    return out.str();
}

} // namespace lpack
