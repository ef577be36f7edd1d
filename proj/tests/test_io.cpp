#include "lpack/constructions.hpp"
#include "lpack/errors.hpp"
#include "lpack/io.hpp"

#include <doctest.h>

using namespace lpack;

TEST_SUITE("io") {

TEST_CASE("certificate round trip")
{
    for (const LabeledPacking& p : {construct_cycle_packing(3, 2), construct_circuit_packing_large(3, 7)}) {
        const std::string text = write_certificate(p);
        const LabeledPacking q = read_certificate(text);
        CHECK(q.n == p.n);
        CHECK(q.directed == p.directed);
        CHECK(q.base == p.base);
        CHECK(q.labeling == p.labeling);
        CHECK(q.placements == p.placements);
        CHECK(write_certificate(q) == text);
    }
}

TEST_CASE("certificate field order")
{
    const std::string text = write_certificate(construct_cycle_packing(2, 1));
    const auto at = [&](const char* key) { return text.find(std::string("\"") + key + "\""); };
    CHECK(at("n") < at("k"));
    CHECK(at("k") < at("directed"));
    CHECK(at("directed") < at("base"));
    CHECK(at("base") < at("labels"));
    CHECK(at("labels") < at("perms"));
    CHECK(text.back() == '\n');
}

TEST_CASE("malformed certificates")
{
    const std::string good = write_certificate(construct_cycle_packing(2, 1));
    CHECK_THROWS_AS(read_certificate(good.substr(0, good.size() / 2)), FormatError);
    CHECK_THROWS_AS(read_certificate("[]"), FormatError);
    CHECK_THROWS_AS(read_certificate(R"({"n":3})"), FormatError);
    const char* base = R"({"n":3,"k":1,"directed":false,"base":[[0,1],[1,2],[2,0]],"labels":[0,1,2],"perms":[[0,1,2]]})";
    CHECK_NOTHROW(read_certificate(base));
    CHECK_THROWS_AS(read_certificate(R"({"n":3,"k":2,"directed":false,"base":[[0,1],[1,2],[2,0]],"labels":[0,1,2],"perms":[[0,1,2]]})"),
                    FormatError);
    CHECK_THROWS_AS(read_certificate(R"({"n":3,"k":1,"directed":0,"base":[[0,1],[1,2],[2,0]],"labels":[0,1,2],"perms":[[0,1,2]]})"),
                    FormatError);
    CHECK_THROWS_AS(read_certificate(R"({"n":3,"k":1,"directed":false,"base":[[0,3]],"labels":[0,1,2],"perms":[[0,1,2]]})"),
                    FormatError);
    CHECK_THROWS_AS(read_certificate(R"({"n":3,"k":1,"directed":false,"base":[[0,1,2]],"labels":[0,1,2],"perms":[[0,1,2]]})"),
                    FormatError);
    CHECK_THROWS_AS(read_certificate(R"({"n":3,"k":1,"directed":false,"base":[],"labels":[0,1],"perms":[[0,1,2]]})"),
                    FormatError);
    CHECK_THROWS_AS(read_certificate(R"({"n":3,"k":1,"directed":false,"base":[],"labels":[0,-1,2],"perms":[[0,1,2]]})"),
                    FormatError);
    CHECK_THROWS_AS(read_certificate(R"({"n":3,"k":1,"directed":false,"base":[],"labels":[0,1,2],"perms":[[0,1]]})"),
                    FormatError);
    CHECK_THROWS_AS(read_certificate(R"({"n":3,"k":1,"directed":false,"base":[],"labels":[0,1,2],"perms":[[0,1,"2"]]})"),
                    FormatError);
}

TEST_CASE("values that only break validity still parse")
{
    const LabeledPacking p = read_certificate(
        R"({"n":3,"k":1,"directed":false,"base":[[0,1]],"labels":[0,1,5],"perms":[[0,0,7]]})");
    CHECK(p.labeling.label_count() == 6);
    CHECK_FALSE(p.placements[0].is_bijection());
}

TEST_CASE("report JSON uses stable flag names")
{
    VerificationReport r;
    r.base_shape = true;
    const Json j = report_json(r);
    CHECK(j.dump()
          == R"({"valid":false,"base_shape":true,"bijections":false,"disjointness":false,)"
             R"("label_preservation":false,"capacity":false,"label_count":false})");
}

TEST_CASE("table CSV and JSON")
{
    const std::vector<Table1Row> rows{{9, 3, 21, 7, {3, 3, 3, 3, 3, 3, 3}}};
    CHECK(table_csv(rows) == "k,x,n,p_max\n9,3,21,7\n");
    CHECK(table_csv({}) == "k,x,n,p_max\n");
    const Json j = table_json(rows);
    CHECK(j["rows"][0]["p_max"] == 7);
    CHECK(j["rows"][0]["witness"].size() == 7);
}

TEST_CASE("DOT export has one graph per copy")
{
    const LabeledPacking p = construct_cycle_packing(3, 2);
    const std::string dot = to_dot(p);
    std::size_t graphs = 0;
    for (std::size_t at = dot.find("graph copy"); at != std::string::npos; at = dot.find("graph copy", at + 1))
        ++graphs;
    CHECK(graphs == 3);
    CHECK(dot.find("graph copy1 {") != std::string::npos);
    CHECK(dot.find("graph copy3 {") != std::string::npos);
    CHECK(dot.find("vlabel=") != std::string::npos);
    CHECK(dot.find("0 -- 7;") != std::string::npos);
    const std::string directed = to_dot(construct_circuit_packing_large(3, 7));
    CHECK(directed.rfind("digraph copy1 {", 0) == 0);
    CHECK(directed.find(" -> ") != std::string::npos);
}

}
