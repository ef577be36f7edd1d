#include "cli.hpp"

#include "lpack/io.hpp"

#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = lpack::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("lpack-cli-" + std::to_string(std::rand()) + "-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text)
{
    std::ofstream(path) << text;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("construct cycle writes a certificate and a summary")
{
    const Result r = run({"construct", "cycle", "--k", "3", "--x", "2"});
    CHECK(r.code == 0);
    const auto p = lpack::read_certificate(r.out);
    CHECK(p.n == 8);
    CHECK(p.labeling.label_count() == 4);
    CHECK(r.err == "n=8 k=3 p=4 case=OddSmallX\n");
}

TEST_CASE("construct circuit chooses the construction from n")
{
    CHECK(run({"construct", "circuit", "--k", "3", "--n", "7"}).err == "n=7 k=3 p=4 case=circuit_large\n");
    CHECK(run({"construct", "circuit", "--k", "4", "--n", "7"}).err == "n=7 k=4 p=4 case=circuit_small_even\n");
    CHECK(run({"construct", "circuit", "--k", "5", "--x", "3"}).err == "n=8 k=5 p=3 case=circuit_small_odd\n");
}

TEST_CASE("construct exit codes")
{
    const Result excluded = run({"construct", "circuit", "--k", "5", "--n", "6"});
    CHECK(excluded.code == 3);
    CHECK(excluded.err.find("(1,6)") != std::string::npos);
    CHECK(run({"construct", "circuit", "--k", "3", "--n", "4"}).code == 3);
    const Result range = run({"construct", "cycle", "--k", "3", "--x", "6"});
    CHECK(range.code == 2);
    CHECK(range.err.find("1 <= x <= 2k-1") != std::string::npos);
    CHECK(run({"construct", "circuit", "--k", "5", "--n", "5"}).code == 2);
    CHECK(run({"construct", "circuit", "--k", "5", "--n", "8", "--x", "3"}).code == 2);
    CHECK(run({"construct", "circuit", "--k", "3", "--n", "4"}).code == 3);
    CHECK(run({"construct", "circuit", "--k", "7", "--n", "8"}).code == 2);
    CHECK(run({"construct", "square", "--k", "3", "--x", "2"}).code == 2);
    CHECK(run({"construct", "cycle", "--k", "three", "--x", "2"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("construct then verify")
{
    TempDir dir;
    const std::string cert = dir.file("fig2.json");
    const Result c = run({"construct", "cycle", "--k", "3", "--x", "2", "--out", cert});
    CHECK(c.code == 0);
    CHECK(c.out == "n=8 k=3 p=4 case=OddSmallX\n");
    const Result v = run({"verify", "--in", cert});
    CHECK(v.code == 0);
    CHECK(v.out.find("\"valid\":true") != std::string::npos);
}

TEST_CASE("verify rejects a duplicated edge and malformed input")
{
    TempDir dir;
    const std::string cert = dir.file("bad.json");
    auto p = lpack::read_certificate(run({"construct", "cycle", "--k", "3", "--x", "2"}).out);
    p.placements[2] = p.placements[1];
    spit(cert, lpack::write_certificate(p));
    const Result v = run({"verify", "--in", cert});
    CHECK(v.code == 1);
    CHECK(v.out.find("\"disjointness\":false") != std::string::npos);
    CHECK(v.err.find("failed: disjointness") != std::string::npos);

    const std::string truncated = dir.file("truncated.json");
    const std::string good = run({"construct", "cycle", "--k", "3", "--x", "2"}).out;
    spit(truncated, good.substr(0, good.size() / 3));
    CHECK(run({"verify", "--in", truncated}).code == 2);
    CHECK(run({"verify", "--in", dir.file("missing.json")}).code == 2);
}

TEST_CASE("bounds")
{
    const Result a = run({"bounds", "cycle", "--k", "9", "--x", "3"});
    CHECK(a.code == 0);
    const auto ja = lpack::Json::parse(a.out);
    CHECK(ja["lower"] == 5);
    CHECK(ja["upper_partition"] == 7);
    CHECK(ja["upper_closed"].is_null());

    const auto jb = lpack::Json::parse(run({"bounds", "cycle", "--k", "2", "--x", "3", "--oracle"}).out);
    CHECK(jb["lower"] == 5);
    CHECK(jb["upper_closed"]["bound"] == 5);
    CHECK(jb["upper_closed"]["provenance"] == "xbetween");
    CHECK(jb["oracle"]["status"] == "exact");
    CHECK(jb["oracle"]["p"] == 5);

    const auto jc = lpack::Json::parse(run({"bounds", "circuit", "--k", "3", "--x", "4"}).out);
    CHECK(jc["exact"]["bound"] == 4);
    CHECK(jc["exact"]["provenance"] == "large_circuit");

    CHECK(run({"bounds", "cycle", "--k", "3", "--x", "9"}).code == 2);
    CHECK(run({"bounds", "circuit", "--k", "3", "--x", "1"}).code == 3);
}

TEST_CASE("table")
{
    const Result r = run({"table", "--k-max", "9"});
    CHECK(r.code == 0);
    CHECK(r.out == "k,x,n,p_max\n9,3,21,7\n");
    const Result j = run({"table", "--k-max", "9", "--format", "json"});
    CHECK(lpack::Json::parse(j.out)["rows"].size() == 1);
    CHECK(run({"table", "--k-max", "1"}).code == 2);
    CHECK(run({"table", "--k-max", "9", "--format", "xml"}).code == 2);
}

TEST_CASE("oracle")
{
    TempDir dir;
    const Result r = run({"oracle", "cycle", "--n", "7", "--k", "2", "--out", dir.file("w.json")});
    CHECK(r.code == 0);
    CHECK(lpack::Json::parse(r.out)["p"] == 5);
    CHECK(run({"verify", "--in", dir.file("w.json")}).code == 0);
    CHECK(run({"oracle", "cycle", "--n", "9", "--k", "3", "--max-nodes", "5"}).code == 1);
    CHECK(run({"oracle", "cycle", "--n", "6", "--k", "3"}).code == 3);
}

TEST_CASE("search-counterexample")
{
    TempDir dir;
    const Result r = run({"search-counterexample", "--out", dir.file("c21.json")});
    CHECK(r.code == 0);
    const auto j = lpack::Json::parse(r.out);
    CHECK(j["status"] == "found");
    CHECK(j["p"] == 7);
    CHECK(run({"verify", "--in", dir.file("c21.json")}).code == 0);
    CHECK(run({"search-counterexample", "--max-nodes", "100"}).code == 1);
}

TEST_CASE("export")
{
    TempDir dir;
    const std::string cert = dir.file("fig2.json");
    run({"construct", "cycle", "--k", "3", "--x", "2", "--out", cert});
    const Result r = run({"export", "--in", cert, "--format", "dot"});
    CHECK(r.code == 0);
    std::size_t graphs = 0;
    for (std::size_t at = r.out.find("graph copy"); at != std::string::npos; at = r.out.find("graph copy", at + 1))
        ++graphs;
    CHECK(graphs == 3);
    std::size_t vertices = 0;
    for (std::size_t at = r.out.find("vlabel="); at != std::string::npos; at = r.out.find("vlabel=", at + 1))
        ++vertices;
    CHECK(vertices == 3 * 8);
    CHECK(run({"export", "--in", cert, "--format", "png"}).code == 2);
    CHECK(run({"export", "--in", cert, "--out", dir.file("fig2.dot")}).code == 0);
    CHECK(slurp(dir.file("fig2.dot")) == r.out);
}

TEST_CASE("construct output is byte-identical across runs")
{
    CHECK(run({"construct", "cycle", "--k", "6", "--x", "4"}).out == run({"construct", "cycle", "--k", "6", "--x", "4"}).out);
}

}
