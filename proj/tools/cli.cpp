#include "cli.hpp"

#include "lpack/bounds.hpp"
#include "lpack/constructions.hpp"
#include "lpack/errors.hpp"
#include "lpack/io.hpp"
#include "lpack/oracle.hpp"
#include "lpack/verifier.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace lpack::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text))
        throw IoError("cannot write " + path);
}

struct BudgetOptions {
    std::int64_t max_nodes = 100'000'000;
    int max_seconds = 60;
    bool random_order = false;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--max-nodes", max_nodes, "Search node budget")->check(CLI::PositiveNumber);
        cmd->add_option("--max-seconds", max_seconds, "Search time budget")->check(CLI::PositiveNumber);
        cmd->add_flag("--random-order", random_order, "Try candidates in shuffled order");
    }

    SearchBudget budget() const { return {max_nodes, max_seconds, !random_order}; }
};

Json oracle_json(const LambdaOutcome& r)
{
    Json doc;
    doc["status"] = r.status == SearchStatus::Exact ? "exact" : "budget_exhausted";
    doc["p"] = r.p;
    doc["nodes"] = r.nodes;
    return doc;
}

LabeledPacking construct_circuit(int k, int n, std::string& tag)
{
    if (k < 1 || n <= k)
        throw ParameterError("out-of-range: circuit construction needs k >= 1 and n >= k + 1");
    if (!circuit_placement_exists(k, n))
        throw ExcludedInstance("excluded-instance: (x, n) = (1, " + std::to_string(n)
                               + ") is one of (1,4), (1,6); no k-placement exists");
    const int x = n - k;
    if (n >= 2 * k) {
        tag = "circuit_large";
        return construct_circuit_packing_large(k, n);
    }
    if (k % 2 == 0) {
        tag = "circuit_small_even";
        return construct_circuit_packing_small_even(k, x);
    }
    if (x < 2)
        throw ParameterError("out-of-range: no construction for k odd and n = k + 1 below 2k");
    tag = "circuit_small_odd";
    return construct_circuit_packing_small_odd(k, x);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Labeled packings of cycles and circuits"};
    app.name("lpack");
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "Build a labeled packing and write its certificate");
    std::string kind = "cycle";
    int k = 0;
    std::optional<int> x_opt;
    std::optional<int> n_opt;
    int m = 1;
    std::string out_path;
    construct->add_option("kind", kind, "cycle or circuit")->required()->check(CLI::IsMember({"cycle", "circuit"}));
    construct->add_option("--k", k, "Number of copies")->required();
    construct->add_option("--x", x_opt, "n = 2k + x (cycle) or n = k + x (circuit)");
    construct->add_option("--n", n_opt, "Order of the circuit");
    construct->add_option("--out", out_path, "Certificate path (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate");
    std::string in_path;
    verify_cmd->add_option("--in", in_path, "Certificate path, - for stdin")->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on the labeled packing number");
    bool with_oracle = false;
    BudgetOptions budget_opts;
    bounds->add_option("kind", kind, "cycle or circuit")->required()->check(CLI::IsMember({"cycle", "circuit"}));
    bounds->add_option("--k", k, "Number of copies")->required();
    bounds->add_option("--x", x_opt, "n = 2km + x (cycle) or n = k + x (circuit)")->required();
    bounds->add_option("--m", m, "Cycle multiplier m (default 1)")->check(CLI::PositiveNumber);
    bounds->add_flag("--oracle", with_oracle, "Also run the exhaustive search");
    budget_opts.attach(bounds);

    // table
    auto* table = app.add_subcommand("table", "Instances the closed-form bounds leave open");
    int k_max = 35;
    std::string format = "csv";
    unsigned threads = 0;
    table->add_option("--k-max", k_max, "Largest k")->required();
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", out_path, "Output path (default stdout)");
    table->add_option("--threads", threads, "Worker threads (default THREADS or all cores)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exact labeled packing number by exhaustive search");
    int n = 0;
    oracle->add_option("kind", kind, "cycle or circuit")->required()->check(CLI::IsMember({"cycle", "circuit"}));
    oracle->add_option("--n", n, "Order")->required();
    oracle->add_option("--k", k, "Number of copies")->required();
    oracle->add_option("--out", out_path, "Write the witness certificate here");
    budget_opts.attach(oracle);

    // search-counterexample
    auto* search = app.add_subcommand("search-counterexample", "Look for a 7-labeled packing of 9 copies of C_21");
    search->add_option("--out", out_path, "Write the certificate here");
    budget_opts.attach(search);

    // export
    auto* export_cmd = app.add_subcommand("export", "Write one DOT graph per copy");
    export_cmd->add_option("--in", in_path, "Certificate path, - for stdin")->required();
    export_cmd->add_option("--format", format, "Only dot")->check(CLI::IsMember({"dot"}));
    export_cmd->add_option("--out", out_path, "Output path (default stdout)");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (construct->parsed()) {
            LabeledPacking packing;
            std::string tag;
            if (kind == "cycle") {
                if (!x_opt || n_opt)
                    throw ParameterError("construct cycle takes --x");
                packing = construct_cycle_packing(k, *x_opt);
                tag = std::string(to_string(cycle_case(k, *x_opt)));
            } else {
                if (x_opt.has_value() == n_opt.has_value())
                    throw ParameterError("construct circuit takes exactly one of --n and --x");
                packing = construct_circuit(k, n_opt ? *n_opt : k + *x_opt, tag);
            }
            emit(out_path, write_certificate(packing), out);
            std::ostream& summary = out_path.empty() || out_path == "-" ? err : out;
            summary << "n=" << packing.n << " k=" << packing.k() << " p=" << packing.labeling.label_count()
                    << " case=" << tag << '\n';
            return Ok;
        }

        if (verify_cmd->parsed()) {
            const LabeledPacking packing = read_certificate(slurp(in_path));
            const VerificationReport report = verify(packing);
            out << report_json(report).dump() << '\n';
            for (const auto& f : report.failures())
                err << "failed: " << f << '\n';
            return report.valid() ? Ok : Failure;
        }

        if (bounds->parsed()) {
            BoundReport report = kind == "cycle" ? cycle_bound_report(k, *x_opt, m) : circuit_bound_report(k, *x_opt);
            Json doc = bound_report_json(report);
            if (with_oracle)
                doc["oracle"] = oracle_json(lambda_exact(report.n, k, report.directed, budget_opts.budget()));
            out << doc.dump() << '\n';
            return Ok;
        }

        if (table->parsed()) {
            if (threads == 0)
                if (const char* env = std::getenv("THREADS"))
                    threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
            const auto rows = table1(k_max, threads);
            emit(out_path, format == "csv" ? table_csv(rows) : table_json(rows).dump() + "\n", out);
            err << rows.size() << " rows\n";
            return Ok;
        }

        if (oracle->parsed()) {
            const bool directed = kind == "circuit";
            const LambdaOutcome r = lambda_exact(n, k, directed, budget_opts.budget());
            Json doc;
            doc["kind"] = kind;
            doc["n"] = n;
            doc["k"] = k;
            doc.update(oracle_json(r));
            out << doc.dump() << '\n';
            if (!out_path.empty() && r.witness)
                emit(out_path, write_certificate(*r.witness), out);
            return r.status == SearchStatus::Exact ? Ok : Failure;
        }

        if (search->parsed()) {
            const CounterexampleOutcome r = guided_counterexample_search(budget_opts.budget());
            const bool found = r.status == CounterexampleStatus::Found;
            Json doc;
            doc["status"] = found ? "found" : "not_found_within_budget";
            doc["nodes"] = r.nodes;
            doc["tours"] = r.tours_tried;
            if (found)
                doc["p"] = r.packing->labeling.label_count();
            out << doc.dump() << '\n';
            if (found && !out_path.empty())
                emit(out_path, write_certificate(*r.packing), out);
            return found ? Ok : Failure;
        }

        if (export_cmd->parsed()) {
            const LabeledPacking packing = read_certificate(slurp(in_path));
            if (!verify(packing).bijections) {
                err << "error: certificate perms are not bijections\n";
                return Failure;
            }
            emit(out_path, to_dot(packing), out);
            return Ok;
        }
    } catch (const ExcludedInstance& e) {
        err << "error: " << e.what() << '\n';
        return Excluded;
    } catch (const CapacityViolation& e) {
        err << "error: " << e.what() << '\n';
        return Excluded;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    }
    return Usage;
}

} // namespace lpack::cli
