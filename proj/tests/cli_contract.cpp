// Exercises the installed CLI binary end to end: exit-code contract
// (0 verdict/success, 2 input error, 3 precondition failure), output
// shapes, and JSON round trips. Invoked as: cli_contract <path-to-cli>.
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lpa/graph.hpp"
#include "lpa/json_io.hpp"

namespace {

int checks_failed = 0;

void expect(bool ok, const std::string& what) {
    std::printf("[%s] %s\n", ok ? "ok" : "FAILED", what.c_str());
    if (!ok) ++checks_failed;
}

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run(const std::string& cli, const std::string& args) {
    std::string out_path = "cli_out.txt";
    std::string cmd = cli + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out_path)};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_contract <path-to-cli>\n";
        return 2;
    }
    std::string cli = argv[1];

    write_file("single_loop.json", R"({"vertices": ["v"], "edges": [
        {"src": "v", "dst": "v", "mult": 1}]})");
    write_file("three_loops.json", R"({"vertices": ["v"], "edges": [
        {"src": "v", "dst": "v", "mult": 3}]})");
    write_file("emitter.json", R"({"vertices": ["v", "w"], "edges": [
        {"src": "v", "dst": "v", "mult": 2}, {"src": "v", "dst": "w", "mult": 1},
        {"src": "w", "dst": "v", "mult": "inf"}]})");
    write_file("broken.json", "{\"vertices\": [");
    write_file("matrix.json", "[[2, 4], [6, 8]]");

    auto r = run(cli, "info single_loop.json");
    expect(r.exit_code == 0, "info exits 0 on a valid graph");
    expect(contains(r.out, "Condition (L): false"), "single loop fails Condition (L)");

    r = run(cli, "info emitter.json");
    expect(contains(r.out, "singular: [w]"), "info reports the singular vertex");
    expect(contains(r.out, "simple: true"), "info reports simplicity");
    expect(contains(r.out, "infinitely many edges: true"), "info reports infinite edges");

    r = run(cli, "info missing_file.json");
    expect(r.exit_code == 2, "info exits 2 on a missing file");
    r = run(cli, "info broken.json");
    expect(r.exit_code == 2, "info exits 2 on malformed JSON");

    r = run(cli, "kgroups three_loops.json --field fq:5 --n 0..4");
    expect(r.exit_code == 0, "kgroups exits 0");
    expect(contains(r.out, "K_0 = Z/2 [EXACT]") && contains(r.out, "K_4 = Z/2 [EXACT]"),
           "kgroups prints the finite-field tower");

    r = run(cli, "kgroups three_loops.json --field algclosed:0 --n 2..5");
    expect(contains(r.out, "K_2 = Z/2") && contains(r.out, "K_3 = 0"),
           "kgroups over an algebraically closed field");

    r = run(cli, "kgroups emitter.json --field nf:1,0 --n 2..2");
    expect(r.exit_code == 0 && contains(r.out, "unsupported"),
           "unsupported index is reported per line with exit 0");

    r = run(cli, "kgroups three_loops.json --field fq:5 --n 2..4 --verify");
    expect(contains(r.out, "(verified)"), "enumeration cross-check annotates small cases");

    r = run(cli, "kgroups three_loops.json --field fq:6 --n 0..1");
    expect(r.exit_code == 2, "invalid field spec exits 2");
    r = run(cli, "kgroups three_loops.json --field fq:5 --n 0..99");
    expect(r.exit_code == 2, "out-of-range index exits 2");

    // JSON round trip: every reported group parses back to the same form
    r = run(cli, "kgroups emitter.json --field nf:0,1 --n -1..8 --json");
    expect(r.exit_code == 0, "kgroups --json exits 0");
    {
        bool round_trip = true;
        auto doc = nlohmann::json::parse(r.out);
        int parsed = 0;
        for (const auto& line : doc) {
            if (!line.contains("group")) continue;
            ++parsed;
            lpa::GroupExpr e = lpa::expr_from_json(line["group"]);
            round_trip = round_trip && (lpa::expr_to_json(e) == line["group"]);
        }
        expect(round_trip && parsed > 0, "reported groups round trip through JSON");
    }

    r = run(cli, "classify emitter.json emitter.json --field nf:1,0");
    expect(r.exit_code == 0 && contains(r.out, "EQUIVALENT"), "classify verdict with exit 0");
    {
        auto pos = r.out.find('{');
        auto cert = nlohmann::json::parse(r.out.substr(pos));
        expect(cert["verdict"] == "EQUIVALENT" && cert["singular_left"] == 1,
               "certificate carries the invariant pair");
    }

    r = run(cli, "classify single_loop.json emitter.json --field fq:2");
    expect(r.exit_code == 3, "precondition failure exits 3");
    expect(contains(r.out, "not simple"), "precondition reason is reported");

    r = run(cli, "splice emitter.json --vertex v");
    expect(r.exit_code == 0, "splice exits 0");
    {
        lpa::Graph spliced = lpa::parse_graph(r.out);
        expect(spliced.vertex_count() == 4 && spliced.vertex_index("v#s1").has_value(),
               "spliced graph parses back with fresh vertices");
    }
    r = run(cli, "splice emitter.json --vertex nope");
    expect(r.exit_code == 2, "splice exits 2 on unknown vertex");

    r = run(cli, "snf matrix.json --verify");
    expect(r.exit_code == 0, "snf exits 0");
    {
        auto doc = nlohmann::json::parse(r.out);
        auto u = lpa::matrix_from_json(doc["u"]);
        auto d = lpa::matrix_from_json(doc["d"]);
        auto v = lpa::matrix_from_json(doc["v"]);
        lpa::IntMatrix a = lpa::matrix_from_json(nlohmann::json::parse(slurp("matrix.json")));
        expect(u * a * v == d, "snf JSON factors reproduce u*a*v = d");
        expect(doc["verified"] == true, "snf --verify agrees with the minors oracle");
        expect(doc["invariant_factors"].size() == 2 && doc["invariant_factors"][0] == 2 &&
               doc["invariant_factors"][1] == 4,
               "invariant factors are [2, 4]");
    }

    r = run(cli, "snf emitter.json");
    expect(r.exit_code == 0 && contains(r.out, "\"d\""), "snf accepts a graph document");

    r = run(cli, "bogus-subcommand");
    expect(r.exit_code == 2, "unknown subcommand exits 2");
    r = run(cli, "--help");
    expect(r.exit_code == 0, "--help exits 0");

    if (checks_failed == 0) {
        std::printf("cli contract: all checks passed\n");
        return 0;
    }
    std::printf("cli contract: %d check(s) failed\n", checks_failed);
    return 1;
}
