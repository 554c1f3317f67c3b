#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lpa/classify.hpp"
#include "lpa/field.hpp"
#include "lpa/graph.hpp"
#include "lpa/json_io.hpp"
#include "lpa/ktheory.hpp"
#include "lpa/oracle.hpp"
#include "lpa/snf.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitPrecondition = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

lpa::Graph load_graph(const std::string& path) {
    try {
        return lpa::parse_graph(read_file(path));
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

// Inclusive range "a..b" or a single integer, each bounded by |n| <= 64.
std::pair<long long, long long> parse_n_range(const std::string& text) {
    auto parse_bound = [](const std::string& s) {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw InputError("bad index in --n: " + s);
        if (v < -64 || v > 64) throw InputError("--n indices must satisfy |n| <= 64");
        return v;
    };
    try {
        auto dots = text.find("..");
        if (dots == std::string::npos) {
            long long v = parse_bound(text);
            return {v, v};
        }
        long long lo = parse_bound(text.substr(0, dots));
        long long hi = parse_bound(text.substr(dots + 2));
        if (lo > hi) throw InputError("empty range in --n: " + text);
        return {lo, hi};
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("cannot parse --n range: " + text);
    }
}

void print_partition(std::ostream& os, const lpa::Graph& g, const lpa::VertexPartition& p) {
    auto names = [&](const std::vector<std::size_t>& idx) {
        std::string out = "[";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) out += ", ";
            out += g.vertex_name(idx[i]);
        }
        return out + "]";
    };
    os << "regular:  " << names(p.regular) << "\n";
    os << "singular: " << names(p.singular) << "\n";
}

int cmd_info(const std::string& path, bool as_json) {
    lpa::Graph g = load_graph(path);
    auto part = lpa::partition_vertices(g);
    auto pres = lpa::presentation_matrix(g);
    auto dd = lpa::decomposition_data(pres, part.singular.size());
    bool cofinal = lpa::is_cofinal(g);
    bool cond_l = lpa::satisfies_condition_l(g);
    bool simple = lpa::is_simple(g);
    bool inf_edges = lpa::has_infinitely_many_edges(g);

    auto reach = lpa::reachability(g);
    bool reaches_singular = true;
    for (std::size_t v = 0; v < g.vertex_count() && reaches_singular; ++v) {
        for (std::size_t w : part.singular) reaches_singular = reaches_singular && reach[v][w];
    }

    if (as_json) {
        nlohmann::json out;
        out["vertices"] = g.vertices();
        nlohmann::json reg = nlohmann::json::array(), sing = nlohmann::json::array();
        for (auto v : part.regular) reg.push_back(g.vertex_name(v));
        for (auto v : part.singular) sing.push_back(g.vertex_name(v));
        out["regular"] = reg;
        out["singular"] = sing;
        out["cofinal"] = cofinal;
        out["condition_l"] = cond_l;
        out["reaches_singular"] = reaches_singular;
        out["simple"] = simple;
        out["infinitely_many_edges"] = inf_edges;
        out["presentation_matrix"] = lpa::matrix_to_json(pres);
        nlohmann::json decomp;
        decomp["ones"] = dd.ones;
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& f : dd.factors) factors.push_back(lpa::mpz_to_json(f));
        decomp["factors"] = factors;
        decomp["m"] = dd.m;
        decomp["s"] = dd.s;
        out["decomposition"] = decomp;
        out["k0"] = lpa::fg_to_json(lpa::k0(g));
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    print_partition(std::cout, g, part);
    std::cout << "cofinal: " << (cofinal ? "true" : "false") << "\n";
    std::cout << "Condition (L): " << (cond_l ? "true" : "false") << "\n";
    std::cout << "reaches singular: " << (reaches_singular ? "true" : "false") << "\n";
    std::cout << "simple: " << (simple ? "true" : "false") << "\n";
    std::cout << "infinitely many edges: " << (inf_edges ? "true" : "false") << "\n";
    std::cout << "presentation matrix: " << pres.to_string() << "\n";
    std::cout << "invariant factors = 1: " << dd.ones << ", factors >= 2: [";
    for (std::size_t i = 0; i < dd.factors.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << dd.factors[i];
    }
    std::cout << "], m: " << dd.m << ", singular vertices: " << dd.s << "\n";
    std::cout << "K_0: " << lpa::k0(g).to_string() << "\n";
    return kExitOk;
}

// Brute-force cross-check of a finite-field K-group when the instance is
// small enough for the enumeration oracle.
std::optional<bool> verify_finite_field(const lpa::Graph& g, const lpa::FieldSpec& field,
                                        long long n, const lpa::GroupExpr& got) {
    if (field.kind != lpa::FieldSpec::Kind::FiniteField || n < 2) return std::nullopt;
    auto pres = lpa::presentation_matrix(g);
    if (pres.rows() > 4 || pres.cols() > 4) return std::nullopt;
    unsigned long j = static_cast<unsigned long>((n + 1) / 2);
    mpz_class modulus;
    mpz_pow_ui(modulus.get_mpz_t(), field.q.get_mpz_t(), j);
    modulus -= 1;
    if (modulus < 2 || modulus > 30) return std::nullopt;
    lpa::oracle::FiniteModuleMap m{pres, modulus.get_si()};
    lpa::FgAbGroup expect =
        n % 2 == 0 ? lpa::oracle::brute_kernel_mod(m) : lpa::oracle::brute_cokernel_mod(m);
    return lpa::GroupExpr::from_fg(expect) == got;
}

int cmd_kgroups(const std::string& path, const std::string& field_text, const std::string& range,
                bool as_json, bool verify) {
    lpa::Graph g = load_graph(path);
    lpa::FieldSpec field;
    try {
        field = lpa::parse_field_spec(field_text);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    auto [lo, hi] = parse_n_range(range);

    nlohmann::json lines = nlohmann::json::array();
    for (long long n = lo; n <= hi; ++n) {
        std::optional<lpa::KGroupResult> result;
        std::string error;
        try {
            result = lpa::k_group(g, field, n);
        } catch (const std::exception& e) {
            error = e.what();
        }
        std::optional<bool> verified;
        if (result && verify) verified = verify_finite_field(g, field, n, result->group);

        if (as_json) {
            nlohmann::json line;
            if (result) {
                line = lpa::kgroup_to_json(*result);
                if (verified) line["verified"] = *verified;
            } else {
                line["n"] = n;
                line["error"] = error;
            }
            lines.push_back(line);
        } else {
            std::cout << "K_" << n << " = ";
            if (result) {
                std::cout << result->group.to_string() << " [" << to_string(result->fidelity) << "]";
                if (verified) std::cout << (*verified ? " (verified)" : " (ORACLE MISMATCH)");
            } else {
                std::cout << "unsupported: " << error;
            }
            std::cout << "\n";
        }
    }
    if (as_json) std::cout << lines.dump(2) << "\n";
    return kExitOk;
}

int cmd_classify(const std::string& path_a, const std::string& path_b,
                 const std::string& field_text, bool as_json) {
    lpa::Graph a = load_graph(path_a);
    lpa::Graph b = load_graph(path_b);
    lpa::FieldSpec field;
    try {
        field = lpa::parse_field_spec(field_text);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    lpa::MoritaDecision d = lpa::morita_equivalent(a, b, field);
    if (!as_json) std::cout << to_string(d.verdict) << "\n";
    std::cout << lpa::morita_to_json(d).dump(2) << "\n";
    return d.verdict == lpa::MoritaVerdict::PreconditionFailed ? kExitPrecondition : kExitOk;
}

int cmd_splice(const std::string& path, const std::string& vertex, const std::string& out_path) {
    lpa::Graph g = load_graph(path);
    lpa::Graph spliced;
    try {
        spliced = lpa::cuntz_splice(g, vertex);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    std::string text = lpa::graph_to_json(spliced);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InputError("cannot write file: " + out_path);
        out << text << "\n";
    }
    return kExitOk;
}

int cmd_snf(const std::string& path, bool verify) {
    std::string text = read_file(path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    lpa::IntMatrix m;
    try {
        if (doc.is_array()) {
            m = lpa::matrix_from_json(doc);
        } else {
            // A graph document: take its presentation matrix.
            m = lpa::presentation_matrix(lpa::parse_graph(text));
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
    lpa::SNFResult snf = lpa::smith_normal_form(m);
    nlohmann::json out = lpa::snf_to_json(snf);
    if (verify && m.rows() <= 5 && m.cols() <= 5) {
        auto oracle_factors = lpa::oracle::minors_gcd_invariant_factors(m);
        out["verified"] = oracle_factors == snf.invariant_factors;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K-theory and Morita classification of Leavitt path algebras of finite-vertex graphs"};
    app.require_subcommand(1);

    std::string path, path_b, field_text = "fq:2", range = "0..1", vertex, out_path;
    bool as_json = false, verify = false;

    auto* info = app.add_subcommand("info", "graph predicates, presentation matrix, K_0");
    info->add_option("graph", path, "graph JSON file")->required();
    info->add_flag("--json", as_json, "emit JSON");

    auto* kgroups = app.add_subcommand("kgroups", "K_n over a field for a range of n");
    kgroups->add_option("graph", path, "graph JSON file")->required();
    kgroups->add_option("--field", field_text, "fq:<q> | algclosed:<0|p> | nf:<r1>,<r2>")->required();
    kgroups->add_option("--n", range, "index or inclusive range, e.g. -2..6")->required();
    kgroups->add_flag("--json", as_json, "emit JSON");
    kgroups->add_flag("--verify", verify, "cross-check small finite-field cases by enumeration");

    auto* classify = app.add_subcommand("classify", "Morita equivalence decision");
    classify->add_option("graphA", path, "first graph JSON file")->required();
    classify->add_option("graphB", path_b, "second graph JSON file")->required();
    classify->add_option("--field", field_text, "fq:<q> | algclosed:<0|p> | nf:<r1>,<r2>")->required();
    classify->add_flag("--json", as_json, "emit only the JSON certificate");

    auto* splice = app.add_subcommand("splice", "apply the Cuntz splice at a vertex");
    splice->add_option("graph", path, "graph JSON file")->required();
    splice->add_option("--vertex", vertex, "vertex to splice at")->required();
    splice->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix or presentation matrix");
    snf->add_option("input", path, "JSON matrix (array of rows) or graph JSON file")->required();
    snf->add_flag("--verify", verify, "cross-check invariant factors against the minors oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (info->parsed()) return cmd_info(path, as_json);
        if (kgroups->parsed()) return cmd_kgroups(path, field_text, range, as_json, verify);
        if (classify->parsed()) return cmd_classify(path, path_b, field_text, as_json);
        if (splice->parsed()) return cmd_splice(path, vertex, out_path);
        if (snf->parsed()) return cmd_snf(path, verify);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
