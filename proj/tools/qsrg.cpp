// Command-line front end: construct/verify/predict/cliques/compare.
//
// Exit codes: 0 all checks pass, 1 verification mismatch, 2 usage or I/O
// error. QSRG_NODE_BUDGET bounds the exact-cover and automorphism searches.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qsrg/cliques.hpp"
#include "qsrg/formulas.hpp"
#include "qsrg/graph.hpp"
#include "qsrg/iso.hpp"
#include "qsrg/quadric.hpp"
#include "qsrg/switching.hpp"

using json = nlohmann::ordered_json;
using namespace qsrg;

namespace {

long node_budget_from_env(long fallback) {
    if (const char* env = std::getenv("QSRG_NODE_BUDGET")) {
        try {
            return std::stol(env);
        } catch (...) {
            throw std::invalid_argument("QSRG_NODE_BUDGET is not a number");
        }
    }
    return fallback;
}

json big(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

json srg_json(const SrgParams& p) {
    return json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

json run_report(const std::string& command, json parameters, json results, bool pass) {
    return json{{"command", command},
                {"parameters", std::move(parameters)},
                {"timestamp", iso_timestamp()},
                {"results", std::move(results)},
                {"pass", pass}};
}

void emit(const json& report, const std::string& log_path) {
    std::cout << report.dump(2) << "\n";
    if (!log_path.empty()) {
        std::ofstream out(log_path, std::ios::app);
        if (!out) throw std::runtime_error("cannot open log file: " + log_path);
        out << report.dump() << "\n";
    }
}

Graph load_graph6(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    std::getline(in, line);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    return decode_graph6(line);
}

json fingerprint_json(const Fingerprint& fp) {
    json sizes = json::object();
    for (auto [size, count] : fp.clique_size_hist) sizes[std::to_string(size)] = count;
    json through = json::object();
    for (auto [count, vertices] : fp.cliques_per_vertex_hist)
        through[std::to_string(count)] = vertices;
    json out{{"is_srg", fp.is_srg},
             {"n_cliques", fp.n_cliques},
             {"clique_size_histogram", sizes},
             {"cliques_per_vertex_histogram", through}};
    if (fp.is_srg) out["srg"] = srg_json(fp.srg);
    return out;
}

json census_json(const std::string& graph_id, const CensusReport& rep) {
    json expected{{"total", rep.expected_total},
                  {"n_A", rep.expected_n_a},
                  {"n_B", rep.expected_n_b},
                  {"per_type",
                   {{"I", rep.expected_through_type[0]},
                    {"II", rep.expected_through_type[1]},
                    {"III", rep.expected_through_type[2]}}},
                  {"clique_size", rep.expected_size}};
    return json{{"graph_id", graph_id},
                {"total", rep.total},
                {"n_A", rep.n_a},
                {"n_B", rep.n_b},
                {"per_type",
                 {{"I", rep.through_type[0]},
                  {"II", rep.through_type[1]},
                  {"III", rep.through_type[2]}}},
                {"max_size", rep.max_size},
                {"expected", expected},
                {"match", rep.match}};
}

struct VerifyOptions {
    int jobs = 1;
    int aut_bound = 150;
    int iso_bound = 200;
    int partition_bound = 150;
    long budget = 0;
};

// Full battery for one quadric: switching conditions, SRG parameters,
// construction equivalence, clique census, partition test, isomorphism
// relations and automorphism structure for every admissible s.
json verify_family(Family family, int n, const VerifyOptions& opt, bool& pass) {
    const Quadric q = standard_quadric(family, n);
    const Graph gamma = point_graph(q);
    const std::string base_id =
        std::string(family_name(family)) + "_n" + std::to_string(n);

    pass = true;
    auto check = [&pass](bool ok) {
        pass = pass && ok;
        return ok;
    };

    json results;
    results["family"] = family_name(family);
    results["n"] = n;
    results["r"] = q.r;
    results["g"] = q.g;
    results["v"] = q.v();

    const SrgCheckResult gamma_srg = srg_check(gamma);
    const SrgParams expected_srg = srg_params(family, q.r);
    results["srg_gamma"] = srg_json(gamma_srg.params);
    results["srg_expected"] = srg_json(expected_srg);
    results["srg_gamma_ok"] = check(gamma_srg.is_srg && gamma_srg.params == expected_srg);

    const auto gens = generators(q);
    const CountPrediction pred0 = predict(family, 2, q.r, 0);
    results["generator_count"] = gens.size();
    results["generator_count_expected"] = big(pred0.gamma_cliques);
    results["generator_count_ok"] = check(BigInt(gens.size()) == pred0.gamma_cliques);

    std::vector<Graph> switched;
    json cases = json::array();
    for (int s = 0; s < q.g; ++s) {
        json item;
        item["s"] = s;
        const std::string graph_id = base_id + "_s" + std::to_string(s);
        const CountPrediction pred = predict(family, 2, q.r, s);

        const Subspace alpha = default_alpha(q, s);
        const TypedPartition part = classify_vertices(q, alpha);
        item["alpha"] = alpha.points;
        item["type_sizes"] = {{"I", part.type1.size()},
                              {"II", part.type2.size()},
                              {"III", part.type3.size()}};
        item["type_sizes_ok"] = check(BigInt(part.type1.size()) == pred.type_size[0] &&
                                      BigInt(part.type2.size()) == pred.type_size[1] &&
                                      BigInt(part.type3.size()) == pred.type_size[2]);

        const GmValidation gm = gm_validate(gamma, part);
        item["gm"] = {{"x_size", gm.x_size},
                      {"induced_degree", gm.induced_degree},
                      {"expected_degree", gm.expected_degree},
                      {"ok", gm.ok}};
        check(gm.ok);

        const Graph gs = gm_switch(gamma, part);
        const SrgCheckResult s_srg = srg_check(gs);
        item["srg"] = srg_json(s_srg.params);
        item["srg_ok"] = check(s_srg.is_srg && s_srg.params == expected_srg);

        item["direct_equals_switch"] = check(same_edges(build_direct(q, part), gs));

        if (s == 0) {
            const std::vector<int> phi = switching_involution(q, alpha.points[0]);
            item["involution_maps_graph_onto_switch"] =
                check(same_edges(apply_permutation(gamma, phi), gs));
        }

        const CensusReport census = clique_census(q, part, gs, true, opt.jobs);
        item["census"] = census_json(graph_id, census);
        check(census.match);

        if (q.v() <= opt.partition_bound) {
            const PartitionSearch ps = clique_partition_exists(gs, opt.budget);
            const char* status = ps.status == PartitionSearch::Status::found     ? "found"
                                 : ps.status == PartitionSearch::Status::none    ? "none"
                                                                                 : "undecided";
            item["partition_into_max_cliques"] = status;
            if (s >= 1) {
                if (ps.status == PartitionSearch::Status::found) check(false);
                if (ps.status == PartitionSearch::Status::none)
                    item["kantor_separation_ok"] = true;
            }
        } else {
            item["partition_into_max_cliques"] = "skipped";
        }

        if (q.v() <= opt.iso_bound) {
            const bool iso = is_isomorphic(gamma, gs).isomorphic;
            item["isomorphic_to_point_graph"] = iso;
            item["isomorphic_to_point_graph_ok"] = check(iso == (s == 0));
        } else {
            item["isomorphic_to_point_graph"] = "skipped";
        }

        if (q.v() <= opt.aut_bound) {
            const AutReport aut = automorphisms(gs, opt.aut_bound, opt.budget);
            if (aut.status == AutReport::Status::ok) {
                json aj;
                aj["order"] = big(aut.order);
                aj["orbit_count"] = aut.orbit_count;
                aj["generators"] = aut.generators;  // 0-based permutation arrays
                if (s >= 1) {
                    std::vector<std::vector<int>> types{part.type1, part.type2, part.type3};
                    std::sort(types.begin(), types.end());
                    aj["orbits_are_types"] = check(aut.orbits == types);
                    const auto stab = setwise_stabilizer_order(gamma, part.type1,
                                                               opt.aut_bound, opt.budget);
                    if (stab.has_value())
                        aj["stabilizer_equals_order"] = check(*stab == aut.order);
                    else
                        aj["stabilizer_equals_order"] = "skipped";
                } else {
                    aj["orbit_count_ok"] = check(aut.orbit_count == 1);
                }
                item["aut"] = aj;
            } else {
                item["aut"] = "aborted";
            }
        } else {
            item["aut"] = "skipped";
        }

        switched.push_back(gs);
        cases.push_back(item);
    }
    results["cases"] = cases;

    if (q.v() <= opt.iso_bound) {
        bool pairwise = true;
        for (std::size_t a = 0; a < switched.size(); ++a)
            for (std::size_t b = a + 1; b < switched.size(); ++b)
                if (is_isomorphic(switched[a], switched[b]).isomorphic) pairwise = false;
        results["switches_pairwise_non_isomorphic"] = check(pairwise);
    }

    return results;
}

int cmd_construct(Family family, int n, int s, const std::string& out_path,
                  const std::string& log_path) {
    const Quadric q = standard_quadric(family, n);
    const Graph gamma = point_graph(q);
    Graph result = gamma;
    json params{{"family", family_name(family)}, {"n", n}};
    if (s >= 0) {
        params["s"] = s;
        const TypedPartition part = classify_vertices(q, default_alpha(q, s));
        result = gm_switch(gamma, part);
    }
    const SrgCheckResult srg = srg_check(result);
    const std::string g6 = encode_graph6(result);
    json results{{"v", result.v}, {"srg", srg_json(srg.params)}, {"is_srg", srg.is_srg}};
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        out << g6 << "\n";
        results["out"] = out_path;
    } else {
        results["graph6"] = g6;
    }
    emit(run_report("construct", params, results, srg.is_srg), log_path);
    return srg.is_srg ? 0 : 1;
}

int cmd_predict(Family family, long q, long r, long s, const std::string& log_path) {
    const CountPrediction c = predict(family, q, r, s);
    json results{
        {"family", family_name(family)},
        {"q", c.q},
        {"r", c.r},
        {"s", c.s},
        {"g", c.g},
        {"quadric_points", big(c.quadric_points)},
        {"x_size", big(c.x_size)},
        {"induced_degree", big(c.induced_degree)},
        {"y_count", big(c.y_count)},
        {"y_is_derived_half", c.y_derived},
        {"ext_spaces", big(c.ext_spaces)},
        {"pencil_lines", big(c.pencil_lines)},
        {"type_sizes",
         {{"I", big(c.type_size[0])}, {"II", big(c.type_size[1])}, {"III", big(c.type_size[2])}}},
        {"clique_size", c.clique_size},
        {"total_cliques", big(c.total_cliques)},
        {"n_A", big(c.n_a)},
        {"n_B", big(c.n_b)},
        {"cliques_through",
         {{"I", big(c.cliques_through[0])},
          {"II", big(c.cliques_through[1])},
          {"III", big(c.cliques_through[2])}}},
        {"gamma_cliques", big(c.gamma_cliques)},
        {"srg", srg_json(c.srg)},
        {"graphs_constructed", c.graphs_constructed},
        {"graphs_new", c.graphs_new}};
    emit(run_report("predict",
                    json{{"family", family_name(family)}, {"q", q}, {"r", r}, {"s", s}},
                    results, true),
         log_path);
    return 0;
}

int cmd_cliques(const std::string& path, int jobs, const std::string& log_path) {
    const Graph g = load_graph6(path);
    const auto cliques = maximal_cliques(g, jobs);
    std::map<int, long> sizes;
    std::map<long, long> through;
    std::vector<long> per_vertex(g.v, 0);
    for (const auto& c : cliques) {
        sizes[static_cast<int>(c.size())]++;
        for (int u : c) per_vertex[u]++;
    }
    for (long t : per_vertex) through[t]++;
    json size_hist = json::object(), through_hist = json::object();
    for (auto [k, v] : sizes) size_hist[std::to_string(k)] = v;
    for (auto [k, v] : through) through_hist[std::to_string(k)] = v;
    json results{{"file", path},
                 {"v", g.v},
                 {"total", cliques.size()},
                 {"max_size", cliques.empty() ? 0 : static_cast<int>(cliques.front().size())},
                 {"clique_size_histogram", size_hist},
                 {"cliques_per_vertex_histogram", through_hist}};
    emit(run_report("cliques", json{{"path", path}, {"jobs", jobs}}, results, true), log_path);
    return 0;
}

int cmd_compare(const std::string& path1, const std::string& path2, long budget,
                const std::string& log_path) {
    const Graph g1 = load_graph6(path1);
    const Graph g2 = load_graph6(path2);
    const Fingerprint f1 = fingerprint(g1);
    const Fingerprint f2 = fingerprint(g2);
    const IsoResult iso = is_isomorphic(g1, g2, budget);
    json results{{"verdict", iso.isomorphic ? "isomorphic" : "non-isomorphic"},
                 {"fingerprints_equal", f1 == f2},
                 {"fingerprint_1", fingerprint_json(f1)},
                 {"fingerprint_2", fingerprint_json(f2)}};
    if (iso.isomorphic) {
        results["bijection"] = iso.mapping;
        results["bijection_verified"] = is_edge_preserving(g1, g2, iso.mapping);
    }
    emit(run_report("compare", json{{"path1", path1}, {"path2", path2}}, results, true),
         log_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strongly regular graphs from quadric point-graph switching"};
    app.require_subcommand(1);

    std::string family_str, out_path, log_path, path1, path2;
    int n = 0, s = -1, jobs = 1;
    long qq = 2, rr = 0, ss = 0;
    VerifyOptions vopt;

    auto* construct = app.add_subcommand("construct", "Build a graph and write graph6");
    construct->add_option("--family", family_str)->required();
    construct->add_option("--n", n)->required();
    construct->add_option("--s", s);
    construct->add_option("--out", out_path);
    construct->add_option("--log", log_path);

    auto* verify = app.add_subcommand("verify", "Run the full verification battery");
    verify->add_option("--family", family_str)->required();
    verify->add_option("--n", n)->required();
    verify->add_option("--jobs", vopt.jobs);
    verify->add_option("--aut-bound", vopt.aut_bound);
    verify->add_option("--iso-bound", vopt.iso_bound);
    verify->add_option("--partition-bound", vopt.partition_bound);
    verify->add_option("--log", log_path);

    auto* predict_cmd = app.add_subcommand("predict", "Evaluate the closed-form counts");
    predict_cmd->add_option("--family", family_str)->required();
    predict_cmd->add_option("--q", qq)->required();
    predict_cmd->add_option("--r", rr)->required();
    predict_cmd->add_option("--s", ss)->required();
    predict_cmd->add_option("--log", log_path);

    auto* cliques_cmd = app.add_subcommand("cliques", "Census of a graph6 file");
    cliques_cmd->add_option("path", path1)->required();
    cliques_cmd->add_option("--jobs", jobs);
    cliques_cmd->add_option("--log", log_path);

    auto* compare = app.add_subcommand("compare", "Isomorphism verdict for two graph6 files");
    compare->add_option("path1", path1)->required();
    compare->add_option("path2", path2)->required();
    compare->add_option("--log", log_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed())
            return cmd_construct(family_from_name(family_str), n, s, out_path, log_path);
        if (verify->parsed()) {
            vopt.budget = node_budget_from_env(50'000'000);
            bool pass = false;
            const json results = verify_family(family_from_name(family_str), n, vopt, pass);
            emit(run_report("verify", json{{"family", family_str}, {"n", n}}, results, pass),
                 log_path);
            return pass ? 0 : 1;
        }
        if (predict_cmd->parsed())
            return cmd_predict(family_from_name(family_str), qq, rr, ss, log_path);
        if (cliques_cmd->parsed()) return cmd_cliques(path1, jobs, log_path);
        if (compare->parsed())
            return cmd_compare(path1, path2, node_budget_from_env(50'000'000), log_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
