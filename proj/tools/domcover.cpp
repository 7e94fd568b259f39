// domcover: covers, domination numbers and bound checks from the command line.
//
// Exit status: 0 success, 1 a check failed, 2 usage or input error.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <domcover/domcover.hpp>

namespace {

using namespace domcover;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_graph(in);
}

ProjectionFile load_projection(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_projection(in);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << text;
}

std::vector<DominationKind> parse_kinds(const std::string& csv) {
    std::vector<DominationKind> kinds;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) kinds.push_back(parse_kind(item));
    return kinds;
}

std::string utc_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph covers and domination parameters"};
    app.require_subcommand(1);

    // dom
    std::string kind_name = "plain", input;
    std::uint64_t budget = default_node_budget;
    auto* dom = app.add_subcommand("dom", "exact domination number with witness");
    dom->add_option("--kind", kind_name, "plain|total|connected")->check(CLI::IsMember({"plain", "total", "connected"}));
    dom->add_option("--input", input, "graph file (graph6 or edge list)")->required();
    dom->add_option("--budget", budget, "search node budget");

    // greedy
    auto* greedy = app.add_subcommand("greedy", "greedy dominating set with its white-count trace");
    greedy->add_option("--input", input, "graph file")->required();

    // lift
    std::string base_path, voltages_path, out_path, proj_out;
    std::size_t folds = 2;
    std::uint64_t seed = 0;
    auto* lift_cmd = app.add_subcommand("lift", "build a k-fold cover from voltages");
    lift_cmd->add_option("--base", base_path, "base graph file")->required();
    lift_cmd->add_option("--k", folds, "fold count")->required();
    auto* vopt = lift_cmd->add_option("--voltages", voltages_path, "voltage file: 'u v p_0 .. p_{k-1}' per edge");
    auto* sopt = lift_cmd->add_option("--seed", seed, "seed for uniformly random voltages");
    vopt->excludes(sopt);
    lift_cmd->add_option("--out", out_path, "graph6 output for the cover")->required();
    lift_cmd->add_option("--proj-out", proj_out, "projection file output")->required();

    // verify-cover
    std::string total_path, proj_path;
    auto* verify_cmd = app.add_subcommand("verify-cover", "check a covering projection");
    verify_cmd->add_option("--base", base_path, "base graph file")->required();
    verify_cmd->add_option("--total", total_path, "cover graph file")->required();
    verify_cmd->add_option("--proj", proj_path, "projection file")->required();

    // bounds
    std::string kinds_csv = "plain,total,connected";
    auto* bounds_cmd = app.add_subcommand("bounds", "bound report for a cover");
    bounds_cmd->add_option("--base", base_path, "base graph file")->required();
    bounds_cmd->add_option("--proj", proj_path, "projection file")->required();
    bounds_cmd->add_option("--total", total_path, "cover graph file; enables the exact check on the cover");
    bounds_cmd->add_option("--kinds", kinds_csv, "comma-separated kinds");
    bounds_cmd->add_option("--budget", budget, "search node budget per solve");

    // hunt
    std::size_t trials = 10;
    unsigned workers = 1;
    std::string stamp;
    bool stamp_now = false;
    auto* hunt = app.add_subcommand("hunt", "random-lift experiment on gamma(G) / (k gamma(F))");
    hunt->add_option("--base", base_path, "base graph file")->required();
    hunt->add_option("--k", folds, "fold count")->required();
    hunt->add_option("--trials", trials, "number of random lifts")->required();
    hunt->add_option("--seed", seed, "experiment seed")->required();
    hunt->add_option("--out", out_path, "JSON-lines output")->required();
    hunt->add_option("--budget", budget, "search node budget per solve");
    hunt->add_option("--workers", workers, "worker threads");
    auto* stamp_opt = hunt->add_option("--timestamp", stamp, "timestamp string stored in every record");
    hunt->add_flag("--stamp-now", stamp_now, "store the current UTC time in every record")->excludes(stamp_opt);

    // fixtures
    bool list = false;
    std::string fixture_name, out_dir;
    auto* fix = app.add_subcommand("fixtures", "named example graphs and covers");
    fix->add_flag("--list", list, "list fixture names");
    fix->add_option("--name", fixture_name, "fixture to export");
    fix->add_option("--out-dir", out_dir, "directory for base.g6 / total.g6 / proj.txt");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*dom) {
            const Graph g = load_graph(input);
            const auto cert = domination_number(g, parse_kind(kind_name), budget);
            std::cout << to_json(cert).dump() << '\n';
            return exit_ok;
        }
        if (*greedy) {
            const Graph g = load_graph(input);
            std::cout << to_json(greedy_dominating_set(g)).dump() << '\n';
            return exit_ok;
        }
        if (*lift_cmd) {
            const Graph f = load_graph(base_path);
            VoltageAssignment va = [&] {
                if (!voltages_path.empty()) {
                    std::ifstream in(voltages_path);
                    if (!in) throw InputError("cannot open '" + voltages_path + "'");
                    return read_voltages(in, f, folds);
                }
                return random_voltages(f, folds, seed);
            }();
            const auto p = lift(va);
            write_text(out_path, to_graph6(p.total) + "\n");
            std::ostringstream proj;
            write_projection(proj, p);
            write_text(proj_out, proj.str());
            std::cout << Json{{"n", p.total.order()}, {"m", p.total.size()}, {"k", folds},
                              {"components", component_count(p.total)}}.dump()
                      << '\n';
            return exit_ok;
        }
        if (*verify_cmd) {
            const Graph f = load_graph(base_path), g = load_graph(total_path);
            const auto pf = load_projection(proj_path);
            const auto verdict = verify_projection(make_projection(pf, g, f));
            std::cout << to_json(verdict).dump() << '\n';
            return verdict.ok() ? exit_ok : exit_check_failed;
        }
        if (*bounds_cmd) {
            const Graph f = load_graph(base_path);
            const auto pf = load_projection(proj_path);
            const auto kinds = parse_kinds(kinds_csv);
            Json out = Json::array();
            bool ok = true;
            if (!total_path.empty()) {
                const auto p = make_projection(pf, load_graph(total_path), f);
                for (auto kind : kinds) {
                    const auto rep = check_sandwich(p, kind, {budget});
                    ok = ok && rep.ok();
                    out.push_back(to_json(rep));
                }
            } else {
                const auto st = stats(f);
                for (auto kind : kinds) {
                    const auto cert = domination_number(f, kind, budget);
                    auto rep = cover_bounds(cert.value, pf.k, kind, st.regular_degree, st.max_degree);
                    rep.base_id = to_graph6(f);
                    for (const auto& lo : rep.lowers)
                        for (const auto& hi : rep.uppers)
                            if (!bound_le(lo, hi))
                                rep.violations.push_back("lower bound " + lo.name + " exceeds upper bound " + hi.name);
                    if (!cert.optimal) rep.notes.push_back("base value not proven optimal within budget");
                    ok = ok && rep.ok();
                    out.push_back(to_json(rep));
                }
            }
            std::cout << out.dump(2) << '\n';
            return ok ? exit_ok : exit_check_failed;
        }
        if (*hunt) {
            const Graph f = load_graph(base_path);
            ExperimentOptions opt;
            opt.budget = budget;
            opt.workers = workers;
            opt.timestamp = stamp_now ? utc_now() : stamp;
            const auto records = ratio_experiment(f, folds, trials, seed, opt);
            persist(records, out_path);
            const auto summary = summarize(records, stats(f).regular_degree);
            Json s{{"records", summary.records}, {"non_optimal", summary.non_optimal}};
            if (summary.min_c_obs) {
                s["min_c_obs"] = to_fraction_string(*summary.min_c_obs);
                s["min_c_obs_decimal"] = to_decimal_string(*summary.min_c_obs);
            }
            s["research_events"] = summary.research_events;
            std::cout << s.dump() << '\n';
            for (const auto& ev : summary.research_events)
                std::cerr << "\n*** RESEARCH EVENT *** " << ev << "\n\n";
            return summary.research_events.empty() ? exit_ok : exit_check_failed;
        }
        if (*fix) {
            if (list || fixture_name.empty()) {
                for (const auto& name : fixture_names()) std::cout << name << '\t' << fixture(name).description << '\n';
                return exit_ok;
            }
            const auto fx = fixture(fixture_name);
            const std::string dir = out_dir.empty() ? "." : out_dir;
            if (fx.projection) {
                write_text(dir + "/base.g6", to_graph6(fx.projection->base) + "\n");
                write_text(dir + "/total.g6", to_graph6(fx.projection->total) + "\n");
                std::ostringstream proj;
                write_projection(proj, *fx.projection);
                write_text(dir + "/proj.txt", proj.str());
            } else {
                write_text(dir + "/graph.g6", to_graph6(fx.graph) + "\n");
            }
            return exit_ok;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const GraphError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}
