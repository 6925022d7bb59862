// Command line surface: root-system enumerations, covariant export,
// configuration evaluation and the named verification suites.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coble/verify.hpp"

namespace {

using namespace coble;

constexpr const char* kCacheVersion = "v1";

std::filesystem::path cache_dir_or_default(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("COBLE_CACHE_DIR")) return env;
    return ".coble-cache";
}

std::vector<RootSubsystem> enumerate_with_cache(
    const LatticePtr& lat, const std::string& type,
    const std::filesystem::path& dir) {
    std::filesystem::path file =
        dir / ("subsystems_d" + std::to_string(lat->degree()) + "_" + type +
               "_" + kCacheVersion + ".json");
    if (std::filesystem::exists(file)) {
        return subsystems_from_json(*lat, load_json(file.string()));
    }
    auto subs = enumerate_subsystems(lat, type);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec) save_json(file.string(), subsystems_to_json(*lat, type, subs));
    return subs;
}

int cmd_roots(int d, const std::string& type, bool split_s7, bool as_json,
              const std::string& out, const std::string& cache_flag) {
    auto lat = build_lattice(d);
    Json j;
    j["d"] = d;
    j["n"] = lat->n();
    j["roots"] = lat->root_count();
    if (!as_json)
        std::cout << "degree " << d << ": " << lat->root_count()
                  << " roots in rank " << lat->n() << "\n";
    if (!type.empty()) {
        auto subs =
            enumerate_with_cache(lat, type, cache_dir_or_default(cache_flag));
        j["type"] = type;
        j["subsystems"] = subs.size();
        if (as_json) {
            Json arr = Json::array();
            for (auto& s : subs) {
                Json roots = Json::array();
                for (RootIndex r : s.roots) roots.push_back(lat->root(r));
                arr.push_back(std::move(roots));
            }
            j["subsystem_roots"] = std::move(arr);
        } else {
            std::cout << "subsystems of type " << type << ": " << subs.size()
                      << "\n";
        }
        if (split_s7) {
            if (lat->n() != 7 || type != "7A1") {
                std::cerr << "--split-s7 applies to `roots 2 --type 7A1`\n";
                return 2;
            }
            auto split = s7_orbit_split(*lat, subs);
            j["split"] = {{"type_a", split.type_a.size()},
                          {"type_b", split.type_b.size()}};
            if (!as_json)
                std::cout << "index-permutation orbits: "
                          << split.type_a.size() << " / "
                          << split.type_b.size() << "\n";
        }
    }
    if (as_json) std::cout << j.dump(2) << "\n";
    if (!out.empty()) save_json(out, j);
    return 0;
}

int cmd_covariants(int d, const std::string& out, bool as_json) {
    auto cs = coble_basis(d);
    Json j = coble_space_to_json(cs);
    if (!out.empty()) save_json(out, j);
    if (as_json) {
        Json summary{{"d", cs.d},
                     {"degree", cs.covariant_degree()},
                     {"count", cs.covariants.size()},
                     {"dimension", cs.dimension}};
        std::cout << summary.dump(2) << "\n";
    } else {
        std::cout << "degree " << cs.covariant_degree() << ", count "
                  << cs.covariants.size() << ", dimension " << cs.dimension
                  << "\n";
    }
    return 0;
}

Json eval_one(int d, const PointConfig<Rat>& pts) {
    auto gen = genericity_check(pts);
    auto vec = covariant_vector(pts, d);
    Json j;
    j["d"] = d;
    Json gj;
    gj["generic"] = gen.generic();
    Json tri = Json::array();
    for (auto& t : gen.collinear_triples) tri.push_back(t);
    gj["collinear_triples"] = std::move(tri);
    Json con = Json::array();
    for (auto& s : gen.conic_sextuples) con.push_back(s);
    gj["conic_sextuples"] = std::move(con);
    j["genericity"] = std::move(gj);
    j["all_zero"] = vec.all_zero;
    Json vals = Json::array();
    for (auto& v : vec.values) vals.push_back(to_string(v));
    j["vector"] = std::move(vals);
    return j;
}

int cmd_eval(int d, const std::string& config_path,
             const std::vector<std::string>& compare, bool as_json) {
    if (!compare.empty()) {
        if (compare.size() != 2) {
            std::cerr << "--compare needs two files\n";
            return 2;
        }
        auto a = config_from_json(load_json(compare[0]));
        auto b = config_from_json(load_json(compare[1]));
        auto va = covariant_vector(a, d);
        auto vb = covariant_vector(b, d);
        bool prop = proportional(va.values, vb.values);
        Json j{{"d", d}, {"proportional", prop}};
        std::cout << (as_json ? j.dump(2)
                              : std::string(prop ? "proportional"
                                                 : "not proportional"))
                  << "\n";
        return 0;
    }
    if (config_path.empty()) {
        std::cerr << "eval needs a configuration file or --compare\n";
        return 2;
    }
    auto pts = config_from_json(load_json(config_path));
    if (static_cast<int>(pts.size()) != 9 - d) {
        std::cerr << "expected " << 9 - d << " points for degree " << d << "\n";
        return 2;
    }
    Json j = eval_one(d, pts);
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (j["genericity"]["generic"].get<bool>()
                          ? "generic configuration"
                          : "degenerate configuration")
                  << "; vector of length " << j["vector"].size()
                  << (j["all_zero"].get<bool>() ? " (all zero)" : "") << "\n";
        for (auto& v : j["vector"]) std::cout << v.get<std::string>() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, bool as_json, int jobs,
               unsigned seed) {
    VerifyContext ctx(VerifyOptions{jobs, seed});
    std::vector<VerificationReport> reports;
    bool found = false;
    for (auto& [name, fn] : suite_registry()) {
        if (suite == "all" || suite == name) {
            found = true;
            reports.push_back(fn(ctx));
        }
    }
    if (!found) {
        std::cerr << "unknown suite '" << suite << "'; available:";
        for (auto& [name, fn] : suite_registry()) std::cerr << " " << name;
        std::cerr << " all\n";
        return 2;
    }
    bool all_pass = true;
    if (as_json) {
        Json arr = Json::array();
        for (auto& r : reports) {
            arr.push_back(r.to_json());
            all_pass = all_pass && r.passed();
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (auto& r : reports) {
            all_pass = all_pass && r.passed();
            std::cout << "suite " << r.suite << ": "
                      << (r.passed() ? "pass" : "FAIL") << " (" << r.millis
                      << " ms)\n";
            for (auto& c : r.checks)
                std::cout << "  [" << (c.status == Check::Pass   ? "pass"
                                       : c.status == Check::Fail ? "FAIL"
                                                                 : "skip")
                          << "] " << c.name << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coble covariants of Del Pezzo surfaces: enumeration, "
                 "evaluation and verification"};
    app.require_subcommand(1);

    int d = 3;
    std::string type, out, cache_dir, config_path, suite;
    std::vector<std::string> compare;
    bool as_json = false, split_s7 = false;
    int jobs = 1;
    unsigned seed = 20240817;

    auto* roots = app.add_subcommand("roots", "enumerate roots and subsystems");
    roots->add_option("d", d, "Del Pezzo degree (2..5)")->required();
    roots->add_option("--type", type, "subsystem Cartan type, e.g. 3A2");
    roots->add_flag("--split-s7", split_s7,
                    "split 7A1 systems under index permutations");
    roots->add_flag("--json", as_json);
    roots->add_option("--out", out);
    roots->add_option("--cache-dir", cache_dir);

    auto* cov = app.add_subcommand("covariants", "export a Coble space");
    cov->add_option("d", d)->required();
    cov->add_option("--out", out);
    cov->add_flag("--json", as_json);

    auto* ev = app.add_subcommand("eval", "evaluate covariants on points");
    ev->add_option("d", d)->required();
    ev->add_option("config", config_path, "configuration JSON");
    ev->add_option("--compare", compare, "two configuration files")
        ->expected(2);
    ev->add_flag("--json", as_json);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "suite name or 'all'")->required();
    ver->add_flag("--json", as_json);
    ver->add_option("--jobs", jobs, "parallel workers");
    ver->add_option("--seed", seed, "seed for sampled checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (roots->parsed())
            return cmd_roots(d, type, split_s7, as_json, out, cache_dir);
        if (cov->parsed()) return cmd_covariants(d, out, as_json);
        if (ev->parsed()) return cmd_eval(d, config_path, compare, as_json);
        if (ver->parsed()) return cmd_verify(suite, as_json, jobs, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
