// Command-line front end: queries over single weights and the verification sweeps.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qgl3/serialize.hpp"
#include "qgl3/verify.hpp"

using namespace qgl3;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    int l = 0;
    std::string format = "text";
    bool gl3 = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--l", c.l, "order of the root of unity (>= 2)")->required();
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_flag("--gl3", c.gl3, "read weights as GL3 triples a,b,c");
}

void require_not_dot(const Common& c, const char* what) {
    if (c.format == "dot") throw UsageError(std::string("--format dot is only available for graphs, not ") + what);
}

Weight dominant_arg(const std::string& text, const Common& c) {
    Weight w = parse_weight(text, c.gl3);
    if (!is_dominant(w)) throw DomainError("weight " + to_string(w) + " is not dominant");
    return w;
}

std::string cache_file() {
    const char* dir = std::getenv("QGL3_CACHE_DIR");
    if (!dir || !*dir) return {};
    return (std::filesystem::path(dir) / "simple_chars.json").string();
}

void print_graph(const ModuleGraph& g, const Common& c) {
    if (c.format == "dot") {
        std::cout << to_dot(g);
    } else if (c.format == "json") {
        std::cout << to_json(g).dump(2) << "\n";
    } else {
        for (auto& n : g.nodes)
            std::cout << "node " << n.id << " " << to_string(n.weight) << " layer " << n.layer << "\n";
        for (auto& [u, v] : g.edges) std::cout << "edge " << u << " -> " << v << "\n";
        std::cout << validate_graph(g).to_text();
    }
}

void print_char(const FormalChar& x, const Common& c) {
    if (c.format == "json")
        std::cout << to_json(x).dump() << "\n";
    else
        std::cout << x.to_string() << "\ndimension " << x.dimension() << "\n";
}

std::vector<int> parse_levels(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw UsageError("cannot parse level list '" + text + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters, filtrations and extensions for q-GL3 at an l-th root of unity"};
    app.require_subcommand(1);

    Common common;
    std::string w1, w2, mu_arg, level, char_kind = "weyl", suites_arg, levels_arg;
    int p = 0, box = 2, jobs = 1;
    bool structure = false, factors = false, character = false;

    auto* classify = app.add_subcommand("classify", "facet of a dominant weight");
    add_common(classify, common);
    classify->add_option("lambda", w1)->required();

    auto* chr = app.add_subcommand("char", "characters of a weight");
    add_common(chr, common);
    chr->add_option("lambda", w1)->required();
    chr->add_option("--kind", char_kind, "weyl, simple (p = 0) or chi-l")
        ->check(CLI::IsMember({"weyl", "simple", "chi-l"}));

    auto* decomp = app.add_subcommand("decomp", "good l-filtration factors of nabla(lambda)");
    add_common(decomp, common);
    decomp->add_option("lambda", w1)->required();

    auto* zhat = app.add_subcommand("zhat", "composition factors and structure of Z^(lambda)");
    add_common(zhat, common);
    zhat->add_option("lambda", w1)->required();
    auto* zs = zhat->add_flag("--structure", structure, "submodule structure graph");
    auto* zf = zhat->add_flag("--factors", factors, "composition factors (default)");
    auto* zc = zhat->add_flag("--char", character, "character");
    zs->excludes(zf)->excludes(zc);
    zf->excludes(zc);

    auto* lfilt = app.add_subcommand("lfilt", "good l-filtration of nabla(lambda) as a graph");
    add_common(lfilt, common);
    lfilt->add_option("lambda", w1)->required();

    auto* ext = app.add_subcommand("ext", "first extension groups between simple modules");
    add_common(ext, common);
    ext->add_option("--level", level, "g1, g1b or g")->required()->check(CLI::IsMember({"g1", "g1b", "g"}));
    ext->add_option("alpha", w1)->required();
    ext->add_option("beta", w2)->required();
    ext->add_option("--mu", mu_arg, "weight whose Z^ contains both factors (g1b)");

    auto* hom = app.add_subcommand("hom", "mirror criterion for Hom(nabla(lambda), nabla(mu))");
    add_common(hom, common);
    hom->add_option("lambda", w1)->required();
    hom->add_option("mu", w2)->required();
    hom->add_option("--p", p, "characteristic (0 or a prime)");

    auto* verify = app.add_subcommand("verify", "run verification sweeps");
    verify->add_option("--suites", suites_arg, "comma-separated suite names")->required();
    verify->add_option("--l", levels_arg, "comma-separated levels")->required();
    verify->add_option("--box", box, "classical parts range over {0..box}^2");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--format", common.format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string cache = cache_file();
    if (!cache.empty()) SimpleCharTable::instance().load_file(cache);

    int status = 0;
    try {
        const Common& c = common;
        if (classify->parsed()) {
            require_not_dot(c, "classify");
            Weight lam = dominant_arg(w1, c);
            FacetType f = facet_classify(lam, c.l);
            auto d = decompose(lam, c.l);
            if (c.format == "json") {
                Json pairings;
                for (Root b : kPositiveRoots) pairings[root_name(b)] = pairing(lam, b);
                std::cout << Json{{"lambda", to_json(lam)}, {"l", c.l}, {"facet", facet_name(f)},
                                  {"classical", to_json(d.classical)}, {"restricted", to_json(d.restricted)},
                                  {"pairings", pairings}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "facet " << facet_name(f) << "\nlambda'' " << to_string(d.classical) << "\nlambda' "
                          << to_string(d.restricted) << "\npairings";
                for (Root b : kPositiveRoots) std::cout << " " << root_name(b) << "=" << pairing(lam, b);
                std::cout << "\n";
            }
        } else if (chr->parsed()) {
            require_not_dot(c, "characters");
            require_level(c.l);
            Weight lam = parse_weight(w1, c.gl3);
            if (char_kind == "weyl") print_char(euler_char(lam), c);
            else if (char_kind == "simple") print_char(simple_char_p0(lam, c.l), c);
            else print_char(chi_l(lam, c.l), c);
        } else if (decomp->parsed()) {
            require_not_dot(c, "decompositions");
            Weight lam = dominant_arg(w1, c);
            auto d = chi_decomposition(lam, c.l);
            if (c.format == "json") {
                std::cout << to_json(d).dump(2) << "\n";
            } else {
                std::cout << "case " << d.case_id << " (" << facet_name(d.facet) << ")\n";
                for (std::size_t i = 0; i < d.factors.size(); ++i)
                    std::cout << "mu" << i + 1 << " " << to_string(d.factors[i]) << " dim chi_l "
                              << chi_l(d.factors[i], c.l).dimension() << "\n";
            }
        } else if (zhat->parsed()) {
            require_level(common.l);
            Weight lam = parse_weight(w1, c.gl3);
            if (structure) {
                print_graph(zhat_structure(lam, c.l), c);
            } else if (character) {
                require_not_dot(c, "characters");
                print_char(zhat_char(lam, c.l), c);
            } else {
                require_not_dot(c, "factor lists");
                auto fs = zhat_factors(lam, c.l);
                if (c.format == "json") {
                    Json arr = Json::array();
                    for (Weight w : fs) arr.push_back(to_json(w));
                    std::cout << arr.dump() << "\n";
                } else {
                    for (std::size_t i = 0; i < fs.size(); ++i)
                        std::cout << i + 1 << " " << to_string(fs[i]) << " dim " << lhat_char(fs[i], c.l).dimension()
                                  << "\n";
                }
            }
        } else if (lfilt->parsed()) {
            Weight lam = dominant_arg(w1, c);
            print_graph(nabla_l_filtration(lam, c.l), c);
        } else if (ext->parsed()) {
            require_not_dot(c, "extension groups");
            require_level(c.l);
            Weight a = parse_weight(w1, c.gl3), b = parse_weight(w2, c.gl3);
            if (level != "g1b" && !mu_arg.empty()) throw UsageError("--mu is only used with --level g1b");
            if (level == "g1") {
                ExtValue v = ext1_g1(a, b, c.l);
                if (c.format == "json") std::cout << to_json(v).dump() << "\n";
                else std::cout << v.to_text() << "\n";
            } else {
                int dim = 0;
                if (level == "g1b") {
                    if (mu_arg.empty()) throw UsageError("--level g1b needs --mu");
                    dim = ext1_g1b(parse_weight(mu_arg, c.gl3), a, b, c.l);
                } else {
                    dim = ext1_g(a, b, c.l);
                }
                if (c.format == "json") std::cout << Json{{"dimension", dim}}.dump() << "\n";
                else std::cout << (dim ? "k" : "0") << "\n";
            }
        } else if (hom->parsed()) {
            require_not_dot(c, "homomorphisms");
            Weight lam = dominant_arg(w1, c), mu = dominant_arg(w2, c);
            auto w = hom_exists_mirror(lam, mu, c.l, p);
            if (c.format == "json") {
                std::cout << hom_record(lam, mu, w).dump(2) << "\n";
            } else if (w) {
                std::cout << "witness beta=" << root_name(w->beta) << " m=" << w->m << " e=" << w->e << " (wall "
                          << w->m * wall_step(c.l, p, w->e) << ")\n";
            } else {
                std::cout << "no witness\n";
            }
        } else if (verify->parsed()) {
            VerifyOptions opts;
            std::stringstream ss(suites_arg);
            for (std::string s; std::getline(ss, s, ',');) {
                if (!is_suite_name(s)) throw UsageError("unknown suite '" + s + "'");
                opts.suites.push_back(s);
            }
            opts.levels = parse_levels(levels_arg);
            opts.box = box;
            opts.jobs = jobs;
            opts.on_failure = [](const std::string& suite, const VerifyFailure& f) {
                std::cerr << "FAIL [" << suite << "] " << f.input << ": expected " << f.expected << ", observed "
                          << f.observed << "\n";
            };
            auto reports = run_verify(opts);
            if (c.format == "json") {
                Json out = Json::array();
                for (auto& r : reports) {
                    Json fails = Json::array();
                    for (auto& f : r.failures)
                        fails.push_back({{"input", f.input}, {"expected", f.expected}, {"observed", f.observed}});
                    out.push_back({{"suite", r.suite}, {"cases_run", r.cases_run}, {"failure_count", r.failure_count},
                                   {"failures", fails}});
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (auto& r : reports)
                    std::cout << r.suite << ": " << r.cases_run << " cases, " << r.failure_count << " failures\n";
            }
            for (auto& r : reports)
                if (!r.passed()) status = 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (!cache.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(std::filesystem::path(cache).parent_path(), ec);
        if (!SimpleCharTable::instance().save_file(cache)) std::cerr << "warning: could not write " << cache << "\n";
    }
    return status;
}
