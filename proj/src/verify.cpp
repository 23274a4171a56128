#include "qgl3/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "qgl3/decomp.hpp"
#include "qgl3/ext.hpp"
#include "qgl3/homs.hpp"
#include "qgl3/structure.hpp"
#include "qgl3/translate.hpp"

namespace qgl3 {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"denominator", "dimension", "decomposition", "zhat",
                                                   "translate",   "graphs",    "ext-lemmas",    "homs"};
    return names;
}

bool is_suite_name(const std::string& name) {
    auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<ExtLemmaCase> ext_lemma_cases(int l) {
    std::vector<ExtLemmaCase> out;
    auto add = [&](const char* family, Weight mu, Weight lam, int expected) { out.push_back({family, mu, lam, expected}); };
    for (int r = 0; r <= l - 2; ++r) {
        int s = l - 2 - r;
        add("wall", {r, s}, {2 * l - 1, r}, 1);
        add("wall", {r, s}, {s, 2 * l - 1}, 1);
        add("wall", {r, s}, {l + r, l + s}, l == 3 ? 1 : 0);
        add("wall-neighbour", {l - 1, r}, {r, l + s}, 1);
        add("wall-neighbour", {s, l - 1}, {l + r, s}, 1);
        add("wall-neighbour", {l - 1, r}, {l + s, l - 1}, 0);
        add("wall-neighbour", {s, l - 1}, {l - 1, l + r}, 0);
    }
    for (int r = 0; r <= l - 3; ++r)
        for (int s = 0; r + s <= l - 3; ++s) {
            Weight up{l - s - 2, l - r - 2}, down{r, s};
            for (Weight nu : {Weight{r, s}, Weight{l + s, l - r - s - 3}, Weight{l - r - s - 3, l + r}})
                add("upper-alcove", up, nu, 1);
            for (Weight nu : {Weight{l - s - 2, l - r - 2}, Weight{2 * l - s - 2, l - r - 2}, Weight{l - s - 2, 2 * l - r - 2},
                              Weight{l + r, l + s}})
                add("upper-alcove", up, nu, 0);
            for (Weight nu : {Weight{l - s - 2, l - r - 2}, Weight{l - r - 2, l + r + s + 1}, Weight{l + r + s + 1, l - s - 2}})
                add("lower-alcove", down, nu, 1);
            for (Weight nu : {Weight{r, s}, Weight{l + s, l - r - s - 3}, Weight{l - r - s - 3, l + r},
                              Weight{s, 3 * l - r - s - 3}, Weight{3 * l - r - s - 3, r}, Weight{2 * l - s - 2, 2 * l - r - 2}})
                add("lower-alcove", down, nu, 0);
            add("lower-alcove", down, {l + r, l + s}, l == 3 ? 1 : 0);
        }
    return out;
}

namespace {

using Failures = std::vector<VerifyFailure>;

std::string case_label(int l, Weight lam) { return "l=" + std::to_string(l) + " lambda=" + to_string(lam); }

void expect(Failures& out, bool ok, const std::string& input, const std::string& expected, const std::string& observed) {
    if (!ok) out.push_back({input, expected, observed});
}

std::string dim_text(const FormalChar& x) { return "character of dimension " + std::to_string(x.dimension()); }

Failures check_denominator(int l, Weight lam) {
    Failures f;
    auto in = case_label(l, lam);
    FormalChar w = weyl_char(lam);
    expect(f, alt_weyl_sum(lam + kRho) == w * alt_weyl_sum(kRho), in, "A(lambda+rho) = ch nabla(lambda) * A(rho)",
           "identity fails");
    FormalChar t = weyl_char_tableaux(lam);
    expect(f, t == w, in, "tableaux character equals alternating-sum character", dim_text(t) + " vs " + dim_text(w));
    return f;
}

Failures check_dimension(int l, Weight lam) {
    Failures f;
    auto in = case_label(l, lam);
    std::int64_t formula = std::int64_t(lam.a + 1) * (lam.b + 1) * (lam.a + lam.b + 2) / 2;
    std::int64_t d = weyl_char(lam).dimension();
    expect(f, d == formula && weyl_dimension(lam) == formula, in, "dim nabla = " + std::to_string(formula),
           std::to_string(d));
    std::int64_t z = zhat_char(lam, l).dimension();
    expect(f, z == std::int64_t(l) * l * l, in, "dim Z^ = " + std::to_string(l * l * l), std::to_string(z));
    return f;
}

Failures check_decomposition(int l, Weight lam) {
    Failures f;
    auto in = case_label(l, lam);
    auto d = chi_decomposition(lam, l);
    FormalChar sum;
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
        FormalChar c = chi_l(d.factors[i], l);
        sum += c;
        expect(f, d.nonzero[i] == !c.empty(), in, "nonzero flag of " + to_string(d.factors[i]) + " matches chi_l",
               d.nonzero[i] ? "flagged nonzero" : "flagged zero");
    }
    FormalChar w = weyl_char(lam);
    expect(f, sum == w, in, "sum of chi_l over factors = ch nabla(lambda)", dim_text(sum) + " vs " + dim_text(w));
    return f;
}

Failures check_zhat(int l, Weight lam) {
    Failures f;
    auto in = case_label(l, lam);
    FormalChar sum;
    for (Weight nu : zhat_factors(lam, l)) sum += lhat_char(nu, l);
    FormalChar z = zhat_char(lam, l);
    expect(f, sum == z, in, "sum of simple G1B characters = ch Z^(lambda)", dim_text(sum) + " vs " + dim_text(z));
    expect(f, sum.dimension() == std::int64_t(l) * l * l, in, "dimension l^3", std::to_string(sum.dimension()));
    return f;
}

Failures check_translate(int l, Weight lam) {
    Failures f;
    auto in = case_label(l, lam);
    // Onto-wall: translating each factor reproduces the Euler character of the wall weight.
    auto canon = canonicalize(lam, l);
    auto lam_facet = facet_of(canon.rep, l);
    auto d = chi_decomposition(lam, l);
    for (int x = -1; x < l; ++x)
        for (int y = -1; y < l; ++y) {
            Weight m{x, y};
            if (m == canon.rep || !in_closed_fundamental_alcove(m, l) || !lam_facet.in_closure(m)) continue;
            FormalChar sum;
            for (Weight nu : d.factors)
                if (auto r = translate_onto_wall(nu, canon.rep, m, l); r.output) sum += chi_l(*r.output, l);
            Weight target = apply_inverse(canon.word, m);
            FormalChar expected = euler_char(target);
            expect(f, sum == expected, in + " onto " + to_string(m), "chi(" + to_string(target) + ")",
                   dim_text(sum) + " vs " + dim_text(expected));
        }
    // Off-wall: the generic crossing below lam.
    if (auto mu = generic_wall_weight(lam, l)) {
        auto c = translate_nabla_off_wall(lam, *mu, l);
        std::size_t want = l == 2 ? 8 : 18;
        expect(f, c.factor_count() == want, in + " mu=" + to_string(*mu), std::to_string(want) + " translated factors",
               std::to_string(c.factor_count()));
        FormalChar expected = weyl_char(lam) + euler_char(apply(c.wall, lam));
        FormalChar got = c.character();
        expect(f, got == expected, in + " mu=" + to_string(*mu), "ch nabla(lambda) + chi(s.lambda)",
               dim_text(got) + " vs " + dim_text(expected));
    }
    return f;
}

Failures check_graphs(int l, Weight lam) {
    Failures f;
    auto in = case_label(l, lam);
    for (auto& g : {zhat_structure(lam, l), nabla_l_filtration(lam, l)}) {
        auto rep = validate_graph(g);
        for (auto& c : rep.checks)
            expect(f, !c.applicable || c.passed, in + " " + node_kind_name(g.kind), "check '" + c.name + "' passes",
                   c.detail);
    }
    // Filtration nodes are the nonzero factors, less pairs of virtual terms that cancel.
    auto d = chi_decomposition(lam, l);
    auto g = nabla_l_filtration(lam, l);
    std::vector<Weight> nodes, effective;
    for (auto& n : g.nodes) nodes.push_back(n.weight);
    FormalChar dropped;
    auto eff = d.effective_indices();
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
        if (std::find(eff.begin(), eff.end(), i) != eff.end())
            effective.push_back(d.factors[i]);
        else if (d.nonzero[i])
            dropped += chi_l(d.factors[i], l);
    }
    std::sort(nodes.begin(), nodes.end());
    std::sort(effective.begin(), effective.end());
    expect(f, nodes == effective, in, "filtration nodes are the effective factors", std::to_string(nodes.size()) + " nodes");
    expect(f, dropped.empty(), in, "omitted nonzero factors cancel", dim_text(dropped));
    return f;
}

Failures check_homs(int l, Weight lam) {
    Failures f;
    auto in = case_label(l, lam);
    int box = std::max(lam.a, lam.b);
    for (int p : {0, 2, 3}) {
        std::string inp = in + " p=" + std::to_string(p);
        for (auto& [mu, w] : enumerate_hom_targets(lam, l, p, box)) {
            std::string pair = inp + " mu=" + to_string(mu);
            expect(f, mu != lam, pair, "no witness for mu = lambda", "witness found");
            expect(f, witness_valid(lam, mu, w, l, p), pair, "witness satisfies both conditions", "invalid witness");
            expect(f, !hom_exists_mirror(mu, lam, l, p), pair, "predicate is antisymmetric", "fires both ways");
            expect(f, p > 0 || w.e == 0, pair, "e = 0 at p = 0", "e = " + std::to_string(w.e));
        }
    }
    auto [cl, rs] = decompose(lam, l);
    if (restricted_facet(rs, l) == FacetType::DownAlcove && cl.a >= 1 && cl.b >= 1) {
        Weight head = zhat_head_weight(lam, l);
        auto w = hom_exists_mirror(lam, head, l, 0);
        expect(f, w && w->beta == Root::Rho && w->e == 0, in + " head=" + to_string(head), "rho-witness with e = 0",
               w ? std::string(root_name(w->beta)) + " e=" + std::to_string(w->e) : "none");
    }
    return f;
}

Failures check_ext_lemma(int l, const ExtLemmaCase& c) {
    Failures f;
    int got = ext1_g(c.mu, c.lam, l);
    expect(f, got == c.expected,
           "l=" + std::to_string(l) + " " + c.family + " Ext(L" + to_string(c.mu) + ", L" + to_string(c.lam) + ")",
           std::to_string(c.expected), std::to_string(got));
    return f;
}

struct WorkItem {
    std::size_t report;
    int l;
    Weight lam;
    int lemma = -1;  // index into the ext-lemma cases for l
};

}  // namespace

std::vector<VerifyReport> run_verify(const VerifyOptions& opts) {
    for (auto& s : opts.suites)
        if (!is_suite_name(s)) throw DomainError("unknown suite '" + s + "'");
    for (int l : opts.levels) require_level(l);
    if (opts.box < 0) throw DomainError("box must be non-negative");

    std::vector<VerifyReport> reports;
    std::vector<WorkItem> work;
    std::map<int, std::vector<ExtLemmaCase>> lemma_cases;
    for (auto& s : opts.suites) {
        std::size_t idx = reports.size();
        reports.push_back({s, 0, 0, {}});
        for (int l : opts.levels) {
            if (s == "ext-lemmas") {
                auto& cases = lemma_cases.try_emplace(l, ext_lemma_cases(l)).first->second;
                for (std::size_t i = 0; i < cases.size(); ++i) work.push_back({idx, l, {}, int(i)});
                continue;
            }
            for (int A = 0; A <= opts.box; ++A)
                for (int B = 0; B <= opts.box; ++B)
                    for (int r = 0; r < l; ++r)
                        for (int t = 0; t < l; ++t) work.push_back({idx, l, {l * A + r, l * B + t}});
        }
    }

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < work.size();) {
            const WorkItem& w = work[i];
            const std::string& suite = reports[w.report].suite;
            Failures found;
            try {
                if (suite == "denominator") found = check_denominator(w.l, w.lam);
                else if (suite == "dimension") found = check_dimension(w.l, w.lam);
                else if (suite == "decomposition") found = check_decomposition(w.l, w.lam);
                else if (suite == "zhat") found = check_zhat(w.l, w.lam);
                else if (suite == "translate") found = check_translate(w.l, w.lam);
                else if (suite == "graphs") found = check_graphs(w.l, w.lam);
                else if (suite == "homs") found = check_homs(w.l, w.lam);
                else found = check_ext_lemma(w.l, lemma_cases.at(w.l)[std::size_t(w.lemma)]);
            } catch (const std::exception& e) {
                found.push_back({case_label(w.l, w.lam), "no exception", e.what()});
            }
            std::lock_guard lock(mu);
            auto& rep = reports[w.report];
            ++rep.cases_run;
            for (auto& x : found) {
                ++rep.failure_count;
                if (opts.on_failure) opts.on_failure(suite, x);
                if (rep.failures.size() < opts.kept_failures) rep.failures.push_back(std::move(x));
            }
        }
    };
    int jobs = std::max(1, opts.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return reports;
}

}  // namespace qgl3
