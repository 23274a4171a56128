#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qgl3/lattice.hpp"

namespace qgl3 {

struct VerifyFailure {
    std::string input;
    std::string expected;
    std::string observed;
};

struct VerifyReport {
    std::string suite;
    long cases_run = 0;
    long failure_count = 0;
    std::vector<VerifyFailure> failures;  // the first few, see VerifyOptions::kept_failures

    bool passed() const { return failure_count == 0; }
};

struct VerifyOptions {
    std::vector<std::string> suites;
    std::vector<int> levels;
    int box = 2;
    int jobs = 1;
    std::size_t kept_failures = 50;
    /// Called as each failure is found, serialized across workers.
    std::function<void(const std::string& suite, const VerifyFailure&)> on_failure;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs each suite over l in levels and lam = l*lam'' + lam' with lam'' in {0..box}^2, lam' in X1.
std::vector<VerifyReport> run_verify(const VerifyOptions& opts);

/// Published values of Ext^1_G(L(mu), L(lam)) over the small-weight families.
struct ExtLemmaCase {
    std::string family;
    Weight mu;
    Weight lam;
    int expected;
};

std::vector<ExtLemmaCase> ext_lemma_cases(int l);

}  // namespace qgl3
