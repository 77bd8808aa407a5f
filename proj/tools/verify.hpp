#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqlr/core.hpp"
#include "eqlr/involutions.hpp"

namespace eqlr::verify {

using core::Partition;

struct Case {
    std::string id;
    bool ok = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Case> cases;

    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
};

struct Options {
    int d = 3;
    int n = 0;                   // 0 picks a default per suite
    std::vector<int> max_shape;  // empty picks a default per suite
    std::uint64_t seed = 1;
    int random_cases = 200;
};

const std::vector<std::string>& suite_names();  // without "all"
// Throws DomainError for an unknown name.
SuiteReport run_suite(const std::string& name, const Options& opt);

SuiteReport suite_bialternant(const Options& opt);
SuiteReport suite_lra(const Options& opt);
SuiteReport suite_induction(const Options& opt);
SuiteReport suite_badguys(const Options& opt);
SuiteReport suite_involutions(const Options& opt);
SuiteReport suite_bijection(const Options& opt);
SuiteReport suite_positivity(const Options& opt);
SuiteReport suite_symmetry(const Options& opt);

// Names of the violated properties among: valid, involution, i, ii, iii, iv, v, vi, maps.
std::vector<std::string> s_i_failures(const involutions::HattedTableau& H, int i, const core::Composition& xi);

// Bender-Knuth involution t_i on a reverse tableau without bars, written independently of s_i.
tableaux::BarredTableau bender_knuth(const tableaux::BarredTableau& T, int i);

// Puzzle/tableau counts and round-trips for one (lambda, mu, nu, n); empty detail on success.
Case bijection_case(const Partition& lambda, const Partition& mu, const Partition& nu, int n);

}  // namespace eqlr::verify
