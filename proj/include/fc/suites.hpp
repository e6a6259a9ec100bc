/*
 * suites.hpp
 * ----------
 * Named verification suites shared by the command-line tool and the
 * acceptance harness. Every suite returns a CheckReport; a suite
 * passes iff its failure list is empty.
 */
#pragma once

#include <string>
#include <vector>

#include "fc/towers.hpp"

namespace fc {

struct SuiteOptions {
    std::string fixtures_dir = "fixtures";
    int rank = 4;     // classical subscript of the systems under test
    int max_len = 8;  // length ceiling for the enumerating suites
    size_t budget = kDefaultBudget;
};

// Suite names accepted by run_suite, "all" excluded.
std::vector<std::string> suite_names();

// Runs one suite, or every suite in order for "all". Unknown names
// raise DomainError; a missing fixture file raises DomainError too.
CheckReport run_suite(const std::string& name, const SuiteOptions& opt);

// Fixture loader: skips blank lines and '#' comments, maps "-" to the
// empty word. Rows of appendix_a.txt are bare words; rows of the other
// two files are "class|word".
std::vector<std::pair<std::string, std::string>> load_fixture(
    const std::string& path);

} // namespace fc
