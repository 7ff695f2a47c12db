#ifndef HSLAB_VERIFY_HPP
#define HSLAB_VERIFY_HPP

#include <hslab/verdict.hpp>

#include <string>
#include <vector>

namespace hslab {

struct VerifyOptions {
    std::string suite = "all";
    int max_n = 5;
    int max_r = 3;
    int threads = 0; // 0: use HSLAB_THREADS, else hardware concurrency
};

// all, permstats, bijections, lattice, closedform, series, tableaux
bool suite_known(const std::string& name);

// Runs every registered identity matching the suite filter. Checks with
// no work under the given bounds still report (vacuous pass). Independent
// checks may run on a worker pool; results come back in registry order.
std::vector<VerdictReport> run_verification(const VerifyOptions& opts);

} // namespace hslab

#endif
