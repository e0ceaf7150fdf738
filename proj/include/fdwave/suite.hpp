#pragma once

#include <string>
#include <vector>

namespace fdw::suite {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::vector<std::string> details;
};

struct Options {
    // scales every tolerance; 0 turns each check into a strict-equality
    // gate and is the documented way to force failures
    double tol_scale = 1.0;
    // run only criteria whose name contains this substring (empty: all)
    std::string only;
    // when nonempty, per-criterion CSV artifacts are written here
    std::string out_dir;
};

std::vector<CriterionResult> run(const Options& opt);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace fdw::suite
