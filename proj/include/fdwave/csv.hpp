#pragma once

#include <cstdint>
#include <string>

#include "fdwave/energy.hpp"
#include "fdwave/solver.hpp"

namespace fdw {

// All numbers are printed with 17 significant digits so identical runs give
// byte-identical files.
std::string format_g17(double v);

// FNV-1a over a canonical description of the spec (name, kind, bounds, grid);
// identifies the producing problem in file metadata.
std::uint64_t spec_hash(const ProblemSpec& spec);

// rows "t, x, u" plus a trailing "##"-prefixed metadata block
std::string solution_to_csv(const SolutionField& field, const ProblemSpec& spec);

// rows "n, t, l2_sq, grad_sq, w21" plus metadata
std::string norms_to_csv(const NormTrace& trace, const SolutionField& field);

// rows "n, t, lhs, rhs, margin" plus the summary block
std::string report_to_csv(const EstimateReport& report);

void write_file(const std::string& path, const std::string& content);

}  // namespace fdw
