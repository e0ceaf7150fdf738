#include "fdwave/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fdw {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t spec_hash(const ProblemSpec& spec) {
    std::ostringstream os;
    os << spec.name << '|' << (spec.kind == EquationKind::Wave ? 'w' : 'd') << '|'
       << (spec.bc.kind == BCKind::Robin ? 'r' : 'd') << '|' << format_g17(spec.alpha)
       << '|' << format_g17(spec.l) << '|' << format_g17(spec.T) << '|'
       << format_g17(spec.coef.c1) << '|' << format_g17(spec.coef.c2) << '|'
       << format_g17(spec.coef.m1) << '|' << format_g17(spec.coef.m2);
    const std::string s = os.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

void metadata(std::ostringstream& os, const SolutionField& field,
              const ProblemSpec& spec) {
    const UniformGrid& g = field.grid();
    os << "## nx = " << g.nx() << "\n";
    os << "## nt = " << g.nt() << "\n";
    os << "## l = " << format_g17(g.l()) << "\n";
    os << "## T = " << format_g17(g.T()) << "\n";
    os << "## alpha = " << format_g17(field.alpha()) << "\n";
    os << "## kind = " << (field.kind() == EquationKind::Wave ? "wave" : "diffusion")
       << "\n";
    os << "## bc = " << (field.bc_kind() == BCKind::Robin ? "robin" : "dirichlet")
       << "\n";
    os << "## scheme = " << field.scheme() << "\n";
    os << "## spec_hash = " << spec_hash(spec) << "\n";
}

}  // namespace

std::string solution_to_csv(const SolutionField& field, const ProblemSpec& spec) {
    std::ostringstream os;
    os << "# t, x, u\n";
    const UniformGrid& g = field.grid();
    for (std::size_t n = 0; n <= g.nt(); ++n)
        for (std::size_t i = 0; i <= g.nx(); ++i)
            os << format_g17(g.t(n)) << ", " << format_g17(g.x(i)) << ", "
               << format_g17(field(n, i)) << "\n";
    metadata(os, field, spec);
    return os.str();
}

std::string norms_to_csv(const NormTrace& trace, const SolutionField& field) {
    std::ostringstream os;
    os << "# n, t, l2_sq, grad_sq, w21\n";
    const UniformGrid& g = field.grid();
    for (std::size_t n = 0; n <= g.nt(); ++n)
        os << n << ", " << format_g17(g.t(n)) << ", " << format_g17(trace.l2_sq[n])
           << ", " << format_g17(trace.grad_sq[n]) << ", " << format_g17(trace.w21[n])
           << "\n";
    os << "## scheme = " << field.scheme() << "\n";
    return os.str();
}

std::string report_to_csv(const EstimateReport& report) {
    std::ostringstream os;
    os << "# n, t, lhs, rhs, margin\n";
    const UniformGrid& g = report.lhs.grid();
    for (std::size_t n = 0; n <= g.nt(); ++n)
        os << n << ", " << format_g17(g.t(n)) << ", " << format_g17(report.lhs[n])
           << ", " << format_g17(report.rhs[n]) << ", "
           << format_g17(report.rhs[n] - report.lhs[n]) << "\n";
    os << "## name = " << report.name << "\n";
    os << "## constant_used = " << format_g17(report.constant_used) << "\n";
    os << "## empirical_constant = " << format_g17(report.empirical_constant) << "\n";
    os << "## min_margin = " << format_g17(report.min_margin) << "\n";
    os << "## tol_report = " << format_g17(report.tol_report) << "\n";
    os << "## pass = " << (report.pass ? "true" : "false") << "\n";
    if (report.hypothesis_pass)
        os << "## hypothesis_pass = " << (*report.hypothesis_pass ? "true" : "false")
           << "\n";
    if (report.printed_min_margin)
        os << "## printed_form_min_margin = " << format_g17(*report.printed_min_margin)
           << "\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fdw
