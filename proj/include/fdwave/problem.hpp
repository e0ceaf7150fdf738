#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fdwave/grid.hpp"

namespace fdw {

enum class EquationKind { Diffusion, Wave };
enum class BCKind { Dirichlet, Robin };

using SpaceTimeFn = std::function<double(double x, double t)>;
using TimeFn = std::function<double(double t)>;
using SpaceFn = std::function<double(double x)>;

// Equation coefficients with the bounds the theorems assume.
struct Coefficients {
    SpaceTimeFn k;
    SpaceTimeFn q;
    SpaceTimeFn f;
    double c1 = 0.0;  // 0 < c1 <= k
    double c2 = 0.0;  // k <= c2            (wave)
    double m1 = 0.0;  // 0 < m1 <= q        (wave)
    double m2 = 0.0;  // q <= m2            (wave)
    double c3 = 0.0;  // |k_t|, |q_t| <= c3 (wave)
};

struct BoundaryCondition {
    BCKind kind = BCKind::Dirichlet;
    TimeFn beta1, beta2, mu1, mu2;  // Robin only
    double beta = 0.0;              // diffusion: |beta_i| <= beta; wave: beta_i >= beta > 0
    double c4 = 0.0;                // wave: |beta_i'| <= c4
};

struct InitialData {
    SpaceFn u0;
    std::optional<SpaceFn> u1;  // wave only
};

struct ProblemSpec {
    EquationKind kind = EquationKind::Diffusion;
    double alpha = 0.5;  // in (0,1); the wave equation acts at order 1+alpha
    double l = 1.0;
    double T = 1.0;
    Coefficients coef;
    BoundaryCondition bc;
    InitialData init;
    std::string name;  // catalog name or file stem, informational

    UniformGrid make_grid(std::size_t nx, std::size_t nt) const {
        return UniformGrid(l, T, nx, nt);
    }
};

// One sampled theorem hypothesis.
struct HypothesisCheck {
    std::string name;
    bool pass = true;
    double worst_value = 0.0;   // the most offending sampled value
    double worst_x = 0.0;
    double worst_t = 0.0;
    double observed_bound = 0.0;  // inferred sharp bound (e.g. min k)
};

struct ValidationReport {
    std::vector<HypothesisCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Samples every hypothesis of the theorem matching (kind, bc kind) on a grid
// 4x finer than the solver grid.  Violations become report entries.
ValidationReport validate(const ProblemSpec& spec, const UniformGrid& grid);

// Built-in manufactured problems: the forcing f is assembled from the exact
// solution via the analytic Caputo rule for polynomial time profiles, so the
// named closed form solves the problem exactly.
struct Manufactured {
    ProblemSpec spec;
    SpaceTimeFn exact;
    SpaceTimeFn exact_dt;  // time derivative of the exact solution
};

Manufactured manufactured(const std::string& name, double alpha);
std::vector<std::string> manufactured_names();

// Problem-file loader (flat key-value format, bracketed sections, expression
// values).  Throws ParseError with file coordinates on malformed input.
ProblemSpec load_problem_file(const std::string& path);

}  // namespace fdw
