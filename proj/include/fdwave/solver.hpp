#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fdwave/grid.hpp"
#include "fdwave/problem.hpp"

namespace fdw {

// Discrete solution u(x_i, t_n), row-major in time: values[n*(Nx+1) + i].
class SolutionField {
public:
    SolutionField(const UniformGrid& grid, EquationKind kind, BCKind bc,
                  double alpha, std::string scheme)
        : grid_(grid),
          kind_(kind),
          bc_(bc),
          alpha_(alpha),
          scheme_(std::move(scheme)),
          values_((grid.nt() + 1) * (grid.nx() + 1), 0.0) {}

    const UniformGrid& grid() const { return grid_; }
    EquationKind kind() const { return kind_; }
    BCKind bc_kind() const { return bc_; }
    double alpha() const { return alpha_; }
    const std::string& scheme() const { return scheme_; }

    double operator()(std::size_t n, std::size_t i) const {
        return values_[n * (grid_.nx() + 1) + i];
    }
    double& at(std::size_t n, std::size_t i) {
        return values_[n * (grid_.nx() + 1) + i];
    }
    const double* row(std::size_t n) const {
        return values_.data() + n * (grid_.nx() + 1);
    }
    double* row(std::size_t n) { return values_.data() + n * (grid_.nx() + 1); }

    const std::vector<double>& values() const { return values_; }

private:
    UniformGrid grid_;
    EquationKind kind_;
    BCKind bc_;
    double alpha_;
    std::string scheme_;
    std::vector<double> values_;
};

// Tridiagonal system; arrays are aligned to indices 0..Nx.
struct TridiagonalSystem {
    std::vector<double> sub, diag, sup, rhs;

    explicit TridiagonalSystem(std::size_t n)
        : sub(n, 0.0), diag(n, 0.0), sup(n, 0.0), rhs(n, 0.0) {}
    std::size_t size() const { return diag.size(); }

    // min over rows of |diag| - |sub| - |sup|
    double dominance_margin() const;
};

// Thomas elimination; throws std::runtime_error naming the row on a zero or
// denormal pivot.  Does not modify the input.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

// Numerical failure inside a time-stepping loop.
struct SolverError : std::runtime_error {
    SolverError(const std::string& msg, std::size_t step)
        : std::runtime_error(msg + " at time step " + std::to_string(step)),
          step(step) {}
    std::size_t step;
};

// Thrown when validate() rejects the problem's hypotheses.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fully implicit scheme for the fractional diffusion problem: L1 Caputo
// history, conservative second-order flux with midpoint k, coefficients at
// the new time level; Robin rows by the half-cell balance.
SolutionField solve_diffusion(const ProblemSpec& spec, const UniformGrid& grid);

// Scheme for the fractional wave problem: order-alpha L1 acting on the
// backward-difference velocity chain (w^{-1/2} = u1), which is centered at
// t_{n-1/2}, so the spatial operator acts on (u^n + u^{n-1})/2 with
// coefficients and forcing at t_{n-1/2}.  One tridiagonal solve per step.
SolutionField solve_wave(const ProblemSpec& spec, const UniformGrid& grid);

}  // namespace fdw
