#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fdw {

// Uniform space-time mesh on [0,l] x [0,T].  Node positions are defined as
// i*h and n*tau; h and tau are the single source of truth for the geometry.
class UniformGrid {
public:
    UniformGrid(double l, double T, std::size_t nx, std::size_t nt)
        : l_(l), T_(T), nx_(nx), nt_(nt) {
        if (!(l > 0.0)) throw std::invalid_argument("UniformGrid: l must be > 0");
        if (!(T > 0.0)) throw std::invalid_argument("UniformGrid: T must be > 0");
        if (nx < 2) throw std::invalid_argument("UniformGrid: Nx must be >= 2");
        if (nt < 1) throw std::invalid_argument("UniformGrid: Nt must be >= 1");
        h_ = l / static_cast<double>(nx);
        tau_ = T / static_cast<double>(nt);
    }

    double l() const { return l_; }
    double T() const { return T_; }
    std::size_t nx() const { return nx_; }
    std::size_t nt() const { return nt_; }
    double h() const { return h_; }
    double tau() const { return tau_; }

    double x(std::size_t i) const { return static_cast<double>(i) * h_; }
    double t(std::size_t n) const { return static_cast<double>(n) * tau_; }

    bool same_time_axis(const UniformGrid& o) const {
        return nt_ == o.nt_ && tau_ == o.tau_;
    }

private:
    double l_, T_;
    std::size_t nx_, nt_;
    double h_, tau_;
};

// Real-valued samples on the time axis of a grid: values[n] is the sample
// at t_n = n*tau, so there are exactly Nt+1 entries.
class TimeSeries {
public:
    TimeSeries() = default;  // empty state, assign before use

    TimeSeries(const UniformGrid& grid, std::vector<double> values)
        : grid_(&grid), values_(std::move(values)) {
        if (values_.size() != grid.nt() + 1)
            throw std::invalid_argument("TimeSeries: need exactly Nt+1 samples");
    }

    static TimeSeries zeros(const UniformGrid& grid) {
        return TimeSeries(grid, std::vector<double>(grid.nt() + 1, 0.0));
    }

    template <class F>
    static TimeSeries sample(const UniformGrid& grid, F&& f) {
        std::vector<double> v(grid.nt() + 1);
        for (std::size_t n = 0; n < v.size(); ++n) v[n] = f(grid.t(n));
        return TimeSeries(grid, std::move(v));
    }

    const UniformGrid& grid() const { return *grid_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t n) const { return values_[n]; }
    double& operator[](std::size_t n) { return values_[n]; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

private:
    const UniformGrid* grid_ = nullptr;
    std::vector<double> values_;
};

inline void require_same_time_axis(const TimeSeries& a, const TimeSeries& b) {
    if (!a.grid().same_time_axis(b.grid()))
        throw std::invalid_argument("time grids do not match");
}

}  // namespace fdw
