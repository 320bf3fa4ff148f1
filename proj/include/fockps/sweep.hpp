#pragma once

#include "fockps/attack.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fockps {

enum class AxisScale { linear, log };
enum class Execution { serial, parallel };

AxisScale scale_from_string(const std::string& s);
std::string to_string(AxisScale s);

/// Grid specification for region maps over (mu, eta_L) at fixed delta.
struct SweepSpec {
    double mu_min = 1e-3;
    double mu_max = 1.0;
    int mu_steps = 100;
    double eta_min = 1e-3;
    double eta_max = 1.0;
    int eta_steps = 100;
    double delta = 0.0;
    SolverMode mode = SolverMode::mandel_approx;
    Branch branch = Branch::plus;
    double tail_tol = 1e-12;
    AxisScale mu_scale = AxisScale::linear;
    AxisScale eta_scale = AxisScale::linear;

    void validate() const;
};

struct SweepRow {
    double mu = 0.0;
    double eta_L = 0.0;
    double delta = 0.0;
    double info_I = 0.0;
    double chi = 0.0;
    Region region = Region::middle;
    double z = 0.0;
    double eta1 = 0.0;
};

std::vector<double> axis_points(double lo, double hi, int steps, AxisScale scale);

/// Evaluates the grid mu-major then eta_L. Grid points are independent, so
/// the OpenMP path writes disjoint slots and is bit-identical to the serial
/// reference regardless of thread count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, Execution exec = Execution::parallel);

/// Header mu,eta_L,delta,I,chi,region,z,eta1; 12 significant digits; LF endings.
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct BoundaryRow {
    double mu = 0.0;
    double top_eta = 0.0;
    double bottom_eta = 0.0;
    std::optional<double> iso_eta;  // empty when I < chi on the whole interval
};

/// Per-mu boundary curves at fixed delta. The iso curve searches from
/// eta_L = 0 so its termination matches the zero-loss critical point.
std::vector<BoundaryRow> run_boundary(double delta, double mu_min, double mu_max,
                                      int steps, Execution exec = Execution::parallel);

std::string boundary_csv(const std::vector<BoundaryRow>& rows);

}  // namespace fockps
