#include "fockps/sweep.hpp"

#include "fockps/infocalc.hpp"
#include "fockps/report.hpp"

#include <cmath>
#include <stdexcept>

namespace fockps {

namespace {

SweepRow eval_point(double mu, double eta, const SweepSpec& spec) {
    SweepRow row;
    row.mu = mu;
    row.eta_L = eta;
    row.delta = spec.delta;
    const SplitPlan plan = solve_split(mu, eta, spec.mode, spec.branch);
    row.z = plan.z;
    row.eta1 = plan.eta1;
    row.chi = holevo_full(mu, spec.delta);
    row.info_I = attack_information({mu, spec.delta, eta}, plan, spec.tail_tol);
    const double bottom = std::min(0.5 * mu, 1.0);
    if (eta <= bottom) {
        row.region = Region::bottom;
    } else if (eta >= top_boundary(mu, spec.delta)) {
        row.region = Region::top;
    } else {
        row.region = Region::middle;
    }
    return row;
}

}  // namespace

AxisScale scale_from_string(const std::string& s) {
    if (s == "linear") return AxisScale::linear;
    if (s == "log") return AxisScale::log;
    throw std::invalid_argument("unknown axis scale: " + s);
}

std::string to_string(AxisScale s) { return s == AxisScale::linear ? "linear" : "log"; }

void SweepSpec::validate() const {
    if (!(mu_min < mu_max) || !(eta_min < eta_max)) {
        throw std::invalid_argument("SweepSpec: min must be below max");
    }
    if (mu_steps < 2 || eta_steps < 2) {
        throw std::invalid_argument("SweepSpec: steps must be >= 2");
    }
    if ((mu_scale == AxisScale::log && mu_min <= 0.0) ||
        (eta_scale == AxisScale::log && eta_min <= 0.0)) {
        throw std::invalid_argument("SweepSpec: log scale requires positive minimum");
    }
    if (!(mu_min > 0.0 && mu_max < 2.0)) {
        throw std::invalid_argument("SweepSpec: mu range outside (0, 2)");
    }
    if (!(eta_min >= 0.0 && eta_max <= 1.0)) {
        throw std::invalid_argument("SweepSpec: eta range outside [0, 1]");
    }
    AttackPoint probe{mu_min, delta, eta_min};
    probe.validate();
    if (!(tail_tol > 0.0)) throw std::invalid_argument("SweepSpec: tail_tol must be > 0");
}

std::vector<double> axis_points(double lo, double hi, int steps, AxisScale scale) {
    if (steps < 2) throw std::invalid_argument("axis_points: steps must be >= 2");
    if (!(lo < hi)) throw std::invalid_argument("axis_points: lo must be below hi");
    if (scale == AxisScale::log && !(lo > 0.0)) {
        throw std::invalid_argument("axis_points: log scale requires lo > 0");
    }
    std::vector<double> pts(steps);
    for (int i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / (steps - 1);
        pts[i] = scale == AxisScale::linear ? lo + (hi - lo) * t
                                            : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * t);
    }
    pts.front() = lo;
    pts.back() = hi;
    return pts;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, Execution exec) {
    spec.validate();
    const std::vector<double> mus = axis_points(spec.mu_min, spec.mu_max, spec.mu_steps, spec.mu_scale);
    const std::vector<double> etas =
        axis_points(spec.eta_min, spec.eta_max, spec.eta_steps, spec.eta_scale);
    const long total = static_cast<long>(mus.size()) * static_cast<long>(etas.size());
    std::vector<SweepRow> rows(total);
    if (exec == Execution::parallel) {
        // dynamic chunks balance the load (the series gets longer with mu);
        // each point writes its own slot, so results stay bit-identical
#pragma omp parallel for schedule(dynamic, 64)
        for (long r = 0; r < total; ++r) {
            rows[r] = eval_point(mus[r / spec.eta_steps], etas[r % spec.eta_steps], spec);
        }
    } else {
        for (long r = 0; r < total; ++r) {
            rows[r] = eval_point(mus[r / spec.eta_steps], etas[r % spec.eta_steps], spec);
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "mu,eta_L,delta,I,chi,region,z,eta1\n";
    for (const SweepRow& r : rows) {
        out += format_sig12(r.mu);
        out += ',';
        out += format_sig12(r.eta_L);
        out += ',';
        out += format_sig12(r.delta);
        out += ',';
        out += format_sig12(r.info_I);
        out += ',';
        out += format_sig12(r.chi);
        out += ',';
        out += to_string(r.region);
        out += ',';
        out += format_sig12(r.z);
        out += ',';
        out += format_sig12(r.eta1);
        out += '\n';
    }
    return out;
}

std::vector<BoundaryRow> run_boundary(double delta, double mu_min, double mu_max,
                                      int steps, Execution exec) {
    if (!(mu_min > 0.0 && mu_min < mu_max && mu_max < 2.0)) {
        throw std::invalid_argument("run_boundary: mu range outside (0, 2)");
    }
    const std::vector<double> mus = axis_points(mu_min, mu_max, steps, AxisScale::linear);
    std::vector<BoundaryRow> rows(mus.size());
    auto eval = [&](long i) {
        BoundaryRow row;
        row.mu = mus[i];
        row.top_eta = top_boundary(mus[i], delta);
        row.bottom_eta = std::min(0.5 * mus[i], 1.0);
        row.iso_eta = iso_info_boundary(delta, mus[i], 0.0);
        return row;
    };
    const long total = static_cast<long>(mus.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long i = 0; i < total; ++i) rows[i] = eval(i);
    } else {
        for (long i = 0; i < total; ++i) rows[i] = eval(i);
    }
    return rows;
}

std::string boundary_csv(const std::vector<BoundaryRow>& rows) {
    std::string out = "mu,top_eta,bottom_eta,iso_eta\n";
    for (const BoundaryRow& r : rows) {
        out += format_sig12(r.mu);
        out += ',';
        out += format_sig12(r.top_eta);
        out += ',';
        out += format_sig12(r.bottom_eta);
        out += ',';
        if (r.iso_eta) out += format_sig12(*r.iso_eta);
        out += '\n';
    }
    return out;
}

}  // namespace fockps
