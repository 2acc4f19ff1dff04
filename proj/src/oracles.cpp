#include "lgf/oracles.hpp"

#include <cmath>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

namespace lgf {

double oracle_2d_quadrature(const LatticeConfig& cfg, LatticePoint p, int n_grid) {
    cfg.require_screened();
    if (n_grid < 1) throw std::invalid_argument("oracle_2d_quadrature: n_grid must be >= 1");
    p = canonicalize(p);

    const double a1 = cfg.alpha1();
    const double c2 = cfg.c2();
    double sum = 0.0;
    for (int j = 1; j <= n_grid; ++j) {
        const double x1 = 2.0 * M_PI * j / n_grid - M_PI;
        const double part1 = 2.0 * a1 - 2.0 * a1 * std::cos(x1) + c2;
        const double cn = std::cos(p.n * x1);
        double inner = 0.0;
        for (int k = 1; k <= n_grid; ++k) {
            const double x2 = 2.0 * M_PI * k / n_grid - M_PI;
            inner += std::cos(p.m * x2) / (part1 + 2.0 - 2.0 * std::cos(x2));
        }
        sum += cn * inner;
    }
    return sum / (static_cast<double>(n_grid) * n_grid);
}

TruncatedSolve oracle_truncated_solve(const LatticeConfig& cfg, int radius,
                                      bool difference_mode) {
    if (!cfg.screened() && !difference_mode)
        throw std::invalid_argument("oracle_truncated_solve: c2 = 0 requires difference mode");
    if (radius < 1 || radius > kSolveRadiusCap)
        throw std::invalid_argument("oracle_truncated_solve: radius out of range");

    const int side = 2 * radius + 1;
    const int dim = side * side;
    const double a1 = cfg.alpha1();
    const double diag = cfg.c2() + 2.0 * a1 + 2.0;

    auto idx = [side, radius](int n, int m) { return (n + radius) * side + (m + radius); };

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(dim) * 5);
    for (int n = -radius; n <= radius; ++n) {
        for (int m = -radius; m <= radius; ++m) {
            const int i = idx(n, m);
            trip.emplace_back(i, i, diag);
            if (n > -radius) trip.emplace_back(i, idx(n - 1, m), -a1);
            if (n < radius) trip.emplace_back(i, idx(n + 1, m), -a1);
            if (m > -radius) trip.emplace_back(i, idx(n, m - 1), -1.0);
            if (m < radius) trip.emplace_back(i, idx(n, m + 1), -1.0);
        }
    }
    Eigen::SparseMatrix<double> A(dim, dim);
    A.setFromTriplets(trip.begin(), trip.end());

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
    rhs[idx(0, 0)] = 1.0;

    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(A);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("oracle_truncated_solve: factorization failed");
    Eigen::VectorXd u = solver.solve(rhs);

    std::vector<double> values(u.data(), u.data() + dim);
    if (difference_mode) {
        const double u0 = values[idx(0, 0)];
        for (double& v : values) v -= u0;
    }
    return TruncatedSolve(radius, std::move(values));
}

namespace {

// Composite-Simpson weight for node k of n_intervals (n_intervals even),
// in units of h/3.
double simpson_weight(int k, int n_intervals) {
    if (k == 0 || k == n_intervals) return 1.0;
    return (k % 2 == 1) ? 4.0 : 2.0;
}

// Two-panel composite Simpson on [0, t_max]: the integrand's curvature is
// concentrated near t = 0, so the first panel takes a much finer step than
// the smooth exponential tail. Calls visit(t, weight) for every node.
template <class Visit>
void bessel_nodes(double t_max, int n_nodes, Visit&& visit) {
    const double t_break = std::min(t_max, 64.0);
    int n1 = n_nodes;
    int n2 = 0;
    if (t_break < t_max) {
        n1 = std::max(2, (2 * n_nodes) / 5);
        n2 = std::max(2, n_nodes - n1);
    }
    n1 += n1 % 2;
    n2 += n2 % 2;

    const double h1 = t_break / n1;
    for (int k = 0; k <= n1; ++k) visit(k * h1, simpson_weight(k, n1) * h1 / 3.0);
    if (n2 > 0) {
        const double h2 = (t_max - t_break) / n2;
        for (int k = 0; k <= n2; ++k)
            visit(t_break + k * h2, simpson_weight(k, n2) * h2 / 3.0);
    }
}

// Scaled modified Bessel values e^{-x} I_k(x) for all k = 0..n_max, by one
// Miller downward pass normalized with e^x = I_0 + 2 sum_{k>=1} I_k.
std::vector<double> scaled_bessel_all(int n_max, double x) {
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    const double big = std::max(static_cast<double>(n_max), x);
    const int start = static_cast<int>(big + 15.0 * std::sqrt(big) + 25.0);

    double ip1 = 0.0;   // I_{k+1} (unnormalized)
    double ik = 1e-30;  // I_k
    double norm = 0.0;
    for (int k = start; k >= 1; --k) {
        const double im1 = ip1 + (2.0 * k / x) * ik;
        ip1 = ik;
        ik = im1;
        if (k - 1 <= n_max) out[k - 1] = ik;
        norm += 2.0 * ip1;
        if (std::abs(ik) > 1e270) {  // rescale to dodge overflow
            const double s = 1e-270;
            ip1 *= s;
            ik *= s;
            norm *= s;
            for (double& v : out) v *= s;
        }
    }
    norm += ik;  // I_0 counted once
    for (double& v : out) v /= norm;
    return out;
}

}  // namespace

double scaled_bessel_i(int n, double x) {
    if (n < 0) throw std::invalid_argument("scaled_bessel_i: n must be >= 0");
    if (!(x >= 0.0)) throw std::invalid_argument("scaled_bessel_i: x must be >= 0");
    return scaled_bessel_all(n, x)[n];
}

BesselQuadResult oracle_bessel(const LatticeConfig& cfg, LatticePoint p, double t_max,
                               int n_nodes, double tol_for_flag) {
    cfg.require_screened();
    if (!(t_max > 0.0) || n_nodes < 2)
        throw std::invalid_argument("oracle_bessel: bad quadrature parameters");
    p = canonicalize(p);

    const double a1 = cfg.alpha1();
    const double c2 = cfg.c2();

    // e^{-(lambda+c^2) t} I_n(2 a1 t) I_m(2 t) regrouped into scaled factors
    auto f = [&](double t) {
        return std::exp(-c2 * t) * scaled_bessel_i(p.n, 2.0 * a1 * t) *
               scaled_bessel_i(p.m, 2.0 * t);
    };

    double sum = 0.0;
    bessel_nodes(t_max, n_nodes, [&](double t, double w) { sum += w * f(t); });

    BesselQuadResult r;
    r.value = sum;
    r.tail_bound = std::exp(-c2 * t_max) / c2;
    r.tail_ok = r.tail_bound <= tol_for_flag;
    return r;
}

BesselTableResult oracle_bessel_table(const LatticeConfig& cfg, int n_max, int m_max,
                                      double t_max, int n_nodes, double tol_for_flag) {
    cfg.require_screened();
    if (!(t_max > 0.0) || n_nodes < 2 || n_max < 0 || m_max < 0)
        throw std::invalid_argument("oracle_bessel_table: bad parameters");

    const double a1 = cfg.alpha1();
    const double c2 = cfg.c2();

    BesselTableResult r;
    r.values.assign(static_cast<std::size_t>(m_max) + 1,
                    std::vector<double>(static_cast<std::size_t>(n_max) + 1, 0.0));

    bessel_nodes(t_max, n_nodes, [&](double t, double w) {
        const double decay = std::exp(-c2 * t);
        const std::vector<double> in = scaled_bessel_all(n_max, 2.0 * a1 * t);
        const std::vector<double> im = scaled_bessel_all(m_max, 2.0 * t);
        for (int m = 0; m <= m_max; ++m) {
            const double wm = w * decay * im[m];
            double* row = r.values[m].data();
            for (int n = 0; n <= n_max; ++n) row[n] += wm * in[n];
        }
    });
    r.tail_bound = std::exp(-c2 * t_max) / c2;
    r.tail_ok = r.tail_bound <= tol_for_flag;
    return r;
}

ResidualReport residual_check(const LgfTable& table, const LatticeConfig& cfg) {
    const int l_max = table.l_max();
    const int m_max = table.m_max();
    if (l_max < 2 || m_max < 2)
        throw std::invalid_argument("residual_check: table must be at least 3x3");

    const double a1 = cfg.alpha1();
    const double c2 = cfg.c2();
    // canonical quadrant: neighbors across the axes fold back by symmetry
    auto fetch = [&table](int n, int m) { return table.at(std::abs(n), std::abs(m)); };

    ResidualReport rep;
    for (int n = 0; n < l_max; ++n) {
        for (int m = 0; m < m_max; ++m) {
            const double u = fetch(n, m);
            const double res = c2 * u + a1 * (2.0 * u - fetch(n - 1, m) - fetch(n + 1, m)) +
                               (2.0 * u - fetch(n, m - 1) - fetch(n, m + 1));
            if (n == 0 && m == 0)
                rep.origin_residual_minus_one = std::abs(res - 1.0);
            else
                rep.max_interior_residual = std::max(rep.max_interior_residual, std::abs(res));
        }
    }
    rep.boundary_skipped = (l_max + 1) * (m_max + 1) - l_max * m_max;
    return rep;
}

}  // namespace lgf
