#include "lgf/randomwalk.hpp"

#include <cmath>
#include <random>

#include "lgf/quad1d.hpp"

namespace lgf {

double kappa_rw(const WalkParams& w) {
    return std::sqrt(w.pk() / w.p2());
}

std::vector<double> return_probability(const WalkParams& w,
                                       const std::vector<LatticePoint>& points,
                                       Tolerance tol) {
    // normalize so the up/down direction carries the unit weight; if
    // p1 > p2 the roles of the axes swap and points swap with them
    const bool swapped = w.p1() > w.p2();
    const double q1 = swapped ? w.p2() : w.p1();
    const double q2 = swapped ? w.p1() : w.p2();
    const double alpha1 = q1 / q2;
    const double kappa2 = w.pk() / q2;
    const LatticeConfig cfg(alpha1, kappa2);

    const Tolerance tol_b(std::max(tol.eps() / 10.0, 1e-15));
    auto b_eval = [&](LatticePoint p) {
        return trapezoid_eval(cfg, p, n_quad_points(cfg, tol_b, std::abs(p.n)));
    };

    const double b10 = b_eval({1, 0});
    const double b01 = b_eval({0, 1});
    const double C = 1.0 / (1.0 + (2.0 * q1 / q2) * b10 + 2.0 * b01);

    std::vector<double> rho;
    rho.reserve(points.size());
    for (const LatticePoint& p : points) {
        if (p.n == 0 && p.m == 0) {
            rho.push_back(1.0);  // terminal condition, not the formula
            continue;
        }
        const LatticePoint q = swapped ? canonicalize({p.m, p.n}) : canonicalize(p);
        rho.push_back(C / q2 * b_eval(q));
    }
    return rho;
}

McResult mc_simulate(const WalkParams& w, LatticePoint start, std::int64_t trials,
                     std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("mc_simulate: trials must be >= 1");

    const double p1 = w.p1(), p2 = w.p2();
    const std::int64_t step_cap = static_cast<std::int64_t>(std::ceil(100.0 / w.pk()));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    std::int64_t hits = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        int n = start.n, m = start.m;
        if (n == 0 && m == 0) {
            ++hits;  // already home
            continue;
        }
        for (std::int64_t s = 0; s < step_cap; ++s) {
            const double u = unif(rng);
            if (u < p1)
                ++n;
            else if (u < 2.0 * p1)
                --n;
            else if (u < 2.0 * p1 + p2)
                ++m;
            else if (u < 2.0 * p1 + 2.0 * p2)
                --m;
            else
                break;  // killed
            if (n == 0 && m == 0) {
                ++hits;
                break;
            }
        }
    }

    McResult r;
    r.trials = trials;
    r.estimate = static_cast<double>(hits) / static_cast<double>(trials);
    r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(trials));
    return r;
}

}  // namespace lgf
