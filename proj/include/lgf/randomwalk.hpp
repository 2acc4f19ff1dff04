#ifndef LGF_RANDOMWALK_HPP
#define LGF_RANDOMWALK_HPP

#include <cstdint>
#include <vector>

#include "lgf/core.hpp"

namespace lgf {

/// Nearest-neighbor walk on Z^2: right/left with probability p1 each,
/// up/down with p2 each, killed (stays forever) with pk = 1 - 2p1 - 2p2.
class WalkParams {
  public:
    WalkParams(double p1, double p2) : p1_(p1), p2_(p2) {
        if (!(p1 > 0.0) || !(p2 > 0.0))
            throw std::invalid_argument("WalkParams: p1, p2 must be > 0");
        if (!(pk() > 0.0))
            throw std::invalid_argument("WalkParams: kill probability must be > 0");
    }

    double p1() const { return p1_; }
    double p2() const { return p2_; }
    double pk() const { return 1.0 - 2.0 * p1_ - 2.0 * p2_; }

  private:
    double p1_, p2_;
};

/// Screening of the equivalent lattice problem: kappa = sqrt(pk / p2).
double kappa_rw(const WalkParams& w);

/// Return probabilities rho(n,m) = (1/p2) C B_kappa(n,m) at the requested
/// points; rho(0,0) = 1 exactly. Axes are swapped internally when p1 > p2
/// so the lattice normalization holds; callers see original coordinates.
std::vector<double> return_probability(const WalkParams& w,
                                       const std::vector<LatticePoint>& points,
                                       Tolerance tol);

struct McResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::int64_t trials = 0;
};

/// Monte Carlo estimate of the probability of reaching the origin before
/// being killed, starting from `start`. Deterministic for a fixed seed.
/// Walks are capped at 100/pk steps (counted as killed; bias ~ e^{-100}).
McResult mc_simulate(const WalkParams& w, LatticePoint start, std::int64_t trials,
                     std::uint64_t seed);

}  // namespace lgf

#endif
