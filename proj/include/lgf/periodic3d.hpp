#ifndef LGF_PERIODIC3D_HPP
#define LGF_PERIODIC3D_HPP

#include <vector>

#include "lgf/core.hpp"

namespace lgf {

/// Grid spacings for the 3D Poisson problem, periodic in direction 3 with
/// n_p nodes per period and unbounded in directions 1 and 2.
class Periodic3DConfig {
  public:
    Periodic3DConfig(double dx1, double dx2, double dx3, int n_p);

    double dx1() const { return dx1_; }
    double dx2() const { return dx2_; }
    double dx3() const { return dx3_; }
    int n_p() const { return n_p_; }

    // Per-mode 2D problem, normalized so the larger in-plane weight is 1.
    // axes_swapped() reports whether directions 1 and 2 were exchanged to
    // keep alpha1 <= 1.
    double alpha1() const { return alpha1_; }
    double alpha3() const { return alpha3_; }
    bool axes_swapped() const { return swapped_; }
    double normalizer() const { return a_norm_; }  // weight divided out, 1/dx^2

  private:
    double dx1_, dx2_, dx3_;
    int n_p_;
    double alpha1_, alpha3_, a_norm_;
    bool swapped_;
};

/// kappa(k) = sqrt(2 alpha3 (1 - cos(2 pi k / n_p))); the screening of
/// Fourier mode k of the periodic direction.
double kappa_mode(int k, const Periodic3DConfig& cfg3d);

/// Pointwise mode sum G(n1,n2,n3). The k = 0 mode uses the difference LGF
/// B_0(n,m) - B_0(0,0), so G carries an arbitrary additive constant.
double lgf3d_periodic(int n1, int n2, int n3, const Periodic3DConfig& cfg3d, Tolerance tol);

struct Grid3 {
    int n1 = 0, n2 = 0, np = 0;
    std::vector<double> v;  // index (i1 * n2 + i2) * np + i3

    double& at(int i1, int i2, int i3) {
        return v[(static_cast<std::size_t>(i1) * n2 + i2) * np + i3];
    }
    double at(int i1, int i2, int i3) const {
        return v[(static_cast<std::size_t>(i1) * n2 + i2) * np + i3];
    }
};

Grid3 make_grid(int n1, int n2, int np);

/// G(d1, d2, d3) on d1 in [-(n1-1), n1-1], d2 likewise, d3 in [0, np).
/// Batch-evaluated: FFT rows per mode, difference LGF for the zero mode.
class Lgf3Table {
  public:
    Lgf3Table(const Periodic3DConfig& cfg3d, int n1, int n2, Tolerance tol);

    double at(int d1, int d2, int d3) const;
    int n1() const { return n1_; }
    int n2() const { return n2_; }
    int np() const { return np_; }

  private:
    int n1_, n2_, np_;
    std::vector<double> v_;  // canonical quadrant (n1) x (n2) x np
};

/// Discrete convolution of the source with the 3D LGF (circular in the
/// periodic direction, zero-padded FFT in the unbounded ones). The result
/// inherits the zero mode's additive-constant convention.
Grid3 solve_poisson3d(const Grid3& source, const Periodic3DConfig& cfg3d, Tolerance tol);

struct ConvergenceLevel {
    int n1, n2, np;
    double dx2;
    double max_error;  // vs the analytic solution, mean-matched
};

struct ConvergenceResult {
    std::vector<ConvergenceLevel> levels;
    double slope;  // fitted log(err) vs log(dx2)
};

/// Refinement study for -lap(phi) = f with
/// phi = exp(-64 x^2 - 4 y^2) / (2 - cos z) on [-1,1] x [-4,4] x [0,2pi],
/// dx3/dx2 = 2 pi held fixed, dx1/dx2 = ratio held fixed within a series.
ConvergenceResult convergence_study(double dx1_over_dx2, int coarsest_np, int n_levels,
                                    Tolerance tol);

}  // namespace lgf

#endif
