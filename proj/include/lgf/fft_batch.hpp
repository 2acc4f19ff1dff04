#ifndef LGF_FFT_BATCH_HPP
#define LGF_FFT_BATCH_HPP

#include <cstdint>
#include <vector>

#include "lgf/core.hpp"
#include "lgf/quad1d.hpp"

namespace lgf {

/// One tabulated row B_c(0..L, m) with the inputs needed to reproduce it.
struct LgfRow {
    int m = 0;
    std::vector<double> values;  // indexed by n = 0..L
    double alpha1 = 0.0;
    double c2 = 0.0;
    double eps = 0.0;
    int n_pts_used = 0;
    MethodChoice method;
};

/// Rows m = 0..m_max, each of length L+1.
struct LgfTable {
    std::vector<LgfRow> rows;

    int m_max() const { return static_cast<int>(rows.size()) - 1; }
    int l_max() const { return rows.empty() ? -1 : static_cast<int>(rows[0].values.size()) - 1; }
    double at(int n, int m) const { return rows[m].values[n]; }
};

/// Sample cap for one inverse transform (2 N_pts real outputs).
inline constexpr std::int64_t kFftSampleCapDefault = std::int64_t{1} << 30;

/// Evaluates B_c(n, m) for n = 0..L in one inverse real FFT of output
/// length 2 N_pts, including the Nyquist correction (-1)^n f(pi)/(2 N_pts).
/// Throws std::length_error when 2 N_pts would exceed sample_cap.
LgfRow batch_row(const LatticeConfig& cfg, int m, int L, Tolerance tol,
                 double delta = kDeltaDefault,
                 std::int64_t sample_cap = kFftSampleCapDefault);

/// Same transform with the Nyquist correction dropped; exists only as a
/// regression target for the correction's necessity.
LgfRow batch_row_no_nyquist(const LatticeConfig& cfg, int m, int L, Tolerance tol,
                            double delta = kDeltaDefault);

/// Independent rows m = 0..m_max.
LgfTable batch_table(const LatticeConfig& cfg, int m_max, int L, Tolerance tol,
                     double delta = kDeltaDefault);

/// Batch form of unscreened_diff: B_0(n,m) - B_0(0,0) for n = 0..L at fixed
/// m, via one transform over n_half_pts nodes on [0, pi). Matches
/// unscreened_diff with 2 n_half_pts full-circle nodes.
std::vector<double> unscreened_diff_row(double alpha1, int m, int L, int n_half_pts);

}  // namespace lgf

#endif
