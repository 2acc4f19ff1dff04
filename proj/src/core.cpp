#include "lgf/core.hpp"

#include "lgf/quad1d.hpp"
#include "lgf/series.hpp"

namespace lgf {

MethodChoice select_method(const LatticeConfig& cfg, Tolerance tol, int row_length,
                           int series_cap) {
    cfg.require_screened();
    if (row_length < 1)
        throw std::invalid_argument("select_method: row_length must be >= 1");

    if (truncation_bound(cfg, series_cap) <= tol.eps()) {
        const int n = terms_needed(cfg, tol);
        return {Method::Series, truncation_bound(cfg, n), n};
    }

    const int n_max = row_length - 1;
    const QuadPlan plan = make_quad_plan(cfg, tol, n_max);
    const double cert = quad_error_bound(cfg, n_max, plan.n_pts, plan.eta);
    return {row_length > 1 ? Method::FftBatch : Method::Quad1D, cert, plan.n_pts};
}

}  // namespace lgf
