#ifndef LGF_CORE_HPP
#define LGF_CORE_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lgf {

/// Parameters of the discrete screened Poisson operator
///   c^2 u + alpha1 (2u - u(.-e1) - u(.+e1)) + (2u - u(.-e2) - u(.+e2)),
/// normalized so the second-direction weight is 1 and 0 < alpha1 <= 1.
class LatticeConfig {
  public:
    LatticeConfig(double alpha1, double c2) : alpha1_(alpha1), c2_(c2) {
        if (!(alpha1 > 0.0) || !(alpha1 <= 1.0))
            throw std::invalid_argument("LatticeConfig: alpha1 must be in (0, 1]");
        if (!(c2 >= 0.0))
            throw std::invalid_argument("LatticeConfig: c2 must be >= 0");
    }

    static LatticeConfig from_c(double alpha1, double c) {
        return LatticeConfig(alpha1, c * c);
    }

    double alpha1() const { return alpha1_; }
    double c2() const { return c2_; }
    double lambda() const { return 2.0 + 2.0 * alpha1_; }

    bool screened() const { return c2_ > 0.0; }

    void require_screened() const {
        if (!screened())
            throw std::invalid_argument("operation requires c2 > 0");
    }

  private:
    double alpha1_;
    double c2_;
};

/// Integer lattice coordinates. n indexes the alpha1-weighted direction,
/// m the unit-weighted one.
struct LatticePoint {
    int n = 0;
    int m = 0;

    bool canonical() const { return n >= 0 && m >= 0; }
    bool operator==(const LatticePoint&) const = default;
};

/// B_c(n,m) = B_c(|n|,|m|): every entry point reduces to the first quadrant.
inline LatticePoint canonicalize(LatticePoint p) {
    return {std::abs(p.n), std::abs(p.m)};
}

/// Absolute per-entry error target.
class Tolerance {
  public:
    explicit Tolerance(double eps) : eps_(eps) {
        if (!(eps >= 1e-15))
            throw std::invalid_argument("Tolerance: eps must be >= 1e-15");
    }
    double eps() const { return eps_; }

  private:
    double eps_;
};

enum class Method { Series, Quad1D, FftBatch };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Series: return "series";
        case Method::Quad1D: return "quad1d";
        case Method::FftBatch: return "fft_batch";
    }
    return "?";
}

/// A selected evaluation route together with the a priori error bound that
/// justified it (certificate <= eps of the request).
struct MethodChoice {
    Method tag = Method::Quad1D;
    double certificate = 0.0;
    int work = 0;  // series terms or quadrature points backing the certificate
};

/// Series terms cap for the series/quadrature crossover.
inline constexpr int kSeriesCapDefault = 64;

/// Picks the evaluation route for a single point (row_length == 1) or a row
/// of n = 0..row_length-1 at fixed m. Series wins whenever its truncation
/// bound reaches eps within series_cap terms.
MethodChoice select_method(const LatticeConfig& cfg, Tolerance tol, int row_length = 1,
                           int series_cap = kSeriesCapDefault);

}  // namespace lgf

#endif
