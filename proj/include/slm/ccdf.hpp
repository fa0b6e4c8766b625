#pragma once

#include <cstdint>
#include <vector>

#include "slm/signal.hpp"

namespace slm {

/// Empirical complementary CDF of PAPR over an ascending dB threshold grid.
/// Counts are exceedances strictly above each threshold; curves accumulated
/// from disjoint trial sets merge associatively.
class CcdfCurve {
  public:
    explicit CcdfCurve(std::vector<double> thresholds_db);

    /// 4.0 .. 13.0 dB in 0.1 dB steps.
    static std::vector<double> default_grid();

    void add(const PaprValue& p);
    void merge(const CcdfCurve& other);

    const std::vector<double>& thresholds_db() const { return thresholds_db_; }
    const std::vector<std::uint64_t>& exceed_counts() const { return counts_; }
    std::uint64_t trials() const { return trials_; }
    double exceedance(std::size_t t) const;

  private:
    std::vector<double> thresholds_db_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t trials_ = 0;
};

/// dB threshold where the empirical exceedance curve crosses `level`,
/// linearly interpolated between grid points. Throws std::out_of_range if
/// the level is outside the observed range (no extrapolation).
double ccdf_at(const CcdfCurve& curve, double level);

}  // namespace slm
