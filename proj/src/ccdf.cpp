#include "slm/ccdf.hpp"

#include <stdexcept>

namespace slm {

CcdfCurve::CcdfCurve(std::vector<double> thresholds_db)
    : thresholds_db_(std::move(thresholds_db)),
      counts_(thresholds_db_.size(), 0) {
    if (thresholds_db_.empty())
        throw std::invalid_argument("CcdfCurve: empty threshold grid");
    for (std::size_t t = 1; t < thresholds_db_.size(); ++t) {
        if (!(thresholds_db_[t] > thresholds_db_[t - 1]))
            throw std::invalid_argument("CcdfCurve: thresholds must ascend");
    }
}

std::vector<double> CcdfCurve::default_grid() {
    std::vector<double> grid;
    grid.reserve(91);
    for (int tenths = 40; tenths <= 130; ++tenths)
        grid.push_back(tenths / 10.0);
    return grid;
}

void CcdfCurve::add(const PaprValue& p) {
    // thresholds ascend, so exceedances form a prefix
    for (std::size_t t = 0; t < thresholds_db_.size(); ++t) {
        if (p.db > thresholds_db_[t])
            ++counts_[t];
        else
            break;
    }
    ++trials_;
}

void CcdfCurve::merge(const CcdfCurve& other) {
    if (thresholds_db_ != other.thresholds_db_)
        throw std::invalid_argument("CcdfCurve::merge: threshold grids differ");
    for (std::size_t t = 0; t < counts_.size(); ++t)
        counts_[t] += other.counts_[t];
    trials_ += other.trials_;
}

double CcdfCurve::exceedance(std::size_t t) const {
    if (t >= counts_.size()) throw std::out_of_range("CcdfCurve: bad threshold index");
    if (trials_ == 0) throw std::out_of_range("CcdfCurve: no trials accumulated");
    return static_cast<double>(counts_[t]) / static_cast<double>(trials_);
}

double ccdf_at(const CcdfCurve& curve, double level) {
    if (!(level > 0.0) || !(level < 1.0))
        throw std::out_of_range("ccdf_at: level must be in (0, 1)");
    if (curve.trials() == 0)
        throw std::out_of_range("ccdf_at: empty curve");
    const auto& th = curve.thresholds_db();
    if (curve.exceedance(0) < level)
        throw std::out_of_range("ccdf_at: level above maximum observed exceedance");
    for (std::size_t t = 0; t < th.size(); ++t) {
        const double p = curve.exceedance(t);
        if (p == level) return th[t];
        if (p < level) {
            const double p_hi = curve.exceedance(t - 1);  // t >= 1 here
            const double frac = (p_hi - level) / (p_hi - p);
            return th[t - 1] + frac * (th[t] - th[t - 1]);
        }
    }
    throw std::out_of_range("ccdf_at: level below minimum observed exceedance");
}

}  // namespace slm
