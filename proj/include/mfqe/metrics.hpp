#pragma once

#include <string>
#include <vector>

#include "mfqe/types.hpp"

namespace mfqe::metrics {

// PSNR on [0,1] luma: 10*log10(1/MSE). Identical frames return the infinity sentinel.
double psnr(const Frame& a, const Frame& b);

// Single-scale SSIM, 11x11 Gaussian window sigma 1.5, K1=0.01, K2=0.03, L=1,
// averaged over window positions fully inside the frame. Frames must be >= 11x11.
double ssim(const Frame& a, const Frame& b);

QualityCurve quality_curve(const Sequence& raw, const Sequence& test, MetricKind kind);

// SD is the population standard deviation of the curve. PVD averages, over strict
// local peaks, the peak value minus the value of the nearest strict local valley
// (index distance, ties toward the subsequent valley); peaks with no valley are
// skipped. PS (when labels given) is the mean zero-run length between adjacent 1s.
FluctuationStats fluctuation_stats(const QualityCurve& curve, const PqfAnnotation* labels = nullptr);

struct CcLagStats {
    double mean = 0.0;
    double sd = 0.0;
    int pairs = 0;    // frame pairs that produced a correlation
    int skipped = 0;  // degenerate (constant) pairs
};

// Pearson correlation of luma between frame n and n+lag, for lag = 1..max_lag.
std::vector<CcLagStats> cc_curve(const Sequence& seq, int max_lag = 10);

// Classic Bjontegaard delta-rate: cubic fit of log10(rate) over quality, mean
// difference integrated across the overlapping quality range, in percent.
// Negative means the test curve saves bitrate.
double bd_rate(const std::vector<RdPoint>& anchor, const std::vector<RdPoint>& test);

// One-value-per-line serialization for the plot/report commands ("inf" for the sentinel).
void save_curve(const QualityCurve& curve, const std::string& path);
QualityCurve load_curve(const std::string& path, MetricKind kind = MetricKind::Psnr);

}  // namespace mfqe::metrics
