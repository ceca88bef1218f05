#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace mfqe {

// Single luma plane, values in [0,1] (normalized from 8-bit source).
struct Frame {
    int width = 0;
    int height = 0;
    std::vector<float> luma;  // row-major, width*height

    Frame() = default;
    Frame(int w, int h, float fill = 0.0f) : width(w), height(h), luma(size_t(w) * h, fill) {}

    float& at(int y, int x) { return luma[size_t(y) * width + x]; }
    float at(int y, int x) const { return luma[size_t(y) * width + x]; }
    size_t size() const { return luma.size(); }
    bool same_shape(const Frame& o) const { return width == o.width && height == o.height; }
};

// Ordered frames of one video. Chroma planes (U then V, 4:2:0 bytes) are carried
// untouched when the source had them, so output can be reassembled.
struct Sequence {
    std::vector<Frame> frames;
    double frame_rate = 30.0;                   // metadata only
    std::vector<std::vector<uint8_t>> chroma;   // per frame: u-plane then v-plane; empty if absent

    int count() const { return static_cast<int>(frames.size()); }
    int width() const { return frames.empty() ? 0 : frames[0].width; }
    int height() const { return frames.empty() ? 0 : frames[0].height; }
    bool has_chroma() const { return !chroma.empty(); }
};

// Per-frame values read from the encoder sidecar.
struct FrameMetadata {
    uint64_t bits = 0;  // coded bits for the frame
    int qp = 0;         // quantization parameter, [0, 51]
};

enum class MetricKind { Psnr, Ssim };

// Per-frame quality against the raw reference. PSNR of identical frames is
// represented by the +infinity sentinel.
struct QualityCurve {
    std::vector<double> values;
    MetricKind kind = MetricKind::Psnr;

    int count() const { return static_cast<int>(values.size()); }
};

inline constexpr double kInfiniteQuality = std::numeric_limits<double>::infinity();
inline bool is_infinite_quality(double v) { return v == kInfiniteQuality; }

// Peak/valley fluctuation summary of one quality curve.
struct FluctuationStats {
    double sd = 0.0;      // population standard deviation of the curve
    double pvd = 0.0;     // mean peak minus nearest-valley difference
    double ps = 0.0;      // mean non-PQF run length between adjacent PQFs
    bool has_ps = false;  // labels were supplied
};

// One point of a rate-distortion curve.
struct RdPoint {
    double rate = 0.0;     // kbps or bits, consistent within a curve
    double quality = 0.0;  // dB
};

// Per-frame PQF probability and binary label for one sequence.
struct PqfAnnotation {
    std::vector<double> probs;
    std::vector<int> labels;  // 0 or 1

    int count() const { return static_cast<int>(labels.size()); }
};

// Per-pixel displacement map, pixel units, same size as the frame it warps.
struct MotionField {
    int width = 0;
    int height = 0;
    std::vector<float> dx;  // horizontal displacement
    std::vector<float> dy;  // vertical displacement

    MotionField() = default;
    MotionField(int w, int h) : width(w), height(h), dx(size_t(w) * h, 0.0f), dy(size_t(w) * h, 0.0f) {}
};

inline constexpr int kFeatureDim = 38;
using FeatureVector = std::array<double, kFeatureDim>;

// One co-located 6-patch training unit: compressed target + its two compressed
// PQF references, plus the raw versions of all three.
struct TrainingSample {
    Frame comp_np, comp_p1, comp_p2;
    Frame raw_np, raw_p1, raw_p2;
    bool pqf_target = false;  // sample enhances a PQF instead of a non-PQF
    // source coordinates, kept so co-location can be audited
    int frame_index = 0;
    int ref_prev = 0;
    int ref_next = 0;
    int y0 = 0;
    int x0 = 0;
};

}  // namespace mfqe
