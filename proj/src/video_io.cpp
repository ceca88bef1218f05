#include "mfqe/video_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mfqe/error.hpp"

namespace mfqe::video {

namespace {

uint8_t quantize_luma(float v) {
    // round-half-up, then clamp
    double q = std::floor(double(v) * 255.0 + 0.5);
    return static_cast<uint8_t>(std::clamp(q, 0.0, 255.0));
}

}  // namespace

Sequence read_yuv420(const std::string& path, int width, int height) {
    if (width <= 0 || height <= 0)
        throw ValidationError("read_yuv420: dimensions must be positive, got " +
                              std::to_string(width) + "x" + std::to_string(height));
    if (width % 2 != 0 || height % 2 != 0)
        throw ValidationError("read_yuv420: 4:2:0 requires even dimensions, got " +
                              std::to_string(width) + "x" + std::to_string(height));

    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("read_yuv420: cannot open '" + path + "'");

    const size_t luma_bytes = size_t(width) * height;
    const size_t chroma_bytes = luma_bytes / 2;  // u + v
    const size_t frame_bytes = luma_bytes + chroma_bytes;

    std::error_code ec;
    const auto file_size = std::filesystem::file_size(path, ec);
    if (ec) throw IoError("read_yuv420: cannot stat '" + path + "'");
    if (file_size % frame_bytes != 0)
        throw IoError("read_yuv420: '" + path + "' is " + std::to_string(file_size) +
                      " bytes, not a multiple of the " + std::to_string(frame_bytes) +
                      "-byte frame size for " + std::to_string(width) + "x" + std::to_string(height));

    const size_t n = file_size / frame_bytes;
    Sequence seq;
    seq.frames.reserve(n);
    seq.chroma.reserve(n);

    std::vector<uint8_t> buf(frame_bytes);
    for (size_t i = 0; i < n; ++i) {
        f.read(reinterpret_cast<char*>(buf.data()), std::streamsize(frame_bytes));
        if (!f) throw IoError("read_yuv420: short read on frame " + std::to_string(i));
        Frame frame(width, height);
        for (size_t p = 0; p < luma_bytes; ++p) frame.luma[p] = float(buf[p]) / 255.0f;
        seq.frames.push_back(std::move(frame));
        seq.chroma.emplace_back(buf.begin() + std::ptrdiff_t(luma_bytes), buf.end());
    }
    return seq;
}

void write_yuv420(const Sequence& seq, const std::string& path) {
    if (seq.frames.empty()) throw ValidationError("write_yuv420: empty sequence");
    const int w = seq.width(), h = seq.height();
    const size_t luma_bytes = size_t(w) * h;
    const size_t chroma_bytes = luma_bytes / 2;

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("write_yuv420: cannot open '" + path + "' for writing");

    std::vector<uint8_t> buf(luma_bytes + chroma_bytes);
    for (int i = 0; i < seq.count(); ++i) {
        const Frame& frame = seq.frames[size_t(i)];
        if (frame.width != w || frame.height != h)
            throw ValidationError("write_yuv420: frame " + std::to_string(i) + " has mismatched size");
        for (size_t p = 0; p < luma_bytes; ++p) buf[p] = quantize_luma(frame.luma[p]);
        if (seq.has_chroma()) {
            const auto& uv = seq.chroma[size_t(i)];
            if (uv.size() != chroma_bytes)
                throw ValidationError("write_yuv420: frame " + std::to_string(i) + " has malformed chroma");
            std::copy(uv.begin(), uv.end(), buf.begin() + std::ptrdiff_t(luma_bytes));
        } else {
            std::fill(buf.begin() + std::ptrdiff_t(luma_bytes), buf.end(), uint8_t(128));
        }
        f.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(buf.size()));
        if (!f) throw IoError("write_yuv420: write failure on '" + path + "'");
    }
}

std::vector<FrameMetadata> load_metadata(const std::string& path, int expected_count) {
    std::ifstream f(path);
    if (!f) throw IoError("load_metadata: cannot open '" + path + "'");

    std::vector<FrameMetadata> out;
    std::string line;
    int line_no = 0;
    while (std::getline(f, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        // optional header line
        if (line_no == 1 && line.find_first_not_of("0123456789,") != std::string::npos) continue;

        long long idx = 0, bits = 0, qp = 0;
        char extra = 0;
        int got = std::sscanf(line.c_str(), "%lld,%lld,%lld %c", &idx, &bits, &qp, &extra);
        if (got != 3)
            throw IoError("load_metadata: parse error at " + path + ":" + std::to_string(line_no) +
                          " '" + line + "' (want frame_index,bits,qp)");
        if (idx != (long long)out.size())
            throw IoError("load_metadata: out-of-order frame index at " + path + ":" +
                          std::to_string(line_no));
        if (bits < 0)
            throw ValidationError("load_metadata: negative bits at " + path + ":" + std::to_string(line_no));
        if (qp < 0 || qp > 51)
            throw ValidationError("load_metadata: qp " + std::to_string(qp) + " outside [0,51] at " +
                                  path + ":" + std::to_string(line_no));
        out.push_back(FrameMetadata{uint64_t(bits), int(qp)});
    }
    if (expected_count >= 0 && int(out.size()) != expected_count)
        throw ValidationError("load_metadata: '" + path + "' has " + std::to_string(out.size()) +
                              " records, expected " + std::to_string(expected_count));
    return out;
}

void save_metadata(const std::vector<FrameMetadata>& meta, const std::string& path) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw IoError("save_metadata: cannot open '" + path + "' for writing");
    f << "frame_index,bits,qp\n";
    for (size_t i = 0; i < meta.size(); ++i)
        f << i << "," << meta[i].bits << "," << meta[i].qp << "\n";
}

std::vector<std::pair<int, int>> nearest_pqf_pairs(const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    std::vector<int> prev(n, -1), next(n, -1);
    int last = -1;
    for (int i = 0; i < n; ++i) {
        prev[size_t(i)] = last;  // nearest PQF strictly before i
        if (labels[size_t(i)] == 1) last = i;
    }
    last = -1;
    for (int i = n - 1; i >= 0; --i) {
        next[size_t(i)] = last;
        if (labels[size_t(i)] == 1) last = i;
    }
    std::vector<std::pair<int, int>> out(size_t(n));
    for (int i = 0; i < n; ++i) {
        int p = prev[size_t(i)], s = next[size_t(i)];
        if (p < 0) p = s;  // edge rule: duplicate the available side
        if (s < 0) s = p;
        out[size_t(i)] = {p, s};
    }
    return out;
}

std::vector<TrainingSample> extract_training_samples(const Sequence& raw, const Sequence& comp,
                                                     const PqfAnnotation& labels, int patch,
                                                     int stride) {
    if (raw.count() != comp.count() || raw.width() != comp.width() || raw.height() != comp.height())
        throw ValidationError("extract_training_samples: raw/compressed sequences not aligned");
    if (labels.count() != comp.count())
        throw ValidationError("extract_training_samples: label count != frame count");
    if (patch <= 0 || stride <= 0)
        throw ValidationError("extract_training_samples: patch and stride must be positive");
    const int w = comp.width(), h = comp.height();
    if (w < 64 || h < 64)
        throw ValidationError("extract_training_samples: frames must be at least 64x64");
    if (patch > w || patch > h)
        throw ValidationError("extract_training_samples: patch larger than frame");

    auto pairs = nearest_pqf_pairs(labels.labels);

    auto crop = [&](const Frame& f, int y0, int x0) {
        Frame p(patch, patch);
        for (int y = 0; y < patch; ++y)
            for (int x = 0; x < patch; ++x) p.at(y, x) = f.at(y0 + y, x0 + x);
        return p;
    };

    std::vector<TrainingSample> out;
    for (int n = 0; n < comp.count(); ++n) {
        auto [p1, p2] = pairs[size_t(n)];
        if (p1 < 0 || p2 < 0) continue;  // no PQF anywhere
        for (int y0 = 0; y0 + patch <= h; y0 += stride) {
            for (int x0 = 0; x0 + patch <= w; x0 += stride) {
                TrainingSample s;
                s.comp_np = crop(comp.frames[size_t(n)], y0, x0);
                s.comp_p1 = crop(comp.frames[size_t(p1)], y0, x0);
                s.comp_p2 = crop(comp.frames[size_t(p2)], y0, x0);
                s.raw_np = crop(raw.frames[size_t(n)], y0, x0);
                s.raw_p1 = crop(raw.frames[size_t(p1)], y0, x0);
                s.raw_p2 = crop(raw.frames[size_t(p2)], y0, x0);
                s.pqf_target = labels.labels[size_t(n)] == 1;
                s.frame_index = n;
                s.ref_prev = p1;
                s.ref_next = p2;
                s.y0 = y0;
                s.x0 = x0;
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

}  // namespace mfqe::video
