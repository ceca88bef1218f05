#pragma once

#include <string>
#include <vector>

#include "mfqe/types.hpp"

namespace mfqe::video {

// Reads headerless 8-bit planar YUV 4:2:0. File size must be a whole number of
// frames (1.5*w*h bytes each). Luma is normalized to [0,1]; chroma is kept verbatim.
Sequence read_yuv420(const std::string& path, int width, int height);

// Writes 8-bit planar YUV 4:2:0. Luma quantized with round-half-up and clamped
// to [0,255]; chroma written back verbatim (neutral 128 planes when absent).
void write_yuv420(const Sequence& seq, const std::string& path);

// Parses the sidecar: one `frame_index,bits,qp` line per frame, optional header
// line, LF endings. expected_count < 0 skips the count check.
std::vector<FrameMetadata> load_metadata(const std::string& path, int expected_count = -1);

void save_metadata(const std::vector<FrameMetadata>& meta, const std::string& path);

// Cuts aligned raw/compressed sequences into co-located 64x64 sample patches.
// Non-PQF targets reference their nearest previous/subsequent PQFs; PQF targets
// reference their nearest neighboring PQFs. A missing-side PQF is substituted by
// duplicating the available one. Sequences with no PQF at all yield no samples.
std::vector<TrainingSample> extract_training_samples(const Sequence& raw,
                                                     const Sequence& comp,
                                                     const PqfAnnotation& labels,
                                                     int patch = 64,
                                                     int stride = 64);

// Nearest PQF pairing used by both sample extraction and the pipeline:
// for each frame, the nearest previous and subsequent indices with label 1,
// excluding the frame itself; a missing side duplicates the found side.
// Frames with no PQF anywhere get (-1, -1).
std::vector<std::pair<int, int>> nearest_pqf_pairs(const std::vector<int>& labels);

}  // namespace mfqe::video
