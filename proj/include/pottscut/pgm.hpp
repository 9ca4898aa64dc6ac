// PNM image I/O (PGM P2/P5 with maxval 255; PPM P3/P6 ingested through a
// fixed luminance conversion) and CSV readers/writers for signals and labels.
#pragma once

#include <span>
#include <string>

#include "pottscut/grid.hpp"
#include "pottscut/image.hpp"

namespace pottscut {

// Reads P2/P5 grayscale directly; P3/P6 color collapses to gray via
// 0.299 R + 0.587 G + 0.114 B. Maxval must be 255.
Image read_pnm(const std::string& path);

// Writes maxval-255 PGM, rounding and clamping intensities to 0..255.
// Comment lines (without the leading '#') land in the header.
void write_pgm(const std::string& path, const Eigen::Ref<const Image>& image,
               bool binary = true, std::span<const std::string> comments = {});

// Label map scaled onto 0..255 for viewing (k == 1 maps to 0).
void write_label_map_pgm(const std::string& path, const Segmentation& seg, bool binary = true);

void write_labels_csv(const std::string& path, const Segmentation& seg);

// Single column of reals, one per line; blank lines and '#' comments skipped.
Signal1D read_signal_csv(const std::string& path);
void write_signal_csv(const std::string& path, const Eigen::Ref<const Signal1D>& signal);

}  // namespace pottscut
