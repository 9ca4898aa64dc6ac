// Image and signal containers plus intensity-level utilities: global
// contrast (block statistic), seeded noise injection, data range.
#pragma once

#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

namespace pottscut {

// Grayscale image, m x n real intensities (nominally 0..255).
using Image = Eigen::MatrixXd;

// 1D signal of n real intensities.
using Signal1D = Eigen::VectorXd;

// Throws std::invalid_argument unless the image is nonempty and finite.
void validate_image(const Eigen::Ref<const Image>& image);

// max - min of the entries; dimension-agnostic.
template <typename Derived>
double data_range(const Eigen::MatrixBase<Derived>& values) {
    return values.maxCoeff() - values.minCoeff();
}

// Big-M constant that never binds across active edges: the data range,
// or 1 when the data is constant.
template <typename Derived>
double exact_big_m(const Eigen::MatrixBase<Derived>& values) {
    const double range = data_range(values);
    return range > 0.0 ? range : 1.0;
}

// Y*: average intensity per 4x4 block (top-left anchored; ragged
// right/bottom blocks average the pixels present), then max block
// average minus min block average.
double global_contrast(const Eigen::Ref<const Image>& image);

enum class NoiseKind { Gaussian, SaltPepper };

struct NoiseSpec {
    NoiseKind kind = NoiseKind::Gaussian;
    double param = 0.0;  // sigma for Gaussian, probability for salt & pepper

    static NoiseSpec gaussian(double sigma) { return {NoiseKind::Gaussian, sigma}; }
    static NoiseSpec salt_pepper(double p) { return {NoiseKind::SaltPepper, p}; }
};

// Perturbs the image; bit-reproducible for a fixed seed.
//   Gaussian:     adds sigma * z per pixel (row-major), z from a Box-Muller
//                 transform over mt19937_64 53-bit uniforms; clamps to [0,255].
//   Salt&pepper:  with probability p replaces the pixel by 0 or 255
//                 (equal probability).
Image add_noise(const Eigen::Ref<const Image>& image, const NoiseSpec& spec,
                std::uint64_t seed);

}  // namespace pottscut
