#include "pottscut/image.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace pottscut {

void validate_image(const Eigen::Ref<const Image>& image) {
    if (image.rows() < 1 || image.cols() < 1)
        throw std::invalid_argument("image must have at least one pixel");
    if (!image.allFinite())
        throw std::invalid_argument("image intensities must be finite");
}

double global_contrast(const Eigen::Ref<const Image>& image) {
    validate_image(image);
    const int m = static_cast<int>(image.rows());
    const int n = static_cast<int>(image.cols());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int bi = 0; bi < m; bi += 4) {
        for (int bj = 0; bj < n; bj += 4) {
            const int h = std::min(4, m - bi);
            const int w = std::min(4, n - bj);
            const double avg = image.block(bi, bj, h, w).mean();
            lo = std::min(lo, avg);
            hi = std::max(hi, avg);
        }
    }
    return hi - lo;
}

namespace {

// 53-bit uniform in [0,1); fixed algorithm so outputs are portable.
double uniform53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal via the trigonometric Box-Muller transform.
double standard_normal(std::mt19937_64& rng) {
    const double u1 = 1.0 - uniform53(rng);  // (0,1], keeps log finite
    const double u2 = uniform53(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace

Image add_noise(const Eigen::Ref<const Image>& image, const NoiseSpec& spec,
                std::uint64_t seed) {
    validate_image(image);
    if (spec.kind == NoiseKind::Gaussian && spec.param < 0.0)
        throw std::invalid_argument("gaussian sigma must be >= 0");
    if (spec.kind == NoiseKind::SaltPepper && (spec.param < 0.0 || spec.param > 1.0))
        throw std::invalid_argument("salt & pepper probability must lie in [0,1]");

    std::mt19937_64 rng(seed);
    Image out = image;
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            if (spec.kind == NoiseKind::Gaussian) {
                const double z = standard_normal(rng);
                out(i, j) = std::clamp(image(i, j) + spec.param * z, 0.0, 255.0);
            } else {
                const double hit = uniform53(rng);
                if (hit < spec.param) out(i, j) = uniform53(rng) < 0.5 ? 0.0 : 255.0;
            }
        }
    }
    return out;
}

}  // namespace pottscut
