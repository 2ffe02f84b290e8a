#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>

#include "pw/types.hpp"

namespace pw {

// Uniform sampling of one axis: nodes min + i*spacing, i = 0..count-1.
struct AxisSpec {
    double min = 0.0;
    double max = 1.0;
    int count = 2;

    double spacing() const { return (max - min) / (count - 1); }
    double node(int i) const { return min + i * spacing(); }
    void validate() const {
        if (count < 2) throw std::invalid_argument("AxisSpec: count must be >= 2");
        if (!(max > min)) throw std::invalid_argument("AxisSpec: max must exceed min");
    }
};

using Grid3 = std::array<AxisSpec, 3>;

inline double cell_volume(const Grid3& g) {
    return g[0].spacing() * g[1].spacing() * g[2].spacing();
}
inline std::size_t grid_size(const Grid3& g) {
    return std::size_t(g[0].count) * g[1].count * g[2].count;
}
inline Vec3 grid_node(const Grid3& g, int i, int j, int l) {
    return Vec3(g[0].node(i), g[1].node(j), g[2].node(l));
}

// Complex field sampled on a 3D grid, row-major axis order, `components`
// interleaved fastest.
struct SampledField {
    Grid3 axes;
    int components = 1;
    std::vector<cplx> data;

    SampledField() = default;
    SampledField(const Grid3& g, int comps)
        : axes(g), components(comps), data(grid_size(g) * comps, cplx(0.0)) {
        for (const auto& a : axes) a.validate();
    }

    std::size_t node_index(int i, int j, int l) const {
        return (std::size_t(i) * axes[1].count + j) * axes[2].count + l;
    }
    cplx& at(int i, int j, int l, int c = 0) { return data[node_index(i, j, l) * components + c]; }
    const cplx& at(int i, int j, int l, int c = 0) const {
        return data[node_index(i, j, l) * components + c];
    }
};

// Trapezoid quadrature over the node hull, with an optional node-wise weight
// such as 1/|k|. Deterministic pairwise reduction.
cplx integrate(const SampledField& f, const std::function<double(const Vec3&)>& weight = nullptr,
               int component = 0);

// Discrete approximations of the continuous Fourier pair
//   forward:  g(k) = \int d^3x f(x) e^{-ik.x}
//   inverse:  f(x) = (2pi)^{-3} \int d^3k g(k) e^{+ik.x}
// Axes must be conjugate: equal counts and dx*dk = 2pi/N per axis. Arbitrary
// grid offsets are handled by phase twiddles around an FFT.
SampledField fourier_forward(const SampledField& f, const Grid3& kaxes);
SampledField fourier_inverse(const SampledField& g, const Grid3& xaxes);

// The x-grid conjugate to a given k-grid (centered at the origin).
Grid3 conjugate_axes(const Grid3& kaxes);

void check_conjugate_axes(const Grid3& xaxes, const Grid3& kaxes);

}  // namespace pw
