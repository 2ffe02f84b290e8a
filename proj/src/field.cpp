#include "pw/field.hpp"

#include <fftw3.h>

#include <cmath>

namespace pw {

namespace {

double trap_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

}  // namespace

cplx integrate(const SampledField& f, const std::function<double(const Vec3&)>& weight,
               int component) {
    const auto& ax = f.axes;
    std::vector<cplx> terms;
    terms.reserve(grid_size(ax));
    const double dv = cell_volume(ax);
    for (int i = 0; i < ax[0].count; ++i)
        for (int j = 0; j < ax[1].count; ++j)
            for (int l = 0; l < ax[2].count; ++l) {
                double w = trap_weight(i, ax[0].count) * trap_weight(j, ax[1].count) *
                           trap_weight(l, ax[2].count) * dv;
                if (weight) w *= weight(grid_node(ax, i, j, l));
                const cplx v = f.at(i, j, l, component);
                if (std::isnan(v.real()) || std::isnan(v.imag()))
                    throw std::runtime_error("integrate: NaN in field data");
                terms.push_back(w * v);
            }
    return pairwise_sum(terms);
}

Grid3 conjugate_axes(const Grid3& kaxes) {
    Grid3 x;
    for (int a = 0; a < 3; ++a) {
        const int n = kaxes[a].count;
        const double dx = 2.0 * pi / (n * kaxes[a].spacing());
        x[a] = AxisSpec{-dx * (n / 2), -dx * (n / 2) + dx * (n - 1), n};
    }
    return x;
}

void check_conjugate_axes(const Grid3& xaxes, const Grid3& kaxes) {
    for (int a = 0; a < 3; ++a) {
        if (xaxes[a].count != kaxes[a].count)
            throw std::invalid_argument("transform: axis counts differ");
        const double prod = xaxes[a].spacing() * kaxes[a].spacing() * xaxes[a].count;
        if (std::abs(prod - 2.0 * pi) > 1e-9 * 2.0 * pi)
            throw std::invalid_argument("transform: axes are not conjugate (dx*dk != 2pi/N)");
    }
}

namespace {

// d^3y f(y) e^{-s i k.y} with grid offsets folded into twiddles; s = +1 is the
// forward (x -> k) direction.
SampledField dft_core(const SampledField& in, const Grid3& out_axes, int fftw_sign,
                      double scale) {
    const Grid3& ain = in.axes;
    const int n0 = ain[0].count, n1 = ain[1].count, n2 = ain[2].count;
    SampledField out(out_axes, in.components);

    std::vector<cplx> buf(std::size_t(n0) * n1 * n2);
    fftw_plan plan = fftw_plan_dft_3d(n0, n1, n2, reinterpret_cast<fftw_complex*>(buf.data()),
                                      reinterpret_cast<fftw_complex*>(buf.data()), fftw_sign,
                                      FFTW_ESTIMATE);

    // e^{-s i k.y} = e^{-s i out0.y} * e^{-s i m*dout*in0} * e^{fftw kernel}
    const double s = (fftw_sign == FFTW_FORWARD) ? 1.0 : -1.0;
    std::array<std::vector<cplx>, 3> tw_in, tw_out;
    for (int a = 0; a < 3; ++a) {
        const int n = ain[a].count;
        tw_in[a].resize(n);
        tw_out[a].resize(n);
        for (int i = 0; i < n; ++i) {
            tw_in[a][i] = std::polar(1.0, -s * out_axes[a].min * (ain[a].node(i) - ain[a].min));
            tw_out[a][i] = std::polar(1.0, -s * out_axes[a].node(i) * ain[a].min);
        }
    }

    for (int c = 0; c < in.components; ++c) {
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n1; ++j)
                for (int l = 0; l < n2; ++l)
                    buf[in.node_index(i, j, l)] =
                        in.at(i, j, l, c) * tw_in[0][i] * tw_in[1][j] * tw_in[2][l];
        fftw_execute(plan);
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n1; ++j)
                for (int l = 0; l < n2; ++l)
                    out.at(i, j, l, c) =
                        scale * buf[out.node_index(i, j, l)] * tw_out[0][i] * tw_out[1][j] *
                        tw_out[2][l];
    }
    fftw_destroy_plan(plan);
    return out;
}

}  // namespace

SampledField fourier_forward(const SampledField& f, const Grid3& kaxes) {
    check_conjugate_axes(f.axes, kaxes);
    return dft_core(f, kaxes, FFTW_FORWARD, cell_volume(f.axes));
}

SampledField fourier_inverse(const SampledField& g, const Grid3& xaxes) {
    check_conjugate_axes(xaxes, g.axes);
    const double scale = cell_volume(g.axes) / std::pow(2.0 * pi, 3);
    return dft_core(g, xaxes, FFTW_BACKWARD, scale);
}

}  // namespace pw
