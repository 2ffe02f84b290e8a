#include "pw/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pw/algebra.hpp"

namespace pw::kspace {

namespace {
constexpr cplx I{0.0, 1.0};
}

KGrid::KGrid(const Grid3& a) : axes(a) {
    for (const auto& ax : axes) ax.validate();
    if (min_abs_k() <= 0.0) throw std::invalid_argument("KGrid: grid must exclude k = 0");
}

KGrid KGrid::symmetric_offset(double half_extent, int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("KGrid::symmetric_offset: n must be even and >= 2");
    const double dk = 2.0 * half_extent / n;
    AxisSpec ax{-half_extent + 0.5 * dk, half_extent - 0.5 * dk, n};
    return KGrid({ax, ax, ax});
}

double KGrid::min_abs_k() const {
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 3; ++a) {
        double m = std::numeric_limits<double>::infinity();
        for (int i = 0; i < axes[a].count; ++i) m = std::min(m, std::abs(axes[a].node(i)));
        best = std::min(best, m == 0.0 ? 0.0 : best);
        if (m == 0.0) return 0.0;
    }
    // smallest |k| over the product grid = vector of per-axis minima
    Vec3 v;
    for (int a = 0; a < 3; ++a) {
        double m = std::numeric_limits<double>::infinity();
        for (int i = 0; i < axes[a].count; ++i) m = std::min(m, std::abs(axes[a].node(i)));
        v(a) = m;
    }
    return v.norm();
}

bool KGrid::same_as(const KGrid& o, double tol) const {
    for (int a = 0; a < 3; ++a) {
        if (axes[a].count != o.axes[a].count) return false;
        if (std::abs(axes[a].min - o.axes[a].min) > tol) return false;
        if (std::abs(axes[a].max - o.axes[a].max) > tol) return false;
    }
    return true;
}

HelicityTriad helicity_triad(const Vec3& k) {
    const double kn = k.norm();
    if (kn == 0.0) throw std::invalid_argument("helicity_triad: k must be nonzero");
    const double rho = std::hypot(k.x(), k.y());
    HelicityTriad t;
    if (rho == 0.0) {
        // poles: fixed frame, n flips sign with k_3 so that e(-k) = e*(k)
        const double s = (k.z() > 0.0) ? 1.0 : -1.0;
        t.m = Vec3(1, 0, 0);
        t.n = Vec3(0, s, 0);
    } else {
        const double cphi = k.x() / rho, sphi = k.y() / rho;
        const double cth = k.z() / kn, sth = rho / kn;
        t.m = Vec3(cth * cphi, cth * sphi, -sth);  // theta-hat
        t.n = Vec3(-sphi, cphi, 0.0);              // phi-hat
    }
    t.e = (t.m.cast<cplx>() + I * t.n.cast<cplx>()) / std::sqrt(2.0);
    return t;
}

PhotonStateK PhotonStateK::from_raw(const KGrid& grid, std::vector<cplx> psi, Rep rep,
                                    bool validate) {
    if (psi.size() != 3 * grid.size())
        throw std::invalid_argument("PhotonStateK: data size mismatch");
    PhotonStateK s;
    s.grid_ = grid;
    s.psi_ = std::move(psi);
    s.rep_ = rep;
    if (validate && rep == Rep::standard) {
        const double r = s.transversality_residual();
        if (r > 1e-10)
            throw std::invalid_argument("PhotonStateK: transversality violated, residual " +
                                        std::to_string(r));
    }
    return s;
}

double PhotonStateK::transversality_residual() const {
    double worst = 0.0;
    double scale = 0.0;
    for (int i = 0; i < grid_.axes[0].count; ++i)
        for (int j = 0; j < grid_.axes[1].count; ++j)
            for (int l = 0; l < grid_.axes[2].count; ++l) {
                const Vec3 k = grid_.node(i, j, l);
                const CVec3 p = at(i, j, l);
                scale = std::max(scale, p.norm());
                worst = std::max(worst, std::abs(k.cast<cplx>().dot(p)) / k.norm());
            }
    return scale > 0.0 ? worst / scale : 0.0;
}

PhotonStateK build_state(const SpectralAmplitudes& a) {
    const KGrid& g = a.grid;
    if (a.plus.size() != g.size() || a.minus.size() != g.size())
        throw std::invalid_argument("build_state: amplitude size mismatch");
    std::vector<cplx> psi(3 * g.size());
    for (int i = 0; i < g.axes[0].count; ++i)
        for (int j = 0; j < g.axes[1].count; ++j)
            for (int l = 0; l < g.axes[2].count; ++l) {
                const std::size_t n = g.node_index(i, j, l);
                const HelicityTriad t = helicity_triad(g.node(i, j, l));
                const CVec3 v = t.e * a.plus[n] + t.e.conjugate() * a.minus[n];
                psi[3 * n] = v(0);
                psi[3 * n + 1] = v(1);
                psi[3 * n + 2] = v(2);
            }
    return PhotonStateK::from_raw(g, std::move(psi), Rep::standard, false);
}

SpectralAmplitudes alpha_from_state(const PhotonStateK& s) {
    const double r = s.transversality_residual();
    if (r > 1e-6)
        throw std::invalid_argument("alpha_from_state: state not transverse, residual " +
                                    std::to_string(r));
    const KGrid& g = s.grid();
    SpectralAmplitudes a(g);
    for (int i = 0; i < g.axes[0].count; ++i)
        for (int j = 0; j < g.axes[1].count; ++j)
            for (int l = 0; l < g.axes[2].count; ++l) {
                const std::size_t n = g.node_index(i, j, l);
                const HelicityTriad t = helicity_triad(g.node(i, j, l));
                const CVec3 p = s.at(i, j, l);
                a.plus[n] = t.e.dot(p);                      // e^dag Psi~
                a.minus[n] = t.e.transpose() * p;            // e^T Psi~
            }
    return a;
}

PhotonStateK transverse_project(const KGrid& grid, const std::vector<cplx>& v) {
    if (v.size() != 3 * grid.size())
        throw std::invalid_argument("transverse_project: data size mismatch");
    std::vector<cplx> psi(v.size());
    for (int i = 0; i < grid.axes[0].count; ++i)
        for (int j = 0; j < grid.axes[1].count; ++j)
            for (int l = 0; l < grid.axes[2].count; ++l) {
                const std::size_t n = grid.node_index(i, j, l);
                const HelicityTriad t = helicity_triad(grid.node(i, j, l));
                const CVec3 in(v[3 * n], v[3 * n + 1], v[3 * n + 2]);
                const CVec3 out = t.e * t.e.dot(in) + t.e.conjugate() * (t.e.transpose() * in);
                psi[3 * n] = out(0);
                psi[3 * n + 1] = out(1);
                psi[3 * n + 2] = out(2);
            }
    return PhotonStateK::from_raw(grid, std::move(psi), Rep::standard, false);
}

PositionField synthesize_position(const PhotonStateK& s, double t, const Grid3& xaxes,
                                  const Units& u) {
    const KGrid& g = s.grid();
    check_conjugate_axes(xaxes, g.axes);

    SampledField spec(g.axes, 3);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < g.axes[0].count; ++i)
        for (int j = 0; j < g.axes[1].count; ++j)
            for (int l = 0; l < g.axes[2].count; ++l) {
                const Vec3 k = g.node(i, j, l);
                const cplx phase = std::polar(1.0, -u.c * k.norm() * t);
                const CVec3 p = s.at(i, j, l);
                for (int c = 0; c < 3; ++c) spec.at(i, j, l, c) = p(c) * phase;
                num += std::norm(k.cast<cplx>().dot(p)) / k.squaredNorm();
                den += std::norm(p.norm());
            }

    SampledField x = fourier_inverse(spec, xaxes);
    const double scale = std::sqrt(u.hbar * u.c);
    for (cplx& v : x.data) v *= scale;

    PositionField out;
    out.psi = std::move(x);
    out.t = t;
    out.divergence_residual = den > 0.0 ? std::sqrt(num / den) : 0.0;
    return out;
}

namespace {

// sum over nodes of w_trap * dk^3/(2pi)^3 * per-node value
cplx bb_weighted_sum(const KGrid& g, const std::function<cplx(int, int, int, const Vec3&)>& f) {
    std::vector<cplx> terms;
    terms.reserve(g.size());
    const double dv = g.cell_volume() / std::pow(2.0 * pi, 3);
    const auto& ax = g.axes;
    for (int i = 0; i < ax[0].count; ++i)
        for (int j = 0; j < ax[1].count; ++j)
            for (int l = 0; l < ax[2].count; ++l) {
                const double w = dv * ((i == 0 || i == ax[0].count - 1) ? 0.5 : 1.0) *
                                 ((j == 0 || j == ax[1].count - 1) ? 0.5 : 1.0) *
                                 ((l == 0 || l == ax[2].count - 1) ? 0.5 : 1.0);
                terms.push_back(w * f(i, j, l, g.node(i, j, l)));
            }
    return pairwise_sum(terms);
}

}  // namespace

cplx bb_inner(const PhotonStateK& s1, const PhotonStateK& s2) {
    if (!s1.grid().same_as(s2.grid())) throw std::invalid_argument("bb_inner: grid mismatch");
    return bb_weighted_sum(s1.grid(), [&](int i, int j, int l, const Vec3& k) {
        return s1.at(i, j, l).dot(s2.at(i, j, l)) / k.norm();
    });
}

double helicity_prob(const PhotonStateK& s, int lambda, const Box& omega) {
    if (lambda != 1 && lambda != -1) throw std::invalid_argument("helicity_prob: lambda = +-1");
    const SpectralAmplitudes a = alpha_from_state(s);
    const auto& alpha = (lambda == 1) ? a.plus : a.minus;
    const KGrid& g = s.grid();
    const cplx num = bb_weighted_sum(g, [&](int i, int j, int l, const Vec3& k) -> cplx {
        if (!omega.contains(k)) return 0.0;
        return std::norm(alpha[g.node_index(i, j, l)]) / k.norm();
    });
    const cplx den = bb_inner(s, s);
    return den.real() > 0.0 ? num.real() / den.real() : 0.0;
}

double momentum_prob(const PhotonStateK& s, const Box& omega) {
    const cplx num = bb_weighted_sum(s.grid(), [&](int i, int j, int l, const Vec3& k) -> cplx {
        if (!omega.contains(k)) return 0.0;
        return s.at(i, j, l).squaredNorm() / k.norm();
    });
    const cplx den = bb_inner(s, s);
    return den.real() > 0.0 ? num.real() / den.real() : 0.0;
}

double energy_loc_prob(const PositionField& f, const Box& v) {
    const auto& ax = f.psi.axes;
    auto masked = [&](bool inside) {
        std::vector<cplx> terms;
        const double dv = cell_volume(ax);
        for (int i = 0; i < ax[0].count; ++i)
            for (int j = 0; j < ax[1].count; ++j)
                for (int l = 0; l < ax[2].count; ++l) {
                    const Vec3 x = grid_node(ax, i, j, l);
                    if (inside && !v.contains(x)) continue;
                    const double w = dv * ((i == 0 || i == ax[0].count - 1) ? 0.5 : 1.0) *
                                     ((j == 0 || j == ax[1].count - 1) ? 0.5 : 1.0) *
                                     ((l == 0 || l == ax[2].count - 1) ? 0.5 : 1.0);
                    double s = 0.0;
                    for (int c = 0; c < 3; ++c) s += std::norm(f.psi.at(i, j, l, c));
                    terms.push_back(w * s);
                }
        return pairwise_sum(terms).real();
    };
    const double den = masked(false);
    return den > 0.0 ? masked(true) / den : 0.0;
}

Averages averages(const PhotonStateK& s, const Units& u) {
    const double norm = bb_inner(s, s).real();
    Averages out;
    if (norm <= 0.0) return out;
    out.renormalized = std::abs(norm - 1.0) > 1e-8;

    const cplx e = bb_weighted_sum(s.grid(), [&](int i, int j, int l, const Vec3& k) {
        return u.hbar * u.c * s.at(i, j, l).squaredNorm();  // hbar w_k / |k| = hbar c
    });
    out.energy = e.real() / norm;
    for (int a = 0; a < 3; ++a) {
        const cplx p = bb_weighted_sum(s.grid(), [&](int i, int j, int l, const Vec3& k) {
            return u.hbar * k(a) * s.at(i, j, l).squaredNorm() / k.norm();
        });
        out.momentum(a) = p.real() / norm;
    }
    return out;
}

PhotonStateK evolve(const PhotonStateK& s, double dt, const Units& u) {
    const KGrid& g = s.grid();
    std::vector<cplx> psi(s.data());
    for (int i = 0; i < g.axes[0].count; ++i)
        for (int j = 0; j < g.axes[1].count; ++j)
            for (int l = 0; l < g.axes[2].count; ++l) {
                const cplx ph = std::polar(1.0, -u.c * g.node(i, j, l).norm() * dt);
                const std::size_t b = 3 * g.node_index(i, j, l);
                psi[b] *= ph;
                psi[b + 1] *= ph;
                psi[b + 2] *= ph;
            }
    return PhotonStateK::from_raw(g, std::move(psi), s.rep(), false);
}

PhotonStateK primed_representation(const PhotonStateK& s) {
    if (s.rep() != Rep::standard)
        throw std::invalid_argument("primed_representation: state already primed");
    const CMat3& U = algebra::unitary_u().u;
    const KGrid& g = s.grid();
    std::vector<cplx> psi(3 * g.size());
    for (std::size_t n = 0; n < g.size(); ++n) {
        const CVec3 v(s.data()[3 * n], s.data()[3 * n + 1], s.data()[3 * n + 2]);
        const CVec3 w = U * v;
        psi[3 * n] = w(0);
        psi[3 * n + 1] = w(1);
        psi[3 * n + 2] = w(2);
    }
    return PhotonStateK::from_raw(g, std::move(psi), Rep::primed, false);
}

double helicity_check(const PhotonStateK& s_primed, int lambda) {
    if (lambda != 1 && lambda != -1) throw std::invalid_argument("helicity_check: lambda = +-1");
    const auto& Sp = algebra::spin1(algebra::Spin1Rep::primed).S;
    const KGrid& g = s_primed.grid();
    double num = 0.0, den = 0.0;
    for (int i = 0; i < g.axes[0].count; ++i)
        for (int j = 0; j < g.axes[1].count; ++j)
            for (int l = 0; l < g.axes[2].count; ++l) {
                const Vec3 kh = g.node(i, j, l).normalized();
                const CMat3 sk = kh(0) * Sp[0] + kh(1) * Sp[1] + kh(2) * Sp[2];
                const CVec3 v = s_primed.at(i, j, l);
                num += (sk * v - double(lambda) * v).squaredNorm();
                den += v.squaredNorm();
            }
    return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

// ---- operator module --------------------------------------------------------

double metric_weight(const KGrid& g, const Units& u) {
    return u.hbar * u.c * g.cell_volume() / std::pow(2.0 * pi, 3);
}

KernelOperator::KernelOperator(const KGrid& grid, const Units& u, int node_cap)
    : grid_(grid), units_(u) {
    const std::size_t n = grid.size();
    if (n > std::size_t(node_cap))
        throw std::invalid_argument("KernelOperator: grid exceeds node cap");
    mat_ = CMatX::Zero(3 * n, 3 * n);
}

Eigen::VectorXd KernelOperator::h_diag() const {
    Eigen::VectorXd h(dim());
    const auto& ax = grid_.axes;
    for (int i = 0; i < ax[0].count; ++i)
        for (int j = 0; j < ax[1].count; ++j)
            for (int l = 0; l < ax[2].count; ++l) {
                const double e = units_.hbar * units_.c * grid_.node(i, j, l).norm();
                const std::size_t b = 3 * grid_.node_index(i, j, l);
                h(b) = h(b + 1) = h(b + 2) = e;
            }
    return h;
}

KernelOperator KernelOperator::multiply_by_k_component(const KGrid& g, const Units& u, int axis) {
    KernelOperator op(g, u);
    const auto& ax = g.axes;
    for (int i = 0; i < ax[0].count; ++i)
        for (int j = 0; j < ax[1].count; ++j)
            for (int l = 0; l < ax[2].count; ++l) {
                const double v = g.node(i, j, l)(axis);
                const std::size_t b = 3 * g.node_index(i, j, l);
                for (int c = 0; c < 3; ++c) op.mat_(b + c, b + c) = v;
            }
    return op;
}

KernelOperator KernelOperator::hamiltonian(const KGrid& g, const Units& u) {
    KernelOperator op(g, u);
    op.mat_ = op.h_diag().cast<cplx>().asDiagonal();
    return op;
}

KernelOperator KernelOperator::position_central_diff(const KGrid& g, const Units& u, int axis) {
    // x_j = i d/dk_j by central differences, zero beyond the grid
    KernelOperator op(g, u);
    const auto& ax = g.axes;
    const double inv2dk = 1.0 / (2.0 * ax[axis].spacing());
    for (int i = 0; i < ax[0].count; ++i)
        for (int j = 0; j < ax[1].count; ++j)
            for (int l = 0; l < ax[2].count; ++l) {
                int idx[3] = {i, j, l};
                const std::size_t row = g.node_index(i, j, l);
                for (int s : {-1, 1}) {
                    int nb[3] = {idx[0], idx[1], idx[2]};
                    nb[axis] += s;
                    if (nb[axis] < 0 || nb[axis] >= ax[axis].count) continue;
                    const std::size_t col = g.node_index(nb[0], nb[1], nb[2]);
                    for (int c = 0; c < 3; ++c)
                        op.mat_(3 * row + c, 3 * col + c) = I * double(s) * inv2dk;
                }
            }
    return op;
}

KernelOperator generalized_adjoint(const KernelOperator& g) {
    KernelOperator out(g.grid(), g.units(), int(g.grid().size()));
    const Eigen::VectorXd h = g.h_diag();
    out.mat() = h.cast<cplx>().asDiagonal() * g.mat().adjoint() *
                h.cwiseInverse().cast<cplx>().asDiagonal();
    return out;
}

bool is_generalized_hermitian(const KernelOperator& g, double tol) {
    const KernelOperator adj = generalized_adjoint(g);
    const double scale = std::max(1e-300, g.mat().cwiseAbs().maxCoeff());
    return (adj.mat() - g.mat()).cwiseAbs().maxCoeff() / scale <= tol;
}

CVecX state_vector(const PhotonStateK& s) {
    CVecX v(3 * s.grid().size());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = s.data()[i];
    return v;
}

DensityPair density_from_pure(const PhotonStateK& s, const Units& u, int node_cap) {
    KernelOperator rho(s.grid(), u, node_cap), rho_h(s.grid(), u, node_cap);
    const double q = metric_weight(s.grid(), u);
    const Eigen::VectorXd h = rho.h_diag();

    CVecX v = state_vector(s);
    // BB norm on the discrete metric: q v^dag H^{-1} v
    const double bb = (q * v.dot(h.cwiseInverse().cast<cplx>().asDiagonal() * v)).real();
    if (bb <= 0.0) throw std::invalid_argument("density_from_pure: zero state");
    if (std::abs(bb - 1.0) > 1e-6)
        throw std::invalid_argument("density_from_pure: state not BB-normalized");
    v /= std::sqrt(bb);

    rho.mat() = q * v * (h.cwiseInverse().cast<cplx>().asDiagonal() * v).adjoint();
    const CVecX w = h.cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() * v;
    rho_h.mat() = q * w * w.adjoint();
    return DensityPair{std::move(rho), std::move(rho_h)};
}

double observable_average(const KernelOperator& g, const DensityPair& d) {
    return (g.mat() * d.rho.mat()).trace().real();
}

DensityPair evolve_density(const DensityPair& d, double dt) {
    const Units& u = d.rho.units();
    const KGrid& g = d.rho.grid();
    CVecX phase(d.rho.dim());
    const auto& ax = g.axes;
    for (int i = 0; i < ax[0].count; ++i)
        for (int j = 0; j < ax[1].count; ++j)
            for (int l = 0; l < ax[2].count; ++l) {
                const cplx ph = std::polar(1.0, -u.c * g.node(i, j, l).norm() * dt);
                const std::size_t b = 3 * g.node_index(i, j, l);
                phase(b) = phase(b + 1) = phase(b + 2) = ph;
            }
    DensityPair out{KernelOperator(g, u, int(g.size())), KernelOperator(g, u, int(g.size()))};
    const auto U = phase.asDiagonal();
    out.rho.mat() = U * d.rho.mat() * U.toDenseMatrix().adjoint();
    out.rho_H.mat() = U * d.rho_H.mat() * U.toDenseMatrix().adjoint();
    return out;
}

}  // namespace pw::kspace
