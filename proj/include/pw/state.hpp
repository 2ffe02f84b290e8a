#pragma once

#include <optional>
#include <string>

#include "pw/field.hpp"
#include "pw/types.hpp"

namespace pw::kspace {

// Uniform k-grid excluding k = 0 (half-cell offset keeps every node away from
// the 1/|k| singularity).
struct KGrid {
    Grid3 axes;

    KGrid() = default;
    explicit KGrid(const Grid3& a);

    // Symmetric grid of n^3 nodes on [-half_extent, half_extent]^3 with nodes
    // at +-(j+1/2) dk; n must be even so that k = 0 is excluded.
    static KGrid symmetric_offset(double half_extent, int n);

    std::size_t size() const { return grid_size(axes); }
    double cell_volume() const { return pw::cell_volume(axes); }
    Vec3 node(int i, int j, int l) const { return grid_node(axes, i, j, l); }
    std::size_t node_index(int i, int j, int l) const {
        return (std::size_t(i) * axes[1].count + j) * axes[2].count + l;
    }
    double min_abs_k() const;
    bool same_as(const KGrid& o, double tol = 1e-12) const;
};

// Orthonormal transverse frame at k: m x n = k/|k|, e = (m + i n)/sqrt(2),
// with the phase fixed so that e(-k) = e*(k).
struct HelicityTriad {
    Vec3 m, n;
    CVec3 e;
};
HelicityTriad helicity_triad(const Vec3& k);

struct SpectralAmplitudes {
    KGrid grid;
    std::vector<cplx> plus, minus;  // one per node

    SpectralAmplitudes() = default;
    explicit SpectralAmplitudes(const KGrid& g)
        : grid(g), plus(g.size(), cplx(0.0)), minus(g.size(), cplx(0.0)) {}
};

enum class Rep { standard, primed };

// Transverse 3-component field Psi~(k) on a KGrid. Valid states satisfy
// k . Psi~(k) = 0 at every node.
class PhotonStateK {
  public:
    PhotonStateK() = default;

    // validate = true enforces the transversality invariant (1e-10 relative).
    static PhotonStateK from_raw(const KGrid& grid, std::vector<cplx> psi, Rep rep = Rep::standard,
                                 bool validate = true);

    const KGrid& grid() const { return grid_; }
    Rep rep() const { return rep_; }
    const std::vector<cplx>& data() const { return psi_; }
    CVec3 at(int i, int j, int l) const {
        const std::size_t b = 3 * grid_.node_index(i, j, l);
        return CVec3(psi_[b], psi_[b + 1], psi_[b + 2]);
    }

    // max_k |k.Psi~| / (|k||Psi~|) over nodes carrying weight
    double transversality_residual() const;

  private:
    KGrid grid_;
    std::vector<cplx> psi_;
    Rep rep_ = Rep::standard;
};

// Psi~(k) = e(k) alpha(k,+1) + e*(k) alpha(k,-1)
PhotonStateK build_state(const SpectralAmplitudes& a);
// alpha_+ = e^dag Psi~, alpha_- = e^T Psi~; rejects non-transverse input
SpectralAmplitudes alpha_from_state(const PhotonStateK& s);
// projection onto span{e(k), e*(k)} at each node
PhotonStateK transverse_project(const KGrid& grid, const std::vector<cplx>& v);

struct PositionField {
    SampledField psi;  // 3 components on an x-grid
    double t = 0.0;
    double divergence_residual = 0.0;  // relative spectral norm of k.Psi~
};

// Psi(x,t) = sqrt(hbar c) (2pi)^{-3} int d^3k Psi~(k) e^{i(k.x - w_k t)}
PositionField synthesize_position(const PhotonStateK& s, double t, const Grid3& xaxes,
                                  const Units& u = {});

// <1|2>_BB = int d^3k / ((2pi)^3 |k|) Psi1~^dag Psi2~
cplx bb_inner(const PhotonStateK& s1, const PhotonStateK& s2);

struct Box {
    Vec3 lo, hi;
    bool contains(const Vec3& p) const {
        return p.x() >= lo.x() && p.x() <= hi.x() && p.y() >= lo.y() && p.y() <= hi.y() &&
               p.z() >= lo.z() && p.z() <= hi.z();
    }
};

// Probabilities (318), (319) normalized per (323)-(324).
double helicity_prob(const PhotonStateK& s, int lambda, const Box& omega);
double momentum_prob(const PhotonStateK& s, const Box& omega);
// Energy localization probability (322) over a position-space box.
double energy_loc_prob(const PositionField& f, const Box& v);

struct Averages {
    double energy = 0.0;
    Vec3 momentum = Vec3::Zero();
    bool renormalized = false;  // input was not BB-normalized and got rescaled
};
Averages averages(const PhotonStateK& s, const Units& u = {});

// Exact spectral evolution Psi~ <- Psi~ e^{-i w_k dt}.
PhotonStateK evolve(const PhotonStateK& s, double dt, const Units& u = {});

// Psi' = U Psi componentwise in k-space.
PhotonStateK primed_representation(const PhotonStateK& s);
// Residual of (S'.khat) Psi' = lambda Psi' for a pure-helicity primed state.
double helicity_check(const PhotonStateK& s_primed, int lambda);

// ---- operators on the discretized state space -------------------------------

// Dense operator over (k-node x component); the BB structure enters through
// H = diag(hbar c |k|).
class KernelOperator {
  public:
    static constexpr int default_node_cap = 256;

    KernelOperator(const KGrid& grid, const Units& u, int node_cap = default_node_cap);

    const KGrid& grid() const { return grid_; }
    const Units& units() const { return units_; }
    CMatX& mat() { return mat_; }
    const CMatX& mat() const { return mat_; }
    Eigen::Index dim() const { return mat_.rows(); }

    // diagonal of H = hbar c |k| (3 entries per node)
    Eigen::VectorXd h_diag() const;

    // factory operators used in tests and examples
    static KernelOperator multiply_by_k_component(const KGrid& g, const Units& u, int axis);
    static KernelOperator hamiltonian(const KGrid& g, const Units& u);
    static KernelOperator position_central_diff(const KGrid& g, const Units& u, int axis);

  private:
    KGrid grid_;
    Units units_;
    CMatX mat_;
};

// gamma^{++} = H gamma^dag H^{-1}
KernelOperator generalized_adjoint(const KernelOperator& g);
bool is_generalized_hermitian(const KernelOperator& g, double tol);

struct DensityPair {
    KernelOperator rho;    // |Psi><Psi| H^{-1}
    KernelOperator rho_H;  // H^{-1/2}|Psi><Psi|H^{-1/2}
};

// Pure-state density operators; the state must be BB-normalized to 1e-6 and is
// renormalized exactly on the discrete metric before the kernels are formed.
DensityPair density_from_pure(const PhotonStateK& s, const Units& u = {},
                              int node_cap = KernelOperator::default_node_cap);

// <gamma> = Tr{gamma rho} (= Tr{gamma_H rho_H})
double observable_average(const KernelOperator& g, const DensityPair& d);

DensityPair evolve_density(const DensityPair& d, double dt);

// state vector -> coefficient vector (3 per node) used by KernelOperator
CVecX state_vector(const PhotonStateK& s);
// uniform node weight of the discrete ordinary scalar product,
// <a|b> = q sum_i conj(a_i) b_i with q = hbar c dk^3/(2pi)^3
double metric_weight(const KGrid& g, const Units& u);

}  // namespace pw::kspace
