#include "pw/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace pw::algebra {

namespace {

constexpr cplx I{0.0, 1.0};

int levi_civita4(int a, int b, int c, int d) {
    int p[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) {
                std::swap(p[i], p[j]);
                sign = -sign;
            }
        }
    return sign;
}

SpinorBasis make_spinor_basis() {
    SpinorBasis b;
    b.g_lower[0] << 0, 1, 1, 0;
    b.g_lower[1] << 0, -I, I, 0;
    b.g_lower[2] << 1, 0, 0, -1;
    b.g_lower[3] << -1, 0, 0, -1;
    for (int mu = 0; mu < 4; ++mu) b.g_upper[mu] = metric_diag[mu] * b.g_lower[mu];
    b.eps << 0, 1, -1, 0;
    return b;
}

PhiTriple make_phi() {
    PhiTriple p;
    const double r = 1.0 / std::sqrt(2.0);
    p.lower[0] << -I * r, 0, 0, I * r;
    p.lower[1] << -r, 0, 0, -r;
    p.lower[2] << 0, I * r, I * r, 0;
    // raise both indices with eps: Phi^{AB} = eps^{CA} eps^{DB} Phi_{CD}
    const CMat2 e = make_spinor_basis().eps;
    for (int j = 0; j < 3; ++j) {
        CMat2 up = CMat2::Zero();
        for (int A = 0; A < 2; ++A)
            for (int B = 0; B < 2; ++B)
                for (int C = 0; C < 2; ++C)
                    for (int D = 0; D < 2; ++D) up(A, B) += e(C, A) * e(D, B) * p.lower[j](C, D);
        p.upper[j] = up;
    }
    return p;
}

Spin1Set make_primed() {
    Spin1Set s;
    s.rep = Spin1Rep::primed;
    const double r = 1.0 / std::sqrt(2.0);
    s.S[0] << 0, r, 0, r, 0, r, 0, r, 0;
    s.S[1] << 0, -I * r, 0, I * r, 0, -I * r, 0, I * r, 0;
    s.S[2] << 1, 0, 0, 0, 0, 0, 0, 0, -1;
    return s;
}

Spin1Set make_standard() {
    // (S_j)_{kl} = -i eps_{jkl}
    Spin1Set s;
    s.rep = Spin1Rep::standard;
    for (int j = 0; j < 3; ++j) {
        CMat3 m = CMat3::Zero();
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
                int e = levi_civita4(j + 1, k + 1, l + 1, 4);  // 3D symbol via fixed 4th slot
                if (e != 0) m(k, l) = -I * double(e);
            }
        s.S[j] = m;
    }
    return s;
}

UnitaryU make_u() {
    // U rows: (Phi^j_11, Phi^j_12*sqrt(2), Phi^j_22) scaled by i
    const PhiTriple& p = make_phi();
    UnitaryU u;
    const double s2 = std::sqrt(2.0);
    for (int j = 0; j < 3; ++j) {
        u.u(0, j) = I * p.lower[j](0, 0);
        u.u(1, j) = I * s2 * p.lower[j](0, 1);
        u.u(2, j) = I * p.lower[j](1, 1);
    }
    u.u_dagger = u.u.adjoint();
    return u;
}

}  // namespace

const SpinorBasis& spinor_basis() {
    static const SpinorBasis b = make_spinor_basis();
    return b;
}

const PhiTriple& phi_triple() {
    static const PhiTriple p = make_phi();
    return p;
}

const Spin1Set& spin1(Spin1Rep rep) {
    static const Spin1Set std_rep = make_standard();
    static const Spin1Set primed_rep = make_primed();
    return rep == Spin1Rep::standard ? std_rep : primed_rep;
}

Spin1Set apply_u_similarity(const Spin1Set& primed) {
    if (primed.rep != Spin1Rep::primed)
        throw std::invalid_argument("apply_u_similarity: expects the primed representation");
    const UnitaryU& u = unitary_u();
    Spin1Set out;
    out.rep = Spin1Rep::standard;
    for (int j = 0; j < 3; ++j) out.S[j] = u.u_dagger * primed.S[j] * u.u;
    return out;
}

const UnitaryU& unitary_u() {
    static const UnitaryU u = make_u();
    return u;
}

bool TwoForm4D::antisymmetric(double tol) const {
    const double scale = std::max(1.0, coeff.cwiseAbs().maxCoeff());
    return (coeff + coeff.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

bool SymSpinor2::symmetric(double tol) const {
    const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
    return std::abs(entries(0, 1) - entries(1, 0)) <= tol * scale;
}

TwoForm4D hodge_star(const TwoForm4D& w) {
    if (!w.antisymmetric()) throw std::invalid_argument("hodge_star: input not antisymmetric");
    // (*w)_{rs} = -(i/2) eps_{rs mu nu} w^{mu nu}, indices raised with eta
    CMat4 up = CMat4::Zero();
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            up(mu, nu) = metric_diag[mu] * metric_diag[nu] * w.coeff(mu, nu);
    TwoForm4D out;
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
            cplx acc = 0.0;
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu) {
                    int e = levi_civita4(r + 1, s + 1, mu + 1, nu + 1);
                    if (e != 0) acc += double(e) * up(mu, nu);
                }
            out.coeff(r, s) = -0.5 * I * acc;
        }
    return out;
}

SigmaForms build_sigma_forms() {
    const SpinorBasis& b = spinor_basis();
    SigmaForms s;
    for (int A = 0; A < 2; ++A)
        for (int B = 0; B < 2; ++B) {
            CMat4 m = CMat4::Zero();
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu) {
                    cplx acc = 0.0;
                    for (int C = 0; C < 2; ++C)
                        for (int D = 0; D < 2; ++D)
                            acc += b.eps(C, D) * (b.g_lower[mu](A, C) * b.g_lower[nu](B, D) -
                                                  b.g_lower[nu](A, C) * b.g_lower[mu](B, D));
                    m(mu, nu) = 0.5 * acc;
                }
            s.selfdual[A][B] = m;
            s.antiselfdual[A][B] = m.conjugate();
        }
    return s;
}

SymSpinor2 f_from_F(const RSVector& F) {
    const PhiTriple& p = phi_triple();
    SymSpinor2 f;
    f.chirality = Chirality::dotted;
    f.entries = CMat2::Zero();
    for (int j = 0; j < 3; ++j) f.entries += I * p.lower[j] * F.F(j);
    return f;
}

RSVector F_from_f(const SymSpinor2& f) {
    if (f.chirality != Chirality::dotted)
        throw std::invalid_argument("F_from_f: expects a dotted spinor");
    if (!f.symmetric()) throw std::invalid_argument("F_from_f: input not symmetric");
    const PhiTriple& p = phi_triple();
    RSVector F;
    for (int j = 0; j < 3; ++j) {
        cplx acc = 0.0;
        for (int A = 0; A < 2; ++A)
            for (int B = 0; B < 2; ++B) acc += p.upper[j](A, B) * f.entries(A, B);
        F.F(j) = -I * acc;
    }
    return F;
}

RSVector rs_from_fields(const Vec3& E, const Vec3& B) {
    RSVector F;
    F.F = (E.cast<cplx>() + I * B.cast<cplx>()) / std::sqrt(2.0);
    return F;
}

SampledField rs_from_fields(const EMField& em) {
    SampledField F(em.axes, 3);
    const std::size_t n = grid_size(em.axes);
    if (em.E.size() != 3 * n || em.B.size() != 3 * n)
        throw std::invalid_argument("rs_from_fields: field size mismatch");
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < 3 * n; ++i) F.data[i] = r * cplx(em.E[i], em.B[i]);
    return F;
}

GroupElements so3c_from_sl2c(const CMat2& l) {
    if (std::abs(l.determinant() - 1.0) > 1e-10)
        throw std::invalid_argument("so3c_from_sl2c: det l must be 1");
    const PhiTriple& p = phi_triple();
    GroupElements g;
    g.l = l;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            cplx acc = 0.0;
            for (int A = 0; A < 2; ++A)
                for (int B = 0; B < 2; ++B)
                    for (int C = 0; C < 2; ++C)
                        for (int D = 0; D < 2; ++D)
                            acc += p.lower[j](A, B) * l(A, C) * l(B, D) * p.upper[k](C, D);
            g.t(j, k) = acc;
        }
    const double ortho = (g.t.transpose() * g.t - CMat3::Identity()).cwiseAbs().maxCoeff();
    if (ortho > 1e-12 || std::abs(g.t.determinant() - 1.0) > 1e-12)
        throw std::runtime_error("so3c_from_sl2c: image failed SO(3,C) check");
    return g;
}

FieldFunctionals field_functionals(const SampledField& F, double c) {
    if (F.components != 3) throw std::invalid_argument("field_functionals: need 3 components");
    const auto& ax = F.axes;
    const int n0 = ax[0].count, n1 = ax[1].count, n2 = ax[2].count;

    FieldFunctionals out;
    std::vector<cplx> e_terms, p_terms[3], m_terms[3], n_terms[3];
    const std::size_t total = grid_size(ax);
    e_terms.reserve(total);
    const double dv = cell_volume(ax);

    double max_abs = 0.0, max_boundary = 0.0;
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n1; ++j)
            for (int l = 0; l < n2; ++l) {
                const double w = dv * ((i == 0 || i == n0 - 1) ? 0.5 : 1.0) *
                                 ((j == 0 || j == n1 - 1) ? 0.5 : 1.0) *
                                 ((l == 0 || l == n2 - 1) ? 0.5 : 1.0);
                CVec3 f;
                for (int cpn = 0; cpn < 3; ++cpn) f(cpn) = F.at(i, j, l, cpn);
                const Vec3 x = grid_node(ax, i, j, l);
                const cplx dens = f.dot(f);  // F^* . F (Eigen dot conjugates the left)
                const CVec3 cross = f.conjugate().cross(f);
                e_terms.push_back(w * dens);
                for (int a = 0; a < 3; ++a) {
                    p_terms[a].push_back(w * cross(a) / (I * c));
                    n_terms[a].push_back(w * x(a) * dens);
                }
                const CVec3 xc = x.cast<cplx>().cross(cross) / (I * c);
                for (int a = 0; a < 3; ++a) m_terms[a].push_back(w * xc(a));

                const double mag = f.norm();
                max_abs = std::max(max_abs, mag);
                if (i == 0 || i == n0 - 1 || j == 0 || j == n1 - 1 || l == 0 || l == n2 - 1)
                    max_boundary = std::max(max_boundary, mag);
            }

    const cplx E = pairwise_sum(e_terms);
    out.energy = E.real();
    double imag_max = std::abs(E.imag());
    for (int a = 0; a < 3; ++a) {
        const cplx P = pairwise_sum(p_terms[a]);
        const cplx M = pairwise_sum(m_terms[a]);
        const cplx N = pairwise_sum(n_terms[a]);
        out.momentum(a) = P.real();
        out.angular_momentum(a) = M.real();
        out.energy_moment(a) = N.real();
        imag_max = std::max({imag_max, std::abs(P.imag()), std::abs(M.imag()), std::abs(N.imag())});
    }
    out.imag_residual = (out.energy > 0.0) ? imag_max / out.energy : imag_max;
    out.boundary_warning = max_boundary > 1e-6 * max_abs;
    return out;
}

}  // namespace pw::algebra
