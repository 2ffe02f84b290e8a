#include "pw/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace pw::grid {

namespace {

constexpr cplx I{0.0, 1.0};

// Exact sixth roots of unity: e^{i pi r / 3}, r = 0..5.
const std::array<cplx, 6>& sixth_roots() {
    static const std::array<cplx, 6> w = [] {
        const double h = std::sqrt(3.0) / 2.0;
        return std::array<cplx, 6>{cplx(1, 0),    cplx(0.5, h),  cplx(-0.5, h),
                                   cplx(-1, 0),   cplx(-0.5, -h), cplx(0.5, -h)};
    }();
    return w;
}

// Exact cube roots e^{2 pi i q / 3}, q = 0..2 (used for the grid DFT phases).
cplx omega_pow(int q) { return sixth_roots()[(2 * ((q % 3 + 3) % 3)) % 6]; }

void check_index(int k, int l) {
    if (k < 0 || k > 2 || l < 0 || l > 2)
        throw std::invalid_argument("grid index out of range {0,1,2}");
}

// Coefficient exponents of the boxtimes term list: for output (K,L) the term
// f(k1,l1) g((K-k1)%3,(L-l1)%3) carries phase e^{i pi r / 3} with r below,
// f-index (k1,l1) row-major. Verified term by term against boxtimes_oracle.
constexpr int kBoxPhase[9][9] = {
    {0, 0, 0, 0, 3, 0, 0, 0, 3},  // out (0,0)
    {0, 0, 0, 4, 1, 4, 5, 2, 2},  // out (0,1)
    {0, 0, 0, 2, 5, 2, 4, 1, 4},  // out (0,2)
    {0, 2, 1, 0, 5, 4, 0, 2, 4},  // out (1,0)
    {0, 5, 1, 1, 0, 5, 5, 1, 3},  // out (1,1)
    {0, 5, 4, 2, 1, 0, 4, 0, 2},  // out (1,2)
    {0, 4, 2, 0, 1, 5, 0, 4, 2},  // out (2,0)
    {0, 4, 2, 1, 5, 0, 2, 0, 4},  // out (2,1)
    {0, 4, 2, 2, 0, 4, 4, 2, 0},  // out (2,2)
};

}  // namespace

bool KernelK::unimodular(double tol) const {
    for (const cplx& k : table)
        if (std::abs(std::abs(k) - 1.0) > tol) return false;
    return true;
}

void KernelK::validate() const {
    if (std::abs(table[0] - cplx(1.0)) > 1e-12)
        throw std::invalid_argument("KernelK: K(0) must equal 1");
    for (const cplx& k : table)
        if (std::abs(k) < 1e-15) throw std::invalid_argument("KernelK: singular kernel entry");
}

KernelK KernelK::weyl67() {
    KernelK k;
    k.name = "weyl67";
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) k.table[3 * a + b] = ((a * b) % 2 == 0) ? 1.0 : -1.0;
    return k;
}

KernelK KernelK::cos69() {
    KernelK k;
    k.name = "cos69";
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            switch ((a * b) % 6) {
                case 0: k.table[3 * a + b] = 1.0; break;
                case 1: k.table[3 * a + b] = 0.5; break;
                case 2: k.table[3 * a + b] = -0.5; break;
                case 4: k.table[3 * a + b] = -0.5; break;
                default: throw std::logic_error("cos69: unreachable");
            }
        }
    return k;
}

KernelK KernelK::custom(const std::array<cplx, 9>& t) {
    KernelK k;
    k.table = t;
    k.name = "custom";
    k.validate();
    return k;
}

DiscreteOperator displacement(int k, int l) {
    check_index(k, l);
    DiscreteOperator d;
    const cplx pref = sixth_roots()[(k * l) % 6];
    for (int m = 0; m < 3; ++m) d.mat((m + l) % 3, m) = pref * omega_pow(k * m);
    return d;
}

CMat3 displacement_n(int k, int l) {
    check_index(k, l);
    CMat3 d = CMat3::Zero();
    const cplx pref = sixth_roots()[(k * l) % 6];
    for (int n = 0; n < 3; ++n) d(n, (n + k) % 3) = pref * omega_pow(n * l);
    return d;
}

DiscreteOperator grid_quantizer(int m, int n, const KernelK& K) {
    check_index(m, n);
    K.validate();
    DiscreteOperator om;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            om.mat += K.at(k, l) * omega_pow(-(k * m + l * n)) * displacement(k, l).mat;
    om.mat /= 3.0;
    return om;
}

DiscreteOperator grid_weyl_op(const GridFunction& f, const KernelK& K) {
    DiscreteOperator out;
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) out.mat += f.at(m, n) * grid_quantizer(m, n, K).mat;
    out.mat /= 3.0;
    return out;
}

namespace {

// Expansion coefficients of g in the displacement basis, c(k,l) = Tr{g D^dag}/3.
GridDual displacement_coefficients(const DiscreteOperator& g) {
    GridDual c;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            c.at(k, l) = (g.mat * displacement(k, l).mat.adjoint()).trace() / 3.0;
    return c;
}

GridFunction inverse_from_coefficients(const GridDual& c, const KernelK& K) {
    GridFunction f;
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
            cplx acc = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    acc += c.at(k, l) / K.at(k, l) * omega_pow(k * m + l * n);
            f.at(m, n) = acc;
        }
    return f;
}

}  // namespace

GridFunction grid_inverse(const DiscreteOperator& g, const KernelK& K) {
    K.validate();
    if (K.unimodular()) {
        // |K| = 1: f(m,n) = Tr{g Omega(m,n)}
        GridFunction f;
        for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) f.at(m, n) = (g.mat * grid_quantizer(m, n, K).mat).trace();
        return f;
    }
    // general kernels: |K|^{-2}-weighted double sum, here contracted through
    // the displacement coefficients
    return inverse_from_coefficients(displacement_coefficients(g), K);
}

GridDual grid_tilde(const GridFunction& f, const KernelK& K) {
    K.validate();
    GridDual ft;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            cplx acc = 0.0;
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n) acc += f.at(m, n) * omega_pow(-(k * m + l * n));
            ft.at(k, l) = K.at(k, l) * acc / 9.0;
        }
    return ft;
}

GridFunction grid_untilde(const GridDual& ft, const KernelK& K) {
    K.validate();
    GridFunction f;
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
            cplx acc = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) acc += ft.at(k, l) / K.at(k, l) * omega_pow(k * m + l * n);
            f.at(m, n) = acc;
        }
    return f;
}

GridDual boxtimes_table(const GridDual& ft, const GridDual& gt) {
    GridDual out;
    for (int K = 0; K < 3; ++K)
        for (int L = 0; L < 3; ++L) {
            cplx acc = 0.0;
            for (int k1 = 0; k1 < 3; ++k1)
                for (int l1 = 0; l1 < 3; ++l1) {
                    const int k2 = (K - k1 + 3) % 3, l2 = (L - l1 + 3) % 3;
                    acc += sixth_roots()[kBoxPhase[3 * K + L][3 * k1 + l1]] * ft.at(k1, l1) *
                           gt.at(k2, l2);
                }
            out.at(K, L) = acc;
        }
    return out;
}

GridDual boxtimes_oracle(const GridDual& ft, const GridDual& gt) {
    CMat3 fhat = CMat3::Zero(), ghat = CMat3::Zero();
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            fhat += ft.at(k, l) * displacement(k, l).mat;
            ghat += gt.at(k, l) * displacement(k, l).mat;
        }
    DiscreteOperator prod;
    prod.mat = fhat * ghat;
    return displacement_coefficients(prod);
}

GridFunction star_grid(const GridFunction& f, const GridFunction& g, const KernelK& K) {
    K.validate();
    return grid_untilde(boxtimes_table(grid_tilde(f, K), grid_tilde(g, K)), K);
}

}  // namespace pw::grid
