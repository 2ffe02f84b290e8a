#pragma once

#include <array>
#include <string>

#include "pw/types.hpp"

namespace pw::grid {

// Point of the 3x3 grid Gamma^3: (phi_m, n), phi_m = 2 pi m / 3.
struct GridPoint {
    int m = 0;
    int n = 0;
    double phi() const { return 2.0 * pi * m / 3.0; }
};

// Operator on the internal 3-dimensional space, in the phi-basis
// {|phi_0>, |phi_1>, |phi_2>}.
struct DiscreteOperator {
    CMat3 mat = CMat3::Zero();
};

// f(phi_m, n): value(m, n), m row, n column.
struct GridFunction {
    std::array<cplx, 9> v{};
    cplx& at(int m, int n) { return v[3 * m + n]; }
    const cplx& at(int m, int n) const { return v[3 * m + n]; }
};

// ftilde(k, l): dual-index table.
struct GridDual {
    std::array<cplx, 9> v{};
    cplx& at(int k, int l) { return v[3 * k + l]; }
    const cplx& at(int k, int l) const { return v[3 * k + l]; }
};

// Grid kernel K(pi k l / 3). Shipped: weyl67 K = (-1)^{kl} and
// cos69 K = cos(pi k l / 3). Every entry must be nonzero.
struct KernelK {
    std::array<cplx, 9> table{};
    std::string name = "custom";

    cplx at(int k, int l) const { return table[3 * k + l]; }
    bool unimodular(double tol = 1e-12) const;
    void validate() const;  // throws on zero entries or K(0) != 1

    static KernelK weyl67();
    static KernelK cos69();
    static KernelK custom(const std::array<cplx, 9>& t);
};

// Displacement operator D(k,l) in the phi-basis.
DiscreteOperator displacement(int k, int l);
// Same operator in the |n> basis (used by the phase-space engine).
CMat3 displacement_n(int k, int l);

// Discrete factor of the Stratonovich-Weyl quantizer,
// Omega(m,n) = (1/3) sum_{k,l} K(pi k l/3) e^{-i(k phi_m + phi_l n)} D(k,l).
DiscreteOperator grid_quantizer(int m, int n, const KernelK& K);

// Weyl correspondence on the grid: fhat = (1/3) sum_{m,n} f(m,n) Omega(m,n),
// and its inverse.
DiscreteOperator grid_weyl_op(const GridFunction& f, const KernelK& K);
GridFunction grid_inverse(const DiscreteOperator& g, const KernelK& K);

// Dual transforms: ftilde(k,l) = (K(pi k l/3)/9) sum_{m,n} f e^{-i(k phi_m + phi_l n)}.
// grid_weyl_op(f) == sum_{k,l} ftilde(k,l) D(k,l) holds exactly.
GridDual grid_tilde(const GridFunction& f, const KernelK& K);
GridFunction grid_untilde(const GridDual& ft, const KernelK& K);

// Grid boxtimes product from the explicit 81-term table (unit-modulus phase
// coefficients; kernel-independent).
GridDual boxtimes_table(const GridDual& ft, const GridDual& gt);

// Ground truth: assemble fhat = sum ft(k,l) D(k,l), multiply, project back via
// (1/3) Tr{fhat ghat D^dagger(k,l)}.
GridDual boxtimes_oracle(const GridDual& ft, const GridDual& gt);

// Star product on the grid via tilde -> boxtimes -> untilde.
GridFunction star_grid(const GridFunction& f, const GridFunction& g, const KernelK& K);

}  // namespace pw::grid
