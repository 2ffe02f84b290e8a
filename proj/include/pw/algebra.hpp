#pragma once

#include <array>

#include "pw/field.hpp"
#include "pw/types.hpp"

namespace pw::algebra {

// Signature (+,+,+,-), coordinates (x1,x2,x3,x4=ct), eps_{1234} = 1.
inline const Eigen::Vector4d metric_diag{1.0, 1.0, 1.0, -1.0};

// Antisymmetric 2-form coefficients w_{mu nu} in the convention
// w = (1/2) w_{mu nu} dx^mu ^ dx^nu.
struct TwoForm4D {
    CMat4 coeff = CMat4::Zero();

    bool antisymmetric(double tol = 1e-12) const;
};

// Spinorial 1-form matrices g_mu^{A Bdot} and the epsilon spinor.
struct SpinorBasis {
    std::array<CMat2, 4> g_lower;  // g_mu^{A Bdot}
    std::array<CMat2, 4> g_upper;  // g^{mu A Bdot} (index raised with eta)
    CMat2 eps;                     // antisymmetric spinor, eps_{12} = +1
};
const SpinorBasis& spinor_basis();

// Symmetric spinorial 2-forms S^{AB} and S^{AdotBdot} = (S^{AB})^*.
struct SigmaForms {
    // selfdual[A][B] / antiselfdual[Ad][Bd] hold the 2-form coefficient matrices.
    std::array<std::array<CMat4, 2>, 2> selfdual;
    std::array<std::array<CMat4, 2>, 2> antiselfdual;
};
SigmaForms build_sigma_forms();

enum class Chirality { dotted, undotted };

struct SymSpinor2 {
    CMat2 entries = CMat2::Zero();
    Chirality chirality = Chirality::dotted;

    bool symmetric(double tol = 1e-12) const;
};

// Riemann-Silberstein vector F = (E + iB)/sqrt(2).
struct RSVector {
    CVec3 F = CVec3::Zero();
};

// The three Phi matrices with lower and raised spinor indices.
struct PhiTriple {
    std::array<CMat2, 3> lower;  // Phi^j_{AdotBdot}
    std::array<CMat2, 3> upper;  // Phi^{j AdotBdot}
};
const PhiTriple& phi_triple();

enum class Spin1Rep { standard, primed };

struct Spin1Set {
    std::array<CMat3, 3> S;
    Spin1Rep rep = Spin1Rep::standard;
};
const Spin1Set& spin1(Spin1Rep rep);
Spin1Set apply_u_similarity(const Spin1Set& primed);

// The unitary change of basis between the RS vector and the spinor column
// (f_11, sqrt(2) f_12, f_22).
struct UnitaryU {
    CMat3 u;
    CMat3 u_dagger;
};
const UnitaryU& unitary_u();

struct GroupElements {
    CMat2 l;  // SL(2,C)
    CMat3 t;  // SO(3,C)
};

TwoForm4D hodge_star(const TwoForm4D& w);

SymSpinor2 f_from_F(const RSVector& F);
RSVector F_from_f(const SymSpinor2& f);

RSVector rs_from_fields(const Vec3& E, const Vec3& B);

GroupElements so3c_from_sl2c(const CMat2& l);

// Real E and B 3-vector fields sampled on a position grid.
struct EMField {
    Grid3 axes;
    std::vector<double> E;  // 3 per node, node-major
    std::vector<double> B;
};

// RS field sampled on a position grid (3 complex components per node).
SampledField rs_from_fields(const EMField& em);

struct FieldFunctionals {
    double energy = 0.0;
    Vec3 momentum = Vec3::Zero();
    Vec3 angular_momentum = Vec3::Zero();
    Vec3 energy_moment = Vec3::Zero();
    double imag_residual = 0.0;    // largest dropped imaginary part, relative
    bool boundary_warning = false; // field not negligible at the grid boundary
};

// Classical field functionals E, P, M, N of an RS field by trapezoid
// quadrature; c enters through P and M.
FieldFunctionals field_functionals(const SampledField& F, double c = 1.0);

}  // namespace pw::algebra
