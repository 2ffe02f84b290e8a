#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

namespace pw {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using CMat2 = Eigen::Matrix2cd;
using CMat3 = Eigen::Matrix3cd;
using CMat4 = Eigen::Matrix4cd;
using CMatX = Eigen::MatrixXcd;
using CVecX = Eigen::VectorXcd;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// hbar = c = 1 by default; the formulas carry both symbolically.
struct Units {
    double hbar = 1.0;
    double c = 1.0;
};

enum class Exec { serial, parallel };

// Deterministic pairwise reduction. Same result in any build, independent of
// thread count, as long as the element order is fixed.
template <typename T>
T pairwise_sum(std::span<const T> v) {
    const std::size_t n = v.size();
    if (n == 0) return T{};
    if (n <= 32) {
        T acc = v[0];
        for (std::size_t i = 1; i < n; ++i) acc += v[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(std::span<const T>(v.data(), v.size()));
}

}  // namespace pw
