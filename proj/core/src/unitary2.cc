// Copyright 2026 The INQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "inqc/unitary2.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "inqc/variables.h"

namespace inqc {

bool is_unitary(const Eigen::Matrix2cd& u, double tol) {
    return operator_norm(u.adjoint() * u - Eigen::Matrix2cd::Identity()) <= tol;
}

double operator_norm(const Eigen::Matrix2cd& a) {
    const double f2 = a.squaredNorm();
    const double det = std::abs(a.determinant());
    const double disc = std::max(0.0, f2 * f2 - 4 * det * det);
    return std::sqrt((f2 + std::sqrt(disc)) / 2);
}

Unitary2 random_unitary2(std::mt19937_64& rng) {
    // Haar measure via Euler angles: cos^2 of the half polar angle is uniform.
    const double c2 = random_unit(rng);
    const double c = std::sqrt(c2);
    const double s = std::sqrt(1 - c2);
    const double two_pi = 2 * std::numbers::pi;
    const double a = two_pi * random_unit(rng);
    const double b = two_pi * random_unit(rng);
    const double g = two_pi * random_unit(rng);
    const std::complex<double> ea = std::polar(1.0, a), eb = std::polar(1.0, b), eg = std::polar(1.0, g);
    Unitary2 u;
    u << ea * c, -std::conj(eb) * s * eg, eb * s, std::conj(ea) * c * eg;
    return u;
}

Eigen::Matrix2cd RoundedMatrix::value() const {
    const double unit = std::ldexp(1.0, -ell);
    Eigen::Matrix2cd m;
    for (int i = 0; i < 4; ++i) {
        m(i / 2, i % 2) = std::complex<double>(static_cast<double>(parts[2 * i]) * unit,
                                               static_cast<double>(parts[2 * i + 1]) * unit);
    }
    return m;
}

std::string RoundedMatrix::bits() const {
    std::string out;
    for (auto p : parts) {
        out.push_back(p < 0 ? '1' : '0');
        const std::uint64_t mag = static_cast<std::uint64_t>(p < 0 ? -p : p);
        for (int b = ell; b >= 0; --b) out.push_back(((mag >> b) & 1) ? '1' : '0');
    }
    return out;
}

RoundedMatrix round_matrix(const Eigen::Matrix2cd& m, int ell) {
    if (ell < 1 || ell > 50) throw std::invalid_argument("fractional bits must be in [1, 50]");
    RoundedMatrix r;
    r.ell = ell;
    const double scale = std::ldexp(1.0, ell);
    for (int i = 0; i < 4; ++i) {
        const auto v = m(i / 2, i % 2);
        r.parts[2 * i] = std::llround(v.real() * scale);
        r.parts[2 * i + 1] = std::llround(v.imag() * scale);
    }
    return r;
}

RoundedProduct rounded_product(std::span<const Unitary2> ws, int ell) {
    if (ws.empty()) throw std::invalid_argument("rounded product needs at least one factor");
    Eigen::Matrix2cd exact = Eigen::Matrix2cd::Identity();
    RoundedMatrix m = round_matrix(Eigen::Matrix2cd::Identity(), ell);
    for (const auto& w : ws) {
        m = round_matrix(w * m.value(), ell);
        exact = w * exact;
    }
    return {m, operator_norm(m.value() - exact)};
}

double rounding_bound(std::size_t t, int ell) { return static_cast<double>(t) * std::ldexp(1.0, 1 - ell); }

int ell_for(std::size_t t, double eps1) {
    if (t == 0 || !(eps1 > 0 && eps1 < 1)) throw std::invalid_argument("need t >= 1 and 0 < eps1 < 1");
    return static_cast<int>(std::ceil(std::log2(static_cast<double>(t)))) +
           static_cast<int>(std::ceil(std::log2(1 / eps1))) + 1;
}

}  // namespace inqc
