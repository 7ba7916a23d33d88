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


#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>

#include <Eigen/Dense>

namespace inqc {

using Unitary2 = Eigen::Matrix2cd;

bool is_unitary(const Eigen::Matrix2cd& u, double tol = 1e-9);

/// Largest singular value, closed form for 2x2.
double operator_norm(const Eigen::Matrix2cd& a);

/// Haar-random single-qubit unitary.
Unitary2 random_unitary2(std::mt19937_64& rng);

/// Entries with real and imaginary parts as integers in units of 2^-ell,
/// row major: re00, im00, re01, im01, re10, im10, re11, im11.
struct RoundedMatrix {
    int ell = 0;
    std::array<std::int64_t, 8> parts{};

    Eigen::Matrix2cd value() const;
    /// Sign-magnitude bits of every part, ell + 2 bits each.
    std::string bits() const;
    friend bool operator==(const RoundedMatrix&, const RoundedMatrix&) = default;
    friend auto operator<=>(const RoundedMatrix&, const RoundedMatrix&) = default;
};

RoundedMatrix round_matrix(const Eigen::Matrix2cd& m, int ell);

struct RoundedProduct {
    RoundedMatrix m;
    /// Operator norm of M - w_t ... w_1.
    double error = 0;
};

/// M_0 = I, M_r = round(w_r M_{r-1}); `ws` in time order.
RoundedProduct rounded_product(std::span<const Unitary2> ws, int ell);

/// t 2^(-ell + 1).
double rounding_bound(std::size_t t, int ell);
/// ceil(log t) + ceil(log 1/eps1) + 1.
int ell_for(std::size_t t, double eps1);

}  // namespace inqc
