// Copyright 2026 The qising Authors
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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qising {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Tolerances shared across the library. Structural predicates use `structural`,
/// checks on caller input use `input`.
struct Tolerances {
    double structural = 1e-9;
    double input = 1e-12;
};

/// Normalized trace, tr(1) = 1.
cplx ntrace(const CMat &m);
/// Hilbert-Schmidt inner product <x, y> = ntrace(x* y).
cplx hs_inner(const CMat &x, const CMat &y);
double hs_norm(const CMat &m);
CMat identity(int dim);
CMat commutator(const CMat &a, const CMat &b);

bool is_hermitian(const CMat &m, double tol = 1e-12);
bool is_unitary(const CMat &m, double tol = 1e-10);
bool is_projection(const CMat &p, double tol = 1e-9);

struct EigenSystem {
    Eigen::VectorXd values;  // ascending
    CMat vectors;            // unitary, columns are eigenvectors
};

EigenSystem hermitian_eig(const CMat &m, double tol = 1e-12);

/// Principal logarithm. Eigenphases lie in (-pi, pi]; a phase of exactly -pi is
/// reported as +pi.
CMat unitary_log(const CMat &v, double tol = 1e-12);

CMat expm(const CMat &k);

/// Orthonormal (Hilbert-Schmidt) basis of a linear subspace of M_D.
class SpanBasis {
   public:
    explicit SpanBasis(int ambient_dim = 1);

    /// Trusts that `elements` are already orthonormal.
    static SpanBasis from_orthonormal(int ambient_dim, std::vector<CMat> elements);

    int ambient_dim() const {
        return dim_;
    }
    std::size_t size() const {
        return elements_.size();
    }
    const std::vector<CMat> &elements() const {
        return elements_;
    }
    const CMat &operator[](std::size_t k) const {
        return elements_[k];
    }

    /// Gram-Schmidt step. Returns true if `m` added a new direction.
    bool try_add(const CMat &m, double tol = 1e-9);

    CVec coefficients(const CMat &m) const;
    CMat project(const CMat &m) const;
    CMat combine(const CVec &coeffs) const;
    double residual(const CMat &m) const;

    double gram_defect() const;
    bool is_star_closed(double tol = 1e-9) const;

   private:
    int dim_;
    std::vector<CMat> elements_;
};

SpanBasis orthonormalize(std::span<const CMat> vectors, int ambient_dim, double tol = 1e-9);

/// ||M - proj(M)||_HS.
double span_membership(const CMat &m, const SpanBasis &basis);

/// max over both directions of the membership residuals.
double span_distance(const SpanBasis &a, const SpanBasis &b);

/// Basis of the full matrix algebra M_D built from matrix units.
SpanBasis full_matrix_basis(int dim);

/// {X in M_D : [X, b] = 0 for b in basis}.
SpanBasis commutant(const SpanBasis &basis, double tol = 1e-9, std::uint64_t seed = 7);

/// {X in span(within) : [X, c] = 0 for c in constraints}.
SpanBasis relative_commutant(std::span<const CMat> constraints, const SpanBasis &within, double tol = 1e-9);

/// Unital *-algebra generated by `generators` inside M_D.
SpanBasis generate_algebra(std::span<const CMat> generators, int ambient_dim, double tol = 1e-9);

/// Centre of the algebra spanned by `algebra`, given a generating set of it.
SpanBasis center(const SpanBasis &algebra, std::span<const CMat> generators, double tol = 1e-9);

/// W* b W = b_small (x) 1_mu for every b in a simple algebra.
struct SimpleDecomposition {
    int d = 0;
    int mu = 0;
    CMat w;
    double residual = 0;

    CMat to_factor(const CMat &m) const;
    CMat from_factor(const CMat &small) const;
};

SimpleDecomposition decompose_simple(const SpanBasis &basis, std::uint64_t seed = 11, double tol = 1e-8);

}  // namespace qising
