#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "rinv/common.hpp"

namespace rinv {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A finite-dimensional Hilbert space with a diagonal (quadrature/mass)
/// inner product <x,y> = sum_i w_i x_i y_i.
struct WeightedSpace {
    Vector w;

    WeightedSpace() = default;
    explicit WeightedSpace(Vector weights);

    static WeightedSpace unit(Eigen::Index n);

    Eigen::Index dim() const { return w.size(); }
    double inner(const Vector& x, const Vector& y) const;
    double norm(const Vector& x) const;
    /// diag(sqrt(w)), the isometry onto Euclidean coordinates.
    Vector sqrt_w() const { return w.array().sqrt().matrix(); }
};

/// <x,y>_space. Throws DimensionError on length mismatch.
double weighted_inner(const WeightedSpace& space, const Vector& x, const Vector& y);

/// Dense linear operator between two weighted spaces.
struct LinOpRep {
    Matrix A;
    WeightedSpace dom;
    WeightedSpace cod;

    LinOpRep() = default;
    LinOpRep(Matrix m, WeightedSpace domain, WeightedSpace codomain);

    Eigen::Index rows() const { return A.rows(); }
    Eigen::Index cols() const { return A.cols(); }
    Vector apply(const Vector& x) const;
    /// A* y computed in place from the weights, without forming adjoint().
    Vector apply_adjoint(const Vector& y) const;
    /// Operator norm in the weighted geometry (exact, via SVD).
    double op_norm() const;
};

/// Hilbert-space adjoint: matrix diag(w_dom)^{-1} A^T diag(w_cod), spaces swapped.
LinOpRep adjoint(const LinOpRep& op);

/// Solves (K*K + P*P + alpha id) z = rhs in K's domain space, P optional.
/// The system is assembled in symmetric form and factorized (Cholesky).
Vector solve_regularized(const LinOpRep& K, const LinOpRep* P, double alpha, const Vector& rhs);

struct NullspaceResult {
    /// All singular values of the operator in its weighted geometry, descending,
    /// padded with exact zeros up to the domain dimension when the matrix is wide.
    Vector singular_values;
    /// Columns form a w-orthonormal basis of the right-singular subspace with
    /// sigma <= rel_tol * sigma_max. Empty (0 columns) when none qualifies.
    Matrix basis;
    Eigen::Index dim() const { return basis.cols(); }
};

/// SVD-based numerical nullspace at a relative tolerance in (0,1).
/// Large operators (domain dimension above ~1200) are handled through the
/// weighted Gram matrix; the sqrt(eps) resolution that costs is two decades
/// below the tolerances used anywhere in this project.
NullspaceResult numerical_nullspace(const LinOpRep& op, double rel_tol);

using VectorMap = std::function<Vector(const Vector&)>;

/// Recommended central-difference step for a smooth map at x.
double default_fd_step(const Vector& x);

/// Central-difference Jacobian, column by column:
/// column_i = (map(x + step e_i) - map(x - step e_i)) / (2 step).
LinOpRep fd_jacobian(const VectorMap& map, const Vector& x, double step,
                     const WeightedSpace& dom, const WeightedSpace& cod);

}  // namespace rinv
