#include "rinv/numerics.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace rinv {

WeightedSpace::WeightedSpace(Vector weights) : w(std::move(weights)) {
    if (w.size() < 1) throw DimensionError("WeightedSpace: dim must be >= 1");
    if (!(w.array() > 0.0).all() || !w.allFinite())
        throw ArgumentError("WeightedSpace: weights must be positive and finite");
}

WeightedSpace WeightedSpace::unit(Eigen::Index n) {
    return WeightedSpace(Vector::Ones(n));
}

double WeightedSpace::inner(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw DimensionError("weighted_inner: vector length does not match space dim");
    return (w.array() * x.array() * y.array()).sum();
}

double WeightedSpace::norm(const Vector& x) const { return std::sqrt(inner(x, x)); }

double weighted_inner(const WeightedSpace& space, const Vector& x, const Vector& y) {
    return space.inner(x, y);
}

LinOpRep::LinOpRep(Matrix m, WeightedSpace domain, WeightedSpace codomain)
    : A(std::move(m)), dom(std::move(domain)), cod(std::move(codomain)) {
    if (A.rows() != cod.dim() || A.cols() != dom.dim())
        throw DimensionError("LinOpRep: matrix shape does not match spaces");
    if (!A.allFinite()) throw NumericError("LinOpRep: non-finite entries");
}

Vector LinOpRep::apply(const Vector& x) const {
    if (x.size() != cols()) throw DimensionError("LinOpRep::apply: bad length");
    return A * x;
}

Vector LinOpRep::apply_adjoint(const Vector& y) const {
    if (y.size() != rows()) throw DimensionError("LinOpRep::apply_adjoint: bad length");
    return ((A.transpose() * (cod.w.array() * y.array()).matrix()).array() / dom.w.array())
        .matrix();
}

double LinOpRep::op_norm() const {
    Matrix B = cod.sqrt_w().asDiagonal() * A * dom.w.array().rsqrt().matrix().asDiagonal();
    return Eigen::JacobiSVD<Matrix>(B).singularValues()(0);
}

LinOpRep adjoint(const LinOpRep& op) {
    Matrix At = op.dom.w.array().inverse().matrix().asDiagonal() * op.A.transpose() *
                op.cod.w.asDiagonal();
    return LinOpRep(std::move(At), op.cod, op.dom);
}

Vector solve_regularized(const LinOpRep& K, const LinOpRep* P, double alpha, const Vector& rhs) {
    if (!(alpha > 0.0)) throw ArgumentError("solve_regularized: alpha must be > 0");
    if (rhs.size() != K.cols()) throw DimensionError("solve_regularized: rhs length");
    if (!rhs.allFinite() || !K.A.allFinite())
        throw NumericError("solve_regularized: non-finite input");
    if (P) {
        if (P->cols() != K.cols()) throw DimensionError("solve_regularized: P domain mismatch");
        if (!P->A.allFinite()) throw NumericError("solve_regularized: non-finite P");
    }

    // (K*K + P*P + alpha id) z = rhs, multiplied through by diag(w_dom):
    // (K^T Wc K + P^T Wp P + alpha W) z = W rhs, symmetric positive definite.
    const Vector& wd = K.dom.w;
    Matrix H = K.A.transpose() * K.cod.w.asDiagonal() * K.A;
    if (P) H += P->A.transpose() * P->cod.w.asDiagonal() * P->A;
    H += (alpha * wd).asDiagonal().toDenseMatrix();
    Eigen::LLT<Matrix> llt(H);
    if (llt.info() != Eigen::Success)
        throw NumericError("solve_regularized: Cholesky factorization failed");
    return llt.solve((wd.array() * rhs.array()).matrix());
}

namespace {

NullspaceResult nullspace_from_svd(const Matrix& B, const Vector& inv_sqrt_wd, double rel_tol) {
    Eigen::BDCSVD<Matrix> svd(B, Eigen::ComputeFullV);
    const Vector sv = svd.singularValues();
    const Eigen::Index n = B.cols();
    Vector all_sv = Vector::Zero(n);
    all_sv.head(sv.size()) = sv;
    const double smax = all_sv.size() ? all_sv(0) : 0.0;

    NullspaceResult out;
    out.singular_values = all_sv;
    Eigen::Index first = n;
    if (smax <= 0.0) {
        first = 0;  // zero operator: everything is nullspace
    } else {
        for (Eigen::Index k = 0; k < n; ++k) {
            if (all_sv(k) <= rel_tol * smax) {
                first = k;
                break;
            }
        }
    }
    const Eigen::Index nulldim = n - first;
    out.basis.resize(n, nulldim);
    for (Eigen::Index k = 0; k < nulldim; ++k)
        out.basis.col(k) = inv_sqrt_wd.array() * svd.matrixV().col(first + k).array();
    return out;
}

NullspaceResult nullspace_from_gram(const Matrix& B, const Vector& inv_sqrt_wd, double rel_tol) {
    Matrix G = B.transpose() * B;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(G);
    if (eig.info() != Eigen::Success)
        throw NumericError("numerical_nullspace: eigendecomposition failed");
    const Eigen::Index n = B.cols();
    Vector all_sv(n);
    for (Eigen::Index k = 0; k < n; ++k)
        all_sv(k) = std::sqrt(std::max(eig.eigenvalues()(n - 1 - k), 0.0));
    const double smax = all_sv(0);

    NullspaceResult out;
    out.singular_values = all_sv;
    Eigen::Index first = n;
    if (smax <= 0.0) {
        first = 0;
    } else {
        for (Eigen::Index k = 0; k < n; ++k) {
            if (all_sv(k) <= rel_tol * smax) {
                first = k;
                break;
            }
        }
    }
    const Eigen::Index nulldim = n - first;
    out.basis.resize(n, nulldim);
    for (Eigen::Index k = 0; k < nulldim; ++k) {
        // eigenvalues ascending: smallest first
        out.basis.col(k) = inv_sqrt_wd.array() * eig.eigenvectors().col(nulldim - 1 - k).array();
    }
    return out;
}

}  // namespace

NullspaceResult numerical_nullspace(const LinOpRep& op, double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw ArgumentError("numerical_nullspace: rel_tol must be in (0,1)");
    const Vector inv_sqrt_wd = op.dom.w.array().rsqrt().matrix();
    Matrix B = op.cod.sqrt_w().asDiagonal() * op.A * inv_sqrt_wd.asDiagonal();
    if (op.cols() <= 1200) return nullspace_from_svd(B, inv_sqrt_wd, rel_tol);
    return nullspace_from_gram(B, inv_sqrt_wd, rel_tol);
}

double default_fd_step(const Vector& x) {
    return 1e-5 * (1.0 + (x.size() ? x.cwiseAbs().maxCoeff() : 0.0));
}

LinOpRep fd_jacobian(const VectorMap& map, const Vector& x, double step,
                     const WeightedSpace& dom, const WeightedSpace& cod) {
    if (!(step > 0.0)) throw ArgumentError("fd_jacobian: step must be > 0");
    if (x.size() != dom.dim()) throw DimensionError("fd_jacobian: x does not match domain");
    Matrix J(cod.dim(), dom.dim());
    Vector xp = x, xm = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        xp(i) = x(i) + step;
        xm(i) = x(i) - step;
        J.col(i) = (map(xp) - map(xm)) / (2.0 * step);
        xp(i) = x(i);
        xm(i) = x(i);
    }
    return LinOpRep(std::move(J), dom, cod);
}

}  // namespace rinv
