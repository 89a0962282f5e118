#include "jsrlab/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace jsrlab {

bool close(double a, double b, double rel, double abs_floor) {
    const double diff = std::abs(a - b);
    return diff <= std::max(abs_floor, rel * std::max(std::abs(a), std::abs(b)));
}

void validate_matrix(const Matrix& a) {
    if (a.rows() < 1 || a.rows() != a.cols()) {
        std::ostringstream os;
        os << "matrix must be square and nonempty, got " << a.rows() << "x"
           << a.cols();
        throw DomainError(os.str());
    }
    if (!a.allFinite()) throw DomainError("matrix has non-finite entries");
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const Eigen::Index n = a.rows(), k = a.cols(), m = b.cols();
    if (k != b.rows()) throw ShapeError("inner dimensions do not match");
    Matrix c(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            Complex acc(0.0, 0.0);
            for (Eigen::Index l = 0; l < k; ++l) acc += a(i, l) * b(l, j);
            c(i, j) = acc;
        }
    }
    return c;
}

Matrix matrix_power(const Matrix& a, int k) {
    validate_matrix(a);
    if (k < 1) throw DomainError("power must be >= 1");
    Matrix p = a;
    for (int i = 1; i < k; ++i) {
        p = multiply(p, a);
        if (!p.allFinite())
            throw OverflowError(
                "matrix power overflowed at step " + std::to_string(i + 1) +
                "; pre-scale the matrix (divide by a norm) and rescale the result");
    }
    return p;
}

Vector eigenvalues(const Matrix& a) {
    validate_matrix(a);
    if (a.rows() == 1) {
        Vector v(1);
        v(0) = a(0, 0);
        return v;
    }
    Eigen::ComplexEigenSolver<Matrix> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw ComputationError("complex eigensolver did not converge");
    return solver.eigenvalues();
}

double spectral_radius(const Matrix& a) {
    const Vector lam = eigenvalues(a);
    double r = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        r = std::max(r, std::abs(lam(i)));
    return r;
}

double sigma1(const Matrix& a) {
    validate_matrix(a);
    Eigen::JacobiSVD<Matrix> svd(a);
    if (svd.info() != Eigen::Success)
        throw ComputationError("SVD did not converge");
    return svd.singularValues()(0);
}

Matrix cholesky(const Matrix& p) {
    validate_matrix(p);
    const Eigen::Index n = p.rows();
    const double scale = p.cwiseAbs().maxCoeff();
    const double herm_tol = tol::kRelative * (1.0 + scale);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (std::abs(p(i, j) - std::conj(p(j, i))) > herm_tol)
                throw DomainError("matrix is not Hermitian");

    // P = T*T with T upper triangular: column-wise elimination.
    Matrix t = Matrix::Zero(n, n);
    const double pivot_tol = tol::kAbsolute * std::max(1.0, scale);
    for (Eigen::Index j = 0; j < n; ++j) {
        Complex acc = p(j, j);
        for (Eigen::Index k = 0; k < j; ++k) acc -= std::conj(t(k, j)) * t(k, j);
        const double pivot = acc.real();
        if (pivot <= pivot_tol) {
            std::ostringstream os;
            os << "matrix is not positive definite: pivot " << j << " is "
               << pivot;
            throw NotPositiveDefiniteError(os.str(), static_cast<int>(j));
        }
        const double d = std::sqrt(pivot);
        t(j, j) = d;
        for (Eigen::Index c = j + 1; c < n; ++c) {
            Complex s = p(j, c);
            for (Eigen::Index k = 0; k < j; ++k) s -= std::conj(t(k, j)) * t(k, c);
            t(j, c) = s / d;
        }
    }
    return t;
}

EllipsoidalShape EllipsoidalShape::from_matrix(const Matrix& p) {
    validate_matrix(p);
    Matrix sym = 0.5 * (p + p.adjoint());
    Matrix t = cholesky(sym);
    const Matrix residual = sym - multiply(t.adjoint(), t);
    double res = 0.0, scale = 0.0;
    for (Eigen::Index i = 0; i < sym.rows(); ++i) {
        double rs = 0.0, ss = 0.0;
        for (Eigen::Index j = 0; j < sym.cols(); ++j) {
            rs += std::abs(residual(i, j));
            ss += std::abs(sym(i, j));
        }
        res = std::max(res, rs);
        scale = std::max(scale, ss);
    }
    if (res > 1e-10 * scale && res > tol::kAbsolute)
        throw ComputationError("Cholesky reconstruction error too large");
    return EllipsoidalShape(std::move(sym), std::move(t));
}

EllipsoidalShape EllipsoidalShape::identity(int n) {
    return from_matrix(Matrix::Identity(n, n));
}

NormKind NormKind::ellipsoidal(EllipsoidalShape shape) {
    NormKind kind(Tag::Ellipsoidal);
    kind.shape_ = std::make_shared<const EllipsoidalShape>(std::move(shape));
    return kind;
}

const EllipsoidalShape& NormKind::shape() const {
    if (!shape_) throw DomainError("norm kind carries no ellipsoidal shape");
    return *shape_;
}

std::string NormKind::name() const {
    switch (tag_) {
        case Tag::ColumnSum: return "colsum";
        case Tag::Spectral: return "spectral";
        case Tag::RowSum: return "rowsum";
        case Tag::Ellipsoidal: return "ellipsoidal";
    }
    return "unknown";
}

double ellipsoidal_vector_norm(const Vector& x, const EllipsoidalShape& shape) {
    if (x.size() != shape.dim()) throw ShapeError("vector/shape dimension mismatch");
    const Complex q = (x.adjoint() * shape.p() * x)(0, 0);
    return std::sqrt(std::max(0.0, q.real()));
}

namespace {

double max_abs_row_sum(const Matrix& a) {
    double best = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

double max_abs_col_sum(const Matrix& a) {
    double best = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

// X T^{-1} for upper-triangular T via a transposed triangular solve.
Matrix right_solve_upper(const Matrix& x, const Matrix& t) {
    for (Eigen::Index i = 0; i < t.rows(); ++i)
        if (std::abs(t(i, i)) < 1e-300)
            throw Error("Cholesky factor is numerically singular");
    return t.transpose()
        .triangularView<Eigen::Lower>()
        .solve(x.transpose())
        .transpose();
}

}  // namespace

double ellipsoidal_norm_sim(const Matrix& a, const EllipsoidalShape& shape) {
    if (a.rows() != shape.dim()) throw ShapeError("matrix/shape dimension mismatch");
    const Matrix ta = multiply(shape.t(), a);
    return sigma1(right_solve_upper(ta, shape.t()));
}

double ellipsoidal_norm_gram(const Matrix& a, const EllipsoidalShape& shape) {
    if (a.rows() != shape.dim()) throw ShapeError("matrix/shape dimension mismatch");
    // P^{-1} A* P through two triangular solves against T.
    const Matrix astar_p = multiply(a.adjoint(), shape.p());
    const Matrix tinv_tstar_solve =
        shape.t().adjoint().triangularView<Eigen::Lower>().solve(astar_p);
    const Matrix pinv_astar_p =
        shape.t().triangularView<Eigen::Upper>().solve(tinv_tstar_solve);
    return std::sqrt(std::max(0.0, spectral_radius(multiply(a, pinv_astar_p))));
}

double operator_norm(const Matrix& a, const NormKind& kind) {
    validate_matrix(a);
    switch (kind.tag()) {
        case NormKind::Tag::ColumnSum: return max_abs_col_sum(a);
        case NormKind::Tag::RowSum: return max_abs_row_sum(a);
        case NormKind::Tag::Spectral: return sigma1(a);
        case NormKind::Tag::Ellipsoidal: return ellipsoidal_norm_sim(a, kind.shape());
    }
    throw DomainError("unknown norm kind");
}

double gelfand_estimate(const Matrix& a, int k, const NormKind& kind) {
    if (k < 1) throw DomainError("gelfand_estimate needs k >= 1");
    return std::pow(operator_norm(matrix_power(a, k), kind), 1.0 / k);
}

double trace_estimate(const Matrix& a, int k) {
    if (k < 1) throw DomainError("trace_estimate needs k >= 1");
    return std::pow(std::abs(matrix_power(a, k).trace()), 1.0 / k);
}

bool is_row_stochastic(const Matrix& a, double tol_in) {
    validate_matrix(a);
    if (tol_in < 0) throw DomainError("tolerance must be >= 0");
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Complex row_sum(0, 0);
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (std::abs(a(i, j).imag()) > tol_in) return false;
            if (a(i, j).real() < -tol_in) return false;
            row_sum += a(i, j);
        }
        if (std::abs(row_sum.real() - 1.0) > tol_in) return false;
    }
    return true;
}

PowerBoundedResult power_bounded_probe(const Matrix& a, int max_power,
                                       double cap) {
    validate_matrix(a);
    if (max_power < 1) throw DomainError("max_power must be >= 1");
    const double rho = spectral_radius(a);
    if (rho <= 1e-14 * std::max(1.0, max_abs_row_sum(a)))
        throw DomainError(
            "power_bounded_probe needs rho(A) > 0 (nilpotent input is trivially "
            "bounded in the limit)");
    const Matrix b = a / rho;
    Matrix p = b;
    for (int k = 1; k <= max_power; ++k) {
        if (k > 1) p = multiply(p, b);
        if (!p.allFinite() || max_abs_row_sum(p) > cap) return {false, k};
    }
    return {true, -1};
}

}  // namespace jsrlab
