#ifndef JSRLAB_MATRIX_HPP
#define JSRLAB_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <string>

#include "jsrlab/errors.hpp"

namespace jsrlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace tol {
// Default comparison policy: relative 1e-9 with absolute floor 1e-12.
inline constexpr double kRelative = 1e-9;
inline constexpr double kAbsolute = 1e-12;
// Structural pattern detection is absolute; see special-case detectors.
inline constexpr double kPattern = 1e-12;
}  // namespace tol

/// True when |a-b| <= max(abs_floor, rel * max(|a|,|b|)).
bool close(double a, double b, double rel = tol::kRelative,
           double abs_floor = tol::kAbsolute);

/// Throws DomainError unless A is square, nonempty and entrywise finite.
void validate_matrix(const Matrix& a);

/// Fixed-order dense product (row, column, then inner index ascending).
/// All product evaluation in the library funnels through this so that
/// repeated evaluations are bit-identical.
Matrix multiply(const Matrix& a, const Matrix& b);

/// A^k by repeated left-to-right multiplication; throws OverflowError if
/// entries leave the representable range.
Matrix matrix_power(const Matrix& a, int k);

/// All eigenvalues of a dense complex matrix (backward-stable QR iteration).
Vector eigenvalues(const Matrix& a);

/// Largest eigenvalue modulus.
double spectral_radius(const Matrix& a);

/// Largest singular value.
double sigma1(const Matrix& a);

/// Upper-triangular T with strictly positive real diagonal and P = T*T.
/// Throws NotPositiveDefiniteError naming the failing pivot.
Matrix cholesky(const Matrix& p);

/// Hermitian positive definite P together with its Cholesky factor T
/// (upper triangular, positive diagonal, P = T*T). Immutable.
class EllipsoidalShape {
public:
    static EllipsoidalShape from_matrix(const Matrix& p);
    static EllipsoidalShape identity(int n);

    const Matrix& p() const { return p_; }
    const Matrix& t() const { return t_; }
    int dim() const { return static_cast<int>(p_.rows()); }

private:
    EllipsoidalShape(Matrix p, Matrix t) : p_(std::move(p)), t_(std::move(t)) {}
    Matrix p_;
    Matrix t_;
};

/// Tag for the induced matrix norms the toolkit works with.
class NormKind {
public:
    enum class Tag { ColumnSum, Spectral, RowSum, Ellipsoidal };

    static NormKind column_sum() { return NormKind(Tag::ColumnSum); }
    static NormKind spectral() { return NormKind(Tag::Spectral); }
    static NormKind row_sum() { return NormKind(Tag::RowSum); }
    static NormKind ellipsoidal(EllipsoidalShape shape);

    Tag tag() const { return tag_; }
    const EllipsoidalShape& shape() const;
    std::string name() const;

private:
    explicit NormKind(Tag tag) : tag_(tag) {}
    Tag tag_;
    std::shared_ptr<const EllipsoidalShape> shape_;
};

/// ||x||_P = sqrt(x* P x).
double ellipsoidal_vector_norm(const Vector& x, const EllipsoidalShape& shape);

/// ||A||_P via the triangular similarity ||T A T^-1||_2.
double ellipsoidal_norm_sim(const Matrix& a, const EllipsoidalShape& shape);

/// ||A||_P via the Gram route sqrt(rho(A P^-1 A* P)); algebraically equal to
/// the similarity route and kept separate as an independent cross-check.
double ellipsoidal_norm_gram(const Matrix& a, const EllipsoidalShape& shape);

/// Induced matrix norm of the requested kind.
double operator_norm(const Matrix& a, const NormKind& kind);

/// ||A^k||^(1/k); an upper bound on the spectral radius for every k.
double gelfand_estimate(const Matrix& a, int k, const NormKind& kind);

/// |tr(A^k)|^(1/k); converges to the spectral radius as k grows.
double trace_estimate(const Matrix& a, int k);

/// Real entries >= -tol and unit row sums within tol.
bool is_row_stochastic(const Matrix& a, double tol);

struct PowerBoundedResult {
    bool bounded;
    int exceeded_at;  // first k with ||(A/rho)^k|| > cap; -1 when bounded
};

/// Tracks max-row-sum norms of (A/rho(A))^k for k <= max_power.
/// Distinguishes polynomially growing (defective-at-the-boundary) powers
/// from bounded orbits at desk scale.
PowerBoundedResult power_bounded_probe(const Matrix& a, int max_power = 200,
                                       double cap = 1e6);

}  // namespace jsrlab

#endif  // JSRLAB_MATRIX_HPP
