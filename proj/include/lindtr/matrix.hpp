#ifndef LINDTR_MATRIX_HPP
#define LINDTR_MATRIX_HPP

#include <complex>

#include <Eigen/Dense>

namespace lindtr {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Dense complex column vector.
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

/// Largest supported register, in qubits. Operators are capped at
/// 2^kMaxQubits x 2^kMaxQubits and superoperators at the square of that.
inline constexpr int kMaxQubits = 8;

/// Default elementwise absolute tolerance for matrix comparisons.
inline constexpr double kDefaultMatrixTol = 1e-12;

/// Largest absolute entrywise difference. Shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Elementwise comparison with absolute tolerance.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kDefaultMatrixTol);

/// max |m - m^dagger| over all entries; zero for exactly Hermitian input.
double hermiticity_error(const ComplexMatrix& m);

/// Smallest eigenvalue of the Hermitian part (m + m^dagger)/2.
double min_hermitian_eigenvalue(const ComplexMatrix& m);

/// Kronecker product; block (i,j) of the result equals a(i,j) * b.
/// Throws SizeError if the result would exceed max_dim in either extent
/// (default: superoperator size for the maximum register).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Eigen::Index max_dim = Eigen::Index(1)
                                          << (2 * kMaxQubits));

enum class Pauli { X, Z, Minus, Plus, Identity };

/// 2x2 operator in the basis (|0>, |1>) with sigma_z|0> = |0>;
/// sigma_minus = |0><1| maps the excited state to the ground state.
ComplexMatrix pauli(Pauli kind);

/// Embeds a 2x2 operator at tensor slot `site` of an n-qubit register,
/// identity elsewhere. Site 0 is the leftmost factor, so basis labels
/// read |q0 q1 ...> left to right.
ComplexMatrix site_operator(const ComplexMatrix& op, int site, int n_sites);

} // namespace lindtr

#endif
