#include "lindtr/matrix.hpp"

#include <string>

#include "lindtr/errors.hpp"

namespace lindtr {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("max_abs_diff: shapes " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return max_abs_diff(a, b) <= tol;
}

double hermiticity_error(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw ShapeError("hermiticity_error: matrix is not square");
    }
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_hermitian_eigenvalue(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw ShapeError("min_hermitian_eigenvalue: matrix is not square");
    }
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h,
                                                        Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Eigen::Index max_dim) {
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    if (rows > max_dim || cols > max_dim) {
        throw SizeError("kron: result " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " exceeds the configured "
                        "maximum dimension " + std::to_string(max_dim));
    }
    ComplexMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix pauli(Pauli kind) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    switch (kind) {
        case Pauli::X:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case Pauli::Z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        case Pauli::Minus:  // |0><1|
            m(0, 1) = 1.0;
            break;
        case Pauli::Plus:  // |1><0|
            m(1, 0) = 1.0;
            break;
        case Pauli::Identity:
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
    }
    return m;
}

ComplexMatrix site_operator(const ComplexMatrix& op, int site, int n_sites) {
    if (op.rows() != 2 || op.cols() != 2) {
        throw ShapeError("site_operator: single-site operator must be 2x2");
    }
    if (n_sites < 1 || n_sites > kMaxQubits) {
        throw SizeError("site_operator: n_sites " + std::to_string(n_sites) +
                        " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (site < 0 || site >= n_sites) {
        throw DomainError("site_operator: site " + std::to_string(site) +
                          " out of range for " + std::to_string(n_sites) +
                          " sites");
    }
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int k = 0; k < n_sites; ++k) {
        out = kron(out, k == site ? op : ComplexMatrix(ComplexMatrix::Identity(2, 2)));
    }
    return out;
}

} // namespace lindtr
