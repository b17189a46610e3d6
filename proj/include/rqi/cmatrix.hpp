#pragma once

// Dense complex matrices sized for few-qubit work (dims <= a few hundred),
// plus the tensor-product helpers every other module builds on.

#include <complex>
#include <initializer_list>
#include <vector>

#include "rqi/constants.hpp"
#include "rqi/errors.hpp"

namespace rqi {

using cplx = std::complex<double>;

class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols); // zero-filled
    static CMatrix identity(int n);
    static CMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    CMatrix operator+(const CMatrix& other) const;
    CMatrix operator-(const CMatrix& other) const;
    CMatrix operator*(const CMatrix& other) const;
    CMatrix operator*(cplx scalar) const;
    std::vector<cplx> operator*(const std::vector<cplx>& vec) const;

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix conjugate() const;
    cplx trace() const;

    // Largest entrywise |a_ij|; convenient for residual checks.
    double max_abs() const;
    double max_abs_diff(const CMatrix& other) const;

    bool is_hermitian(double tol = EPS_HERM) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

CMatrix operator*(cplx scalar, const CMatrix& m);

// Kronecker product; block (i,j) of the result is a(i,j) * b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Outer product |v><w| of column vectors.
CMatrix outer(const std::vector<cplx>& v, const std::vector<cplx>& w);

struct EigenResult {
    std::vector<double> eigenvalues; // ascending
    CMatrix eigenvectors;            // column k pairs with eigenvalues[k]
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. Deterministic:
// fixed sweep order, no pivoting by magnitude.
EigenResult hermitian_eigen(const CMatrix& h);

// Trace out every tensor factor not listed in `keep` (0-based positions into
// `dims`, leftmost factor = index 0). Kept factors stay in original order.
CMatrix partial_trace(const CMatrix& rho, const std::vector<int>& dims,
                      const std::vector<int>& keep);

// Transpose one side of a bipartite density matrix. subsystem: 0 = first
// factor, 1 = second.
CMatrix partial_transpose(const CMatrix& rho, const std::vector<int>& dims, int subsystem);

} // namespace rqi
