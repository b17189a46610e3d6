#include "rqi/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace rqi {

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw DimensionMismatch("CMatrix: negative dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, cplx(0.0, 0.0));
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const int nr = static_cast<int>(rows.size());
    const int nc = nr > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    CMatrix m(nr, nc);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != nc)
            throw DimensionMismatch("CMatrix::from_rows: ragged rows");
        int j = 0;
        for (const cplx& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

CMatrix CMatrix::operator+(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("CMatrix::operator+: shape mismatch");
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("CMatrix::operator-: shape mismatch");
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
    return out;
}

CMatrix CMatrix::operator*(const CMatrix& other) const {
    if (cols_ != other.rows_)
        throw DimensionMismatch("CMatrix::operator*: inner dimensions differ: " +
                                std::to_string(cols_) + " vs " + std::to_string(other.rows_));
    CMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < other.cols_; ++j) out(i, j) += aik * other(k, j);
        }
    return out;
}

CMatrix CMatrix::operator*(cplx scalar) const {
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * scalar;
    return out;
}

std::vector<cplx> CMatrix::operator*(const std::vector<cplx>& vec) const {
    if (cols_ != static_cast<int>(vec.size()))
        throw DimensionMismatch("CMatrix::operator*: vector length mismatch");
    std::vector<cplx> out(static_cast<std::size_t>(rows_), cplx(0.0, 0.0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * vec[j];
    return out;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

CMatrix CMatrix::conjugate() const {
    CMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = std::conj((*this)(i, j));
    return out;
}

cplx CMatrix::trace() const {
    if (rows_ != cols_) throw DimensionMismatch("CMatrix::trace: matrix not square");
    cplx t(0.0, 0.0);
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("CMatrix::max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k)
        m = std::max(m, std::abs(data_[k] - other.data_[k]));
    return m;
}

bool CMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

CMatrix operator*(cplx scalar, const CMatrix& m) { return m * scalar; }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

CMatrix outer(const std::vector<cplx>& v, const std::vector<cplx>& w) {
    CMatrix out(static_cast<int>(v.size()), static_cast<int>(w.size()));
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out(i, j) = v[i] * std::conj(w[j]);
    return out;
}

// ---- Jacobi eigensolver ----

namespace {

double offdiag_frobenius(const CMatrix& h) {
    double s = 0.0;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing h(p,q). The 2x2 block [[a,u],[conj(u),b]]
// is first made real by the phase diag(1, e^{-i phi}) with u = |u| e^{i phi},
// then rotated by the classic Givens choice. The combined update is
// h <- J^dagger h J with J(p,p)=c, J(p,q)=s, J(q,p)=-s e^{-i phi},
// J(q,q)=c e^{-i phi}; eigenvector accumulator v <- v J.
void jacobi_rotate(CMatrix& h, CMatrix& v, int p, int q) {
    const cplx u = h(p, q);
    const double r = std::abs(u);
    if (r == 0.0) return;
    const cplx phase = u / r; // e^{i phi}
    const double a = h(p, p).real();
    const double b = h(q, q).real();
    const double tau = (b - a) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = h.rows();
    // Column update: M = h * J touches columns p and q only.
    for (int k = 0; k < n; ++k) {
        const cplx hkp = h(k, p);
        const cplx hkq = h(k, q);
        h(k, p) = c * hkp - s * std::conj(phase) * hkq;
        h(k, q) = s * hkp + c * std::conj(phase) * hkq;
    }
    // Row update: h = J^dagger * M touches rows p and q only.
    for (int k = 0; k < n; ++k) {
        const cplx hpk = h(p, k);
        const cplx hqk = h(q, k);
        h(p, k) = c * hpk - s * phase * hqk;
        h(q, k) = s * hpk + c * phase * hqk;
    }
    h(p, q) = 0.0;
    h(q, p) = 0.0;
    h(p, p) = cplx(h(p, p).real(), 0.0);
    h(q, q) = cplx(h(q, q).real(), 0.0);
    for (int k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp - s * std::conj(phase) * vkq;
        v(k, q) = s * vkp + c * std::conj(phase) * vkq;
    }
}

} // namespace

EigenResult hermitian_eigen(const CMatrix& h) {
    if (h.rows() != h.cols())
        throw DimensionMismatch("hermitian_eigen: matrix not square");
    if (!h.is_hermitian())
        throw NotHermitian("hermitian_eigen: input exceeds Hermiticity tolerance");

    const int n = h.rows();
    CMatrix a = h;
    CMatrix v = CMatrix::identity(n);
    for (int sweep = 0; sweep < JACOBI_MAX_SWEEPS; ++sweep) {
        if (offdiag_frobenius(a) < JACOBI_OFF_TOL) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenResult result;
    result.eigenvalues.resize(static_cast<std::size_t>(n));
    result.eigenvectors = CMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        result.eigenvalues[static_cast<std::size_t>(k)] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i) result.eigenvectors(i, k) = v(i, order[k]);
    }
    return result;
}

// ---- tensor-index reshuffles ----

namespace {

int dims_product(const std::vector<int>& dims) {
    int p = 1;
    for (int d : dims) {
        if (d < 1) throw DimensionMismatch("partial ops: factor dimension < 1");
        p *= d;
    }
    return p;
}

// Flat index from a multi-index, leftmost factor most significant.
int flatten(const std::vector<int>& idx, const std::vector<int>& dims) {
    int f = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) f = f * dims[k] + idx[k];
    return f;
}

} // namespace

CMatrix partial_trace(const CMatrix& rho, const std::vector<int>& dims,
                      const std::vector<int>& keep) {
    const int total = dims_product(dims);
    if (rho.rows() != total || rho.cols() != total)
        throw DimensionMismatch("partial_trace: dims product " + std::to_string(total) +
                                " does not match matrix size " + std::to_string(rho.rows()));
    if (keep.empty())
        throw DimensionMismatch("partial_trace: keep set is empty");

    const int nf = static_cast<int>(dims.size());
    std::vector<bool> kept(static_cast<std::size_t>(nf), false);
    for (int k : keep) {
        if (k < 0 || k >= nf)
            throw DimensionMismatch("partial_trace: keep index " + std::to_string(k) +
                                    " out of range");
        if (kept[static_cast<std::size_t>(k)])
            throw DimensionMismatch("partial_trace: duplicate keep index");
        kept[static_cast<std::size_t>(k)] = true;
    }

    std::vector<int> kept_pos, traced_pos;
    for (int k = 0; k < nf; ++k) (kept[static_cast<std::size_t>(k)] ? kept_pos : traced_pos).push_back(k);

    std::vector<int> kept_dims, traced_dims;
    int dk = 1, dt = 1;
    for (int k : kept_pos) { kept_dims.push_back(dims[static_cast<std::size_t>(k)]); dk *= dims[static_cast<std::size_t>(k)]; }
    for (int k : traced_pos) { traced_dims.push_back(dims[static_cast<std::size_t>(k)]); dt *= dims[static_cast<std::size_t>(k)]; }

    // Assemble the full multi-index from (kept part, traced part).
    std::vector<int> full(static_cast<std::size_t>(nf), 0);
    auto full_index = [&](int ik, int it) {
        for (int k = static_cast<int>(kept_pos.size()) - 1; k >= 0; --k) {
            full[static_cast<std::size_t>(kept_pos[static_cast<std::size_t>(k)])] = ik % kept_dims[static_cast<std::size_t>(k)];
            ik /= kept_dims[static_cast<std::size_t>(k)];
        }
        for (int k = static_cast<int>(traced_pos.size()) - 1; k >= 0; --k) {
            full[static_cast<std::size_t>(traced_pos[static_cast<std::size_t>(k)])] = it % traced_dims[static_cast<std::size_t>(k)];
            it /= traced_dims[static_cast<std::size_t>(k)];
        }
        return flatten(full, dims);
    };

    CMatrix out(dk, dk);
    for (int i = 0; i < dk; ++i)
        for (int j = 0; j < dk; ++j) {
            cplx sum(0.0, 0.0);
            for (int b = 0; b < dt; ++b) sum += rho(full_index(i, b), full_index(j, b));
            out(i, j) = sum;
        }
    return out;
}

CMatrix partial_transpose(const CMatrix& rho, const std::vector<int>& dims, int subsystem) {
    if (dims.size() != 2)
        throw DimensionMismatch("partial_transpose: expects exactly two factors");
    if (subsystem != 0 && subsystem != 1)
        throw DimensionMismatch("partial_transpose: subsystem must be 0 or 1");
    const int da = dims[0], db = dims[1];
    if (rho.rows() != da * db || rho.cols() != da * db)
        throw DimensionMismatch("partial_transpose: dims product does not match matrix size");

    CMatrix out(da * db, da * db);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            for (int ap = 0; ap < da; ++ap)
                for (int bp = 0; bp < db; ++bp) {
                    // (a,b),(a',b') <- transposed indices on the chosen side
                    const int row = a * db + b, col = ap * db + bp;
                    const int srow = (subsystem == 0) ? ap * db + b : a * db + bp;
                    const int scol = (subsystem == 0) ? a * db + bp : ap * db + b;
                    out(row, col) = rho(srow, scol);
                }
    return out;
}

} // namespace rqi
