#include "cluster_poset/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace cpo {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = -a_[i];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

bool Matrix::is_zero() const {
    for (const Rat& v : a_)
        if (v != 0)
            return false;
    return true;
}

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows) {
    std::size_t cols = 0;
    for (const Matrix& b : blocks) {
        if (b.rows() != rows)
            throw std::invalid_argument("hstack: row mismatch");
        cols += b.cols();
    }
    Matrix out(rows, cols);
    std::size_t off = 0;
    for (const Matrix& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, off + j) = b.at(i, j);
        off += b.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const Matrix& b : blocks) {
        if (b.cols() != cols)
            throw std::invalid_argument("vstack: column mismatch");
        rows += b.rows();
    }
    Matrix out(rows, cols);
    std::size_t off = 0;
    for (const Matrix& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                out.at(off + i, j) = b.at(i, j);
        off += b.rows();
    }
    return out;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
    Matrix r = m;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && r.at(piv, col) == 0)
            ++piv;
        if (piv == r.rows())
            continue;
        if (piv != lead)
            for (std::size_t j = 0; j < r.cols(); ++j)
                std::swap(r.at(piv, j), r.at(lead, j));
        Rat inv = 1 / r.at(lead, col);
        for (std::size_t j = 0; j < r.cols(); ++j)
            r.at(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col) == 0)
                continue;
            Rat factor = r.at(i, col);
            for (std::size_t j = 0; j < r.cols(); ++j)
                r.at(i, j) -= factor * r.at(lead, j);
        }
        if (pivots)
            pivots->push_back(col);
        ++lead;
    }
    return r;
}

std::size_t rank(const Matrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

std::vector<std::vector<Rat>> kernel_basis(const Matrix& m) {
    std::vector<std::size_t> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : piv)
        is_pivot[p] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rat> v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix cokernel_projection(const Matrix& a) {
    // Row space of A^T = column space of A, in RREF.
    std::vector<std::size_t> piv;
    Matrix r = rref(a.transpose(), &piv);
    const std::size_t n = a.rows();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : piv)
        is_pivot[p] = true;

    Matrix proj(n - piv.size(), n);
    std::size_t row = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (is_pivot[q])
            continue;
        // v |-> v_q - sum_i v_{p_i} (r_i)_q  kills the column space.
        proj.at(row, q) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            proj.at(row, piv[i]) = -r.at(i, q);
        ++row;
    }
    return proj;
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] >= n)
        throw std::invalid_argument("inverse: singular matrix");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.at(i, j) = r.at(i, n + j);
    return out;
}

IntPoly char_poly(const Matrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("char_poly: non-square matrix");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (denominator(a.at(i, j)) != 1)
                throw std::invalid_argument("char_poly: non-integer entry");

    // Faddeev-LeVerrier: c_n = 1, M_1 = A, c_{n-k} = -tr(A M_k)/k,
    // M_{k+1} = A M_k + c_{n-k} I.
    IntPoly coeffs(n + 1);
    coeffs[n] = 1;
    Matrix m = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += m.at(i, i);
        Rat c = -tr / Rat(k);
        if (denominator(c) != 1)
            throw std::logic_error("char_poly: non-integer coefficient");
        coeffs[n - k] = numerator(c);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) += c;
    }
    return coeffs;
}

std::string poly_to_string(const IntPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        const Int& c = p[k];
        if (c == 0 && !(first && k == 0))
            continue;
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (abs_c != 1 || k == 0)
            os << abs_c;
        if (k >= 1) {
            if (abs_c != 1)
                os << "*";
            os << "x";
            if (k > 1)
                os << "^" << k;
        }
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace cpo
