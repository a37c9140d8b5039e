#include "p2stab/linalg.hpp"

#include "p2stab/error.hpp"

#include <sstream>

namespace p2stab {

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint32_t p) {
    require(is_prime_number(p), "field characteristic " + std::to_string(p) + " is not prime");
    return Field{p};
}

Rational Field::reduce(const Rational& q) const {
    if (p == 0) return q;
    Integer P = static_cast<unsigned long>(p);
    Integer den = q.get_den();
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t()) == 0) {
        fail("denominator of " + to_string(q) + " is not invertible mod " + std::to_string(p));
    }
    Integer v = (q.get_num() * inv) % P;
    if (v < 0) v += P;
    return Rational(v);
}

Rational Field::inv(const Rational& a) const {
    if (a == 0) fail("division by zero");
    if (p == 0) return 1 / a;
    Rational q(a.get_den(), a.get_num());
    q.canonicalize();
    return reduce(q);
}

bool Field::admits(const Rational& q) const {
    if (p == 0) return true;
    return mpz_divisible_ui_p(q.get_den_mpz_t(), p) == 0;
}

std::string Field::name() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    require(data_.size() == rows * cols, "matrix data does not match its shape");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::column(const std::vector<Rational>& v) { return Matrix(v.size(), 1, v); }

std::vector<Rational> Matrix::col(std::size_t c) const {
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix reduce(const Matrix& a, const Field& f) {
    if (!f.is_prime()) return a;
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.reduce(a(i, j));
    return r;
}

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f) {
    require(a.cols() == b.rows(), "dimension mismatch in matrix product");
    Matrix c(a.rows(), b.cols());
    Rational acc;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a(i, k) == 0 || b(k, j) == 0) continue;
                acc += a(i, k) * b(k, j);
            }
            c(i, j) = f.reduce(acc);
        }
    }
    return c;
}

Matrix add(const Matrix& a, const Matrix& b, const Field& f) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "dimension mismatch in matrix sum");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
    return c;
}

Matrix subtract(const Matrix& a, const Matrix& b, const Field& f) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "dimension mismatch in matrix difference");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
    return c;
}

Matrix scale(const Matrix& a, const Rational& s, const Field& f) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(a(i, j), s);
    return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "row mismatch in hstack");
    Matrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "column mismatch in vstack");
    Matrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
    return c;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
    Matrix out(0, cols);
    for (const auto& b : blocks) out = vstack(out, b);
    return out;
}

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows) {
    Matrix out(rows, 0);
    for (const auto& b : blocks) out = hstack(out, b);
    return out;
}

Matrix apply(const Matrix& a, const std::vector<Rational>& v, const Field& f) {
    return multiply(a, Matrix::column(v), f);
}

Echelon rref(const Matrix& a, const Field& f) {
    Matrix m = reduce(a, f);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Rational inv = f.inv(m(row, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, c) == 0) continue;
            Rational factor = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (m(row, j) == 0) continue;
                m(r, j) = f.sub(m(r, j), f.mul(factor, m(row, j)));
            }
        }
        pivots.push_back(c);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a, const Field& f) { return rref(a, f).pivots.size(); }

Matrix kernel(const Matrix& a, const Field& f) {
    auto e = rref(a, f);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(a.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        k(fc, j) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = f.neg(e.reduced(r, fc));
    }
    return k;
}

Matrix span(const Matrix& a, const Field& f) {
    auto e = rref(a.transpose(), f);
    Matrix s(a.rows(), e.pivots.size());
    for (std::size_t j = 0; j < e.pivots.size(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) s(i, j) = e.reduced(j, i);
    return s;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b, const Field& f) {
    require(a.rows() == b.rows(), "dimension mismatch in solve");
    auto e = rref(hstack(a, b), f);
    Matrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::size_t pc = e.pivots[r];
        if (pc >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = e.reduced(r, a.cols() + j);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& a, const Field& f) {
    if (a.rows() != a.cols()) return std::nullopt;
    if (rank(a, f) != a.rows()) return std::nullopt;
    return solve(a, Matrix::identity(a.rows()), f);
}

Rational determinant(const Matrix& a, const Field& f) {
    require(a.rows() == a.cols(), "determinant of a non-square matrix");
    Matrix m = reduce(a, f);
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        Rational inv = f.inv(m(c, c));
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            Rational factor = f.mul(m(r, c), inv);
            for (std::size_t j = c; j < n; ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
        }
    }
    return det;
}

Matrix subspace_sum(const Matrix& u, const Matrix& w, const Field& f) { return span(hstack(u, w), f); }

Matrix subspace_intersection(const Matrix& u, const Matrix& w, const Field& f) {
    const std::size_t n = u.rows();
    if (u.cols() == 0 || w.cols() == 0) return zero_space(n);
    Matrix uu = span(u, f);
    Matrix ww = span(w, f);
    Matrix k = kernel(hstack(uu, scale(ww, -1, f)), f);
    return span(multiply(uu, k.block(0, 0, uu.cols(), k.cols()), f), f);
}

Matrix annihilator(const Matrix& u, std::size_t n, const Field& f) {
    if (u.cols() == 0) return Matrix::identity(n);
    return kernel(u.transpose(), f).transpose();
}

Matrix preimage(const Matrix& map, const Matrix& w, const Field& f) {
    Matrix c = annihilator(w, map.rows(), f);
    if (c.rows() == 0) return full_space(map.cols());
    return span(kernel(multiply(c, map, f), f), f);
}

bool subspace_contains(const Matrix& u, const Matrix& w, const Field& f) {
    if (w.cols() == 0) return true;
    return rank(hstack(u, w), f) == rank(u, f);
}

Matrix zero_space(std::size_t n) { return Matrix(n, 0); }
Matrix full_space(std::size_t n) { return Matrix::identity(n); }

QuotientMap quotient_map(const Matrix& u, std::size_t n, const Field& f) {
    auto e = rref(u.transpose(), f);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    const std::size_t k = e.pivots.size();
    Matrix section(n, n - k);
    std::size_t j = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        section(c, j++) = 1;
    }
    Matrix basis(n, k);
    for (std::size_t col = 0; col < k; ++col)
        for (std::size_t i = 0; i < n; ++i) basis(i, col) = e.reduced(col, i);
    auto inv = inverse(hstack(basis, section), f);
    if (!inv) fail_verification("quotient_map: completed basis is singular");
    return {inv->block(k, 0, n - k, n), section};
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << to_string(m(i, j));
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace p2stab
