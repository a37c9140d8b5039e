#pragma once

// Dense exact linear algebra over Q or a prime field F_p.
//
// Every matrix entry is stored as a Rational. Over F_p the entries are kept
// as integer representatives in [0, p); Field::reduce maps a rational with
// denominator prime to p into that range.

#include "p2stab/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace p2stab {

struct Field {
    std::uint32_t p = 0;  // 0 means the rationals

    static Field rationals() { return {}; }
    static Field prime(std::uint32_t p);

    bool is_prime() const { return p != 0; }
    bool operator==(const Field&) const = default;

    Rational reduce(const Rational& q) const;
    Rational add(const Rational& a, const Rational& b) const { return reduce(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
    Rational neg(const Rational& a) const { return reduce(-a); }
    Rational inv(const Rational& a) const;
    bool admits(const Rational& q) const;  // denominator invertible in the field

    std::string name() const;
};

bool is_prime_number(std::uint64_t n);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);

    static Matrix identity(std::size_t n);
    static Matrix column(const std::vector<Rational>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Rational>& data() const { return data_; }

    std::vector<Rational> col(std::size_t c) const;
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    bool is_zero() const;

    bool operator==(const Matrix& o) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix reduce(const Matrix& a, const Field& f);
Matrix multiply(const Matrix& a, const Matrix& b, const Field& f);
Matrix add(const Matrix& a, const Matrix& b, const Field& f);
Matrix subtract(const Matrix& a, const Matrix& b, const Field& f);
Matrix scale(const Matrix& a, const Rational& s, const Field& f);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);
Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows);
Matrix apply(const Matrix& a, const std::vector<Rational>& v, const Field& f);

struct Echelon {
    Matrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

Echelon rref(const Matrix& a, const Field& f);
std::size_t rank(const Matrix& a, const Field& f);

/// Columns form a basis of {x : a x = 0}; the basis is the standard one
/// read off the reduced echelon form (one vector per free column).
Matrix kernel(const Matrix& a, const Field& f);

/// Canonical basis (as columns) of the column space of a: the transpose of the
/// nonzero rows of rref(a^T). Two matrices span the same space iff their
/// spans are equal as matrices.
Matrix span(const Matrix& a, const Field& f);

/// Solves a x = b for x (b may have several columns); nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b, const Field& f);

std::optional<Matrix> inverse(const Matrix& a, const Field& f);
Rational determinant(const Matrix& a, const Field& f);

// Subspaces of F^n are represented by matrices whose columns span them.
Matrix subspace_sum(const Matrix& u, const Matrix& w, const Field& f);
Matrix subspace_intersection(const Matrix& u, const Matrix& w, const Field& f);
/// Rows form a basis of the annihilator {c : c u = 0}; ambient dimension n.
Matrix annihilator(const Matrix& u, std::size_t n, const Field& f);
/// {v in F^{map.cols()} : map v in w}.
Matrix preimage(const Matrix& map, const Matrix& w, const Field& f);
bool subspace_contains(const Matrix& u, const Matrix& w, const Field& f);
Matrix zero_space(std::size_t n);
Matrix full_space(std::size_t n);

/// Quotient data for F^n / u: a map q (n-k x n) with q u = 0, and a section
/// s (n x n-k) made of standard basis vectors with q s = I.
struct QuotientMap {
    Matrix q;
    Matrix section;
};
QuotientMap quotient_map(const Matrix& u, std::size_t n, const Field& f);

std::string to_string(const Matrix& m);

}  // namespace p2stab
