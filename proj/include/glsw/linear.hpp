#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glsw {

class FieldMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Ground field tag: the rationals or a prime field F_p with p < 2^31.
class Field {
public:
    enum class Kind { Rational, Prime };

    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(uint32_t p);

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ == Kind::Prime; }
    uint32_t modulus() const { return p_; }
    std::string name() const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    Kind kind_ = Kind::Rational;
    uint32_t p_ = 0;
};

uint32_t mod_inverse(uint32_t a, uint32_t p);
uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p);
bool is_prime_u32(uint32_t n);

// Element of a Field. Rationals are kept canonical by gmpxx.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(Field f) : f_(f) {}
    Scalar(Field f, long v);
    Scalar(Field f, const mpq_class& v);
    static Scalar residue(Field f, uint32_t r);

    const Field& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;
    const mpq_class& rational() const { return q_; }
    uint32_t residue() const { return r_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check(const Scalar& o) const;
    Field f_;
    uint32_t r_ = 0;
    mpq_class q_;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, size_t n);

// Dense row-major matrix over a single field. Prime-field entries live in a
// packed uint32 buffer so the elimination kernels can stream them.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, size_t rows, size_t cols);
    static Matrix identity(Field f, size_t n);
    static Matrix from_ints(Field f, size_t rows, size_t cols, const std::vector<long>& entries);
    static Matrix from_columns(Field f, size_t rows, const std::vector<Vec>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& field() const { return f_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar at(size_t i, size_t j) const;
    void set(size_t i, size_t j, const Scalar& s);
    void set_int(size_t i, size_t j, long v);
    void add_to(size_t i, size_t j, const Scalar& s);

    // raw access for the hot paths
    uint32_t* zrow(size_t i) { return z_.data() + i * cols_; }
    const uint32_t* zrow(size_t i) const { return z_.data() + i * cols_; }
    mpq_class& q(size_t i, size_t j) { return q_[i * cols_ + j]; }
    const mpq_class& q(size_t i, size_t j) const { return q_[i * cols_ + j]; }
    uint32_t& z(size_t i, size_t j) { return z_[i * cols_ + j]; }
    uint32_t z(size_t i, size_t j) const { return z_[i * cols_ + j]; }
    bool is_zero_at(size_t i, size_t j) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;
    Vec apply(const Vec& v) const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void set_block(size_t r0, size_t c0, const Matrix& b);
    Matrix select_columns(const std::vector<size_t>& idx) const;
    Vec column(size_t j) const;
    Vec row(size_t i) const;
    Matrix power(unsigned e) const;

    // Reduce a rational matrix into a prime field (denominators must be units).
    Matrix reduce_to(Field target) const;
    std::vector<std::string> entry_strings() const;

private:
    void check_same(const Matrix& o) const;
    size_t rows_ = 0, cols_ = 0;
    Field f_;
    std::vector<mpq_class> q_;
    std::vector<uint32_t> z_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const std::vector<Matrix>& blocks, Field f);

struct Echelon {
    Matrix rref;
    std::vector<size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form; first nonzero entry in column order is the pivot.
Echelon row_reduce(const Matrix& m);
size_t rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
// Columns form a basis of the right null space.
Matrix kernel_matrix(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& b);
// X with M X = B, if one exists.
std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
// Columns of M at its pivot columns: a basis of the column space.
Matrix column_space(const Matrix& m);
// Indices of standard basis vectors completing the column space of M.
std::vector<size_t> complement_indices(const Matrix& m);

std::vector<size_t> nilpotent_block_profile(const Matrix& n);

}  // namespace glsw
