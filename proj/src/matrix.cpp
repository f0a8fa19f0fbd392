#include <algorithm>
#include <numeric>

#include "glsw/linear.hpp"
#include "glsw/simd.hpp"

namespace glsw {

Matrix::Matrix(Field f, size_t rows, size_t cols) : rows_(rows), cols_(cols), f_(f) {
    if (f.is_prime())
        z_.assign(rows * cols, 0);
    else
        q_.resize(rows * cols);
}

Matrix Matrix::identity(Field f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
    return m;
}

Matrix Matrix::from_ints(Field f, size_t rows, size_t cols, const std::vector<long>& entries) {
    if (entries.size() != rows * cols) throw std::invalid_argument("from_ints: entry count mismatch");
    Matrix m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set_int(i, j, entries[i * cols + j]);
    return m;
}

Matrix Matrix::from_columns(Field f, size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
        for (size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

Scalar Matrix::at(size_t i, size_t j) const {
    if (f_.is_prime()) return Scalar::residue(f_, z(i, j));
    return Scalar(f_, q(i, j));
}

void Matrix::set(size_t i, size_t j, const Scalar& s) {
    if (s.field() != f_) throw FieldMismatch("matrix entry from " + s.field().name() + " into " + f_.name());
    if (f_.is_prime())
        z(i, j) = s.residue();
    else
        q(i, j) = s.rational();
}

void Matrix::set_int(size_t i, size_t j, long v) {
    if (f_.is_prime())
        z(i, j) = Scalar(f_, v).residue();
    else
        q(i, j) = v;
}

void Matrix::add_to(size_t i, size_t j, const Scalar& s) {
    if (s.field() != f_) throw FieldMismatch("matrix entry field mismatch");
    if (f_.is_prime()) {
        uint64_t t = static_cast<uint64_t>(z(i, j)) + s.residue();
        z(i, j) = static_cast<uint32_t>(t % f_.modulus());
    } else {
        q(i, j) += s.rational();
    }
}

bool Matrix::is_zero_at(size_t i, size_t j) const { return f_.is_prime() ? z(i, j) == 0 : sgn(q(i, j)) == 0; }

void Matrix::check_same(const Matrix& o) const {
    if (f_ != o.f_) throw FieldMismatch("matrix field mismatch: " + f_.name() + " vs " + o.f_.name());
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix r(*this);
    if (f_.is_prime()) {
        uint32_t p = f_.modulus();
        for (size_t k = 0; k < z_.size(); ++k) {
            uint64_t t = static_cast<uint64_t>(r.z_[k]) + o.z_[k];
            r.z_[k] = static_cast<uint32_t>(t >= p ? t - p : t);
        }
    } else {
        for (size_t k = 0; k < q_.size(); ++k) r.q_[k] += o.q_[k];
    }
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Scalar(f_, -1)); }

Matrix Matrix::operator*(const Matrix& o) const {
    check_same(o);
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(f_, rows_, o.cols_);
    if (f_.is_prime()) {
        uint32_t p = f_.modulus();
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k)
                if (uint32_t a = z(i, k)) simd::axpy_mod(r.zrow(i), o.zrow(k), a, p, o.cols_);
    } else {
        mpq_class t;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const mpq_class& a = q(i, k);
                if (sgn(a) == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    const mpq_class& b = o.q(k, j);
                    if (sgn(b) == 0) continue;
                    t = a * b;
                    r.q(i, j) += t;
                }
            }
    }
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    if (s.field() != f_) throw FieldMismatch("scalar/matrix field mismatch");
    Matrix r(*this);
    if (f_.is_prime())
        simd::scale_mod(r.z_.data(), s.residue(), f_.modulus(), r.z_.size());
    else
        for (auto& x : r.q_) x *= s.rational();
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (f_.is_prime())
                r.z(j, i) = z(i, j);
            else
                r.q(j, i) = q(i, j);
        }
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    Vec out = zero_vec(f_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!is_zero_at(i, j)) out[i] += at(i, j) * v[j];
    return out;
}

bool Matrix::is_zero() const {
    if (f_.is_prime()) return std::all_of(z_.begin(), z_.end(), [](uint32_t x) { return x == 0; });
    return std::all_of(q_.begin(), q_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

bool Matrix::operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && z_ == o.z_ && q_ == o.q_;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
    Matrix b(f_, nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) {
            if (f_.is_prime())
                b.z(i, j) = z(r0 + i, c0 + j);
            else
                b.q(i, j) = q(r0 + i, c0 + j);
        }
    return b;
}

void Matrix::set_block(size_t r0, size_t c0, const Matrix& b) {
    check_same(b);
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("set_block out of range");
    for (size_t i = 0; i < b.rows_; ++i)
        for (size_t j = 0; j < b.cols_; ++j) {
            if (f_.is_prime())
                z(r0 + i, c0 + j) = b.z(i, j);
            else
                q(r0 + i, c0 + j) = b.q(i, j);
        }
}

Matrix Matrix::select_columns(const std::vector<size_t>& idx) const {
    Matrix r(f_, rows_, idx.size());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < idx.size(); ++k) {
            if (f_.is_prime())
                r.z(i, k) = z(i, idx[k]);
            else
                r.q(i, k) = q(i, idx[k]);
        }
    return r;
}

Vec Matrix::column(size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

Vec Matrix::row(size_t i) const {
    Vec v;
    v.reserve(cols_);
    for (size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

Matrix Matrix::power(unsigned e) const {
    if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
    Matrix r = identity(f_, rows_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Matrix Matrix::reduce_to(Field target) const {
    if (target == f_) return *this;
    if (f_.is_prime()) throw FieldMismatch("cannot lift a prime-field matrix");
    Matrix r(target, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(i, j, Scalar(target, q(i, j)));
    return r;
}

std::vector<std::string> Matrix::entry_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_ * cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.push_back(at(i, j).to_string());
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks, Field f) {
    size_t n = 0, m = 0;
    for (auto& b : blocks) n += b.rows(), m += b.cols();
    Matrix r(f, n, m);
    size_t i = 0, j = 0;
    for (auto& b : blocks) {
        r.set_block(i, j, b);
        i += b.rows();
        j += b.cols();
    }
    return r;
}

namespace {

Echelon reduce_prime(const Matrix& m) {
    Echelon e{m, {}};
    Matrix& a = e.rref;
    const uint32_t p = m.field().modulus();
    const size_t R = a.rows(), C = a.cols();
    size_t r = 0;
    for (size_t c = 0; c < C && r < R; ++c) {
        size_t piv = r;
        while (piv < R && a.z(piv, c) == 0) ++piv;
        if (piv == R) continue;
        if (piv != r) std::swap_ranges(a.zrow(piv), a.zrow(piv) + C, a.zrow(r));
        uint32_t* pr = a.zrow(r);
        if (pr[c] != 1) simd::scale_mod(pr + c, mod_inverse(pr[c], p), p, C - c);
        for (size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            uint32_t f = a.z(i, c);
            if (f) simd::axpy_mod(a.zrow(i) + c, pr + c, p - f, p, C - c);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

// Fraction-free Gauss-Jordan (Bareiss/Montante): after each pivot step every
// entry is a minor of the integerized input, so the division is exact.
Echelon reduce_rational(const Matrix& m) {
    const size_t R = m.rows(), C = m.cols();
    std::vector<mpz_class> a(R * C);
    for (size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.q(i, j).get_den_mpz_t());
        for (size_t j = 0; j < C; ++j) a[i * C + j] = m.q(i, j).get_num() * (l / m.q(i, j).get_den());
    }
    std::vector<size_t> pivots;
    mpz_class prev = 1, t;
    size_t r = 0;
    for (size_t c = 0; c < C && r < R; ++c) {
        size_t piv = r;
        while (piv < R && sgn(a[piv * C + c]) == 0) ++piv;
        if (piv == R) continue;
        if (piv != r)
            for (size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[r * C + j]);
        const mpz_class pv = a[r * C + c];
        for (size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            mpz_class f = a[i * C + c];
            for (size_t j = 0; j < C; ++j) {
                mpz_class& x = a[i * C + j];
                if (j == c) {
                    x = 0;
                    continue;
                }
                x *= pv;
                if (sgn(f) != 0 && sgn(a[r * C + j]) != 0) {
                    t = f * a[r * C + j];
                    x -= t;
                }
                if (prev != 1) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = pv;
        pivots.push_back(c);
        ++r;
    }
    Echelon e{Matrix(m.field(), R, C), pivots};
    for (size_t i = 0; i < pivots.size(); ++i) {
        const mpz_class& pv = a[i * C + pivots[i]];
        for (size_t j = 0; j < C; ++j) {
            if (sgn(a[i * C + j]) == 0) continue;
            mpq_class v(a[i * C + j], pv);
            v.canonicalize();
            e.rref.q(i, j) = v;
        }
    }
    return e;
}

}  // namespace

Echelon row_reduce(const Matrix& m) { return m.field().is_prime() ? reduce_prime(m) : reduce_rational(m); }



namespace {

// Free-column kernel basis read off a reduced echelon form.
Matrix kernel_from_echelon(const Echelon& e, Field f, size_t C) {
    std::vector<char> is_pivot(C, 0);
    for (size_t c : e.pivots) is_pivot[c] = 1;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < C; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(f, C, free_cols.size());
    for (size_t j = 0; j < free_cols.size(); ++j) {
        size_t fc = free_cols[j];
        k.set_int(fc, j, 1);
        for (size_t r = 0; r < e.pivots.size(); ++r)
            if (!e.rref.is_zero_at(r, fc)) k.set(e.pivots[r], j, -e.rref.at(r, fc));
    }
    return k;
}

void canonicalize_columns(Matrix& k) {
    for (size_t j = 0; j < k.cols(); ++j) {
        size_t i = 0;
        while (i < k.rows() && k.is_zero_at(i, j)) ++i;
        if (i == k.rows()) continue;
        Scalar lead = k.at(i, j);
        if (lead.is_one()) continue;
        Scalar inv = lead.inverse();
        for (size_t t = i; t < k.rows(); ++t)
            if (!k.is_zero_at(t, j)) k.set(t, j, k.at(t, j) * inv);
    }
}

// Rational number congruent to a mod m with |num|, den <= sqrt(m/2), if any.
bool rational_reconstruct(const mpz_class& a, const mpz_class& m, const mpz_class& bound, mpq_class& out) {
    mpz_class r0 = m, r1 = a, t0 = 0, t1 = 1, q, tmp;
    while (r1 > bound) {
        q = r0 / r1;
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (sgn(t1) == 0 || abs(t1) > bound) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return false;
    out = mpq_class(r1, t1);
    out.canonicalize();
    return true;
}

const std::vector<uint32_t>& big_primes() {
    static const std::vector<uint32_t> primes = [] {
        std::vector<uint32_t> v;
        for (uint32_t c = 2147483629u; v.size() < 96; c -= 2)
            if (is_prime_u32(c)) v.push_back(c);
        return v;
    }();
    return primes;
}

// Exact kernel over Q by reduction modulo several large primes, rational
// reconstruction of the echelon form, and an exact check A K = 0. The check
// certifies the result: nullity over Q never exceeds nullity mod p.
std::optional<Matrix> multimodular_kernel(const Matrix& m) {
    const size_t R = m.rows(), C = m.cols();
    std::vector<mpz_class> a(R * C);
    for (size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.q(i, j).get_den_mpz_t());
        for (size_t j = 0; j < C; ++j)
            if (sgn(m.q(i, j)) != 0) a[i * C + j] = m.q(i, j).get_num() * (l / m.q(i, j).get_den());
    }
    std::vector<size_t> pivots;
    std::vector<size_t> free_cols;
    std::vector<mpz_class> residues;  // CRT images of -rref[r][free], row-major
    mpz_class modulus = 1;
    size_t used = 0;
    for (uint32_t p : big_primes()) {
        const Field fp = Field::prime(p);
        Matrix am(fp, R, C);
        for (size_t i = 0; i < R; ++i)
            for (size_t j = 0; j < C; ++j) {
                const mpz_class& x = a[i * C + j];
                if (sgn(x) == 0) continue;
                mpz_class r;
                mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
                am.z(i, j) = static_cast<uint32_t>(r.get_ui());
            }
        Echelon e = row_reduce(am);
        bool reset = used == 0;
        if (!reset && e.pivots != pivots) {
            // an unlucky prime has smaller rank or later pivots
            if (e.pivots.size() > pivots.size() || (e.pivots.size() == pivots.size() && e.pivots < pivots))
                reset = true;
            else
                continue;
        }
        if (reset) {
            pivots = e.pivots;
            free_cols.clear();
            std::vector<char> is_pivot(C, 0);
            for (size_t c : pivots) is_pivot[c] = 1;
            for (size_t c = 0; c < C; ++c)
                if (!is_pivot[c]) free_cols.push_back(c);
            residues.assign(pivots.size() * free_cols.size(), 0);
            modulus = 1;
            used = 0;
        }
        // incremental CRT
        mpz_class minv;
        mpz_class pz = p;
        if (used > 0) mpz_invert(minv.get_mpz_t(), mpz_class(modulus % p).get_mpz_t(), pz.get_mpz_t());
        for (size_t r = 0; r < pivots.size(); ++r)
            for (size_t f = 0; f < free_cols.size(); ++f) {
                uint32_t v = e.rref.z(r, free_cols[f]);
                uint32_t target = v == 0 ? 0 : p - v;
                mpz_class& x = residues[r * free_cols.size() + f];
                if (used == 0) {
                    x = target;
                } else {
                    mpz_class cur;
                    mpz_fdiv_r_ui(cur.get_mpz_t(), x.get_mpz_t(), p);
                    mpz_class diff = (mpz_class(target) - cur) * minv;
                    mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), pz.get_mpz_t());
                    x += modulus * diff;
                }
            }
        modulus *= p;
        ++used;
        // attempt reconstruction
        mpz_class bound;
        mpz_class half = modulus / 2;
        mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
        Matrix k(Field::rationals(), C, free_cols.size());
        bool ok = true;
        for (size_t f = 0; f < free_cols.size() && ok; ++f) {
            k.q(free_cols[f], f) = 1;
            for (size_t r = 0; r < pivots.size() && ok; ++r) {
                const mpz_class& x = residues[r * free_cols.size() + f];
                if (sgn(x) == 0) continue;
                mpq_class q;
                ok = rational_reconstruct(x, modulus, bound, q);
                if (ok) k.q(pivots[r], f) = q;
            }
        }
        if (!ok) continue;
        // exact verification of A K = 0, column by column with integer scaling
        bool verified = true;
        for (size_t f = 0; f < free_cols.size() && verified; ++f) {
            mpz_class l = 1;
            for (size_t i = 0; i < C; ++i)
                if (sgn(k.q(i, f)) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), k.q(i, f).get_den_mpz_t());
            std::vector<std::pair<size_t, mpz_class>> col;
            for (size_t i = 0; i < C; ++i)
                if (sgn(k.q(i, f)) != 0) col.push_back({i, k.q(i, f).get_num() * (l / k.q(i, f).get_den())});
            mpz_class acc;
            for (size_t i = 0; i < R && verified; ++i) {
                acc = 0;
                for (auto& [j, v] : col)
                    if (sgn(a[i * C + j]) != 0) acc += a[i * C + j] * v;
                verified = sgn(acc) == 0;
            }
        }
        if (verified) return k;
    }
    return std::nullopt;
}

constexpr size_t kMultimodularThreshold = 256;

}  // namespace

Matrix kernel_matrix(const Matrix& m) {
    const size_t C = m.cols();
    if (m.rows() == 0) return Matrix::identity(m.field(), C);
    Matrix k;
    bool done = false;
    if (!m.field().is_prime() && m.rows() * C > kMultimodularThreshold) {
        if (auto mm = multimodular_kernel(m)) {
            k = std::move(*mm);
            done = true;
        }
    }
    if (!done) k = kernel_from_echelon(row_reduce(m), m.field(), C);
    canonicalize_columns(k);
    return k;
}

size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    if (!m.field().is_prime() && m.rows() * m.cols() > kMultimodularThreshold) return m.cols() - kernel_matrix(m).cols();
    return row_reduce(m).pivots.size();
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    Matrix k = kernel_matrix(m);
    std::vector<Vec> out;
    for (size_t j = 0; j < k.cols(); ++j) out.push_back(k.column(j));
    return out;
}

std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
    const size_t C = m.cols();
    Matrix x(m.field(), C, b.cols());
    if (m.rows() == 0 || b.cols() == 0) return x;
    if (!m.field().is_prime() && m.rows() * (C + b.cols()) > kMultimodularThreshold) {
        // kernel of [M | -B]; a solution is K_top Y with K_bottom Y = I
        Matrix k = kernel_matrix(hstack(m, b.scaled(Scalar(m.field(), -1))));
        Matrix bottom = k.block(C, 0, b.cols(), k.cols());
        Echelon e = row_reduce(hstack(bottom, Matrix::identity(m.field(), b.cols())));
        Matrix y(m.field(), k.cols(), b.cols());
        for (size_t r = 0; r < e.pivots.size(); ++r) {
            if (e.pivots[r] >= k.cols()) return std::nullopt;
            for (size_t j = 0; j < b.cols(); ++j)
                if (!e.rref.is_zero_at(r, k.cols() + j)) y.set(e.pivots[r], j, e.rref.at(r, k.cols() + j));
        }
        return k.block(0, 0, C, k.cols()) * y;
    }
    Echelon e = row_reduce(hstack(m, b));
    for (size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= C) return std::nullopt;
        for (size_t j = 0; j < b.cols(); ++j)
            if (!e.rref.is_zero_at(r, C + j)) x.set(e.pivots[r], j, e.rref.at(r, C + j));
    }
    return x;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (m.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    auto x = solve_matrix(m, Matrix::from_columns(m.field(), m.rows(), {b}));
    if (!x) return std::nullopt;
    return x->column(0);
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve_matrix(m, Matrix::identity(m.field(), m.rows()));
}

Matrix column_space(const Matrix& m) {
    if (m.empty()) return Matrix(m.field(), m.rows(), 0);
    return m.select_columns(row_reduce(m).pivots);
}

std::vector<size_t> complement_indices(const Matrix& m) {
    // pivots of [M | I] beyond the first block pick standard vectors
    Echelon e = row_reduce(hstack(m, Matrix::identity(m.field(), m.rows())));
    std::vector<size_t> out;
    for (size_t c : e.pivots)
        if (c >= m.cols()) out.push_back(c - m.cols());
    return out;
}

std::vector<size_t> nilpotent_block_profile(const Matrix& n) {
    if (n.rows() != n.cols()) throw std::invalid_argument("block profile of non-square matrix");
    const size_t d = n.rows();
    if (d == 0) return {};
    std::vector<size_t> ranks{d};
    Matrix pw = Matrix::identity(n.field(), d);
    for (size_t k = 1; k <= d; ++k) {
        pw = pw * n;
        ranks.push_back(rank(pw));
        if (ranks.back() == 0) break;
    }
    if (ranks.back() != 0) throw std::invalid_argument("matrix is not nilpotent");
    // number of blocks of size >= k is rank(N^{k-1}) - rank(N^k)
    std::vector<size_t> at_least;
    for (size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
    std::vector<size_t> sizes;
    for (size_t k = at_least.size(); k >= 1; --k) {
        size_t exact = at_least[k - 1] - (k < at_least.size() ? at_least[k] : 0);
        for (size_t t = 0; t < exact; ++t) sizes.push_back(k);
    }
    return sizes;
}

}  // namespace glsw
