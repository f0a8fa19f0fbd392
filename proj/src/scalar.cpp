#include "glsw/linear.hpp"

namespace glsw {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p)) throw std::invalid_argument("modulus must be a prime below 2^31: " + std::to_string(p));
    Field f;
    f.kind_ = Kind::Prime;
    f.p_ = p;
    return f;
}

std::string Field::name() const { return is_prime() ? "F_" + std::to_string(p_) : "Q"; }

uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    if (nr == 0) throw std::domain_error("zero has no inverse mod " + std::to_string(p));
    while (nr) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

namespace {
uint32_t reduce_mpz(const mpz_class& z, uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return static_cast<uint32_t>(r.get_ui());
}
}  // namespace

Scalar::Scalar(Field f, long v) : f_(f) {
    if (f.is_prime()) {
        int64_t m = v % static_cast<int64_t>(f.modulus());
        if (m < 0) m += f.modulus();
        r_ = static_cast<uint32_t>(m);
    } else {
        q_ = v;
    }
}

Scalar::Scalar(Field f, const mpq_class& v) : f_(f) {
    if (f.is_prime()) {
        uint32_t den = reduce_mpz(v.get_den(), f.modulus());
        if (den == 0) throw std::domain_error("denominator vanishes mod " + std::to_string(f.modulus()));
        r_ = static_cast<uint32_t>(static_cast<uint64_t>(reduce_mpz(v.get_num(), f.modulus())) * mod_inverse(den, f.modulus()) % f.modulus());
    } else {
        q_ = v;
    }
}

Scalar Scalar::residue(Field f, uint32_t r) {
    Scalar s(f);
    s.r_ = r % f.modulus();
    return s;
}

void Scalar::check(const Scalar& o) const {
    if (f_ != o.f_) throw FieldMismatch("scalar field mismatch: " + f_.name() + " vs " + o.f_.name());
}

bool Scalar::is_zero() const { return f_.is_prime() ? r_ == 0 : sgn(q_) == 0; }
bool Scalar::is_one() const { return f_.is_prime() ? r_ == 1 : q_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
    check(o);
    Scalar s(f_);
    if (f_.is_prime()) {
        uint64_t t = static_cast<uint64_t>(r_) + o.r_;
        s.r_ = static_cast<uint32_t>(t >= f_.modulus() ? t - f_.modulus() : t);
    } else {
        s.q_ = q_ + o.q_;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar s(f_);
    if (f_.is_prime())
        s.r_ = r_ == 0 ? 0 : f_.modulus() - r_;
    else
        s.q_ = -q_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check(o);
    Scalar s(f_);
    if (f_.is_prime())
        s.r_ = static_cast<uint32_t>(static_cast<uint64_t>(r_) * o.r_ % f_.modulus());
    else
        s.q_ = q_ * o.q_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar s(f_);
    if (f_.is_prime())
        s.r_ = mod_inverse(r_, f_.modulus());
    else
        s.q_ = 1 / q_;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    check(o);
    return f_.is_prime() ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::to_string() const { return f_.is_prime() ? std::to_string(r_) : q_.get_str(); }

Vec zero_vec(Field f, size_t n) { return Vec(n, Scalar(f)); }

}  // namespace glsw
