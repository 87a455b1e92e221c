#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zariski {

// Domain failure; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int euler_phi(int n);

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_poly(int n);

// Element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1).
// Stored as integer numerators over one positive common denominator,
// reduced so the representation is canonical.
class CycNum {
public:
    CycNum() : CycNum(1) {}
    explicit CycNum(int n);
    CycNum(int n, const mpq_class& q);
    CycNum(int n, long v) : CycNum(n, mpq_class(v)) {}

    // Reduces an arbitrary polynomial in zeta modulo Phi_n.
    static CycNum from_poly(int n, const std::vector<mpq_class>& raw);
    static CycNum zeta(int n, int power = 1);

    int order() const { return n_; }
    int degree() const { return static_cast<int>(num_.size()); }
    mpq_class coeff(int i) const;
    std::vector<mpq_class> coeffs() const;
    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    // Only valid when is_rational().
    mpq_class rational() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& b);
    CycNum& operator-=(const CycNum& b);
    CycNum& operator*=(const CycNum& b);
    CycNum& operator/=(const CycNum& b);
    CycNum inverse() const;

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    CycNum pow(long e) const;
    // zeta -> zeta^k
    CycNum galois(int k) const;
    // Image under the inclusion Q(zeta_n) -> Q(zeta_m), n | m.
    CycNum lift(int m) const;

    // Polynomial in the variable `a` standing for zeta, e.g. "-a^3+1/2*a".
    std::string str() const;

private:
    void normalize();
    void check_same(const CycNum& b) const;

    int n_;
    std::vector<mpz_class> num_;
    mpz_class den_;
};

CycNum operator*(const mpq_class& q, const CycNum& a);

enum class Part { Real, Imag };

struct Embedding {
    int field_order = 10;
    int root_index = 1;  // zeta -> exp(2 pi i root_index / field_order)

    bool operator==(const Embedding&) const = default;
};

void check_embedding(const Embedding& e);

// Embedding of Q(zeta_m) extending e and sending zeta_m^(m/q) to
// exp(2 pi i / q); m = lcm(n, q).
Embedding extend_embedding(const Embedding& e, int q);

// Rational enclosure: mid +- rad on each axis; radii are dyadic.
struct ComplexBall {
    mpq_class re_mid, re_rad, im_mid, im_rad;

    bool contains(const ComplexBall& inner) const;
    double re() const { return re_mid.get_d(); }
    double im() const { return im_mid.get_d(); }
};

ComplexBall embed(const CycNum& a, const Embedding& e, int precision_bits);

// Field element whose embedding is Re(a) (Part::Real) or Im(a)*2i
// (Part::Imag); zero exactly when that part vanishes.
CycNum part_witness(const CycNum& a, Part part);
// Real-subfield element equal to Re(a) / Im(a) under every embedding
// compatible with complex conjugation; Im needs i in the field (4 | n).
CycNum real_part(const CycNum& a);
CycNum imag_part(const CycNum& a);

int certified_sign(const CycNum& a, Part part, const Embedding& e, int start_bits = 64);

// Parses the textual form: +, -, *, /, ^ with integer exponents,
// parentheses, integers and p/q literals, and the generator `a`.
CycNum parse_cyc(const std::string& text, int n);

}  // namespace zariski
