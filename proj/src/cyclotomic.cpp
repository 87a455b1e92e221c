#include "zariski/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

namespace zariski {

int euler_phi(int n)
{
    if (n < 1)
        throw Error("cyclotomic order must be positive");
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            r -= r / p;
        }
    }
    if (n > 1)
        r -= r / n;
    return r;
}

namespace {

std::vector<long> compute_cyclotomic(int n)
{
    // x^n - 1 divided by Phi_d for every proper divisor d of n
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d)
            continue;
        const auto& q = cyclotomic_poly(d);
        int dq = static_cast<int>(q.size()) - 1;
        int dp = static_cast<int>(p.size()) - 1;
        std::vector<long> quot(dp - dq + 1, 0);
        for (int i = dp; i >= dq; --i) {
            long c = p[i];
            quot[i - dq] = c;
            if (c)
                for (int j = 0; j <= dq; ++j)
                    p[i - dq + j] -= c * q[j];
        }
        p = quot;
    }
    return p;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<long>>> cache;
    if (n < 1)
        throw Error("cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end())
            return *it->second;
    }
    auto poly = std::make_unique<std::vector<long>>(compute_cyclotomic(n));
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot)
        slot = std::move(poly);
    return *slot;
}

namespace {

// Reduces p (any length) modulo the monic Phi_n in place and truncates.
void reduce_mod_phi(std::vector<mpz_class>& p, int n)
{
    const auto& phi = cyclotomic_poly(n);
    int deg = static_cast<int>(phi.size()) - 1;
    for (int d = static_cast<int>(p.size()) - 1; d >= deg; --d) {
        if (p[d] == 0)
            continue;
        mpz_class c = p[d];
        for (int j = 0; j <= deg; ++j)
            if (phi[j])
                p[d - deg + j] -= c * phi[j];
    }
    p.resize(deg);
}

}  // namespace

CycNum::CycNum(int n) : n_(n), num_(euler_phi(n)), den_(1) {}

CycNum::CycNum(int n, const mpq_class& q) : CycNum(n)
{
    num_[0] = q.get_num();
    den_ = q.get_den();
}

CycNum CycNum::from_poly(int n, const std::vector<mpq_class>& raw)
{
    CycNum r(n);
    mpz_class den = 1;
    for (const auto& c : raw)
        den = lcm(den, mpz_class(c.get_den()));
    std::vector<mpz_class> p(std::max<size_t>(raw.size(), r.num_.size()));
    for (size_t i = 0; i < raw.size(); ++i)
        p[i] = raw[i].get_num() * (den / raw[i].get_den());
    reduce_mod_phi(p, n);
    r.num_ = std::move(p);
    r.den_ = den;
    r.normalize();
    return r;
}

CycNum CycNum::zeta(int n, int power)
{
    power %= n;
    if (power < 0)
        power += n;
    std::vector<mpq_class> raw(power + 1);
    raw[power] = 1;
    return from_poly(n, raw);
}

mpq_class CycNum::coeff(int i) const
{
    mpq_class q(num_[i], den_);
    q.canonicalize();
    return q;
}

std::vector<mpq_class> CycNum::coeffs() const
{
    std::vector<mpq_class> r;
    for (int i = 0; i < degree(); ++i)
        r.push_back(coeff(i));
    return r;
}

bool CycNum::is_zero() const
{
    return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CycNum::is_rational() const
{
    return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

mpq_class CycNum::rational() const
{
    return coeff(0);
}

void CycNum::normalize()
{
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (g == 1)
            break;
        if (c != 0)
            g = gcd(g, c);
    }
    if (is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ < 0)
        g = -abs(g);
    if (g != 1) {
        for (auto& c : num_)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

void CycNum::check_same(const CycNum& b) const
{
    if (n_ != b.n_)
        throw Error("mixed cyclotomic orders " + std::to_string(n_) + " and " + std::to_string(b.n_));
}

CycNum CycNum::operator-() const
{
    CycNum r = *this;
    for (auto& c : r.num_)
        c = -c;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& b)
{
    check_same(b);
    if (den_ == b.den_) {
        for (size_t i = 0; i < num_.size(); ++i)
            num_[i] += b.num_[i];
    } else {
        for (size_t i = 0; i < num_.size(); ++i)
            num_[i] = num_[i] * b.den_ + b.num_[i] * den_;
        den_ *= b.den_;
    }
    normalize();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& b)
{
    return *this += -b;
}

CycNum& CycNum::operator*=(const CycNum& b)
{
    check_same(b);
    int d = degree();
    std::vector<mpz_class> p(2 * d - 1);
    for (int i = 0; i < d; ++i) {
        if (num_[i] == 0)
            continue;
        for (int j = 0; j < d; ++j)
            if (b.num_[j] != 0)
                mpz_addmul(p[i + j].get_mpz_t(), num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    reduce_mod_phi(p, n_);
    num_ = std::move(p);
    den_ *= b.den_;
    normalize();
    return *this;
}

CycNum CycNum::inverse() const
{
    if (is_zero())
        throw Error("division by zero in cyclotomic field");
    if (is_rational())
        return CycNum(n_, 1 / rational());
    // a^-1 = (product of the other conjugates) / norm(a)
    CycNum prod(n_, 1L);
    for (int k = 2; k < n_; ++k)
        if (std::gcd(k, n_) == 1)
            prod *= galois(k);
    CycNum norm = *this * prod;
    return CycNum(n_, 1 / norm.rational()) * prod;
}

CycNum& CycNum::operator/=(const CycNum& b)
{
    check_same(b);
    if (b.is_zero())
        throw Error("division by zero in cyclotomic field");
    return *this *= b.inverse();
}

bool operator==(const CycNum& a, const CycNum& b)
{
    return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
}

CycNum operator*(const mpq_class& q, const CycNum& a)
{
    return CycNum(a.order(), q) * a;
}

CycNum CycNum::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    CycNum r(n_, 1L), base = *this;
    while (e) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

CycNum CycNum::galois(int k) const
{
    k %= n_;
    if (k < 0)
        k += n_;
    if (std::gcd(k, n_) != 1)
        throw Error("galois exponent " + std::to_string(k) + " not coprime to " + std::to_string(n_));
    std::vector<mpz_class> p(std::max(n_, 1));
    for (int j = 0; j < degree(); ++j)
        if (num_[j] != 0)
            p[(static_cast<long>(j) * k) % n_] += num_[j];
    reduce_mod_phi(p, n_);
    CycNum r(n_);
    r.num_ = std::move(p);
    r.den_ = den_;
    r.normalize();
    return r;
}

CycNum CycNum::lift(int m) const
{
    if (m % n_)
        throw Error("cannot lift Q(zeta_" + std::to_string(n_) + ") into Q(zeta_" + std::to_string(m) + ")");
    int step = m / n_;
    std::vector<mpz_class> p(m);
    for (int j = 0; j < degree(); ++j)
        p[(static_cast<long>(j) * step) % m] += num_[j];
    reduce_mod_phi(p, m);
    CycNum r(m);
    r.num_ = std::move(p);
    r.den_ = den_;
    r.normalize();
    return r;
}

std::string CycNum::str() const
{
    std::string out;
    for (int d = degree() - 1; d >= 0; --d) {
        mpq_class c = coeff(d);
        if (c == 0)
            continue;
        bool neg = c < 0;
        mpq_class a = abs(c);
        std::string mono;
        if (d > 0)
            mono = d == 1 ? "a" : "a^" + std::to_string(d);
        std::string term;
        if (d == 0)
            term = a.get_str();
        else if (a == 1)
            term = mono;
        else
            term = a.get_str() + "*" + mono;
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? "-" : "+") + term;
    }
    return out.empty() ? "0" : out;
}

void check_embedding(const Embedding& e)
{
    if (e.field_order < 1)
        throw Error("embedding field order must be positive");
    if (std::gcd(e.root_index, e.field_order) != 1)
        throw Error("root index " + std::to_string(e.root_index) + " not coprime to " +
                    std::to_string(e.field_order));
}

Embedding extend_embedding(const Embedding& e, int q)
{
    check_embedding(e);
    int n = e.field_order;
    int m = std::lcm(n, q);
    for (int k = 1; k <= m; ++k) {
        if (std::gcd(k, m) != 1)
            continue;
        if ((k - e.root_index) % n == 0 && (k - 1) % q == 0)
            return {m, k};
    }
    throw Error("no compatible embedding of Q(zeta_" + std::to_string(m) + ")");
}

bool ComplexBall::contains(const ComplexBall& in) const
{
    return abs(in.re_mid - re_mid) + in.re_rad <= re_rad && abs(in.im_mid - im_mid) + in.im_rad <= im_rad;
}

namespace {

// round(2^p cos(2 pi k j / n)) and the sine analogue, each within 1 of the
// true scaled value; entry 0 is exact.
struct TrigTable {
    std::vector<mpz_class> re, im;
};

const TrigTable& trig_table(int n, int k, int p)
{
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<TrigTable>> cache;
    auto key = std::make_tuple(n, k, p);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    auto t = std::make_unique<TrigTable>();
    int d = euler_phi(n);
    mpfr_t arg, v, pi;
    mpfr_prec_t prec = p + 64;
    mpfr_inits2(prec, arg, v, pi, (mpfr_ptr)0);
    mpfr_const_pi(pi, MPFR_RNDN);
    for (int j = 0; j < d; ++j) {
        long r = (static_cast<long>(k) * j) % n;
        mpfr_mul_si(arg, pi, 2 * r, MPFR_RNDN);
        mpfr_div_si(arg, arg, n, MPFR_RNDN);
        mpz_class c, s;
        mpfr_cos(v, arg, MPFR_RNDN);
        mpfr_mul_2si(v, v, p, MPFR_RNDN);
        mpfr_get_z(c.get_mpz_t(), v, MPFR_RNDN);
        mpfr_sin(v, arg, MPFR_RNDN);
        mpfr_mul_2si(v, v, p, MPFR_RNDN);
        mpfr_get_z(s.get_mpz_t(), v, MPFR_RNDN);
        t->re.push_back(c);
        t->im.push_back(s);
    }
    mpfr_clears(arg, v, pi, (mpfr_ptr)0);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[key];
    if (!slot)
        slot = std::move(t);
    return *slot;
}

// Scaled sums: value * den * 2^p lies in [s - err, s + err].
void scaled_eval(const CycNum& a, const Embedding& e, int p, mpz_class& sre, mpz_class& sim, mpz_class& err)
{
    const auto& t = trig_table(e.field_order, e.root_index, p);
    const auto& num = a.numerators();
    sre = 0;
    sim = 0;
    err = 0;
    for (size_t j = 0; j < num.size(); ++j) {
        if (num[j] == 0)
            continue;
        mpz_addmul(sre.get_mpz_t(), num[j].get_mpz_t(), t.re[j].get_mpz_t());
        mpz_addmul(sim.get_mpz_t(), num[j].get_mpz_t(), t.im[j].get_mpz_t());
        if (j)
            err += abs(num[j]);
    }
}

}  // namespace

ComplexBall embed(const CycNum& a, const Embedding& e, int precision_bits)
{
    check_embedding(e);
    if (a.order() != e.field_order)
        throw Error("embedding does not match field order");
    int p = std::max(precision_bits, 16);
    mpz_class sre, sim, err;
    scaled_eval(a, e, p, sre, sim, err);
    mpz_class scale = a.denominator();
    scale <<= p;
    ComplexBall b;
    b.re_mid = mpq_class(sre, scale);
    b.im_mid = mpq_class(sim, scale);
    b.re_rad = mpq_class(err, scale);
    b.re_mid.canonicalize();
    b.im_mid.canonicalize();
    b.re_rad.canonicalize();
    b.im_rad = b.re_rad;
    return b;
}

CycNum part_witness(const CycNum& a, Part part)
{
    CycNum c = a.galois(a.order() - 1);
    return part == Part::Real ? a + c : a - c;
}

CycNum real_part(const CycNum& a)
{
    return mpq_class(1, 2) * part_witness(a, Part::Real);
}

CycNum imag_part(const CycNum& a)
{
    int n = a.order();
    if (n % 4)
        throw Error("imaginary part needs i in the field");
    // (a - conj a) / (2i) = -(i/2)(a - conj a)
    return mpq_class(-1, 2) * CycNum::zeta(n, n / 4) * part_witness(a, Part::Imag);
}

int certified_sign(const CycNum& a, Part part, const Embedding& e, int start_bits)
{
    check_embedding(e);
    if (a.order() != e.field_order)
        throw Error("embedding does not match field order");
    if (part_witness(a, part).is_zero())
        return 0;
    for (int p = std::max(start_bits, 16);; p *= 2) {
        mpz_class sre, sim, err;
        scaled_eval(a, e, p, sre, sim, err);
        const mpz_class& s = part == Part::Real ? sre : sim;
        if (abs(s) > err)
            return sgn(s);
        if (p > (1 << 24))
            throw Error("certified sign did not converge");
    }
}

namespace {

class Parser {
public:
    Parser(const std::string& s, int n) : s_(s), n_(n) {}

    CycNum parse()
    {
        CycNum v = expr();
        skip();
        if (i_ != s_.size())
            fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what)
    {
        throw Error("cannot parse \"" + s_ + "\": " + what);
    }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    bool peek(char c)
    {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }

    bool starts_primary()
    {
        skip();
        return i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == 'a' || s_[i_] == '(');
    }

    CycNum expr()
    {
        CycNum v = term();
        for (;;) {
            if (peek('+')) {
                ++i_;
                v += term();
            } else if (peek('-')) {
                ++i_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    CycNum term()
    {
        CycNum v = unary();
        for (;;) {
            if (peek('*')) {
                ++i_;
                v *= unary();
            } else if (peek('/')) {
                ++i_;
                CycNum d = unary();
                if (d.is_zero())
                    fail("division by zero");
                v /= d;
            } else if (starts_primary()) {
                v *= power();
            } else {
                return v;
            }
        }
    }

    CycNum unary()
    {
        if (peek('-')) {
            ++i_;
            return -unary();
        }
        if (peek('+')) {
            ++i_;
            return unary();
        }
        return power();
    }

    CycNum power()
    {
        CycNum b = primary();
        if (!peek('^'))
            return b;
        ++i_;
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++i_;
        }
        skip();
        size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (st == i_)
            fail("exponent expected");
        long e = std::stol(s_.substr(st, i_ - st));
        if (neg && b.is_zero())
            fail("division by zero");
        return b.pow(neg ? -e : e);
    }

    CycNum primary()
    {
        skip();
        if (i_ >= s_.size())
            fail("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            CycNum v = expr();
            if (!peek(')'))
                fail("')' expected");
            ++i_;
            return v;
        }
        if (c == 'a') {
            ++i_;
            return CycNum::zeta(n_, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            return CycNum(n_, mpq_class(mpz_class(s_.substr(st, i_ - st))));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    int n_;
    size_t i_ = 0;
};

}  // namespace

CycNum parse_cyc(const std::string& text, int n)
{
    euler_phi(n);
    return Parser(text, n).parse();
}

}  // namespace zariski
