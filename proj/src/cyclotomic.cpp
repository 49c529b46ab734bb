#include "canoneq/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace canoneq {

namespace {

std::recursive_mutex cache_mutex;

struct FieldTable {
    unsigned n = 1;
    unsigned phi = 1;
    std::vector<Int> phi_poly;                 // monic, degree phi
    std::vector<std::vector<Int>> pow_red;     // x^e mod Phi_n for e in [0, n)
};

// Exact division of integer polynomials (assumes divisibility, divisor monic).
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    for (long i = (long)q.size() - 1; i >= 0; --i) {
        Int c = num[i + den.size() - 1];
        q[i] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return q;
}

const FieldTable& field_table(unsigned n) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex);
    static std::map<unsigned, FieldTable> tables;
    auto it = tables.find(n);
    if (it != tables.end()) return it->second;
    FieldTable ft;
    ft.n = n;
    ft.phi = euler_phi(n);
    ft.phi_poly = cyclotomic_polynomial(n);
    ft.pow_red.resize(n);
    for (unsigned e = 0; e < n; ++e) {
        if (e < ft.phi) {
            ft.pow_red[e].assign(ft.phi, Int(0));
            ft.pow_red[e][e] = 1;
        } else {
            // x^e = x * x^(e-1), then reduce the top coefficient via Phi_n.
            std::vector<Int> v(ft.phi + 1, Int(0));
            const auto& prev = ft.pow_red[e - 1];
            for (unsigned j = 0; j < ft.phi; ++j) v[j + 1] = prev[j];
            Int top = v[ft.phi];
            if (top != 0)
                for (unsigned j = 0; j < ft.phi; ++j) v[j] -= top * ft.phi_poly[j];
            v.resize(ft.phi);
            ft.pow_red[e] = std::move(v);
        }
    }
    return tables.emplace(n, std::move(ft)).first->second;
}

// Basis vectors of Q(zeta_m) inside Q(zeta_n) (m | n), as columns.
struct Descent {
    std::vector<std::vector<Rational>> cols; // phi(m) columns of length phi(n)
};

const Descent& descent_data(unsigned n, unsigned m) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex);
    static std::map<std::pair<unsigned, unsigned>, Descent> cache;
    auto key = std::make_pair(n, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const FieldTable& ft = field_table(n);
    Descent d;
    unsigned phim = euler_phi(m);
    unsigned step = n / m;
    d.cols.resize(phim);
    for (unsigned j = 0; j < phim; ++j) {
        const auto& row = ft.pow_red[(size_t)((unsigned long)j * step % n)];
        d.cols[j].assign(row.begin(), row.end());
    }
    return cache[key] = std::move(d);
}

// Solve B y = a where B has the given columns; returns nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& a) {
    size_t rows = a.size(), ncols = cols.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1, Rational(0)));
    for (size_t j = 0; j < ncols; ++j)
        for (size_t i = 0; i < rows && i < cols[j].size(); ++i) m[i][j] = cols[j][i];
    for (size_t i = 0; i < rows; ++i) m[i][ncols] = a[i];

    size_t r = 0;
    std::vector<long> pivot_col(rows, -1);
    for (size_t c = 0; c < ncols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j <= ncols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j <= ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col[r] = (long)c;
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (m[i][ncols] != 0) return std::nullopt;
    std::vector<Rational> y(ncols, Rational(0));
    for (size_t i = 0; i < r; ++i)
        if (pivot_col[i] >= 0) y[pivot_col[i]] = m[i][ncols];
    // Rows below rank already checked; consistency of free columns is implied
    // because B has full column rank (its columns are basis vectors).
    return y;
}

void trim(std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

} // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; (unsigned long)p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned p = 2; (unsigned long)p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

const std::vector<Int>& cyclotomic_polynomial(unsigned n) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex);
    static std::map<unsigned, std::vector<Int>> polys;
    auto it = polys.find(n);
    if (it != polys.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return polys.emplace(n, std::move(num)).first->second;
}

Cyclotomic::Cyclotomic(long v) : order_(1) {
    if (v != 0) coeffs_ = {Rational(v)};
}
Cyclotomic::Cyclotomic(const Rational& v) : order_(1) {
    if (v != 0) coeffs_ = {v};
}
Cyclotomic::Cyclotomic(const Int& v) : order_(1) {
    if (v != 0) coeffs_ = {Rational(v)};
}

bool Cyclotomic::is_one() const {
    return order_ == 1 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

Rational Cyclotomic::rational_value() const {
    if (order_ != 1) throw error("value is not rational: " + str());
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::make(unsigned n, std::vector<Rational> basis_coeffs) {
    trim(basis_coeffs);
    if (basis_coeffs.empty()) return Cyclotomic();
    // Descend to the minimal subfield: for each prime p | n, test membership
    // in Q(zeta_{n/p}) and repeat until no descent applies.
    bool descended = true;
    while (n > 1 && descended) {
        descended = false;
        for (unsigned p : prime_factors(n)) {
            unsigned m = n / p;
            const Descent& d = descent_data(n, m);
            std::vector<Rational> padded = basis_coeffs;
            padded.resize(euler_phi(n), Rational(0));
            auto y = solve_columns(d.cols, padded);
            if (y) {
                n = m;
                basis_coeffs = std::move(*y);
                trim(basis_coeffs);
                if (basis_coeffs.empty()) return Cyclotomic();
                descended = true;
                break;
            }
        }
    }
    Cyclotomic c;
    c.order_ = n;
    c.coeffs_ = std::move(basis_coeffs);
    return c;
}

Cyclotomic Cyclotomic::from_power_vector(unsigned n, const std::vector<Rational>& powers) {
    const FieldTable& ft = field_table(n);
    std::vector<Rational> acc(ft.phi, Rational(0));
    for (size_t e = 0; e < powers.size(); ++e) {
        if (powers[e] == 0) continue;
        const auto& row = ft.pow_red[e % n];
        for (unsigned j = 0; j < ft.phi; ++j)
            if (row[j] != 0) acc[j] += powers[e] * Rational(row[j]);
    }
    return make(n, std::move(acc));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long k) {
    if (n == 0) throw error("root_of_unity: order must be positive");
    long kk = k % (long)n;
    if (kk < 0) kk += n;
    std::vector<Rational> powers((size_t)kk + 1, Rational(0));
    powers[(size_t)kk] = 1;
    return from_power_vector(n, powers);
}

Cyclotomic Cyclotomic::from_basis(unsigned n, std::vector<Rational> coeffs) {
    if (coeffs.size() > euler_phi(n)) throw error("from_basis: too many coefficients");
    return make(n, std::move(coeffs));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    unsigned n = std::lcm(order_, o.order_);
    const FieldTable& ft = field_table(n);
    std::vector<Rational> acc(ft.phi, Rational(0));
    unsigned sa = n / order_, sb = n / o.order_;
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        const auto& row = ft.pow_red[(size_t)(e * sa) % n];
        for (unsigned j = 0; j < ft.phi; ++j)
            if (row[j] != 0) acc[j] += coeffs_[e] * Rational(row[j]);
    }
    for (size_t e = 0; e < o.coeffs_.size(); ++e) {
        if (o.coeffs_[e] == 0) continue;
        const auto& row = ft.pow_red[(size_t)(e * sb) % n];
        for (unsigned j = 0; j < ft.phi; ++j)
            if (row[j] != 0) acc[j] += o.coeffs_[e] * Rational(row[j]);
    }
    return *this = make(n, std::move(acc));
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (is_zero() || o.is_zero()) return *this = Cyclotomic();
    if (o.is_rational()) {
        for (auto& c : coeffs_) c *= o.coeffs_[0];
        return *this;
    }
    if (is_rational()) {
        Rational f = coeffs_[0];
        *this = o;
        for (auto& c : coeffs_) c *= f;
        return *this;
    }
    unsigned n = std::lcm(order_, o.order_);
    unsigned sa = n / order_, sb = n / o.order_;
    // Accumulate the product in the power basis of Q(zeta_n), exponent mod n.
    std::vector<Rational> powers(n, Rational(0));
    for (size_t e1 = 0; e1 < coeffs_.size(); ++e1) {
        if (coeffs_[e1] == 0) continue;
        for (size_t e2 = 0; e2 < o.coeffs_.size(); ++e2) {
            if (o.coeffs_[e2] == 0) continue;
            powers[(e1 * sa + e2 * sb) % n] += coeffs_[e1] * o.coeffs_[e2];
        }
    }
    return *this = from_power_vector(n, powers);
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw division_by_zero();
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
    // Extended Euclid in Q[x] modulo Phi_n: find u with u*a = 1 (mod Phi_n).
    const FieldTable& ft = field_table(order_);
    std::vector<Rational> r0(ft.phi_poly.size());
    for (size_t i = 0; i < ft.phi_poly.size(); ++i) r0[i] = Rational(ft.phi_poly[i]);
    std::vector<Rational> r1(coeffs_.begin(), coeffs_.end());
    std::vector<Rational> u0{Rational(0)}, u1{Rational(1)};
    auto deg = [](const std::vector<Rational>& p) -> long {
        for (long i = (long)p.size() - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1;
    };
    while (deg(r1) > 0) {
        long d0 = deg(r0), d1 = deg(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(u0, u1);
            continue;
        }
        Rational f = r0[d0] / r1[d1];
        long shift = d0 - d1;
        for (long i = 0; i <= d1; ++i) r0[i + shift] -= f * r1[i];
        if (u0.size() < u1.size() + shift) u0.resize(u1.size() + shift, Rational(0));
        for (size_t i = 0; i < u1.size(); ++i) u0[i + shift] -= f * u1[i];
    }
    long d1 = deg(r1);
    if (d1 != 0) throw internal_error("cyclotomic inverse: gcd not constant");
    Rational c = r1[0];
    std::vector<Rational> inv_powers(u1.size());
    for (size_t i = 0; i < u1.size(); ++i) inv_powers[i] = u1[i] / c;
    return from_power_vector(order_, inv_powers);
}

Cyclotomic Cyclotomic::conjugate() const {
    if (is_rational()) return *this;
    std::vector<Rational> powers(order_, Rational(0));
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        powers[(order_ - e) % order_] += coeffs_[e];
    }
    return from_power_vector(order_, powers);
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e == 0) return Cyclotomic(1);
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this, acc(1);
    unsigned long k = (unsigned long)e;
    while (k) {
        if (k & 1) acc *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return acc;
}

int Cyclotomic::cmp_structural(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_ ? -1 : 1;
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = mpq_cmp(a.coeffs_[i].get_mpq_t(), b.coeffs_[i].get_mpq_t());
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::complex<double> BigComplex::to_double() const {
    double r = mpz_get_d(re.get_mpz_t());
    double i = mpz_get_d(im.get_mpz_t());
    double s = std::ldexp(1.0, (int)-scale);
    return {r * s, i * s};
}

namespace {

BigComplex cplx_mul(const BigComplex& a, const BigComplex& b) {
    BigComplex r;
    r.scale = a.scale;
    Int re = a.re * b.re - a.im * b.im;
    Int im = a.re * b.im + a.im * b.re;
    mpz_fdiv_q_2exp(r.re.get_mpz_t(), re.get_mpz_t(), (mp_bitcnt_t)b.scale);
    mpz_fdiv_q_2exp(r.im.get_mpz_t(), im.get_mpz_t(), (mp_bitcnt_t)b.scale);
    return r;
}

BigComplex cplx_pow(BigComplex base, unsigned long e, long scale) {
    BigComplex acc;
    acc.scale = scale;
    acc.re = Int(1) << (unsigned)scale;
    acc.im = 0;
    while (e) {
        if (e & 1) acc = cplx_mul(acc, base);
        e >>= 1;
        if (e) base = cplx_mul(base, base);
    }
    return acc;
}

} // namespace

BigComplex root_of_unity_approx(unsigned n, long k, long scale) {
    static std::map<std::pair<unsigned, long>, BigComplex> cache;
    BigComplex z1;
    {
        std::lock_guard<std::recursive_mutex> lock(cache_mutex);
        auto it = cache.find({n, scale});
        if (it != cache.end()) z1 = it->second;
    }
    if (z1.scale == 0) {
        // Newton iteration for z^n = 1 starting from the double estimate;
        // converges quadratically, so the double start pins the right root.
        double ang = 2.0 * 3.14159265358979323846 / (double)n;
        BigComplex z;
        z.scale = scale;
        mpz_set_d(z.re.get_mpz_t(), std::ldexp(std::cos(ang), 60));
        mpz_set_d(z.im.get_mpz_t(), std::ldexp(std::sin(ang), 60));
        z.re <<= (unsigned)(scale - 60);
        z.im <<= (unsigned)(scale - 60);
        for (int iter = 0; iter < 12; ++iter) {
            BigComplex zp = cplx_pow(z, n - 1, scale); // z^(n-1)
            BigComplex zn = cplx_mul(zp, z);           // z^n
            // delta = (z^n - 1) / (n * z^(n-1))
            Int one = Int(1) << (unsigned)scale;
            Int num_re = zn.re - one, num_im = zn.im;
            Int den_re = zp.re * n, den_im = zp.im * n;
            Int den_norm = den_re * den_re + den_im * den_im;
            if (den_norm == 0) throw internal_error("root approx: zero derivative");
            Int dr = (num_re * den_re + num_im * den_im) << (unsigned)scale;
            Int di = (num_im * den_re - num_re * den_im) << (unsigned)scale;
            mpz_fdiv_q(dr.get_mpz_t(), dr.get_mpz_t(), den_norm.get_mpz_t());
            mpz_fdiv_q(di.get_mpz_t(), di.get_mpz_t(), den_norm.get_mpz_t());
            z.re -= dr;
            z.im -= di;
            if (dr == 0 && di == 0) break;
        }
        z1 = z;
        std::lock_guard<std::recursive_mutex> lock(cache_mutex);
        cache[{n, scale}] = z1;
    }
    long kk = k % (long)n;
    if (kk < 0) kk += n;
    return cplx_pow(z1, (unsigned long)kk, scale);
}

BigComplex Cyclotomic::approx(unsigned precision_bits) const {
    // Guard bits grow with coefficient size so cancellation cannot push the
    // rounding error past the contract bound.
    long maxbits = 1;
    for (const auto& c : coeffs_) {
        long b = (long)mpz_sizeinbase(c.get_num().get_mpz_t(), 2) +
                 (long)mpz_sizeinbase(c.get_den().get_mpz_t(), 2);
        maxbits = std::max(maxbits, b);
    }
    long scale = (long)precision_bits + 24 + maxbits;
    BigComplex acc;
    acc.scale = scale;
    acc.re = 0;
    acc.im = 0;
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        BigComplex z = root_of_unity_approx(order_, (long)e, scale);
        Int re = z.re * coeffs_[e].get_num();
        Int im = z.im * coeffs_[e].get_num();
        mpz_fdiv_q(re.get_mpz_t(), re.get_mpz_t(), coeffs_[e].get_den().get_mpz_t());
        mpz_fdiv_q(im.get_mpz_t(), im.get_mpz_t(), coeffs_[e].get_den().get_mpz_t());
        acc.re += re;
        acc.im += im;
    }
    return acc;
}

int Cyclotomic::cmp_embedding(const Cyclotomic& a, const Cyclotomic& b, unsigned precision_bits) {
    if (a == b) return 0;
    BigComplex va = a.approx(precision_bits), vb = b.approx(precision_bits);
    long s = std::min(va.scale, vb.scale);
    Int ar = va.re >> (unsigned)(va.scale - s), br = vb.re >> (unsigned)(vb.scale - s);
    Int ai = va.im >> (unsigned)(va.scale - s), bi = vb.im >> (unsigned)(vb.scale - s);
    Int eps = Int(1) << (unsigned)(s - (long)precision_bits + 8);
    Int dr = ar - br;
    if (dr > eps) return 1;
    if (dr < -eps) return -1;
    Int di = ai - bi;
    if (di > eps) return 1;
    if (di < -eps) return -1;
    return cmp_structural(a, b);
}

std::optional<std::vector<Cyclotomic>> Cyclotomic::kth_roots(const Cyclotomic& v, unsigned k) {
    if (k == 0) throw error("kth_roots: k must be positive");
    if (v.is_zero()) return std::vector<Cyclotomic>{Cyclotomic()};
    // Recognize v = q * zeta_n^j.
    unsigned n = v.order();
    Rational q;
    long j = -1;
    for (unsigned jj = 0; jj < n; ++jj) {
        Cyclotomic u = v * root_of_unity(n, -(long)jj);
        if (u.is_rational()) {
            q = u.rational_value();
            j = (long)jj;
            break;
        }
    }
    if (j < 0) return std::nullopt;
    if (q < 0) {
        // Fold the sign into the root of unity.
        if (n % 2 == 0) {
            j = (j + (long)n / 2) % (long)n;
        } else {
            n *= 2;
            j = (2 * j + (long)n / 2) % (long)n;
        }
        q = -q;
    }
    auto root = exact_root(q, k);
    if (!root) return std::nullopt;
    std::vector<Cyclotomic> out;
    unsigned kn = k * n;
    for (unsigned i = 0; i < k; ++i)
        out.push_back(Cyclotomic(*root) * root_of_unity(kn, j + (long)(n * i)));
    return out;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = (long)coeffs_.size() - 1; e >= 0; --e) {
        const Rational& c = coeffs_[e];
        if (c == 0) continue;
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z" << order_;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace canoneq
