#include "icosal/cyclo.hpp"

#include "icosal/arith.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace icosal {
namespace {

using Poly = std::vector<Rational>;

// ---------------------------------------------------------------------------
// Integer cyclotomic polynomials Phi_n, via exact division of x^n - 1 by the
// Phi_d of proper divisors. Cached for the life of the process.
// ---------------------------------------------------------------------------

std::vector<BigInt> int_poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    // den is monic; remainder must come out zero.
    const std::size_t dn = den.size() - 1;
    std::vector<BigInt> q(num.size() - dn, BigInt(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt c = num[k + dn];
        q[k] = c;
        if (c != 0)
            for (std::size_t i = 0; i <= dn; ++i) num[k + i] -= c * den[i];
    }
    for (const auto& r : num)
        if (r != 0) throw std::logic_error("cyclotomic factor division left a remainder");
    return q;
}

const std::vector<BigInt>& cyclotomic_poly(long n);

std::vector<BigInt> compute_cyclotomic(long n) {
    std::vector<BigInt> f(static_cast<std::size_t>(n) + 1, BigInt(0));
    f.front() = -1;
    f.back() = 1;
    for (long d : divisors_of(n))
        if (d < n) f = int_poly_div_exact(std::move(f), cyclotomic_poly(d));
    return f;
}

const std::vector<BigInt>& cyclotomic_poly(long n) {
    static std::shared_mutex mtx;
    static std::map<long, std::unique_ptr<const std::vector<BigInt>>> cache;
    {
        std::shared_lock lock(mtx);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    auto value = std::make_unique<const std::vector<BigInt>>(compute_cyclotomic(n));
    std::unique_lock lock(mtx);
    auto [it, inserted] = cache.try_emplace(n, std::move(value));
    return *it->second;
}

// ---------------------------------------------------------------------------
// Per-conductor tables: phi(n), prime factors, and x^e mod Phi_n for e in [0, n).
// The power table makes Galois substitution and cross-conductor embedding a
// sparse sum of cached vectors.
// ---------------------------------------------------------------------------

struct ConductorTables {
    long n = 1;
    long phi = 1;
    std::vector<long> primes;
    std::vector<Poly> power;
};

ConductorTables compute_tables(long n) {
    ConductorTables t;
    t.n = n;
    t.phi = euler_phi(n);
    t.primes = prime_factors(n);
    const auto& cyc = cyclotomic_poly(n);

    Poly top(static_cast<std::size_t>(t.phi));
    for (long i = 0; i < t.phi; ++i) top[i] = Rational(-cyc[i]);

    t.power.resize(static_cast<std::size_t>(n));
    for (long e = 0; e < std::min(n, t.phi); ++e) {
        Poly m(static_cast<std::size_t>(t.phi), Rational(0));
        m[e] = 1;
        t.power[e] = std::move(m);
    }
    for (long e = t.phi; e < n; ++e) {
        const Poly& prev = t.power[e - 1];
        Poly next(static_cast<std::size_t>(t.phi), Rational(0));
        for (long j = 1; j < t.phi; ++j) next[j] = prev[j - 1];
        const Rational& carry = prev[t.phi - 1];
        if (carry != 0)
            for (long j = 0; j < t.phi; ++j) next[j] += carry * top[j];
        t.power[e] = std::move(next);
    }
    return t;
}

const ConductorTables& tables(long n) {
    static std::shared_mutex mtx;
    static std::map<long, std::unique_ptr<const ConductorTables>> cache;
    {
        std::shared_lock lock(mtx);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    auto value = std::make_unique<const ConductorTables>(compute_tables(n));
    std::unique_lock lock(mtx);
    auto [it, inserted] = cache.try_emplace(n, std::move(value));
    return *it->second;
}

// ---------------------------------------------------------------------------
// Root recognition. The roots of unity inside Q(zeta_n) form mu_L with L = n
// for even n and L = 2n for odd n. Mapping coefficient vectors back to
// exponents lets products, inverses, and powers of roots run as exponent
// arithmetic mod L instead of convolution plus subfield descent.
// ---------------------------------------------------------------------------

struct RootTable {
    long L = 2;
    std::vector<std::pair<Poly, long>> by_coeffs;   // sorted by coefficient vector
};

RootTable compute_root_table(long n) {
    RootTable rt;
    rt.L = (n % 2 == 1) ? 2 * n : n;
    for (long k = 0; k < rt.L; ++k) {
        const Cyclo r = Cyclo::root_of_unity(rt.L, k);
        if (r.conductor() == n) rt.by_coeffs.emplace_back(r.coeffs(), k);
    }
    std::sort(rt.by_coeffs.begin(), rt.by_coeffs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return rt;
}

const RootTable& root_table(long n) {
    static std::shared_mutex mtx;
    static std::map<long, std::unique_ptr<const RootTable>> cache;
    {
        std::shared_lock lock(mtx);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    auto value = std::make_unique<const RootTable>(compute_root_table(n));
    std::unique_lock lock(mtx);
    auto [it, inserted] = cache.try_emplace(n, std::move(value));
    return *it->second;
}

// Returns {L, k} with x = zeta_L^k, or nullopt when x is not a root of unity.
std::optional<std::pair<long, long>> root_exponent(const Cyclo& x) {
    if (x.is_rational()) {
        if (x.is_one()) return std::make_pair(2L, 0L);
        if (x.rational_value() == -1) return std::make_pair(2L, 1L);
        return std::nullopt;
    }
    const RootTable& rt = root_table(x.conductor());
    const auto it = std::lower_bound(
        rt.by_coeffs.begin(), rt.by_coeffs.end(), x.coeffs(),
        [](const std::pair<Poly, long>& entry, const Poly& key) { return entry.first < key; });
    if (it == rt.by_coeffs.end() || it->first != x.coeffs()) return std::nullopt;
    return std::make_pair(rt.L, it->second);
}

// ---------------------------------------------------------------------------
// Subfield projection. For d | n the columns zeta_d^j (j < phi(d)) embedded in
// Q(zeta_n) span the subfield; membership and the rewrite are one exact solve
// against a cached inverted pivot block.
// ---------------------------------------------------------------------------

struct EmbedSolver {
    std::vector<Poly> cols;            // phi(d) columns, each of length phi(n)
    std::vector<std::size_t> pivots;   // phi(d) row indices into [0, phi(n))
    std::vector<Poly> inv;             // inverse of the pivot-row square block
};

EmbedSolver compute_solver(long n, long d) {
    const ConductorTables& tn = tables(n);
    const std::size_t m = static_cast<std::size_t>(tn.phi);
    const std::size_t k = static_cast<std::size_t>(euler_phi(d));
    const long step = n / d;

    EmbedSolver s;
    s.cols.reserve(k);
    for (std::size_t j = 0; j < k; ++j)
        s.cols.push_back(tn.power[mod_norm(step * static_cast<long>(j), n)]);

    // Row-reduce copies of the rows of the m x k matrix to pick k independent rows.
    std::vector<Poly> elim;
    std::vector<std::size_t> lead;
    for (std::size_t i = 0; i < m && s.pivots.size() < k; ++i) {
        Poly row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = s.cols[j][i];
        for (std::size_t t = 0; t < elim.size(); ++t) {
            const Rational c = row[lead[t]];
            if (c != 0)
                for (std::size_t j = 0; j < k; ++j) row[j] -= c * elim[t][j];
        }
        std::size_t j0 = k;
        for (std::size_t j = 0; j < k; ++j)
            if (row[j] != 0) { j0 = j; break; }
        if (j0 == k) continue;
        const Rational inv_lead = Rational(1) / row[j0];
        for (std::size_t j = 0; j < k; ++j) row[j] *= inv_lead;
        elim.push_back(std::move(row));
        lead.push_back(j0);
        s.pivots.push_back(i);
    }
    if (s.pivots.size() < k) throw std::logic_error("embedding matrix is rank deficient");

    // Invert the pivot block by Gauss-Jordan.
    std::vector<Poly> a(k, Poly(k)), b(k, Poly(k, Rational(0)));
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t j = 0; j < k; ++j) a[t][j] = s.cols[j][s.pivots[t]];
        b[t][t] = 1;
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a[piv][col] == 0) ++piv;
        if (piv == k) throw std::logic_error("pivot block is singular");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const Rational inv_p = Rational(1) / a[col][col];
        for (std::size_t j = 0; j < k; ++j) { a[col][j] *= inv_p; b[col][j] *= inv_p; }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            const Rational c = a[r][col];
            if (c == 0) continue;
            for (std::size_t j = 0; j < k; ++j) { a[r][j] -= c * a[col][j]; b[r][j] -= c * b[col][j]; }
        }
    }
    s.inv = std::move(b);
    return s;
}

const EmbedSolver& solver(long n, long d) {
    static std::shared_mutex mtx;
    static std::map<std::pair<long, long>, std::unique_ptr<const EmbedSolver>> cache;
    const std::pair<long, long> key{n, d};
    {
        std::shared_lock lock(mtx);
        if (auto it = cache.find(key); it != cache.end()) return *it->second;
    }
    auto value = std::make_unique<const EmbedSolver>(compute_solver(n, d));
    std::unique_lock lock(mtx);
    auto [it, inserted] = cache.try_emplace(key, std::move(value));
    return *it->second;
}

// Attempts to rewrite x (coordinates at conductor n) inside Q(zeta_d), d | n.
std::optional<Poly> try_project(long n, long d, const Poly& x) {
    const EmbedSolver& s = solver(n, d);
    const std::size_t k = s.pivots.size();
    Poly y(k, Rational(0));
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t u = 0; u < k; ++u)
            if (s.inv[t][u] != 0) y[t] += s.inv[t][u] * x[s.pivots[u]];
    // Verify the candidate against every coordinate; failure means x is not
    // in the subfield.
    const std::size_t m = x.size();
    for (std::size_t i = 0; i < m; ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < k; ++j)
            if (y[j] != 0) acc += y[j] * s.cols[j][i];
        if (acc != x[i]) return std::nullopt;
    }
    return y;
}

Poly embed_coeffs(const Poly& c, long n, long big) {
    if (n == big) return c;
    const ConductorTables& t = tables(big);
    Poly out(static_cast<std::size_t>(t.phi), Rational(0));
    const long step = big / n;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        const Poly& base = t.power[mod_norm(step * static_cast<long>(j), big)];
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[j] * base[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers over Q, used only by the extended-Euclid inverse.
// ---------------------------------------------------------------------------

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long poly_deg(const Poly& p) { return static_cast<long>(p.size()) - 1; }

Poly poly_sub_scaled(Poly a, const Poly& b, const Rational& c, std::size_t shift) {
    // a -= c * x^shift * b
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    poly_trim(a);
    return a;
}

std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    Poly q;
    if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Rational(0));
    const Rational lead_inv = Rational(1) / den.back();
    while (num.size() >= den.size() && !num.empty()) {
        const std::size_t shift = num.size() - den.size();
        const Rational c = num.back() * lead_inv;
        q[shift] = c;
        num = poly_sub_scaled(std::move(num), den, c, shift);
        if (num.size() >= den.size() && !num.empty() && num.back() == 0) poly_trim(num);
    }
    poly_trim(q);
    return {std::move(q), std::move(num)};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

// Inverse of a(t) modulo Phi_n(t); Phi_n is irreducible so any nonzero a works.
Poly poly_mod_inverse(const Poly& a, long n) {
    const auto& cyc = cyclotomic_poly(n);
    Poly r0(cyc.size());
    for (std::size_t i = 0; i < cyc.size(); ++i) r0[i] = Rational(cyc[i]);
    Poly r1 = a;
    poly_trim(r1);
    Poly v0{Rational(0)}, v1{Rational(1)};
    while (poly_deg(r1) > 0) {
        auto [q, r2] = poly_divmod(std::move(r0), r1);
        Poly v2 = poly_sub(v0, poly_mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        v0 = std::move(v1);
        v1 = std::move(v2);
        if (r1.empty()) throw std::logic_error("gcd with an irreducible modulus degenerated");
    }
    const Rational inv_c = Rational(1) / r1[0];
    for (auto& c : v1) c *= inv_c;
    return v1;
}

} // namespace

// ---------------------------------------------------------------------------
// Cyclo
// ---------------------------------------------------------------------------

Cyclo::Cyclo() : conductor_(1), coeffs_{Rational(0)} {}

Cyclo::Cyclo(long value) : conductor_(1), coeffs_{Rational(value)} {}

Cyclo::Cyclo(const Rational& value) : conductor_(1), coeffs_{value} {}

Cyclo::Cyclo(long conductor, std::vector<Rational> coeffs, bool canonicalize)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
    if (canonicalize) reduce_conductor();
}

Cyclo Cyclo::root_of_unity(long n, long k) {
    if (n < 1) throw std::domain_error("root_of_unity: order must be positive");
    const long kk = mod_norm(k, n);
    if (kk == 0) return Cyclo(1);
    // zeta_n^kk is a primitive o-th root; its minimal conductor is o itself,
    // except that o = 2m with m odd lands in Q(zeta_m) as -zeta_m^{j(m+1)/2}.
    const long g = std::gcd(kk, n);
    const long o = n / g;
    const long j = kk / g;
    if (o == 2) return Cyclo(-1);
    if (o % 4 == 2) {
        const long m = o / 2;
        const long jj = mod_norm(j * ((m + 1) / 2), m);
        Poly out = tables(m).power[jj];
        for (auto& c : out) c = -c;
        return Cyclo(m, std::move(out), false);
    }
    return Cyclo(o, tables(o).power[j], false);
}

Cyclo Cyclo::from_parts(long conductor, std::vector<Rational> coeffs) {
    if (conductor < 1) throw std::invalid_argument("Cyclo: conductor must be positive");
    if (static_cast<long>(coeffs.size()) != euler_phi(conductor))
        throw std::invalid_argument("Cyclo: coefficient count must equal phi(conductor)");
    return Cyclo(conductor, std::move(coeffs), true);
}

void Cyclo::reduce_conductor() {
    for (;;) {
        if (conductor_ == 1) return;
        const ConductorTables& t = tables(conductor_);
        bool descended = false;
        for (long p : t.primes) {
            const long d = conductor_ / p;
            if (auto y = try_project(conductor_, d, coeffs_)) {
                conductor_ = d;
                coeffs_ = std::move(*y);
                descended = true;
                break;
            }
        }
        // A value lying in any proper subconductor admits a one-prime step,
        // so stopping here certifies minimality.
        if (!descended) return;
    }
}

bool Cyclo::is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }

bool Cyclo::is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }

const Rational& Cyclo::rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyclo: value is not rational");
    return coeffs_[0];
}

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_rational() && b.is_rational()) return Cyclo(a.coeffs_[0] + b.coeffs_[0]);
    // Adding a rational cannot change the minimal conductor of a non-rational.
    if (a.is_rational()) {
        Cyclo out = b;
        out.coeffs_[0] += a.coeffs_[0];
        return out;
    }
    if (b.is_rational()) {
        Cyclo out = a;
        out.coeffs_[0] += b.coeffs_[0];
        return out;
    }
    const long big = lcm_long(a.conductor_, b.conductor_);
    Poly pa = embed_coeffs(a.coeffs_, a.conductor_, big);
    Poly pb = embed_coeffs(b.coeffs_, b.conductor_, big);
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] += pb[i];
    return Cyclo(big, std::move(pa), true);
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (a.is_rational()) {
        if (a.coeffs_[0] == 0) return Cyclo();
        Cyclo out = b;                       // nonzero scalars preserve minimality
        for (auto& c : out.coeffs_) c *= a.coeffs_[0];
        return out;
    }
    if (b.is_rational()) return b * a;
    if (const auto ra = root_exponent(a)) {
        if (const auto rb = root_exponent(b)) {
            const long L = lcm_long(ra->first, rb->first);
            return Cyclo::root_of_unity(
                L, ra->second * (L / ra->first) + rb->second * (L / rb->first));
        }
    }
    const long big = lcm_long(a.conductor_, b.conductor_);
    const Poly pa = embed_coeffs(a.coeffs_, a.conductor_, big);
    const Poly pb = embed_coeffs(b.coeffs_, b.conductor_, big);
    const ConductorTables& t = tables(big);
    const std::size_t phi = pa.size();

    Poly conv(2 * phi - 1, Rational(0));
    for (std::size_t i = 0; i < phi; ++i) {
        if (pa[i] == 0) continue;
        for (std::size_t j = 0; j < phi; ++j)
            if (pb[j] != 0) conv[i + j] += pa[i] * pb[j];
    }
    Poly out(conv.begin(), conv.begin() + phi);
    for (std::size_t e = phi; e < conv.size(); ++e) {
        if (conv[e] == 0) continue;
        const Poly& base = t.power[mod_norm(static_cast<long>(e), big)];
        for (std::size_t i = 0; i < phi; ++i) out[i] += conv[e] * base[i];
    }
    return Cyclo(big, std::move(out), true);
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: inverse of zero");
    if (is_rational()) return Cyclo(Rational(1) / coeffs_[0]);
    if (const auto r = root_exponent(*this))
        return root_of_unity(r->first, r->first - r->second);
    // Values with rational x * conj(x) invert through conjugation without
    // polynomial gcd work.
    Cyclo y = conj();
    Cyclo norm = *this * y;
    if (norm.is_rational()) {
        const Rational inv_n = Rational(1) / norm.coeffs_[0];
        for (auto& c : y.coeffs_) c *= inv_n;
        return y;
    }
    Poly v = poly_mod_inverse(coeffs_, conductor_);
    v.resize(coeffs_.size(), Rational(0));
    return Cyclo(conductor_, std::move(v), true);
}

Cyclo Cyclo::pow(long long e) const {
    if (e == 0) return Cyclo(1);
    if (const auto r = root_exponent(*this)) {
        const long L = r->first;
        const long em = static_cast<long>(((e % L) + L) % L);
        return root_of_unity(L, mod_norm(r->second * em, L));
    }
    Cyclo base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                 : static_cast<unsigned long long>(e);
    Cyclo acc(1);
    while (k > 0) {
        if (k & 1ULL) acc = acc * base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

Cyclo Cyclo::galois(long k) const {
    if (conductor_ == 1) return *this;
    const long kk = mod_norm(k, conductor_);
    if (std::gcd(kk, conductor_) != 1)
        throw std::domain_error("Cyclo: Galois exponent not coprime to conductor");
    const ConductorTables& t = tables(conductor_);
    Poly out(coeffs_.size(), Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        const Poly& base = t.power[mod_norm(static_cast<long>(j) * kk, conductor_)];
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs_[j] * base[i];
    }
    // Galois conjugates share the minimal conductor; no re-reduction needed.
    return Cyclo(conductor_, std::move(out), false);
}

Cyclo Cyclo::conj() const {
    if (const auto r = root_exponent(*this))
        return root_of_unity(r->first, r->first - r->second);
    return galois(conductor_ - 1);
}

std::complex<double> Cyclo::embed() const {
    std::complex<double> acc(0.0, 0.0);
    const double theta = 2.0 * std::numbers::pi / static_cast<double>(conductor_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        acc += rational_to_double(coeffs_[j]) *
               std::polar(1.0, theta * static_cast<double>(j));
    }
    return acc;
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = (mag == 1);
        if (j == 0) {
            out += rational_str(mag);
        } else {
            if (!unit) {
                out += rational_str(mag);
                out += '*';
            }
            out += "zeta_" + std::to_string(conductor_);
            if (j > 1) out += '^' + std::to_string(j);
        }
    }
    return out;
}

int Cyclo::compare(const Cyclo& a, const Cyclo& b) {
    if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_ ? -1 : 1;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] < b.coeffs_[i]) return -1;
        if (b.coeffs_[i] < a.coeffs_[i]) return 1;
    }
    return 0;
}

} // namespace icosal
