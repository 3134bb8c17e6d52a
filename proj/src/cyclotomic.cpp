#include "wlab/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wlab {

namespace {

// Per-conductor data: phi(n), Phi_n, and the canonical form of every power
// zeta_n^j for j in [0, n). Computed once, shared, never mutated afterwards.
struct ConductorContext {
    int n = 1;
    int phi = 1;
    std::vector<BigRat> modulus;               // Phi_n, ascending, monic
    std::vector<std::vector<BigRat>> powers;   // powers[j] = zeta^j on the basis
};

// Remainder of p modulo the monic polynomial m, both ascending-degree.
void reduce_in_place(std::vector<BigRat>& p, const std::vector<BigRat>& m) {
    const size_t deg_m = m.size() - 1;
    while (p.size() > deg_m) {
        BigRat lead = p.back();
        p.pop_back();
        if (lead == 0) continue;
        const size_t shift = p.size() - deg_m;
        for (size_t i = 0; i < deg_m; ++i) p[shift + i] -= lead * m[i];
    }
    p.resize(deg_m, BigRat(0));
}

const ConductorContext& context(int n) {
    static std::map<int, ConductorContext> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    if (n < 1) throw std::invalid_argument("conductor must be positive");
    ConductorContext ctx;
    ctx.n = n;
    auto phi_int = cyclotomic_polynomial(n);
    ctx.modulus.reserve(phi_int.size());
    for (const auto& c : phi_int) ctx.modulus.emplace_back(c);
    ctx.phi = static_cast<int>(ctx.modulus.size()) - 1;

    ctx.powers.resize(n);
    std::vector<BigRat> cur(ctx.phi, BigRat(0));
    cur[0] = 1;
    for (int j = 0; j < n; ++j) {
        ctx.powers[j] = cur;
        // multiply by x and reduce
        cur.insert(cur.begin(), BigRat(0));
        reduce_in_place(cur, ctx.modulus);
    }
    return cache.emplace(n, std::move(ctx)).first->second;
}

std::string rat_term(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<BigInt> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact polynomial division.
    std::vector<BigInt> num(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto div = cyclotomic_polynomial(d);
        // long division num / div (div monic, division exact)
        std::vector<BigInt> quot(num.size() - div.size() + 1, BigInt(0));
        std::vector<BigInt> rem = num;
        for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
            BigInt c = rem[i + div.size() - 1];
            quot[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < div.size(); ++j) rem[i + j] -= c * div[j];
        }
        num = std::move(quot);
    }
    return num;
}

Cyclotomic Cyclotomic::from_rational(const BigRat& q, int conductor) {
    const auto& ctx = context(conductor);
    std::vector<BigRat> c(ctx.phi, BigRat(0));
    c[0] = q;
    return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::from_integer(long v, int conductor) {
    return from_rational(BigRat(v), conductor);
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, long exponent) {
    const auto& ctx = context(conductor);
    long j = exponent % conductor;
    if (j < 0) j += conductor;
    return Cyclotomic(conductor, ctx.powers[j]);
}

Cyclotomic Cyclotomic::promoted(int new_conductor) const {
    if (new_conductor == conductor_) return *this;
    if (new_conductor % conductor_ != 0) {
        throw std::invalid_argument("promoted: new conductor must be a multiple");
    }
    const auto& ctx = context(new_conductor);
    const int stride = new_conductor / conductor_;
    std::vector<BigRat> out(ctx.phi, BigRat(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        const auto& pw = ctx.powers[(j * stride) % new_conductor];
        for (int i = 0; i < ctx.phi; ++i) out[i] += coeffs_[j] * pw[i];
    }
    return Cyclotomic(new_conductor, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<BigRat> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_) {
        int n = std::lcm(a.conductor_, b.conductor_);
        return a.promoted(n) + b.promoted(n);
    }
    std::vector<BigRat> out(a.coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
    return Cyclotomic(a.conductor_, std::move(out));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_) {
        int n = std::lcm(a.conductor_, b.conductor_);
        return a.promoted(n) * b.promoted(n);
    }
    const auto& ctx = context(a.conductor_);
    std::vector<BigRat> prod(2 * ctx.phi - 1, BigRat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    reduce_in_place(prod, ctx.modulus);
    return Cyclotomic(a.conductor_, std::move(prod));
}

namespace {

// Polynomial helpers for the extended Euclid below; ascending coefficients,
// normalized so the vector is empty iff the polynomial is zero.
using Poly = std::vector<BigRat>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& m) {
    while (a.size() >= m.size()) {
        BigRat c = a.back() / m.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= c * m[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_quot(Poly a, const Poly& m) {
    Poly q(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, BigRat(0));
    while (a.size() >= m.size() && !a.empty()) {
        BigRat c = a.back() / m.back();
        size_t shift = a.size() - m.size();
        q[shift] = c;
        for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= c * m[i];
        trim(a);
    }
    return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigRat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse: division by zero");
    const auto& ctx = context(conductor_);

    // Extended Euclid in Q[x]: u*a + v*Phi_n = gcd = const, so u/gcd is 1/a.
    Poly r0 = ctx.modulus, r1 = coeffs_;
    trim(r1);
    Poly s0 = {}, s1 = {BigRat(1)};  // coefficients of `a` in r0, r1
    while (!r1.empty() && r1.size() > 1) {
        Poly q = poly_quot(r0, r1);
        Poly r2 = poly_sub(r0, poly_mul(q, r1));
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::domain_error("Cyclotomic::inverse: not invertible");
    BigRat g = r1[0];
    Poly inv = s1;
    for (auto& c : inv) c /= g;
    inv = poly_mod(std::move(inv), ctx.modulus);
    inv.resize(ctx.phi, BigRat(0));
    return Cyclotomic(conductor_, std::move(inv));
}

Cyclotomic Cyclotomic::conj() const {
    const auto& ctx = context(conductor_);
    std::vector<BigRat> out(ctx.phi, BigRat(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        const auto& pw = ctx.powers[(conductor_ - static_cast<int>(j)) % conductor_];
        for (int i = 0; i < ctx.phi; ++i) out[i] += coeffs_[j] * pw[i];
    }
    return Cyclotomic(conductor_, std::move(out));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigRat& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

BigRat Cyclotomic::to_rational() const {
    if (!is_rational()) throw std::domain_error("to_rational: " + str() + " is irrational");
    return coeffs_[0];
}

bool Cyclotomic::operator==(const Cyclotomic& b) const { return compare(*this, b) == 0; }

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_) {
        int n = std::lcm(a.conductor_, b.conductor_);
        return compare(a.promoted(n), b.promoted(n));
    }
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::complex<double> Cyclotomic::embed() const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        double angle = 2.0 * M_PI * static_cast<double>(j) / conductor_;
        acc += coeffs_[j].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        const BigRat& c = coeffs_[j];
        if (c == 0) continue;
        BigRat a = c > 0 ? c : BigRat(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (j == 0) {
            os << rat_term(a);
        } else {
            if (a != 1) os << rat_term(a) << "*";
            os << "z" << conductor_;
            if (j > 1) os << "^" << j;
        }
    }
    if (first) return "0";
    return os.str();
}

std::vector<std::pair<int, std::string>> Cyclotomic::coeff_entries() const {
    std::vector<std::pair<int, std::string>> out;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        out.emplace_back(static_cast<int>(j), rat_to_string(coeffs_[j]));
    }
    return out;
}

}  // namespace wlab
