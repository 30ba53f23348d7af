#include "skewcyclic/galois.hpp"

#include <algorithm>
#include <numeric>

namespace skewcyclic {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Minimal GF(p)[t] helpers on raw coefficient vectors (low-to-high, trimmed),
// used only while constructing a FieldSpec.
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + uint64_t(a[i]) * b[j]) % p;
    ptrim(c);
    return c;
}

uint32_t pinv_mod(uint32_t a, uint32_t p) {
    // Fermat
    uint32_t r = 1, base = a % p;
    for (uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = uint64_t(r) * base % p;
        base = uint64_t(base) * base % p;
    }
    return r;
}

PPoly pmod(PPoly a, const PPoly& f, uint32_t p) {
    ptrim(a);
    uint32_t lead_inv = pinv_mod(f.back(), p);
    while (a.size() >= f.size()) {
        uint32_t c = uint64_t(a.back()) * lead_inv % p;
        size_t shift = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i) {
            uint64_t sub = uint64_t(c) * f[i] % p;
            a[i + shift] = (a[i + shift] + p - sub) % p;
        }
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, uint32_t p) {
    return pmod(pmul(a, b, p), f, p);
}

PPoly ppowmod(PPoly base, uint64_t e, const PPoly& f, uint32_t p) {
    PPoly r = {1};
    base = pmod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin irreducibility test over GF(p).
bool irreducible_over_prime_field(const PPoly& f, uint32_t p) {
    size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    PPoly x = {0, 1};
    // x^(p^k) mod f by k-fold p-th powering
    auto frob_pow = [&](size_t k) {
        PPoly h = x;
        for (size_t i = 0; i < k; ++i) h = ppowmod(h, p, f, p);
        return h;
    };
    PPoly top = frob_pow(m);
    PPoly diff = top;
    // diff = top - x
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    ptrim(diff);
    if (!diff.empty()) return false;
    for (size_t l = 2; l <= m; ++l) {
        if (m % l != 0 || !is_prime_u32(uint32_t(l))) continue;
        PPoly h = frob_pow(m / l);
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + p - 1) % p;
        ptrim(h);
        PPoly g = pgcd(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

std::shared_ptr<const FieldSpec> FieldSpec::build(uint32_t p, uint32_t m,
                                                  std::optional<std::vector<uint32_t>> modulus) {
    if (!is_prime_u32(p)) throw NotPrime("p = " + std::to_string(p));
    if (m < 1) throw InvalidParameters("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) throw InvalidParameters("field size p^m exceeds 2^16");
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->m_ = m;
    spec->q_ = uint32_t(q);

    if (modulus) {
        auto& f = *modulus;
        if (f.size() != m + 1) throw DegreeMismatch("modulus must have degree m");
        for (uint32_t c : f)
            if (c >= p) throw InvalidParameters("modulus coefficient out of range");
        if (f[m] != 1) throw InvalidParameters("modulus must be monic");
        if (!irreducible_over_prime_field(f, p))
            throw ReducibleModulus("modulus factors over GF(p)");
        spec->modulus_ = f;
    } else if (m == 1) {
        spec->modulus_ = {0, 1}; // t
    } else {
        // Lexicographically smallest monic irreducible, low-to-high tuple
        // compared left to right (constant coefficient first).
        uint64_t total = q; // p^m tuples
        std::vector<uint32_t> f(m + 1, 0);
        f[m] = 1;
        bool found = false;
        for (uint64_t v = 0; v < total && !found; ++v) {
            uint64_t rest = v;
            for (uint32_t i = 0; i < m; ++i) {
                uint64_t place = 1;
                for (uint32_t j = 0; j < m - 1 - i; ++j) place *= p;
                f[i] = uint32_t(rest / place);
                rest %= place;
            }
            if (irreducible_over_prime_field(f, p)) found = true;
        }
        if (!found) throw InvalidParameters("no irreducible modulus found"); // unreachable
        spec->modulus_ = f;
    }

    // Multiplicative generator: smallest encoding with order q-1.
    uint32_t qm1 = spec->q_ - 1;
    std::vector<uint32_t> prime_factors;
    {
        uint32_t x = qm1;
        for (uint32_t d = 2; d * d <= x; ++d)
            while (x % d == 0) {
                prime_factors.push_back(d);
                while (x % d == 0) x /= d;
                break;
            }
        if (x > 1) prime_factors.push_back(x);
    }
    auto raw_pow = [&](uint32_t a, uint32_t e) {
        uint32_t r = 1;
        while (e) {
            if (e & 1) r = spec->raw_mul(r, a);
            a = spec->raw_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    uint32_t gen = 1;
    if (qm1 > 1) {
        for (uint32_t cand = 2; cand < spec->q_; ++cand) {
            bool ok = true;
            for (uint32_t l : prime_factors)
                if (raw_pow(cand, qm1 / l) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                gen = cand;
                break;
            }
        }
    }
    spec->gen_ = gen;

    spec->exp_.assign(qm1, 1);
    spec->log_.assign(spec->q_, 0);
    uint32_t acc = 1;
    for (uint32_t i = 0; i < qm1; ++i) {
        spec->exp_[i] = acc;
        spec->log_[acc] = i;
        acc = spec->raw_mul(acc, gen);
    }
    return spec;
}

uint32_t FieldSpec::raw_mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return uint32_t(uint64_t(a) * b % p_);
    // decode to digit vectors
    std::vector<uint32_t> da(m_), db(m_);
    for (uint32_t i = 0; i < m_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    std::vector<uint32_t> prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i)
        for (uint32_t j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + uint64_t(da[i]) * db[j]) % p_;
    // reduce by monic modulus
    for (int k = int(prod.size()) - 1; k >= int(m_); --k) {
        uint32_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (uint32_t i = 0; i < m_; ++i) {
            uint64_t sub = uint64_t(c) * modulus_[i] % p_;
            prod[k - m_ + i] = (prod[k - m_ + i] + p_ - sub) % p_;
        }
    }
    uint32_t enc = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        enc += prod[i] * place;
        place *= p_;
    }
    return enc;
}

FieldElement FieldSpec::from_enc(uint64_t e) const {
    if (e >= q_) throw InvalidParameters("encoding out of range");
    return {uint32_t(e)};
}

std::vector<uint32_t> FieldSpec::coeffs(FieldElement a) const {
    std::vector<uint32_t> c(m_);
    uint32_t v = a.enc;
    for (uint32_t i = 0; i < m_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

FieldElement FieldSpec::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() != m_) throw DegreeMismatch("coefficient tuple must have length m");
    uint32_t enc = 0, place = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        if (c[i] >= p_) throw InvalidParameters("coefficient out of range");
        enc += c[i] * place;
        place *= p_;
    }
    return {enc};
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
    if (p_ == 2) return {a.enc ^ b.enc};
    uint32_t enc = 0, place = 1, x = a.enc, y = b.enc;
    for (uint32_t i = 0; i < m_; ++i) {
        enc += (x % p_ + y % p_) % p_ * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return {enc};
}

FieldElement FieldSpec::neg(FieldElement a) const {
    if (p_ == 2) return a;
    uint32_t enc = 0, place = 1, x = a.enc;
    for (uint32_t i = 0; i < m_; ++i) {
        enc += (p_ - x % p_) % p_ * place;
        x /= p_;
        place *= p_;
    }
    return {enc};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
    if (a.enc == 0 || b.enc == 0) return {0};
    uint32_t qm1 = q_ - 1;
    uint32_t s = log_[a.enc] + log_[b.enc];
    if (s >= qm1) s -= qm1;
    return {exp_[s]};
}

FieldElement FieldSpec::inv(FieldElement a) const {
    if (a.enc == 0) throw DivisionByZero("inverse of zero");
    uint32_t qm1 = q_ - 1;
    uint32_t l = log_[a.enc];
    return {exp_[(qm1 - l) % qm1]};
}

FieldElement FieldSpec::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement FieldSpec::pow(FieldElement a, int64_t e) const {
    if (a.enc == 0) {
        if (e > 0) return {0};
        if (e == 0) return {1};
        throw DivisionByZero("negative power of zero");
    }
    int64_t qm1 = q_ - 1;
    int64_t r = ((e % qm1) + qm1) % qm1;
    uint64_t idx = uint64_t(log_[a.enc]) * uint64_t(r) % uint64_t(qm1);
    return {exp_[idx]};
}

FieldElement FieldSpec::frobenius_iter(FieldElement a, uint32_t k) const {
    FieldElement r = a;
    for (uint32_t i = 0; i < k % m_; ++i) r = frobenius(r);
    return r;
}

uint32_t FieldSpec::log(FieldElement a) const {
    if (a.enc == 0) throw DivisionByZero("log of zero");
    return log_[a.enc];
}

} // namespace skewcyclic
