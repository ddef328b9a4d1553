#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "psgl2/nmonoid.hpp"

namespace psgl2 {

/// Element of F_q, packed as sum c_i p^i over its polynomial-basis coefficients.
struct Fq {
    std::uint16_t code = 0;
    friend bool operator==(Fq, Fq) = default;
    friend auto operator<=>(Fq, Fq) = default;
};

/**
 * The field F_q = F_p[x]/(modulus) with cached addition and multiplication tables.
 *
 * Immutable after construction and cheap to share through shared_ptr. Tables
 * make every operation a lookup, which is what the dense linear algebra needs.
 */
class FieldSpec {
public:
    static constexpr int kMaxOrder = 4096;

    /// Uses the least monic irreducible of degree f (coefficients compared from c0 upward).
    FieldSpec(int p, int f) : FieldSpec(p, f, least_irreducible(p, f)) {}

    FieldSpec(int p, int f, std::vector<int> modulus) : p_(p), f_(f), modulus_(std::move(modulus)) {
        if (p < 3 || !is_prime(p)) throw std::invalid_argument("FieldSpec: p must be an odd prime");
        if (f < 1 || f > kMaxDegree) throw std::invalid_argument("FieldSpec: f out of range");
        q_ = static_cast<int>(int_pow(p, f));
        if (q_ > kMaxOrder) throw std::invalid_argument("FieldSpec: q too large for table arithmetic");
        if (static_cast<int>(modulus_.size()) != f + 1 || modulus_.back() != 1)
            throw std::invalid_argument("FieldSpec: modulus must be monic of degree f");
        for (int c : modulus_)
            if (c < 0 || c >= p) throw std::invalid_argument("FieldSpec: modulus coefficient out of range");
        if (!is_irreducible(p, modulus_)) throw std::invalid_argument("FieldSpec: modulus is reducible");
        build_tables();
    }

    int p() const { return p_; }
    int f() const { return f_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Fq zero() const { return {0}; }
    Fq one() const { return {1}; }
    /// The image of an integer in the prime field.
    Fq from_int(long long n) const { return {static_cast<std::uint16_t>(((n % p_) + p_) % p_)}; }
    Fq from_code(int code) const {
        if (code < 0 || code >= q_) throw std::invalid_argument("Fq code out of range");
        return {static_cast<std::uint16_t>(code)};
    }

    Fq from_coeffs(std::span<const int> c) const {
        if (static_cast<int>(c.size()) != f_) throw std::invalid_argument("Fq: expected f coefficients");
        int code = 0;
        for (int i = f_ - 1; i >= 0; --i) {
            if (c[i] < 0 || c[i] >= p_) throw std::invalid_argument("Fq: coefficient out of range");
            code = code * p_ + c[i];
        }
        return {static_cast<std::uint16_t>(code)};
    }

    std::vector<int> coeffs(Fq x) const {
        std::vector<int> c(f_);
        int v = x.code;
        for (int i = 0; i < f_; ++i) { c[i] = v % p_; v /= p_; }
        return c;
    }

    Fq add(Fq a, Fq b) const { return {add_[a.code * q_ + b.code]}; }
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq neg(Fq a) const { return {neg_[a.code]}; }
    Fq mul(Fq a, Fq b) const { return {mul_[a.code * q_ + b.code]}; }
    Fq inv(Fq a) const {
        if (a.code == 0) throw std::domain_error("Fq: inversion of zero");
        return {inv_[a.code]};
    }
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

    /// Integer power with 0^0 = 1.
    Fq pow(Fq x, long long m) const {
        if (m < 0) return pow(inv(x), -m);
        Fq out = one();
        while (m > 0) {
            if (m & 1) out = mul(out, x);
            x = mul(x, x);
            m >>= 1;
        }
        return out;
    }

    /// x^alpha for an exponent class: class 0 gives 1 everywhere, otherwise any representative >= 1.
    Fq pow_class(Fq x, const NClass& alpha) const {
        if (alpha.p() != p_ || alpha.f() != f_) throw std::invalid_argument("pow_class: class parameter mismatch");
        return pow(x, alpha.to_integer());
    }

    /// x^(p^i), i reduced mod f.
    Fq frobenius(Fq x, long long i) const {
        int k = static_cast<int>(((i % f_) + f_) % f_);
        return {frob_[k * q_ + x.code]};
    }

    /// All q elements in increasing code order (coefficients read from the top degree down).
    std::vector<Fq> enumerate() const {
        std::vector<Fq> out(q_);
        for (int i = 0; i < q_; ++i) out[i] = {static_cast<std::uint16_t>(i)};
        return out;
    }

    /// The least-code generator of the multiplicative group.
    Fq primitive() const { return {primitive_}; }

    /// Discrete logarithm base primitive(), in [0, q-2].
    int log(Fq x) const {
        if (x.code == 0) throw std::domain_error("Fq: logarithm of zero");
        return log_[x.code];
    }

    /// An F_p-basis of k: 1, x, ..., x^{f-1}.
    std::vector<Fq> prime_basis() const {
        std::vector<Fq> out;
        int c = 1;
        for (int i = 0; i < f_; ++i, c *= p_) out.push_back({static_cast<std::uint16_t>(c)});
        return out;
    }

    std::string to_string(Fq x) const {
        if (f_ == 1) return std::to_string(x.code);
        std::string s = "[";
        auto c = coeffs(x);
        for (int i = 0; i < f_; ++i) s += (i ? "," : "") + std::to_string(c[i]);
        return s + "]";
    }

    const std::uint16_t* mul_row(Fq c) const { return mul_.data() + c.code * q_; }
    const std::uint16_t* add_row(Fq c) const { return add_.data() + c.code * q_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.p_ == b.p_ && a.f_ == b.f_ && a.modulus_ == b.modulus_;
    }

    static bool is_prime(int n) {
        if (n < 2) return false;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    /// Trial division by every monic polynomial of degree 1..deg/2.
    static bool is_irreducible(int p, const std::vector<int>& poly) {
        const int n = static_cast<int>(poly.size()) - 1;
        for (int d = 1; 2 * d <= n; ++d) {
            const long long count = int_pow(p, d);
            for (long long code = 0; code < count; ++code) {
                std::vector<int> g(d + 1, 0);
                long long v = code;
                for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(v % p); v /= p; }
                g[d] = 1;
                if (poly_mod_is_zero(p, poly, g)) return false;
            }
        }
        return true;
    }

    static std::vector<int> least_irreducible(int p, int f) {
        if (f == 1) return {0, 1};
        // c0 is the most significant place so the walk is lexicographic in (c0, c1, ...).
        const long long count = int_pow(p, f);
        for (long long code = 0; code < count; ++code) {
            std::vector<int> m(f + 1, 0);
            long long v = code;
            for (int i = f - 1; i >= 0; --i) { m[i] = static_cast<int>(v % p); v /= p; }
            m[f] = 1;
            if (is_irreducible(p, m)) return m;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

private:
    static bool poly_mod_is_zero(int p, std::vector<int> a, const std::vector<int>& g) {
        const int dg = static_cast<int>(g.size()) - 1;
        for (int i = static_cast<int>(a.size()) - 1; i >= dg; --i) {
            int c = a[i] % p;
            if (c == 0) continue;
            for (int j = 0; j <= dg; ++j) a[i - dg + j] = ((a[i - dg + j] - c * g[j]) % p + p) % p;
        }
        for (int i = 0; i < dg; ++i)
            if (a[i] % p != 0) return false;
        return true;
    }

    void build_tables() {
        const int q = q_;
        add_.assign(q * q, 0);
        mul_.assign(q * q, 0);
        neg_.assign(q, 0);
        inv_.assign(q, 0);
        std::vector<std::vector<int>> c(q);
        for (int i = 0; i < q; ++i) c[i] = coeffs({static_cast<std::uint16_t>(i)});
        auto encode = [&](const std::vector<int>& v) {
            int code = 0;
            for (int i = f_ - 1; i >= 0; --i) code = code * p_ + v[i];
            return static_cast<std::uint16_t>(code);
        };
        for (int a = 0; a < q; ++a) {
            std::vector<int> n(f_);
            for (int i = 0; i < f_; ++i) n[i] = (p_ - c[a][i]) % p_;
            neg_[a] = encode(n);
            for (int b = 0; b < q; ++b) {
                std::vector<int> s(f_);
                for (int i = 0; i < f_; ++i) s[i] = (c[a][i] + c[b][i]) % p_;
                add_[a * q + b] = encode(s);
                std::vector<int> prod(2 * f_ - 1, 0);
                for (int i = 0; i < f_; ++i)
                    for (int j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + c[a][i] * c[b][j]) % p_;
                for (int i = 2 * f_ - 2; i >= f_; --i) {
                    int t = prod[i];
                    if (t == 0) continue;
                    for (int j = 0; j <= f_; ++j)
                        prod[i - f_ + j] = ((prod[i - f_ + j] - t * modulus_[j]) % p_ + p_) % p_;
                }
                prod.resize(f_);
                mul_[a * q + b] = encode(prod);
            }
        }
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint16_t>(b);

        frob_.assign(f_ * q, 0);
        for (int x = 0; x < q; ++x) {
            std::uint16_t y = static_cast<std::uint16_t>(x);
            for (int k = 0; k < f_; ++k) {
                frob_[k * q + x] = y;
                y = pow({y}, p_).code;
            }
        }

        log_.assign(q, -1);
        for (int g = 2; g < q; ++g) {
            std::vector<int> lg(q, -1);
            int order = 0;
            std::uint16_t y = 1;
            do {
                lg[y] = order++;
                y = mul_[y * q + g];
            } while (y != 1);
            if (order == q - 1) {
                primitive_ = static_cast<std::uint16_t>(g);
                log_ = lg;
                break;
            }
        }
    }

    int p_, f_, q_ = 0;
    std::vector<int> modulus_;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_, frob_;
    std::vector<int> log_;
    std::uint16_t primitive_ = 1;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

inline FieldPtr make_field(int p, int f) { return std::make_shared<const FieldSpec>(p, f); }

}  // namespace psgl2
