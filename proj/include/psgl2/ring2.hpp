#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "psgl2/gf.hpp"

namespace psgl2 {

/// Which length-two ring: F_q[t]/(t^2) or the Witt vectors W_2(F_q).
enum class Variant { EqualChar, Witt };

inline std::string to_string(Variant v) { return v == Variant::EqualChar ? "equalchar" : "witt"; }

inline Variant parse_variant(const std::string& s) {
    if (s == "equalchar" || s == "EqualChar") return Variant::EqualChar;
    if (s == "witt" || s == "Witt") return Variant::Witt;
    throw std::invalid_argument("unknown variant '" + s + "' (expected equalchar or witt)");
}

/// [a0] + [a1]·pi in Teichmuller digits.
struct R2Elem {
    Fq a0;
    Fq a1;
    friend bool operator==(const R2Elem&, const R2Elem&) = default;
    friend auto operator<=>(const R2Elem&, const R2Elem&) = default;
};

/**
 * Arithmetic in O/m^2 in Teichmuller-digit coordinates.
 *
 * Multiplication is the same in both variants; in the Witt variant addition
 * picks up the correction S(a0, b0)^(p^(f-1)) in the second digit.
 */
class RingSpec {
public:
    RingSpec(FieldPtr field, Variant variant) : field_(std::move(field)), variant_(variant) {
        if (!field_) throw std::invalid_argument("RingSpec: null field");
        const FieldSpec& k = *field_;
        const int q = k.q(), p = k.p(), f = k.f();
        if (variant_ == Variant::Witt) {
            std::vector<Fq> coef = s_coefficients(k);
            s_.resize(static_cast<std::size_t>(q) * q);
            carry_.resize(s_.size());
            for (int x = 0; x < q; ++x)
                for (int y = 0; y < q; ++y) {
                    Fq acc = k.zero();
                    for (int a = 1; a < p; ++a)
                        acc = k.add(acc, k.mul(coef[a], k.mul(k.pow({static_cast<std::uint16_t>(x)}, a),
                                                              k.pow({static_cast<std::uint16_t>(y)}, p - a))));
                    s_[x * q + y] = acc;
                    carry_[x * q + y] = k.frobenius(acc, f - 1);
                }
        }
    }

    const FieldSpec& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    Variant variant() const { return variant_; }

    R2Elem zero() const { return {field_->zero(), field_->zero()}; }
    R2Elem one() const { return {field_->one(), field_->zero()}; }
    R2Elem uniformizer() const { return {field_->zero(), field_->one()}; }
    R2Elem teich(Fq x) const { return {x, field_->zero()}; }
    R2Elem make(Fq a0, Fq a1) const { return {a0, a1}; }

    /// (x^p + y^p - (x+y)^p)/p reduced mod p.
    Fq witt_S(Fq x, Fq y) const {
        if (variant_ != Variant::Witt) return witt_S_direct(x, y);
        return s_[x.code * field_->q() + y.code];
    }

    R2Elem add(const R2Elem& a, const R2Elem& b) const {
        const FieldSpec& k = *field_;
        Fq d1 = k.add(a.a1, b.a1);
        if (variant_ == Variant::Witt) d1 = k.add(d1, carry_[a.a0.code * k.q() + b.a0.code]);
        return {k.add(a.a0, b.a0), d1};
    }

    /// -[x] = [-x] because -1 is a Teichmuller root of unity, so negation is digit-wise.
    R2Elem neg(const R2Elem& a) const { return {field_->neg(a.a0), field_->neg(a.a1)}; }
    R2Elem sub(const R2Elem& a, const R2Elem& b) const { return add(a, neg(b)); }

    R2Elem mul(const R2Elem& a, const R2Elem& b) const {
        const FieldSpec& k = *field_;
        return {k.mul(a.a0, b.a0), k.add(k.mul(a.a0, b.a1), k.mul(a.a1, b.a0))};
    }

    bool is_unit(const R2Elem& a) const { return a.a0.code != 0; }

    R2Elem inv(const R2Elem& a) const {
        if (!is_unit(a)) throw std::domain_error("R2Elem: inversion of a non-unit");
        const FieldSpec& k = *field_;
        Fq i0 = k.inv(a.a0);
        return {i0, k.neg(k.mul(k.mul(i0, i0), a.a1))};
    }

    int q() const { return field_->q(); }

    /// Position in [0, q^2): a0 * q + a1.
    int index(const R2Elem& a) const { return a.a0.code * q() + a.a1.code; }
    R2Elem element(int idx) const {
        return {Fq{static_cast<std::uint16_t>(idx / q())}, Fq{static_cast<std::uint16_t>(idx % q())}};
    }

    std::vector<R2Elem> enumerate() const {
        std::vector<R2Elem> out;
        out.reserve(static_cast<std::size_t>(q()) * q());
        for (int i = 0; i < q() * q(); ++i) out.push_back(element(i));
        return out;
    }

    std::string to_string(const R2Elem& a) const {
        return "(" + field_->to_string(a.a0) + "," + field_->to_string(a.a1) + ")";
    }

private:
    Fq witt_S_direct(Fq x, Fq y) const {
        const FieldSpec& k = *field_;
        const int p = k.p();
        const std::vector<Fq> coef = s_coefficients(k);
        Fq acc = k.zero();
        for (int a = 1; a < p; ++a) acc = k.add(acc, k.mul(coef[a], k.mul(k.pow(x, a), k.pow(y, p - a))));
        return acc;
    }

    /// -binom(p, a)/p mod p for 1 <= a < p. The integer binom(p, a)/p equals
    /// binom(p-1, a-1)/a, which is (-1)^(a-1)/a mod p.
    static std::vector<Fq> s_coefficients(const FieldSpec& k) {
        const int p = k.p();
        std::vector<Fq> coef(p, k.zero());
        for (int a = 1; a < p; ++a) {
            Fq c = k.inv(k.from_int(a));
            coef[a] = (a % 2 == 0) ? c : k.neg(c);
        }
        return coef;
    }

    FieldPtr field_;
    Variant variant_;
    std::vector<Fq> s_, carry_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline RingPtr make_ring(int p, int f, Variant v) { return std::make_shared<const RingSpec>(make_field(p, f), v); }

}  // namespace psgl2
