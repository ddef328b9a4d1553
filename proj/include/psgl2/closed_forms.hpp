#pragma once

#include <stdexcept>

#include "psgl2/psrep.hpp"

// Closed-form expansions of the action on the f-basis of V_{2,r}. These are
// cross-checks for RepSpace::act only; nothing else is built on them.

namespace psgl2::closed {

namespace detail {

inline void require_n2(const RepSpace& V) {
    if (V.n() != 2) throw std::invalid_argument("closed forms are written for n = 2");
}

inline Fq sign(const FieldSpec& F, long long e) { return e % 2 == 0 ? F.one() : F.neg(F.one()); }

/// Sum over first-kind cosets lambda of coef(lambda) delta_lambda.
template <class Fn>
Vector first_kind_sum(const RepSpace& V, Fn coef) {
    Vector v(V.dim());
    for (int i = 0; i < V.q() * V.q(); ++i) v[i] = coef(V.delta_labels()[i].lambda);
    return v;
}

}  // namespace detail

/// w f_{(0,j1)} = f_{(inf,j1)}, w f_{(inf,j1)} = f_{(0,j1)}, otherwise (-1)^{r+j1} f_{(r-2j1-j0, j1)}.
inline Vector w_image(const RepSpace& V, const ThetaElem& x) {
    detail::require_n2(V);
    if (x.infinite) return V.f_vector(ThetaElem::finite(NClass::zero(x.j1.p(), x.j1.f()), x.j1));
    if (x.j0.is_zero()) return V.f_vector(ThetaElem::at_infinity(x.j1));
    const FieldSpec& F = V.field();
    Vector v = V.f_vector(ThetaElem::finite(nt_sub_group(r_minus_2(V.r(), x.j1), x.j0), x.j1));
    scale(F, v, detail::sign(F, V.r().to_integer() + x.j1.to_integer()));
    return v;
}

/// diag([a],[d]) acts on f_{(j0,j1)} by a^r (d/a)^{j0+j1} and on f_{(inf,j1)} by d^r (a/d)^{j1}.
inline Vector torus_image(const RepSpace& V, Fq a, Fq d, const ThetaElem& x) {
    detail::require_n2(V);
    const FieldSpec& F = V.field();
    Fq c = x.infinite ? F.mul(F.pow_class(d, V.r()), F.pow_class(F.div(a, d), x.j1))
                      : F.mul(F.pow_class(a, V.r()), F.pow_class(F.div(d, a), nt_add(x.j0, x.j1)));
    Vector v = V.f_vector(x);
    scale(F, v, c);
    return v;
}

/// Scalars [alpha] act by alpha0^r.
inline Vector center_image(const RepSpace& V, const R2Elem& alpha, const ThetaElem& x) {
    Vector v = V.f_vector(x);
    scale(V.field(), v, V.field().pow_class(alpha.a0, V.r()));
    return v;
}

/**
 * u(b) f_{(j0,j1)} = sum_lambda delta_lambda (lambda0 - b0)^{j0} R1^{j1} with
 * R1 = lambda1 - b1, plus S(lambda0^{p^{f-1}}, (-b0)^{p^{f-1}}) in the Witt variant.
 * For f_{(inf,j1)} the two printed sums over b + units and over second-kind cosets.
 */
inline Vector upper_image(const RepSpace& V, const R2Elem& b, const ThetaElem& x) {
    detail::require_n2(V);
    const RingSpec& R = V.ring();
    const FieldSpec& F = V.field();
    const int f = F.f();
    auto r1 = [&](const R2Elem& l) {
        Fq v = F.sub(l.a1, b.a1);
        if (R.variant() == Variant::Witt)
            v = F.add(v, R.witt_S(F.frobenius(l.a0, f - 1), F.frobenius(F.neg(b.a0), f - 1)));
        return v;
    };
    if (!x.infinite)
        return detail::first_kind_sum(V, [&](const R2Elem& l) {
            return F.mul(F.pow_class(F.sub(l.a0, b.a0), x.j0), F.pow_class(r1(l), x.j1));
        });
    const NClass e0 = r_minus_2(V.r(), x.j1);
    const Fq sg = detail::sign(F, V.r().to_integer() + x.j1.to_integer());
    Vector v = detail::first_kind_sum(V, [&](const R2Elem& l) {
        return F.mul(sg, F.mul(F.pow_class(F.sub(l.a0, b.a0), e0), F.pow_class(r1(l), x.j1)));
    });
    for (int mu = 0; mu < V.q(); ++mu) {
        Fq m{static_cast<std::uint16_t>(mu)};
        v[V.q() * V.q() + mu] = F.pow_class(m, x.j1);
    }
    return v;
}

/// diag(1, 1 + [d0] pi) f_{(j0,j1)} = sum_lambda delta_lambda lambda0^{j0} (lambda1 + lambda0 d0)^{j1}.
inline Vector diag1_image(const RepSpace& V, Fq d0, const ThetaElem& x) {
    detail::require_n2(V);
    const FieldSpec& F = V.field();
    if (!x.infinite)
        return detail::first_kind_sum(V, [&](const R2Elem& l) {
            return F.mul(F.pow_class(l.a0, x.j0), F.pow_class(F.add(l.a1, F.mul(l.a0, d0)), x.j1));
        });
    // w diag(1, 1 - [d0] pi) f_{(0,j1)}: expand (lambda1 - d0 lambda0)^{j1} digit-wise, then apply w.
    const int p = F.p(), fdeg = F.f();
    Vector v(V.dim());
    for (const NClass& jp : nt_enumerate(p, fdeg)) {
        if (!nt_leq(jp, x.j1)) continue;
        const NClass a = nt_digit_sub(x.j1, jp);
        Fq c = F.mul(F.from_int(nt_binom_mod_p(x.j1, jp)), F.pow_class(F.neg(d0), a));
        if (c.code == 0) continue;
        axpy(F, v, c, w_image(V, ThetaElem::finite(a, jp)));
    }
    return v;
}

/// lower([c0] pi) f_{(j0,j1)} = sum_lambda delta_lambda lambda0^{j0} (lambda1 + lambda0^2 c0)^{j1}; finite labels only.
inline Vector lower_image(const RepSpace& V, Fq c0, const ThetaElem& x) {
    detail::require_n2(V);
    if (x.infinite) throw std::invalid_argument("lower_image: only finite labels have a closed form");
    const FieldSpec& F = V.field();
    return detail::first_kind_sum(V, [&](const R2Elem& l) {
        return F.mul(F.pow_class(l.a0, x.j0), F.pow_class(F.add(l.a1, F.mul(F.mul(l.a0, l.a0), c0)), x.j1));
    });
}

}  // namespace psgl2::closed
