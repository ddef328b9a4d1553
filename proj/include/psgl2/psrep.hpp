#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "psgl2/gl2.hpp"
#include "psgl2/matrix.hpp"
#include "psgl2/weights.hpp"

namespace psgl2 {

/// Action of one group element on the delta basis: basis vector i goes to scale[i] times basis vector target[i].
struct MonomialOp {
    std::vector<int> target;
    std::vector<Fq> scale;

    Vector apply(const FieldSpec& F, const Vector& v) const {
        Vector out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i].code) out[target[i]] = F.add(out[target[i]], F.mul(v[i], scale[i]));
        return out;
    }
};

/**
 * The induced representation V_{n,r} of GL_2(O/m^2), n in {1, 2}.
 *
 * Vectors are coefficient lists over the delta basis xi ⊗ 1, xi running over
 * the coset representatives. For n = 1 the group acts through reduction
 * mod pi, so both spaces are modules for the same generating set.
 */
class RepSpace {
public:
    RepSpace(RingPtr ring, int n, NClass r) : ring_(std::move(ring)), n_(n), r_(r) {
        if (n != 1 && n != 2) throw std::invalid_argument("RepSpace: n must be 1 or 2");
        require_nonzero_r(r);
        const FieldSpec& k = ring_->field();
        if (r.p() != k.p() || r.f() != k.f()) throw std::invalid_argument("RepSpace: r does not match the field");
        q_ = k.q();
        dim_ = n == 2 ? (q_ + 1) * q_ : q_ + 1;
        const int first = n == 2 ? q_ * q_ : q_;
        for (int i = 0; i < first; ++i) {
            CosetLabel l;
            l.lambda = n == 2 ? ring_->element(i) : ring_->teich(Fq{static_cast<std::uint16_t>(i)});
            delta_.push_back(l);
        }
        for (int i = 0; i < (n == 2 ? q_ : 1); ++i) {
            CosetLabel l;
            l.second_kind = true;
            l.mu = Fq{static_cast<std::uint16_t>(i)};
            delta_.push_back(l);
        }
        const int p = k.p(), f = k.f();
        if (n == 2) {
            for (int j0 = 0; j0 < q_; ++j0)
                for (int j1 = 0; j1 < q_; ++j1)
                    flabels_.push_back(ThetaElem::finite(NClass::from_integer(p, f, j0), NClass::from_integer(p, f, j1)));
            for (int j1 = 0; j1 < q_; ++j1) flabels_.push_back(ThetaElem::at_infinity(NClass::from_integer(p, f, j1)));
        } else {
            for (int j0 = 0; j0 < q_; ++j0)
                flabels_.push_back(ThetaElem::finite(NClass::from_integer(p, f, j0), NClass::zero(p, f)));
            flabels_.push_back(ThetaElem::at_infinity(NClass::zero(p, f)));
        }
        const Mat2 w = mat_w(*ring_);
        fvecs_.resize(dim_);
        for (int i = 0; i < dim_; ++i)
            if (!flabels_[i].infinite) fvecs_[i] = finite_f(flabels_[i]);
        for (int i = 0; i < dim_; ++i)
            if (flabels_[i].infinite) fvecs_[i] = act(w, fvecs_[f_index(ThetaElem::finite(NClass::zero(p, f), flabels_[i].j1))]);
        cache_ = std::make_shared<Cache>();
    }

    const RingSpec& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const FieldSpec& field() const { return ring_->field(); }
    const FieldPtr& field_ptr() const { return ring_->field_ptr(); }
    int n() const { return n_; }
    int q() const { return q_; }
    int dim() const { return dim_; }
    const NClass& r() const { return r_; }

    const std::vector<CosetLabel>& delta_labels() const { return delta_; }

    int delta_index(const CosetLabel& l) const {
        if (n_ == 2) return l.second_kind ? q_ * q_ + l.mu.code : ring_->index(l.lambda);
        return l.second_kind ? q_ : l.lambda.a0.code;
    }

    const std::vector<ThetaElem>& f_labels() const { return flabels_; }

    int f_index(const ThetaElem& x) const {
        const int j1 = n_ == 2 ? static_cast<int>(x.j1.to_integer()) : 0;
        if (x.infinite) return (n_ == 2 ? q_ * q_ : q_) + j1;
        return static_cast<int>(x.j0.to_integer()) * (n_ == 2 ? q_ : 1) + j1;
    }

    const Vector& f_vector(const ThetaElem& x) const { return fvecs_.at(f_index(x)); }
    const std::vector<Vector>& f_vectors() const { return fvecs_; }

    MonomialOp monomial(const Mat2& g) const {
        const RingSpec& R = *ring_;
        MonomialOp op;
        op.target.resize(dim_);
        op.scale.resize(dim_);
        for (int i = 0; i < dim_; ++i) {
            Mat2 h = mat_mul(R, g, coset_matrix(R, delta_[i]));
            CosetFactor cf = coset_factor(R, h);
            if (n_ == 1) {
                cf.xi.lambda = R.teich(cf.xi.lambda.a0);
                cf.xi.mu = R.field().zero();
            }
            op.target[i] = delta_index(cf.xi);
            op.scale[i] = chi_r(R, cf.b, r_);
        }
        return op;
    }

    Vector act(const Mat2& g, const Vector& v) const {
        if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("act: vector length mismatch");
        return monomial(g).apply(field(), v);
    }

    /// Coordinates in the f-basis (columns of the f-basis matrix).
    Vector f_coordinates(const Vector& v) const {
        std::call_once(cache_->once, [this] {
            auto inv = inverse(field(), Matrix::from_columns(dim_, fvecs_));
            if (!inv) throw std::logic_error("RepSpace: f-basis is singular");
            cache_->finv = std::move(*inv);
        });
        return mat_vec(field(), cache_->finv, v);
    }

    Vector from_f_coordinates(const Vector& c) const {
        Vector v(dim_);
        for (int i = 0; i < dim_; ++i) axpy(field(), v, c[i], fvecs_[i]);
        return v;
    }

    Subspace span_labels(const std::vector<ThetaElem>& labels) const {
        Subspace s(field_ptr(), dim_);
        for (const auto& x : labels) s.insert(f_vector(x));
        return s;
    }

    Subspace zero_subspace() const { return Subspace(field_ptr(), dim_); }

private:
    Vector finite_f(const ThetaElem& x) const {
        const FieldSpec& k = field();
        Vector v(dim_);
        const int first = n_ == 2 ? q_ * q_ : q_;
        for (int i = 0; i < first; ++i) {
            const R2Elem& l = delta_[i].lambda;
            Fq c = k.pow_class(l.a0, x.j0);
            if (n_ == 2) c = k.mul(c, k.pow_class(l.a1, x.j1));
            v[i] = c;
        }
        return v;
    }

    struct Cache {
        std::once_flag once;
        Matrix finv;
    };

    RingPtr ring_;
    int n_;
    NClass r_;
    int q_ = 0;
    int dim_ = 0;
    std::vector<CosetLabel> delta_;
    std::vector<ThetaElem> flabels_;
    std::vector<Vector> fvecs_;
    std::shared_ptr<Cache> cache_;
};

/// The generators of a GeneratorSet acting on a RepSpace through precomputed monomial operators.
class RepAction {
public:
    RepAction(std::shared_ptr<const RepSpace> V, GeneratorsPtr gens) : V_(std::move(V)), gens_(std::move(gens)) {
        for (const auto& g : *gens_) ops_.push_back(V_->monomial(g.m));
    }

    int dim() const { return V_->dim(); }
    int num_generators() const { return static_cast<int>(ops_.size()); }
    const FieldSpec& field() const { return V_->field(); }
    const FieldPtr& field_ptr() const { return V_->field_ptr(); }
    Vector apply(int g, const Vector& v) const { return ops_[g].apply(V_->field(), v); }
    const RepSpace& space() const { return *V_; }
    const std::shared_ptr<const RepSpace>& space_ptr() const { return V_; }
    const GeneratorsPtr& generators() const { return gens_; }
    const MonomialOp& op(int g) const { return ops_[g]; }

private:
    std::shared_ptr<const RepSpace> V_;
    GeneratorsPtr gens_;
    std::vector<MonomialOp> ops_;
};

/// W_beta: span of f_{(j0, j1)} and f_{(inf, j1)} with j1 <= beta digit-wise.
inline Subspace wbeta_subspace(const RepSpace& V, const NClass& beta) {
    if (V.n() != 2) throw std::invalid_argument("wbeta_subspace: requires n = 2");
    std::vector<ThetaElem> labels;
    for (const auto& x : V.f_labels())
        if (nt_leq(x.j1, beta)) labels.push_back(x);
    return V.span_labels(labels);
}

/// Sum of W_alpha over alpha strictly below beta digit-wise.
inline Subspace wbeta_below(const RepSpace& V, const NClass& beta) {
    std::vector<ThetaElem> labels;
    for (const auto& x : V.f_labels())
        if (nt_lt(x.j1, beta)) labels.push_back(x);
    return V.span_labels(labels);
}

/// V_theta: span of the f-labels whose type lies below theta.
inline Subspace vtheta_subspace(const RepSpace& V, const RamType& theta) {
    if (V.n() != 2) throw std::invalid_argument("vtheta_subspace: requires n = 2");
    if (V.ring().variant() != Variant::EqualChar)
        throw std::invalid_argument("vtheta_subspace: only stable in the equal-characteristic variant");
    if (!is_admissible(theta.I, r_minus_2(V.r(), theta.gamma)))
        throw std::invalid_argument("vtheta_subspace: theta is not an admissible type");
    std::vector<ThetaElem> labels;
    for (const auto& x : V.f_labels())
        if (leq_r_closed(upsilon(x, V.r()), theta, V.r())) labels.push_back(x);
    return V.span_labels(labels);
}

/// In V_{1,r}: V_I = span of f_inf and the f_j with I(j, r - j) ⊆ I.
inline Subspace tame_subspace(const RepSpace& V, const CarrySet& I) {
    if (V.n() != 1) throw std::invalid_argument("tame_subspace: requires n = 1");
    std::vector<ThetaElem> labels;
    for (const auto& x : V.f_labels())
        if (x.infinite || upsilon(x, V.r()).I.subset_of(I)) labels.push_back(x);
    return V.span_labels(labels);
}

inline void require_witt(const RepSpace& V) {
    if (V.ring().variant() != Variant::Witt) throw std::invalid_argument("unramified generator requires the Witt variant");
    if (V.n() != 2) throw std::invalid_argument("unramified generator requires n = 2");
}

/// f_{(0, 1 + p + ... + p^{f-1})}.
inline Vector m_chi_generator(const RepSpace& V) {
    require_witt(V);
    const int p = V.field().p(), f = V.field().f();
    return V.f_vector(ThetaElem::finite(NClass::zero(p, f), p_power_sum(p, CarrySet::full(f))));
}

inline Vector f_theta_vector(const RepSpace& V, const UnramTheta& t) {
    require_witt(V);
    return V.f_vector(unram_f_theta_index(t, V.r()));
}

}  // namespace psgl2
