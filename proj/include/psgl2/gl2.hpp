#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "psgl2/ring2.hpp"

namespace psgl2 {

/// [[a, b], [c, d]] over O/m^2.
struct Mat2 {
    R2Elem a, b, c, d;
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 mat_identity(const RingSpec& R) { return {R.one(), R.zero(), R.zero(), R.one()}; }

inline Mat2 mat_mul(const RingSpec& R, const Mat2& x, const Mat2& y) {
    return {R.add(R.mul(x.a, y.a), R.mul(x.b, y.c)), R.add(R.mul(x.a, y.b), R.mul(x.b, y.d)),
            R.add(R.mul(x.c, y.a), R.mul(x.d, y.c)), R.add(R.mul(x.c, y.b), R.mul(x.d, y.d))};
}

inline R2Elem mat_det(const RingSpec& R, const Mat2& g) { return R.sub(R.mul(g.a, g.d), R.mul(g.b, g.c)); }

inline bool mat_invertible(const RingSpec& R, const Mat2& g) { return R.is_unit(mat_det(R, g)); }

inline Mat2 mat_inv(const RingSpec& R, const Mat2& g) {
    R2Elem det = mat_det(R, g);
    if (!R.is_unit(det)) throw std::domain_error("mat_inv: matrix is not invertible");
    R2Elem di = R.inv(det);
    return {R.mul(di, g.d), R.mul(di, R.neg(g.b)), R.mul(di, R.neg(g.c)), R.mul(di, g.a)};
}

inline bool mat_is_upper(const RingSpec& R, const Mat2& g) { return g.c == R.zero(); }

inline Mat2 mat_w(const RingSpec& R) { return {R.zero(), R.one(), R.one(), R.zero()}; }
inline Mat2 mat_diag(const RingSpec& R, const R2Elem& x, const R2Elem& y) { return {x, R.zero(), R.zero(), y}; }
inline Mat2 mat_torus(const RingSpec& R, Fq a, Fq d) { return mat_diag(R, R.teich(a), R.teich(d)); }
inline Mat2 mat_upper(const RingSpec& R, const R2Elem& b) { return {R.one(), b, R.zero(), R.one()}; }
inline Mat2 mat_lower(const RingSpec& R, const R2Elem& c) { return {R.one(), R.zero(), c, R.one()}; }

inline std::string mat_to_string(const RingSpec& R, const Mat2& g) {
    return "[[" + R.to_string(g.a) + "," + R.to_string(g.b) + "],[" + R.to_string(g.c) + "," + R.to_string(g.d) +
           "]]";
}

/// Symbolic name of a generator, kept alongside its matrix.
struct GenTag {
    enum class Kind { W, Torus, Upper, Lower1, Diag1 } kind = Kind::W;
    R2Elem x{};  // torus: (a, d) stored as (x.a0, x.a1); upper/lower1: the entry; diag1: (0, d)
};

struct Generator {
    Mat2 m;
    GenTag tag;
};

/**
 * A generating set of GL_2(O/m^2) shared by every module built over one ring.
 *
 * The torus generators use a primitive element g of k; unipotent and
 * diag(1, 1 + [x]pi) generators run over the basis 1, x, ..., x^(f-1) of k over F_p.
 */
class GeneratorSet {
public:
    explicit GeneratorSet(std::shared_ptr<const RingSpec> ring) : ring_(std::move(ring)) {
        const RingSpec& R = *ring_;
        const FieldSpec& k = R.field();
        Fq g = k.primitive();
        push(mat_w(R), {GenTag::Kind::W, {}});
        push(mat_torus(R, g, k.one()), {GenTag::Kind::Torus, {g, k.one()}});
        push(mat_torus(R, k.one(), g), {GenTag::Kind::Torus, {k.one(), g}});
        for (Fq x : k.prime_basis()) push(mat_upper(R, R.teich(x)), {GenTag::Kind::Upper, R.teich(x)});
        for (Fq x : k.prime_basis()) push(mat_upper(R, {k.zero(), x}), {GenTag::Kind::Upper, {k.zero(), x}});
        for (Fq x : k.prime_basis())
            push(mat_diag(R, R.one(), {k.one(), x}), {GenTag::Kind::Diag1, {k.zero(), x}});
    }

    const RingSpec& ring() const { return *ring_; }
    const std::shared_ptr<const RingSpec>& ring_ptr() const { return ring_; }
    int size() const { return static_cast<int>(gens_.size()); }
    const Generator& operator[](int i) const { return gens_[i]; }
    auto begin() const { return gens_.begin(); }
    auto end() const { return gens_.end(); }

    /// Index of diag([g], 1) and diag(1, [g]).
    int torus_left() const { return 1; }
    int torus_right() const { return 2; }

    /// Indices of u([x]) for x in the F_p-basis; these generate the unipotent radical of the Borel of GL_2(k).
    std::vector<int> residue_unipotents() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (gens_[i].tag.kind == GenTag::Kind::Upper && gens_[i].tag.x.a1.code == 0) out.push_back(i);
        return out;
    }

private:
    void push(const Mat2& m, GenTag t) { gens_.push_back({m, t}); }

    std::shared_ptr<const RingSpec> ring_;
    std::vector<Generator> gens_;
};

using GeneratorsPtr = std::shared_ptr<const GeneratorSet>;

/// Coset representative: [[lambda, 1], [1, 0]] (first kind) or [[1, 0], [mu*pi, 1]] (second kind).
struct CosetLabel {
    bool second_kind = false;
    R2Elem lambda{};
    Fq mu{};
    friend bool operator==(const CosetLabel&, const CosetLabel&) = default;
};

inline Mat2 coset_matrix(const RingSpec& R, const CosetLabel& l) {
    if (l.second_kind) return mat_lower(R, {R.field().zero(), l.mu});
    return {l.lambda, R.one(), R.one(), R.zero()};
}

struct CosetFactor {
    CosetLabel xi;
    Mat2 b;
};

/**
 * Writes g = xi·b with xi a coset representative and b upper triangular.
 * A unit lower-left entry selects the first kind with lambda = a/c; otherwise
 * a is a unit and mu is the pi-digit of c/a.
 */
inline CosetFactor coset_factor(const RingSpec& R, const Mat2& g) {
    if (!mat_invertible(R, g)) throw std::domain_error("coset_factor: matrix is not invertible");
    CosetFactor out;
    if (R.is_unit(g.c)) {
        out.xi.lambda = R.mul(g.a, R.inv(g.c));
        // xi^{-1} = [[0, 1], [1, -lambda]]
        out.b = {g.c, g.d, R.sub(g.a, R.mul(out.xi.lambda, g.c)), R.sub(g.b, R.mul(out.xi.lambda, g.d))};
    } else {
        R2Elem t = R.mul(g.c, R.inv(g.a));
        out.xi.second_kind = true;
        out.xi.mu = t.a1;
        R2Elem mp{R.field().zero(), t.a1};
        out.b = {g.a, g.b, R.sub(g.c, R.mul(mp, g.a)), R.sub(g.d, R.mul(mp, g.b))};
    }
    if (!mat_is_upper(R, out.b)) throw std::logic_error("coset_factor: cofactor is not upper triangular");
    return out;
}

/// d0^r for upper-triangular b.
inline Fq chi_r(const RingSpec& R, const Mat2& b, const NClass& r) {
    if (!mat_is_upper(R, b)) throw std::domain_error("chi_r: matrix is not upper triangular");
    return R.field().pow_class(b.d.a0, r);
}

}  // namespace psgl2
