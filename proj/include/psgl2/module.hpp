#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "psgl2/gl2.hpp"
#include "psgl2/matrix.hpp"
#include "psgl2/weights.hpp"

namespace psgl2 {

/// Anything that applies numbered generators to vectors of a fixed length.
template <class A>
concept LinearAction = requires(const A& a, int g, const Vector& v) {
    { a.dim() } -> std::convertible_to<int>;
    { a.num_generators() } -> std::convertible_to<int>;
    { a.apply(g, v) } -> std::same_as<Vector>;
    { a.field_ptr() } -> std::convertible_to<FieldPtr>;
    { a.generators() } -> std::convertible_to<GeneratorsPtr>;
};

/// Least generator-stable subspace containing the seeds.
template <LinearAction A>
Subspace spin(const A& action, const std::vector<Vector>& seeds) {
    Subspace S(action.field_ptr(), action.dim());
    std::vector<Vector> queue;
    for (const auto& s : seeds)
        if (S.insert(s)) queue.push_back(s);
    for (std::size_t head = 0; head < queue.size() && S.dim() < action.dim(); ++head)
        for (int g = 0; g < action.num_generators(); ++g) {
            Vector v = action.apply(g, queue[head]);
            if (S.insert(v)) queue.push_back(std::move(v));
        }
    return S;
}

template <LinearAction A>
Subspace spin(const A& action, const Vector& seed) {
    return spin(action, std::vector<Vector>{seed});
}

template <LinearAction A>
bool is_stable(const A& action, const Subspace& N) {
    for (const auto& row : N.rows())
        for (int g = 0; g < action.num_generators(); ++g)
            if (!N.contains(action.apply(g, row))) return false;
    return true;
}

/**
 * A finite-dimensional module given by one matrix per generator of a shared
 * GeneratorSet. Matrices act on column vectors.
 */
class Module {
public:
    Module() = default;
    Module(FieldPtr field, GeneratorsPtr gens, std::vector<Matrix> ops, int dim)
        : field_(std::move(field)), gens_(std::move(gens)), ops_(std::move(ops)), dim_(dim) {
        if (static_cast<int>(ops_.size()) != gens_->size()) throw std::invalid_argument("Module: one matrix per generator");
        for (const auto& m : ops_)
            if (m.rows != dim_ || m.cols != dim_) throw std::invalid_argument("Module: matrix shape mismatch");
    }

    /// Dense matrices of an arbitrary action.
    template <LinearAction A>
    static Module from_action(const A& action) {
        std::vector<Matrix> ops;
        const int d = action.dim();
        for (int g = 0; g < action.num_generators(); ++g) {
            std::vector<Vector> cols;
            for (int i = 0; i < d; ++i) cols.push_back(action.apply(g, unit_vector(d, i)));
            ops.push_back(Matrix::from_columns(d, cols));
        }
        return Module(action.field_ptr(), action.generators(), std::move(ops), d);
    }

    int dim() const { return dim_; }
    int num_generators() const { return static_cast<int>(ops_.size()); }
    const FieldSpec& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    const GeneratorsPtr& generators() const { return gens_; }
    const Matrix& op(int g) const { return ops_[g]; }
    Vector apply(int g, const Vector& v) const { return mat_vec(*field_, ops_[g], v); }

    /// Contragredient: inverse transposes.
    Module dual() const {
        std::vector<Matrix> ops;
        for (const auto& m : ops_) {
            auto inv = inverse(*field_, m);
            if (!inv) throw std::logic_error("Module::dual: generator acts singularly");
            ops.push_back(inv->transpose());
        }
        return Module(field_, gens_, std::move(ops), dim_);
    }

    /// Plain transposes; stable subspaces here are annihilators of stable subspaces of this module.
    Module transposed() const {
        std::vector<Matrix> ops;
        for (const auto& m : ops_) ops.push_back(m.transpose());
        return Module(field_, gens_, std::move(ops), dim_);
    }

    /// Tensor with det^s, det read mod pi.
    Module twisted(const NClass& s) const {
        const RingSpec& R = gens_->ring();
        std::vector<Matrix> ops = ops_;
        for (int g = 0; g < num_generators(); ++g) {
            Fq c = field_->pow_class(mat_det(R, (*gens_)[g].m).a0, s);
            for (auto& x : ops[g].data) x = field_->mul(x, c);
        }
        return Module(field_, gens_, std::move(ops), dim_);
    }

private:
    FieldPtr field_;
    GeneratorsPtr gens_;
    std::vector<Matrix> ops_;
    int dim_ = 0;
};

/// The action restricted to a stable subspace, in the coordinates of N.rows().
template <LinearAction A>
Module restrict_module(const A& action, const Subspace& N) {
    std::vector<Matrix> ops;
    const int d = N.dim();
    for (int g = 0; g < action.num_generators(); ++g) {
        Matrix m(d, d);
        for (int k = 0; k < d; ++k) {
            Vector img = action.apply(g, N.rows()[k]);
            if (!N.contains(img)) throw std::invalid_argument("restrict_module: subspace is not stable");
            Vector c = N.coordinates(img);
            for (int i = 0; i < d; ++i) m(i, k) = c[i];
        }
        ops.push_back(std::move(m));
    }
    return Module(action.field_ptr(), action.generators(), std::move(ops), d);
}

/**
 * Induced action on the quotient by a stable N. Quotient coordinates are the
 * entries at the non-pivot columns of N after reduction.
 */
class Quotient {
public:
    template <LinearAction A>
    Quotient(const A& action, Subspace N) : kernel_(std::move(N)), cols_(kernel_.free_columns()) {
        if (!is_stable(action, kernel_)) throw std::invalid_argument("quotient: subspace is not stable");
        const int d = static_cast<int>(cols_.size());
        std::vector<Matrix> ops;
        for (int g = 0; g < action.num_generators(); ++g) {
            Matrix m(d, d);
            for (int k = 0; k < d; ++k) {
                Vector c = project(action.apply(g, unit_vector(action.dim(), cols_[k])));
                for (int i = 0; i < d; ++i) m(i, k) = c[i];
            }
            ops.push_back(std::move(m));
        }
        module_ = Module(action.field_ptr(), action.generators(), std::move(ops), d);
    }

    const Module& module() const { return module_; }
    const Subspace& kernel() const { return kernel_; }

    Vector project(Vector v) const {
        kernel_.reduce(v);
        Vector c(cols_.size());
        for (std::size_t i = 0; i < cols_.size(); ++i) c[i] = v[cols_[i]];
        return c;
    }

    Vector lift(const Vector& c) const {
        Vector v(kernel_.ambient_dim());
        for (std::size_t i = 0; i < cols_.size(); ++i) v[cols_[i]] = c[i];
        return v;
    }

    /// Preimage of a subspace of the quotient.
    Subspace preimage(const Subspace& S) const {
        Subspace out = kernel_;
        for (const auto& row : S.rows()) out.insert(lift(row));
        return out;
    }

private:
    Subspace kernel_;
    std::vector<int> cols_;
    Module module_;
};

template <LinearAction A>
Module quotient_module(const A& action, const Subspace& N) {
    return Quotient(action, N).module();
}

/// The module A/B for stable B ⊆ A inside the ambient action.
template <LinearAction Act>
Module subquotient(const Act& action, const Subspace& A, const Subspace& B) {
    if (!B.subset_of(A)) throw std::invalid_argument("subquotient: B is not contained in A");
    Module MA = restrict_module(action, A);
    Subspace Bc(action.field_ptr(), A.dim());
    for (const auto& row : B.rows()) Bc.insert(A.coordinates(row));
    return quotient_module(MA, Bc);
}

/**
 * Basis of Hom_G(M, N).
 *
 * M is spun from standard basis vectors while recording how each new basis
 * vector arises; a homomorphism is then fixed by the images of the seeds, and
 * the remaining relations g·b_k = sum_l R_g(l,k) b_l give a linear system in
 * those images only.
 */
inline std::vector<Matrix> hom_space(const Module& M, const Module& N) {
    if (M.generators() != N.generators() && M.num_generators() != N.num_generators())
        throw std::invalid_argument("hom_space: modules use different generating sets");
    const FieldSpec& F = M.field();
    const int d = M.dim(), e = N.dim(), G = M.num_generators();
    if (d == 0 || e == 0) return {};

    std::vector<Vector> basis;
    std::vector<std::pair<int, int>> origin;  // (generator, parent) or (-1, seed number)
    Subspace ech(M.field_ptr(), d);
    int seeds = 0;
    for (int i = 0; i < d && ech.dim() < d; ++i) {
        Vector s = unit_vector(d, i);
        if (!ech.insert(s)) continue;
        basis.push_back(s);
        origin.emplace_back(-1, seeds++);
        for (std::size_t head = basis.size() - 1; head < basis.size(); ++head)
            for (int g = 0; g < G; ++g) {
                Vector v = M.apply(g, basis[head]);
                if (ech.insert(v)) {
                    basis.push_back(std::move(v));
                    origin.emplace_back(g, static_cast<int>(head));
                }
            }
    }
    const Matrix B = Matrix::from_columns(d, basis);
    const Matrix Binv = *inverse(F, B);
    const int unknowns = seeds * e;

    // P[k]: e x unknowns, the image of b_k as a linear function of the seed images.
    std::vector<Matrix> P(d);
    for (int k = 0; k < d; ++k) {
        auto [g, parent] = origin[k];
        if (g < 0) {
            P[k] = Matrix(e, unknowns);
            for (int i = 0; i < e; ++i) P[k](i, parent * e + i) = F.one();
        } else {
            P[k] = mat_mul(F, N.op(g), P[parent]);
        }
    }
    std::vector<char> is_origin(static_cast<std::size_t>(G) * d, 0);
    for (int k = 0; k < d; ++k)
        if (origin[k].first >= 0) is_origin[origin[k].first * d + origin[k].second] = 1;

    Subspace constraints(M.field_ptr(), unknowns);
    for (int g = 0; g < G && constraints.dim() < unknowns; ++g) {
        const Matrix R = mat_mul(F, Binv, mat_mul(F, M.op(g), B));
        for (int k = 0; k < d && constraints.dim() < unknowns; ++k) {
            if (is_origin[g * d + k]) continue;
            Matrix C = mat_mul(F, N.op(g), P[k]);
            for (int l = 0; l < d; ++l) {
                Fq c = R(l, k);
                if (c.code) C = mat_add(F, std::move(C), P[l], F.neg(c));
            }
            for (int i = 0; i < e; ++i) constraints.insert(C.row(i));
        }
    }
    // Null space of the constraint rows.
    std::vector<Matrix> out;
    const auto& piv = constraints.pivots();
    for (int fcol : constraints.free_columns()) {
        Vector x(unknowns);
        x[fcol] = F.one();
        for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = F.neg(constraints.rows()[k][fcol]);
        std::vector<Vector> cols;
        for (int k = 0; k < d; ++k) cols.push_back(mat_vec(F, P[k], x));
        out.push_back(mat_mul(F, Matrix::from_columns(e, cols), Binv));
    }
    return out;
}

/// Serre weight together with an explicit model module.
struct WeightModel {
    SerreWeight weight;
    Module module;
};

/**
 * Explicit model of det^a2 ⊗ ⊗_i Sym^{t_i}(k^2)^{(i)}, with
 * (g·P)(X, Y) = P(aX + cY, bX + dY) on the i-th factor after the i-th Frobenius.
 */
inline Module weight_module(const SerreWeight& w, FieldPtr field, GeneratorsPtr gens) {
    const FieldSpec& F = *field;
    const int f = F.f();
    const int d = static_cast<int>(w.dimension());
    std::vector<Matrix> ops;
    for (const auto& gen : *gens) {
        const Mat2& g = gen.m;
        Matrix total = Matrix::identity(1);
        for (int i = 0; i < f; ++i) {
            const int t = w.sym()[i];
            Fq a = F.frobenius(g.a.a0, i), b = F.frobenius(g.b.a0, i);
            Fq c = F.frobenius(g.c.a0, i), dd = F.frobenius(g.d.a0, i);
            Matrix S(t + 1, t + 1);
            for (int k = 0; k <= t; ++k) {
                // coefficients in Y-degree of (a + cY)^{t-k} (b + dY)^k
                Vector poly{F.one()};
                auto mul_lin = [&](Fq x0, Fq x1) {
                    Vector next(poly.size() + 1);
                    for (std::size_t m = 0; m < poly.size(); ++m) {
                        next[m] = F.add(next[m], F.mul(poly[m], x0));
                        next[m + 1] = F.add(next[m + 1], F.mul(poly[m], x1));
                    }
                    poly = std::move(next);
                };
                for (int u = 0; u < t - k; ++u) mul_lin(a, c);
                for (int u = 0; u < k; ++u) mul_lin(b, dd);
                for (int m = 0; m <= t; ++m) S(m, k) = poly[m];
            }
            // Kronecker product, earlier factors varying slowest.
            Matrix K(total.rows * S.rows, total.cols * S.cols);
            for (int r1 = 0; r1 < total.rows; ++r1)
                for (int c1 = 0; c1 < total.cols; ++c1)
                    for (int r2 = 0; r2 < S.rows; ++r2)
                        for (int c2 = 0; c2 < S.cols; ++c2)
                            K(r1 * S.rows + r2, c1 * S.cols + c2) = F.mul(total(r1, c1), S(r2, c2));
            total = std::move(K);
        }
        Fq det0 = F.sub(F.mul(g.a.a0, g.d.a0), F.mul(g.b.a0, g.c.a0));
        Fq tw = F.pow_class(det0, w.twist());
        for (auto& x : total.data) x = F.mul(x, tw);
        ops.push_back(std::move(total));
    }
    return Module(field, gens, std::move(ops), d);
}

inline std::vector<WeightModel> weight_models(const std::vector<SerreWeight>& ws, FieldPtr field, GeneratorsPtr gens) {
    std::vector<WeightModel> out;
    for (const auto& w : distinct_weights(ws)) out.push_back({w, weight_module(w, field, gens)});
    return out;
}

/// Vectors fixed by the residue unipotent generators on which the torus acts by (g^a1, g^a2).
inline Subspace highest_weight_space(const Module& M, int a1, int a2) {
    const FieldSpec& F = M.field();
    const GeneratorSet& gens = *M.generators();
    const int d = M.dim();
    std::vector<std::pair<int, Fq>> conds;
    for (int u : gens.residue_unipotents()) conds.emplace_back(u, F.one());
    conds.emplace_back(gens.torus_left(), F.pow(F.primitive(), a1));
    conds.emplace_back(gens.torus_right(), F.pow(F.primitive(), a2));
    Matrix stacked(static_cast<int>(conds.size()) * d, d);
    for (std::size_t c = 0; c < conds.size(); ++c) {
        const Matrix& A = M.op(conds[c].first);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                stacked(static_cast<int>(c) * d + i, j) = i == j ? F.sub(A(i, j), conds[c].second) : A(i, j);
    }
    return kernel(M.field_ptr(), stacked);
}

/// The torus character (a1, a2) on the fixed line of an irreducible module, as discrete logs.
inline std::pair<int, int> highest_weight(const Module& M) {
    const FieldSpec& F = M.field();
    const GeneratorSet& gens = *M.generators();
    const int d = M.dim();
    std::vector<int> us = gens.residue_unipotents();
    Matrix stacked(static_cast<int>(us.size()) * d, d);
    for (std::size_t c = 0; c < us.size(); ++c) {
        const Matrix& A = M.op(us[c]);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                stacked(static_cast<int>(c) * d + i, j) = i == j ? F.sub(A(i, j), F.one()) : A(i, j);
    }
    Subspace fixed = kernel(M.field_ptr(), stacked);
    if (fixed.dim() != 1)
        throw std::domain_error("identify_weight: unipotent-fixed space has dimension " + std::to_string(fixed.dim()));
    const Vector& v = fixed.rows()[0];
    const int i = fixed.pivots()[0];
    auto eigen = [&](int g) {
        Vector img = M.apply(g, v);
        Vector check = v;
        scale(F, check, img[i]);
        if (check != img) throw std::domain_error("identify_weight: fixed line is not a torus eigenline");
        return F.log(img[i]);
    };
    return {eigen(gens.torus_left()), eigen(gens.torus_right())};
}

/// Reads F(a1, a2) off the unipotent-fixed line.
inline SerreWeight identify_weight(const Module& M) {
    const FieldSpec& F = M.field();
    const int p = F.p(), f = F.f(), q = F.q();
    auto [a1, a2] = highest_weight(M);
    int sym = ((a1 - a2) % (q - 1) + (q - 1)) % (q - 1);
    if (sym == 0 && M.dim() == q) sym = q - 1;
    std::vector<int> digits(f);
    for (int i = 0, v = sym; i < f; ++i, v /= p) digits[i] = v % p;
    SerreWeight w(NClass::from_integer(p, f, a2), digits);
    if (w.dimension() != M.dim())
        throw std::domain_error("identify_weight: dimension " + std::to_string(M.dim()) + " does not match " +
                                w.to_string());
    return w;
}

/// Candidate can map into M only if its highest weight occurs among M's unipotent-fixed vectors.
inline bool may_embed(const WeightModel& L, const Module& M) {
    auto [a1, a2] = highest_weight(L.module);
    return highest_weight_space(M, a1, a2).dim() > 0;
}

inline Subspace socle(const Module& M, const std::vector<WeightModel>& candidates) {
    Subspace S(M.field_ptr(), M.dim());
    for (const auto& L : candidates) {
        if (!may_embed(L, M)) continue;
        for (const auto& phi : hom_space(L.module, M))
            for (int j = 0; j < phi.cols; ++j) S.insert(phi.column(j));
    }
    return S;
}

inline Subspace radical(const Module& M, const std::vector<WeightModel>& candidates) {
    const Module Md = M.dual();
    std::vector<Vector> rows;
    for (const auto& L : candidates) {
        WeightModel Ld{L.weight, L.module.dual()};
        if (!may_embed(Ld, Md)) continue;
        for (const auto& phi : hom_space(M, L.module))
            for (int i = 0; i < phi.rows; ++i) rows.push_back(phi.row(i));
    }
    Matrix stacked(static_cast<int>(rows.size()), M.dim());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < M.dim(); ++j) stacked(static_cast<int>(i), j) = rows[i][j];
    return kernel(M.field_ptr(), stacked);
}

/// soc_0 ⊂ soc_1 ⊂ ... ⊂ soc_L = M.
inline std::vector<Subspace> socle_filtration(const Module& M, const std::vector<WeightModel>& candidates) {
    std::vector<Subspace> out;
    Subspace cur(M.field_ptr(), M.dim());
    while (cur.dim() < M.dim()) {
        Quotient Q(M, cur);
        Subspace s = socle(Q.module(), candidates);
        if (s.dim() == 0) throw std::logic_error("socle_filtration: candidate list misses a constituent");
        cur = Q.preimage(s);
        out.push_back(cur);
    }
    return out;
}

/// rad_0 ⊃ rad_1 ⊃ ... ⊃ rad_L = 0, with rad_{-1} = M.
inline std::vector<Subspace> radical_filtration(const Module& M, const std::vector<WeightModel>& candidates) {
    std::vector<Subspace> out;
    Subspace cur = Subspace::full(M.field_ptr(), M.dim());
    while (cur.dim() > 0) {
        Module R = restrict_module(M, cur);
        Subspace rad = radical(R, candidates);
        if (rad.dim() == cur.dim()) throw std::logic_error("radical_filtration: candidate list misses a constituent");
        Subspace next(M.field_ptr(), M.dim());
        for (const auto& row : rad.rows()) next.insert(cur.combine(row));
        cur = next;
        out.push_back(cur);
    }
    return out;
}

struct Constituent {
    SerreWeight weight;
    int multiplicity;
};

/// Constituents of a semisimple module via dim Hom(L, S); throws if they do not account for all of S.
inline std::vector<Constituent> semisimple_constituents(const Module& S, const std::vector<WeightModel>& candidates) {
    std::vector<Constituent> out;
    long long total = 0;
    for (const auto& L : candidates) {
        if (!may_embed(L, S)) continue;
        int m = static_cast<int>(hom_space(L.module, S).size());
        if (m > 0) {
            out.push_back({L.weight, m});
            total += m * L.weight.dimension();
        }
    }
    if (total != S.dim()) throw std::logic_error("semisimple_constituents: module is not semisimple over the candidates");
    return out;
}

enum class Decision { Irreducible, Reducible, Undecided };

inline std::string to_string(Decision d) {
    return d == Decision::Irreducible ? "irreducible" : d == Decision::Reducible ? "reducible" : "undecided";
}

struct NortonResult {
    Decision decision = Decision::Undecided;
    Subspace witness;  // proper nonzero submodule when reducible
    int draws = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024ULL;

namespace detail {

inline std::vector<Vector> projective_points(const FieldSpec& F, const Subspace& N) {
    const int k = N.dim(), q = F.q();
    std::vector<Vector> out;
    for (int lead = 0; lead < k; ++lead) {
        long long count = int_pow(q, k - lead - 1);
        for (long long code = 0; code < count; ++code) {
            Vector c(k);
            c[lead] = F.one();
            long long v = code;
            for (int j = lead + 1; j < k; ++j, v /= q) c[j] = Fq{static_cast<std::uint16_t>(v % q)};
            out.push_back(N.combine(c));
        }
    }
    return out;
}

}  // namespace detail

/**
 * Norton's criterion with random algebra elements.
 *
 * For a singular element X every line in ker X is spun in M and every line in
 * ker X^T is spun in the transposed module; if all spins are full, M is
 * irreducible, otherwise the first short spin gives a proper submodule.
 */
inline NortonResult norton_test(const Module& M, std::uint64_t seed = kDefaultSeed, int budget = 200) {
    NortonResult res;
    res.witness = Subspace(M.field_ptr(), M.dim());
    if (M.dim() == 0) throw std::invalid_argument("norton_test: zero module");
    if (M.dim() == 1) {
        res.decision = Decision::Irreducible;
        return res;
    }
    const FieldSpec& F = M.field();
    const int d = M.dim(), q = F.q(), G = M.num_generators();
    const Module MT = M.transposed();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> gen_pick(0, G - 1), len_pick(1, 8), coef_pick(1, q - 1);
    for (int draw = 0; draw < budget; ++draw) {
        res.draws = draw + 1;
        Matrix X(d, d);
        for (int term = 0; term < 3; ++term) {
            Matrix W = Matrix::identity(d);
            for (int l = len_pick(rng); l > 0; --l) W = mat_mul(F, M.op(gen_pick(rng)), W);
            X = mat_add(F, std::move(X), W, Fq{static_cast<std::uint16_t>(coef_pick(rng))});
        }
        for (int c = 0; c < q; ++c) {
            Matrix Y = mat_add(F, X, Matrix::identity(d), F.neg(Fq{static_cast<std::uint16_t>(c)}));
            Subspace N = kernel(M.field_ptr(), Y);
            if (N.dim() == 0 || N.dim() > 2) continue;
            for (const auto& v : detail::projective_points(F, N)) {
                Subspace S = spin(M, v);
                if (S.dim() < d) {
                    res.decision = Decision::Reducible;
                    res.witness = S;
                    return res;
                }
            }
            Subspace NT = kernel(M.field_ptr(), Y.transpose());
            for (const auto& w : detail::projective_points(F, NT)) {
                Subspace S = spin(MT, w);
                if (S.dim() < d) {
                    Matrix rows(S.dim(), d);
                    for (int i = 0; i < S.dim(); ++i)
                        for (int j = 0; j < d; ++j) rows(i, j) = S.rows()[i][j];
                    res.decision = Decision::Reducible;
                    res.witness = kernel(M.field_ptr(), rows);
                    return res;
                }
            }
            res.decision = Decision::Irreducible;
            return res;
        }
    }
    return res;
}

/// Composition factors by repeated splitting with Norton witnesses.
inline std::vector<SerreWeight> composition_factors(const Module& M, std::uint64_t seed = kDefaultSeed) {
    if (M.dim() == 0) return {};
    NortonResult nr = norton_test(M, seed);
    if (nr.decision == Decision::Undecided) throw std::runtime_error("composition_factors: Norton test undecided");
    if (nr.decision == Decision::Irreducible) return {identify_weight(M)};
    std::vector<SerreWeight> out = composition_factors(restrict_module(M, nr.witness), seed + 1);
    std::vector<SerreWeight> top = composition_factors(quotient_module(M, nr.witness), seed + 2);
    out.insert(out.end(), top.begin(), top.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace psgl2
