#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "psgl2/closed_forms.hpp"
#include "psgl2/module.hpp"
#include "psgl2/psrep.hpp"

namespace psgl2 {

enum class Status { Pass, Fail, Undecided };

inline std::string to_string(Status s) {
    return s == Status::Pass ? "pass" : s == Status::Fail ? "fail" : "undecided";
}

/// Unset fields fall back to the check's default grid.
struct CheckParams {
    std::optional<int> p;
    std::optional<int> f;
    std::optional<Variant> variant;
    std::optional<long long> r;
    std::uint64_t seed = kDefaultSeed;
};

struct CheckReport {
    std::string check_id;
    std::string title;
    CheckParams params;
    Status status = Status::Pass;
    std::map<std::string, long long> counts;
    std::vector<std::string> notes;      // informational, never affects status
    std::vector<std::string> witnesses;  // why a check failed or stayed undecided
    double wall_time = 0.0;
};

namespace verify_detail {

inline constexpr std::size_t kMaxWitnesses = 24;

struct Setting {
    int p;
    int f;
    Variant variant;
};

inline std::string describe(const Setting& s) {
    return "(" + std::to_string(s.p) + "," + std::to_string(s.f) + "," + to_string(s.variant) + ")";
}

inline std::string describe(const Setting& s, const NClass& r) { return describe(s) + " r=" + r.to_string(); }

class Recorder {
public:
    explicit Recorder(CheckReport& rep) : rep_(rep) {}
    ~Recorder() {
        if (dropped_ > 0) rep_.witnesses.push_back("... and " + std::to_string(dropped_) + " more");
    }

    void fail(std::string w) {
        rep_.status = Status::Fail;
        push(std::move(w));
    }
    void undecided(std::string w) {
        if (rep_.status == Status::Pass) rep_.status = Status::Undecided;
        push(std::move(w));
    }
    void note(std::string n) { rep_.notes.push_back(std::move(n)); }
    void count(const std::string& key, long long by = 1) { rep_.counts[key] += by; }
    bool ok() const { return rep_.status == Status::Pass; }

private:
    void push(std::string w) {
        if (rep_.witnesses.size() < kMaxWitnesses) rep_.witnesses.push_back(std::move(w));
        else ++dropped_;
    }

    CheckReport& rep_;
    long long dropped_ = 0;
};

/// One representation together with the objects it is built from.
struct RepBundle {
    RingPtr ring;
    GeneratorsPtr gens;
    std::shared_ptr<const RepSpace> space;
    RepAction action;

    RepBundle(RingPtr R, GeneratorsPtr G, int n, const NClass& r)
        : ring(R), gens(G), space(std::make_shared<const RepSpace>(R, n, r)), action(space, gens) {}

    const RepSpace& V() const { return *space; }
    const FieldSpec& F() const { return space->field(); }
    const NClass& r() const { return space->r(); }
};

struct Context {
    RingPtr ring;
    GeneratorsPtr gens;
    explicit Context(const Setting& s)
        : ring(make_ring(s.p, s.f, s.variant)), gens(std::make_shared<const GeneratorSet>(ring)) {}
    RepBundle rep(int n, const NClass& r) const { return RepBundle(ring, gens, n, r); }
};

inline std::vector<NClass> all_r(int p, int f) {
    std::vector<NClass> out;
    const long long q = int_pow(p, f);
    for (long long m = 1; m < q; ++m) out.push_back(NClass::from_integer(p, f, m));
    return out;
}

inline NClass zero_class(const NClass& r) { return NClass::zero(r.p(), r.f()); }

inline std::vector<WeightModel> candidates(const RepBundle& B, int n) {
    return weight_models(jh_multiset(n, {zero_class(B.r()), B.r()}), B.space->field_ptr(), B.gens);
}

inline std::string weights_to_string(std::vector<SerreWeight> ws) {
    std::sort(ws.begin(), ws.end());
    std::string out = "{";
    for (std::size_t i = 0; i < ws.size();) {
        std::size_t j = i;
        while (j < ws.size() && ws[j] == ws[i]) ++j;
        if (i) out += ", ";
        out += ws[i].to_string();
        if (j - i > 1) out += "x" + std::to_string(j - i);
        i = j;
    }
    return out + "}";
}

inline std::vector<SerreWeight> expand(const std::vector<Constituent>& cs) {
    std::vector<SerreWeight> out;
    for (const auto& c : cs)
        for (int i = 0; i < c.multiplicity; ++i) out.push_back(c.weight);
    std::sort(out.begin(), out.end());
    return out;
}

/// Multiplicity of each candidate in the cosocle, as dim Hom(M, L).
inline std::vector<Constituent> cosocle_profile(const Module& M, const std::vector<WeightModel>& cands) {
    std::vector<Constituent> out;
    for (const auto& L : cands) {
        int m = static_cast<int>(hom_space(M, L.module).size());
        if (m > 0) out.push_back({L.weight, m});
    }
    return out;
}

inline bool is_irreducible_cosocle(const std::vector<Constituent>& prof, const SerreWeight& w) {
    return prof.size() == 1 && prof[0].multiplicity == 1 && prof[0].weight == w;
}

inline std::string profile_to_string(const std::vector<Constituent>& prof) { return weights_to_string(expand(prof)); }

/// Graded pieces soc_i / soc_{i-1}, i = 0..L.
inline std::vector<std::vector<SerreWeight>> socle_layers(const Module& M, const std::vector<WeightModel>& cands) {
    std::vector<std::vector<SerreWeight>> out;
    Subspace prev(M.field_ptr(), M.dim());
    for (const auto& s : socle_filtration(M, cands)) {
        out.push_back(expand(semisimple_constituents(subquotient(M, s, prev), cands)));
        prev = s;
    }
    return out;
}

/// Graded pieces rad_{i-1} / rad_i, i = 0..L, with rad_{-1} = M.
inline std::vector<std::vector<SerreWeight>> radical_layers(const Module& M, const std::vector<WeightModel>& cands) {
    std::vector<std::vector<SerreWeight>> out;
    Subspace prev = Subspace::full(M.field_ptr(), M.dim());
    for (const auto& s : radical_filtration(M, cands)) {
        out.push_back(expand(semisimple_constituents(subquotient(M, prev, s), cands)));
        prev = s;
    }
    return out;
}

inline std::vector<SerreWeight> flatten(const std::vector<std::vector<SerreWeight>>& layers) {
    std::vector<SerreWeight> out;
    for (const auto& l : layers) out.insert(out.end(), l.begin(), l.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// L irreducible, so a nonzero map L -> M between equal dimensions is an isomorphism.
inline bool isomorphic_to_weight(const Module& M, const SerreWeight& w) {
    if (M.dim() != w.dimension()) return false;
    Module L = weight_module(w, M.field_ptr(), M.generators());
    return !hom_space(L, M).empty();
}

inline long long total_dim(const std::vector<SerreWeight>& ws) {
    long long d = 0;
    for (const auto& w : ws) d += w.dimension();
    return d;
}

inline std::string subspace_mismatch(const Subspace& got, const Subspace& want) {
    Subspace meet = subspace_intersection(got, want);
    return "dim " + std::to_string(got.dim()) + " vs expected " + std::to_string(want.dim()) + " (common " +
           std::to_string(meet.dim()) + ")";
}

/// Spans the f-labels of V_theta for several types at once.
inline Subspace vtheta_sum(const RepSpace& V, const std::vector<RamType>& thetas) {
    std::vector<ThetaElem> labels;
    for (const auto& x : V.f_labels()) {
        RamType t = upsilon(x, V.r());
        for (const auto& th : thetas)
            if (leq_r_closed(t, th, V.r())) {
                labels.push_back(x);
                break;
            }
    }
    return V.span_labels(labels);
}

// ---- parameter handling -------------------------------------------------------------

struct Bounds {
    long long max_q;
    bool allow_equalchar = true;
    bool allow_witt = false;
    int min_p = 2;
    int min_f = 1;
    int max_f = kMaxDegree;
};

inline void reject(const std::string& id, const std::string& why) {
    throw std::invalid_argument(id + ": " + why);
}

/// The settings a check runs over: the caller's single setting if given, else the defaults.
inline std::vector<Setting> resolve(const std::string& id, const CheckParams& P, const std::vector<Setting>& defaults,
                                    const Bounds& b) {
    std::vector<Setting> out;
    if (!P.p && !P.f) {
        for (Setting s : defaults) {
            if (P.variant) s.variant = *P.variant;
            out.push_back(s);
        }
    } else {
        if (!P.p) reject(id, "--f given without --p");
        out.push_back({*P.p, P.f.value_or(1), P.variant.value_or(defaults.front().variant)});
    }
    for (const auto& s : out) {
        if (s.p < 2 || s.f < 1) reject(id, "p must be a prime and f >= 1");
        if (s.p < b.min_p) reject(id, "requires p >= " + std::to_string(b.min_p));
        if (s.f < b.min_f) reject(id, "requires f >= " + std::to_string(b.min_f));
        if (s.f > b.max_f) reject(id, "requires f <= " + std::to_string(b.max_f));
        for (int d = 2; d * d <= s.p; ++d)
            if (s.p % d == 0) reject(id, "p = " + std::to_string(s.p) + " is not prime");
        const long long q = int_pow(s.p, s.f);
        if (q > b.max_q)
            reject(id, "q = p^f must be at most " + std::to_string(b.max_q) + " (got " + std::to_string(q) + ")");
        if (s.variant == Variant::EqualChar && !b.allow_equalchar) reject(id, "requires the witt variant");
        if (s.variant == Variant::Witt && !b.allow_witt) reject(id, "requires the equalchar variant");
    }
    return out;
}

/// The r values for one setting: the caller's r, or the default list.
inline std::vector<NClass> r_values(const std::string& id, const CheckParams& P, const Setting& s,
                                    const std::vector<NClass>& defaults) {
    if (P.r) {
        const long long q = int_pow(s.p, s.f);
        if (*P.r < 1 || *P.r > q - 1)
            reject(id, "r must lie in [1, q-1] = [1, " + std::to_string(q - 1) + "] after reduction");
        return {NClass::from_integer(s.p, s.f, *P.r)};
    }
    return defaults;
}

inline std::vector<NClass> ends_of_range(const Setting& s) {
    const long long q = int_pow(s.p, s.f);
    return {NClass::from_integer(s.p, s.f, 1), NClass::from_integer(s.p, s.f, q - 1)};
}

/// Every r when f = 1, the two ends of the range otherwise.
inline std::vector<NClass> generation_grid_r(const Setting& s) {
    return s.f == 1 ? all_r(s.p, s.f) : ends_of_range(s);
}

inline bool is_generic(const NClass& r) {
    for (int i = 0; i < r.f(); ++i)
        if (r.digit(i) < 1 || r.digit(i) > r.p() - 2) return false;
    return true;
}

// ---- A0 -------------------------------------------------------------------------------

inline void check_a0(const CheckParams& P, Recorder& rec) {
    auto settings = resolve("A0", P, {{3, 1, Variant::EqualChar}, {5, 1, Variant::EqualChar}, {3, 2, Variant::EqualChar}},
                            {27, true, true});
    for (const auto& s : settings) {
        Context ctx(s);
        for (const NClass& r : r_values("A0", P, s, all_r(s.p, s.f))) {
            RepBundle B = ctx.rep(1, r);
            const RepSpace& V = B.V();
            const FieldSpec& F = B.F();
            const int q = V.q();
            for (const auto& x : V.f_labels()) {
                Subspace got = spin(B.action, V.f_vector(x));
                Subspace want = tame_subspace(V, x.infinite ? CarrySet::empty(s.f) : upsilon(x, r).I);
                rec.count("generators spun");
                if (!(got == want))
                    rec.fail(describe(s, r) + ": spin(f_" + x.to_string() + ") " + subspace_mismatch(got, want));
            }
            if (!r.is_top()) {
                auto cands = candidates(B, 1);
                for (const CarrySet& I : admissible_sets(r)) {
                    auto prof = cosocle_profile(restrict_module(B.action, tame_subspace(V, I)), cands);
                    rec.count("cosocles");
                    if (!is_irreducible_cosocle(prof, sigma_J(I, r)))
                        rec.fail(describe(s, r) + ": cosocle of V_" + I.to_string() + " is " + profile_to_string(prof) +
                                 ", expected " + sigma_J(I, r).to_string());
                }
                continue;
            }
            // r = q - 1: V_{1,r} = F(q-1, 0) ⊕ F(0, 0).
            const NClass zero = zero_class(r);
            const Subspace steinberg = tame_subspace(V, CarrySet::empty(s.f));
            Vector h = V.f_vector(ThetaElem::finite(zero, zero));
            axpy(F, h, F.one(), V.f_vector(ThetaElem::at_infinity(zero)));
            axpy(F, h, F.neg(F.one()), V.f_vector(ThetaElem::finite(NClass::top(s.p, s.f), zero)));
            const Subspace line = spin(B.action, h);
            const SerreWeight big(zero, std::vector<int>(s.f, s.p - 1)), triv(zero, std::vector<int>(s.f, 0));
            bool ok = steinberg.dim() == q && line.dim() == 1 &&
                      isomorphic_to_weight(restrict_module(B.action, steinberg), big) &&
                      isomorphic_to_weight(restrict_module(B.action, line), triv) &&
                      subspace_intersection(steinberg, line).dim() == 0 &&
                      steinberg.dim() + line.dim() == V.dim();
            rec.count("split checks");
            if (!ok)
                rec.fail(describe(s, r) + ": V_{1,q-1} is not V_∅ ⊕ <f_0 + f_∞ - f_{q-1}> (dims " +
                         std::to_string(steinberg.dim()) + ", " + std::to_string(line.dim()) + ")");
        }
    }
}

// ---- A1 / A2 --------------------------------------------------------------------------

inline void check_a1(const CheckParams& P, Recorder& rec) {
    if (P.r) reject("A1", "takes no r");
    auto settings = resolve("A1", P,
                            {{3, 1, Variant::EqualChar}, {5, 1, Variant::EqualChar}, {3, 2, Variant::EqualChar},
                             {3, 3, Variant::EqualChar}},
                            {81, true, true});
    for (const auto& s : settings) {
        const auto classes = nt_enumerate(s.p, s.f);
        long long n = 0;
        for (const auto& a : classes)
            for (const auto& b : classes)
                for (const auto& c : classes) {
                    ++n;
                    const CarrySet l1 = carry_set(a, c), l2 = carry_set(nt_add(a, c), b);
                    const CarrySet r1 = carry_set(a, b), r2 = carry_set(nt_add(a, b), c);
                    bool sets = (l1 | l2) == (r1 | r2);
                    bool multi = true;
                    for (int i = 0; i < s.f; ++i)
                        multi = multi && l1.contains(i) + l2.contains(i) == r1.contains(i) + r2.contains(i);
                    if (!sets || !multi)
                        rec.fail("(" + std::to_string(s.p) + "," + std::to_string(s.f) + ") a=" + a.to_string() +
                                 " b=" + b.to_string() + " c=" + c.to_string() + ": " + (sets ? "multisets" : "sets") +
                                 " differ");
                }
        rec.count("triples", n);
        rec.note("(" + std::to_string(s.p) + "," + std::to_string(s.f) + "): " + std::to_string(n) + " triples");
    }
}

inline void check_a2(const CheckParams& P, Recorder& rec) {
    if (P.r) reject("A2", "takes no r");
    auto settings = resolve("A2", P, {{3, 2, Variant::EqualChar}}, {6561, true, true});
    std::mt19937_64 rng(P.seed);
    for (const auto& s : settings) {
        const long long q = int_pow(s.p, s.f);
        std::uniform_int_distribution<long long> pick(0, q - 1);
        for (int m = 3; m <= 5; ++m) {
            const auto shapes = CarryTree::all_shapes(0, m);
            rec.count("shapes", static_cast<long long>(shapes.size()));
            for (int t = 0; t < 200; ++t) {
                std::vector<NClass> leaves;
                for (int i = 0; i < m; ++i) leaves.push_back(NClass::from_integer(s.p, s.f, pick(rng)));
                std::vector<NClass> shuffled = leaves;
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                const auto ref = carry_multiset_tree(leaves, shapes.front());
                rec.count("tuples");
                for (const auto& tree : shapes)
                    for (const auto* ls : {&leaves, &shuffled}) {
                        rec.count("tree evaluations");
                        if (carry_multiset_tree(*ls, tree) != ref) {
                            std::string w = "m=" + std::to_string(m) + " leaves";
                            for (const auto& l : *ls) w += " " + l.to_string();
                            rec.fail(w + ": carry multiset depends on the tree");
                        }
                    }
            }
        }
    }
}

// ---- A3 -------------------------------------------------------------------------------

inline void check_a3(const CheckParams& P, Recorder& rec) {
    auto settings = resolve("A3", P, {{3, 1, Variant::EqualChar}, {5, 1, Variant::EqualChar}, {3, 2, Variant::EqualChar}},
                            {27, true, true});
    for (const auto& s : settings)
        for (const NClass& r : r_values("A3", P, s, all_r(s.p, s.f))) {
            GeneratedOrder O(r);
            const auto types = admissible_types(r);
            std::map<RamType, int> class_of_type;
            for (int c = 0; c < O.num_classes(); ++c) {
                const RamType t = O.type_of_class(c);
                for (int node : O.members(c))
                    if (!(upsilon(O.label(node), r) == t))
                        rec.fail(describe(s, r) + ": class of " + O.label(node).to_string() + " mixes types " +
                                 t.to_string() + " and " + upsilon(O.label(node), r).to_string());
                if (!class_of_type.emplace(t, c).second)
                    rec.fail(describe(s, r) + ": type " + t.to_string() + " is hit by two classes");
            }
            std::set<RamType> image;
            for (const auto& [t, c] : class_of_type) image.insert(t);
            if (image != std::set<RamType>(types.begin(), types.end()))
                rec.fail(describe(s, r) + ": image of the type map has " + std::to_string(image.size()) +
                         " elements, admissible types " + std::to_string(types.size()));
            for (const auto& [t1, c1] : class_of_type)
                for (const auto& [t2, c2] : class_of_type) {
                    rec.count("class pairs");
                    if (O.leq(c1, c2) != leq_r_closed(t1, t2, r))
                        rec.fail(describe(s, r) + ": " + t1.to_string() + " vs " + t2.to_string() + ": generated " +
                                 std::to_string(O.leq(c1, c2)) + ", closed form " +
                                 std::to_string(leq_r_closed(t1, t2, r)));
                }
            const int n = static_cast<int>(types.size());
            std::vector<char> le(static_cast<std::size_t>(n) * n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) le[a * n + b] = leq_r_closed(types[a], types[b], r);
            for (int a = 0; a < n; ++a) {
                if (!le[a * n + a]) rec.fail(describe(s, r) + ": not reflexive at " + types[a].to_string());
                for (int b = 0; b < n; ++b) {
                    if (a != b && le[a * n + b] && le[b * n + a])
                        rec.fail(describe(s, r) + ": not antisymmetric at " + types[a].to_string() + ", " +
                                 types[b].to_string());
                    if (!le[a * n + b]) continue;
                    for (int c = 0; c < n; ++c)
                        if (le[b * n + c] && !le[a * n + c])
                            rec.fail(describe(s, r) + ": not transitive through " + types[b].to_string());
                }
            }
            rec.count("orders");
        }
}

// ---- A4 -------------------------------------------------------------------------------

inline void check_a4(const CheckParams& P, Recorder& rec) {
    std::vector<Setting> defaults{{3, 1, Variant::EqualChar}, {3, 2, Variant::EqualChar}, {3, 1, Variant::Witt}};
    std::vector<Setting> settings;
    if (P.p || P.f) settings = resolve("A4", P, defaults, {9, true, true});
    else if (P.variant) {
        for (const auto& s : defaults)
            if (s.variant == *P.variant) settings.push_back(s);
    } else settings = defaults;
    for (const auto& s : settings) {
        Context ctx(s);
        const RingSpec& R = *ctx.ring;
        const FieldSpec& F = R.field();
        for (const NClass& r : r_values("A4", P, s, ends_of_range(s))) {
            const RepSpace V(ctx.ring, 2, r);
            auto compare = [&](const std::string& family, const Mat2& g, const ThetaElem& x, const Vector& want) {
                rec.count("comparisons");
                if (V.act(g, V.f_vector(x)) != want)
                    rec.fail(describe(s, r) + ": " + family + " " + mat_to_string(R, g) + " on f_" + x.to_string());
            };
            for (const auto& x : V.f_labels()) {
                for (const auto& gen : *ctx.gens) {
                    const auto& t = gen.tag;
                    switch (t.kind) {
                        case GenTag::Kind::W: compare("generator", gen.m, x, closed::w_image(V, x)); break;
                        case GenTag::Kind::Torus: compare("generator", gen.m, x, closed::torus_image(V, t.x.a0, t.x.a1, x)); break;
                        case GenTag::Kind::Upper: compare("generator", gen.m, x, closed::upper_image(V, t.x, x)); break;
                        case GenTag::Kind::Diag1: compare("generator", gen.m, x, closed::diag1_image(V, t.x.a1, x)); break;
                        case GenTag::Kind::Lower1:
                            if (!x.infinite) compare("generator", gen.m, x, closed::lower_image(V, t.x.a1, x));
                            break;
                    }
                }
                for (const auto& b : R.enumerate()) compare("U2", mat_upper(R, b), x, closed::upper_image(V, b, x));
                for (Fq d0 : F.enumerate()) {
                    compare("D2", mat_diag(R, R.one(), {F.one(), d0}), x, closed::diag1_image(V, d0, x));
                    if (!x.infinite) compare("lower U2", mat_lower(R, {F.zero(), d0}), x, closed::lower_image(V, d0, x));
                }
                for (Fq a : F.enumerate())
                    for (Fq d : F.enumerate())
                        if (a.code && d.code) compare("T", mat_torus(R, a, d), x, closed::torus_image(V, a, d, x));
                for (const auto& al : R.enumerate())
                    if (R.is_unit(al)) compare("center", mat_diag(R, al, al), x, closed::center_image(V, al, x));
            }
        }
    }
}

// ---- A5 / A6 --------------------------------------------------------------------------

inline const std::vector<Setting>& generation_defaults() {
    static const std::vector<Setting> d{{3, 1, Variant::EqualChar}, {5, 1, Variant::EqualChar}, {3, 2, Variant::EqualChar}};
    return d;
}

inline void check_a5(const CheckParams& P, Recorder& rec) {
    for (const auto& s : resolve("A5", P, generation_defaults(), {9})) {
        Context ctx(s);
        for (const NClass& r : r_values("A5", P, s, generation_grid_r(s))) {
            RepBundle B = ctx.rep(2, r);
            const RepSpace& V = B.V();
            for (const auto& x : V.f_labels()) {
                Subspace got = spin(B.action, V.f_vector(x));
                Subspace want = vtheta_subspace(V, upsilon(x, r));
                rec.count("labels");
                if (!(got == want))
                    rec.fail(describe(s, r) + ": spin(f_" + x.to_string() + ") " + subspace_mismatch(got, want));
            }
        }
    }
}

/// Joint eigenspace dimensions of the two torus generators.
inline std::map<std::pair<int, int>, int> torus_characters(const Module& M) {
    const FieldSpec& F = M.field();
    const GeneratorSet& G = *M.generators();
    const int d = M.dim();
    std::map<std::pair<int, int>, int> out;
    for (Fq c1 : F.enumerate())
        for (Fq c2 : F.enumerate()) {
            if (!c1.code || !c2.code) continue;
            Matrix st(2 * d, d);
            const Matrix& A = M.op(G.torus_left());
            const Matrix& B = M.op(G.torus_right());
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    st(i, j) = i == j ? F.sub(A(i, j), c1) : A(i, j);
                    st(d + i, j) = i == j ? F.sub(B(i, j), c2) : B(i, j);
                }
            int k = kernel(M.field_ptr(), st).dim();
            if (k) out[{F.log(c1), F.log(c2)}] = k;
        }
    return out;
}

inline bool has_invertible(const FieldSpec& F, const std::vector<Matrix>& homs, std::mt19937_64& rng) {
    if (homs.empty() || homs[0].rows != homs[0].cols) return false;
    for (const auto& h : homs)
        if (inverse(F, h)) return true;
    std::uniform_int_distribution<int> coef(0, F.q() - 1);
    for (int t = 0; t < 32; ++t) {
        Matrix m(homs[0].rows, homs[0].cols);
        for (const auto& h : homs) m = mat_add(F, std::move(m), h, Fq{static_cast<std::uint16_t>(coef(rng))});
        if (inverse(F, m)) return true;
    }
    return false;
}

inline void check_a6(const CheckParams& P, Recorder& rec) {
    std::mt19937_64 rng(P.seed);
    for (const auto& s : resolve("A6", P, generation_defaults(), {9, true, true})) {
        Context ctx(s);
        for (const NClass& r : r_values("A6", P, s, generation_grid_r(s))) {
            RepBundle B = ctx.rep(2, r);
            const RepSpace& V = B.V();
            for (const NClass& beta : nt_enumerate(s.p, s.f)) {
                const std::string where = describe(s, r) + " beta=" + beta.to_string();
                const Subspace W = wbeta_subspace(V, beta), below = wbeta_below(V, beta);
                rec.count("filtration steps");
                if (!is_stable(B.action, W)) {
                    rec.fail(where + ": W_beta is not stable");
                    continue;
                }
                if (W.dim() - below.dim() != V.q() + 1) {
                    rec.fail(where + ": graded piece has dim " + std::to_string(W.dim() - below.dim()));
                    continue;
                }
                Module piece = subquotient(B.action, W, below);
                RepBundle T = ctx.rep(1, r_minus_2(r, beta));
                Module target = Module::from_action(T.action).twisted(beta);
                if (torus_characters(piece) != torus_characters(target))
                    rec.fail(where + ": torus characters differ from det^beta ⊗ V_{1,r-2beta}");
                if (has_invertible(V.field(), hom_space(piece, target), rng)) rec.count("isomorphic pieces");
                else rec.undecided(where + ": no isomorphism with det^beta ⊗ V_{1,r-2beta} found");
            }
        }
    }
}

// ---- A7 -------------------------------------------------------------------------------

/// Constituents of V_{2,r} for k = F_p read off from the odd and even listings.
inline std::vector<SerreWeight> totally_ramified_listing(int p, long long r) {
    auto cls = [&](long long v) { return ((v % (p - 1)) + (p - 1)) % (p - 1); };
    auto weight = [&](long long s, long long t) { return SerreWeight(NClass::from_integer(p, 1, cls(s)), {static_cast<int>(t)}); };
    auto sym_class = [&](long long v) { long long c = cls(v); return c == 0 ? p - 1 : c; };  // r - 2i as an integer in [1, p-1]
    std::vector<SerreWeight> out;
    auto add = [&](const SerreWeight& w, int m) { for (int i = 0; i < m; ++i) out.push_back(w); };
    // i runs over the p classes 0, 1, ..., p-1; the classes 0 and p-1 are distinct.
    if (r % 2 == 1) {
        add(weight(0, r), 3);
        add(weight(r, p - 1 - r), 3);
        for (long long i = 1; i < p - 1; ++i)
            if (i != r) add(weight(i, sym_class(r - 2 * i)), 2);
    } else if (r != p - 1) {
        add(weight(0, r), 3);
        add(weight(r, p - 1 - r), 3);
        for (long long g = 0; g < p; ++g)
            if (sym_class(r - 2 * g) == p - 1 && g != 0 && g != p - 1) {
                add(weight(g, p - 1), 1);
                add(weight(g, 0), 1);
            }
        for (long long i = 1; i < p - 1; ++i)
            if (i != r && sym_class(r - 2 * i) != p - 1) add(weight(i, sym_class(r - 2 * i)), 2);
    } else {
        const long long h = (p - 1) / 2;
        add(weight(0, p - 1), 2);
        add(weight(0, 0), 2);
        add(weight(h, p - 1), 1);
        add(weight(h, 0), 1);
        for (long long i = 1; i < p - 1; ++i)
            if (i != h) add(weight(i, sym_class(r - 2 * i)), 2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_exceptional(const RamType& t, const NClass& r) {
    return r_minus_2(r, t.gamma).is_top() && t.I.is_full();
}

/// f_{(0,gamma)} + sign f_{(inf,gamma)} - f_{(q-1,gamma)}.
inline Vector exceptional_vector(const RepSpace& V, const NClass& gamma, bool minus_infinity) {
    const FieldSpec& F = V.field();
    const NClass zero = zero_class(gamma);
    Vector h = V.f_vector(ThetaElem::finite(zero, gamma));
    axpy(F, h, minus_infinity ? F.neg(F.one()) : F.one(), V.f_vector(ThetaElem::at_infinity(gamma)));
    axpy(F, h, F.neg(F.one()), V.f_vector(ThetaElem::finite(NClass::top(gamma.p(), gamma.f()), gamma)));
    return h;
}

inline void check_a7(const CheckParams& P, Recorder& rec) {
    auto settings = resolve("A7", P, {{5, 1, Variant::EqualChar}}, {7, true, false, 5, 1, 1});
    for (const auto& s : settings) {
        Context ctx(s);
        for (const NClass& r : r_values("A7", P, s, all_r(s.p, s.f))) {
            RepBundle B = ctx.rep(2, r);
            const RepSpace& V = B.V();
            const auto cands = candidates(B, 2);
            const auto factors = flatten(socle_layers(Module::from_action(B.action), cands));
            const auto listing = totally_ramified_listing(s.p, r.to_integer());
            rec.count("r values");
            if (static_cast<int>(factors.size()) != 2 * s.p)
                rec.fail(describe(s, r) + ": " + std::to_string(factors.size()) + " constituents, expected " +
                         std::to_string(2 * s.p));
            if (factors != listing)
                rec.fail(describe(s, r) + ": constituents " + weights_to_string(factors) + ", listing " +
                         weights_to_string(listing));
            const auto types = admissible_types(r);
            for (const auto& th : types) {
                const bool exc = is_exceptional(th, r);
                Subspace sub = exc ? spin(B.action, exceptional_vector(V, th.gamma, false)) : vtheta_subspace(V, th);
                long long want = 0;
                for (const auto& t : types)
                    if (leq_r_closed(t, th, r) && !(exc && t.gamma == th.gamma && t.I.is_empty()))
                        want += type_weight(t, r).dimension();
                const std::string name = exc ? "V'" + th.to_string() : "V" + th.to_string();
                rec.count(exc ? "exceptional submodules" : "type submodules");
                auto prof = cosocle_profile(restrict_module(B.action, sub), cands);
                if (!is_irreducible_cosocle(prof, type_weight(th, r)))
                    rec.fail(describe(s, r) + ": cosocle of " + name + " is " + profile_to_string(prof) + ", expected " +
                             type_weight(th, r).to_string());
                if (sub.dim() != want)
                    rec.fail(describe(s, r) + ": dim " + name + " = " + std::to_string(sub.dim()) +
                             ", constituent bookkeeping gives " + std::to_string(want));
                if (exc) {
                    Subspace alt = spin(B.action, exceptional_vector(V, th.gamma, true));
                    rec.note(describe(s, r) + ": " + name + " has dim " + std::to_string(sub.dim()) +
                             "; with -f_inf instead the span has dim " + std::to_string(alt.dim()) + ", cosocle " +
                             profile_to_string(cosocle_profile(restrict_module(B.action, alt), cands)));
                }
            }
        }
    }
}

// ---- A8 -------------------------------------------------------------------------------

inline void exceptional_extension(const Setting& s, const RepBundle& B, const std::vector<RamType>& types, Recorder& rec) {
    const RepSpace& V = B.V();
    const NClass& r = B.r();
    const CarrySet full = CarrySet::full(s.f);
    for (const NClass& g : nt_enumerate(s.p, s.f)) {
        if (!r_minus_2(r, g).is_top()) continue;
        const Subspace below = wbeta_below(V, g);
        auto image_dim = [&](const Subspace& M) { return subspace_sum(M, below).dim() - below.dim(); };
        const Subspace printed = spin(B.action, exceptional_vector(V, g, false));
        const Subspace flipped = spin(B.action, exceptional_vector(V, g, true));
        for (int m = 0; m < s.f; ++m) {
            const NClass pm = NClass::p_power(s.p, s.f, m);
            if (!nt_leq(pm, g)) continue;
            const NClass lower = nt_dotminus(g, pm);
            const std::string where = describe(s, r) + " gamma=" + g.to_string() + " m=" + std::to_string(m);
            rec.count("exceptional cases");
            // Any submodule with one-dimensional image would do; test both candidate generators.
            bool found = false;
            for (const auto* M : {&printed, &flipped}) {
                const std::string gen = M == &printed ? "f_(0,g)+f_(inf,g)-f_(q-1,g)" : "f_(0,g)-f_(inf,g)-f_(q-1,g)";
                if (image_dim(*M) != 1) {
                    rec.note(where + ": spin(" + gen + ") has image dim " + std::to_string(image_dim(*M)) +
                             " modulo W_{<gamma}");
                    continue;
                }
                found = true;
                const Subspace target = wbeta_subspace(V, lower);
                if (!target.subset_of(*M)) {
                    rec.fail(where + ": M = spin(" + gen + ") has one-dimensional image but dim " +
                             std::to_string(M->dim()) + " and does not contain W_" + lower.to_string() + " (dim " +
                             std::to_string(target.dim()) + ")");
                    continue;
                }
                std::vector<RamType> ns;
                for (const auto& t : types)
                    if (nt_lt(t.gamma, g) && !(t.I == full && t.gamma == lower)) ns.push_back(t);
                const Subspace N = vtheta_sum(V, ns);
                const RamType top{full, g}, sub{full, lower};
                Module E = subquotient(B.action, *M, N);
                const long long want = type_weight(top, r).dimension() + type_weight(sub, r).dimension();
                if (E.dim() != want) {
                    rec.fail(where + ": M/N has dim " + std::to_string(E.dim()) + ", expected " + std::to_string(want));
                    continue;
                }
                Module L = weight_module(type_weight(top, r), V.field_ptr(), B.gens);
                const int iso = type_weight(top, r) == type_weight(sub, r);
                if (static_cast<int>(hom_space(L, E).size()) != iso) rec.fail(where + ": M/N splits");
            }
            if (!found) rec.fail(where + ": no candidate generator has one-dimensional image modulo W_{<gamma}");
        }
    }
}

inline void check_a8(const CheckParams& P, Recorder& rec) {
    auto settings = resolve("A8", P, {{5, 1, Variant::EqualChar}, {3, 2, Variant::EqualChar}}, {9});
    for (const auto& s : settings) {
        Context ctx(s);
        for (const NClass& r : r_values("A8", P, s, all_r(s.p, s.f))) {
            RepBundle B = ctx.rep(2, r);
            const RepSpace& V = B.V();
            const auto types = admissible_types(r);
            const auto cands = candidates(B, 2);
            GeneratedOrder O(r);
            std::map<std::pair<RamType, RamType>, int> relation_witness;
            for (const auto& e : O.edges()) {
                if (e.relation == 4 || e.relation == 6 || e.relation == 7) continue;
                relation_witness.emplace(std::make_pair(upsilon(O.label(e.from), r), upsilon(O.label(e.to), r)),
                                         e.relation);
            }
            for (auto [hi, lo] : covering_pairs(types, r)) {
                const RamType& th = types[hi];
                const RamType& tp = types[lo];
                const std::string where = describe(s, r) + " " + tp.to_string() + " < " + th.to_string();
                rec.count("adjacent pairs");
                std::vector<RamType> ns;
                for (const auto& t : types)
                    if (leq_r_closed(t, th, r) && !(t == th) && !(t == tp)) ns.push_back(t);
                Module E = subquotient(B.action, vtheta_subspace(V, th), vtheta_sum(V, ns));
                const SerreWeight wt = type_weight(th, r), wp = type_weight(tp, r);
                if (E.dim() != wt.dimension() + wp.dimension()) {
                    rec.fail(where + ": E has dim " + std::to_string(E.dim()));
                    continue;
                }
                const int iso = wt == wp;
                const int h = static_cast<int>(hom_space(weight_module(wt, V.field_ptr(), B.gens), E).size());
                if (h != iso && h != 1 + iso) {
                    rec.fail(where + ": dim Hom(top, E) = " + std::to_string(h));
                    continue;
                }
                const bool split = h == 1 + iso;
                const bool expected = th.gamma == tp.gamma && r_minus_2(r, th.gamma).is_top();
                rec.count(split ? "split" : "non-split");
                if (split != expected)
                    rec.fail(where + ": extension " + (split ? "splits" : "does not split") + ", expected the opposite");
                if (!relation_witness.count({th, tp}))
                    rec.undecided(where + ": no generating relation links representatives of the two types");
            }
            exceptional_extension(s, B, types, rec);
        }
    }
}

// ---- A9 -------------------------------------------------------------------------------

inline void check_a9(const CheckParams& P, Recorder& rec) {
    auto settings = resolve("A9", P, {{7, 1, Variant::Witt}}, {9, false, true, 3});
    for (const auto& s : settings) {
        Context ctx(s);
        for (const NClass& r : r_values("A9", P, s, {NClass::from_integer(s.p, s.f, 3)})) {
            if (!is_generic(r)) reject("A9", "r must have all digits in [1, p-2]");
            RepBundle B = ctx.rep(2, r);
            const RepSpace& V = B.V();
            const auto thetas = theta1_enumerate(s.f);
            std::vector<SerreWeight> sigmas;
            for (const auto& t : thetas) sigmas.push_back(unram_sigma(t, r));
            auto ws = jh_multiset(2, {zero_class(r), r});
            ws.insert(ws.end(), sigmas.begin(), sigmas.end());
            const auto cands = weight_models(ws, V.field_ptr(), B.gens);

            const Subspace Mchi = spin(B.action, m_chi_generator(V));
            const auto factors = flatten(socle_layers(restrict_module(B.action, Mchi), cands));
            std::sort(sigmas.begin(), sigmas.end());
            rec.count("index set size", static_cast<long long>(thetas.size()));
            rec.note(describe(s, r) + ": dim M(chi) = " + std::to_string(Mchi.dim()) + ", constituents " +
                     weights_to_string(factors));
            if (factors != sigmas)
                rec.fail(describe(s, r) + ": M(chi) has constituents " + weights_to_string(factors) + ", expected " +
                         weights_to_string(sigmas));
            if (distinct_weights(factors).size() != factors.size())
                rec.fail(describe(s, r) + ": M(chi) is not multiplicity-free");

            std::vector<Subspace> Ms;
            for (const auto& t : thetas) Ms.push_back(spin(B.action, f_theta_vector(V, t)));
            for (std::size_t a = 0; a < thetas.size(); ++a) {
                if (!Ms[a].subset_of(Mchi)) rec.fail(describe(s, r) + ": M" + thetas[a].to_string() + " is not in M(chi)");
                auto prof = cosocle_profile(restrict_module(B.action, Ms[a]), cands);
                rec.count("cosocles");
                if (!is_irreducible_cosocle(prof, unram_sigma(thetas[a], r)))
                    rec.fail(describe(s, r) + ": cosocle of M" + thetas[a].to_string() + " is " + profile_to_string(prof) +
                             ", expected " + unram_sigma(thetas[a], r).to_string());
                for (std::size_t b = 0; b < thetas.size(); ++b) {
                    rec.count("inclusions");
                    if (Ms[b].subset_of(Ms[a]) != unram_leq(thetas[b], thetas[a]))
                        rec.fail(describe(s, r) + ": M" + thetas[b].to_string() + " ⊆ M" + thetas[a].to_string() + " is " +
                                 (Ms[b].subset_of(Ms[a]) ? "true" : "false") + " against the index order");
                }
            }
            const UnramTheta top{CarrySet::empty(s.f), CarrySet::full(s.f)};
            auto it = std::find(thetas.begin(), thetas.end(), top);
            if (it != thetas.end() && !(Ms[it - thetas.begin()] == Mchi))
                rec.fail(describe(s, r) + ": M" + top.to_string() + " differs from M(chi)");
        }
    }
}

// ---- A10 ------------------------------------------------------------------------------

inline void check_a10(const CheckParams& P, Recorder& rec) {
    auto settings = resolve("A10", P, {{3, 2, Variant::EqualChar}}, {9, true, false, 3, 2});
    for (const auto& s : settings) {
        Context ctx(s);
        const NClass r_default = NClass::from_integer(s.p, s.f, (int_pow(s.p, s.f) - 1) / (s.p - 1));
        for (const NClass& r : r_values("A10", P, s, {r_default})) {
            if (!is_generic(r)) reject("A10", "r must have all digits in [1, p-2]");
            RepBundle B = ctx.rep(2, r);
            const RepSpace& V = B.V();
            const SerreWeight Fr(zero_class(r), r.digits());
            const auto types = admissible_types(r);
            std::vector<RamType> below;
            for (int j : {0, 1}) {
                const CarrySet J = CarrySet::singleton(s.f, j);
                const RamType th{J, gamma_of_J(J, r)};
                if (!std::binary_search(types.begin(), types.end(), th)) {
                    rec.fail(describe(s, r) + ": " + th.to_string() + " is not an admissible type");
                    continue;
                }
                if (!(type_weight(th, r) == Fr))
                    rec.fail(describe(s, r) + ": L" + th.to_string() + " = " + type_weight(th, r).to_string() +
                             ", expected " + Fr.to_string());
                for (const auto& t : types)
                    if (leq_r_closed(t, th, r) && !(t == th)) below.push_back(t);
            }
            const Subspace M = vtheta_sum(V, below);
            Module Q = quotient_module(B.action, M);
            const int h = static_cast<int>(hom_space(weight_module(Fr, V.field_ptr(), B.gens), Q).size());
            rec.count("hom dimension", h);
            rec.note(describe(s, r) + ": dim M = " + std::to_string(M.dim()) + ", dim Hom(" + Fr.to_string() +
                     ", V/M) = " + std::to_string(h));
            if (h < 2) rec.fail(describe(s, r) + ": dim Hom(" + Fr.to_string() + ", V/M) = " + std::to_string(h));
        }
    }
}

// ---- A11 ------------------------------------------------------------------------------

inline void compare_layers(const std::string& where, const std::string& kind,
                           const std::vector<std::vector<SerreWeight>>& got, const std::vector<std::vector<SerreWeight>>& want,
                           Recorder& rec) {
    if (got.size() != want.size())
        rec.fail(where + ": " + kind + " filtration has " + std::to_string(got.size()) + " layers, expected " +
                 std::to_string(want.size()));
    for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i)
        if (got[i] != want[i]) {
            rec.fail(where + ": " + kind + " layer " + std::to_string(i) + " is " + weights_to_string(got[i]) +
                     ", expected " + weights_to_string(want[i]));
            return;
        }
}

inline void check_a11(const CheckParams& P, Recorder& rec) {
    auto settings = resolve("A11", P, {{3, 1, Variant::EqualChar}, {5, 1, Variant::EqualChar}}, {9});
    for (const auto& s : settings) {
        Context ctx(s);
        for (const NClass& r : r_values("A11", P, s, all_r(s.p, s.f))) {
            const std::string where = describe(s, r);
            RepBundle B = ctx.rep(2, r);
            const GammaGraph G = gamma_graph(r);
            rec.count("r values");
            bool reachable = true;
            for (std::size_t v = 0; v < G.vertices.size(); ++v)
                if (G.level_up[v] < 0 || G.level_down[v] < 0) {
                    rec.fail(where + ": vertex " + G.vertices[v].to_string() + " is not on a path from top to bottom");
                    reachable = false;
                }
            if (!reachable) continue;
            const int L = G.length();
            std::vector<std::vector<SerreWeight>> soc(L + 1), rad(L + 1);
            for (std::size_t v = 0; v < G.vertices.size(); ++v) {
                soc[G.level_down[v]].push_back(type_weight(G.vertices[v], r));
                rad[G.level_up[v]].push_back(type_weight(G.vertices[v], r));
            }
            for (auto& l : soc) std::sort(l.begin(), l.end());
            for (auto& l : rad) std::sort(l.begin(), l.end());
            const Module M = Module::from_action(B.action);
            const auto cands = candidates(B, 2);
            compare_layers(where, "socle", socle_layers(M, cands), soc, rec);
            compare_layers(where, "radical", radical_layers(M, cands), rad, rec);
        }
    }
}

// ---- A12 ------------------------------------------------------------------------------

inline void check_a12(const CheckParams& P, Recorder& rec) {
    for (const auto& s : resolve("A12", P, generation_defaults(), {9})) {
        Context ctx(s);
        const long long q = int_pow(s.p, s.f);
        for (const NClass& r : r_values("A12", P, s, generation_grid_r(s))) {
            const std::string where = describe(s, r);
            const NClass zero = zero_class(r);
            const auto jh2 = jh_multiset(2, {zero, r});
            rec.count("r values");
            if (total_dim(jh2) != (q + 1) * q)
                rec.fail(where + ": JH(2) has total dim " + std::to_string(total_dim(jh2)));
            const auto jh3 = jh_multiset(3, {zero, r});
            if (total_dim(jh3) != (q + 1) * q * q)
                rec.fail(where + ": JH(3) has total dim " + std::to_string(total_dim(jh3)));

            RepBundle B = ctx.rep(2, r);
            const RepSpace& V = B.V();
            const auto cands = candidates(B, 2);
            std::vector<SerreWeight> assembled;
            for (const NClass& beta : nt_enumerate(s.p, s.f)) {
                Module piece = subquotient(B.action, wbeta_subspace(V, beta), wbeta_below(V, beta));
                const auto layered = flatten(socle_layers(piece, cands));
                auto chopped = composition_factors(piece, P.seed + beta.to_integer());
                std::vector<SerreWeight> predicted;
                const NClass rest = r_minus_2(r, beta);
                for (const CarrySet& I : admissible_sets(rest)) predicted.push_back(sigma_J(I, rest).twisted(beta));
                std::sort(predicted.begin(), predicted.end());
                rec.count("graded pieces");
                if (layered != predicted || chopped != predicted)
                    rec.fail(where + " beta=" + beta.to_string() + ": graded piece " + weights_to_string(layered) +
                             " (chop " + weights_to_string(chopped) + "), predicted " + weights_to_string(predicted));
                assembled.insert(assembled.end(), layered.begin(), layered.end());
            }
            std::sort(assembled.begin(), assembled.end());
            if (assembled != jh2)
                rec.fail(where + ": filtration gives " + weights_to_string(assembled) + ", JH(2) " + weights_to_string(jh2));
            GeneratedOrder O(r);
            std::vector<SerreWeight> by_class;
            for (int c = 0; c < O.num_classes(); ++c) by_class.push_back(type_weight(O.type_of_class(c), r));
            std::sort(by_class.begin(), by_class.end());
            if (by_class != jh2)
                rec.fail(where + ": weights of the classes " + weights_to_string(by_class) + " differ from JH(2)");
        }
    }
}

struct CheckEntry {
    std::string id;
    std::string title;
    std::function<void(const CheckParams&, Recorder&)> run;
};

inline const std::vector<CheckEntry>& registry() {
    static const std::vector<CheckEntry> r{
        {"A0", "tame principal series generators and the split case r = q-1", check_a0},
        {"A1", "triple carry identity as sets and multisets", check_a1},
        {"A2", "carry multisets do not depend on the summation tree", check_a2},
        {"A3", "generated order on labels equals the closed order on types", check_a3},
        {"A4", "action on the f-basis agrees with the closed forms", check_a4},
        {"A5", "each f-basis vector generates V of its type", check_a5},
        {"A6", "W_beta filtration: stability, graded dimension, torus characters", check_a6},
        {"A7", "totally ramified constituents and irreducible cosocles", check_a7},
        {"A8", "adjacent-type extensions split exactly in the exceptional case", check_a8},
        {"A9", "unramified submodule M(chi) and its index order", check_a9},
        {"A10", "F(r,0) occurs twice in the socle of a quotient", check_a10},
        {"A11", "socle and radical layers follow the longest-path levels", check_a11},
        {"A12", "Jordan-Holder bookkeeping", check_a12},
    };
    return r;
}

}  // namespace verify_detail

inline std::vector<std::string> check_ids() {
    std::vector<std::string> out;
    for (const auto& e : verify_detail::registry()) out.push_back(e.id);
    return out;
}

inline std::string check_title(const std::string& id) {
    for (const auto& e : verify_detail::registry())
        if (e.id == id) return e.title;
    throw std::invalid_argument("unknown check " + id);
}

/// Runs one check. Parameter errors throw std::invalid_argument before any work is done.
inline CheckReport run_check(const std::string& id, const CheckParams& params) {
    const auto& reg = verify_detail::registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.id == id; });
    if (it == reg.end()) throw std::invalid_argument("unknown check " + id);
    CheckReport rep;
    rep.check_id = id;
    rep.title = it->title;
    rep.params = params;
    const auto start = std::chrono::steady_clock::now();
    {
        verify_detail::Recorder rec(rep);
        it->run(params, rec);
    }
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace psgl2
