#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "psgl2/nmonoid.hpp"

namespace psgl2 {

/**
 * F(a1, a2) = det^twist ⊗ (⊗_i Sym^{sym_i} twisted by the i-th Frobenius).
 *
 * The twist only matters as a character of k^×, so class q-1 is stored as 0.
 */
class SerreWeight {
public:
    SerreWeight() = default;
    SerreWeight(NClass twist, std::vector<int> sym) : twist_(normalize(twist)), sym_(std::move(sym)) {
        if (static_cast<int>(sym_.size()) != twist_.f()) throw std::invalid_argument("SerreWeight: digit count");
        for (int t : sym_)
            if (t < 0 || t > twist_.p() - 1) throw std::invalid_argument("SerreWeight: sym digit out of range");
    }

    const NClass& twist() const { return twist_; }
    const std::vector<int>& sym() const { return sym_; }
    int p() const { return twist_.p(); }
    int f() const { return twist_.f(); }

    long long dimension() const {
        long long d = 1;
        for (int t : sym_) d *= t + 1;
        return d;
    }

    long long sym_integer() const {
        long long v = 0;
        for (int i = f() - 1; i >= 0; --i) v = v * p() + sym_[i];
        return v;
    }

    long long a2() const { return twist_.to_integer(); }
    long long a1() const { return a2() + sym_integer(); }

    /// Tensor with det^s.
    SerreWeight twisted(const NClass& s) const { return SerreWeight(nt_add(twist_, s), sym_); }

    std::string to_string() const { return "F(" + std::to_string(a1()) + "," + std::to_string(a2()) + ")"; }

    friend bool operator==(const SerreWeight&, const SerreWeight&) = default;
    friend bool operator<(const SerreWeight& a, const SerreWeight& b) {
        return std::make_tuple(a.twist_.to_integer(), a.sym_) < std::make_tuple(b.twist_.to_integer(), b.sym_);
    }

private:
    static NClass normalize(const NClass& t) { return t.is_top() ? NClass::zero(t.p(), t.f()) : t; }

    NClass twist_;
    std::vector<int> sym_;
};

/// Type (I, gamma) labelling a constituent of V_{2,r}.
struct RamType {
    CarrySet I;
    NClass gamma;
    friend bool operator==(const RamType&, const RamType&) = default;
    friend bool operator<(const RamType& a, const RamType& b) {
        return std::make_pair(a.gamma.to_integer(), a.I.bits()) < std::make_pair(b.gamma.to_integer(), b.I.bits());
    }
    std::string to_string() const { return "(" + I.to_string() + "," + gamma.to_string() + ")"; }
};

/// Label (j0, j1) of the f-basis; j0 may be infinite. For n = 1 only j0 is used.
struct ThetaElem {
    bool infinite = false;
    NClass j0;
    NClass j1;

    static ThetaElem finite(const NClass& j0, const NClass& j1) { return {false, j0, j1}; }
    static ThetaElem at_infinity(const NClass& j1) { return {true, NClass::zero(j1.p(), j1.f()), j1}; }

    friend bool operator==(const ThetaElem&, const ThetaElem&) = default;
    std::string to_string() const {
        return "(" + (infinite ? std::string("inf") : j0.to_string()) + "," + j1.to_string() + ")";
    }
};

/// det^s ⊗ chi_r with r a nonzero class.
struct BorelCharacter {
    NClass s;
    NClass r;
};

inline void require_nonzero_r(const NClass& r) {
    if (r.is_zero()) throw std::invalid_argument("character exponent r must be a nonzero class");
}

/// r - 2 gamma as a nonzero class.
inline NClass r_minus_2(const NClass& r, const NClass& gamma) { return nt_sub_group(r, nt_double(gamma)); }

/// Digits of s_J(r).
inline std::vector<int> s_digits(const CarrySet& J, const NClass& r) {
    std::vector<int> s(r.f(), 0);
    for (int i = 0; i < r.f(); ++i) {
        if (!J.contains(i)) continue;
        s[i] = J.contains(i - 1) ? r.digit(i) : r.digit(i) + 1;
    }
    return s;
}

/// Digits of t_J(r).
inline std::vector<int> t_digits(const CarrySet& J, const NClass& r) {
    const int p = r.p();
    std::vector<int> t(r.f(), 0);
    for (int i = 0; i < r.f(); ++i) {
        const bool prev = J.contains(i - 1), cur = J.contains(i);
        if (!prev && !cur) t[i] = r.digit(i);
        else if (prev && !cur) t[i] = r.digit(i) - 1;
        else if (!prev && cur) t[i] = p - 2 - r.digit(i);
        else t[i] = p - 1 - r.digit(i);
    }
    return t;
}

inline NClass s_class(const CarrySet& J, const NClass& r) {
    auto s = s_digits(J, r);
    long long v = 0;
    for (int i = r.f() - 1; i >= 0; --i) v = v * r.p() + s[i];
    return NClass::from_integer(r.p(), r.f(), v);
}

/// sigma_J(r) = det^{s_J(r)} ⊗ ⊗_i Sym^{t_{J,i}(r)}; requires J r-admissible.
inline SerreWeight sigma_J(const CarrySet& J, const NClass& r) {
    require_nonzero_r(r);
    if (!is_admissible(J, r)) throw std::domain_error("sigma_J: J is not admissible for r");
    return SerreWeight(s_class(J, r), t_digits(J, r));
}

/// L(I, gamma) = det^gamma ⊗ sigma_I(r - 2 gamma).
inline SerreWeight type_weight(const RamType& t, const NClass& r) {
    return sigma_J(t.I, r_minus_2(r, t.gamma)).twisted(t.gamma);
}

/// The type of the class of (j0, j1).
inline RamType upsilon(const ThetaElem& x, const NClass& r) {
    require_nonzero_r(r);
    if (x.infinite || x.j0.is_zero()) return {CarrySet::empty(r.f()), x.j1};
    NClass rest = nt_sub_group(r_minus_2(r, x.j1), x.j0);
    return {carry_set(x.j0, rest), x.j1};
}

/// All (I, gamma) with I admissible for r - 2 gamma, sorted.
inline std::vector<RamType> admissible_types(const NClass& r) {
    std::vector<RamType> out;
    for (const NClass& g : nt_enumerate(r.p(), r.f()))
        for (const CarrySet& I : admissible_sets(r_minus_2(r, g))) out.push_back({I, g});
    std::sort(out.begin(), out.end());
    return out;
}

/// The order on admissible types in closed form.
inline bool leq_r_closed(const RamType& a, const RamType& b, const NClass& r) {
    if (!nt_leq(a.gamma, b.gamma)) return false;
    NClass diff = nt_digit_sub(b.gamma, a.gamma);
    CarrySet allowed = b.I | carry_set(r_minus_2(r, b.gamma), nt_double(diff)) | carry_set(diff, diff);
    return a.I.subset_of(allowed);
}

/**
 * The preorder on labels generated by the seven elementary relations,
 * resolved into classes by mutual reachability.
 */
class GeneratedOrder {
public:
    struct Edge {
        int from;  // larger label
        int to;    // smaller label
        int relation;
    };

    explicit GeneratedOrder(const NClass& r) : r_(r), p_(r.p()), f_(r.f()), q_(static_cast<int>(r.q())) {
        require_nonzero_r(r);
        const int n = (q_ + 1) * q_;
        build_edges();
        std::vector<std::vector<int>> down(n);
        for (const auto& e : edges_) down[e.from].push_back(e.to);
        reach_.assign(static_cast<std::size_t>(n) * n, 0);
        for (int s = 0; s < n; ++s) {
            std::vector<int> stack{s};
            reach_[idx(s, s)] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : down[u])
                    if (!reach_[idx(s, v)]) {
                        reach_[idx(s, v)] = 1;
                        stack.push_back(v);
                    }
            }
        }
        class_of_.assign(n, -1);
        for (int a = 0; a < n; ++a) {
            if (class_of_[a] >= 0) continue;
            const int c = static_cast<int>(reps_.size());
            reps_.push_back(a);
            members_.emplace_back();
            for (int b = a; b < n; ++b)
                if (class_of_[b] < 0 && reach_[idx(a, b)] && reach_[idx(b, a)]) {
                    class_of_[b] = c;
                    members_[c].push_back(b);
                }
        }
    }

    int num_nodes() const { return (q_ + 1) * q_; }
    int num_classes() const { return static_cast<int>(reps_.size()); }

    int node(const ThetaElem& x) const {
        int j0 = x.infinite ? q_ : static_cast<int>(x.j0.to_integer());
        return j0 * q_ + static_cast<int>(x.j1.to_integer());
    }

    ThetaElem label(int node) const {
        int j0 = node / q_, j1 = node % q_;
        NClass c1 = NClass::from_integer(p_, f_, j1);
        if (j0 == q_) return ThetaElem::at_infinity(c1);
        return ThetaElem::finite(NClass::from_integer(p_, f_, j0), c1);
    }

    int class_of(const ThetaElem& x) const { return class_of_[node(x)]; }
    int class_of_node(int node) const { return class_of_[node]; }
    const std::vector<int>& members(int c) const { return members_[c]; }

    /// x <= y for labels.
    bool leq_nodes(int x, int y) const { return reach_[idx(y, x)] != 0; }
    /// Class order.
    bool leq(int c1, int c2) const { return leq_nodes(reps_[c1], reps_[c2]); }

    RamType type_of_class(int c) const { return upsilon(label(reps_[c]), r_); }

    const std::vector<Edge>& edges() const { return edges_; }
    const NClass& r() const { return r_; }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * num_nodes() + b; }

    void add(const ThetaElem& larger, const ThetaElem& smaller, int rel) {
        edges_.push_back({node(larger), node(smaller), rel});
    }

    void build_edges() {
        const auto classes = nt_enumerate(p_, f_);
        for (const NClass& j1 : classes) {
            const NClass rem = r_minus_2(r_, j1);
            const ThetaElem inf = ThetaElem::at_infinity(j1);
            for (const NClass& j0 : classes) {
                const ThetaElem x = ThetaElem::finite(j0, j1);
                for (int m = 0; m < f_; ++m) {
                    const NClass pm = NClass::p_power(p_, f_, m);
                    if (nt_leq(pm, j0)) add(x, ThetaElem::finite(nt_dotminus(j0, pm), j1), 1);
                    if (nt_leq(pm, j1)) {
                        add(x, ThetaElem::finite(j0, nt_dotminus(j1, pm)), 2);
                        add(x, ThetaElem::finite(nt_add(j0, pm), nt_dotminus(j1, pm)), 3);
                    }
                }
                if (!j0.is_zero()) add(x, ThetaElem::finite(nt_sub_group(rem, j0), j1), 4);
            }
            for (int m = 0; m < f_; ++m) {
                const NClass pm = NClass::p_power(p_, f_, m);
                if (nt_leq(pm, j1)) add(inf, ThetaElem::finite(rem, nt_dotminus(j1, pm)), 5);
                if (nt_leq(pm, rem)) add(inf, ThetaElem::finite(nt_dotminus(rem, pm), j1), 6);
            }
            const ThetaElem zero = ThetaElem::finite(NClass::zero(p_, f_), j1);
            add(zero, inf, 7);
            add(inf, zero, 7);
        }
    }

    NClass r_;
    int p_, f_, q_;
    std::vector<Edge> edges_;
    std::vector<char> reach_;
    std::vector<int> class_of_;
    std::vector<int> reps_;
    std::vector<std::vector<int>> members_;
};

/// Jordan-Holder constituents of det^s ⊗ V_{n,r}, sorted.
inline std::vector<SerreWeight> jh_multiset(int n, const BorelCharacter& chi) {
    if (n < 1) throw std::invalid_argument("jh_multiset: n must be >= 1");
    require_nonzero_r(chi.r);
    std::map<std::tuple<int, long long, long long>, std::vector<SerreWeight>> memo;
    const auto classes = nt_enumerate(chi.r.p(), chi.r.f());
    std::function<const std::vector<SerreWeight>&(int, const NClass&, const NClass&)> rec =
        [&](int m, const NClass& s, const NClass& r) -> const std::vector<SerreWeight>& {
        auto key = std::make_tuple(m, s.to_integer() % (s.q() - 1), r.to_integer());
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<SerreWeight> out;
        if (m == 1) {
            for (const CarrySet& I : admissible_sets(r)) out.push_back(sigma_J(I, r).twisted(s));
        } else {
            for (const NClass& b : classes) {
                const auto& sub = rec(m - 1, nt_add(s, b), r_minus_2(r, b));
                out.insert(out.end(), sub.begin(), sub.end());
            }
        }
        std::sort(out.begin(), out.end());
        return memo.emplace(key, std::move(out)).first->second;
    };
    return rec(n, chi.s, chi.r);
}

/// Distinct weights of a multiset, in sorted order.
inline std::vector<SerreWeight> distinct_weights(std::vector<SerreWeight> ws) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
}

/**
 * Hasse diagram of the admissible types with the exceptional rewiring at
 * gamma with r - 2 gamma = q - 1, plus the two longest-path level functions.
 */
struct GammaGraph {
    NClass r;
    std::vector<RamType> vertices;
    std::vector<std::pair<int, int>> edges;  // (from larger, to smaller)
    std::vector<int> level_up;               // longest path from the maximum
    std::vector<int> level_down;             // longest path to the minimum
    std::vector<std::pair<int, int>> covers; // plain Hasse edges before rewiring

    int index(const RamType& t) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), t);
        if (it == vertices.end() || !(*it == t)) throw std::invalid_argument("GammaGraph: not a vertex");
        return static_cast<int>(it - vertices.begin());
    }
    int top() const { return index({CarrySet::full(r.f()), NClass::top(r.p(), r.f())}); }
    int bottom() const { return index({CarrySet::empty(r.f()), NClass::zero(r.p(), r.f())}); }
    int length() const { return level_up[bottom()]; }
};

inline std::vector<std::pair<int, int>> covering_pairs(const std::vector<RamType>& v, const NClass& r) {
    const int n = static_cast<int>(v.size());
    std::vector<char> lt(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) lt[a * n + b] = a != b && leq_r_closed(v[a], v[b], r);
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!lt[a * n + b]) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (lt[a * n + c] && lt[c * n + b]) cover = false;
            if (cover) out.emplace_back(b, a);
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline GammaGraph gamma_graph(const NClass& r) {
    require_nonzero_r(r);
    GammaGraph G;
    G.r = r;
    G.vertices = admissible_types(r);
    G.covers = covering_pairs(G.vertices, r);
    const int p = r.p(), f = r.f();
    const CarrySet full = CarrySet::full(f), none = CarrySet::empty(f);
    std::vector<std::pair<int, int>> edges;
    for (auto [from, to] : G.covers) {
        const RamType& a = G.vertices[from];
        const RamType& b = G.vertices[to];
        bool exceptional = a.gamma == b.gamma && r_minus_2(r, a.gamma).is_top() && a.I == full && b.I == none;
        if (!exceptional) edges.emplace_back(from, to);
    }
    for (const NClass& g : nt_enumerate(p, f)) {
        if (!r_minus_2(r, g).is_top()) continue;
        for (int m = 0; m < f; ++m) {
            NClass pm = NClass::p_power(p, f, m);
            if (nt_leq(pm, g)) edges.emplace_back(G.index({full, g}), G.index({full, nt_dotminus(g, pm)}));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    G.edges = edges;

    const int n = static_cast<int>(G.vertices.size());
    std::vector<std::vector<int>> out(n), in(n);
    for (auto [a, b] : G.edges) {
        out[a].push_back(b);
        in[b].push_back(a);
    }
    // Kahn order; edges always decrease the order so the graph is acyclic.
    std::vector<int> indeg(n, 0), order;
    for (auto [a, b] : G.edges) ++indeg[b];
    std::queue<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        order.push_back(v);
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) throw std::logic_error("gamma_graph: cycle");
    const int top = G.top(), bottom = G.bottom();
    G.level_up.assign(n, -1);
    G.level_up[top] = 0;
    for (int v : order)
        if (G.level_up[v] >= 0)
            for (int w : out[v]) G.level_up[w] = std::max(G.level_up[w], G.level_up[v] + 1);
    G.level_down.assign(n, -1);
    G.level_down[bottom] = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (G.level_down[*it] >= 0)
            for (int u : in[*it]) G.level_down[u] = std::max(G.level_down[u], G.level_down[*it] + 1);
    return G;
}

/// Element (J, I) of the unramified index poset, with J ∩ (I - 1) empty.
struct UnramTheta {
    CarrySet J;
    CarrySet I;
    friend bool operator==(const UnramTheta&, const UnramTheta&) = default;
    friend bool operator<(const UnramTheta& a, const UnramTheta& b) {
        return std::make_pair(a.I.bits(), a.J.bits()) < std::make_pair(b.I.bits(), b.J.bits());
    }
    std::string to_string() const { return "(" + J.to_string() + "," + I.to_string() + ")"; }
};

inline std::vector<UnramTheta> theta1_enumerate(int f) {
    std::vector<UnramTheta> out;
    const std::uint32_t full = CarrySet::full_mask(f);
    for (std::uint32_t i = 0; i <= full; ++i)
        for (std::uint32_t j = 0; j <= full; ++j) {
            CarrySet I(f, i), J(f, j);
            if ((J & I.shifted(1)).is_empty()) out.push_back({J, I});
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool unram_leq(const UnramTheta& a, const UnramTheta& b) {
    return a.I.subset_of(b.I) && a.J.subset_of(b.J | (b.I - a.I).shifted(1));
}

inline NClass unram_r(const UnramTheta& t, const NClass& r) {
    return r_minus_2(r, p_power_sum(r.p(), t.I));
}

inline SerreWeight unram_sigma(const UnramTheta& t, const NClass& r) {
    return sigma_J(t.J, unram_r(t, r)).twisted(p_power_sum(r.p(), t.I));
}

inline ThetaElem unram_f_theta_index(const UnramTheta& t, const NClass& r) {
    return ThetaElem::finite(s_class(t.J, unram_r(t, r)), p_power_sum(r.p(), t.I));
}

/// Digit recipe gamma(J) for generic r, evaluated as an integer mod q - 1.
inline NClass gamma_of_J(const CarrySet& J, const NClass& r) {
    if (J.is_empty()) throw std::domain_error("gamma_of_J: J must be nonempty");
    const int p = r.p(), f = r.f();
    for (int i = 0; i < f; ++i)
        if (r.digit(i) < 1 || r.digit(i) > p - 2) throw std::domain_error("gamma_of_J: r is not generic");
    long long v = 0;
    for (int i = f - 1; i >= 0; --i) {
        const bool prev = J.contains(i - 1), cur = J.contains(i);
        int d = !prev && !cur ? 0 : (prev && !cur ? -1 : (!prev ? r.digit(i) + 1 : r.digit(i)));
        v = v * p + d;
    }
    const long long q1 = r.q() - 1;
    v = ((v % q1) + q1) % q1;
    return NClass::from_integer(p, f, v == 0 ? q1 : v);
}

}  // namespace psgl2
