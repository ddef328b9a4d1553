#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace psgl2 {

/// Largest residue degree supported by the fixed-capacity digit storage.
inline constexpr int kMaxDegree = 8;

inline long long int_pow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

/**
 * Element of the monoid of exponent classes acting on k = F_q, q = p^f.
 *
 * The classes are {0, 1, ..., q-1}: class 0 is the exponent that sends every
 * x (including 0) to 1, and for m >= 1 the class of m is m reduced into
 * [1, q-1]. A class is stored by its f base-p digits (least significant
 * first); all zeros is the class 0 and all (p-1) is the class q-1.
 */
class NClass {
public:
    NClass() = default;

    /// The zero class for (p, f).
    NClass(int p, int f) : p_(static_cast<std::uint8_t>(p)), f_(static_cast<std::uint8_t>(f)) {
        check_params(p, f);
    }

    static NClass from_digits(int p, std::span<const int> digits) {
        NClass out(p, static_cast<int>(digits.size()));
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (digits[i] < 0 || digits[i] >= p)
                throw std::invalid_argument("NClass digit out of range [0, p-1]");
            out.d_[i] = static_cast<std::uint8_t>(digits[i]);
        }
        return out;
    }

    static NClass from_digits(int p, std::initializer_list<int> digits) {
        std::vector<int> v(digits);
        return from_digits(p, std::span<const int>(v));
    }

    /// Class of the non-negative integer m (0 stays 0, m >= 1 reduces into [1, q-1]).
    static NClass from_integer(int p, int f, long long m) {
        if (m < 0) throw std::invalid_argument("NClass::from_integer expects m >= 0");
        NClass out(p, f);
        if (m == 0) return out;
        const long long q1 = int_pow(p, f) - 1;
        long long v = (m - 1) % q1 + 1;
        for (int i = 0; i < f; ++i) {
            out.d_[i] = static_cast<std::uint8_t>(v % p);
            v /= p;
        }
        return out;
    }

    static NClass zero(int p, int f) { return NClass(p, f); }
    static NClass top(int p, int f) { return from_integer(p, f, int_pow(p, f) - 1); }
    static NClass p_power(int p, int f, int m) {
        NClass out(p, f);
        out.d_[((m % f) + f) % f] = 1;
        return out;
    }

    int p() const { return p_; }
    int f() const { return f_; }
    long long q() const { return int_pow(p_, f_); }
    int digit(int i) const { return d_[((i % f_) + f_) % f_]; }
    std::vector<int> digits() const { return {d_.begin(), d_.begin() + f_}; }

    /// Canonical representative in [0, q-1].
    long long to_integer() const {
        long long v = 0;
        for (int i = f_ - 1; i >= 0; --i) v = v * p_ + d_[i];
        return v;
    }

    bool is_zero() const {
        return std::all_of(d_.begin(), d_.begin() + f_, [](auto x) { return x == 0; });
    }
    bool is_top() const {
        return std::all_of(d_.begin(), d_.begin() + f_, [this](auto x) { return x == p_ - 1; });
    }

    std::string to_string() const { return std::to_string(to_integer()); }

    friend bool operator==(const NClass&, const NClass&) = default;
    friend auto operator<=>(const NClass& a, const NClass& b) {
        if (auto c = a.p_ <=> b.p_; c != 0) return c;
        if (auto c = a.f_ <=> b.f_; c != 0) return c;
        return a.to_integer() <=> b.to_integer();
    }

private:
    static void check_params(int p, int f) {
        if (p < 3 || p > 251) throw std::invalid_argument("NClass: p must be an odd prime below 256");
        if (f < 1 || f > kMaxDegree) throw std::invalid_argument("NClass: f out of range");
    }

    std::uint8_t p_ = 3;
    std::uint8_t f_ = 1;
    std::array<std::uint8_t, kMaxDegree> d_{};
};

inline void require_same(const NClass& a, const NClass& b) {
    if (a.p() != b.p() || a.f() != b.f()) throw std::invalid_argument("NClass parameter mismatch");
}

/// Monoid addition: 0 is neutral, otherwise the integer sum reduced into [1, q-1].
inline NClass nt_add(const NClass& a, const NClass& b) {
    require_same(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return NClass::from_integer(a.p(), a.f(), a.to_integer() + b.to_integer());
}

inline NClass nt_double(const NClass& a) { return nt_add(a, a); }

/// Group difference inside the nonzero classes: the unique nonzero c with b + c = a.
inline NClass nt_sub_group(const NClass& a, const NClass& b) {
    require_same(a, b);
    if (a.is_zero()) throw std::domain_error("nt_sub_group: minuend must be nonzero");
    const long long q1 = a.q() - 1;
    long long c = ((a.to_integer() - b.to_integer()) % q1 + q1) % q1;
    return NClass::from_integer(a.p(), a.f(), c == 0 ? q1 : c);
}

/// Digit-wise order, equivalently binom(b, a) != 0 mod p.
inline bool nt_leq(const NClass& a, const NClass& b) {
    require_same(a, b);
    for (int i = 0; i < a.f(); ++i)
        if (a.digit(i) > b.digit(i)) return false;
    return true;
}

inline bool nt_lt(const NClass& a, const NClass& b) { return a != b && nt_leq(a, b); }

/// Digit-wise difference b - a for a <= b digit-wise. Total, including a = 0.
inline NClass nt_digit_sub(const NClass& b, const NClass& a) {
    if (!nt_leq(a, b)) throw std::domain_error("nt_digit_sub: subtrahend is not digit-wise below");
    NClass out(b.p(), b.f());
    std::vector<int> d(b.f());
    for (int i = 0; i < b.f(); ++i) d[i] = b.digit(i) - a.digit(i);
    return NClass::from_digits(b.p(), std::span<const int>(d));
}

/// The unique c with c < b digit-wise and a + c = b; requires 0 != a <= b.
inline NClass nt_dotminus(const NClass& b, const NClass& a) {
    if (a.is_zero()) throw std::domain_error("nt_dotminus: subtrahend must be nonzero");
    return nt_digit_sub(b, a);
}

/// binom(b, a) mod p via Lucas on the digit expansions.
inline int nt_binom_mod_p(const NClass& b, const NClass& a) {
    require_same(a, b);
    const int p = a.p();
    long long out = 1;
    for (int i = 0; i < a.f(); ++i) {
        int n = b.digit(i), k = a.digit(i);
        if (k > n) return 0;
        long long num = 1, den = 1;
        for (int t = 0; t < k; ++t) {
            num = num * (n - t) % p;
            den = den * (t + 1) % p;
        }
        long long inv = 1, base = den, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        out = out * num % p * inv % p;
    }
    return static_cast<int>(out);
}

/// All q classes, in increasing integer order.
inline std::vector<NClass> nt_enumerate(int p, int f) {
    std::vector<NClass> out;
    const long long q = int_pow(p, f);
    out.reserve(static_cast<std::size_t>(q));
    for (long long m = 0; m < q; ++m) out.push_back(NClass::from_integer(p, f, m));
    return out;
}

/// Subset of Z/fZ stored as a bitmask.
class CarrySet {
public:
    CarrySet() = default;
    explicit CarrySet(int f, std::uint32_t bits = 0) : bits_(bits & full_mask(f)), f_(static_cast<std::uint8_t>(f)) {
        if (f < 1 || f > kMaxDegree) throw std::invalid_argument("CarrySet: f out of range");
    }

    static CarrySet empty(int f) { return CarrySet(f); }
    static CarrySet full(int f) { return CarrySet(f, full_mask(f)); }
    static CarrySet singleton(int f, int i) { return CarrySet(f, 1u << (((i % f) + f) % f)); }
    static CarrySet from_indices(int f, std::span<const int> idx) {
        std::uint32_t bits = 0;
        for (int i : idx) bits |= 1u << (((i % f) + f) % f);
        return CarrySet(f, bits);
    }

    int f() const { return f_; }
    std::uint32_t bits() const { return bits_; }
    bool contains(int i) const { return (bits_ >> (((i % f_) + f_) % f_)) & 1u; }
    bool is_empty() const { return bits_ == 0; }
    bool is_full() const { return bits_ == full_mask(f_); }
    int size() const { return __builtin_popcount(bits_); }
    bool subset_of(const CarrySet& o) const { return (bits_ & ~o.bits_) == 0; }

    /// The translate {i - b : i in this}.
    CarrySet shifted(int b) const {
        CarrySet out(f_);
        for (int i = 0; i < f_; ++i)
            if (contains(i)) out.bits_ |= 1u << (((i - b) % f_ + f_) % f_);
        return out;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < f_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        for (int i : indices()) s += (s.size() > 1 ? "," : "") + std::to_string(i);
        return s + "}";
    }

    friend CarrySet operator|(CarrySet a, const CarrySet& b) { a.bits_ |= b.bits_; return a; }
    friend CarrySet operator&(CarrySet a, const CarrySet& b) { a.bits_ &= b.bits_; return a; }
    friend CarrySet operator-(CarrySet a, const CarrySet& b) { a.bits_ &= ~b.bits_; return a; }
    friend bool operator==(const CarrySet&, const CarrySet&) = default;
    friend auto operator<=>(const CarrySet&, const CarrySet&) = default;

    static std::uint32_t full_mask(int f) { return f >= 32 ? ~0u : ((1u << f) - 1u); }

private:
    std::uint32_t bits_ = 0;
    std::uint8_t f_ = 1;
};

/// p^I = sum of p^i over i in I, as a class.
inline NClass p_power_sum(int p, const CarrySet& I) {
    NClass out(p, I.f());
    std::vector<int> d(I.f(), 0);
    for (int i : I.indices()) d[i] = 1;
    return NClass::from_digits(p, std::span<const int>(d));
}

/**
 * Columns producing a carry when adding a and b with cyclic carry propagation.
 *
 * Both candidate carry-ins to column 0 are tried; when both are consistent
 * every column sums to p-1 and the empty set is returned.
 */
inline CarrySet carry_set(const NClass& a, const NClass& b) {
    require_same(a, b);
    const int f = a.f(), p = a.p();
    if (a.is_zero() || b.is_zero()) return CarrySet::empty(f);
    for (int cin = 0; cin <= 1; ++cin) {
        std::uint32_t bits = 0;
        int c = cin;
        for (int i = 0; i < f; ++i) {
            c = (a.digit(i) + b.digit(i) + c >= p) ? 1 : 0;
            if (c) bits |= 1u << i;
        }
        if (c == cin) return CarrySet(f, bits);
    }
    throw std::logic_error("carry_set: no consistent carry pattern");
}

/**
 * Whether J arises as the carry set of some decomposition a + b = gamma.
 *
 * For gamma in {0, q-1} the carry sets are enumerated directly: only the empty
 * set for 0, and the empty and full sets for q-1.
 */
inline bool is_admissible(const CarrySet& J, const NClass& gamma) {
    if (J.f() != gamma.f()) throw std::invalid_argument("is_admissible: f mismatch");
    if (gamma.is_zero()) return J.is_empty();
    if (gamma.is_top()) return J.is_empty() || J.is_full();
    const int p = gamma.p();
    for (int i = 0; i < gamma.f(); ++i) {
        if (gamma.digit(i) == 0 && J.contains(i - 1) && !J.contains(i)) return false;
        if (gamma.digit(i) == p - 1 && J.contains(i) && !J.contains(i - 1)) return false;
    }
    return true;
}

inline std::vector<CarrySet> admissible_sets(const NClass& gamma) {
    std::vector<CarrySet> out;
    for (std::uint32_t bits = 0; bits <= CarrySet::full_mask(gamma.f()); ++bits) {
        CarrySet J(gamma.f(), bits);
        if (is_admissible(J, gamma)) out.push_back(J);
    }
    return out;
}

/// Full binary tree whose leaves index into a list of summands.
class CarryTree {
public:
    static CarryTree leaf(int index) {
        CarryTree t;
        t.nodes_.push_back({-1, -1, index});
        return t;
    }

    static CarryTree join(const CarryTree& l, const CarryTree& r) {
        CarryTree t;
        t.nodes_ = l.nodes_;
        const int off = static_cast<int>(t.nodes_.size());
        for (Node n : r.nodes_) {
            if (n.left >= 0) { n.left += off; n.right += off; }
            t.nodes_.push_back(n);
        }
        t.nodes_.push_back({l.root(), r.root() + off, -1});
        return t;
    }

    /// All tree shapes over leaves lo..hi-1 in order.
    static std::vector<CarryTree> all_shapes(int lo, int hi) {
        if (hi - lo == 1) return {leaf(lo)};
        std::vector<CarryTree> out;
        for (int mid = lo + 1; mid < hi; ++mid)
            for (const auto& l : all_shapes(lo, mid))
                for (const auto& r : all_shapes(mid, hi)) out.push_back(join(l, r));
        return out;
    }

    struct Node {
        int left;
        int right;
        int leaf;
    };

    int root() const { return static_cast<int>(nodes_.size()) - 1; }
    const std::vector<Node>& nodes() const { return nodes_; }

private:
    std::vector<Node> nodes_;
};

/**
 * Disjoint union of the carry sets over the internal nodes of a summation
 * tree, as a multiplicity per column: out[i] counts the nodes carrying out of
 * column i. (The sorted list of the sets themselves does depend on the tree.)
 */
inline std::vector<int> carry_multiset_tree(std::span<const NClass> leaves, const CarryTree& tree) {
    const auto& nodes = tree.nodes();
    if (nodes.empty()) throw std::invalid_argument("carry_multiset_tree: empty tree");
    std::vector<int> seen(leaves.size(), 0);
    for (const auto& n : nodes) {
        if (n.leaf >= 0) {
            if (static_cast<std::size_t>(n.leaf) >= leaves.size())
                throw std::invalid_argument("carry_multiset_tree: leaf index out of range");
            ++seen[n.leaf];
        }
    }
    for (int s : seen)
        if (s != 1) throw std::invalid_argument("carry_multiset_tree: leaves must be used exactly once");

    std::vector<int> out(leaves.empty() ? 0 : leaves[0].f(), 0);
    std::vector<NClass> value(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& n = nodes[i];
        if (n.leaf >= 0) {
            value[i] = leaves[n.leaf];
        } else {
            for (int c : carry_set(value[n.left], value[n.right]).indices()) ++out[c];
            value[i] = nt_add(value[n.left], value[n.right]);
        }
    }
    return out;
}

}  // namespace psgl2
