#ifndef CYCDIAG_SIMPLICIAL_HPP
#define CYCDIAG_SIMPLICIAL_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cycdiag/chain.hpp"

namespace cyd {

// A nondegenerate simplex of the standard augmented simplex, stored as a
// strictly increasing vertex list.  The empty list is the (-1)-simplex.
// Chain degree in the suspended normalized complex equals the vertex count.
struct Simplex {
    std::vector<int> v;

    Simplex() = default;
    explicit Simplex(std::vector<int> verts) : v(std::move(verts)) {}

    int degree() const { return (int)v.size(); }
    int dim() const { return (int)v.size() - 1; }
    bool empty() const { return v.empty(); }

    friend bool operator<(const Simplex& a, const Simplex& b)
    {
        if (a.v.size() != b.v.size())
            return a.v.size() < b.v.size();
        return a.v < b.v;
    }
    friend bool operator==(const Simplex& a, const Simplex& b) { return a.v == b.v; }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
    }
};

using SimplexChain = Chain<Simplex>;

// Normalizes an arbitrary vertex tuple to the increasing representative,
// returning the ordering parity, or nullopt if an entry repeats.
inline std::optional<std::pair<int, Simplex>> normalize_tuple(const std::vector<int>& t)
{
    int parity = sort_parity(t);
    if (parity < 0)
        return std::nullopt;
    std::vector<int> s = t;
    std::sort(s.begin(), s.end());
    return std::make_pair(parity, Simplex(std::move(s)));
}

inline SimplexChain tuple_chain(const std::vector<int>& t)
{
    auto n = normalize_tuple(t);
    if (!n)
        return {};
    return SimplexChain(n->second, parity_sign(n->first));
}

// lambda(t1,t2): parity of the permutation sorting the concatenation t1.t2.
// Entries of each argument are taken as written.  Overlap is degenerate.
inline std::optional<int> lambda_sign(const std::vector<int>& t1, const std::vector<int>& t2)
{
    std::vector<int> c = t1;
    c.insert(c.end(), t2.begin(), t2.end());
    int p = sort_parity(c);
    if (p < 0)
        return std::nullopt;
    return p;
}

// Join product on the suspended normalized chains of the augmented simplex:
// unital for the empty simplex, graded-commutative, zero on overlap.
inline SimplexChain join(const Simplex& a, const Simplex& b)
{
    auto l = lambda_sign(a.v, b.v);
    if (!l)
        return {};
    std::vector<int> u = a.v;
    u.insert(u.end(), b.v.begin(), b.v.end());
    std::sort(u.begin(), u.end());
    return SimplexChain(Simplex(std::move(u)), parity_sign(*l));
}

inline SimplexChain join(const SimplexChain& a, const SimplexChain& b)
{
    SimplexChain out;
    for (const auto& [ga, ca] : a.terms())
        for (const auto& [gb, cb] : b.terms()) {
            SimplexChain j = join(ga, gb);
            j *= ca * cb;
            out += j;
        }
    return out;
}

inline Simplex complement_in(const Simplex& t, int n)
{
    std::vector<int> c;
    std::size_t k = 0;
    for (int x = 0; x <= n; ++x) {
        if (k < t.v.size() && t.v[k] == x) {
            ++k;
            continue;
        }
        c.push_back(x);
    }
    return Simplex(std::move(c));
}

// Alexander duality on Delta^n_+: tau |-> (-1)^{lambda(tau,tau^c)} (tau^c)^dual.
// The returned simplex names the dual generator.
inline std::pair<Rational, Simplex> alexander_dual(const Simplex& t, int n)
{
    Simplex c = complement_in(t, n);
    auto l = lambda_sign(t.v, c.v);
    return {parity_sign(*l), c};
}

// The differential of the suspended normalized chains: the (-1)-simplex is a
// cycle and a vertex bounds to it.
inline SimplexChain simplex_boundary(const Simplex& t)
{
    SimplexChain out;
    for (std::size_t i = 0; i < t.v.size(); ++i) {
        std::vector<int> f;
        f.reserve(t.v.size() - 1);
        for (std::size_t j = 0; j < t.v.size(); ++j)
            if (j != i)
                f.push_back(t.v[j]);
        out.add(Simplex(std::move(f)), parity_sign((long long)i));
    }
    return out;
}

// All faces of Delta^n_+ (subsets of {0..n}), optionally proper only.
inline std::vector<Simplex> simplex_basis(int n, bool proper_only = false)
{
    std::vector<Simplex> out;
    int full = (1 << (n + 1));
    for (int mask = 0; mask < full; ++mask) {
        if (proper_only && mask == full - 1)
            continue;
        std::vector<int> v;
        for (int x = 0; x <= n; ++x)
            if (mask & (1 << x))
                v.push_back(x);
        out.emplace_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Augmented cosimplicial coface d^i on the dual complex of Delta^n_+ (n the
// source ambient).  U is the increasing entry list of a dual generator.
inline std::pair<Rational, std::vector<int>> coface_dual(const std::vector<int>& U, int i, int n)
{
    if (i < 0 || i > n + 1)
        throw std::invalid_argument("coface_dual: index out of range");
    int m = (int)U.size();
    int j = 0;
    while (j < m && U[j] < i)
        ++j;
    std::vector<int> out;
    out.reserve(m + 1);
    for (int k = 0; k < j; ++k)
        out.push_back(U[k]);
    out.push_back(i);
    for (int k = j; k < m; ++k)
        out.push_back(U[k] + 1);
    return {parity_sign((long long)i + j + m + n + 1), out};
}

// Codegeneracy s^i on the dual complex, mapping ambient n+1 to n; zero when
// i is absent from U.
inline std::optional<std::pair<Rational, std::vector<int>>> codegeneracy_dual(
    const std::vector<int>& U, int i, int n)
{
    int m = (int)U.size();
    int j = -1;
    for (int k = 0; k < m; ++k)
        if (U[k] == i)
            j = k;
    if (j < 0)
        return std::nullopt;
    std::vector<int> out;
    out.reserve(m - 1);
    for (int k = 0; k < j; ++k)
        out.push_back(U[k]);
    for (int k = j + 1; k < m; ++k)
        out.push_back(U[k] - 1);
    return std::make_pair(parity_sign((long long)i + j + m + n + 1), out);
}

struct PoincareReport {
    bool vanishing_above_top = false;
    bool top_rank_one = false;
    bool pairing_nondegenerate = false;
    std::string detail;
    bool ok() const { return vanishing_above_top && top_rank_one && pairing_nondegenerate; }
};

// Checks that the join makes the suspended chains of Delta^n_+ a Poincare
// duality algebra of formal dimension n+1, by enumerating every pairing in
// complementary degrees and verifying a signed permutation matrix.
inline PoincareReport poincare_pairing_check(int n)
{
    PoincareReport rep;
    rep.vanishing_above_top = true;  // degrees are vertex counts <= n+1
    auto basis = simplex_basis(n);
    int top_count = 0;
    for (const auto& s : basis)
        if (s.degree() == n + 1)
            ++top_count;
    rep.top_rank_one = (top_count == 1);
    Simplex top;
    for (int x = 0; x <= n; ++x)
        top.v.push_back(x);

    rep.pairing_nondegenerate = true;
    for (int i = 0; i <= n + 1 && rep.pairing_nondegenerate; ++i) {
        std::vector<Simplex> left, right;
        for (const auto& s : basis) {
            if (s.degree() == i)
                left.push_back(s);
            if (s.degree() == n + 1 - i)
                right.push_back(s);
        }
        for (const auto& a : left) {
            int hits = 0;
            for (const auto& b : right) {
                Rational c = join(a, b).coefficient(top);
                if (!c.is_zero()) {
                    ++hits;
                    if (!(c == Rational(1) || c == Rational(-1))) {
                        rep.pairing_nondegenerate = false;
                        rep.detail = "pairing value not a unit at " + a.str() + "*" + b.str();
                    }
                }
            }
            if (hits != 1) {
                rep.pairing_nondegenerate = false;
                rep.detail = "row " + a.str() + " pairs with " + std::to_string(hits) +
                             " generators in degree " + std::to_string(n + 1 - i);
            }
        }
    }
    return rep;
}

}  // namespace cyd

#endif
