#ifndef CYCDIAG_CHAIN_HPP
#define CYCDIAG_CHAIN_HPP

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycdiag/rational.hpp"

namespace cyd {

// Sparse formal sum of basis generators with exact coefficients.  Keys must
// be totally ordered (std::map keeps term order canonical) and expose their
// chain degree via degree().  Zero coefficients are never stored.
template <class G>
class Chain {
public:
    using Terms = std::map<G, Rational>;

    Chain() = default;
    explicit Chain(const G& g, Rational c = Rational(1)) { add(g, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const G& g, const Rational& c)
    {
        if (c.is_zero())
            return;
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            terms_.emplace(g, c);
        }
        else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Chain& operator+=(const Chain& o)
    {
        for (const auto& [g, c] : o.terms_)
            add(g, c);
        return *this;
    }
    Chain& operator-=(const Chain& o)
    {
        for (const auto& [g, c] : o.terms_)
            add(g, -c);
        return *this;
    }
    Chain& operator*=(const Rational& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [g, c] : terms_)
            c *= s;
        return *this;
    }

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const Rational& s, Chain a) { return a *= s; }
    Chain operator-() const
    {
        Chain r(*this);
        for (auto& [g, c] : r.terms_)
            c = -c;
        return r;
    }

    friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Chain& a, const Chain& b) { return !(a == b); }

    Rational coefficient(const G& g) const
    {
        auto it = terms_.find(g);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Requires all terms in one degree; chains produced by full expansions
    // may be mixed, in which case homogeneous_degree() throws.
    int homogeneous_degree() const
    {
        if (terms_.empty())
            throw std::domain_error("homogeneous_degree: zero chain");
        int d = terms_.begin()->first.degree();
        for (const auto& [g, c] : terms_)
            if (g.degree() != d)
                throw std::domain_error("homogeneous_degree: mixed-degree chain");
        return d;
    }

    // Image of every basis generator under a linear rule.
    template <class H>
    Chain<H> map(const std::function<Chain<H>(const G&)>& rule) const
    {
        Chain<H> out;
        for (const auto& [g, c] : terms_) {
            Chain<H> img = rule(g);
            img *= c;
            out += img;
        }
        return out;
    }

private:
    Terms terms_;
};

enum class SuspensionConvention {
    Right,  // graded maps commute with the differential
    Left,   // graded maps commute up to (-1)^degree
};

// Basis-indexed graded map between chain complexes.
template <class G, class H>
struct GradedMap {
    int degree = 0;
    SuspensionConvention convention = SuspensionConvention::Right;
    std::function<Chain<H>(const G&)> action;

    Chain<H> operator()(const Chain<G>& x) const { return x.template map<H>(action); }
};

// Koszul-signed tensor of two homogeneous chains.  Under both conventions
// the sign for elements is trivial (it shows up for maps, not elements),
// but degrees must be honest, so homogeneity is enforced here.
template <class G, class H, class K>
Chain<K> tensor(const Chain<G>& a, const Chain<H>& b,
                const std::function<K(const G&, const H&)>& pair_key)
{
    if (!a.is_zero())
        a.homogeneous_degree();
    if (!b.is_zero())
        b.homogeneous_degree();
    Chain<K> out;
    for (const auto& [g, cg] : a.terms())
        for (const auto& [h, ch] : b.terms())
            out.add(pair_key(g, h), cg * ch);
    return out;
}

// (f (x) g)(a (x) b) with the declared convention:
//   right:  (-1)^{|f||b|} f(a) (x) g(b)
//   left:   (-1)^{|g||a|} f(a) (x) g(b)
template <class G1, class H1, class G2, class H2, class K>
Chain<K> tensor_map_apply(const GradedMap<G1, H1>& f, const GradedMap<G2, H2>& g,
                          SuspensionConvention conv, const Chain<G1>& a, const Chain<G2>& b,
                          const std::function<K(const H1&, const H2&)>& pair_key)
{
    Chain<K> out;
    for (const auto& [ga, ca] : a.terms())
        for (const auto& [gb, cb] : b.terms()) {
            int sign_exp = (conv == SuspensionConvention::Right) ? f.degree * gb.degree()
                                                                 : g.degree * ga.degree();
            Rational s = (sign_exp % 2 != 0) ? Rational(-1) : Rational(1);
            Chain<H1> fa = f.action(ga);
            Chain<H2> gbv = g.action(gb);
            for (const auto& [h1, c1] : fa.terms())
                for (const auto& [h2, c2] : gbv.terms())
                    out.add(pair_key(h1, h2), s * ca * cb * c1 * c2);
        }
    return out;
}

// Dual differential (d^ f)(t) = (-1)^{|f|+1} f(d t).  Dual generators are
// named by their predual keys (so degree() reads the predual degree, and
// the cochain degree is its negative); the caller supplies the predual
// basis in each relevant degree.
template <class G>
GradedMap<G, G> dual_differential(const GradedMap<G, G>& d,
                                  const std::function<std::vector<G>(int)>& basis_of_degree)
{
    GradedMap<G, G> dd;
    dd.degree = -1;
    dd.convention = d.convention;
    dd.action = [d, basis_of_degree](const G& dual_gen) -> Chain<G> {
        int deg = dual_gen.degree();
        Chain<G> out;
        int sign_exp = -deg + 1;  // |f| = -deg as a cochain
        Rational s = (((sign_exp % 2) + 2) % 2 != 0) ? Rational(-1) : Rational(1);
        for (const G& tau : basis_of_degree(deg + 1)) {
            Rational c = d.action(tau).coefficient(dual_gen);
            if (!c.is_zero())
                out.add(tau, s * c);
        }
        return out;
    };
    return dd;
}

// Checks d(f(g)) = eps * f(d(g)) on every supplied basis generator, with
// eps = +1 for the right convention and (-1)^{deg f} for the left one.
// Returns an empty string on success, else a description of the first
// offending generator.
template <class G, class H>
std::string verify_chain_map(const GradedMap<G, H>& f,
                             const std::function<Chain<G>(const G&)>& d_source,
                             const std::function<Chain<H>(const H&)>& d_target,
                             const std::vector<G>& basis,
                             const std::function<std::string(const G&)>& show)
{
    Rational eps(1);
    if (f.convention == SuspensionConvention::Left && (f.degree % 2 != 0))
        eps = Rational(-1);
    for (const G& g : basis) {
        Chain<H> lhs = f(Chain<G>(g)).template map<H>(d_target);
        Chain<H> rhs = f(Chain<G>(g).template map<G>(d_source));
        rhs *= eps;
        if (lhs != rhs)
            return "chain-map identity fails on " + show(g);
    }
    return "";
}

// Parity of the permutation sorting v (counting inversions); -1 if v has a
// repeated entry.
inline int sort_parity(const std::vector<int>& v)
{
    int inv = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j])
                return -1;
            if (v[i] > v[j])
                ++inv;
        }
    return inv % 2;
}

// Stable-sort parity: inversions among strictly decreasing pairs only, so
// equal entries keep their relative order and contribute nothing.
inline int stable_sort_parity(const std::vector<int>& v)
{
    int inv = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j])
                ++inv;
    return inv % 2;
}

inline Rational parity_sign(long long e)
{
    return (((e % 2) + 2) % 2 != 0) ? Rational(-1) : Rational(1);
}

}  // namespace cyd

#endif
