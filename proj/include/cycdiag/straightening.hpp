#ifndef CYCDIAG_STRAIGHTENING_HPP
#define CYCDIAG_STRAIGHTENING_HPP

#include <optional>
#include <string>
#include <vector>

#include "cycdiag/simplicial.hpp"

namespace cyd {

inline bool is_prime(int r)
{
    if (r < 2)
        return false;
    for (int d = 2; d * d <= r; ++d)
        if (r % d == 0)
            return false;
    return true;
}

// A C_r-equivariant choice x_tau in tau for every proper nonempty subset tau
// of {0..r-1}, stored as one table indexed by subset bitmask.  With duality,
// the cyclic predecessor of x_tau avoids tau, which makes rho^{-1} g Lambda
// an assemblage map as well.
class Straightening {
public:
    Straightening(int r, std::vector<int> choice, bool duality, std::string name)
        : r_(r), choice_(std::move(choice)), duality_(duality), name_(std::move(name))
    {
    }

    int r() const { return r_; }
    bool duality() const { return duality_; }
    const std::string& name() const { return name_; }

    int choose_mask(int mask) const { return choice_[mask]; }

    int choose(const std::vector<int>& subset) const
    {
        int mask = 0;
        for (int v : subset)
            mask |= 1 << v;
        return choice_[mask];
    }

    // One representative per C_r-orbit (the smallest bitmask), with choices.
    std::vector<std::pair<std::vector<int>, int>> orbit_table() const;

    std::string key() const;  // memoization id

    // All equivariant straightenings for a prime r, in lexicographic order of
    // the per-orbit choice vector (earliest orbit varies fastest, matching
    // the standard r=5 preset order).  Throws for composite r.
    static std::vector<Straightening> enumerate(int r, bool require_duality);

    // "2", "3", "5a".."5d", or "<r>#<index>" for the k-th duality
    // straightening of a general prime r.
    static Straightening preset(const std::string& name);
    static Straightening first_with_duality(int r);

private:
    int r_;
    std::vector<int> choice_;  // mask -> chosen vertex
    bool duality_;
    std::string name_;
};

// --- barycentric subdivision of the boundary of the (r-1)-simplex ---

// A flag tau_0 < tau_1 < ... < tau_k of faces, stored by the disjoint
// difference pieces (bar notation); chain degree = number of pieces.
struct SdGen {
    std::vector<std::vector<int>> bars;

    int degree() const { return (int)bars.size(); }

    std::vector<int> cumulative(int i) const
    {
        std::vector<int> u;
        for (int j = 0; j <= i; ++j)
            u.insert(u.end(), bars[j].begin(), bars[j].end());
        std::sort(u.begin(), u.end());
        return u;
    }

    friend bool operator<(const SdGen& a, const SdGen& b) { return a.bars < b.bars; }
    friend bool operator==(const SdGen& a, const SdGen& b) { return a.bars == b.bars; }
    std::string str() const;
};

// A face of the pair subdivision: a dual generator b together with a face a
// whose vertex set contains the support of b.  Degree = |a| - |b|.
struct PairGen {
    std::vector<int> b;
    std::vector<int> a;

    int degree() const { return (int)a.size() - (int)b.size(); }
    friend bool operator<(const PairGen& x, const PairGen& y)
    {
        if (x.b != y.b)
            return x.b < y.b;
        return x.a < y.a;
    }
    friend bool operator==(const PairGen& x, const PairGen& y) { return x.b == y.b && x.a == y.a; }
    std::string str() const;
};

using SdChain = Chain<SdGen>;
using PairChain = Chain<PairGen>;

// differential of the flag complex
SdChain sd_boundary(const SdGen& g);
// differential of the pair complex (dual differential on b, Koszul on a),
// truncated to pairs with supp(b) inside a
PairChain pair_boundary_subdiv(const PairGen& g, int n);

// s_*: sum over vertex orderings of the simplex, as flags of singletons.
SdChain s_star(const Simplex& t);
// s_*^Delta: (-1)^k sum_j (a_j) (x) [a_0..a_{k-1}]
PairChain s_star_delta(const Simplex& t);
// s_*^P on a pair generator
SdChain s_star_P(const PairGen& g);
// h = (Lambda (x) id): dualizes the first factor; drops unsupported pairs.
PairChain h_map(const Simplex& b, const Simplex& a, int n);

// Lambda endomorphism of the flag complex: reverses a flag into complements
// with sign (-1)^{C(k,2)}.
SdChain lambda_sd(const SdGen& g, int n);
// Lambda endomorphism of the pair complex: twist of (Lambda^{-1} (x) Lambda).
PairChain lambda_pair(const PairGen& g, int n);

// Simplicial retraction induced by a straightening, on flag generators.
SimplexChain g_map(const Straightening& s, const SdGen& flag);

// The degree -(r-1) chain map f built from an assemblage map with duality:
// f = (-1)^{r(k+m)} g_* s_*^P h twist on chains of the boundary of the
// (r-1)-simplex.  trace, when non-null, collects the intermediate values.
SimplexChain f_map(const Straightening& s, const Simplex& t1, const Simplex& t2,
                   std::vector<std::string>* trace = nullptr);

}  // namespace cyd

#endif
