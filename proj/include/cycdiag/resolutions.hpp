#ifndef CYCDIAG_RESOLUTIONS_HPP
#define CYCDIAG_RESOLUTIONS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cycdiag/straightening.hpp"

namespace cyd {

// Which member of the W-family a generator lives in.
//   W    : minimal resolution, e_q in degree q >= 0
//   RW   : right suspension of the augmented resolution; degree 0 is the
//          rank-one module <e_0> with trivial action, degree q >= 1 free
//   RWD  : its dual; we store (rho^j e_q)^dual as power j, index q, with
//          chain degree -q; 1 = e_0^dual in degree 0
enum class WSide { W, RW, RWD };

struct WGen {
    WSide side = WSide::W;
    int power = 0;  // exponent of rho (for RWD: the dual of rho^power e_q)
    int q = 0;

    int degree() const { return side == WSide::RWD ? -q : q; }

    friend bool operator<(const WGen& a, const WGen& b)
    {
        if (a.side != b.side)
            return (int)a.side < (int)b.side;
        if (a.q != b.q)
            return a.q < b.q;
        return a.power < b.power;
    }
    friend bool operator==(const WGen& a, const WGen& b)
    {
        return a.side == b.side && a.power == b.power && a.q == b.q;
    }
    std::string str() const;
};

using WChain = Chain<WGen>;

// rho . x (the dual side acts backwards)
WChain rho_act(int r, const WGen& g, int times = 1);
WChain rho_act(int r, const WChain& c, int times = 1);
WChain norm_N(int r, const WChain& c);     // sum_j rho^j
WChain twist_T(int r, const WChain& c);    // rho - id

// The differentials of W(r), rW(r) and rW^dual(r).
WChain w_boundary(int r, const WGen& g);

// Suspension theta_k on the dual complex (k even, or any k when r = 2):
// e_{-i}^dual |-> e_{k-i}^dual, with the three-case rule on 1.
WChain theta_dual(int r, int k, const WGen& g);
// The degree +s companion on rW: e_q |-> e_{q+s} and e_0 |-> N e_s.
WChain theta_rw_up(int r, int s, const WGen& g);
WChain theta_rw_up(int r, int s, const WChain& c);

// --- pieced words: the complex generated by nonempty faces of the
// (r-1)-simplex, concatenated; a piece with all r vertices is full ---

struct PiecedWord {
    std::vector<std::vector<int>> pieces;  // each strictly increasing, nonempty

    int degree() const
    {
        int d = 0;
        for (const auto& p : pieces)
            d += (int)p.size();
        return d;
    }
    friend bool operator<(const PiecedWord& a, const PiecedWord& b) { return a.pieces < b.pieces; }
    friend bool operator==(const PiecedWord& a, const PiecedWord& b)
    {
        return a.pieces == b.pieces;
    }
    std::string str() const;
    std::vector<int> letters() const
    {
        std::vector<int> out;
        for (const auto& p : pieces)
            out.insert(out.end(), p.begin(), p.end());
        return out;
    }
};

using WordChain = Chain<PiecedWord>;

// Sorts each raw piece (dropping empty ones); nullopt on a repeated letter
// inside a piece.
std::optional<std::pair<int, PiecedWord>> normalize_word(
    const std::vector<std::vector<int>>& raw_pieces);

int count_full_pieces(int r, const PiecedWord& w);

// rho on a word: every letter +1 mod r, pieces re-sorted with sign.
WordChain rho_word(int r, const PiecedWord& w);

// Differential: signed removal of each letter (concatenation order), split
// into the summands without (nf) and with (f) a full piece.
std::pair<WordChain, WordChain> omega_boundary(int r, const PiecedWord& w);

// Deletes the unique full piece and applies rho to everything after it,
// with sign (-1)^{r(m + sum of earlier piece sizes)}; zero without one.
WordChain D_map(int r, const PiecedWord& w);

// Index of the leftmost piece whose right tail has total length < r.
int pivotal_index(int r, const PiecedWord& w);

// Joins everything right of the pivotal piece into a single piece.
WordChain kappa(int r, const PiecedWord& w);

// The degree -(r-1) suspension step: replaces the pivotal piece A_j and the
// joined tail by f(A_j (x) tail).
WordChain S_map(const Straightening& s, const PiecedWord& w);

// --- the homomorphism towards the minimal resolution ---

// phi_e / phi_o: group-ring coefficients indexed by rho power.
std::vector<Rational> phi_pair(int r, int a, int b, bool even_flavor);

// Phi on a generator of the suspended chains of the boundary of the
// (r-1)-simplex, with Z[1/r~!] coefficients.
WChain Phi(int r, const Simplex& a);

// Linear dual of Phi in degree q: the signed sum over the alternating-
// pattern simplices L_q with coefficient phi(q)!/r~!.
Chain<Simplex> phi_dual(int r, int q);

// Words in the Milgram resolution of C_r (tuples of group elements).
struct BarWord {
    std::vector<int> a;
    int degree() const { return (int)a.size(); }
    friend bool operator<(const BarWord& x, const BarWord& y) { return x.a < y.a; }
    friend bool operator==(const BarWord& x, const BarWord& y) { return x.a == y.a; }
    std::string str() const;
};

// Closed form of the dual of Psi restricted to the bar resolution: the
// signed sum of admissible words of length q with coefficient
// phi(m)!/(r~!)^j (overlapping right-to-left windows of length r, plus an
// alternating prefix).
Chain<BarWord> psi_dual_bar(int r, int q);

// r = 2 over F_2: the normalization quotient plays the role of Psi.
WChain r2_quotient(const PiecedWord& w);

// Memoized evaluation of the recursive chain map Psi towards rW(r),
// parametrized by a straightening with duality.
class PsiEngine {
public:
    PsiEngine(int r, Straightening s);

    int r() const { return r_; }
    const Straightening& straightening() const { return s_; }
    long long rtilde_factorial() const { return rfact_; }

    WChain psi(const PiecedWord& w) const;
    WChain psi(const WordChain& c) const;

private:
    int r_;
    Straightening s_;
    long long rfact_;
    mutable std::mutex mutex_;
    mutable std::map<PiecedWord, WChain> memo_;
};

}  // namespace cyd

#endif
