#ifndef CYCDIAG_DIAGONAL_HPP
#define CYCDIAG_DIAGONAL_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "cycdiag/complex.hpp"
#include "cycdiag/resolutions.hpp"

namespace cyd {

// A generator of Omega(r,n): a nondecreasing position sequence U over
// {0..n} and a letter sequence A over {0..r-1}, letters strictly increasing
// along each equal-u run (one representative per relation orbit).
struct OmegaPair {
    std::vector<int> U;
    std::vector<int> A;

    int degree() const { return (int)U.size(); }
    friend bool operator<(const OmegaPair& x, const OmegaPair& y)
    {
        if (x.U != y.U)
            return x.U < y.U;
        return x.A < y.A;
    }
    friend bool operator==(const OmegaPair& x, const OmegaPair& y)
    {
        return x.U == y.U && x.A == y.A;
    }
    std::string str() const;
};

using PairChainOm = Chain<OmegaPair>;

// (start,length) of each equal-u run
std::vector<std::pair<int, int>> runs_of(const std::vector<int>& U);

// Sorts letters within each run; nullopt if a letter repeats in a run.
std::optional<std::pair<int, OmegaPair>> canonicalize_pair(const std::vector<int>& U,
                                                           const std::vector<int>& A);

bool has_full_piece(int r, const OmegaPair& p);

// Signed removal of each position, split into summands without / with a
// full piece.
std::pair<PairChainOm, PairChainOm> pair_boundary(int r, const OmegaPair& p);

// The face d_i dual to the cosimplicial coface of the Omega tower: kills the
// pair unless the run at value i is exactly full, removes it, and shifts the
// later entries (u-1, a+1).  Ambient n is that of the input pair.
PairChainOm pair_face(int r, int n, int i, const OmegaPair& p);

// The r-fold cofaces on the dual towers (n is the source ambient).  The
// beta route inserts the letters 0..r-1 at value i; the gamma route inserts
// r-i+j-k mod r and lowers the letters after the block.
std::pair<Rational, OmegaPair> omega_coface(int r, bool gamma_route, const OmegaPair& p, int i,
                                            int n);

// The word of a pair: letters pieced by equal-u runs, with the suspension
// sign (-1)^{q(n+1)}.
std::pair<Rational, PiecedWord> eta_word(const OmegaPair& p, int n);

// Psi^n = (r~!)^{n+1} Psi o eta^n; integral output.
WChain psi_n(const PsiEngine& eng, const OmegaPair& p, int n);

// beta: regroups positions by letter value, with the stable-ordering sign.
// Returns the sign and the r position-tuples U_A^0 .. U_A^{r-1}.
std::pair<Rational, std::vector<std::vector<int>>> beta(int r, const OmegaPair& p);

// gamma: (U, A) |-> (U, A + U mod r), entrywise.
OmegaPair gamma(int r, const OmegaPair& p);

// A basis element of the r-fold tensor of the suspended chains of X.
struct TensorGen {
    std::vector<CellRef> cells;

    int degree() const
    {
        int d = 0;
        for (const auto& c : cells)
            d += c.dim + 1;
        return d;
    }
    friend bool operator<(const TensorGen& a, const TensorGen& b) { return a.cells < b.cells; }
    friend bool operator==(const TensorGen& a, const TensorGen& b) { return a.cells == b.cells; }
};

using TensorChain = Chain<TensorGen>;

std::string tensor_str(const AugSimplicialSet& X, const TensorGen& g);

// alpha applied to one dual tuple block: the signed r-fold tensor of face
// restrictions of cell (factors ordered U^{r-1},...,U^0).  Nullopt when a
// factor hits the basepoint.
std::optional<std::pair<Rational, TensorGen>> alpha_term(
    const AugSimplicialSet& X, const CellRef& cell,
    const std::vector<std::vector<int>>& factors_by_value);

// differential of the r-fold tensor complex
TensorChain tensor_boundary(const AugSimplicialSet& X, const TensorGen& g);

// rho: moves the last factor to the front with the Koszul sign
TensorChain rho_tensor(const TensorGen& g);
TensorChain rho_tensor(const TensorChain& c);

// --- the connected diagonal ---

// Iterates the canonical Omega(r,n) basis in degree q (runs shorter than r).
void enumerate_pairs(int r, int n, int q, const std::function<void(const OmegaPair&)>& fn);

// mu(rho^t e_{-q}^dual (x) cell) by the compositional route
// alpha o beta o gamma o Psi.
TensorChain mu_composed(const PsiEngine& eng, const AugSimplicialSet& X, int q,
                        const CellRef& cell, int dual_power = 0);

// Sign bookkeeping of the direct coefficient formula.
struct SignLedger {
    std::array<int, 5> s{};  // s_0..s_4 (parities)
    int s_total = 0;
    struct TStep {
        std::array<int, 5> t{};
        int t_total = 0;
    };
    std::vector<TStep> first_level;  // one entry per permutation at top level
};

// The direct coefficient (-1)^s nu of the generator indexed by (U,A); zero
// when a run reaches length r, the alternating base pattern fails, the
// letters miss {0..r-1}, or every accumulation sequence degenerates.
Rational nu_coefficient(const Straightening& s, int n, const OmegaPair& p,
                        SignLedger* ledger = nullptr);

// mu by the direct formula; must agree with mu_composed exactly.
TensorChain mu_direct(const Straightening& s, const AugSimplicialSet& X, int q,
                      const CellRef& cell, int dual_power = 0);

// r = 3 block-rule evaluation (enumerates the cyclic-successor preferred
// words); must agree with mu_direct.
TensorChain mu_r3_blocks(const Straightening& s, const AugSimplicialSet& X, int q,
                         const CellRef& cell, int dual_power = 0);

// --- suspension ---

// Per-factor right suspension with sign (-1)^{sum_s s |x_s|}; cells keep
// their index in the suspended complex.
TensorChain suspend_tensor_right(const TensorChain& c);
// rho o per-factor left suspension, with the reordering and operator-moving
// signs.
TensorChain suspend_tensor_left(const TensorChain& c);

struct CheckReport {
    bool ok = true;
    std::string detail;
};

// Verifies mu(e_{-q} (x) S tau) = (-1)^{q + C(r,2)(n+1)} r~! S^{(x)r} mu(e_{-q} (x) tau)
// (right suspension; the left variant carries the rho twist), for every
// stored cell and q <= qmax.
CheckReport suspend_check(const PsiEngine& eng, const AugSimplicialSet& X, bool left, int qmax,
                          int mod_p = 0);

// Chain-map property of mu for the twisted differential on the domain.
CheckReport mu_chain_map_check(const PsiEngine& eng, const AugSimplicialSet& X, int qmax,
                               int mod_p = 0);
// Equivariance mu(rho e (x) tau) = rho mu(e (x) tau).
CheckReport mu_equivariance_check(const PsiEngine& eng, const AugSimplicialSet& X, int qmax);

}  // namespace cyd

#endif
