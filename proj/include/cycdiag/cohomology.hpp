#ifndef CYCDIAG_COHOMOLOGY_HPP
#define CYCDIAG_COHOMOLOGY_HPP

#include <string>
#include <vector>

#include "cycdiag/diagonal.hpp"

namespace cyd {

// A reduced mod-p cochain, stored as one value per stored cell of its
// dimension (reduced: the basepoint and nothing else is quotiented; the
// (-1)-cell participates like any other).
struct Cochain {
    int dim = 0;
    std::vector<long long> values;  // indexed like X's cells in that dimension
};

// Row-reduced mod-p cochain complex of a finite augmented semi-simplicial
// set: coboundary matrices, Betti numbers, and a normal form for classes.
class ReducedComplex {
public:
    ReducedComplex(AugSimplicialSet X, int p);

    const AugSimplicialSet& complex() const { return X_; }
    int p() const { return p_; }
    int min_dim() const { return -1; }
    int max_dim() const;

    // delta: C^m -> C^{m+1}, (delta x)(tau) = x(d tau)
    Cochain coboundary(const Cochain& x) const;
    bool is_cocycle(const Cochain& x) const;

    int betti(int dim) const;
    // representatives of a basis of H^dim
    std::vector<Cochain> cohomology_basis(int dim) const;

    // coordinates of [x] w.r.t. the basis above; rejects non-cocycles
    std::vector<long long> class_coordinates(const Cochain& x) const;
    bool same_class(const Cochain& x, const Cochain& y) const;
    bool is_coboundary(const Cochain& x) const;

    Cochain zero_cochain(int dim) const;
    Cochain random_cochain(int dim, unsigned seed) const;

private:
    void reduce_dim(int dim);

    AugSimplicialSet X_;
    int p_;
    // per dimension: the coboundary matrix from dim to dim+1 in row-echelon
    // data, plus cocycle/coboundary space bases
    struct DimData {
        std::vector<std::vector<long long>> cocycles;      // basis of ker delta
        std::vector<std::vector<long long>> coboundaries;  // basis of im delta (from dim-1)
        std::vector<Cochain> h_basis;
        // echelon of [coboundaries; h_basis-cocycles] for coordinates
        std::vector<std::vector<long long>> solve_rows;
        std::vector<int> solve_pivots;
    };
    std::vector<DimData> data_;
};

enum class PowerNormalization {
    SignedFactorial,   // (-1)^{C(ir,2)+C(m,2) r~} (r~!)^m x^r (mu(e_{ri} (x) a))
    InverseFactorial,  // (r~!)^{-m} x^r (mu(e_{ri} (x) a))
};

struct PowerOpResult {
    Cochain representative;
    bool input_was_cocycle = true;
    bool output_is_cocycle = true;
    long long mu_terms_evaluated = 0;
};

// The power operation P^i on a mod-p cocycle of dimension m, evaluated by
// pairing x^{(x) r} with the q = r*i component of the connected diagonal.
// For r = 2 all constants are 1 and arithmetic is over F_2.
PowerOpResult power_op(const PsiEngine& eng, const ReducedComplex& H, int i, const Cochain& x,
                       PowerNormalization norm = PowerNormalization::SignedFactorial);

// Bockstein of a mod-2 class from the integral cochain complex: lift, take
// the integral coboundary, divide by 2.
Cochain bockstein_mod2(const ReducedComplex& H, const Cochain& x);

struct NormalizationReport {
    struct Row {
        int dim;
        int index;
        bool s3_identity;  // P^0 acts as identity under the signed-factorial constant
        bool s9_identity;
        std::string s3_coords;
        std::string s9_coords;
    };
    std::vector<Row> rows;
    std::string str() const;
};

// Tabulates P^0 on every cohomology generator under both normalizations.
NormalizationReport normalization_report(const PsiEngine& eng, const ReducedComplex& H);

}  // namespace cyd

#endif
