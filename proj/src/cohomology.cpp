#include "cycdiag/cohomology.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace cyd {

namespace {

long long mod(long long a, long long p)
{
    return ((a % p) + p) % p;
}

// Gaussian elimination mod p; rows are modified in place.  Returns pivots
// (column index per row of the echelon).
std::vector<int> echelon(std::vector<std::vector<long long>>& rows, long long p)
{
    std::vector<int> pivots;
    std::size_t rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[rank], rows[sel]);
        long long inv = Rational::inverse_mod(rows[rank][col], p);
        for (auto& v : rows[rank])
            v = mod(v * inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0)
                continue;
            long long f = rows[i][col];
            for (std::size_t c = 0; c < cols; ++c)
                rows[i][c] = mod(rows[i][c] - f * rows[rank][c], p);
        }
        pivots.push_back((int)col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

std::vector<std::vector<long long>> kernel_basis(const std::vector<std::vector<long long>>& mat,
                                                 std::size_t cols, long long p)
{
    // mat: one row per output coordinate?  We instead solve x M^T = 0 with x
    // over the domain basis: build rows = domain vectors of images.
    std::vector<std::vector<long long>> rows = mat;
    std::vector<int> pivots = echelon(rows, p);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<long long>> ker;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<long long> v(cols, 0);
        v[free_col] = 1;
        for (std::size_t rix = 0; rix < rows.size(); ++rix)
            v[pivots[rix]] = mod(-rows[rix][free_col], p);
        ker.push_back(std::move(v));
    }
    return ker;
}

}  // namespace

ReducedComplex::ReducedComplex(AugSimplicialSet X, int p) : X_(std::move(X)), p_(p)
{
    if (!is_prime(p))
        throw std::invalid_argument("ReducedComplex: p must be prime");
    int top = X_.top_dim();
    data_.resize(top + 3);  // dims -1 .. top+1 (top+1 empty)
    for (int d = -1; d <= top + 1; ++d)
        reduce_dim(d);
}

int ReducedComplex::max_dim() const
{
    return X_.top_dim();
}

Cochain ReducedComplex::coboundary(const Cochain& x) const
{
    Cochain out;
    out.dim = x.dim + 1;
    out.values.assign(X_.cell_count(out.dim), 0);
    for (int idx = 0; idx < X_.cell_count(out.dim); ++idx) {
        CellRef tau{out.dim, idx};
        long long v = 0;
        for (int i = 0; i <= out.dim; ++i) {
            CellRef f = X_.face(tau, i);
            if (f.is_basepoint())
                continue;
            long long xi = x.values[f.idx];
            v += (i % 2 == 0) ? xi : -xi;
        }
        out.values[idx] = mod(v, p_);
    }
    return out;
}

bool ReducedComplex::is_cocycle(const Cochain& x) const
{
    Cochain d = coboundary(x);
    for (long long v : d.values)
        if (v != 0)
            return false;
    return true;
}

void ReducedComplex::reduce_dim(int dim)
{
    DimData& dd = data_[dim + 1];
    int cells = X_.cell_count(dim);

    // kernel of delta: rows = transpose-style image vectors per domain cell
    int target = X_.cell_count(dim + 1);
    std::vector<std::vector<long long>> mat;  // one row per target cell
    mat.assign(target, std::vector<long long>(cells, 0));
    for (int t = 0; t < target; ++t) {
        CellRef tau{dim + 1, t};
        for (int i = 0; i <= dim + 1; ++i) {
            CellRef f = X_.face(tau, i);
            if (f.is_basepoint())
                continue;
            mat[t][f.idx] = mod(mat[t][f.idx] + ((i % 2 == 0) ? 1 : -1), p_);
        }
    }
    dd.cocycles = kernel_basis(mat, cells, p_);

    // image of delta from dim-1
    int source = X_.cell_count(dim - 1);
    std::vector<std::vector<long long>> img;
    for (int s = 0; s < source; ++s) {
        Cochain e;
        e.dim = dim - 1;
        e.values.assign(source, 0);
        e.values[s] = 1;
        Cochain de = coboundary(e);
        bool nz = false;
        for (long long v : de.values)
            nz = nz || v != 0;
        if (nz)
            img.push_back(de.values);
    }
    echelon(img, p_);
    dd.coboundaries = img;

    // cohomology basis: extend coboundaries to the cocycle space
    std::vector<std::vector<long long>> span = dd.coboundaries;
    std::vector<int> pivots = echelon(span, p_);
    for (const auto& z : dd.cocycles) {
        std::vector<std::vector<long long>> trial = span;
        trial.push_back(z);
        std::vector<int> piv2 = echelon(trial, p_);
        if (trial.size() > span.size()) {
            span = trial;
            Cochain rep;
            rep.dim = dim;
            rep.values = z;
            dd.h_basis.push_back(rep);
        }
    }

    // solver rows: [coboundary basis | h basis], echelonized together with
    // bookkeeping columns so class coordinates can be read off
    std::size_t nb = dd.coboundaries.size();
    std::size_t nh = dd.h_basis.size();
    std::vector<std::vector<long long>> rows;
    for (std::size_t i = 0; i < nb + nh; ++i) {
        std::vector<long long> row((std::size_t)cells + nh, 0);
        const std::vector<long long>& vec =
            (i < nb) ? dd.coboundaries[i] : dd.h_basis[i - nb].values;
        for (int c = 0; c < cells; ++c)
            row[c] = vec[c];
        if (i >= nb)
            row[cells + (i - nb)] = 1;  // marker for the class coordinate
        rows.push_back(std::move(row));
    }
    dd.solve_pivots = echelon(rows, p_);
    dd.solve_rows = rows;
}

int ReducedComplex::betti(int dim) const
{
    return (int)data_[dim + 1].h_basis.size();
}

std::vector<Cochain> ReducedComplex::cohomology_basis(int dim) const
{
    return data_[dim + 1].h_basis;
}

std::vector<long long> ReducedComplex::class_coordinates(const Cochain& x) const
{
    if (!is_cocycle(x))
        throw std::invalid_argument("class_coordinates: not a cocycle");
    const DimData& dd = data_[x.dim + 1];
    int cells = X_.cell_count(x.dim);
    std::size_t nh = dd.h_basis.size();
    // reduce x against the solver rows; the marker columns accumulate the
    // negated coordinates
    std::vector<long long> v((std::size_t)cells + nh, 0);
    for (int c = 0; c < cells; ++c)
        v[c] = mod(x.values[c], p_);
    for (std::size_t rix = 0; rix < dd.solve_rows.size(); ++rix) {
        int pivot = dd.solve_pivots[rix];
        if (pivot >= cells)
            continue;
        long long f = v[pivot];
        if (f == 0)
            continue;
        for (std::size_t c = 0; c < v.size(); ++c)
            v[c] = mod(v[c] - f * dd.solve_rows[rix][c], p_);
    }
    for (int c = 0; c < cells; ++c)
        if (v[c] != 0)
            throw std::logic_error("class_coordinates: cocycle outside the reduced span");
    std::vector<long long> coords(nh, 0);
    for (std::size_t h = 0; h < nh; ++h)
        coords[h] = mod(-v[cells + h], p_);
    return coords;
}

bool ReducedComplex::same_class(const Cochain& x, const Cochain& y) const
{
    return class_coordinates(x) == class_coordinates(y);
}

bool ReducedComplex::is_coboundary(const Cochain& x) const
{
    auto c = class_coordinates(x);
    return std::all_of(c.begin(), c.end(), [](long long t) { return t == 0; });
}

Cochain ReducedComplex::zero_cochain(int dim) const
{
    Cochain x;
    x.dim = dim;
    x.values.assign(X_.cell_count(dim), 0);
    return x;
}

Cochain ReducedComplex::random_cochain(int dim, unsigned seed) const
{
    std::mt19937 gen(seed);
    std::uniform_int_distribution<long long> dist(0, p_ - 1);
    Cochain x = zero_cochain(dim);
    for (auto& v : x.values)
        v = dist(gen);
    return x;
}

PowerOpResult power_op(const PsiEngine& eng, const ReducedComplex& H, int i, const Cochain& x,
                       PowerNormalization norm)
{
    const AugSimplicialSet& X = H.complex();
    int r = eng.r();
    int p = H.p();
    if (p != r)
        throw std::invalid_argument("power_op: p must equal r");
    PowerOpResult res;
    res.input_was_cocycle = H.is_cocycle(x);
    if (!res.input_was_cocycle)
        throw std::invalid_argument("power_op: input is not a cocycle");

    int m = x.dim;
    int out_dim = m + i;
    res.representative.dim = out_dim;
    res.representative.values.assign(X.cell_count(out_dim), 0);
    int q = r * i;

    long long rt = eng.rtilde_factorial();
    long long constant = 1;
    if (r != 2) {
        if (norm == PowerNormalization::SignedFactorial) {
            long long c = 1;
            for (int t = 0; t < m; ++t)
                c = mod(c * rt, p);
            long long ir = (long long)i * r;
            long long e = ir * (ir - 1) / 2 + (long long)m * (m - 1) / 2 * ((r - 1) / 2);
            constant = mod((e % 2 ? -1 : 1) * c, p);
        }
        else {
            long long c = 1;
            long long rt_inv = Rational::inverse_mod(mod(rt, p), p);
            for (int t = 0; t < m; ++t)
                c = mod(c * rt_inv, p);
            constant = c;
        }
    }

    if (q >= 0 && out_dim >= -1) {
        for (int idx = 0; idx < X.cell_count(out_dim); ++idx) {
            CellRef tau{out_dim, idx};
            TensorChain muv = mu_composed(eng, X, q, tau);
            long long acc = 0;
            for (const auto& [g, c] : muv.terms()) {
                ++res.mu_terms_evaluated;
                long long prod = c.mod_p(p);
                for (const auto& cell : g.cells) {
                    if (cell.dim != m) {
                        prod = 0;
                        break;
                    }
                    prod = mod(prod * x.values[cell.idx], p);
                }
                acc = mod(acc + prod, p);
            }
            res.representative.values[idx] = mod(acc * constant, p);
        }
    }
    res.output_is_cocycle =
        (out_dim >= -1) ? H.is_cocycle(res.representative) : true;
    return res;
}

Cochain bockstein_mod2(const ReducedComplex& H, const Cochain& x)
{
    if (H.p() != 2)
        throw std::invalid_argument("bockstein_mod2: complex must be mod 2");
    const AugSimplicialSet& X = H.complex();
    // integral lift with values in {0,1}, integral coboundary, halve
    Cochain out;
    out.dim = x.dim + 1;
    out.values.assign(X.cell_count(out.dim), 0);
    for (int idx = 0; idx < X.cell_count(out.dim); ++idx) {
        CellRef tau{out.dim, idx};
        long long v = 0;
        for (int i = 0; i <= out.dim; ++i) {
            CellRef f = X.face(tau, i);
            if (f.is_basepoint())
                continue;
            long long xi = x.values[f.idx];  // in {0,1}
            v += (i % 2 == 0) ? xi : -xi;
        }
        if (v % 2 != 0)
            throw std::logic_error("bockstein_mod2: input not a mod-2 cocycle");
        out.values[idx] = mod(v / 2, 2);
    }
    return out;
}

std::string NormalizationReport::str() const
{
    std::string s;
    for (const auto& row : rows) {
        s += "H^" + std::to_string(row.dim) + " generator " + std::to_string(row.index) +
             ": P^0 (s3) " + (row.s3_identity ? "= id" : "!= id") + " [" + row.s3_coords +
             "], P^0 (s9) " + (row.s9_identity ? "= id" : "!= id") + " [" + row.s9_coords +
             "]\n";
    }
    return s;
}

NormalizationReport normalization_report(const PsiEngine& eng, const ReducedComplex& H)
{
    NormalizationReport rep;
    for (int d = -1; d <= H.max_dim(); ++d) {
        auto basis = H.cohomology_basis(d);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            NormalizationReport::Row row;
            row.dim = d;
            row.index = (int)b;
            auto show = [](const std::vector<long long>& v) {
                std::string s;
                for (std::size_t i = 0; i < v.size(); ++i)
                    s += (i ? "," : "") + std::to_string(v[i]);
                return s;
            };
            std::vector<long long> self = H.class_coordinates(basis[b]);

            auto p3 = power_op(eng, H, 0, basis[b], PowerNormalization::SignedFactorial);
            auto c3 = H.class_coordinates(p3.representative);
            row.s3_identity = (c3 == self);
            row.s3_coords = show(c3);

            auto p9 = power_op(eng, H, 0, basis[b], PowerNormalization::InverseFactorial);
            auto c9 = H.class_coordinates(p9.representative);
            row.s9_identity = (c9 == self);
            row.s9_coords = show(c9);
            rep.rows.push_back(row);
        }
    }
    return rep;
}

}  // namespace cyd
