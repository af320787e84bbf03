#ifndef CYCDIAG_COMPLEX_HPP
#define CYCDIAG_COMPLEX_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycdiag/simplicial.hpp"

namespace cyd {

// Handle to a cell of an augmented semi-simplicial set.  idx < 0 denotes the
// basepoint of a pointed complex (in any dimension).
struct CellRef {
    int dim = -1;
    int idx = -1;
    bool is_basepoint() const { return idx < 0; }
    friend bool operator<(const CellRef& a, const CellRef& b)
    {
        if (a.dim != b.dim)
            return a.dim < b.dim;
        return a.idx < b.idx;
    }
    friend bool operator==(const CellRef& a, const CellRef& b)
    {
        return a.dim == b.dim && a.idx == b.idx;
    }
};

// Finite augmented semi-simplicial set: cells per dimension m >= -1 with
// face maps d_i, faces of a basepoint being basepoints.  Only face-only
// structure is stored; normalized chains are generated by the stored cells.
class AugSimplicialSet {
public:
    AugSimplicialSet() = default;

    int top_dim() const { return (int)cells_.size() - 2; }
    bool pointed() const { return pointed_; }
    void set_pointed(bool p) { pointed_ = p; }

    int cell_count(int dim) const
    {
        if (dim < -1 || dim > top_dim())
            return 0;
        return (int)cells_[dim + 1].size();
    }

    const std::string& cell_name(const CellRef& c) const { return cells_[c.dim + 1][c.idx]; }

    CellRef cell_by_name(int dim, const std::string& name) const
    {
        if (dim < -1 || dim > top_dim())
            throw std::invalid_argument("cell_by_name: no such dimension");
        auto it = index_[dim + 1].find(name);
        if (it == index_[dim + 1].end())
            throw std::invalid_argument("cell_by_name: unknown cell '" + name + "' in dim " +
                                        std::to_string(dim));
        return CellRef{dim, it->second};
    }

    std::optional<CellRef> find_cell(const std::string& name) const
    {
        for (int d = -1; d <= top_dim(); ++d) {
            auto it = index_[d + 1].find(name);
            if (it != index_[d + 1].end())
                return CellRef{d, it->second};
        }
        return std::nullopt;
    }

    // d_i; basepoints propagate.
    CellRef face(const CellRef& c, int i) const
    {
        if (c.is_basepoint())
            return CellRef{c.dim - 1, -1};
        if (i < 0 || i > c.dim)
            throw std::invalid_argument("face: index out of range");
        return CellRef{c.dim - 1, faces_[c.dim + 1][c.idx][i]};
    }

    // d_U for an increasing position list U; positions are removed from the
    // largest down so earlier indices stay valid.
    CellRef face_multi(const CellRef& c, const std::vector<int>& positions) const
    {
        CellRef cur = c;
        for (auto it = positions.rbegin(); it != positions.rend(); ++it)
            cur = face(cur, *it);
        return cur;
    }

    int add_cell(int dim, const std::string& name)
    {
        if (dim < -1)
            throw std::invalid_argument("add_cell: dimension < -1");
        while ((int)cells_.size() < dim + 2) {
            cells_.emplace_back();
            index_.emplace_back();
            faces_.emplace_back();
        }
        if (index_[dim + 1].count(name))
            throw std::invalid_argument("add_cell: duplicate cell id '" + name + "'");
        cells_[dim + 1].push_back(name);
        index_[dim + 1][name] = (int)cells_[dim + 1].size() - 1;
        faces_[dim + 1].emplace_back(std::vector<int>(dim >= 0 ? dim + 1 : 0, -2));
        return (int)cells_[dim + 1].size() - 1;
    }

    // face index -1 = basepoint
    void set_face(int dim, int idx, int i, int face_idx)
    {
        faces_[dim + 1][idx][i] = face_idx;
    }

    // Checks d_i d_j = d_{j-1} d_i for i < j on every cell, that every face
    // is assigned, and that the (-1) layer is nonempty unless pointed.
    void validate() const
    {
        if (!pointed_ && cell_count(-1) == 0)
            throw std::invalid_argument("validate: empty (-1) layer in an unpointed complex");
        for (int d = 0; d <= top_dim(); ++d) {
            for (int idx = 0; idx < cell_count(d); ++idx) {
                CellRef c{d, idx};
                for (int i = 0; i <= d; ++i) {
                    if (faces_[d + 1][idx][i] == -2)
                        throw std::invalid_argument("validate: missing face d_" +
                                                    std::to_string(i) + " of '" + cell_name(c) +
                                                    "'");
                    if (faces_[d + 1][idx][i] == -1 && !pointed_)
                        throw std::invalid_argument("validate: basepoint face in an unpointed "
                                                    "complex at '" +
                                                    cell_name(c) + "'");
                }
                for (int j = 1; j <= d; ++j)
                    for (int i = 0; i < j; ++i) {
                        CellRef a = face(face(c, j), i);
                        CellRef b = face(face(c, i), j - 1);
                        if (!(a == b))
                            throw std::invalid_argument(
                                "validate: d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                " != d_" + std::to_string(j - 1) + " d_" + std::to_string(i) +
                                " on cell '" + cell_name(c) + "'");
                    }
            }
        }
    }

    // Normalized chain differential of a cell (chain degree = dim + 1).
    template <class MakeKey>
    auto boundary(const CellRef& c, MakeKey make_key) const
        -> Chain<decltype(make_key(c))>
    {
        Chain<decltype(make_key(c))> out;
        if (c.is_basepoint() || c.dim < 0)
            return out;
        for (int i = 0; i <= c.dim; ++i) {
            CellRef f = face(c, i);
            if (f.is_basepoint())
                continue;
            out.add(make_key(f), parity_sign(i));
        }
        return out;
    }

    // --- builders ---

    // Downward closure of one simplex with the given vertex labels, plus the
    // terminal (-1)-cell.  standard_simplex(n) is the closure of [0..n].
    static AugSimplicialSet simplex_closure(const std::vector<int>& vertices);
    static AugSimplicialSet standard_simplex(int n);
    // Boundary of the standard n-simplex: all proper faces.
    static AugSimplicialSet boundary_simplex(int n);
    // Abstract simplicial complex from facets, augmented by the terminal object.
    static AugSimplicialSet from_facets(const std::vector<std::vector<int>>& facets);
    // The 6-vertex triangulation of the real projective plane.
    static AugSimplicialSet rp2();
    // Named builder strings: "simplex(n)", "boundary(n)", "rp2", "circle".
    static AugSimplicialSet from_builder(const std::string& spec);

    // Left (new vertex in front) or right (new vertex at the end) suspension
    // of a pointed complex; the result is pointed.
    AugSimplicialSet suspend(bool left) const;

    // Suspended image of a cell (cells keep their index, dimension + 1).
    CellRef suspended_cell(const CellRef& c) const { return CellRef{c.dim + 1, c.idx}; }

private:
    bool pointed_ = false;
    std::vector<std::vector<std::string>> cells_;         // [dim+1][idx] -> id
    std::vector<std::map<std::string, int>> index_;       // id -> idx
    std::vector<std::vector<std::vector<int>>> faces_;    // [dim+1][idx][i] -> idx in dim-1
};

inline std::string vertex_list_name(const std::vector<int>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

inline AugSimplicialSet AugSimplicialSet::simplex_closure(const std::vector<int>& vertices)
{
    std::vector<std::vector<int>> facets{vertices};
    return from_facets(facets);
}

inline AugSimplicialSet AugSimplicialSet::standard_simplex(int n)
{
    std::vector<int> v;
    for (int i = 0; i <= n; ++i)
        v.push_back(i);
    return simplex_closure(v);
}

inline AugSimplicialSet AugSimplicialSet::boundary_simplex(int n)
{
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> f;
        for (int i = 0; i <= n; ++i)
            if (i != skip)
                f.push_back(i);
        facets.push_back(std::move(f));
    }
    return from_facets(facets);
}

inline AugSimplicialSet AugSimplicialSet::from_facets(const std::vector<std::vector<int>>& facets)
{
    std::set<std::vector<int>> subsets;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("from_facets: facet with a repeated vertex");
        int m = (int)f.size();
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i))
                    s.push_back(f[i]);
            subsets.insert(std::move(s));
        }
    }
    AugSimplicialSet X;
    X.add_cell(-1, "[]");
    std::map<std::vector<int>, std::pair<int, int>> handle;
    handle[{}] = {-1, 0};
    for (const auto& s : subsets) {
        int dim = (int)s.size() - 1;
        int idx = X.add_cell(dim, vertex_list_name(s));
        handle[s] = {dim, idx};
    }
    for (const auto& s : subsets) {
        int dim = (int)s.size() - 1;
        int idx = handle[s].second;
        for (int i = 0; i <= dim; ++i) {
            std::vector<int> f = s;
            f.erase(f.begin() + i);
            X.set_face(dim, idx, i, handle.at(f).second);
        }
    }
    X.validate();
    return X;
}

inline AugSimplicialSet AugSimplicialSet::rp2()
{
    return from_facets({{1, 2, 3},
                        {1, 2, 4},
                        {1, 3, 5},
                        {1, 4, 6},
                        {1, 5, 6},
                        {2, 3, 6},
                        {2, 4, 5},
                        {2, 5, 6},
                        {3, 4, 5},
                        {3, 4, 6}});
}

inline AugSimplicialSet AugSimplicialSet::from_builder(const std::string& spec)
{
    auto parse_arg = [&](const std::string& head) -> std::optional<int> {
        if (spec.rfind(head + "(", 0) == 0 && spec.back() == ')')
            return std::stoi(spec.substr(head.size() + 1, spec.size() - head.size() - 2));
        return std::nullopt;
    };
    if (auto n = parse_arg("simplex"))
        return standard_simplex(*n);
    if (auto n = parse_arg("boundary"))
        return boundary_simplex(*n);
    if (spec == "rp2")
        return rp2();
    if (spec == "circle")
        return from_facets({{0, 1}, {1, 2}, {0, 2}});
    throw std::invalid_argument("from_builder: unknown builder '" + spec + "'");
}

inline AugSimplicialSet AugSimplicialSet::suspend(bool left) const
{
    AugSimplicialSet S;
    S.pointed_ = true;
    for (int d = -1; d <= top_dim(); ++d)
        for (int idx = 0; idx < cell_count(d); ++idx)
            S.add_cell(d + 1, "S" + cell_name(CellRef{d, idx}));
    for (int d = -1; d <= top_dim(); ++d)
        for (int idx = 0; idx < cell_count(d); ++idx) {
            int nd = d + 1;
            if (left) {
                S.set_face(nd, idx, 0, -1);
                for (int i = 1; i <= nd; ++i) {
                    CellRef f = face(CellRef{d, idx}, i - 1);
                    S.set_face(nd, idx, i, f.idx);
                }
            }
            else {
                for (int i = 0; i < nd; ++i) {
                    CellRef f = face(CellRef{d, idx}, i);
                    S.set_face(nd, idx, i, f.idx);
                }
                S.set_face(nd, idx, nd, -1);
            }
        }
    S.validate();
    return S;
}

}  // namespace cyd

#endif
