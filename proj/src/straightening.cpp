#include "cycdiag/straightening.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyd {

namespace {

int rotate_mask(int mask, int r)
{
    int out = 0;
    for (int v = 0; v < r; ++v)
        if (mask & (1 << v))
            out |= 1 << ((v + 1) % r);
    return out;
}

std::vector<int> mask_to_set(int mask, int r)
{
    std::vector<int> s;
    for (int v = 0; v < r; ++v)
        if (mask & (1 << v))
            s.push_back(v);
    return s;
}

// orbit representatives (smallest mask) of proper nonempty subsets, sorted
std::vector<int> orbit_reps(int r)
{
    int full = (1 << r) - 1;
    std::vector<int> reps;
    std::vector<bool> seen(full + 1, false);
    for (int mask = 1; mask < full; ++mask) {
        if (seen[mask])
            continue;
        reps.push_back(mask);
        int m = mask;
        for (int t = 0; t < r; ++t) {
            seen[m] = true;
            m = rotate_mask(m, r);
        }
    }
    return reps;
}

}  // namespace

std::vector<std::pair<std::vector<int>, int>> Straightening::orbit_table() const
{
    std::vector<std::pair<std::vector<int>, int>> out;
    for (int rep : orbit_reps(r_))
        out.emplace_back(mask_to_set(rep, r_), choice_[rep]);
    return out;
}

std::string Straightening::key() const
{
    std::string k = std::to_string(r_) + ":";
    for (int rep : orbit_reps(r_))
        k += std::to_string(choice_[rep]) + ",";
    return k;
}

std::vector<Straightening> Straightening::enumerate(int r, bool require_duality)
{
    if (!is_prime(r))
        throw std::invalid_argument(
            "straightenings: r must be prime (the cyclic action on barycenters has fixed "
            "points otherwise), got r = " +
            std::to_string(r));

    std::vector<int> reps = orbit_reps(r);
    // admissible choices per orbit representative
    std::vector<std::vector<int>> options;
    for (int rep : reps) {
        std::vector<int> opts;
        for (int v : mask_to_set(rep, r)) {
            if (require_duality) {
                int pred = (v + r - 1) % r;
                if (rep & (1 << pred))
                    continue;  // predecessor inside tau breaks duality
            }
            opts.push_back(v);
        }
        options.push_back(opts);
    }

    std::vector<Straightening> out;
    std::vector<std::size_t> pick(reps.size(), 0);
    while (true) {
        bool feasible = true;
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (options[i].empty())
                feasible = false;
        if (!feasible)
            break;

        std::vector<int> table(1 << r, -1);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            int mask = reps[i];
            int x = options[i][pick[i]];
            for (int t = 0; t < r; ++t) {
                table[mask] = x;
                mask = rotate_mask(mask, r);
                x = (x + 1) % r;
            }
        }
        out.emplace_back(r, std::move(table), require_duality,
                         std::to_string(r) + "#" + std::to_string(out.size()));

        // odometer, earliest orbit fastest
        std::size_t i = 0;
        while (i < reps.size()) {
            if (++pick[i] < options[i].size())
                break;
            pick[i] = 0;
            ++i;
        }
        if (i == reps.size())
            break;
    }
    return out;
}

Straightening Straightening::preset(const std::string& name)
{
    if (name == "2" || name == "3" || name == "7") {
        int r = std::stoi(name);
        return first_with_duality(r);
    }
    if (name.size() == 2 && name[0] == '5' && name[1] >= 'a' && name[1] <= 'd') {
        auto all = enumerate(5, true);
        Straightening s = all[name[1] - 'a'];
        return Straightening(5, std::vector<int>(s.choice_), true, name);
    }
    auto hash = name.find('#');
    if (hash != std::string::npos) {
        int r = std::stoi(name.substr(0, hash));
        int k = std::stoi(name.substr(hash + 1));
        auto all = enumerate(r, true);
        if (k < 0 || k >= (int)all.size())
            throw std::invalid_argument("preset: index out of range in '" + name + "'");
        return all[k];
    }
    throw std::invalid_argument("preset: unknown straightening '" + name + "'");
}

Straightening Straightening::first_with_duality(int r)
{
    auto all = enumerate(r, true);
    if (all.empty())
        throw std::invalid_argument("no duality straightening for r = " + std::to_string(r));
    return all[0];
}

std::string SdGen::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < bars.size(); ++i) {
        if (i)
            s += "|";
        for (std::size_t j = 0; j < bars[i].size(); ++j)
            s += (j ? "," : "") + std::to_string(bars[i][j]);
    }
    return s + ")";
}

std::string PairGen::str() const
{
    return "(" + Simplex(b).str() + " (x) " + Simplex(a).str() + ")";
}

SdChain sd_boundary(const SdGen& g)
{
    SdChain out;
    int k = g.degree();
    for (int i = 0; i + 1 < k; ++i) {
        SdGen m;
        m.bars = g.bars;
        std::vector<int> merged = m.bars[i];
        merged.insert(merged.end(), m.bars[i + 1].begin(), m.bars[i + 1].end());
        std::sort(merged.begin(), merged.end());
        m.bars[i] = std::move(merged);
        m.bars.erase(m.bars.begin() + i + 1);
        out.add(m, parity_sign(i));
    }
    if (k >= 1) {
        SdGen m;
        m.bars = std::vector<std::vector<int>>(g.bars.begin(), g.bars.end() - 1);
        if (!m.bars.empty())
            out.add(m, parity_sign(k - 1));
    }
    return out;
}

PairChain pair_boundary_subdiv(const PairGen& g, int n)
{
    PairChain out;
    // dual differential on b: (d^ f)(t) = (-1)^{|f|+1} f(d t); here f = b^
    // of cochain degree -|b|, so the sign is (-1)^{|b|+1} and the terms are
    // the ways of inserting one vertex into b.
    int m = (int)g.b.size();
    Rational sb = parity_sign(m + 1);
    for (int v = 0; v <= n; ++v) {
        if (std::binary_search(g.b.begin(), g.b.end(), v))
            continue;
        std::vector<int> nb = g.b;
        nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
        int pos = (int)(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
        bool supported = true;
        for (int x : nb)
            if (!std::binary_search(g.a.begin(), g.a.end(), x))
                supported = false;
        if (!supported)
            continue;
        if ((int)nb.size() == n + 1)
            continue;  // the full simplex is not a face of the boundary
        out.add(PairGen{nb, g.a}, sb * parity_sign(pos));
    }
    // Koszul: b has cochain degree -m
    Rational sa = parity_sign(m);
    for (std::size_t i = 0; i < g.a.size(); ++i) {
        std::vector<int> na = g.a;
        na.erase(na.begin() + i);
        bool supported = true;
        for (int x : g.b)
            if (!std::binary_search(na.begin(), na.end(), x))
                supported = false;
        if (!supported)
            continue;
        out.add(PairGen{g.b, na}, sa * parity_sign((long long)i));
    }
    return out;
}

SdChain s_star(const Simplex& t)
{
    SdChain out;
    std::vector<int> perm = t.v;
    std::sort(perm.begin(), perm.end());
    if (perm.empty())
        return out;
    do {
        SdGen g;
        for (int v : perm)
            g.bars.push_back({v});
        out.add(g, parity_sign(sort_parity(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

PairChain s_star_delta(const Simplex& t)
{
    PairChain out;
    int k = t.degree();
    for (int j = 0; j < k; ++j)
        out.add(PairGen{{t.v[j]}, t.v}, parity_sign(k));
    return out;
}

SdChain s_star_P(const PairGen& g)
{
    // write a as [b, c] up to sign, then bar the c-part in all orders
    std::vector<int> c;
    for (int x : g.a)
        if (!std::binary_search(g.b.begin(), g.b.end(), x))
            c.push_back(x);
    auto lam = lambda_sign(g.b, c);
    if (!lam)
        return {};
    int ell = (int)c.size();
    Rational pref = parity_sign(*lam) * parity_sign(ell + 1);
    SdChain out;
    std::vector<int> perm = c;
    if (perm.empty()) {
        SdGen flag;
        flag.bars.push_back(g.b);
        out.add(flag, pref);
        return out;
    }
    do {
        SdGen flag;
        flag.bars.push_back(g.b);
        for (int v : perm)
            flag.bars.push_back({v});
        std::vector<int> rel;  // parity of perm relative to c's stored order
        for (int v : perm)
            rel.push_back((int)(std::find(c.begin(), c.end(), v) - c.begin()));
        out.add(flag, pref * parity_sign(sort_parity(rel)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

PairChain h_map(const Simplex& b, const Simplex& a, int n)
{
    auto [sign, dual] = alexander_dual(b, n);
    for (int x : dual.v)
        if (!std::binary_search(a.v.begin(), a.v.end(), x))
            return {};
    PairChain out;
    out.add(PairGen{dual.v, a.v}, sign);
    return out;
}

SdChain lambda_sd(const SdGen& g, int n)
{
    int k = g.degree();
    SdGen m;
    m.bars.push_back(complement_in(Simplex(g.cumulative(k - 1)), n).v);
    for (int i = k - 1; i >= 1; --i)
        m.bars.push_back(g.bars[i]);
    SdChain out;
    out.add(m, parity_sign((long long)k * (k - 1) / 2));
    return out;
}

PairChain lambda_pair(const PairGen& g, int n)
{
    // twist o (Lambda^{-1} (x) Lambda): b^ |-> (-1)^{lambda(b^c,b)} b^c and
    // a |-> (-1)^{lambda(a,a^c)} (a^c)^, the Koszul twist sign, and the
    // left-convention crossing sign (n+1)|b| of moving the second duality
    // operator past the first factor.
    int m = (int)g.b.size();
    int k = (int)g.a.size();
    Simplex bc = complement_in(Simplex(g.b), n);
    Simplex ac = complement_in(Simplex(g.a), n);
    auto l1 = lambda_sign(bc.v, g.b);
    auto l2 = lambda_sign(g.a, ac.v);
    long long e = *l1 + *l2;
    e += (long long)(n + 1 - m) * (n + 1 - k);  // twist of the images
    e += (long long)(n + 1) * m;
    Rational s = parity_sign(e);
    for (int x : ac.v)
        if (!std::binary_search(bc.v.begin(), bc.v.end(), x))
            return {};
    PairChain out;
    out.add(PairGen{ac.v, bc.v}, s);
    return out;
}

SimplexChain g_map(const Straightening& s, const SdGen& flag)
{
    std::vector<int> values;
    int k = flag.degree();
    for (int i = 0; i < k; ++i)
        values.push_back(s.choose(flag.cumulative(i)));
    return tuple_chain(values);
}

SimplexChain f_map(const Straightening& s, const Simplex& t1, const Simplex& t2,
                   std::vector<std::string>* trace)
{
    int r = s.r();
    int n = r - 1;
    int k = t1.degree();
    int m = t2.degree();
    Rational pref = parity_sign((long long)r * (k + m));
    Rational tw = parity_sign((long long)k * m);
    if (trace) {
        trace->push_back("prefactor (-1)^{r(k+m)} = " + pref.str());
        trace->push_back("twist sign (-1)^{km} = " + tw.str());
    }
    PairChain after_h = h_map(t2, t1, n);
    after_h *= pref * tw;
    if (trace) {
        std::string hs = "h: ";
        for (const auto& [g, c] : after_h.terms())
            hs += c.str() + "*" + g.str() + " ";
        trace->push_back(after_h.is_zero() ? "h: 0 (support condition)" : hs);
    }
    SdChain flags;
    for (const auto& [g, c] : after_h.terms()) {
        SdChain part = s_star_P(g);
        part *= c;
        flags += part;
    }
    if (trace) {
        std::string fs = "s_*^P: ";
        for (const auto& [g, c] : flags.terms())
            fs += c.str() + "*" + g.str() + " ";
        trace->push_back(flags.is_zero() ? "s_*^P: 0" : fs);
    }
    SimplexChain out;
    for (const auto& [g, c] : flags.terms()) {
        SimplexChain part = g_map(s, g);
        part *= c;
        out += part;
    }
    if (trace) {
        std::string gs = "g_*: ";
        for (const auto& [g, c] : out.terms())
            gs += c.str() + "*" + g.str() + " ";
        trace->push_back(out.is_zero() ? "g_*: 0" : gs);
    }
    return out;
}

}  // namespace cyd
