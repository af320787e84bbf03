#include "cycdiag/resolutions.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyd {

std::string WGen::str() const
{
    std::string base;
    switch (side) {
        case WSide::W: base = "e"; break;
        case WSide::RW: base = "e"; break;
        case WSide::RWD: base = "e^"; break;
    }
    std::string p = power ? ("r^" + std::to_string(power) + " ") : "";
    return p + base + std::to_string(side == WSide::RWD ? -q : q);
}

WChain rho_act(int r, const WGen& g, int times)
{
    int t = ((times % r) + r) % r;
    WGen h = g;
    if (g.side == WSide::RWD) {
        if (g.q == 0)
            return WChain(g);  // 1 carries the trivial action
        h.power = ((g.power - t) % r + r) % r;  // rho (rho^j e_q)^ = (rho^{j-1} e_q)^
    }
    else {
        if (g.side == WSide::RW && g.q == 0)
            return WChain(g);
        h.power = (g.power + t) % r;
    }
    return WChain(h);
}

WChain rho_act(int r, const WChain& c, int times)
{
    WChain out;
    for (const auto& [g, coef] : c.terms()) {
        WChain img = rho_act(r, g, times);
        img *= coef;
        out += img;
    }
    return out;
}

WChain norm_N(int r, const WChain& c)
{
    WChain out;
    for (int t = 0; t < r; ++t)
        out += rho_act(r, c, t);
    return out;
}

WChain twist_T(int r, const WChain& c)
{
    return rho_act(r, c, 1) - c;
}

WChain w_boundary(int r, const WGen& g)
{
    WChain out;
    switch (g.side) {
        case WSide::W: {
            if (g.q == 0)
                return out;
            WChain prev(WGen{WSide::W, g.power, g.q - 1});
            return (g.q % 2 == 0) ? norm_N(r, prev) : twist_T(r, prev);
        }
        case WSide::RW: {
            if (g.q == 0)
                return out;
            if (g.q == 1) {
                out.add(WGen{WSide::RW, 0, 0}, Rational(1));  // augmentation
                return out;
            }
            WChain prev(WGen{WSide::RW, g.power, g.q - 1});
            return (g.q % 2 == 0) ? twist_T(r, prev) : norm_N(r, prev);
        }
        case WSide::RWD: {
            WChain next(WGen{WSide::RWD, g.power, g.q + 1});
            if (g.q == 0)
                return -norm_N(r, next);
            return (g.q % 2 == 1) ? twist_T(r, next) : -norm_N(r, next);
        }
    }
    return out;
}

WChain theta_dual(int r, int k, const WGen& g)
{
    if (g.side != WSide::RWD)
        throw std::invalid_argument("theta_dual: generator not in the dual complex");
    if (r != 2 && k % 2 != 0)
        throw std::invalid_argument("theta_dual: odd shift requires r = 2");
    WChain out;
    if (g.q == 0) {
        if (k < 0)
            return norm_N(r, WChain(WGen{WSide::RWD, 0, -k}));
        if (k == 0)
            out.add(g, Rational(1));
        return out;
    }
    int target = k - g.q;  // new degree
    if (target > 0)
        return out;
    if (target == 0) {
        out.add(WGen{WSide::RWD, 0, 0}, Rational(1));
        return out;
    }
    out.add(WGen{WSide::RWD, g.power, -target}, Rational(1));
    return out;
}

WChain theta_rw_up(int r, int s, const WGen& g)
{
    if (g.side != WSide::RW)
        throw std::invalid_argument("theta_rw_up: generator not in rW");
    if (s == 0)
        return WChain(g);
    if (g.q == 0)
        return norm_N(r, WChain(WGen{WSide::RW, 0, s}));
    return WChain(WGen{WSide::RW, g.power, g.q + s});
}

WChain theta_rw_up(int r, int s, const WChain& c)
{
    WChain out;
    for (const auto& [g, coef] : c.terms()) {
        WChain img = theta_rw_up(r, s, g);
        img *= coef;
        out += img;
    }
    return out;
}

// --- pieced words ---

std::string PiecedWord::str() const
{
    if (pieces.empty())
        return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i)
            s += "|";
        for (int v : pieces[i])
            s += std::to_string(v);
    }
    return s + ")";
}

std::string BarWord::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

std::optional<std::pair<int, PiecedWord>> normalize_word(
    const std::vector<std::vector<int>>& raw_pieces)
{
    int parity = 0;
    PiecedWord w;
    for (const auto& p : raw_pieces) {
        if (p.empty())
            continue;
        int sp = sort_parity(p);
        if (sp < 0)
            return std::nullopt;
        parity = (parity + sp) % 2;
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        w.pieces.push_back(std::move(sorted));
    }
    return std::make_pair(parity, w);
}

int count_full_pieces(int r, const PiecedWord& w)
{
    int c = 0;
    for (const auto& p : w.pieces)
        if ((int)p.size() == r)
            ++c;
    return c;
}

WordChain rho_word(int r, const PiecedWord& w)
{
    std::vector<std::vector<int>> raw;
    for (const auto& p : w.pieces) {
        std::vector<int> np;
        for (int v : p)
            np.push_back((v + 1) % r);
        raw.push_back(np);
    }
    auto n = normalize_word(raw);
    if (!n)
        return {};
    return WordChain(n->second, parity_sign(n->first));
}

std::pair<WordChain, WordChain> omega_boundary(int r, const PiecedWord& w)
{
    WordChain nf, f;
    int pos = 0;
    for (std::size_t pi = 0; pi < w.pieces.size(); ++pi) {
        for (std::size_t k = 0; k < w.pieces[pi].size(); ++k, ++pos) {
            std::vector<std::vector<int>> raw = w.pieces;
            raw[pi].erase(raw[pi].begin() + k);
            auto n = normalize_word(raw);
            if (!n)
                continue;
            if (count_full_pieces(r, n->second) > 0)
                f.add(n->second, parity_sign(pos + n->first));
            else
                nf.add(n->second, parity_sign(pos + n->first));
        }
    }
    return {nf, f};
}

WordChain D_map(int r, const PiecedWord& w)
{
    int fulls = count_full_pieces(r, w);
    if (fulls == 0)
        return {};
    if (fulls > 1)
        throw std::invalid_argument("D_map: more than one full piece");
    int j = -1, before = 0;
    for (std::size_t i = 0; i < w.pieces.size(); ++i) {
        if ((int)w.pieces[i].size() == r) {
            j = (int)i;
            break;
        }
        before += (int)w.pieces[i].size();
    }
    int m = w.degree();
    std::vector<std::vector<int>> raw;
    for (int i = 0; i < j; ++i)
        raw.push_back(w.pieces[i]);
    WordChain tail;
    {
        PiecedWord rest;
        for (std::size_t i = j + 1; i < w.pieces.size(); ++i)
            rest.pieces.push_back(w.pieces[i]);
        tail = rho_word(r, rest);
    }
    WordChain out;
    Rational s = parity_sign((long long)r * (m + before));
    for (const auto& [t, c] : tail.terms()) {
        PiecedWord rest;
        rest.pieces = raw;
        rest.pieces.insert(rest.pieces.end(), t.pieces.begin(), t.pieces.end());
        out.add(rest, s * c);
    }
    return out;
}

int pivotal_index(int r, const PiecedWord& w)
{
    int total = w.degree();
    int before = 0;
    for (std::size_t j = 0; j < w.pieces.size(); ++j) {
        int tail = total - before - (int)w.pieces[j].size();
        if (tail < r)
            return (int)j;
        before += (int)w.pieces[j].size();
    }
    throw std::logic_error("pivotal_index: unreachable");
}

WordChain kappa(int r, const PiecedWord& w)
{
    int j = pivotal_index(r, w);
    if (j + 1 >= (int)w.pieces.size())
        return WordChain(w);
    std::vector<int> tail;
    for (std::size_t i = j + 1; i < w.pieces.size(); ++i)
        tail.insert(tail.end(), w.pieces[i].begin(), w.pieces[i].end());
    int parity = sort_parity(tail);
    if (parity < 0)
        return {};
    std::sort(tail.begin(), tail.end());
    PiecedWord out;
    for (int i = 0; i <= j; ++i)
        out.pieces.push_back(w.pieces[i]);
    out.pieces.push_back(std::move(tail));
    return WordChain(out, parity_sign(parity));
}

WordChain S_map(const Straightening& s, const PiecedWord& w)
{
    int r = s.r();
    if (w.degree() < r - 1)
        throw std::invalid_argument("S_map: degree must be at least r");
    if (count_full_pieces(r, w) > 0)
        throw std::invalid_argument("S_map: word has a full piece");
    if (w.degree() == r - 1) {
        // boundary value: the signed empty word when the letters are
        // distinct; this is what makes S commute with the differential at
        // degree r
        auto nt = normalize_tuple(w.letters());
        WordChain out;
        if (nt)
            out.add(PiecedWord{}, parity_sign(nt->first));
        return out;
    }
    int j = pivotal_index(r, w);
    std::vector<int> tail;
    for (std::size_t i = j + 1; i < w.pieces.size(); ++i)
        tail.insert(tail.end(), w.pieces[i].begin(), w.pieces[i].end());
    auto nt = normalize_tuple(tail);
    WordChain out;
    if (!nt)
        return out;
    SimplexChain fval = f_map(s, Simplex(w.pieces[j]), nt->second);
    fval *= parity_sign(nt->first);
    for (const auto& [g, c] : fval.terms()) {
        PiecedWord shorter;
        for (int i = 0; i < j; ++i)
            shorter.pieces.push_back(w.pieces[i]);
        shorter.pieces.push_back(g.v);
        out.add(shorter, c);
    }
    return out;
}

// --- Phi ---

namespace {

inline int cyclic_diff(int r, int a, int b)
{
    // b - a in {1..r}
    int d = ((b - a) % r + r) % r;
    return d == 0 ? r : d;
}

}  // namespace

std::vector<Rational> phi_pair(int r, int a, int b, bool even_flavor)
{
    std::vector<Rational> out(r, Rational(0));
    int d = cyclic_diff(r, a, b);
    if (even_flavor) {
        if (d % 2 != 0)
            return out;
        for (int i = 1; i <= d / 2; ++i)
            out[(a + 2 * i) % r] += Rational(1);
    }
    else {
        if (d % 2 == 0)
            return out;
        for (int i = 1; i <= (d - 1) / 2; ++i)
            out[(a + 2 * i + 1) % r] += Rational(1);
    }
    return out;
}

WChain Phi(int r, const Simplex& a)
{
    int rt = (r - 1) / 2;
    long long rfact = factorial(rt);
    int q = a.degree();
    WChain out;
    if (q == 0) {
        out.add(WGen{WSide::RW, 0, 0}, Rational(1));
        return out;
    }
    if (q > r - 1)
        return out;
    // a is the increasing representative, which is cyclically ordered
    const std::vector<int>& s = a.v;
    std::vector<int> diff(q);
    for (int i = 0; i < q; ++i)
        diff[i] = cyclic_diff(r, s[i], s[(i + 1) % q]);
    std::vector<int> evens;
    for (int i = 0; i < q; ++i)
        if (diff[i] % 2 == 0)
            evens.push_back(i);

    int phi_q = (r - q - 1) / 2;
    Rational scale(factorial(phi_q), rfact);

    std::vector<Rational> ring(r, Rational(0));
    if (q % 2 == 0) {
        if (evens.size() != 1)
            return out;
        int j = evens[0];
        auto p = phi_pair(r, s[j], s[(j + 1) % q], true);
        Rational sgn = parity_sign(j + 1);
        for (int t = 0; t < r; ++t)
            ring[t] += sgn * p[t];
    }
    else {
        if (!evens.empty())
            return out;
        for (int j = 0; j < q; ++j) {
            auto p = phi_pair(r, s[j], s[(j + 1) % q], false);
            for (int t = 0; t < r; ++t)
                ring[t] += p[t];
        }
    }
    for (int t = 0; t < r; ++t)
        if (!ring[t].is_zero())
            out.add(WGen{WSide::RW, t, q}, scale * ring[t]);
    return out;
}

Chain<Simplex> phi_dual(int r, int q)
{
    if (q < 0 || q >= r - 1)
        throw std::invalid_argument("phi_dual: need 0 <= q < r-1");
    int rt = (r - 1) / 2;
    Rational coef(factorial((r - q - 1) / 2), factorial(rt));
    Chain<Simplex> out;
    std::vector<int> cur;
    // enumerate increasing tuples with a_{2i} even != r-1 and a_{2i+1} odd
    std::function<void(int)> rec = [&](int start) {
        if ((int)cur.size() == q) {
            out.add(Simplex(cur), coef);
            return;
        }
        bool want_even = (cur.size() % 2 == 0);
        for (int v = start; v < r - 1; ++v) {
            if (want_even != (v % 2 == 0))
                continue;
            if (want_even && v == r - 1)
                continue;
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

Chain<BarWord> psi_dual_bar(int r, int q)
{
    if (q < 1)
        throw std::invalid_argument("psi_dual_bar: q >= 1 required");
    int rt = (r - 1) / 2;
    // prefix length m in 1..r-1 with q = m + j*(r-1)
    int j = 0, m = q;
    while (m >= r) {
        m -= (r - 1);
        ++j;
    }
    Rational coef(factorial((r - m - 1) / 2), 1);
    for (int t = 0; t < j + 1; ++t)
        coef /= Rational(factorial(rt));

    Chain<BarWord> out;
    std::vector<int> word(q, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == q) {
            int parity = 0;
            // right-to-left windows of length r, overlapping by one
            for (int t = 1; t <= j; ++t) {
                int lo = q - 1 - t * (r - 1);
                std::vector<int> win(word.begin() + lo, word.begin() + lo + r);
                int p = sort_parity(win);
                if (p < 0)
                    return;
                parity = (parity + p) % 2;
            }
            std::vector<int> prefix(word.begin(), word.begin() + m);
            int p = sort_parity(prefix);
            if (p < 0)
                return;
            parity = (parity + p) % 2;
            std::sort(prefix.begin(), prefix.end());
            for (int i = 0; i < m; ++i) {
                bool want_even = (i % 2 == 0);
                if (want_even && (prefix[i] % 2 != 0 || prefix[i] == r - 1))
                    return;
                if (!want_even && prefix[i] % 2 == 0)
                    return;
            }
            out.add(BarWord{word}, coef * parity_sign(parity));
            return;
        }
        for (int v = 0; v < r; ++v) {
            word[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

WChain r2_quotient(const PiecedWord& w)
{
    for (const auto& p : w.pieces)
        if (p.size() != 1)
            throw std::invalid_argument("r2_quotient: expected single-letter pieces");
    std::vector<int> letters = w.letters();
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i] == letters[i + 1])
            return {};
    WChain out;
    int q = (int)letters.size();
    if (q == 0) {
        out.add(WGen{WSide::RW, 0, 0}, Rational(1));
        return out;
    }
    out.add(WGen{WSide::RW, letters[0], q}, Rational(1));
    return out;
}

// --- Psi ---

PsiEngine::PsiEngine(int r, Straightening s) : r_(r), s_(std::move(s)), rfact_(factorial((r - 1) / 2))
{
    if (s_.r() != r_)
        throw std::invalid_argument("PsiEngine: straightening is for a different r");
}

WChain PsiEngine::psi(const PiecedWord& w) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(w);
        if (it != memo_.end())
            return it->second;
    }
    if (count_full_pieces(r_, w) > 0)
        throw std::invalid_argument("psi: word has a full piece");

    WChain result;
    int q = w.degree();
    if (r_ == 2) {
        result = r2_quotient(w);
    }
    else if (q <= r_ - 1) {
        // r~! Phi on the join of all pieces.  The global r~! (relative to
        // the bar-dual closed form) is what makes Psi_7(1|230|413) = -e_7/2
        // and the -1,-1,4 diagonal coefficients come out; the recursion
        // below keeps the 1/r~! step, so the whole map stays a chain map.
        auto n = normalize_tuple(w.letters());
        if (n) {
            result = parity_sign(n->first) * Phi(r_, n->second);
            result *= Rational(rfact_);
        }
    }
    else {
        WordChain shorter = S_map(s_, w);
        WChain acc = psi(shorter);
        acc *= Rational(1, rfact_);
        result = theta_rw_up(r_, r_ - 1, acc);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(w, result);
    return result;
}

WChain PsiEngine::psi(const WordChain& c) const
{
    WChain out;
    for (const auto& [w, coef] : c.terms()) {
        WChain img = psi(w);
        img *= coef;
        out += img;
    }
    return out;
}

}  // namespace cyd
