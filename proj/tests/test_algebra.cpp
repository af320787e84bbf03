#include <doctest.h>

#include <random>

#include "cycdiag/chain.hpp"
#include "cycdiag/simplicial.hpp"

using namespace cyd;

namespace {

struct TGen {
    int id = 0;
    int deg = 0;
    int degree() const { return deg; }
    friend bool operator<(const TGen& a, const TGen& b)
    {
        if (a.deg != b.deg)
            return a.deg < b.deg;
        return a.id < b.id;
    }
    friend bool operator==(const TGen& a, const TGen& b) { return a.id == b.id && a.deg == b.deg; }
};

struct TPair {
    TGen a, b;
    int degree() const { return a.deg + b.deg; }
    friend bool operator<(const TPair& x, const TPair& y)
    {
        if (!(x.a == y.a))
            return x.a < y.a;
        return x.b < y.b;
    }
    friend bool operator==(const TPair& x, const TPair& y) { return x.a == y.a && x.b == y.b; }
};

// a random "basis map" of fixed degree: shifts degree, relabels, scales
struct RandomMap {
    int deg;
    int shift;
    int scale;
    Chain<TGen> operator()(const TGen& g) const
    {
        return Chain<TGen>(TGen{g.id + shift, g.deg + deg}, Rational(scale));
    }
};

// (f (x) g)(a (x) b) under the chosen convention
Chain<TPair> apply_pair(const RandomMap& f, const RandomMap& g, SuspensionConvention conv,
                        const Chain<TPair>& x)
{
    Chain<TPair> out;
    for (const auto& [k, c] : x.terms()) {
        long long e = (conv == SuspensionConvention::Right) ? (long long)f.deg * k.b.deg
                                                            : (long long)g.deg * k.a.deg;
        Chain<TGen> fa = f(k.a);
        Chain<TGen> gb = g(k.b);
        for (const auto& [ga, ca] : fa.terms())
            for (const auto& [gb2, cb] : gb.terms())
                out.add(TPair{ga, gb2}, parity_sign(e) * c * ca * cb);
    }
    return out;
}

}  // namespace

TEST_CASE("rational arithmetic and normalization")
{
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK((a + a) == Rational(1));
    CHECK((a * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1) / Rational(-2)).str() == "-1/2");
    CHECK(Rational(0).str() == "0/1");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("mod_p reduction")
{
    CHECK(Rational(1, 2).mod_p(5) == 3);  // 2*3 = 6 = 1 mod 5
    CHECK(Rational(0).mod_p(7) == 0);
    CHECK_THROWS_AS(Rational(1, 2).mod_p(2), std::domain_error);
    CHECK(Rational(-1, 3).mod_p(5) == 3);  // -1 * 2 = -2 = 3 mod 5
}

TEST_CASE("chains keep canonical term order and drop zeros")
{
    Chain<TGen> c;
    c.add(TGen{1, 0}, Rational(1));
    c.add(TGen{0, 0}, Rational(2));
    c.add(TGen{1, 0}, Rational(-1));
    CHECK(c.size() == 1);
    CHECK(c.coefficient(TGen{0, 0}) == Rational(2));
    Chain<TGen> d = c + c - c;
    CHECK(d == c);
}

TEST_CASE("tensor of a zero-degree factor carries no sign")
{
    Chain<TGen> x(TGen{0, 0});
    Chain<TGen> y(TGen{1, 4});
    auto t = tensor<TGen, TGen, TPair>(
        x, y, [](const TGen& a, const TGen& b) { return TPair{a, b}; });
    CHECK(t.coefficient(TPair{TGen{0, 0}, TGen{1, 4}}) == Rational(1));
}

TEST_CASE("interchange law for tensor products of graded maps")
{
    // right convention: (f2 f1)(x)(g2 g1) = (-1)^{|f2||g1|} (f2(x)g2)(f1(x)g1)
    // left convention:  the sign is (-1)^{|f1||g2|}
    std::mt19937 gen(20240811);
    std::uniform_int_distribution<int> deg(0, 3), id(0, 4), sc(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        RandomMap f1{deg(gen), id(gen), sc(gen)};
        RandomMap f2{deg(gen), id(gen), sc(gen)};
        RandomMap g1{deg(gen), id(gen), sc(gen)};
        RandomMap g2{deg(gen), id(gen), sc(gen)};
        TPair start{TGen{id(gen), deg(gen)}, TGen{id(gen), deg(gen)}};
        Chain<TPair> x(start);

        for (auto conv : {SuspensionConvention::Right, SuspensionConvention::Left}) {
            RandomMap f21{f1.deg + f2.deg, f1.shift + f2.shift, f1.scale * f2.scale};
            RandomMap g21{g1.deg + g2.deg, g1.shift + g2.shift, g1.scale * g2.scale};
            Chain<TPair> lhs = apply_pair(f21, g21, conv, x);
            Chain<TPair> rhs = apply_pair(f2, g2, conv, apply_pair(f1, g1, conv, x));
            long long e = (conv == SuspensionConvention::Right) ? (long long)f2.deg * g1.deg
                                                                : (long long)f1.deg * g2.deg;
            rhs *= parity_sign(e);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("dual differential: zero map dualizes to zero")
{
    GradedMap<TGen, TGen> d;
    d.degree = -1;
    d.action = [](const TGen&) { return Chain<TGen>(); };
    auto dd = dual_differential<TGen>(
        d, [](int deg) { return std::vector<TGen>{TGen{0, deg}}; });
    CHECK(dd.action(TGen{0, 0}).is_zero());
}

TEST_CASE("dual differential of the two-term complex carries (-1)^{|f|+1}")
{
    // complex R <- R with d(x_1) = x_0; the dual of x_0 maps to -x_1^dual
    GradedMap<TGen, TGen> d;
    d.degree = -1;
    d.action = [](const TGen& g) {
        if (g.deg == 1)
            return Chain<TGen>(TGen{0, 0});
        return Chain<TGen>();
    };
    auto dd = dual_differential<TGen>(d, [](int deg) {
        if (deg == 0 || deg == 1)
            return std::vector<TGen>{TGen{0, deg}};
        return std::vector<TGen>{};
    });
    Chain<TGen> img = dd.action(TGen{0, 0});
    CHECK(img.coefficient(TGen{0, 1}) == Rational(-1));
}

TEST_CASE("dual differential squares to zero on the dual of the 2-simplex chains")
{
    GradedMap<Simplex, Simplex> d;
    d.degree = -1;
    d.action = [](const Simplex& s) { return simplex_boundary(s); };
    auto basis_of = [](int deg) {
        std::vector<Simplex> out;
        for (const auto& s : simplex_basis(2))
            if (s.degree() == deg)
                out.push_back(s);
        return out;
    };
    auto dd = dual_differential<Simplex>(d, basis_of);
    for (const auto& g : simplex_basis(2)) {
        Chain<Simplex> once = dd.action(g);
        Chain<Simplex> twice;
        for (const auto& [h, c] : once.terms()) {
            Chain<Simplex> step = dd.action(h);
            step *= c;
            twice += step;
        }
        CHECK(twice.is_zero());
    }
}

TEST_CASE("verify_chain_map accepts scalars and flags degreewise sign flips")
{
    auto d_simp = [](const Simplex& s) { return simplex_boundary(s); };
    auto show = [](const Simplex& s) { return s.str(); };

    GradedMap<Simplex, Simplex> doubling;
    doubling.degree = 0;
    doubling.convention = SuspensionConvention::Right;
    doubling.action = [](const Simplex& s) {
        return Rational(2) * Chain<Simplex>(s);
    };
    CHECK(verify_chain_map<Simplex, Simplex>(doubling, d_simp, d_simp, simplex_basis(3), show) ==
          "");

    GradedMap<Simplex, Simplex> flip;
    flip.degree = 0;
    flip.convention = SuspensionConvention::Right;
    flip.action = [](const Simplex& s) {
        return parity_sign(s.degree()) * Chain<Simplex>(s);
    };
    CHECK(verify_chain_map<Simplex, Simplex>(flip, d_simp, d_simp, simplex_basis(3), show) != "");
}
