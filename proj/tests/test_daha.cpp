#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "heis/daha.hpp"

using namespace heis;

namespace {

PolyN random_poly(std::mt19937& rng, int n, int maxdeg, int nterms) {
    PolyN f(n);
    std::uniform_int_distribution<int> de(0, maxdeg), dc(-3, 3);
    for (int t = 0; t < nterms; ++t) {
        Mono m(n);
        for (int i = 0; i < n; ++i) m[i] = de(rng);
        f.add(m, Rat(dc(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("demazure basics") {
    PolyN x1 = PolyN::variable(2, 0);
    CHECK(demazure(0, x1) == PolyN::constant(2, -1));
    PolyN sym = PolyN::variable(2, 0) + PolyN::variable(2, 1);
    CHECK(demazure(0, sym).is_zero());
    CHECK(demazure(0, PolyN::variable(2, 0) * PolyN::variable(2, 1)).is_zero());
    CHECK_THROWS(demazure(1, x1));
}

TEST_CASE("demazure squares to zero and twisted Leibniz") {
    std::mt19937 rng(61);
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 6; ++trial) {
            PolyN f = random_poly(rng, n, 4, 3), g = random_poly(rng, n, 4, 3);
            for (int i = 0; i + 1 < n; ++i) {
                CHECK(demazure(i, demazure(i, f)).is_zero());
                PolyN lhs = demazure(i, f * g);
                PolyN rhs = demazure(i, f) * g + perm_apply(perm_si(n, i), f) * demazure(i, g);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("oplus and ominus") {
    // s_1 (+) x_1 = x_2 - 1 ; s_1 (-) x_1 = x_2 + 1
    PolyN x1 = PolyN::variable(2, 0);
    PolyN want_plus = PolyN::variable(2, 1) - PolyN::constant(2, 1);
    PolyN want_minus = PolyN::variable(2, 1) + PolyN::constant(2, 1);
    CHECK(act_oplus_si(0, x1) == want_plus);
    CHECK(act_ominus_si(0, x1) == want_minus);

    // symmetric polynomials are fixed
    PolyN sym = PolyN::variable(3, 0) * PolyN::variable(3, 1) * PolyN::variable(3, 2);
    for (const Perm& p : all_perms(3)) {
        CHECK(act_oplus(p, sym) == sym);
        CHECK(act_ominus(p, sym) == sym);
    }
}

TEST_CASE("oplus is a group action (word independence)") {
    std::mt19937 rng(67);
    for (int n : {3, 4}) {
        for (int trial = 0; trial < 4; ++trial) {
            PolyN f = random_poly(rng, n, 3, 3);
            for (const Perm& p : all_perms(n))
                for (int i = 0; i + 1 < n; ++i) {
                    Perm q = perm_mul(perm_si(n, i), p);
                    CHECK(act_oplus(q, f) == act_oplus_si(i, act_oplus(p, f)));
                    CHECK(act_ominus(q, f) == act_ominus_si(i, act_ominus(p, f)));
                }
        }
    }
}

TEST_CASE("AH multiplication and relations") {
    int n = 2;
    // s_1 x_1 = x_2 s_1 - 1
    AHElem lhs = AHElem::s(n, 0) * AHElem::x(n, 0);
    AHElem want(n);
    Mono m(n, 0);
    m[1] = 1;
    want.add(m, perm_si(n, 0), 1);
    want.add(Mono(n, 0), perm_identity(n), -1);
    CHECK(lhs == want);

    CHECK(AHElem::x(n, 0) * AHElem::x(n, 1) == AHElem::x(n, 1) * AHElem::x(n, 0));
    CHECK(AHElem::s(n, 0) * AHElem::s(n, 0) == AHElem::unit(n));
}

TEST_CASE("AH associativity and center") {
    std::mt19937 rng(71);
    for (int n : {2, 3}) {
        std::vector<AHElem> gens;
        for (int i = 0; i + 1 < n; ++i) gens.push_back(AHElem::s(n, i));
        for (int i = 0; i < n; ++i) gens.push_back(AHElem::x(n, i));
        for (int trial = 0; trial < 8; ++trial) {
            AHElem a = gens[rng() % gens.size()] + gens[rng() % gens.size()];
            AHElem b = gens[rng() % gens.size()] * gens[rng() % gens.size()];
            AHElem c = gens[rng() % gens.size()];
            CHECK((a * b) * c == a * (b * c));
        }
        // symmetric polynomials of degree <= 3 are central
        std::vector<PolyN> syms;
        PolyN e1(n), e2(n), p3(n);
        for (int i = 0; i < n; ++i) e1 += PolyN::variable(n, i);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e2 += PolyN::variable(n, i) * PolyN::variable(n, j);
        for (int i = 0; i < n; ++i) p3 += PolyN::variable(n, i) * PolyN::variable(n, i) * PolyN::variable(n, i);
        for (const PolyN& f : {e1, e2, p3}) {
            AHElem z = AHElem::of_poly(f);
            for (const AHElem& g : gens) CHECK(z * g == g * z);
        }
    }
}

TEST_CASE("spherical sandwich identities") {
    // f symmetric -> unchanged
    PolyN sym = PolyN::variable(2, 0) + PolyN::variable(2, 1);
    CHECK(spherical_sandwich(sym, true) == sym);
    CHECK(spherical_sandwich(sym, false) == sym);

    // n=2, f=x_1: direct S_2 sum
    PolyN f = PolyN::variable(2, 0);
    PolyN expect = (f + act_oplus_si(0, f)) * Rat(1, 2);
    CHECK(spherical_sandwich(f, true) == expect);

    // e_(n) f e_(n) = e_(n) sandwich(f) e_(n) in AH_n,  n <= 3, deg f <= 3
    std::mt19937 rng(73);
    for (int n : {2, 3}) {
        AHElem e_sym = AHElem::of_perm_alg(young_symmetrizer(Partition{n}));
        AHElem e_alt = AHElem::of_perm_alg(young_symmetrizer(Partition(std::vector<int>(n, 1))));
        for (int trial = 0; trial < 3; ++trial) {
            PolyN f = random_poly(rng, n, 3, 2);
            AHElem lhs = e_sym * AHElem::of_poly(f) * e_sym;
            AHElem rhs = e_sym * AHElem::of_poly(spherical_sandwich(f, true)) * e_sym;
            CHECK(lhs == rhs);
            AHElem lhs2 = e_alt * AHElem::of_poly(f) * e_alt;
            AHElem rhs2 = e_alt * AHElem::of_poly(spherical_sandwich(f, false)) * e_alt;
            CHECK(lhs2 == rhs2);
        }
    }
}

TEST_CASE("signed schur chi") {
    PolyN chi = signed_schur_chi({1, 0}, 2);
    CHECK(chi == PolyN::variable(2, 0) + PolyN::variable(2, 1));
    CHECK(signed_schur_chi({0, 1}, 2).is_zero());
    CHECK(signed_schur_chi({0, 0}, 2) == PolyN::constant(2, 1));
    CHECK(signed_schur_chi({0, 0, 0}, 3) == PolyN::constant(3, 1));
    // antisymmetry sign: chi_{(-1,1)}: lam+rho = (0,1) -> sorted (1,0), sign -1, shape (0,0)
    CHECK(signed_schur_chi({-1, 1}, 2) == PolyN::constant(2, -1));
    CHECK_THROWS(signed_schur_chi({-2, 0}, 2));
}

TEST_CASE("thick cap identity") {
    CHECK(verify_thick_cap({1, 0}, 2));  // lam = rho
    CHECK(verify_thick_cap({2, 0}, 2));
    CHECK(verify_thick_cap({3, 1, 0}, 3));
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> lam(n, 0);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n) {
                CHECK(verify_thick_cap(lam, n));
                return;
            }
            for (int v = 0; v <= 3; ++v) {
                lam[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
}

TEST_CASE("lemma wow at seeded sample points") {
    std::mt19937 rng(79);
    auto sample = [&](int n) {
        std::vector<Rat> pt;
        std::set<Rat> used;
        while (static_cast<int>(pt.size()) < n) {
            Rat v(static_cast<int>(rng() % 2000) - 1000, 1 + static_cast<int>(rng() % 7));
            if (used.insert(v).second) pt.push_back(v);
        }
        return pt;
    };
    for (int n = 0; n <= 4; ++n)
        for (int r = 0; r <= n; ++r) {
            std::vector<std::vector<Rat>> pts;
            for (int t = 0; t < 5; ++t) pts.push_back(sample(n));
            CHECK(verify_lemma_wow(r, n, pts));
        }
}

TEST_CASE("cyclotomic reduction") {
    // l = 1, f = w: x_i all reduce to group algebra elements; x_1 -> 0
    {
        int n = 2;
        AHElem a = AHElem::x(n, 0);
        AHElem red = cyclotomic_reduce(a, {Rat(0)});
        CHECK(red.is_zero());
        AHElem b = AHElem::x(n, 1);
        AHElem redb = cyclotomic_reduce(b, {Rat(0)});
        // x_2 = s_1 x_1 s_1 + s_1 -> s_1 mod (x_1)
        AHElem want(n);
        want.add(Mono(n, 0), perm_si(n, 0), 1);
        CHECK(redb == want);
    }
    // n = 1, f = w^2 - 1: x^3 -> x
    {
        AHElem a(1);
        a.add(Mono{3}, perm_identity(1), 1);
        AHElem red = cyclotomic_reduce(a, {Rat(0), Rat(-1)});
        AHElem want(1);
        want.add(Mono{1}, perm_identity(1), 1);
        CHECK(red == want);
    }
    // basis count: product closure of the reduced basis has l^n n! elements
    for (int n = 1; n <= 2; ++n)
        for (int l = 1; l <= 2; ++l) {
            std::vector<Rat> f(l, 0);  // f(w) = w^l
            std::set<std::pair<Mono, Perm>> basis;
            auto perms = all_perms(n);
            std::vector<Mono> monos;
            Mono m(n, 0);
            auto rec = [&](auto&& self, int i) -> void {
                if (i == n) {
                    monos.push_back(m);
                    return;
                }
                for (int v = 0; v < l; ++v) {
                    m[i] = v;
                    self(self, i + 1);
                }
            };
            rec(rec, 0);
            for (const Mono& mm : monos)
                for (const Perm& p : perms) basis.insert({mm, p});
            CHECK(basis.size() == static_cast<size_t>(std::pow(l, n)) * static_cast<size_t>((int)factorial(n).convert_to<long long>()));
            // closure: reducing a product of basis elements stays in the span
            std::mt19937 rng(83);
            for (int trial = 0; trial < 5; ++trial) {
                auto it1 = std::next(basis.begin(), rng() % basis.size());
                auto it2 = std::next(basis.begin(), rng() % basis.size());
                AHElem a(n), b(n);
                a.add(it1->first, it1->second, 1);
                b.add(it2->first, it2->second, 1);
                AHElem red = cyclotomic_reduce(a * b, f);
                for (auto& [key, c] : red.coeffs()) CHECK(basis.count(key) == 1);
            }
        }
}
