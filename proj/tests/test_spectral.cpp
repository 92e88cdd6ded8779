#include "doctest.h"

#include <functional>

#include "jackkernel/spectral.hpp"

using namespace jk;

namespace {

using RF = RatFunc;
using PS = PSPoly<RF>;

RF rf(long n) { return RF(Rational(n)); }

/*
 * Independent oracle for the free-cumulant relation: the classical sum over
 * non-crossing set partitions with all blocks of size >= 2,
 *     M_n = sum_{pi in NC(n), min block 2} prod_{V in pi} R_{|V|}.
 * Coded before the triangular-transform implementation was trusted; the
 * composition-sum route with the falling-factorial coefficient must agree.
 */
std::vector<std::vector<std::vector<int>>> set_partitions(unsigned n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> acc;
    std::function<void(unsigned)> go = [&](unsigned x) {
        if (x == n) {
            out.push_back(acc);
            return;
        }
        // Index iteration: the recursion appends to acc, so references into
        // it would dangle after a reallocation.
        std::size_t blocks = acc.size();
        for (std::size_t i = 0; i < blocks; ++i) {
            acc[i].push_back(static_cast<int>(x));
            go(x + 1);
            acc[i].pop_back();
        }
        acc.push_back({static_cast<int>(x)});
        go(x + 1);
        acc.pop_back();
    };
    go(0);
    return out;
}

bool has_crossing(const std::vector<std::vector<int>>& pi) {
    // Crossing: a < b < c < d with a,c in one block and b,d in another.
    int n = 0;
    for (const auto& v : pi)
        for (int x : v) n = std::max(n, x + 1);
    std::vector<int> block_of(n, -1);
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (int x : pi[i]) block_of[x] = static_cast<int>(i);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (block_of[a] == block_of[c] && block_of[b] == block_of[d] &&
                        block_of[a] != block_of[b])
                        return true;
    return false;
}

// M_n as a polynomial in symbolic free cumulants.
MultiPolyLoc nc_moment(unsigned n, const SymbolsPtr& syms) {
    MultiPolyLoc acc;
    for (const auto& pi : set_partitions(n)) {
        bool ok = true;
        for (const auto& v : pi)
            if (v.size() < 2) ok = false;
        if (!ok || has_crossing(pi)) continue;
        MultiPolyLoc term(Rational(1));
        for (const auto& v : pi) term = term * MultiPolyLoc::variable(syms, v.size() - 2);
        acc += term;
    }
    return acc;
}

} // namespace

TEST_CASE("free cumulants against the non-crossing oracle") {
    // Symbols R2..R8 (index i-2 holds R_i).
    SymbolList names;
    for (unsigned i = 2; i <= 8; ++i) names.push_back("R" + std::to_string(i));
    SymbolsPtr syms = make_symbols(std::move(names));
    std::vector<MultiPolyLoc> r(9);
    for (unsigned i = 2; i <= 8; ++i) r[i] = MultiPolyLoc::variable(syms, i - 2);

    std::vector<MultiPolyLoc> m = moments_from_free(r, 8);
    for (unsigned n = 2; n <= 8; ++n) CHECK(m[n] == nc_moment(n, syms));

    // Frozen spot values backing the falling-factorial reading:
    // M_4 = R_4 + 2 R_2^2 and the coefficient of R_2^3 in M_6 is 5.
    CHECK(m[4] == r[4] + r[2].pow(2) * Rational(2));
    MultiPolyLoc::Expo e(syms->size(), 0);
    e[0] = 3;
    CHECK(m[6].terms().at(e) == Rational(5));
}

TEST_CASE("cumulant round trips over the integers") {
    unsigned long long state = 0x5bf0a8b145fe9b29ull;
    auto next = [&](unsigned bound) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<unsigned>(state % bound);
    };
    for (int it = 0; it < 25; ++it) {
        std::vector<Rational> m(9, Rational(0));
        m[0] = Rational(1);
        for (unsigned l = 2; l <= 8; ++l) m[l] = Rational(static_cast<long>(next(21)) - 10);
        std::vector<Rational> b = boolean_from_moments(m, 8);
        std::vector<Rational> m2 = moments_from_boolean(b, 8);
        for (unsigned l = 2; l <= 8; ++l) CHECK(m2[l] == m[l]);
        std::vector<Rational> r = free_from_moments(m, 8);
        std::vector<Rational> m3 = moments_from_free(r, 8);
        for (unsigned l = 2; l <= 8; ++l) CHECK(m3[l] == m[l]);
        // Boolean cumulants of integer moments stay integral.
        for (unsigned l = 2; l <= 8; ++l) CHECK(is_integer(b[l]));
    }
}

TEST_CASE("transition moments from the product transform") {
    // Empty diagram: G = 1/z.
    std::vector<Rational> m0 = transition_moments(std::vector<Rational>{}, 5);
    CHECK(m0[0] == Rational(1));
    for (unsigned l = 1; l <= 5; ++l) CHECK(m0[l] == Rational(0));

    // One box: masses 1/2 at -1 and 1.
    std::vector<Rational> m1 = transition_moments(std::vector<Rational>{Rational(1)}, 4);
    CHECK(m1[0] == Rational(1));
    CHECK(m1[1] == Rational(0));
    CHECK(m1[2] == Rational(1));
    CHECK(m1[3] == Rational(0));
    CHECK(m1[4] == Rational(1));

    // Symbolic single part alpha: M_1 = 0, M_2 = alpha.
    RF alpha = RF::variable("alpha");
    std::vector<RF> ma = transition_moments(std::vector<RF>{alpha}, 2);
    CHECK(ma[1].is_zero());
    CHECK(ma[2] == alpha);
}

TEST_CASE("deformed moments") {
    RF gam = gamma_value();
    std::vector<RF> m = alpha_moments(Partition::of({1}), 4);
    CHECK(m[0] == rf(1));
    CHECK(m[1].is_zero());
    CHECK(m[2] == rf(1));
    CHECK(m[3] == -gam);
    CHECK(m[4] == gam * gam + rf(1));

    std::vector<RF> me = alpha_moments(Partition(), 4);
    for (unsigned l = 1; l <= 4; ++l) CHECK(me[l].is_zero());

    // gamma = 0 specialization consistency at alpha = 1 (s = 1).
    for (unsigned l = 0; l <= 4; ++l) {
        Rational at1 = m[l].eval(Rational(1));
        Rational plain = transition_moments(std::vector<Rational>{Rational(1)}, 4)[l];
        CHECK(at1 == plain);
    }

    // First moment vanishes on every small diagram.
    for (const Partition& lam : partitions_up_to(6)) CHECK(alpha_moments(lam, 1)[1].is_zero());
}

TEST_CASE("rectangle-symbolic moments") {
    StanleyRing sr1 = stanley_ring(1);
    std::vector<MultiPolyLoc> m = rect_moments(1, 3, sr1);
    CHECK(m[0] == MultiPolyLoc(Rational(1)));
    CHECK(m[1].is_zero());
    CHECK(m[2] == sr1.ring.alpha * sr1.s(1) * sr1.r(1));

    StanleyRing sr2 = stanley_ring(2);
    std::vector<MultiPolyLoc> m2 = rect_moments(2, 2, sr2);
    CHECK(m2[1].is_zero());

    // Rewritten in (b, -s, r) the coefficients are integers.
    std::vector<std::size_t> sidx{1};
    for (unsigned l = 0; l <= 3; ++l) {
        MultiPolyLoc flipped = m[l].negate_symbols(sidx);
        CHECK(flipped.loc_exp() == 0);
        for (const auto& [e, c] : flipped.terms()) CHECK(is_integer(c));
    }

    // Specialization (s,r) = (1,1) matches the one-box deformed moments
    // after removing the sqrt(alpha)^l prefactor; evaluated at b = 3, s = 2.
    RF s = sqrt_alpha();
    std::vector<RF> expect = alpha_moments(Partition::of({1}), 3);
    for (unsigned l = 0; l <= 3; ++l) {
        Rational val_at = m[l].eval({Rational(3), Rational(1), Rational(1)});
        RF scaled = expect[l] * s.pow(l);
        CHECK(scaled.eval(Rational(2)) == val_at);
    }
}

TEST_CASE("band operator spot values on one box") {
    JackTable<RF> stable(sqrt_field());
    RF gam = gamma_value();

    // P P-dagger p_1 = p_1.
    PS p1 = PS::monomial(Partition::of({1}), rf(1));
    CHECK(ns_apply(p1, 0) == p1);

    CHECK(ns_eigenvalue(Partition::of({1}), 0, stable) == rf(1));
    CHECK(ns_eigenvalue(Partition::of({1}), 1, stable) == -gam);
    CHECK(ns_eigenvalue(Partition::of({1}), 2, stable) == gam * gam);
    CHECK(ns_eigenvalue(Partition(), 2, stable).is_zero());
}

TEST_CASE("band eigenvalues equal the moment-route cumulants") {
    JackTable<RF> stable(sqrt_field());
    for (const Partition& lam : partitions_up_to(3)) {
        std::vector<RF> m = alpha_moments(lam, 6);
        std::vector<RF> b = boolean_from_moments(m, 6);
        for (unsigned ell = 0; ell <= 2; ++ell) {
            CHECK(ns_eigenvalue(lam, ell, stable) == b[ell + 2]);
        }
    }
}

TEST_CASE("band-versus-laplacian diagnostic") {
    Ring<RF> ring = sqrt_field();
    PS p1 = PS::monomial(Partition::of({1}), rf(1));
    PS p2 = PS::monomial(Partition::of({2}), rf(1));

    NSDiagnostic d1 = ns_diagnostic(p1);
    CHECK(d1.difference == p1.scaled(ring.b * Rational(1, 2)));
    CHECK(d1.matches_weight_correction);

    NSDiagnostic d0 = ns_diagnostic(PS::one(rf(1)));
    CHECK(d0.difference.is_zero());
    CHECK(d0.matches_weight_correction);

    NSDiagnostic d2 = ns_diagnostic(p2);
    CHECK(d2.difference == p2.scaled(ring.b));
    CHECK(d2.matches_weight_correction);
}
