#include "doctest.h"

#include "jackkernel/pspoly.hpp"

using namespace jk;

namespace {

using RF = RatFunc;
using PS = PSPoly<RF>;
using Cat = CatPoly<RF>;

RF rf(long n) { return RF(Rational(n)); }

PS p(std::initializer_list<unsigned> parts) { return PS::monomial(Partition(parts), rf(1)); }

struct Rng {
    unsigned long long state = 0x243f6a8885a308d3ull;
    unsigned next(unsigned bound) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<unsigned>(state % bound);
    }
    Partition partition(unsigned max_size) {
        std::vector<unsigned> parts;
        unsigned budget = next(max_size + 1);
        unsigned cap = budget;
        while (budget > 0 && cap > 0) {
            unsigned part = 1 + next(cap);
            parts.push_back(part);
            budget = budget >= part ? budget - part : 0;
            cap = std::min(cap, part);
            if (parts.size() > 6) break;
        }
        std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
        return Partition(parts);
    }
    Cat catpoly(unsigned max_size) {
        Cat g;
        unsigned terms = 1 + next(3);
        for (unsigned t = 0; t < terms; ++t)
            g.add(next(3), partition(max_size), rf(static_cast<long>(next(9)) - 4));
        return g;
    }
};

} // namespace

TEST_CASE("basis operators") {
    CHECK(PS::one(rf(1)).mul_p(2) == p({2}));
    // d/dp_2 (p_2^2) = 2 p_2
    PS p22 = PS::monomial(Partition::of({2, 2}), rf(1));
    CHECK(p22.deriv_p(2) == p({2}).scaled(rf(2)));
    CHECK(p({1}).deriv_p(2).is_zero());
}

TEST_CASE("heisenberg relation on random inputs") {
    // d/dp_k (p_k f) - p_k d/dp_k f = f, so the commutator of the unscaled
    // generators is the identity (one unit per index k).
    Rng rng;
    for (int it = 0; it < 30; ++it) {
        PS f = PS::monomial(rng.partition(5), rf(static_cast<long>(rng.next(7)) + 1));
        unsigned k = 1 + rng.next(4);
        PS lhs = f.mul_p(k).deriv_p(k) - f.deriv_p(k).mul_p(k);
        CHECK(lhs == f);
    }
}

TEST_CASE("laplace-beltrami examples and weight preservation") {
    Ring<RF> ring = alpha_field();
    RF alpha = ring.alpha;

    CHECK(laplace_beltrami(p({1}), ring).is_zero());
    // D p_2 = p_1^2 + (alpha-1) p_2
    PS expect = PS::monomial(Partition::of({1, 1}), rf(1)) + p({2}).scaled(alpha - rf(1));
    CHECK(laplace_beltrami(p({2}), ring) == expect);
    // Eigen-equation at [2]: D (p_1^2 + alpha p_2) = alpha (p_1^2 + alpha p_2)
    PS j2 = PS::monomial(Partition::of({1, 1}), rf(1)) + p({2}).scaled(alpha);
    CHECK(laplace_beltrami(j2, ring) == j2.scaled(alpha));

    Rng rng;
    for (int it = 0; it < 20; ++it) {
        Partition lam = rng.partition(6);
        PS f = PS::monomial(lam, rf(1));
        PS g = laplace_beltrami(f, ring);
        CHECK(g.is_homogeneous(lam.size()));
    }
}

TEST_CASE("catalytic operators match the hand-derived values") {
    Ring<RF> ring = alpha_field();
    RF alpha = ring.alpha;
    RF b = ring.b;

    // Index shift.
    Cat y0 = Cat::monomial(0, Partition(), rf(1));
    CHECK(y_plus(y0) == Cat::monomial(1, Partition(), rf(1)));

    // y_0 annihilated.
    CHECK(gamma_y(y0, ring).is_zero());
    CHECK(theta_y(y0).is_zero());

    // y_0 p_1 -> (1+b) y_2
    Cat y0p1 = Cat::monomial(0, Partition::of({1}), rf(1));
    CHECK(gamma_y(y0p1, ring) == Cat::monomial(2, Partition(), alpha));

    // y_1 -> p_1 y_1 + b y_2
    Cat y1 = Cat::monomial(1, Partition(), rf(1));
    Cat expect = Cat::monomial(1, Partition::of({1}), rf(1));
    expect.add(2, Partition(), b);
    CHECK(gamma_y(y1, ring) == expect);

    // Theta forgets the marker.
    CHECK(theta_y(Cat::monomial(2, Partition(), rf(1))) == p({2}));
    CHECK(theta_y(Cat::monomial(0, Partition::of({5}), rf(1))).is_zero());
    CHECK(theta_y(Cat::monomial(1, Partition::of({1}), rf(1))) ==
          PS::monomial(Partition::of({1, 1}), rf(1)));
}

TEST_CASE("operator weight grading on random catalytic values") {
    Ring<RF> ring = alpha_field();
    Rng rng;
    for (int it = 0; it < 25; ++it) {
        Cat g = rng.catpoly(4);
        for (const auto& [key, c] : g.terms()) {
            Cat single = Cat::monomial(key.y, key.lam, c);
            unsigned w = key.y + key.lam.size();
            CHECK(y_plus(single).is_homogeneous(w + 1));
            CHECK(gamma_y(single, ring).is_homogeneous(w + 1));
            PS t = theta_y(single);
            CHECK(t.is_homogeneous(w));
        }
    }
}

TEST_CASE("principal specialization") {
    Ring<RF> ring = alpha_field();
    RF alpha = ring.alpha;
    RF u = RF::variable("alpha"); // any ring element works as the value

    // p_1^2 + alpha p_2 at p_i = u equals u^2 + alpha u.
    PS j2 = PS::monomial(Partition::of({1, 1}), rf(1)) + p({2}).scaled(alpha);
    CHECK(principal_eval(j2, u) == u * u + alpha * u);

    // p_1^2 - p_2 at u: u^2 - u.
    PS j11 = PS::monomial(Partition::of({1, 1}), rf(1)) - p({2});
    CHECK(principal_eval(j11, u) == u * u - u);

    CHECK(principal_eval(PS::one(rf(1)), u) == rf(1));
}

TEST_CASE("monomial expansion") {
    RF one = rf(1);
    PS p11 = PS::monomial(Partition::of({1, 1}), one);
    auto m = to_monomial(p11);
    // p_1^2 = m_2 + 2 m_{11}
    CHECK(m.size() == 2);
    CHECK(m.at(Partition::of({2})) == one);
    CHECK(m.at(Partition::of({1, 1})) == rf(2));

    auto m2 = to_monomial(p({2}));
    CHECK(m2.size() == 1);
    CHECK(m2.at(Partition::of({2})) == one);

    auto m3 = to_monomial(p11 - p({2}));
    CHECK(m3.size() == 1);
    CHECK(m3.at(Partition::of({1, 1})) == rf(2));

    CHECK_THROWS_AS(to_monomial(p({2}) + p({1})), Error); // not homogeneous
}

TEST_CASE("monomial expansion round trips through rational inversion") {
    // The p -> m transition on each graded piece is an integer matrix.
    // Solve T x = e_j over Q for every j: the solution expresses m_j in the
    // p basis, and expanding it back must reproduce the unit vector.
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<Partition> basis = partitions_of(n);
        std::size_t dim = basis.size();
        // Transition T[i][j] = [m_{basis[j]}] p_{basis[i]} over Q.
        std::vector<std::vector<Rational>> t(dim, std::vector<Rational>(dim, Rational(0)));
        for (std::size_t i = 0; i < dim; ++i) {
            auto m = to_monomial(PSPoly<Rational>::monomial(basis[i], Rational(1)));
            for (std::size_t j = 0; j < dim; ++j) {
                auto it = m.find(basis[j]);
                if (it != m.end()) t[i][j] = it->second;
            }
        }
        // Transpose: solving T^t x = e_j yields the p-coordinates of m_j.
        std::vector<std::vector<Rational>> tt(dim, std::vector<Rational>(dim, Rational(0)));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) tt[i][j] = t[j][i];
        for (std::size_t j = 0; j < dim; ++j) {
            auto aa = tt;
            std::vector<Rational> rhs(dim, Rational(0));
            rhs[j] = Rational(1);
            // forward elimination with partial pivoting by nonzero
            for (std::size_t col = 0; col < dim; ++col) {
                std::size_t piv = col;
                while (piv < dim && aa[piv][col] == Rational(0)) ++piv;
                REQUIRE(piv < dim);
                std::swap(aa[piv], aa[col]);
                std::swap(rhs[piv], rhs[col]);
                for (std::size_t r2 = col + 1; r2 < dim; ++r2) {
                    if (aa[r2][col] == Rational(0)) continue;
                    Rational f = aa[r2][col] / aa[col][col];
                    for (std::size_t cc = col; cc < dim; ++cc) aa[r2][cc] -= f * aa[col][cc];
                    rhs[r2] -= f * rhs[col];
                }
            }
            std::vector<Rational> x(dim, Rational(0));
            for (std::size_t r2 = dim; r2-- > 0;) {
                Rational acc = rhs[r2];
                for (std::size_t cc = r2 + 1; cc < dim; ++cc) acc -= aa[r2][cc] * x[cc];
                x[r2] = acc / aa[r2][r2];
            }
            // x are the coordinates of m_{basis[j]} in the p basis; expand
            // back to monomials and compare with the unit vector.
            PSPoly<Rational> recon;
            for (std::size_t i = 0; i < dim; ++i)
                recon += PSPoly<Rational>::monomial(basis[i], Rational(1)).scaled(x[i]);
            auto m = to_monomial(recon);
            for (std::size_t jj = 0; jj < dim; ++jj) {
                auto it = m.find(basis[jj]);
                Rational got = it == m.end() ? Rational(0) : it->second;
                CHECK(got == (jj == j ? Rational(1) : Rational(0)));
            }
        }
    }
}
