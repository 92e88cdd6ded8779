#include "doctest.h"

#include "jackkernel/ribbon.hpp"

using namespace jk;

namespace {

using RF = RatFunc;
using PS = PSPoly<RF>;

RF rf(long n) { return RF(Rational(n)); }

UniPoly gpoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long x : coeffs) c.push_back(Rational(x));
    return UniPoly("gamma", std::move(c));
}

RibbonPath bare_path(std::vector<unsigned> lengths, std::vector<int> steps,
                     std::vector<std::pair<unsigned, unsigned>> pairs = {}) {
    return RibbonPath{std::move(lengths), std::move(steps), std::move(pairs)};
}

} // namespace

TEST_CASE("excursion enumeration") {
    CHECK(enumerate_excursions(1, 3).empty());

    auto e2 = enumerate_excursions(2, 2);
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].steps == std::vector<int>{2, -2});
    CHECK(e2[1].steps == std::vector<int>{1, -1});

    auto e3 = enumerate_excursions(3, 2);
    REQUIRE(e3.size() == 4);
    // Exhaustive set: (1,1,-2), (1,0,-1), (2,-1,-1), (2,0,-2).
    std::vector<std::vector<int>> want{{2, 0, -2}, {2, -1, -1}, {1, 1, -2}, {1, 0, -1}};
    for (const auto& w : want) {
        bool found = false;
        for (const auto& e : e3) found = found || e.steps == w;
        CHECK(found);
    }
}

TEST_CASE("ribbon path enumeration at small lengths") {
    // One site of length 2: a single path, no pairing.
    auto r2 = enumerate_ribbon_paths({2}, true, true, 2);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].steps == std::vector<int>{1, -1});
    CHECK(r2[0].pairs.empty());

    // One site of length 3: (1,1,-2) and (1,0,-1), no valid pairings.
    auto r3 = enumerate_ribbon_paths({3}, true, true, 3);
    REQUIRE(r3.size() == 2);
    for (const auto& p : r3) CHECK(p.pairs.empty());

    // Two sites of length 2 with the touch filter: unpaired and one pairing.
    auto r22 = enumerate_ribbon_paths({2, 2}, true, true, 4);
    REQUIRE(r22.size() == 2);
    unsigned with_pairing = 0;
    for (const auto& p : r22) {
        CHECK(p.steps == std::vector<int>{1, -1, 1, -1});
        if (!p.pairs.empty()) {
            ++with_pairing;
            CHECK(p.pairs == std::vector<std::pair<unsigned, unsigned>>{{1, 2}});
        }
    }
    CHECK(with_pairing == 1);
}

TEST_CASE("ribbon weights") {
    RibbonWeight w1 = ribbon_weight(bare_path({2}, {1, -1}));
    CHECK(w1.mu == Partition::of({1}));
    CHECK(w1.factor == gpoly({1}));

    RibbonWeight w2 = ribbon_weight(bare_path({3}, {1, 0, -1}));
    CHECK(w2.mu == Partition::of({1}));
    CHECK(w2.factor == gpoly({0, -1})); // one horizontal at height 1

    RibbonWeight w3 = ribbon_weight(bare_path({4}, {1, 0, 0, -1}));
    CHECK(w3.mu == Partition::of({1}));
    CHECK(w3.factor == gpoly({0, 0, 1})); // gamma^2
}

TEST_CASE("product expansions") {
    // Boolean, one site of length 2: B_2 = Ch_1.
    auto b2 = product_expansion({2}, ExpansionMode::boolean_cumulant);
    REQUIRE(b2.size() == 1);
    CHECK(b2.at(Partition::of({1})) == gpoly({1}));

    // Boolean, length 3: Ch_2 - gamma Ch_1.
    auto b3 = product_expansion({3}, ExpansionMode::boolean_cumulant);
    REQUIRE(b3.size() == 2);
    CHECK(b3.at(Partition::of({2})) == gpoly({1}));
    CHECK(b3.at(Partition::of({1})) == gpoly({0, -1}));

    // Boolean, length 4: Ch_3 - 3 gamma Ch_2 + Ch_11 + gamma^2 Ch_1.
    auto b4 = product_expansion({4}, ExpansionMode::boolean_cumulant);
    REQUIRE(b4.size() == 4);
    CHECK(b4.at(Partition::of({3})) == gpoly({1}));
    CHECK(b4.at(Partition::of({2})) == gpoly({0, -3}));
    CHECK(b4.at(Partition::of({1, 1})) == gpoly({1}));
    CHECK(b4.at(Partition::of({1})) == gpoly({0, 0, 1}));

    // Moment mode adds the internally split paths.
    auto m4 = product_expansion({4}, ExpansionMode::moment);
    REQUIRE(m4.size() == 4);
    CHECK(m4.at(Partition::of({3})) == gpoly({1}));
    CHECK(m4.at(Partition::of({2})) == gpoly({0, -3}));
    CHECK(m4.at(Partition::of({1, 1})) == gpoly({2}));
    CHECK(m4.at(Partition::of({1})) == gpoly({1, 0, 1}));
}

TEST_CASE("characters over moment monomials") {
    // Ch_1 = M_2.
    auto c1 = char_in_moments(Partition::of({1}));
    REQUIRE(c1.size() == 1);
    CHECK(c1.at(Partition::of({1})) == gpoly({1}));

    // Ch_2 = M_3 + gamma M_2.
    auto c2 = char_in_moments(Partition::of({2}));
    REQUIRE(c2.size() == 2);
    CHECK(c2.at(Partition::of({2})) == gpoly({1}));
    CHECK(c2.at(Partition::of({1})) == gpoly({0, 1}));

    // Ch_11 = M_2^2 - M_2.
    auto c11 = char_in_moments(Partition::of({1, 1}));
    REQUIRE(c11.size() == 2);
    CHECK(c11.at(Partition::of({1, 1})) == gpoly({1}));
    CHECK(c11.at(Partition::of({1})) == gpoly({-1}));
}

TEST_CASE("character-to-moment round trip") {
    // Substituting the forward moment expansions into char_in_moments must
    // return the single character Ch_mu.
    for (const Partition& mu : partitions_up_to(4)) {
        auto expansion = char_in_moments(mu);
        std::map<Partition, UniPoly> recovered;
        for (const auto& [rho, coeff] : expansion) {
            std::map<Partition, UniPoly> fwd;
            if (rho.empty()) {
                fwd = {{Partition(), UniPoly(Rational(1))}};
            } else {
                std::vector<unsigned> lengths;
                for (unsigned p : rho.parts()) lengths.push_back(p + 1);
                fwd = product_expansion(lengths, ExpansionMode::moment);
            }
            for (const auto& [sig, f] : fwd) recovered[sig] += coeff * f;
        }
        for (auto it = recovered.begin(); it != recovered.end();) {
            if (it->second.is_zero()) it = recovered.erase(it);
            else ++it;
        }
        REQUIRE(recovered.size() == 1);
        CHECK(recovered.begin()->first == mu);
        CHECK(recovered.begin()->second == UniPoly(Rational(1)));
    }
}

TEST_CASE("combinatorial expansion of the band operators") {
    PS one = PS::one(rf(1));
    PS p1 = PS::monomial(Partition::of({1}), rf(1));
    PS p2 = PS::monomial(Partition::of({2}), rf(1));

    CHECK(ns_combi_check({2}, one)); // both sides vanish
    CHECK(ns_combi_check({2}, p1));
    CHECK(ns_combi_check({3}, p1));
    CHECK(ns_combi_check({4}, p1));
    CHECK(ns_combi_check({2, 2}, p1));
    CHECK(ns_combi_check({3}, p2));
    CHECK(ns_combi_check({2}, p2));
}

TEST_CASE("evaluation identity on small products") {
    // Boolean and moment expansions evaluated on diagrams through the
    // normalized characters reproduce the cumulant/moment products.
    JackTable<RF> stable(sqrt_field());
    std::vector<std::vector<unsigned>> cases{{2}, {3}, {4}, {2, 2}};
    for (const auto& lengths : cases) {
        unsigned total = 0;
        for (unsigned l : lengths) total += l;
        auto bool_exp = product_expansion(lengths, ExpansionMode::boolean_cumulant);
        auto mom_exp = product_expansion(lengths, ExpansionMode::moment);
        for (const Partition& lam : partitions_up_to(std::min(total, 4u))) {
            std::vector<RF> m = alpha_moments(lam, total);
            std::vector<RF> b = boolean_from_moments(m, total);
            RF want_b(Rational(1)), want_m(Rational(1));
            for (unsigned l : lengths) {
                want_b = want_b * b[l];
                want_m = want_m * m[l];
            }
            RF got_b, got_m;
            for (const auto& [mu, coeff] : bool_exp)
                got_b += eval_gamma_poly(coeff) * normalized_character(mu, lam, stable);
            for (const auto& [mu, coeff] : mom_exp)
                got_m += eval_gamma_poly(coeff) * normalized_character(mu, lam, stable);
            CHECK(got_b == want_b);
            CHECK(got_m == want_m);
        }
    }
}
