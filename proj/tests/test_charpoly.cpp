#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "venergy/charpoly.hpp"

using namespace venergy;

TEST(Polynomial, Arithmetic) {
    const IntPolynomial a{-1, 0, 1}; // x^2 - 1
    const IntPolynomial b{1, 1};     // x + 1
    EXPECT_EQ(a * b, (IntPolynomial{-1, -1, 1, 1}));
    EXPECT_EQ(a - a, IntPolynomial{});
    EXPECT_EQ((a - a).degree(), -1);
    EXPECT_EQ(a + b, (IntPolynomial{0, 1, 1}));
    EXPECT_EQ(b.pow(3), (IntPolynomial{1, 3, 3, 1}));
    EXPECT_EQ(-b, (IntPolynomial{-1, -1}));
    EXPECT_EQ(a.evaluate(BigInt(5)), 24);
    EXPECT_EQ(IntPolynomial::monomial(3, 2), (IntPolynomial{0, 0, 3}));
}

TEST(Polynomial, XPowers) {
    const IntPolynomial p{0, 0, -2, 0, 1};
    EXPECT_EQ(p.x_adic_valuation(), 2u);
    EXPECT_EQ(p.divide_by_x_power(2), (IntPolynomial{-2, 0, 1}));
    EXPECT_THROW(p.divide_by_x_power(3), std::domain_error);
}

TEST(Polynomial, TextRoundTrip) {
    const IntPolynomial p{1, 0, -3, 0, 1};
    EXPECT_EQ(p.to_string(), "1 0 -3 0 1");
    EXPECT_EQ(IntPolynomial::parse(p.to_string()), p);
    EXPECT_EQ(IntPolynomial{}.to_string(), "0");
    EXPECT_EQ(IntPolynomial::parse("0"), IntPolynomial{});
}

TEST(Polynomial, BigCoefficients) {
    // (x+1)^60 has a central binomial coefficient beyond 64 bits
    const IntPolynomial p = IntPolynomial{1, 1}.pow(60);
    EXPECT_EQ(p.coefficient(30).str(), "118264581564861424");
    const IntPolynomial q = IntPolynomial{1, 1}.pow(130);
    EXPECT_EQ(q.coefficient(65).str(), "95067625827960698145584333020095113100");
}

TEST(CharPoly, HandValues) {
    EXPECT_EQ(char_poly(empty_graph(0)), IntPolynomial{1});
    EXPECT_EQ(char_poly(complete_graph(2)), (IntPolynomial{-1, 0, 1}));
    EXPECT_EQ(char_poly(path_graph(3)), (IntPolynomial{0, -2, 0, 1}));
    EXPECT_EQ(char_poly(path_graph(4)), (IntPolynomial{1, 0, -3, 0, 1}));
    EXPECT_EQ(char_poly(complete_graph(3)), (IntPolynomial{-2, -3, 0, 1}));
    EXPECT_EQ(char_poly(cycle_graph(4)), (IntPolynomial{0, 0, -4, 0, 1}));
}

TEST(CharPoly, StarsAgainstDeterminant) {
    for (std::size_t k = 2; k <= 8; ++k) {
        const Graph s = star_graph(k);
        const IntPolynomial expected =
            IntPolynomial::monomial(1, k - 2) * IntPolynomial{-static_cast<long long>(k - 1), 0, 1};
        EXPECT_EQ(char_poly(s), expected) << "k=" << k;
        EXPECT_TRUE(oracle::matches_determinant(s, expected));
    }
}

TEST(CharPoly, RandomGraphsAgainstDeterminant) {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Graph g = random_graph(2 + s % 11, 0.4, s);
        EXPECT_TRUE(oracle::matches_determinant(g, char_poly(g))) << describe(g);
    }
}

TEST(CharPoly, PermutationInvariant) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(3 + trial % 8, 0.5, rng());
        std::vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(char_poly(g), char_poly(permute(g, perm)));
    }
}

TEST(CharPoly, MultiplicativeOverUnion) {
    for (std::uint64_t s = 0; s < 15; ++s) {
        const Graph g = random_tree(1 + s % 7, s);
        const Graph h = random_graph(1 + s % 6, 0.5, s + 100);
        EXPECT_EQ(char_poly(disjoint_union(g, h)), char_poly(g) * char_poly(h));
    }
}

TEST(BCoeffs, Examples) {
    EXPECT_EQ(b_coeffs(complete_graph(2)).values, (std::vector<BigInt>{1, 1}));
    EXPECT_EQ(b_coeffs(path_graph(4)).values, (std::vector<BigInt>{1, 3, 1}));
    EXPECT_EQ(b_coeffs(star_graph(4)).at(2), 0);
    EXPECT_EQ(b_coeffs(star_graph(4)).at(1), 3);
    EXPECT_THROW(b_coeffs(complete_graph(3)), NotBipartiteError);
}

TEST(BCoeffs, ForestsCountMatchings) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Graph f = disjoint_union(random_tree(1 + s % 9, s), random_tree(1 + s % 4, s + 7));
        const auto b = b_coeffs(f);
        const auto m = oracle::matching_counts(f);
        for (std::size_t k = 0; k < m.size(); ++k) {
            EXPECT_EQ(b.at(k), m[k]) << "k=" << k << " " << describe(f);
        }
    }
}

TEST(BCoeffs, SignPatternCheck) {
    // x^2 + 1 breaks the alternation
    EXPECT_THROW(b_coeffs_from_poly(IntPolynomial{1, 0, 1}, 2), std::logic_error);
    EXPECT_THROW(b_coeffs_from_poly(IntPolynomial{0, 1, 0, 1}, 3), std::logic_error);
}

TEST(QuasiOrder, Examples) {
    EXPECT_EQ(quasi_compare(star_graph(4), path_graph(4)), QuasiOrder::StrictlyLess);
    EXPECT_EQ(quasi_compare(path_graph(4), star_graph(4)), QuasiOrder::StrictlyGreater);
    EXPECT_EQ(quasi_compare(path_graph(5), path_graph(5)), QuasiOrder::Equal);
    // shorter sequence padded with zeros
    EXPECT_EQ(quasi_compare(path_graph(3), path_graph(4)), QuasiOrder::StrictlyLess);

    BSequence a{{1, 5, 0}, 4};
    BSequence b{{1, 4, 1}, 4};
    EXPECT_EQ(quasi_compare(a, b), QuasiOrder::Incomparable);
    EXPECT_THROW(quasi_compare(complete_graph(3), path_graph(3)), NotBipartiteError);
}

TEST(Identities, CoalescenceSmall) {
    const auto id = coalescence_identity(complete_graph(2), 0, complete_graph(2), 0);
    EXPECT_TRUE(id.holds());
    EXPECT_EQ(id.lhs, (IntPolynomial{0, -2, 0, 1}));

    const Graph h = random_bipartite(3, 3, 0.6, 5);
    const auto point = coalescence_identity(path_graph(1), 0, h, 2);
    EXPECT_TRUE(point.holds());
    EXPECT_EQ(point.lhs, char_poly(h));
}

TEST(Identities, CoalescenceRandom) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(1 + rng() % 7, 0.5, rng());
        const Graph h = random_tree(1 + rng() % 7, rng());
        EXPECT_TRUE(verify_coalescence_identity(g, rng() % g.order(), h, rng() % h.order()));
    }
}

TEST(Identities, EdgeRecursion) {
    const Graph c4 = cycle_graph(4);
    const auto cycles = cycles_through_edge(c4, Edge(0, 1));
    ASSERT_EQ(cycles.size(), 1u);
    EXPECT_EQ(cycles[0].size(), 4u);
    EXPECT_TRUE(verify_edge_recursion(c4, Edge(0, 1)));
    EXPECT_TRUE(verify_edge_recursion(complete_graph(2), Edge(0, 1)));

    const Graph k4 = complete_graph(4);
    EXPECT_EQ(cycles_through_edge(k4, Edge(0, 1)).size(), 4u); // two triangles, two 4-cycles
    for (const Edge& e : k4.edges()) {
        EXPECT_TRUE(verify_edge_recursion(k4, e));
    }
    EXPECT_THROW(verify_edge_recursion(c4, Edge(0, 2)), GraphError);
    EXPECT_THROW(cycles_through_edge(cycle_graph(17), Edge(0, 1)), std::length_error);
}

TEST(Identities, EdgeRecursionTreesReduce) {
    const Graph t = random_tree(9, 21);
    for (const Edge& e : t.edges()) {
        EXPECT_TRUE(cycles_through_edge(t, e).empty());
        const auto id = edge_recursion_identity(t, e);
        EXPECT_TRUE(id.holds());
    }
}
