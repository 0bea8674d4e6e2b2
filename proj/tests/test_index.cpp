#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gperiod/brute.hpp"
#include "gperiod/gadgets.hpp"
#include "gperiod/index.hpp"
#include "gperiod/oracle.hpp"
#include "gperiod/selfcheck.hpp"

using namespace gperiod;

namespace {

// 3-cycle 0 -> 1 -> 2 -> 0 with tail 3 -> 0.
Digraph cycle_with_tail() { return Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}}); }

ResidueQuery tail_query(std::uint64_t K) {
    const SccDecomposition scc = scc_decompose(cycle_with_tail());
    return ResidueQuery{3, 1, K, scc.component_id[0], 3, BigInt(3)};
}

}  // namespace

TEST(HasPathOfLength, Examples) {
    EXPECT_TRUE(has_path_of_length(fixtures::cycle(3), 0, 0, 3));
    EXPECT_FALSE(has_path_of_length(fixtures::cycle(3), 0, 1, 3));
    const auto src = fixtures::reduction_source();
    EXPECT_TRUE(has_path_of_length(src.graph, src.s, src.t, 3));
    EXPECT_FALSE(has_path_of_length(src.graph, src.s, src.t, 2));
    EXPECT_FALSE(has_path_of_length(src.graph, src.s, src.t, 4));
}

TEST(HasPathOfLength, LengthZeroMeansSameVertex) {
    EXPECT_TRUE(has_path_of_length(fixtures::path3(), 1, 1, 0));
    EXPECT_FALSE(has_path_of_length(fixtures::path3(), 0, 1, 0));
}

TEST(HasPathOfLength, AgreesWithPowers) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Digraph g = gen_random(1 + seed % 7, 0.3, seed);
        const BoolMatrix a = adjacency(g);
        BoolMatrix x = BoolMatrix::identity(g.size());
        for (std::uint64_t L = 0; L < 12; ++L) {
            for (Vertex s = 0; s < g.size(); ++s) {
                for (Vertex t = 0; t < g.size(); ++t) ASSERT_EQ(has_path_of_length(g, s, t, L), x.get(s, t));
            }
            x = bmm(x, a);
        }
    }
}

TEST(ResiduePathExists, CycleWithTail) {
    const Digraph g = cycle_with_tail();
    EXPECT_TRUE(residue_path_exists(g, tail_query(2)));
    EXPECT_FALSE(residue_path_exists(g, tail_query(0)));
    EXPECT_FALSE(residue_path_exists(g, tail_query(1)));
    EXPECT_TRUE(residue_path_exists(g, tail_query(5)));
    const auto w = residue_witness(g, scc_decompose(g), tail_query(2));
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, (std::vector<Vertex>{3, 0, 1}));
}

TEST(ResiduePathExists, EmptyPathInsideComponent) {
    const Digraph g = cycle_with_tail();
    const SccDecomposition scc = scc_decompose(g);
    const ResidueQuery q{1, 1, 0, scc.component_id[1], 3, BigInt(3)};
    EXPECT_TRUE(residue_path_exists(g, q));
    EXPECT_EQ(*residue_witness(g, scc, q), std::vector<Vertex>{1});
}

TEST(ResiduePathExists, MalformedQueries) {
    const Digraph g = cycle_with_tail();
    const SccDecomposition scc = scc_decompose(g);
    const std::size_t c = scc.component_id[0];
    EXPECT_THROW(residue_path_exists(g, ResidueQuery{3, 1, 17, c, 3, BigInt(3)}), std::invalid_argument);
    EXPECT_THROW(residue_path_exists(g, ResidueQuery{3, 1, 0, c, 2, BigInt(3)}), std::invalid_argument);
    EXPECT_THROW(residue_path_exists(g, ResidueQuery{3, 1, 0, scc.component_id[3], 1, BigInt(3)}), std::invalid_argument);
    EXPECT_THROW(residue_path_exists(g, ResidueQuery{4, 1, 0, c, 3, BigInt(3)}), std::out_of_range);
}

TEST(KBelowIndex, Examples) {
    EXPECT_TRUE(k_below_index(fixtures::wielandt4(), 9));
    EXPECT_FALSE(k_below_index(fixtures::wielandt4(), 10));
    EXPECT_FALSE(k_below_index(fixtures::cycle(3), 0));
    EXPECT_THROW(k_below_index(fixtures::cycle(3), 10), std::invalid_argument);
}

TEST(IndexOfConvergence, Examples) {
    const PowerSignature dag = index_of_convergence(fixtures::path3());
    EXPECT_EQ(dag.index, 3u);
    EXPECT_EQ(dag.period, 1);
    EXPECT_EQ(dag, oracle_signature(fixtures::path3()));
    const PowerSignature two_three = index_of_convergence(fixtures::disjoint_cycles({2, 3}));
    EXPECT_EQ(two_three.index, 0u);
    EXPECT_EQ(two_three.period, 6);
    EXPECT_EQ(two_three, oracle_signature(fixtures::disjoint_cycles({2, 3})));
}

TEST(IndexOfConvergence, ExponentGadgetReference) {
    const auto src = fixtures::exponent_source();
    const GadgetInstance gadget = gen_exponent_gadget(src.graph, src.s, src.t, src.t_prime);
    ASSERT_EQ(gadget.graph.size(), 8u);
    const PowerSignature sig = index_of_convergence(gadget.graph);
    EXPECT_GE(sig.index, 5u);
    EXPECT_EQ(sig, oracle_signature(gadget.graph));

    const auto reach = fixtures::exponent_source_reachable();
    const GadgetInstance g2 = gen_exponent_gadget(reach.graph, reach.s, reach.t, reach.t_prime);
    const PowerSignature sig2 = index_of_convergence(g2.graph);
    EXPECT_LE(sig2.index, 4u);
    EXPECT_EQ(sig2, oracle_signature(g2.graph));
}

TEST(Exponent, Examples) {
    const Digraph k3(3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
    EXPECT_EQ(exponent(k3), 2u);
    EXPECT_FALSE(adjacency(k3).all_ones());
    EXPECT_TRUE(power(adjacency(k3), 2).all_ones());
    EXPECT_EQ(exponent(fixtures::wielandt4()), 10u);
    for (std::size_t n = 3; n <= 9; ++n) EXPECT_EQ(exponent(gen_wielandt(n)), (n - 1) * (n - 1) + 1);
}

TEST(Exponent, DomainErrorsNameTheCause) {
    try {
        exponent(fixtures::cycle(2));
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("period 2"), std::string::npos);
    }
    try {
        exponent(fixtures::path3());
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("not strongly connected"), std::string::npos);
    }
    EXPECT_THROW(exponent(Digraph(1)), DomainError);
}

TEST(Exponent, SelfLoopVertexIsZero) { EXPECT_EQ(exponent(Digraph(1, {{0, 0}})), 0u); }

TEST(IndexProperties, CharacterizationExhaustive) {
    for (std::size_t n = 1; n <= 4; ++n) {
        brute::for_each_digraph(n, [](const Digraph& g) {
            ASSERT_EQ(index_of_convergence(g), oracle_signature(g)) << to_edgelist(g);
        });
    }
}

TEST(IndexProperties, CharacterizationRandom) {
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        const Digraph g = gen_random(1 + seed % 8, 0.1 + 0.05 * static_cast<double>(seed % 5), seed);
        ASSERT_EQ(index_of_convergence(g), oracle_signature(g)) << to_edgelist(g);
    }
}

TEST(IndexProperties, ResidueLawAgainstExplicitPowers) {
    for (std::size_t n = 1; n <= 3; ++n) {
        brute::for_each_digraph(n, [](const Digraph& g) { ASSERT_EQ(check_residue_law(g), std::nullopt) << to_edgelist(g); });
    }
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Digraph g = seed % 2 ? gen_random(4 + seed % 2, 0.3, seed) : gen_random_strongly_connected(4 + seed % 2, seed);
        ASSERT_EQ(check_residue_law(g), std::nullopt) << to_edgelist(g);
    }
}

TEST(IndexProperties, WitnessesWithinLengthBound) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Digraph g = gen_random(1 + seed % 10, 0.2, seed);
        ASSERT_EQ(check_witnesses(g), std::nullopt) << to_edgelist(g);
    }
}

TEST(IndexProperties, Monotonicity) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Digraph g = gen_random(1 + seed % 6, 0.25, seed);
        const std::uint64_t index = index_of_convergence(g).index;
        const std::uint64_t n = g.size();
        for (std::uint64_t K = 0; K <= n * n; ++K) ASSERT_EQ(k_below_index(g, K), K < index) << to_edgelist(g);
    }
}

TEST(IndexProperties, SchwarzBound) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Digraph g = gen_random(1 + seed % 12, 0.15, seed);
        ASSERT_LE(index_of_convergence(g).index, g.size() * g.size());
    }
}
