#include <gtest/gtest.h>

#include <random>

#include "mopareto/mopareto.hpp"
#include "support/brute_force.hpp"

namespace mopareto {
namespace {

Instance staircase() {
    return Instance(2, {Solution{"s1", {1, 4}}, Solution{"s2", {2, 3}}, Solution{"s3", {3, 2}}, Solution{"s4", {4, 1}}});
}

GapQuery query(Rational b1, Rational b2, Rational delta) { return GapQuery{{std::move(b1), std::move(b2)}, std::move(delta)}; }

TEST(GapOracle, DirectCases) {
    const Instance corners(2, {Solution{"a", {1, 4}}, Solution{"b", {4, 1}}});
    EXPECT_FALSE(gap_oracle(corners, query(2, 2, Rational(1, 2))).has_value());
    EXPECT_TRUE(valid_gap_answer(corners, query(2, 2, Rational(1, 2)), std::nullopt));
    EXPECT_EQ(gap_oracle(corners, query(4, 4, Rational(1, 2))), 0U);
    EXPECT_EQ(gap_oracle(corners, query(5, 1, Rational(1, 2))), 1U);
    EXPECT_THROW(gap_oracle(corners, query(0, 1, Rational(1, 2))), std::invalid_argument);
    EXPECT_THROW(gap_oracle(corners, query(1, 1, Rational(0))), std::invalid_argument);
}

TEST(GapOracle, AnswersAlwaysValid) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const Instance inst = gen_random(1 + rng() % 20, 2, rng(), {2, 4});
        const GapQuery q = query(Rational(static_cast<long>(1 + rng() % 16), 4), Rational(static_cast<long>(1 + rng() % 16), 4),
                                 Rational(static_cast<long>(1 + rng() % 4), 4));
        const auto x = gap_oracle(inst, q);
        ASSERT_TRUE(valid_gap_answer(inst, q, x ? std::optional<std::string>(inst.id(*x)) : std::nullopt));
    }
}

TEST(GapOracle, ValidityChecker) {
    const Instance inst = staircase();
    EXPECT_TRUE(valid_gap_answer(inst, query(4, 4, Rational(1, 2)), std::nullopt));
    EXPECT_FALSE(valid_gap_answer(inst, query(6, 6, Rational(1, 2)), std::nullopt));
    EXPECT_TRUE(valid_gap_answer(inst, query(4, 4, Rational(1, 2)), std::string("s4")));
    EXPECT_FALSE(valid_gap_answer(inst, query(3, 6, Rational(1, 2)), std::string("s4")));
    EXPECT_TRUE(valid_gap_answer(inst, query(3, 6, Rational(1, 2)), std::string("s1")));
    EXPECT_FALSE(valid_gap_answer(inst, query(4, 4, Rational(1, 2)), std::string("ghost")));
}

TEST(Adversary, PairShape) {
    const auto pair = make_adversarial_pair(10);
    EXPECT_EQ(pair.first.size(), 1U);
    EXPECT_EQ(pair.second.size(), 2U);
    EXPECT_EQ(pair.second.f(pair.second.index_of("x1"))[0], Rational(11, 10));
    EXPECT_EQ(pair.second.f(pair.second.index_of("x2"))[1], Rational(1));
}

TEST(Adversary, CaseSplit) {
    const std::uint64_t l = 1000;
    const auto pair = make_adversarial_pair(l);
    const Rational small(1, static_cast<long>(l));
    EXPECT_EQ(consistent_gap_answer(pair, query(2, 2, small)), std::optional<std::string>("x1"));
    EXPECT_EQ(consistent_gap_answer(pair, query(1, 1, small)), std::nullopt);
    EXPECT_EQ(consistent_gap_answer(pair, query(1, 3, 2 * small)), std::nullopt);
    for (const auto& q : {query(2, 2, small), query(1, 1, small), query(1, 3, 2 * small)}) {
        const auto a = consistent_gap_answer(pair, q);
        EXPECT_TRUE(valid_gap_answer(pair.first, q, a));
        EXPECT_TRUE(valid_gap_answer(pair.second, q, a));
    }
    // x2 would also be a valid YES for I2 here; the adversary still says NO.
    EXPECT_TRUE(valid_gap_answer(pair.second, query(1, 1, small), std::string("x2")));
    EXPECT_THROW(consistent_gap_answer(pair, query(1, 1, Rational(1, 2000))), PrecisionError);
}

TEST(Constrained, DirectCases) {
    const Instance inst = staircase();
    const std::vector<Rational> two{2};
    EXPECT_EQ(constrained_oracle(inst, 1, two), 1U);
    EXPECT_EQ(constrained_oracle(inst, 0, two), 2U);
    const std::vector<Rational> tiny{Rational(1, 2)};
    EXPECT_FALSE(constrained_oracle(inst, 1, tiny).has_value());
    const std::vector<Rational> wrong{1, 2};
    EXPECT_THROW(constrained_oracle(inst, 1, wrong), std::invalid_argument);
}

TEST(Constrained, AttainsRestrictedOptimum) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t p = 2 + rng() % 3;
        const Instance inst = gen_random(1 + rng() % 25, p, rng(), {2, 3});
        const std::size_t objective = rng() % p;
        std::vector<Rational> bounds;
        for (std::size_t j = 0; j + 1 < p; ++j) bounds.emplace_back(static_cast<long>(1 + rng() % 16), 4);
        std::optional<Rational> opt;
        for (std::size_t x = 0; x < inst.size(); ++x) {
            bool feasible = true;
            for (std::size_t j = 0, b = 0; j < p; ++j) {
                if (j == objective) continue;
                feasible = feasible && inst.f(x)[j] <= bounds[b++];
            }
            if (feasible && (!opt || inst.f(x)[objective] < *opt)) opt = inst.f(x)[objective];
        }
        const auto got = constrained_oracle(inst, objective, bounds);
        ASSERT_EQ(got.has_value(), opt.has_value());
        if (got) {
            ASSERT_EQ(inst.f(*got)[objective], *opt);
        }
    }
}

TEST(DualRestrict, DirectCases) {
    const Instance inst(2, {Solution{"a", {1, 4}}, Solution{"b", {3, 1}}, Solution{"c", {Rational(31, 10), Rational(9, 10)}}});
    const std::vector<Rational> one{1};
    EXPECT_EQ(dual_restrict_oracle(inst, 0, one, Rational(1, 10)), 1U);
    const std::vector<Rational> tiny{Rational(1, 2)};
    EXPECT_FALSE(dual_restrict_oracle(inst, 0, tiny, Rational(1, 10)).has_value());

    const Instance st = staircase();
    const std::vector<Rational> two{2};
    EXPECT_EQ(dual_restrict_oracle(st, 1, two, Rational(1, 3)), constrained_oracle(st, 1, two));
}

TEST(DualRestrict, ContractOnRandomInstances) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 400; ++trial) {
        const Instance inst = gen_random(1 + rng() % 25, 2, rng(), {2, 3});
        const std::size_t objective = rng() % 2;
        const std::vector<Rational> bounds{Rational(static_cast<long>(1 + rng() % 16), 4)};
        const Rational delta(static_cast<long>(1 + rng() % 4), 8);
        const auto opt = constrained_oracle(inst, objective, bounds);
        const auto got = dual_restrict_oracle(inst, objective, bounds, delta);
        ASSERT_EQ(got.has_value(), opt.has_value());
        if (!got) continue;
        EXPECT_LE(inst.f(*got)[objective], inst.f(*opt)[objective]);
        EXPECT_LE(inst.f(*got)[1 - objective], (Rational(1) + delta) * bounds[0]);
        EXPECT_TRUE(testing::is_efficient(inst, *got));
    }
}

TEST(HalfStep, SquareFitsUnderOnePlusEps) {
    EXPECT_EQ(half_step_delta(Rational(3)), Rational(1));
    EXPECT_EQ(half_step_delta(Rational(21, 100)), Rational(1, 10));
    for (const Rational& eps : {Rational(1), Rational(1, 2), Rational(1, 100), Rational(7, 3)}) {
        const Rational d = half_step_delta(eps);
        EXPECT_TRUE(d.is_positive());
        EXPECT_LE(pow_ratio(Rational(1) + d, 2), Rational(1) + eps);
        EXPECT_GT(pow_ratio(Rational(1) + d + Rational(1, 1L << 30), 2), Rational(1) + eps);
    }
}

TEST(Biobjective, StaircaseAndSmallCases) {
    const Instance st = staircase();
    const auto greedy = greedy_biobjective_min(st, Rational(1));
    EXPECT_EQ(greedy.members.size(), 2U);
    EXPECT_EQ(testing::brute_min_set(st, RelationSpec::epsilon(Rational(1))), 2U);
    EXPECT_LE(dual_restrict_2approx(st, Rational(1)).members.size(), 4U);

    const Instance one(2, {Solution{"only", {5, 7}}});
    EXPECT_EQ(greedy_biobjective_min(one, Rational(1)).members, std::vector<std::string>{"only"});
    EXPECT_EQ(dual_restrict_2approx(one, Rational(1)).members, std::vector<std::string>{"only"});

    EXPECT_EQ(greedy_biobjective_min(gen_prop_dominated(Rational(1)), Rational(1)).members.size(), 2U);
    EXPECT_THROW(greedy_biobjective_min(gen_random(4, 3, 1), Rational(1)), std::invalid_argument);
}

TEST(Biobjective, RandomSweep) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Instance inst = gen_random(1 + seed % 18, 2, seed * 7 + 1, {3, 6});
        const Rational eps(1 + static_cast<long>(seed % 5), 4);
        const auto minimum = testing::brute_min_set(inst, RelationSpec::epsilon(eps));
        const auto greedy = greedy_biobjective_min(inst, eps);
        const auto dual = dual_restrict_2approx(inst, eps);
        EXPECT_EQ(greedy.members.size(), minimum) << seed;
        EXPECT_LE(dual.members.size(), 2 * minimum) << seed;
        EXPECT_TRUE(verify_members(inst, greedy.members, RelationSpec::quasi_k(eps, 1)).ok());
        EXPECT_TRUE(verify_members(inst, dual.members, RelationSpec::quasi_k(eps, 1)).ok());
        for (const auto& m : dual.members) EXPECT_TRUE(testing::is_efficient(inst, inst.index_of(m)));
    }
}

}  // namespace
}  // namespace mopareto
