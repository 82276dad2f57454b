#include <doctest.h>

#include <algorithm>
#include <set>

#include "mvortho/partition.hpp"

using namespace mvortho;

namespace {

std::vector<Partition> all_partitions(int n, long maxw) {
    std::vector<Partition> out;
    Partition top(n, 0);
    top[0] = static_cast<int>(maxw);
    for (const auto& p : ideal(top)) out.push_back(p);  // ideal((w,0,..)) = everything of weight<=w
    return out;
}

}  // namespace

TEST_CASE("dominance examples") {
    CHECK(dominance_leq({1, 1}, {2, 0}));
    CHECK_FALSE(dominance_leq({2, 0}, {1, 1}));
    CHECK(dominance_leq({1, 1, 1}, {3, 0, 0}));
    CHECK_THROWS_AS(dominance_leq({1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("dominance is a partial order on n<=3, |lambda|<=5") {
    for (int n = 1; n <= 3; ++n) {
        auto ps = all_partitions(n, 5);
        for (const auto& a : ps) {
            CHECK(dominance_leq(a, a));
            for (const auto& b : ps) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : ps)
                    if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
        }
    }
}

TEST_CASE("ideal examples and downward closure") {
    CHECK(ideal({0, 0}) == std::vector<Partition>{{0, 0}});
    CHECK(ideal({1, 1}) == std::vector<Partition>{{0, 0}, {1, 0}, {1, 1}});
    CHECK(ideal({2, 0}) == std::vector<Partition>{{0, 0}, {1, 0}, {1, 1}, {2, 0}});

    auto id = ideal({2, 1, 0});
    std::set<Partition> inid(id.begin(), id.end());
    for (const auto& mu : id)
        for (const auto& nu : ideal(mu)) CHECK(inid.count(nu) == 1);
}

TEST_CASE("ideal({1,1}) includes the odd layer") {
    // mu <= lambda compares partial sums only, so |mu| < |lambda| occurs.
    auto id = ideal({1, 1});
    CHECK(std::find(id.begin(), id.end(), Partition{1, 0}) != id.end());
}

TEST_CASE("pieri neighbors") {
    auto at = [](const std::vector<std::pair<SignedIndexSet, Partition>>& v, const Partition& p) {
        return std::count_if(v.begin(), v.end(), [&](const auto& e) { return e.second == p; });
    };
    auto n00 = pieri_neighbors({0, 0}, 1);
    CHECK(n00.size() == 2);
    CHECK(at(n00, {0, 0}) == 1);
    CHECK(at(n00, {1, 0}) == 1);

    auto n10 = pieri_neighbors({1, 0}, 1);
    CHECK(n10.size() == 4);
    CHECK(at(n10, {2, 0}) == 1);
    CHECK(at(n10, {0, 0}) == 1);
    CHECK(at(n10, {1, 1}) == 1);

    auto n11 = pieri_neighbors({1, 1}, 2);
    CHECK(at(n11, {0, 0}) == 1);  // J={1,2}, both signs negative

    // Interior count: sum_k C(n,k) 2^k
    auto big = pieri_neighbors({9, 6, 3}, 3);
    CHECK(big.size() == 1 + 3 * 2 + 3 * 4 + 8);
}

TEST_CASE("msym evaluation") {
    CHECK(msym_eval({0, 0}, {ExactScalar(4), ExactScalar(9)}) == ExactScalar(1));
    CHECK(msym_eval({1, 0}, {ExactScalar(2), ExactScalar(3)}) == ExactScalar(5));
    CHECK(msym_eval({2, 1}, {ExactScalar(2), ExactScalar(3)}) == ExactScalar(30));

    // symmetry under coordinate permutation
    std::vector<ExactScalar> p = {ExactScalar(2), ExactScalar(1, 3), ExactScalar(-5)};
    std::vector<ExactScalar> q = {ExactScalar(-5), ExactScalar(2), ExactScalar(1, 3)};
    for (const Partition& la : {Partition{3, 1, 0}, Partition{2, 2, 1}, Partition{4, 0, 0}})
        CHECK(msym_eval(la, p) == msym_eval(la, q));
}
