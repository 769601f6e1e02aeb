#include "doctest.h"

#include "cluster_poset/quiver.hpp"

#include <algorithm>
#include <random>

using namespace cpo;

namespace {

Quiver lin3() {
    return make_quiver({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
}

Quiver alt3() { // 1 -> 2 <- 3
    return make_quiver({"1", "2", "3"}, {{"1", "2"}, {"3", "2"}});
}

} // namespace

TEST_CASE("parse_quiver") {
    Quiver q = parse_quiver(R"({"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"]]})");
    CHECK(q == lin3());

    Quiver single = parse_quiver(R"({"vertices":["1"],"arrows":[]})");
    CHECK(single.size() == 1);
    CHECK(single.arrows.empty());

    CHECK_THROWS_AS(
        parse_quiver(R"({"vertices":["1","2"],"arrows":[["1","2"],["2","1"]]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver(R"({"vertices":["1","1"],"arrows":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_quiver(R"({"vertices":["1"],"arrows":[["1","9"]]})"),
                    std::invalid_argument);
}

TEST_CASE("terminal vertices") {
    CHECK(terminal_vertices(lin3(), TerminalKind::Sink) == std::vector<int>{2});
    CHECK(terminal_vertices(lin3(), TerminalKind::Source) == std::vector<int>{0});
    CHECK(terminal_vertices(alt3(), TerminalKind::Source) == std::vector<int>{0, 2});
}

TEST_CASE("reflect") {
    CHECK(reflect(lin3(), 2) == alt3());
    CHECK(reflect(alt3(), 2) == lin3());
    CHECK_THROWS_AS(reflect(lin3(), 1), std::invalid_argument);
}

TEST_CASE("reflect is an involution at every sink and source") {
    for (const Quiver& q : {lin3(), alt3(), make_quiver({"a", "b"}, {{"a", "b"}})}) {
        for (TerminalKind kind : {TerminalKind::Sink, TerminalKind::Source})
            for (int x : terminal_vertices(q, kind))
                CHECK(reflect(reflect(q, x), x) == q);
    }
}

TEST_CASE("classify_dynkin") {
    auto t = classify_dynkin(lin3());
    REQUIRE(t.has_value());
    CHECK(*t == DynkinType{'A', 3});

    // Acyclic orientation of a 4-cycle.
    Quiver cyc = make_quiver({"1", "2", "3", "4"},
                             {{"1", "2"}, {"2", "3"}, {"1", "4"}, {"4", "3"}});
    CHECK(!classify_dynkin(cyc));

    Quiver star = make_quiver({"c", "a", "b", "d"}, {{"a", "c"}, {"b", "c"}, {"d", "c"}});
    REQUIRE(classify_dynkin(star));
    CHECK(*classify_dynkin(star) == DynkinType{'D', 4});

    Quiver e6 = make_quiver({"1", "2", "3", "4", "5", "6"},
                            {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"6", "3"}});
    REQUIRE(classify_dynkin(e6));
    CHECK(*classify_dynkin(e6) == DynkinType{'E', 6});

    Quiver parallel = make_quiver({"1", "2"}, {{"1", "2"}, {"1", "2"}});
    CHECK(!classify_dynkin(parallel));
}

TEST_CASE("euler_form") {
    Quiver q = lin3();
    CHECK(euler_form(q, {0, 1, 0}, {0, 0, 1}) == -1);
    CHECK(euler_form(q, {2, 5, 1}, {0, 0, 0}) == 0);
    CHECK(euler_form(q, {1, 1, 1}, {0, 1, 0}) == 0);
}

TEST_CASE("euler_form bilinearity on random vectors") {
    Quiver q = alt3();
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        DimVec d(3), d2(3), e(3), sum(3);
        for (int i = 0; i < 3; ++i) {
            d[i] = entry(rng);
            d2[i] = entry(rng);
            e[i] = entry(rng);
            sum[i] = d[i] + d2[i];
        }
        CHECK(euler_form(q, sum, e) == euler_form(q, d, e) + euler_form(q, d2, e));
    }
}

TEST_CASE("simple_reflection") {
    Quiver q = lin3();
    CHECK(simple_reflection(q, 2, {0, 1, 1}) == DimVec{0, 1, 0});
    CHECK(simple_reflection(q, 2, {0, 0, 1}) == DimVec{0, 0, -1});
    CHECK(simple_reflection(q, 2, {1, 1, 1}) == DimVec{1, 1, 0});
}

TEST_CASE("simple_reflection is an involution") {
    Quiver q = alt3();
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        DimVec d(3);
        for (int i = 0; i < 3; ++i)
            d[i] = entry(rng);
        for (int x = 0; x < 3; ++x)
            CHECK(simple_reflection(q, x, simple_reflection(q, x, d)) == d);
    }
}

TEST_CASE("positive_roots") {
    auto roots = positive_roots(lin3());
    std::vector<DimVec> expect{{0, 0, 1}, {0, 1, 0}, {1, 0, 0},
                               {0, 1, 1}, {1, 1, 0}, {1, 1, 1}};
    std::sort(expect.begin(), expect.end(), [](const DimVec& a, const DimVec& b) {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        return da != db ? da < db : a < b;
    });
    CHECK(roots == expect);

    CHECK(positive_roots(make_quiver({"1"}, {})) == std::vector<DimVec>{{1}});

    Quiver d4 = make_quiver({"c", "a", "b", "d"}, {{"a", "c"}, {"b", "c"}, {"d", "c"}});
    CHECK(positive_roots(d4).size() == 12);

    CHECK_THROWS_AS(positive_roots(make_quiver({"1", "2"}, {{"1", "2"}, {"1", "2"}})),
                    std::invalid_argument);
}

TEST_CASE("positive root count for type A, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::string> vs;
        std::vector<std::pair<std::string, std::string>> as;
        for (int i = 1; i <= n; ++i)
            vs.push_back(std::to_string(i));
        for (int i = 1; i < n; ++i)
            as.emplace_back(std::to_string(i), std::to_string(i + 1));
        CHECK(positive_roots(make_quiver(vs, as)).size() ==
              static_cast<std::size_t>(n * (n + 1) / 2));
    }
}

TEST_CASE("positive roots closed under simple reflections") {
    Quiver q = alt3();
    auto roots = positive_roots(q);
    for (const DimVec& r : roots)
        for (int x = 0; x < q.size(); ++x) {
            DimVec s = simple_reflection(q, x, r);
            bool positive = std::all_of(s.begin(), s.end(), [](int v) { return v >= 0; });
            if (positive)
                CHECK(std::find(roots.begin(), roots.end(), s) != roots.end());
        }
}

TEST_CASE("D4 root count agrees with Tits form box search") {
    Quiver d4 = make_quiver({"c", "a", "b", "d"}, {{"a", "c"}, {"b", "c"}, {"d", "c"}});
    // q(d) = <d,d> for the symmetrized form; roots are q(d) = 1.
    int found = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (int d = 0; d <= 3; ++d) {
                    DimVec v{a, b, c, d};
                    if (v == DimVec{0, 0, 0, 0})
                        continue;
                    if (euler_form(d4, v, v) == 1)
                        ++found;
                }
    CHECK(found == 12);
    CHECK(positive_roots(d4).size() == 12);
}
