#include "nccc/group.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

using namespace nccc;

namespace {

std::vector<size_t> class_sizes(const ConjugacyPartition& p) {
    std::vector<size_t> sizes;
    for (const auto& c : p.classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

TEST_CASE("family parameter bounds") {
    CHECK_THROWS_AS(FamilySpec::dihedral(2), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::dicyclic(1), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::semidihedral(1), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::umn(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::umn(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::u6m(1), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::v8m(1), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::heisenberg(4), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::heisenberg(1), std::invalid_argument);
}

TEST_CASE("constructed groups have the expected orders") {
    CHECK(build_group(FamilySpec::dihedral(3)).order() == 6);
    CHECK(build_group(FamilySpec::dicyclic(2)).order() == 8);
    CHECK(build_group(FamilySpec::semidihedral(2)).order() == 16);
    CHECK(build_group(FamilySpec::umn(2, 3)).order() == 12);
    CHECK(build_group(FamilySpec::u6m(2)).order() == 12);
    CHECK(build_group(FamilySpec::v8m(2)).order() == 16);
    CHECK(build_group(FamilySpec::heisenberg(3)).order() == 27);
}

TEST_CASE("centers of the classification families") {
    // |Z(D_2m)| = 1 (m odd) or 2 (m even)
    CHECK(center(build_group(FamilySpec::dihedral(3))) == std::vector<int>{0});
    CHECK(center(build_group(FamilySpec::dihedral(7))).size() == 1);
    CHECK(center(build_group(FamilySpec::dihedral(8))).size() == 2);
    // |Z(T_4m)| = 2: {1, x^m}
    const FiniteGroup q8 = build_group(FamilySpec::dicyclic(2));
    const auto zq8 = center(q8);
    REQUIRE(zq8.size() == 2);
    CHECK(q8.label(zq8[0]) == "e");
    CHECK(q8.label(zq8[1]) == "x^2");
    CHECK(center(build_group(FamilySpec::dicyclic(5))).size() == 2);
    // |Z(SD_8m)| = 2 (m even) or 4 (m odd)
    CHECK(center(build_group(FamilySpec::semidihedral(2))).size() == 2);
    CHECK(center(build_group(FamilySpec::semidihedral(3))).size() == 4);
    // |Z(U_6m)| = m
    CHECK(center(build_group(FamilySpec::u6m(2))).size() == 2);
    CHECK(center(build_group(FamilySpec::u6m(5))).size() == 5);
    // |Z(U_(n,m))| = n (m odd) or 2n (m even)
    CHECK(center(build_group(FamilySpec::umn(3, 5))).size() == 3);
    CHECK(center(build_group(FamilySpec::umn(3, 6))).size() == 6);
    // |Z(V_8m)| = 4 (m even) or 2 (m odd)
    CHECK(center(build_group(FamilySpec::v8m(2))).size() == 4);
    CHECK(center(build_group(FamilySpec::v8m(3))).size() == 2);
    // |Z| = p for the unitriangular groups
    CHECK(center(build_group(FamilySpec::heisenberg(3))).size() == 3);
    CHECK(center(build_group(FamilySpec::heisenberg(5))).size() == 5);
}

TEST_CASE("conjugacy classes: known partitions") {
    const auto d6 = conjugacy_classes(build_group(FamilySpec::dihedral(3)));
    CHECK(class_sizes(d6) == std::vector<size_t>{1, 2, 3});
    CHECK(d6.central_classes.size() == 1);

    const auto q8 = conjugacy_classes(build_group(FamilySpec::dicyclic(2)));
    CHECK(class_sizes(q8) == std::vector<size_t>{1, 1, 2, 2, 2});
    CHECK(q8.central_classes.size() == 2);

    // p central singletons plus p^2 - 1 classes of size p
    const auto h3 = conjugacy_classes(build_group(FamilySpec::heisenberg(3)));
    std::vector<size_t> expected(3, 1);
    expected.insert(expected.end(), 8, 3);
    CHECK(class_sizes(h3) == expected);
    CHECK(h3.central_classes.size() == 3);
}

TEST_CASE("conjugacy classes: structural invariants across families") {
    const std::vector<FamilySpec> specs = {
        FamilySpec::dihedral(6),  FamilySpec::dicyclic(4),   FamilySpec::semidihedral(3),
        FamilySpec::umn(2, 5),    FamilySpec::u6m(3),        FamilySpec::v8m(3),
        FamilySpec::heisenberg(3)};
    for (const auto& spec : specs) {
        INFO(spec.name());
        const FiniteGroup g = build_group(spec);
        const auto z = center(g);
        const auto part = conjugacy_classes(g);
        // class equation: sizes sum to |G| and divide |G|
        size_t total = 0;
        for (const auto& cls : part.classes) {
            total += cls.size();
            CHECK(g.order() % cls.size() == 0);
            // closed under conjugation
            for (int x : cls)
                for (int h = 0; h < g.order(); ++h)
                    CHECK(std::binary_search(cls.begin(), cls.end(), g.conjugate(x, h)));
        }
        CHECK(total == static_cast<size_t>(g.order()));
        // singleton class iff central element
        for (const auto& cls : part.classes)
            CHECK((cls.size() == 1) ==
                  std::binary_search(z.begin(), z.end(), cls.front()));
        // classes ordered by minimal element
        for (size_t i = 1; i < part.classes.size(); ++i)
            CHECK(part.classes[i - 1].front() < part.classes[i].front());
    }
}

TEST_CASE("commutes") {
    const FiniteGroup d6 = build_group(FamilySpec::dihedral(3));
    const int x = 2, x2 = 4, y = 1;  // lexicographic (i, j) indexing
    REQUIRE(d6.label(x) == "x");
    REQUIRE(d6.label(x2) == "x^2");
    REQUIRE(d6.label(y) == "y");
    CHECK(commutes(d6, x, x2));
    CHECK_FALSE(commutes(d6, x, y));

    const FiniteGroup q8 = build_group(FamilySpec::dicyclic(2));
    CHECK_FALSE(commutes(q8, 2 /*x*/, 1 /*y*/));
}

TEST_CASE("central quotient recognition") {
    const auto d8 = central_quotient_kind(build_group(FamilySpec::dihedral(4)));
    CHECK(d8 == QuotientKind::zp(2));
    const auto t12 = central_quotient_kind(build_group(FamilySpec::dicyclic(3)));
    CHECK(t12 == QuotientKind::dihedral(3));
    const auto sd24 = central_quotient_kind(build_group(FamilySpec::semidihedral(3)));
    CHECK(sd24 == QuotientKind::dihedral(3));
    const auto sd16 = central_quotient_kind(build_group(FamilySpec::semidihedral(2)));
    CHECK(sd16 == QuotientKind::dihedral(4));
    for (long long m : {3, 5, 9}) {
        const auto kind = central_quotient_kind(build_group(FamilySpec::dihedral(m)));
        CHECK(kind == QuotientKind::dihedral(m));
    }
    CHECK(central_quotient_kind(build_group(FamilySpec::heisenberg(5))) == QuotientKind::zp(5));
    CHECK(central_quotient_kind(build_group(FamilySpec::u6m(4))) == QuotientKind::dihedral(3));
    CHECK(central_quotient_kind(build_group(FamilySpec::v8m(4))) == QuotientKind::dihedral(4));
}

TEST_CASE("op tables are Latin squares (spot check via validation reuse)") {
    // build_group already validates; rebuilding from the raw table must also pass.
    const FiniteGroup g = build_group(FamilySpec::v8m(2));
    std::vector<int> table;
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) table.push_back(g.op(i, j));
    CHECK_NOTHROW(FiniteGroup(table, g.labels()));
}

TEST_CASE("explicit tables load from JSON and are validated") {
    // Z3 as an explicit table
    const nlohmann::json ok = {{"order", 3},
                               {"table", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}},
                               {"labels", {"e", "a", "a^2"}}};
    const FiniteGroup z3 = build_group(group_spec_from_json(ok));
    CHECK(z3.order() == 3);
    CHECK(z3.label(1) == "a");
    CHECK(z3.op(1, 2) == 0);

    const nlohmann::json wrong_order = {{"order", 4}, {"table", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}};
    CHECK_THROWS(group_spec_from_json(wrong_order));

    // not associative (and not a group): last row breaks the Latin property
    const nlohmann::json broken = {{"order", 3}, {"table", {{0, 1, 2}, {1, 2, 0}, {2, 0, 2}}}};
    CHECK_THROWS_AS(build_group(group_spec_from_json(broken)), std::runtime_error);

    // identity must sit at index 0
    const nlohmann::json shifted = {{"order", 3}, {"table", {{2, 0, 1}, {0, 1, 2}, {1, 2, 0}}}};
    CHECK_THROWS_AS(build_group(group_spec_from_json(shifted)), std::runtime_error);

    const nlohmann::json label_mismatch = {
        {"order", 3}, {"table", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}, {"labels", {"e", "a"}}};
    CHECK_THROWS(build_group(group_spec_from_json(label_mismatch)));
}

TEST_CASE("element orders follow the presentations") {
    const FiniteGroup v16 = build_group(FamilySpec::v8m(2));
    // x has order 2m = 4, y has order 4
    CHECK(v16.element_order(4) == 4);  // x at (i,j) = (1,0) -> index 1*4+0
    CHECK(v16.element_order(1) == 4);  // y at (0,1)
    const FiniteGroup sd16 = build_group(FamilySpec::semidihedral(2));
    CHECK(sd16.element_order(2) == 8);  // x
    CHECK(sd16.element_order(1) == 2);  // y
}

TEST_CASE("validation of tables above the exhaustive threshold (sampled associativity)") {
    const int n = 520;  // cyclic group, order > 512
    ExplicitTableData data;
    data.table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) data.table[i][j] = (i + j) % n;
    const FiniteGroup g = build_group(FamilySpec::from_table(std::move(data)));
    CHECK(g.order() == n);
    CHECK(g.inv(1) == n - 1);
}

TEST_CASE("central quotient requires a non-abelian group") {
    const nlohmann::json z4 = {
        {"order", 4}, {"table", {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}}};
    const FiniteGroup g = build_group(group_spec_from_json(z4));
    CHECK_THROWS_AS(central_quotient_kind(g), std::invalid_argument);
}
