#include "nccc/closed_form.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

using namespace nccc;

namespace {

constexpr EnergyClassification all_border{EnergyClass::border, EnergyClass::border,
                                          EnergyClass::border};
constexpr EnergyClassification all_neither{EnergyClass::neither, EnergyClass::neither,
                                           EnergyClass::neither};

}  // namespace

TEST_CASE("border cases are exactly D6, D8 and T8") {
    CHECK(energy_classification(FamilySpec::dihedral(3)) == all_border);
    CHECK(energy_classification(FamilySpec::dihedral(4)) == all_border);
    CHECK(energy_classification(FamilySpec::dicyclic(2)) == all_border);

    std::vector<std::string> border_instances;
    auto tally = [&](const FamilySpec& spec) {
        const auto c = energy_classification(spec);
        const bool any_border = c.adjacency == EnergyClass::border ||
                                c.laplacian == EnergyClass::border ||
                                c.signless == EnergyClass::border;
        if (any_border) {
            // border in one sense means border in all three for these families
            CHECK(c == all_border);
            border_instances.push_back(spec.name());
        }
    };
    for (long long m = 3; m <= 40; ++m) tally(FamilySpec::dihedral(m));
    for (long long m = 2; m <= 30; ++m) tally(FamilySpec::dicyclic(m));
    for (long long m = 2; m <= 20; ++m) tally(FamilySpec::semidihedral(m));
    for (long long m = 2; m <= 25; ++m) tally(FamilySpec::u6m(m));
    for (long long n = 2; n <= 6; ++n)
        for (long long m = 3; m <= 15; ++m) tally(FamilySpec::umn(n, m));
    for (long long m = 2; m <= 15; ++m) tally(FamilySpec::v8m(m));
    tally(FamilySpec::heisenberg(3));
    tally(FamilySpec::heisenberg(5));
    CHECK(border_instances == std::vector<std::string>{"d2m(m=3)", "d2m(m=4)", "t4m(m=2)"});
}

TEST_CASE("hyperenergetic classification: pinned instances") {
    // adjacency energy never exceeds the complete graph in these families
    for (long long m = 3; m <= 40; ++m)
        CHECK(energy_classification(FamilySpec::dihedral(m)).adjacency != EnergyClass::hyper);

    CHECK(energy_classification(FamilySpec::dihedral(5)) == all_neither);
    CHECK(energy_classification(FamilySpec::dihedral(6)) == all_neither);   // D12
    CHECK(energy_classification(FamilySpec::dihedral(10)) == all_neither);  // D20
    CHECK(energy_classification(FamilySpec::dihedral(14)) ==
          EnergyClassification{EnergyClass::neither, EnergyClass::hyper, EnergyClass::hyper});
    // quotient parameter (4, 2): L-hyper but not Q-hyper
    CHECK(energy_classification(FamilySpec::dihedral(8)) ==
          EnergyClassification{EnergyClass::neither, EnergyClass::hyper, EnergyClass::neither});
    CHECK(energy_classification(FamilySpec::dicyclic(4)) ==
          EnergyClassification{EnergyClass::neither, EnergyClass::hyper, EnergyClass::neither});
    CHECK(energy_classification(FamilySpec::semidihedral(2)) ==
          EnergyClassification{EnergyClass::neither, EnergyClass::hyper, EnergyClass::neither});

    CHECK(energy_classification(FamilySpec::dicyclic(3)) == all_neither);   // T12
    CHECK(energy_classification(FamilySpec::dicyclic(5)) == all_neither);   // T20
    CHECK(energy_classification(FamilySpec::dicyclic(7)) ==
          EnergyClassification{EnergyClass::neither, EnergyClass::hyper, EnergyClass::hyper});
    CHECK(energy_classification(FamilySpec::semidihedral(3)) == all_neither);  // SD24
    CHECK(energy_classification(FamilySpec::semidihedral(5)) ==
          EnergyClassification{EnergyClass::neither, EnergyClass::hyper, EnergyClass::hyper});

    CHECK(energy_classification(FamilySpec::umn(2, 5)) == all_neither);
    CHECK(energy_classification(FamilySpec::umn(3, 5)) ==
          EnergyClassification{EnergyClass::neither, EnergyClass::hyper, EnergyClass::hyper});
    for (long long n = 2; n <= 6; ++n)
        for (long long m : {3, 4, 6}) CHECK(energy_classification(FamilySpec::umn(n, m)) == all_neither);

    // V8m: L- and Q-hyper except m = 2; never hyper
    CHECK(energy_classification(FamilySpec::v8m(2)) == all_neither);
    CHECK(energy_classification(FamilySpec::v8m(5)) ==
          EnergyClassification{EnergyClass::neither, EnergyClass::hyper, EnergyClass::hyper});
    CHECK(energy_classification(FamilySpec::v8m(4)) ==
          EnergyClassification{EnergyClass::neither, EnergyClass::hyper, EnergyClass::hyper});

    // Zp x Zp quotients are never hyperenergetic in any sense
    CHECK(energy_classification(FamilySpec::heisenberg(3)) == all_neither);
    CHECK(energy_classification(FamilySpec::heisenberg(5)) == all_neither);
    for (long long m = 2; m <= 25; ++m)
        CHECK(energy_classification(FamilySpec::u6m(m)) == all_neither);
}

TEST_CASE("quotient-level classification entry points") {
    CHECK(pp_quotient_energy_classification(2, 2) == all_border);
    CHECK(pp_quotient_energy_classification(3, 3) == all_neither);
    CHECK(d2m_quotient_energy_classification(3, 1) == all_border);
    CHECK(d2m_quotient_energy_classification(2, 2) == all_border);  // routes to p = 2
    CHECK(d2m_quotient_energy_classification(7, 1) == all_neither);
    CHECK(d2m_quotient_energy_classification(7, 2) ==
          EnergyClassification{EnergyClass::neither, EnergyClass::hyper, EnergyClass::hyper});
    CHECK(d2m_quotient_energy_classification(4, 2) ==
          EnergyClassification{EnergyClass::neither, EnergyClass::hyper, EnergyClass::neither});
    CHECK_THROWS_AS(pp_quotient_energy_classification(3, 4), std::invalid_argument);
}

TEST_CASE("energy orderings") {
    using EO = EnergyOrdering;
    CHECK(energy_ordering(FamilySpec::dihedral(3)) == EO::all_equal);
    CHECK(energy_ordering(FamilySpec::dihedral(4)) == EO::all_equal);
    CHECK(energy_ordering(FamilySpec::dihedral(6)) == EO::all_equal);
    CHECK(energy_ordering(FamilySpec::dihedral(5)) == EO::e_lt_le_eq_se);
    CHECK(energy_ordering(FamilySpec::dihedral(7)) == EO::e_lt_le_eq_se);
    CHECK(energy_ordering(FamilySpec::dihedral(10)) == EO::e_lt_le_eq_se);
    CHECK(energy_ordering(FamilySpec::dihedral(8)) == EO::e_lt_se_lt_le);
    CHECK(energy_ordering(FamilySpec::dicyclic(2)) == EO::all_equal);
    CHECK(energy_ordering(FamilySpec::dicyclic(3)) == EO::all_equal);
    CHECK(energy_ordering(FamilySpec::dicyclic(5)) == EO::e_lt_le_eq_se);
    CHECK(energy_ordering(FamilySpec::dicyclic(4)) == EO::e_lt_se_lt_le);
    CHECK(energy_ordering(FamilySpec::semidihedral(3)) == EO::all_equal);
    CHECK(energy_ordering(FamilySpec::semidihedral(5)) == EO::e_lt_le_eq_se);
    CHECK(energy_ordering(FamilySpec::semidihedral(2)) == EO::e_lt_se_lt_le);
    CHECK(energy_ordering(FamilySpec::v8m(2)) == EO::all_equal);
    CHECK(energy_ordering(FamilySpec::v8m(3)) == EO::e_lt_se_lt_le);
    CHECK_THROWS_AS(energy_ordering(FamilySpec::u6m(3)), std::invalid_argument);
    CHECK_THROWS_AS(energy_ordering(FamilySpec::heisenberg(3)), std::invalid_argument);
}

TEST_CASE("the equality list of the three-way comparison") {
    std::vector<std::string> equal;
    auto tally = [&](const FamilySpec& spec) {
        if (energy_ordering(spec) == EnergyOrdering::all_equal) equal.push_back(spec.name());
    };
    for (long long m = 3; m <= 40; ++m) tally(FamilySpec::dihedral(m));
    for (long long m = 2; m <= 30; ++m) tally(FamilySpec::dicyclic(m));
    for (long long m = 2; m <= 20; ++m) tally(FamilySpec::semidihedral(m));
    for (long long m = 2; m <= 15; ++m) tally(FamilySpec::v8m(m));
    CHECK(equal == std::vector<std::string>{"d2m(m=3)", "d2m(m=4)", "d2m(m=6)", "t4m(m=2)",
                                            "t4m(m=3)", "sd8m(m=3)", "v8m(m=2)"});
}
