#include "nccc/analysis.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <vector>

using namespace nccc;

TEST_CASE("analyze_instance: D10 record") {
    const AnalysisRecord rec = analyze_instance(FamilySpec::dihedral(5));
    CHECK(rec.n_vertices == 3);
    CHECK(rec.n_edges == 2);
    CHECK(rec.oracle_energies.energy == Catch::Approx(2 * std::sqrt(2.0)).margin(1e-10));
    CHECK(rec.oracle_energies.laplacian_energy == Catch::Approx(10.0 / 3).margin(1e-10));
    REQUIRE(rec.closed);
    CHECK(rec.closed->case_tag == "D2m: m odd");
    CHECK(rec.all_ok());
    CHECK(rec.oracle_class == EnergyClassification{EnergyClass::neither, EnergyClass::neither,
                                                   EnergyClass::neither});
    CHECK(rec.oracle_ordering == EnergyOrdering::e_lt_le_eq_se);
    REQUIRE(rec.detected_shape);
    CHECK(*rec.detected_shape == MultipartiteShape::of({{1, 1}, {1, 2}}));
    CHECK(rec.warnings.empty());
}

TEST_CASE("analyze_instance: T8 is border in all three senses") {
    const AnalysisRecord rec = analyze_instance(FamilySpec::dicyclic(2));
    CHECK(rec.all_ok());
    CHECK(rec.oracle_class == EnergyClassification{EnergyClass::border, EnergyClass::border,
                                                   EnergyClass::border});
    CHECK(rec.oracle_ordering == EnergyOrdering::all_equal);
    CHECK(rec.exact_integrality == IntegralityFlags{true, true, true});
}

TEST_CASE("analyze_instance: perturbation is detected") {
    AnalysisOptions opts;
    opts.perturb = true;
    const AnalysisRecord rec = analyze_instance(FamilySpec::dihedral(5), opts);
    CHECK_FALSE(rec.energies_ok);
    CHECK_FALSE(rec.all_ok());
    const AnalysisRecord rational_e = analyze_instance(FamilySpec::u6m(3), opts);
    CHECK_FALSE(rational_e.energies_ok);  // sign flip hits rational energies too
}

TEST_CASE("analyze_instance: explicit table routes through quotient recognition") {
    const FiniteGroup q8 = build_group(FamilySpec::dicyclic(2));
    ExplicitTableData data;
    data.table.resize(q8.order());
    for (int i = 0; i < q8.order(); ++i)
        for (int j = 0; j < q8.order(); ++j) data.table[i].push_back(q8.op(i, j));
    data.labels = q8.labels();
    const AnalysisRecord rec = analyze_instance(FamilySpec::from_table(std::move(data)));
    REQUIRE(rec.closed);
    CHECK(rec.closed->energy == Surd(4));
    CHECK(rec.all_ok());
    CHECK_FALSE(rec.predicted_ordering.has_value());
}

TEST_CASE("figure definitions cover ids 1..10 with the plotted sample points") {
    const auto& defs = figure_definitions();
    REQUIRE(defs.size() == 10);
    CHECK(defs[0].sample_ms.front() == 6);
    CHECK(defs[0].sample_ms.back() == 46);
    CHECK(defs[1].sample_ms.front() == 4);
    CHECK(defs[1].sample_ms.back() == 48);
    CHECK(defs[3].sample_ms.front() == 2);
    CHECK(defs[9].sample_ms == std::vector<long long>{3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25,
                                                      27, 29, 31});
    CHECK_THROWS_AS(figure_rows(0), std::invalid_argument);
    CHECK_THROWS_AS(figure_rows(11), std::invalid_argument);
}

TEST_CASE("figure anchor rows") {
    const auto fig3 = figure_rows(3);
    CHECK(fig3.front().m == 3);
    CHECK(fig3.front().e == Catch::Approx(2.0).margin(1e-12));
    CHECK(fig3.front().le == Catch::Approx(2.0).margin(1e-12));
    CHECK(fig3.front().se == Catch::Approx(2.0).margin(1e-12));

    const auto fig5 = figure_rows(5);
    REQUIRE(fig5.size() >= 2);
    CHECK(fig5[1].m == 5);
    CHECK(fig5[1].e == Catch::Approx(4 * std::sqrt(2.0)).margin(1e-12));
    CHECK(fig5[1].le == Catch::Approx(28.0 / 3).margin(1e-12));
    CHECK(fig5[1].se == Catch::Approx(28.0 / 3).margin(1e-12));

    const auto fig9 = figure_rows(9);
    CHECK(fig9.front().m == 2);
    CHECK(fig9.front().e == Catch::Approx(8.0).margin(1e-12));
    CHECK(fig9.front().le == Catch::Approx(8.0).margin(1e-12));
    CHECK(fig9.front().se == Catch::Approx(8.0).margin(1e-12));

    const std::string csv = figure_csv(3);
    CHECK(csv.rfind("m,E,LE,SE\n3,2,2,2\n", 0) == 0);
}

TEST_CASE("record serialization") {
    const AnalysisRecord rec = analyze_instance(FamilySpec::dicyclic(2));
    const nlohmann::json j = to_json(rec);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("family") == "t4m");
    CHECK(j.at("parameters").at("m") == 2);
    CHECK(j.at("n_vertices") == 3);
    CHECK(j.at("agreement").at("all") == true);
    CHECK(j.at("closed_form").at("energy") == Catch::Approx(4.0));
    CHECK(j.at("energy_class").at("energy") == "border");
    CHECK(j.at("ordering") == "E=LE=SE");

    const std::string row = deviations_csv_row(rec);
    CHECK(row.rfind("t4m,t4m(m=2),3,3,", 0) == 0);
    CHECK(row.back() == '1');  // all_ok
}

TEST_CASE("12 significant digit rendering") {
    CHECK(format_sig(10.0 / 3) == "3.33333333333");
    CHECK(format_sig(2.0) == "2");
    CHECK(format_sig(1 + std::sqrt(41.0)) == "7.40312423743");
}

TEST_CASE("parallel_for is deterministic and worker_count honors the environment") {
    std::vector<int> out(100, 0);
    parallel_for(out.size(), 4, [&](size_t i) { out[i] = static_cast<int>(i * i); });
    for (size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));

    setenv("NCCC_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    setenv("NCCC_THREADS", "bogus", 1);
    CHECK(worker_count() >= 1);
    unsetenv("NCCC_THREADS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("default sweep composition") {
    const auto sweep = default_sweep();
    CHECK(sweep.size() == 38 + 29 + 19 + 24 + 5 * 13 + 14 + 2);
    int dihedrals = 0;
    for (const auto& s : sweep) dihedrals += s.family == Family::dihedral;
    CHECK(dihedrals == 38);
}

TEST_CASE("csv fields with commas are quoted") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("K_{2.2, 1.6}") == "\"K_{2.2, 1.6}\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    const AnalysisRecord rec = analyze_instance(FamilySpec::umn(2, 8));
    const std::string row = deviations_csv_row(rec);
    CHECK(row.find("\"umn(n=2,m=8)\"") != std::string::npos);
    CHECK(row.find("\"K_{2.2, 1.6}\"") != std::string::npos);
}
