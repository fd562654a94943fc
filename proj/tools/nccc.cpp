// Command-line front end: analyze one group instance, run the formula-vs-oracle
// verification sweep, or emit figure data as CSV.
//
// Exit codes: 0 success / full agreement, 1 disagreement, 2 usage error.

#include "nccc/analysis.hpp"
#include "nccc/closed_form.hpp"
#include "nccc/graph.hpp"
#include "nccc/group.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace nccc;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

struct InstanceArgs {
    std::string family;
    long long m = 0, n = 0, p = 0;
    std::string table_path;
};

FamilySpec spec_from_args(const InstanceArgs& args) {
    auto need = [&](long long v, const char* what) {
        if (v <= 0)
            throw CLI::ValidationError("--" + std::string(what) +
                                       " is required for --family " + args.family);
        return v;
    };
    if (args.family == "d2m") return FamilySpec::dihedral(need(args.m, "m"));
    if (args.family == "t4m") return FamilySpec::dicyclic(need(args.m, "m"));
    if (args.family == "sd8m") return FamilySpec::semidihedral(need(args.m, "m"));
    if (args.family == "umn") return FamilySpec::umn(need(args.n, "n"), need(args.m, "m"));
    if (args.family == "u6m") return FamilySpec::u6m(need(args.m, "m"));
    if (args.family == "v8m") return FamilySpec::v8m(need(args.m, "m"));
    if (args.family == "heis") return FamilySpec::heisenberg(need(args.p, "p"));
    if (args.family == "table") {
        if (args.table_path.empty())
            throw CLI::ValidationError("--table FILE is required for --family table");
        std::ifstream in(args.table_path);
        if (!in) throw std::runtime_error("cannot open " + args.table_path);
        nlohmann::json j;
        in >> j;
        return group_spec_from_json(j);
    }
    throw CLI::ValidationError("unknown family: " + args.family);
}

void print_spectrum(std::ostream& os, const char* name, const Spectrum& s) {
    os << "  " << name << ": {";
    for (size_t i = 0; i < s.pairs.size(); ++i) {
        if (i) os << ", ";
        os << "[" << format_sig(s.pairs[i].first, 6) << "]^" << s.pairs[i].second;
    }
    os << "}\n";
}

void print_exact_spectrum(std::ostream& os, const char* name, const ExactSpectrum& s) {
    os << "  " << name << ": {";
    for (size_t i = 0; i < s.pairs.size(); ++i) {
        if (i) os << ", ";
        os << "[" << s.pairs[i].first.str() << "]^" << s.pairs[i].second;
    }
    os << "}\n";
}

void print_record(std::ostream& os, const AnalysisRecord& rec) {
    os << rec.spec.name() << ": " << rec.n_vertices << " vertices, " << rec.n_edges << " edges";
    if (rec.detected_shape) os << ", shape " << rec.detected_shape->str();
    os << "\n";
    os << "oracle (Jacobi):\n";
    print_spectrum(os, "spec(A)", rec.oracle_a);
    print_spectrum(os, "spec(L)", rec.oracle_l);
    print_spectrum(os, "spec(Q)", rec.oracle_q);
    os << "  E = " << format_sig(rec.oracle_energies.energy) << ", LE = "
       << format_sig(rec.oracle_energies.laplacian_energy) << ", SE = "
       << format_sig(rec.oracle_energies.signless_energy)
       << "  (delta = " << format_sig(rec.oracle_energies.delta, 6) << ")\n";
    if (rec.closed) {
        os << "closed form [" << rec.closed->case_tag << "]:\n";
        print_exact_spectrum(os, "spec(A)", rec.closed->spec_a);
        print_exact_spectrum(os, "spec(L)", rec.closed->spec_l);
        print_exact_spectrum(os, "spec(Q)", rec.closed->spec_q);
        os << "  E = " << rec.closed->energy.str() << ", LE = "
           << rec.closed->laplacian_energy.str() << ", SE = "
           << rec.closed->signless_energy.str() << "\n";
    } else {
        os << "closed form: none (unrecognized central quotient)\n";
    }
    auto flags = [](const IntegralityFlags& f) {
        std::ostringstream t;
        t << (f.integral ? "integral" : "not integral") << ", "
          << (f.l_integral ? "L-integral" : "not L-integral") << ", "
          << (f.q_integral ? "Q-integral" : "not Q-integral");
        return t.str();
    };
    os << "integrality (exact): " << flags(rec.exact_integrality) << "\n";
    os << "energy class vs K_n: E " << to_string(rec.oracle_class.adjacency) << ", LE "
       << to_string(rec.oracle_class.laplacian) << ", SE "
       << to_string(rec.oracle_class.signless) << "\n";
    os << "ordering: " << to_string(rec.oracle_ordering) << "\n";
    for (const auto& w : rec.warnings) os << "warning: " << w << "\n";
    os << "agreement: " << (rec.all_ok() ? "ok" : "DISAGREEMENT") << " (max deviation "
       << format_sig(std::max({rec.dev_spec_a, rec.dev_spec_l, rec.dev_spec_q, rec.dev_e,
                               rec.dev_le, rec.dev_se}), 3)
       << ")\n";
}

int cmd_analyze(const InstanceArgs& args, bool json, double tol) {
    AnalysisOptions opts;
    opts.tol = tol;
    const AnalysisRecord rec = analyze_instance(spec_from_args(args), opts);
    if (json) std::cout << to_json(rec).dump(2) << "\n";
    else print_record(std::cout, rec);
    return rec.all_ok() ? kExitOk : kExitDisagreement;
}

int cmd_verify(const std::string& family_filter, long long max_param, double tol, bool perturb,
               const std::string& csv_path, bool lemma_squares) {
    if (lemma_squares) {
        const long long bound = max_param > 0 ? max_param : 1'000'000;
        std::vector<long long> s1, s2, s3;
        for (long long m = 1; m <= bound; ++m) {
            const auto [a, b, c] = perfect_square_predicates(m);
            if (a) s1.push_back(m);
            if (b) s2.push_back(m);
            if (c) s3.push_back(m);
        }
        auto print_set = [](const char* name, const std::vector<long long>& v) {
            std::cout << name << ": {";
            for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i];
            std::cout << "}\n";
        };
        std::cout << "perfect squares for m in [1, " << bound << "]\n";
        print_set("m^2 + 6m - 7  ", s1);
        print_set("m^2 + 12m - 28", s2);
        print_set("4m^2 + 12m - 7", s3);
        return kExitOk;
    }

    std::vector<FamilySpec> sweep;
    for (const auto& spec : default_sweep()) {
        if (!family_filter.empty() && family_filter != family_name(spec.family)) continue;
        if (max_param > 0) {
            const long long param = spec.family == Family::heisenberg ? spec.p : spec.m;
            if (param > max_param) continue;
        }
        sweep.push_back(spec);
    }
    if (sweep.empty()) {
        std::cerr << "verify: no instances selected\n";
        return kExitUsage;
    }
    AnalysisOptions opts;
    opts.tol = tol;
    opts.perturb = perturb;
    std::vector<AnalysisRecord> records(sweep.size());
    parallel_for(sweep.size(), worker_count(),
                 [&](size_t i) { records[i] = analyze_instance(sweep[i], opts); });

    size_t disagreements = 0;
    double max_dev = 0;
    for (const auto& rec : records) {
        if (!rec.all_ok()) {
            ++disagreements;
            std::cout << "DISAGREE " << rec.spec.name() << ":"
                      << (rec.spectra_ok ? "" : " spectra") << (rec.energies_ok ? "" : " energies")
                      << (rec.shape_ok ? "" : " shape") << (rec.duality_ok ? "" : " duality")
                      << (rec.integrality_ok ? "" : " integrality")
                      << (rec.class_ok ? "" : " classification")
                      << (rec.ordering_ok ? "" : " ordering") << "\n";
        }
        for (const auto& w : rec.warnings)
            std::cout << "warning (" << rec.spec.name() << "): " << w << "\n";
        max_dev = std::max({max_dev, rec.dev_spec_a, rec.dev_spec_l, rec.dev_spec_q, rec.dev_e,
                            rec.dev_le, rec.dev_se});
    }
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) {
            std::cerr << "verify: cannot write " << csv_path << "\n";
            return kExitUsage;
        }
        csv << deviations_csv_header() << "\n";
        for (const auto& rec : records) csv << deviations_csv_row(rec) << "\n";
    }
    std::cout << records.size() << " instances, " << disagreements << " disagreement(s), max deviation "
              << format_sig(max_dev, 3) << "\n";
    return disagreements == 0 ? kExitOk : kExitDisagreement;
}

int cmd_figure_data(int figure, const std::string& csv_path) {
    const std::string csv = figure_csv(figure);
    if (csv_path.empty()) {
        std::cout << csv;
        return kExitOk;
    }
    std::ofstream out(csv_path);
    if (!out) {
        std::cerr << "figure-data: cannot write " << csv_path << "\n";
        return kExitUsage;
    }
    out << csv;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NCCC-graph spectra: constructions, closed forms and cross-verification"};
    app.require_subcommand(1);

    InstanceArgs args;
    bool json = false;
    double tol = 1e-8;
    auto add_instance_flags = [&](CLI::App* cmd, bool family_required) {
        auto* fam = cmd->add_option("--family", args.family,
                                    "one of d2m, t4m, sd8m, umn, u6m, v8m, heis, table");
        if (family_required) fam->required();
        cmd->add_option("--m", args.m, "family parameter m");
        cmd->add_option("--n", args.n, "parameter n (umn)");
        cmd->add_option("--p", args.p, "prime p (heis)");
        cmd->add_option("--table", args.table_path, "JSON multiplication table (family table)");
        cmd->add_option("--tol", tol, "agreement tolerance")->capture_default_str();
    };

    auto* analyze = app.add_subcommand("analyze", "analyze one instance via both pipelines");
    add_instance_flags(analyze, true);
    analyze->add_flag("--json", json, "emit the record as JSON");

    std::string csv_path;
    long long max_param = 0;
    bool perturb = false, lemma_squares = false;
    std::string family_filter;
    auto* verify = app.add_subcommand("verify", "run the formula-vs-oracle verification sweep");
    verify->add_option("--family", family_filter, "restrict the sweep to one family");
    verify->add_option("--max", max_param, "cap the family parameter (or the square-scan bound)");
    verify->add_option("--tol", tol, "agreement tolerance")->capture_default_str();
    verify->add_option("--csv", csv_path, "write per-instance deviations CSV");
    verify->add_flag("--perturb", perturb, "self-test: flip one closed-form sign, expect exit 1");
    verify->add_flag("--lemma-squares", lemma_squares, "scan the three square predicates and print the solution sets");

    int figure = 0;
    auto* figure_data = app.add_subcommand("figure-data", "emit m,E,LE,SE CSV for one figure");
    figure_data->add_option("--figure", figure, "figure id, 1..10")->required();
    figure_data->add_option("--csv", csv_path, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return cmd_analyze(args, json, tol);
        if (verify->parsed())
            return cmd_verify(family_filter, max_param, tol, perturb, csv_path, lemma_squares);
        if (figure_data->parsed()) return cmd_figure_data(figure, csv_path);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
