#pragma once

#include "nccc/charpoly.hpp"
#include "nccc/closed_form.hpp"
#include "nccc/graph.hpp"
#include "nccc/group.hpp"
#include "nccc/spectra.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace nccc {

inline std::string format_sig(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

struct AnalysisOptions {
    double tol = 1e-8;       // agreement tolerance between the two pipelines
    double cluster_tol = 1e-6;
    bool perturb = false;    // self-test fault injection: flips a sign in the E formula
};

struct SpectrumComparison {
    bool mults_ok = false;
    double max_dev = std::numeric_limits<double>::infinity();
};

inline SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b) {
    SpectrumComparison c;
    if (a.pairs.size() != b.pairs.size()) return c;
    c.mults_ok = true;
    c.max_dev = 0;
    for (size_t i = 0; i < a.pairs.size(); ++i) {
        if (a.pairs[i].second != b.pairs[i].second) {
            c.mults_ok = false;
            c.max_dev = std::numeric_limits<double>::infinity();
            return c;
        }
        c.max_dev = std::max(c.max_dev, std::abs(a.pairs[i].first - b.pairs[i].first));
    }
    return c;
}

inline EnergyClass classify_energy(double energy, long long n, double tol) {
    const double complete = 2.0 * static_cast<double>(n - 1);
    if (std::abs(energy - complete) <= tol) return EnergyClass::border;
    return energy > complete ? EnergyClass::hyper : EnergyClass::neither;
}

inline EnergyOrdering classify_ordering(double e, double le, double se, double tol) {
    const bool le_eq_se = std::abs(le - se) <= tol;
    if (std::abs(e - le) <= tol && le_eq_se) return EnergyOrdering::all_equal;
    if (e < le - tol && le_eq_se) return EnergyOrdering::e_lt_le_eq_se;
    if (e < se - tol && se < le - tol) return EnergyOrdering::e_lt_se_lt_le;
    return EnergyOrdering::other;
}

/// One instance pushed through both pipelines with every cross-check recorded.
struct AnalysisRecord {
    FamilySpec spec;
    int n_vertices = 0;
    long long n_edges = 0;
    std::optional<MultipartiteShape> detected_shape;
    Spectrum oracle_a, oracle_l, oracle_q;
    EnergyReport oracle_energies;
    std::vector<std::string> warnings;

    std::optional<ClosedFormResult> closed;
    std::optional<IntegralityFlags> predicted_integrality;  // family criteria
    std::optional<IntegralityFlags> symbolic_integrality;   // closed-form spectra
    IntegralityFlags exact_integrality;                     // char-poly root splitting
    IntegralityFlags numeric_integrality;                   // clustered eigenvalues near integers
    std::optional<EnergyClassification> predicted_class;
    EnergyClassification oracle_class;
    std::optional<EnergyOrdering> predicted_ordering;
    EnergyOrdering oracle_ordering = EnergyOrdering::other;

    double dev_spec_a = 0, dev_spec_l = 0, dev_spec_q = 0;
    double dev_e = 0, dev_le = 0, dev_se = 0;
    bool spectra_ok = false, energies_ok = false, shape_ok = false, duality_ok = false;
    bool integrality_ok = false, class_ok = false, ordering_ok = false;

    bool all_ok() const {
        return spectra_ok && energies_ok && shape_ok && duality_ok && integrality_ok && class_ok &&
               ordering_ok;
    }
};

namespace detail {

inline std::optional<ClosedFormResult> closed_form_for(const FamilySpec& spec,
                                                       const FiniteGroup& g) {
    if (spec.family != Family::explicit_table) return family_closed_form(spec);
    // Tables: recognize the central quotient and reuse the quotient results.
    const QuotientKind kind = central_quotient_kind(g);
    const long long z = static_cast<long long>(center(g).size());
    if (kind.tag == QuotientKind::Tag::zp_x_zp && z % kind.p == 0)
        return spectra_pp_quotient(kind.p, z);
    if (kind.tag == QuotientKind::Tag::d2m && (kind.m % 2 == 1 || z % 2 == 0))
        return spectra_d2m_quotient(kind.m, z);
    return std::nullopt;
}

inline std::optional<EnergyClassification> predicted_class_for(const FamilySpec& spec,
                                                               const FiniteGroup& g) {
    if (spec.family != Family::explicit_table) return energy_classification(spec);
    const QuotientKind kind = central_quotient_kind(g);
    const long long z = static_cast<long long>(center(g).size());
    if (kind.tag == QuotientKind::Tag::zp_x_zp && z % kind.p == 0)
        return pp_quotient_energy_classification(kind.p, z);
    if (kind.tag == QuotientKind::Tag::d2m && (kind.m % 2 == 1 || z % 2 == 0))
        return d2m_quotient_energy_classification(kind.m, z);
    return std::nullopt;
}

}  // namespace detail

inline AnalysisRecord analyze_instance(const FamilySpec& spec, const AnalysisOptions& opts = {}) {
    AnalysisRecord rec;
    rec.spec = spec;
    const FiniteGroup g = build_group(spec);
    const ConjugacyPartition part = conjugacy_classes(g);
    const Graph nccc = build_nccc(g, part);
    const Graph ccc = build_ccc(g, part);
    rec.duality_ok = complement(ccc) == nccc;
    rec.n_vertices = nccc.n_vertices();
    rec.n_edges = nccc.n_edges();
    rec.detected_shape = detect_multipartite(nccc);

    const IntMatrix a = adjacency_matrix(nccc);
    const IntMatrix l = laplacian_matrix(nccc);
    const IntMatrix q = signless_laplacian_matrix(nccc);
    rec.oracle_a = group_eigenvalues(eigen_symmetric(a), opts.cluster_tol, &rec.warnings);
    rec.oracle_l = group_eigenvalues(eigen_symmetric(l), opts.cluster_tol, &rec.warnings);
    rec.oracle_q = group_eigenvalues(eigen_symmetric(q), opts.cluster_tol, &rec.warnings);
    rec.oracle_energies = energies(rec.oracle_a, rec.oracle_l, rec.oracle_q, rec.n_vertices,
                                   rec.n_edges);

    rec.closed = detail::closed_form_for(spec, g);
    if (rec.closed && opts.perturb) {
        Surd& e = rec.closed->energy;
        if (e.b != 0) e.b = -e.b;
        else e.a = -e.a;
    }

    if (rec.closed) {
        const auto ca = compare_spectra(rec.oracle_a, rec.closed->spec_a.to_spectrum());
        const auto cl = compare_spectra(rec.oracle_l, rec.closed->spec_l.to_spectrum());
        const auto cq = compare_spectra(rec.oracle_q, rec.closed->spec_q.to_spectrum());
        rec.dev_spec_a = ca.max_dev;
        rec.dev_spec_l = cl.max_dev;
        rec.dev_spec_q = cq.max_dev;
        rec.spectra_ok = ca.mults_ok && cl.mults_ok && cq.mults_ok &&
                         std::max({ca.max_dev, cl.max_dev, cq.max_dev}) <= opts.tol;
        rec.dev_e = std::abs(rec.oracle_energies.energy - rec.closed->energy.value());
        rec.dev_le =
            std::abs(rec.oracle_energies.laplacian_energy - rec.closed->laplacian_energy.value());
        rec.dev_se =
            std::abs(rec.oracle_energies.signless_energy - rec.closed->signless_energy.value());
        rec.energies_ok = std::max({rec.dev_e, rec.dev_le, rec.dev_se}) <= opts.tol;
        rec.shape_ok = rec.detected_shape && *rec.detected_shape == rec.closed->shape &&
                       rec.closed->n_vertices() == rec.n_vertices &&
                       rec.closed->n_edges() == rec.n_edges;
        IntegralityFlags sym;
        sym.integral = rec.closed->spec_a.all_integral();
        sym.l_integral = rec.closed->spec_l.all_integral();
        sym.q_integral = rec.closed->spec_q.all_integral();
        rec.symbolic_integrality = sym;
    } else {
        // No closed form to compare against: oracle-only record.
        rec.spectra_ok = rec.energies_ok = true;
        rec.shape_ok = true;
    }

    rec.exact_integrality.integral = integer_root_split(char_poly_exact(a)).fully_split;
    rec.exact_integrality.l_integral = integer_root_split(char_poly_exact(l)).fully_split;
    rec.exact_integrality.q_integral = integer_root_split(char_poly_exact(q)).fully_split;
    auto near_integers = [&](const Spectrum& s) {
        for (auto& [v, m] : s.pairs)
            if (std::abs(v - std::round(v)) > opts.cluster_tol) return false;
        return true;
    };
    rec.numeric_integrality.integral = near_integers(rec.oracle_a);
    rec.numeric_integrality.l_integral = near_integers(rec.oracle_l);
    rec.numeric_integrality.q_integral = near_integers(rec.oracle_q);
    if (spec.family != Family::explicit_table) rec.predicted_integrality = integrality_predicates(spec);
    rec.integrality_ok = rec.numeric_integrality == rec.exact_integrality &&
                         (!rec.predicted_integrality || *rec.predicted_integrality == rec.exact_integrality) &&
                         (!rec.symbolic_integrality || *rec.symbolic_integrality == rec.exact_integrality);

    rec.oracle_class.adjacency = classify_energy(rec.oracle_energies.energy, rec.n_vertices, opts.tol);
    rec.oracle_class.laplacian =
        classify_energy(rec.oracle_energies.laplacian_energy, rec.n_vertices, opts.tol);
    rec.oracle_class.signless =
        classify_energy(rec.oracle_energies.signless_energy, rec.n_vertices, opts.tol);
    rec.predicted_class = detail::predicted_class_for(spec, g);
    rec.class_ok = !rec.predicted_class || *rec.predicted_class == rec.oracle_class;

    rec.oracle_ordering =
        classify_ordering(rec.oracle_energies.energy, rec.oracle_energies.laplacian_energy,
                          rec.oracle_energies.signless_energy, opts.tol);
    switch (spec.family) {
        case Family::dihedral:
        case Family::dicyclic:
        case Family::semidihedral:
        case Family::v8m:
            rec.predicted_ordering = energy_ordering(spec);
            break;
        default:
            break;
    }
    rec.ordering_ok = !rec.predicted_ordering || *rec.predicted_ordering == rec.oracle_ordering;
    return rec;
}

/// The verification sweep: every family instance the classification results cover,
/// at desk scale. Runs in well under a minute single-threaded.
inline std::vector<FamilySpec> default_sweep() {
    std::vector<FamilySpec> sweep;
    for (long long m = 3; m <= 40; ++m) sweep.push_back(FamilySpec::dihedral(m));
    for (long long m = 2; m <= 30; ++m) sweep.push_back(FamilySpec::dicyclic(m));
    for (long long m = 2; m <= 20; ++m) sweep.push_back(FamilySpec::semidihedral(m));
    for (long long m = 2; m <= 25; ++m) sweep.push_back(FamilySpec::u6m(m));
    for (long long n = 2; n <= 6; ++n)
        for (long long m = 3; m <= 15; ++m) sweep.push_back(FamilySpec::umn(n, m));
    for (long long m = 2; m <= 15; ++m) sweep.push_back(FamilySpec::v8m(m));
    sweep.push_back(FamilySpec::heisenberg(3));
    sweep.push_back(FamilySpec::heisenberg(5));
    return sweep;
}

inline unsigned worker_count() {
    if (const char* env = std::getenv("NCCC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

/// Runs fn over 0..count-1 on a small worker pool; results land at their own index,
/// so output order is deterministic regardless of scheduling.
template <typename Fn>
void parallel_for(size_t count, unsigned workers, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto drain = [&] {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    const unsigned spawn = static_cast<unsigned>(std::min<size_t>(workers, count));
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline nlohmann::json spectrum_json(const Spectrum& s) {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto& [v, m] : s.pairs) pairs.push_back({{"value", v}, {"multiplicity", m}});
    return {{"exact", s.exact}, {"pairs", std::move(pairs)}};
}

inline nlohmann::json exact_spectrum_json(const ExactSpectrum& s) {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto& [v, m] : s.pairs)
        pairs.push_back({{"value", v.value()}, {"form", v.str()}, {"multiplicity", m}});
    return {{"exact", true}, {"pairs", std::move(pairs)}};
}

inline nlohmann::json shape_json(const MultipartiteShape& s) {
    nlohmann::json parts = nlohmann::json::array();
    for (auto& [count, size] : s.parts) parts.push_back({{"count", count}, {"size", size}});
    return parts;
}

inline nlohmann::json to_json(const AnalysisRecord& rec) {
    nlohmann::json j;
    j["schema"] = 1;
    j["family"] = family_name(rec.spec.family);
    j["instance"] = rec.spec.name();
    nlohmann::json params = nlohmann::json::object();
    switch (rec.spec.family) {
        case Family::umn: params["n"] = rec.spec.n; params["m"] = rec.spec.m; break;
        case Family::heisenberg: params["p"] = rec.spec.p; break;
        case Family::explicit_table: params["order"] = rec.spec.expected_order(); break;
        default: params["m"] = rec.spec.m; break;
    }
    j["parameters"] = std::move(params);
    j["n_vertices"] = rec.n_vertices;
    j["n_edges"] = rec.n_edges;
    if (rec.detected_shape) {
        j["shape"] = shape_json(*rec.detected_shape);
        j["shape_str"] = rec.detected_shape->str();
    }
    j["oracle"] = {{"spectrum", spectrum_json(rec.oracle_a)},
                   {"laplacian_spectrum", spectrum_json(rec.oracle_l)},
                   {"signless_spectrum", spectrum_json(rec.oracle_q)},
                   {"energy", rec.oracle_energies.energy},
                   {"laplacian_energy", rec.oracle_energies.laplacian_energy},
                   {"signless_energy", rec.oracle_energies.signless_energy},
                   {"delta", rec.oracle_energies.delta}};
    if (rec.closed) {
        j["closed_form"] = {{"case", rec.closed->case_tag},
                            {"shape", shape_json(rec.closed->shape)},
                            {"spectrum", exact_spectrum_json(rec.closed->spec_a)},
                            {"laplacian_spectrum", exact_spectrum_json(rec.closed->spec_l)},
                            {"signless_spectrum", exact_spectrum_json(rec.closed->spec_q)},
                            {"energy", rec.closed->energy.value()},
                            {"energy_form", rec.closed->energy.str()},
                            {"laplacian_energy", rec.closed->laplacian_energy.value()},
                            {"laplacian_energy_form", rec.closed->laplacian_energy.str()},
                            {"signless_energy", rec.closed->signless_energy.value()},
                            {"signless_energy_form", rec.closed->signless_energy.str()}};
    }
    auto flags_json = [](const IntegralityFlags& f) {
        return nlohmann::json{
            {"integral", f.integral}, {"l_integral", f.l_integral}, {"q_integral", f.q_integral}};
    };
    j["integrality"] = flags_json(rec.exact_integrality);
    if (rec.predicted_integrality) j["integrality_predicted"] = flags_json(*rec.predicted_integrality);
    auto class_json = [](const EnergyClassification& c) {
        return nlohmann::json{{"energy", to_string(c.adjacency)},
                              {"laplacian_energy", to_string(c.laplacian)},
                              {"signless_energy", to_string(c.signless)}};
    };
    j["energy_class"] = class_json(rec.oracle_class);
    if (rec.predicted_class) j["energy_class_predicted"] = class_json(*rec.predicted_class);
    j["ordering"] = to_string(rec.oracle_ordering);
    if (rec.predicted_ordering) j["ordering_predicted"] = to_string(*rec.predicted_ordering);
    j["agreement"] = {{"spectra", rec.spectra_ok},
                      {"energies", rec.energies_ok},
                      {"shape", rec.shape_ok},
                      {"duality", rec.duality_ok},
                      {"integrality", rec.integrality_ok},
                      {"classification", rec.class_ok},
                      {"ordering", rec.ordering_ok},
                      {"all", rec.all_ok()},
                      {"max_deviation",
                       std::max({rec.dev_spec_a, rec.dev_spec_l, rec.dev_spec_q, rec.dev_e,
                                 rec.dev_le, rec.dev_se})}};
    if (!rec.warnings.empty()) j["warnings"] = rec.warnings;
    return j;
}

inline std::string deviations_csv_header() {
    return "family,params,n_vertices,n_edges,shape,case,dev_spec_a,dev_spec_l,dev_spec_q,"
           "dev_e,dev_le,dev_se,spectra_ok,energies_ok,shape_ok,duality_ok,integrality_ok,"
           "class_ok,ordering_ok,all_ok";
}

inline std::string deviations_csv_row(const AnalysisRecord& rec) {
    std::ostringstream os;
    auto flag = [](bool b) { return b ? "1" : "0"; };
    os << family_name(rec.spec.family) << "," << csv_field(rec.spec.name()) << ","
       << rec.n_vertices << "," << rec.n_edges << ","
       << csv_field(rec.detected_shape ? rec.detected_shape->str() : "-") << ","
       << csv_field(rec.closed ? rec.closed->case_tag : "-") << "," << format_sig(rec.dev_spec_a) << ","
       << format_sig(rec.dev_spec_l) << "," << format_sig(rec.dev_spec_q) << ","
       << format_sig(rec.dev_e) << "," << format_sig(rec.dev_le) << "," << format_sig(rec.dev_se)
       << "," << flag(rec.spectra_ok) << "," << flag(rec.energies_ok) << "," << flag(rec.shape_ok)
       << "," << flag(rec.duality_ok) << "," << flag(rec.integrality_ok) << ","
       << flag(rec.class_ok) << "," << flag(rec.ordering_ok) << "," << flag(rec.all_ok());
    return os.str();
}

// ---------------------------------------------------------------------------
// Figure data (energy-comparison plots, one CSV per figure)
// ---------------------------------------------------------------------------

struct FigureDef {
    int id;
    Family family;
    std::string description;
    std::vector<long long> sample_ms;
};

inline const std::vector<FigureDef>& figure_definitions() {
    auto arithmetic = [](long long from, long long to, long long step) {
        std::vector<long long> v;
        for (long long m = from; m <= to; m += step) v.push_back(m);
        return v;
    };
    static const std::vector<FigureDef> defs = {
        {1, Family::dihedral, "D2m, m even and m/2 odd", arithmetic(6, 46, 4)},
        {2, Family::dihedral, "D2m, m and m/2 even", arithmetic(4, 48, 4)},
        {3, Family::dihedral, "D2m, m odd", arithmetic(3, 29, 2)},
        {4, Family::dicyclic, "T4m, m even", arithmetic(2, 30, 2)},
        {5, Family::dicyclic, "T4m, m odd", arithmetic(3, 31, 2)},
        {6, Family::semidihedral, "SD8m, m even", arithmetic(2, 30, 2)},
        {7, Family::semidihedral, "SD8m, m odd", arithmetic(3, 31, 2)},
        {8, Family::u6m, "U6m", arithmetic(2, 25, 1)},
        {9, Family::v8m, "V8m, m even", arithmetic(2, 30, 2)},
        {10, Family::v8m, "V8m, m odd", arithmetic(3, 31, 2)},
    };
    return defs;
}

struct FigureRow {
    long long m = 0;
    double e = 0, le = 0, se = 0;
};

inline std::vector<FigureRow> figure_rows(int id) {
    const auto& defs = figure_definitions();
    if (id < 1 || id > static_cast<int>(defs.size()))
        throw std::invalid_argument("figure_rows: figure id must be in 1..10");
    const FigureDef& def = defs[static_cast<size_t>(id) - 1];
    std::vector<FigureRow> rows;
    for (long long m : def.sample_ms) {
        FamilySpec spec;
        switch (def.family) {
            case Family::dihedral: spec = FamilySpec::dihedral(m); break;
            case Family::dicyclic: spec = FamilySpec::dicyclic(m); break;
            case Family::semidihedral: spec = FamilySpec::semidihedral(m); break;
            case Family::u6m: spec = FamilySpec::u6m(m); break;
            case Family::v8m: spec = FamilySpec::v8m(m); break;
            default: throw std::logic_error("figure_rows: unexpected family");
        }
        const ClosedFormResult r = family_closed_form(spec);
        rows.push_back({m, r.energy.value(), r.laplacian_energy.value(),
                        r.signless_energy.value()});
    }
    return rows;
}

inline std::string figure_csv(int id) {
    std::ostringstream os;
    os << "m,E,LE,SE\n";
    for (const FigureRow& row : figure_rows(id))
        os << row.m << "," << format_sig(row.e) << "," << format_sig(row.le) << ","
           << format_sig(row.se) << "\n";
    return os.str();
}

}  // namespace nccc
