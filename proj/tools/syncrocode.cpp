// Command-line surface for the synchronizable-code toolkit: polynomial
// utilities, code-family constructors, scheme derivation with tolerance
// comparison tables, and the frame-synchronization simulator.
//
// Data goes to stdout (or --out), diagnostics to stderr; the exit code is 0
// iff every operation succeeded. --json selects JSON lines; --csv is
// available for `table` only.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "syncro/serde.hpp"

namespace {

using syncro::CyclicCode;
using syncro::Poly2;
using syncro::SyncScheme;

// code spec grammar: rm:R:M | bch:M:D[:B] | cyclic:N:GEN
struct CodeSpec {
    CyclicCode code;
    syncro::CodeDescriptor descriptor;
    std::optional<int> designed_distance;
};

CodeSpec parse_code_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw CLI::ValidationError("empty code spec");

    auto to_int = [&](const std::string& s) {
        try {
            return std::stoi(s);
        } catch (const std::exception&) {
            throw CLI::ValidationError("code spec: bad integer '" + s + "'");
        }
    };

    if (parts[0] == "rm" && parts.size() == 3) {
        int r = to_int(parts[1]), m = to_int(parts[2]);
        CyclicCode code = syncro::punctured_rm(r, m);
        return {code, syncro::describe_rm(r, m, code),
                syncro::rm_designed_distance(r, m)};
    }
    if (parts[0] == "bch" && (parts.size() == 3 || parts.size() == 4)) {
        int m = to_int(parts[1]), d = to_int(parts[2]);
        int b = parts.size() == 4 ? to_int(parts[3]) : 1;
        CyclicCode code = syncro::bch(m, d, b);
        return {code, syncro::describe_bch(m, d, b, code),
                b == 1 ? std::optional<int>(d) : std::nullopt};
    }
    if (parts[0] == "cyclic" && parts.size() == 3) {
        CyclicCode code(to_int(parts[1]), Poly2::parse(parts[2]));
        return {code, syncro::describe_cyclic(code), std::nullopt};
    }
    throw CLI::ValidationError(
        "code spec must be rm:R:M, bch:M:D[:B] or cyclic:N:GEN, got '" +
        text + "'");
}

struct Output {
    std::string path;
    std::ofstream file;

    std::ostream& stream() {
        if (!path.empty() && !file.is_open()) file.open(path);
        return path.empty() ? std::cout : file;
    }
};

std::string poly_human(const syncro::Factorization& f) {
    std::string out;
    for (const auto& [p, mult] : f.factors) {
        if (!out.empty()) out += ' ';
        out += p.to_string();
        if (mult > 1) out += '^' + std::to_string(mult);
    }
    return out;
}

void print_scheme_human(std::ostream& os, const SyncScheme& s,
                        bool compare_legacy) {
    os << "[[n=" << s.params.n << ", k1=" << s.c.dim()
       << ", k2=" << s.d.dim() << ", logical=" << s.params.logical << "]]\n";
    os << "f(x) = " << s.f.to_string() << "  (degree "
       << s.f.degree() << ", ord " << s.tolerance << ")\n";
    os << "factors:";
    for (const auto& [p, mult] : s.f_factors.factors) {
        os << ' ' << p.to_string();
        if (mult > 1) os << '^' << mult;
    }
    os << "\nmax a_l+a_r: " << s.params.max_shift_sum;
    if (compare_legacy)
        os << "  (legacy bound: " << s.params.legacy_max_shift_sum << ")";
    os << "\nphase_floor: " << s.params.phase_floor
       << "  bit_floor: " << s.params.bit_floor << "  ("
       << (s.params.distance_mode == syncro::DistanceMode::exact ? "exact"
                                                                 : "designed")
       << " distances)\n";
}

struct TableRow {
    int m, n, d1, d2;
    long long legacy_bound;
    std::uint64_t new_bound;
    bool theorem7;
};

std::vector<TableRow> tolerance_table(int m_min, int m_max) {
    std::vector<TableRow> rows;
    for (int m = std::max(5, m_min); m <= m_max; ++m) {
        int n = (1 << m) - 1;
        int bound = (1 << ((m + 1) / 2)) - 1;
        for (int d2 = 3; d2 <= bound; d2 += 2) {
            for (int d1 = d2 + 2; d1 <= bound; d1 += 2) {
                syncro::SchemeOptions opt;
                opt.designed_d1 = d1;
                opt.designed_d2 = d2;
                SyncScheme s = syncro::build_scheme(syncro::bch(m, d1),
                                                    syncro::bch(m, d2), opt);
                rows.push_back(TableRow{m, n, d1, d2,
                                        (long long)(m) * (d1 - d2) / 2,
                                        s.tolerance, d1 - d2 >= 4});
            }
        }
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum synchronizable codes from nested cyclic codes"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags usable after any subcommand

    bool as_json = false;
    std::uint64_t budget = syncro::kDefaultBudget;
    Output out;
    app.add_flag("--json", as_json, "emit JSON lines instead of text");
    app.add_option("--budget", budget,
                   "enumeration cap for distance scans and decoder tables")
        ->envname("SYNCROCODE_BUDGET");
    app.add_option("--out", out.path, "write data to a file instead of stdout");

    // ---- poly ----
    auto* poly = app.add_subcommand("poly", "GF(2) polynomial utilities");
    poly->require_subcommand(1);
    std::string poly_arg;
    std::uint64_t factor_seed = syncro::kFactorSeed;
    auto* poly_factor = poly->add_subcommand("factor", "factor a polynomial");
    poly_factor->add_option("poly", poly_arg)->required();
    poly_factor->add_option("--seed", factor_seed,
                            "seed for the randomized splitter");
    auto* poly_order = poly->add_subcommand("order", "order of a polynomial");
    poly_order->add_option("poly", poly_arg)->required();
    auto* poly_prim = poly->add_subcommand("primitive", "primitivity test");
    poly_prim->add_option("poly", poly_arg)->required();

    // ---- code ----
    auto* code = app.add_subcommand("code", "cyclic code constructions");
    code->require_subcommand(1);
    int rm_r = 0, rm_m = 0;
    auto* code_rm = code->add_subcommand("rm", "punctured Reed-Muller code");
    code_rm->add_option("-r,--r", rm_r)->required();
    code_rm->add_option("-m,--m", rm_m)->required();
    int bch_m = 0, bch_d = 0, bch_b = 1;
    auto* code_bch = code->add_subcommand("bch", "primitive BCH code");
    code_bch->add_option("-m,--m", bch_m)->required();
    code_bch->add_option("-d,--d", bch_d)->required();
    code_bch->add_option("-b,--b", bch_b);
    std::string spec_a, spec_b;
    auto* code_dual = code->add_subcommand("dual", "dual of a code");
    code_dual->add_option("code", spec_a)->required();
    auto* code_dist =
        code->add_subcommand("distance", "minimum distance (exact or bound)");
    code_dist->add_option("code", spec_a)->required();
    int claimed = 0;
    code_dist->add_option("--claimed", claimed,
                          "candidate distance for the lower-bound sweep");
    auto* code_contains =
        code->add_subcommand("contains", "is the first code inside the second");
    code_contains->add_option("inner", spec_a)->required();
    code_contains->add_option("outer", spec_b)->required();

    // ---- scheme ----
    auto* scheme_cmd =
        app.add_subcommand("scheme", "build a synchronization scheme");
    scheme_cmd->add_option("C", spec_a, "dual-containing inner code")
        ->required();
    scheme_cmd->add_option("D", spec_b, "containing outer code")->required();
    bool compare_legacy = false, exact_mode = false;
    int override_d1 = 0, override_d2 = 0;
    scheme_cmd->add_flag("--compare-legacy", compare_legacy,
                         "also print the older shift-sum bound");
    scheme_cmd->add_flag("--exact", exact_mode,
                         "enumerate true distances when the budget allows");
    scheme_cmd->add_option("--d1", override_d1, "designed distance for C");
    scheme_cmd->add_option("--d2", override_d2, "designed distance for D");

    // ---- table ----
    auto* table = app.add_subcommand(
        "table", "tolerance tables over BCH pair families");
    table->require_subcommand(1);
    auto* table_t27 = table->add_subcommand(
        "theorem2-vs-theorem7",
        "legacy bound m(d1-d2)/2 against the exact tolerance");
    int m_min = 5, m_max = 7;
    bool as_csv = false;
    table_t27->add_option("--m-min", m_min);
    table_t27->add_option("--m-max", m_max);
    table_t27->add_flag("--csv", as_csv, "CSV instead of the aligned table");

    // ---- simulate ----
    auto* simulate = app.add_subcommand(
        "simulate", "run a trial batch specification file");
    std::string batch_path;
    simulate->add_option("spec", batch_path, "batch spec JSON path")
        ->required()
        ->check(CLI::ExistingFile);
    bool serial = false;
    simulate->add_flag("--serial", serial, "disable the parallel trial loop");
    std::uint64_t seed_override = 0;
    auto* seed_opt = simulate->add_option("--seed", seed_override,
                                          "override the spec's seed");

    CLI11_PARSE(app, argc, argv);

    try {
        std::ostream& os = out.stream();

        if (poly_factor->parsed()) {
            syncro::Factorization f =
                syncro::factorize(Poly2::parse(poly_arg), factor_seed);
            if (as_json) {
                syncro::json factors = syncro::json::array();
                for (const auto& [p, mult] : f.factors)
                    factors.push_back(
                        syncro::json::array({p.to_string(), mult}));
                os << syncro::json{{"poly", f.original.to_string()},
                                   {"factors", factors}}
                   << "\n";
            } else {
                os << poly_human(f) << "\n";
            }
        } else if (poly_order->parsed()) {
            Poly2 p = Poly2::parse(poly_arg);
            std::uint64_t ord = syncro::order(p);
            if (as_json)
                os << syncro::json{{"poly", p.to_string()}, {"order", ord}}
                   << "\n";
            else
                os << ord << "\n";
        } else if (poly_prim->parsed()) {
            Poly2 p = Poly2::parse(poly_arg);
            bool prim = syncro::is_primitive(p);
            if (as_json)
                os << syncro::json{{"poly", p.to_string()},
                                   {"primitive", prim}}
                   << "\n";
            else
                os << (prim ? "true" : "false") << "\n";
        } else if (code_rm->parsed()) {
            CyclicCode c = syncro::punctured_rm(rm_r, rm_m);
            if (as_json)
                os << syncro::descriptor_json(
                          syncro::describe_rm(rm_r, rm_m, c))
                   << "\n";
            else
                os << "[" << c.length() << "," << c.dim()
                   << "] punctured RM, generator " << c.generator().to_string()
                   << "\n";
        } else if (code_bch->parsed()) {
            CyclicCode c = syncro::bch(bch_m, bch_d, bch_b);
            if (as_json)
                os << syncro::descriptor_json(
                          syncro::describe_bch(bch_m, bch_d, bch_b, c))
                   << "\n";
            else
                os << "[" << c.length() << "," << c.dim()
                   << "] BCH, generator " << c.generator().to_string() << "\n";
        } else if (code_dual->parsed()) {
            CyclicCode d = parse_code_spec(spec_a).code.dual();
            if (as_json)
                os << syncro::code_json(d) << "\n";
            else
                os << "[" << d.length() << "," << d.dim()
                   << "] dual, generator " << d.generator().to_string()
                   << "\n";
        } else if (code_dist->parsed()) {
            CodeSpec spec = parse_code_spec(spec_a);
            int claim = claimed > 0
                            ? claimed
                            : spec.designed_distance.value_or(0);
            syncro::DistanceReport r =
                syncro::min_distance(spec.code, budget, claim);
            const char* kind =
                r.kind == syncro::DistanceReport::Kind::exact ? "exact"
                : r.kind == syncro::DistanceReport::Kind::lower_bound
                    ? "lower_bound"
                    : "unknown";
            if (as_json)
                os << syncro::json{{"n", spec.code.length()},
                                   {"k", spec.code.dim()},
                                   {"kind", kind},
                                   {"distance", r.value}}
                   << "\n";
            else if (r.kind == syncro::DistanceReport::Kind::unknown)
                os << "exact value not computed (budget " << budget << ")\n";
            else
                os << kind << " " << r.value << "\n";
        } else if (code_contains->parsed()) {
            CodeSpec inner = parse_code_spec(spec_a);
            CodeSpec outer = parse_code_spec(spec_b);
            bool contained = syncro::is_subcode(inner.code, outer.code);
            if (as_json)
                os << syncro::json{{"contains", contained}} << "\n";
            else
                os << (contained ? "true" : "false") << "\n";
        } else if (scheme_cmd->parsed()) {
            CodeSpec c = parse_code_spec(spec_a);
            CodeSpec d = parse_code_spec(spec_b);
            syncro::SchemeOptions opt;
            opt.mode = exact_mode ? syncro::DistanceMode::exact
                                  : syncro::DistanceMode::designed;
            opt.budget = budget;
            opt.designed_d1 = override_d1 > 0 ? std::optional<int>(override_d1)
                                              : c.designed_distance;
            opt.designed_d2 = override_d2 > 0 ? std::optional<int>(override_d2)
                                              : d.designed_distance;
            SyncScheme s = syncro::build_scheme(c.code, d.code, opt);
            if (as_json) {
                syncro::json j = syncro::scheme_json(s);
                j["max_shift_sum"] = s.params.max_shift_sum;
                os << j << "\n";
            } else {
                print_scheme_human(os, s, compare_legacy);
            }
        } else if (table_t27->parsed()) {
            std::vector<TableRow> rows = tolerance_table(m_min, m_max);
            if (as_csv) {
                os << "m,n,d1,d2,legacy_bound,new_bound,theorem7\n";
                for (const TableRow& r : rows)
                    os << r.m << ',' << r.n << ',' << r.d1 << ',' << r.d2
                       << ',' << r.legacy_bound << ',' << r.new_bound << ','
                       << (r.theorem7 ? "yes" : "no") << "\n";
            } else if (as_json) {
                for (const TableRow& r : rows)
                    os << syncro::json{{"m", r.m},
                                       {"n", r.n},
                                       {"d1", r.d1},
                                       {"d2", r.d2},
                                       {"legacy_bound", r.legacy_bound},
                                       {"new_bound", r.new_bound},
                                       {"theorem7", r.theorem7}}
                       << "\n";
            } else {
                os << std::setw(3) << "m" << std::setw(6) << "n"
                   << std::setw(5) << "d1" << std::setw(5) << "d2"
                   << std::setw(13) << "legacy<" << std::setw(13) << "new<"
                   << std::setw(10) << "thm7" << "\n";
                for (const TableRow& r : rows)
                    os << std::setw(3) << r.m << std::setw(6) << r.n
                       << std::setw(5) << r.d1 << std::setw(5) << r.d2
                       << std::setw(13) << r.legacy_bound << std::setw(13)
                       << r.new_bound << std::setw(10)
                       << (r.theorem7 ? "yes" : "outside") << "\n";
            }
        } else if (simulate->parsed()) {
            std::ifstream in(batch_path);
            syncro::json spec_json = syncro::json::parse(in);
            syncro::BatchSpec spec = syncro::batch_spec_from_json(spec_json);
            if (seed_opt->count() > 0) spec.options.seed = seed_override;
            syncro::BatchReport report =
                syncro::run_batch(spec.scheme, spec.options, !serial);
            if (as_json) {
                os << syncro::batch_report_json(report) << "\n";
            } else {
                os << report.successes << "/" << report.trials.size()
                   << " trials recovered, success rate "
                   << report.success_rate << "\n";
                std::map<std::string, int> reasons;
                for (const auto& t : report.trials)
                    if (!t.ground_truth_match)
                        ++reasons[t.decode_success
                                      ? "wrong-shift-or-frame"
                                      : syncro::failure_name(t.reason)];
                for (const auto& [name, count] : reasons)
                    os << "  " << name << ": " << count << "\n";
            }
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
