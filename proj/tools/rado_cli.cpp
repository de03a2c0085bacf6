// Command-line front end: every library operation as a subcommand with a
// uniform JSON report on stdout.
//
// Exit codes: 0 definitive answer, 1 input error, 2 timeout or budget
// exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "rado/columns.hpp"
#include "rado/deuber.hpp"
#include "rado/fourier.hpp"
#include "rado/io.hpp"
#include "rado/matrix.hpp"
#include "rado/search.hpp"

using json = nlohmann::json;

namespace {

std::vector<std::int64_t> parse_i64_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) {
        std::istringstream ts(token);
        std::int64_t v;
        if (!(ts >> v)) throw rado::InputError("bad integer in list: '" + token + "'");
        out.push_back(v);
    }
    if (out.empty()) throw rado::InputError("empty integer list");
    return out;
}

std::vector<rado::Scalar> parse_scalar_list(const std::string& text, const rado::Field& f) {
    std::vector<rado::Scalar> out;
    for (std::int64_t v : parse_i64_list(text)) out.push_back(rado::Scalar::from_int(v, f));
    return out;
}

json scalars_to_json(const std::vector<rado::Scalar>& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(s.to_string());
    return arr;
}

json partition_to_json(const rado::ColumnPartition& p) {
    json arr = json::array();
    for (const auto& part : p.parts) arr.push_back(part);
    return arr;
}

// wall time stays out of the result field so reports reproduce exactly
// across runs; the report-level wall_ms carries the timing
json stats_to_json(const rado::SearchStats& st) {
    return json{{"nodes", st.nodes}, {"propagations", st.propagations}};
}

void flatten_tsv(const std::string& prefix, const json& v, std::ostream& os) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            flatten_tsv(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value(), os);
    } else if (v.is_array()) {
        std::string joined;
        for (const auto& e : v) {
            if (!joined.empty()) joined += ',';
            joined += e.is_string() ? e.get<std::string>() : e.dump();
        }
        os << prefix << '\t' << joined << '\n';
    } else if (v.is_string()) {
        os << prefix << '\t' << v.get<std::string>() << '\n';
    } else {
        os << prefix << '\t' << v.dump() << '\n';
    }
}

struct RunContext {
    std::string output = "json";
    int threads = 1;
    std::uint64_t budget = 0;   // 0 = per-operation default
    double timeout = 0;         // seconds; 0 = unlimited
};

int run_guarded(const std::string& name, const json& params, const RunContext& ctx,
                const std::function<json()>& body) {
    json report{{"subcommand", name}, {"parameters", params}};
    int code = 0;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        report["result"] = body();
    } catch (const rado::BudgetExceeded& e) {
        report["error"] = {{"type", "BudgetExceeded"}, {"message", e.what()}};
        code = 2;
    } catch (const rado::SearchTimeout& e) {
        report["error"] = {{"type", "Timeout"}, {"message", e.what()}};
        code = 2;
    } catch (const rado::Error& e) {
        report["error"] = {{"type", "Error"}, {"message", e.what()}};
        code = 1;
    } catch (const std::exception& e) {
        report["error"] = {{"type", "Error"}, {"message", e.what()}};
        code = 1;
    }
    report["wall_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (report.contains("result") && report["result"].contains("status") &&
        report["result"]["status"] == "timeout")
        code = 2;

    if (ctx.output == "tsv") {
        flatten_tsv("", report, std::cout);
    } else {
        std::cout << report.dump(2) << std::endl;
    }
    return code;
}

rado::SearchLimits make_limits(const RunContext& ctx) {
    rado::SearchLimits lim;
    if (ctx.budget > 0) lim.max_nodes = ctx.budget;
    if (ctx.timeout > 0) lim.timeout_seconds = ctx.timeout;
    return lim;
}

std::string status_name(rado::SearchOutcome::Status s) {
    switch (s) {
        case rado::SearchOutcome::Status::Sat: return "sat";
        case rado::SearchOutcome::Status::Unsat: return "unsat";
        case rado::SearchOutcome::Status::Timeout: return "timeout";
    }
    return "?";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computable Rado/Schur partition-regularity toolkit"};
    app.require_subcommand(1);

    RunContext ctx;
    if (const char* env = std::getenv("RADO_THREADS")) ctx.threads = std::max(1, std::atoi(env));

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", ctx.output, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
        sub->add_option("--threads", ctx.threads, "worker cap for parallel operations")
            ->check(CLI::PositiveNumber);
        sub->add_option("--budget", ctx.budget, "node/element budget override")
            ->check(CLI::PositiveNumber);
        sub->add_option("--timeout", ctx.timeout, "wall-clock limit in seconds")
            ->check(CLI::PositiveNumber);
    };

    // cc
    std::string cc_matrix, cc_field;
    auto* cc = app.add_subcommand("cc", "decide the columns condition for a matrix");
    cc->add_option("--matrix", cc_matrix, "matrix file")->required();
    cc->add_option("--field", cc_field, "Q or F<p>; overrides the file header");
    add_common(cc);

    // brauer
    std::int64_t brauer_k = 2;
    std::string brauer_field = "Q", brauer_out;
    auto* brauer = app.add_subcommand("brauer", "emit the Brauer configuration matrix");
    brauer->add_option("--k", brauer_k, "number of progression points")->required();
    brauer->add_option("--field", brauer_field, "field tag for the emitted file");
    brauer->add_option("--out", brauer_out, "write the matrix file here");
    add_common(brauer);

    // deuber
    std::string deuber_matrix, deuber_field;
    auto* deuber = app.add_subcommand("deuber", "build the kernel witness from a columns-condition partition");
    deuber->add_option("--matrix", deuber_matrix, "matrix file")->required();
    deuber->add_option("--field", deuber_field, "Q or F<p>; overrides the file header");
    add_common(deuber);

    // hj
    int hj_k = 2;
    std::size_t hj_dims = 1;
    std::string hj_colouring;
    auto* hj = app.add_subcommand("hj", "search a word colouring for a monochromatic combinatorial line");
    hj->add_option("--k", hj_k, "alphabet size")->required();
    hj->add_option("--dims", hj_dims, "number of coordinates")->required();
    hj->add_option("--colouring", hj_colouring, "colour per word, lexicographic order")->required();
    add_common(hj);

    // sset
    std::string sset_field = "Q", sset_coeffs, sset_t;
    auto* sset = app.add_subcommand("sset", "expand a Deuber S(m,F;t) set");
    sset->add_option("--field", sset_field, "Q or F<p>");
    sset->add_option("--coeffs", sset_coeffs, "comma-separated F")->required();
    sset->add_option("--t", sset_t, "comma-separated generator tuple")->required();
    add_common(sset);

    // findep
    std::string findep_field = "Q", findep_coeffs, findep_t;
    auto* findep = app.add_subcommand("findep", "test F-independence of a tuple");
    findep->add_option("--field", findep_field, "Q or F<p>");
    findep->add_option("--coeffs", findep_coeffs, "comma-separated F")->required();
    findep->add_option("--t", findep_t, "comma-separated tuple")->required();
    add_common(findep);

    // rado
    std::string rado_matrix;
    int rado_r = 1;
    std::int64_t rado_cap = 1000000;
    auto* rado_cmd = app.add_subcommand("rado", "compute the Rado number of a matrix");
    rado_cmd->add_option("--matrix", rado_matrix, "matrix file")->required();
    rado_cmd->add_option("--r", rado_r, "number of colours")->required();
    rado_cmd->add_option("--max-n", rado_cap, "give up beyond this N");
    add_common(rado_cmd);

    // schur
    std::int64_t schur_a = 1;
    int schur_r = 1;
    bool schur_modular = false, schur_coprime = false;
    std::int64_t schur_max_n = -1;
    auto* schur = app.add_subcommand("schur", "generalized (modular) Schur numbers for ax+y=z");
    schur->add_option("--a", schur_a, "coefficient a")->required();
    schur->add_option("--r", schur_r, "number of colours")->required();
    schur->add_flag("--modular", schur_modular, "compute h_a(r) instead of f_a(r)");
    schur->add_option("--max-n", schur_max_n, "modular search cap (default: f_a(r))");
    schur->add_flag("--require-coprime", schur_coprime, "only consider N with gcd(a,N+1)=1");
    add_common(schur);

    // exists
    std::string exists_matrix;
    std::int64_t exists_n = 1;
    int exists_r = 1;
    bool exists_modular = false;
    auto* exists = app.add_subcommand("exists", "decide one colouring instance at fixed N");
    exists->add_option("--matrix", exists_matrix, "matrix file")->required();
    exists->add_option("--n", exists_n, "interval bound N (modulus is N+1 with --modular)")->required();
    exists->add_option("--r", exists_r, "number of colours")->required();
    exists->add_flag("--modular", exists_modular, "ground set {1..N} mod N+1");
    add_common(exists);

    // export-cnf
    std::string cnf_matrix, cnf_out;
    std::int64_t cnf_n = 1;
    int cnf_r = 1;
    bool cnf_modular = false;
    auto* cnf = app.add_subcommand("export-cnf", "write the DIMACS encoding of a colouring instance");
    cnf->add_option("--matrix", cnf_matrix, "matrix file")->required();
    cnf->add_option("--n", cnf_n, "interval bound N (modulus is N+1 with --modular)")->required();
    cnf->add_option("--r", cnf_r, "number of colours")->required();
    cnf->add_flag("--modular", cnf_modular, "ground set {1..N} mod N+1");
    cnf->add_option("--out", cnf_out, "output .cnf path")->required();
    add_common(cnf);

    // count
    std::string count_colouring;
    std::int64_t count_n = -1, count_a = 1;
    auto* count = app.add_subcommand("count", "count monochromatic triples of ax = y-z over Z/NZ");
    count->add_option("--n", count_n, "modulus (cross-checked against the file header)");
    count->add_option("--a", count_a, "dilation coefficient")->required();
    count->add_option("--colouring", count_colouring, "zmod colouring file")->required();
    add_common(count);

    // bohr
    std::string bohr_freqs;
    std::int64_t bohr_n = 1;
    double bohr_delta = 1.0;
    bool bohr_double_check = false, bohr_list = false;
    auto* bohr = app.add_subcommand("bohr", "enumerate a Bohr set B(Lambda, delta)");
    bohr->add_option("--n", bohr_n, "modulus")->required();
    bohr->add_option("--freqs", bohr_freqs, "comma-separated frequency set")->required();
    bohr->add_option("--delta", bohr_delta, "width in (0,2]")->required();
    bohr->add_flag("--double-check", bohr_double_check, "also report the size/doubling bounds");
    bohr->add_flag("--list", bohr_list, "include the member list in the report");
    add_common(bohr);

    // regular-pair
    std::string rp_freqs;
    std::int64_t rp_n = 1;
    double rp_delta = 1.0, rp_eta = 0.5;
    auto* rp = app.add_subcommand("regular-pair", "find a verified regular pair of Bohr widths");
    rp->add_option("--n", rp_n, "modulus")->required();
    rp->add_option("--freqs", rp_freqs, "comma-separated frequency set")->required();
    rp->add_option("--delta", rp_delta, "base width")->required();
    rp->add_option("--eta", rp_eta, "growth tolerance in (0,1]")->required();
    add_common(rp);

    // spectrum
    std::string spec_set, spec_base;
    std::int64_t spec_n = 1;
    double spec_eps = 0.5;
    auto* spec = app.add_subcommand("spectrum", "large spectrum of S against the uniform measure on B0");
    spec->add_option("--n", spec_n, "modulus")->required();
    spec->add_option("--set", spec_set, "comma-separated residues of S")->required();
    spec->add_option("--base", spec_base, "comma-separated residues of B0")->required();
    spec->add_option("--eps", spec_eps, "threshold fraction")->required();
    add_common(spec);

    // verify
    std::string verify_matrix, verify_cert;
    int verify_r = -1;
    auto* verify = app.add_subcommand("verify", "re-check a colouring certificate independently");
    verify->add_option("--matrix", verify_matrix, "matrix file")->required();
    verify->add_option("--certificate", verify_cert, "colouring file with ground header")->required();
    verify->add_option("--r", verify_r, "number of colours (default: max index + 1)");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    auto field_override = [](const std::string& s) -> std::optional<rado::Field> {
        if (s.empty()) return std::nullopt;
        return rado::Field::parse(s);
    };

    try {

    if (*cc) {
        return run_guarded("cc", {{"matrix", cc_matrix}, {"field", cc_field}}, ctx, [&] {
            rado::Matrix m = rado::to_matrix(rado::read_matrix_file(cc_matrix), field_override(cc_field));
            auto witness = rado::check_columns_condition(m);
            json res{{"field", m.field().to_string()}, {"satisfies", witness.has_value()}};
            res["partition"] = witness ? partition_to_json(*witness) : json(nullptr);
            return res;
        });
    }

    if (*brauer) {
        return run_guarded("brauer", {{"k", brauer_k}, {"field", brauer_field}, {"out", brauer_out}},
                           ctx, [&] {
            if (brauer_k < 2) throw rado::InputError("--k must be >= 2");
            auto entries = rado::brauer_entries(static_cast<std::size_t>(brauer_k));
            std::string text = rado::format_matrix_text(
                static_cast<std::size_t>(brauer_k - 1), static_cast<std::size_t>(brauer_k + 1),
                rado::Field::parse(brauer_field), entries);
            if (!brauer_out.empty()) {
                std::ofstream out(brauer_out);
                if (!out) throw rado::InputError("cannot write " + brauer_out);
                out << text;
            }
            return json{{"rows", brauer_k - 1}, {"cols", brauer_k + 1}, {"matrix", text}};
        });
    }

    if (*deuber) {
        return run_guarded("deuber", {{"matrix", deuber_matrix}, {"field", deuber_field}}, ctx, [&] {
            rado::Matrix m =
                rado::to_matrix(rado::read_matrix_file(deuber_matrix), field_override(deuber_field));
            auto partition = rado::check_columns_condition(m);
            if (!partition)
                throw rado::InvalidWitness("matrix does not satisfy the columns condition over " +
                                           m.field().to_string());
            rado::DeuberWitness w = rado::deuber_witness(m, *partition);
            json wmat = json::array();
            for (std::size_t r = 0; r < w.w.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < w.w.cols(); ++c) row.push_back(w.w.at(r, c).to_string());
                wmat.push_back(row);
            }

            // verification trials: lift solves Ax=0 and every kernel
            // coordinate lies in S(d, F u {0,1}; t)
            std::vector<rado::Scalar> chain = w.coefficient_set;
            chain.push_back(rado::Scalar::zero(m.field()));
            chain.push_back(rado::Scalar::one(m.field()));
            std::vector<std::vector<rado::Scalar>> trial_ts;
            bool exhaustive = false;
            if (m.field().is_mod() && std::pow(static_cast<double>(m.field().modulus),
                                               static_cast<double>(w.d)) <= 512.0) {
                exhaustive = true;
                std::vector<std::size_t> odo(w.d, 0);
                const std::uint64_t p = m.field().modulus;
                while (true) {
                    std::vector<rado::Scalar> t;
                    for (std::size_t i = 0; i < w.d; ++i)
                        t.push_back(rado::Scalar::mod(static_cast<std::int64_t>(odo[i]), p));
                    trial_ts.push_back(std::move(t));
                    std::size_t i = w.d;
                    while (i > 0 && odo[i - 1] + 1 == p) odo[--i] = 0;
                    if (i == 0) break;
                    ++odo[i - 1];
                }
            } else {
                std::mt19937_64 rng(1);
                for (int trial = 0; trial < 50; ++trial) {
                    std::vector<rado::Scalar> t;
                    for (std::size_t i = 0; i < w.d; ++i)
                        t.push_back(rado::Scalar::from_int(
                            static_cast<std::int64_t>(rng() % 199) - 99, m.field()));
                    trial_ts.push_back(std::move(t));
                }
            }
            bool lift_ok = true, membership_ok = true;
            for (const auto& t : trial_ts) {
                for (const rado::Scalar& s : m.apply(w.lift(t))) lift_ok = lift_ok && s.is_zero();
                auto sset = rado::s_set({chain, t});
                for (const rado::Scalar& coord : w.kernel_vector(t))
                    membership_ok = membership_ok &&
                                    std::find(sset.begin(), sset.end(), coord) != sset.end();
            }

            std::size_t k = m.rows();
            return json{{"field", m.field().to_string()},
                        {"d", w.d},
                        {"F", scalars_to_json(w.coefficient_set)},
                        {"W", wmat},
                        {"merged_partition", partition_to_json(w.merged_partition)},
                        {"lift_position", w.lift_position},
                        {"coefficient_bound", (k + 1) * w.d * w.d},
                        {"bound_ok", w.coefficient_set.size() <= (k + 1) * w.d * w.d},
                        {"verification",
                         json{{"trials", trial_ts.size()},
                              {"exhaustive", exhaustive},
                              {"lift_solves_system", lift_ok},
                              {"coordinates_in_s_set", membership_ok}}}};
        });
    }

    if (*hj) {
        return run_guarded("hj", {{"k", hj_k}, {"dims", hj_dims}, {"colouring", hj_colouring}}, ctx,
                           [&] {
            std::vector<int> colours = rado::read_colour_list_file(hj_colouring);
            auto line = rado::hj_line_search(hj_k, hj_dims, colours);
            json res{{"found", line.has_value()}};
            if (line) {
                res["variable_coords"] = line->variable_coords;
                res["z_template"] = line->z_template;
                res["colour"] = line->colour;
                res["word_indices"] = line->word_indices;
            }
            return res;
        });
    }

    if (*sset) {
        return run_guarded("sset", {{"field", sset_field}, {"coeffs", sset_coeffs}, {"t", sset_t}},
                           ctx, [&] {
            rado::Field f = rado::Field::parse(sset_field);
            rado::SSetSpec spec{parse_scalar_list(sset_coeffs, f), parse_scalar_list(sset_t, f)};
            std::vector<rado::Scalar> out =
                ctx.budget > 0 ? rado::s_set(spec, ctx.budget) : rado::s_set(spec);
            return json{{"size", out.size()}, {"elements", scalars_to_json(out)}};
        });
    }

    if (*findep) {
        return run_guarded("findep",
                           {{"field", findep_field}, {"coeffs", findep_coeffs}, {"t", findep_t}}, ctx,
                           [&] {
            rado::Field f = rado::Field::parse(findep_field);
            auto coeffs = parse_scalar_list(findep_coeffs, f);
            auto t = parse_scalar_list(findep_t, f);
            bool ind = ctx.budget > 0 ? rado::is_f_independent(t, coeffs, ctx.budget)
                                      : rado::is_f_independent(t, coeffs);
            return json{{"independent", ind}};
        });
    }

    if (*rado_cmd) {
        return run_guarded("rado", {{"matrix", rado_matrix}, {"r", rado_r}, {"max-n", rado_cap}}, ctx,
                           [&] {
            auto rows = rado::to_int_rows(rado::read_matrix_file(rado_matrix));
            rado::RadoNumberResult res = rado::rado_number(rows, rado_r, make_limits(ctx), rado_cap);
            json out{{"status", "exact"},
                     {"value", res.value},
                     {"sat_stats", stats_to_json(res.sat_stats)},
                     {"unsat_stats", stats_to_json(res.unsat_stats)}};
            out["certificate"] = res.certificate ? json(res.certificate->to_certificate()) : json(nullptr);
            return out;
        });
    }

    if (*schur) {
        json params{{"a", schur_a},          {"r", schur_r},
                    {"modular", schur_modular}, {"max-n", schur_max_n},
                    {"require-coprime", schur_coprime}};
        return run_guarded("schur", params, ctx, [&] {
            if (!schur_modular) {
                rado::RadoNumberResult res =
                    rado::rado_number({{schur_a, 1, -1}}, schur_r, make_limits(ctx));
                json out{{"status", "exact"},
                         {"value", res.value},
                         {"sat_stats", stats_to_json(res.sat_stats)},
                         {"unsat_stats", stats_to_json(res.unsat_stats)}};
                out["certificate"] =
                    res.certificate ? json(res.certificate->to_certificate()) : json(nullptr);
                return out;
            }
            rado::ModularSchurOptions opts;
            opts.require_coprime = schur_coprime;
            if (schur_max_n >= 0) opts.max_n = schur_max_n;
            rado::ModularSchurResult res =
                rado::modular_schur_number(schur_a, schur_r, opts, make_limits(ctx));
            json out{{"status", "exact"},
                     {"value", res.value},
                     {"search_cap", res.search_cap},
                     {"sat_values", res.sat_values},
                     {"stats", stats_to_json(res.total_stats)}};
            out["certificate"] =
                res.certificate ? json(res.certificate->to_certificate()) : json(nullptr);
            return out;
        });
    }

    if (*exists) {
        json params{{"matrix", exists_matrix}, {"n", exists_n}, {"r", exists_r},
                    {"modular", exists_modular}};
        return run_guarded("exists", params, ctx, [&] {
            auto rows = rado::to_int_rows(rado::read_matrix_file(exists_matrix));
            rado::Domain dom = exists_modular ? rado::Domain::modular_star(exists_n + 1)
                                              : rado::Domain::interval(exists_n);
            rado::ConstraintSystem sys(rows, dom);
            rado::SearchOutcome out = rado::valid_colouring_exists(sys, exists_r, make_limits(ctx));
            json res{{"status", status_name(out.status)}, {"stats", stats_to_json(out.stats)}};
            res["certificate"] =
                out.certificate ? json(out.certificate->to_certificate()) : json(nullptr);
            return res;
        });
    }

    if (*cnf) {
        json params{{"matrix", cnf_matrix}, {"n", cnf_n}, {"r", cnf_r},
                    {"modular", cnf_modular}, {"out", cnf_out}};
        return run_guarded("export-cnf", params, ctx, [&] {
            auto rows = rado::to_int_rows(rado::read_matrix_file(cnf_matrix));
            rado::Domain dom = cnf_modular ? rado::Domain::modular_star(cnf_n + 1)
                                           : rado::Domain::interval(cnf_n);
            rado::ConstraintSystem sys(rows, dom);
            std::string text = ctx.budget > 0 ? rado::export_cnf(sys, cnf_r, ctx.budget)
                                              : rado::export_cnf(sys, cnf_r);
            std::ofstream out(cnf_out);
            if (!out) throw rado::InputError("cannot write " + cnf_out);
            out << text;
            std::istringstream count_lines(text);
            std::string line;
            std::uint64_t vars = 0, clauses = 0;
            while (std::getline(count_lines, line))
                if (line.rfind("p cnf ", 0) == 0) {
                    std::istringstream hs(line.substr(6));
                    hs >> vars >> clauses;
                }
            return json{{"out", cnf_out}, {"vars", vars}, {"clauses", clauses}};
        });
    }

    if (*count) {
        json params{{"n", count_n}, {"a", count_a}, {"colouring", count_colouring}};
        return run_guarded("count", params, ctx, [&] {
            rado::ColouringFile cf = rado::read_colouring_file(count_colouring);
            if (cf.ground != rado::ColouringFile::Ground::ZMod)
                throw rado::InputError("count needs a zmod colouring (header ground=zmod:N)");
            if (count_n >= 0 && count_n != cf.bound)
                throw rado::InputError("--n disagrees with the colouring header");
            rado::TripleCountReport rep =
                rado::count_monochromatic_triples(cf.colours, count_a, ctx.threads);
            json res{{"per_class", rep.per_class},
                     {"per_class_brute", rep.per_class_brute},
                     {"total", rep.total},
                     {"method", rep.method}};
            if (!rep.per_class_convolution.empty())
                res["per_class_convolution"] = rep.per_class_convolution;
            return res;
        });
    }

    if (*bohr) {
        json params{{"n", bohr_n}, {"freqs", bohr_freqs}, {"delta", bohr_delta},
                    {"double-check", bohr_double_check}};
        return run_guarded("bohr", params, ctx, [&] {
            rado::BohrSet b(bohr_n, parse_i64_list(bohr_freqs), bohr_delta);
            std::vector<std::int64_t> members =
                ctx.budget > 0 ? rado::bohr_members(b, ctx.budget) : rado::bohr_members(b);
            json res{{"size", members.size()},
                     {"measure", static_cast<double>(members.size()) / static_cast<double>(bohr_n)}};
            if (bohr_list) res["members"] = members;
            if (bohr_double_check) {
                rado::BohrBoundsReport rep = rado::bohr_bounds_check(bohr_n, b.frequencies, bohr_delta);
                double dim = static_cast<double>(b.frequencies.size());
                res["bounds"] = json{{"lower_ok", rep.lower_ok},
                                     {"lower_bound", rep.lower_bound},
                                     {"doubling_ratio", rep.doubling_ratio},
                                     {"doubling_bound", std::pow(16.0, dim)},
                                     {"doubling_ok", rep.doubling_ratio <= std::pow(16.0, dim)}};
            }
            return res;
        });
    }

    if (*rp) {
        json params{{"n", rp_n}, {"freqs", rp_freqs}, {"delta", rp_delta}, {"eta", rp_eta}};
        return run_guarded("regular-pair", params, ctx, [&] {
            rado::RegularPairResult res =
                rado::regular_pair(rp_n, parse_i64_list(rp_freqs), rp_delta, rp_eta);
            return json{{"delta_star", res.delta_star},   {"delta_prime", res.delta_prime},
                        {"size_star", res.size_star},     {"size_prime", res.size_prime},
                        {"sumset_size", res.sumset_size}, {"scan_index", res.scan_index}};
        });
    }

    if (*spec) {
        json params{{"n", spec_n}, {"set", spec_set}, {"base", spec_base}, {"eps", spec_eps}};
        return run_guarded("spectrum", params, ctx, [&] {
            rado::Spectrum s = rado::large_spectrum(parse_i64_list(spec_set),
                                                    parse_i64_list(spec_base), spec_n, spec_eps);
            return json{{"eps", s.eps},
                        {"base_size", s.base_size},
                        {"density", s.density},
                        {"frequencies", s.frequencies},
                        {"spectrum_size", s.frequencies.size()},
                        {"parseval_bound", s.parseval_bound}};
        });
    }

    if (*verify) {
        json params{{"matrix", verify_matrix}, {"certificate", verify_cert}, {"r", verify_r}};
        return run_guarded("verify", params, ctx, [&] {
            auto rows = rado::to_int_rows(rado::read_matrix_file(verify_matrix));
            rado::ColouringFile cf = rado::read_colouring_file(verify_cert);
            if (cf.ground == rado::ColouringFile::Ground::ZMod)
                throw rado::InputError("verify needs an interval or modstar certificate");
            int r = verify_r;
            if (r < 0) {
                r = 1;
                for (int c : cf.colours) r = std::max(r, c + 1);
            }
            rado::Colouring col = rado::to_ground_colouring(cf, r);
            rado::ConstraintSystem sys(rows, col.domain);
            std::uint64_t bad = rado::count_monochromatic(sys, col);
            return json{{"valid", bad == 0}, {"monochromatic_count", bad}, {"r", r}};
        });
    }

    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
