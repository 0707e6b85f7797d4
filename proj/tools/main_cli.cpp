// Command-line front end. Subcommands map one-to-one onto the library's
// operation families; all numeric output is routed through one document
// layer so json and csv renderings are byte-stable across runs.

#include <algorithm>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbx/arith.hpp"
#include "gbx/bounds.hpp"
#include "gbx/characters.hpp"
#include "gbx/errors.hpp"
#include "gbx/goldbach.hpp"
#include "gbx/manifest.hpp"
#include "gbx/sieve.hpp"
#include "gbx/verify.hpp"
#include "gbx/zeros.hpp"

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// One output line: numeric rows carry provenance, text rows leave it empty.
struct Row {
    std::string name;
    std::string value;
    std::string provenance;
};

struct ListSection {
    std::string name;
    std::vector<std::vector<Row>> records;
};

struct Document {
    std::string command;
    std::vector<Row> rows;
    std::vector<ListSection> lists;
    std::vector<std::string> notes;
};

Row text_row(std::string name, std::string value) {
    return {std::move(name), std::move(value), ""};
}

Row int_row(std::string name, std::uint64_t value, std::string provenance = "computed") {
    return {std::move(name), std::to_string(value), std::move(provenance)};
}

Row double_row(std::string name, double value, std::string provenance = "computed") {
    return {std::move(name), fmt_double(value), std::move(provenance)};
}

Row real_row(std::string name, const gbx::real50& value, int digits,
             std::string provenance = "computed") {
    return {std::move(name), gbx::r50::to_string(value, digits), std::move(provenance)};
}

std::string render_table(const Document& d) {
    std::string out = "# " + d.command + "\n";
    char line[512];
    for (const Row& r : d.rows) {
        std::snprintf(line, sizeof line, "%-22s %s\n", r.name.c_str(), r.value.c_str());
        out += line;
    }
    for (const ListSection& s : d.lists) {
        out += s.name + ":\n";
        for (const auto& rec : s.records) {
            out += " ";
            for (const Row& r : rec) out += " " + r.name + "=" + r.value;
            out += "\n";
        }
    }
    for (const std::string& n : d.notes) out += "note: " + n + "\n";
    return out;
}

nlohmann::ordered_json json_value(const Row& r) {
    if (r.provenance.empty()) return r.value;
    return {{"value", r.value}, {"provenance", r.provenance}};
}

std::string render_json(const Document& d) {
    nlohmann::ordered_json j;
    j["command"] = d.command;
    for (const Row& r : d.rows) j[r.name] = json_value(r);
    for (const ListSection& s : d.lists) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& rec : s.records) {
            nlohmann::ordered_json o;
            for (const Row& r : rec) o[r.name] = json_value(r);
            arr.push_back(o);
        }
        j[s.name] = arr;
    }
    if (!d.notes.empty()) j["notes"] = d.notes;
    return j.dump(2) + "\n";
}

std::string render_csv(const Document& d) {
    std::string out = "section,name,value,provenance\n";
    for (const Row& r : d.rows)
        out += ",\"" + r.name + "\"," + r.value + "," + r.provenance + "\n";
    for (const ListSection& s : d.lists)
        for (std::size_t i = 0; i < s.records.size(); ++i)
            for (const Row& r : s.records[i])
                out += s.name + "[" + std::to_string(i) + "],\"" + r.name + "\"," +
                       r.value + "," + r.provenance + "\n";
    return out;
}

// Shared option state, filled by flags, environment, then config file in that
// precedence order.
struct Options {
    std::string zeros;
    std::string config_path;
    std::uint64_t sieve_limit = 10000000;
    int precision = 50;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string format = "table";
    std::string out;
    std::string bq = "1";

    CLI::Option* o_zeros = nullptr;
    CLI::Option* o_sieve = nullptr;
    CLI::Option* o_precision = nullptr;
    CLI::Option* o_jobs = nullptr;
    CLI::Option* o_format = nullptr;
    CLI::Option* o_out = nullptr;
    CLI::Option* o_bq = nullptr;
    bool config_applied = false;

    // Config file entries fill only options that neither a flag nor the
    // environment supplied.
    void apply_config() {
        if (config_applied) return;
        config_applied = true;
        if (config_path.empty()) return;
        std::ifstream in(config_path);
        if (!in) throw gbx::config_error("cannot open config file " + config_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw gbx::config_error("config file " + config_path + ": " + e.what());
        }
        if (!j.is_object())
            throw gbx::config_error("config file " + config_path + ": expected an object");
        for (const auto& [key, value] : j.items()) {
            if (key == "zeros") {
                if (o_zeros->count() == 0) zeros = value.get<std::string>();
            } else if (key == "sieve-limit") {
                if (o_sieve->count() == 0) sieve_limit = value.get<std::uint64_t>();
            } else if (key == "precision") {
                if (o_precision->count() == 0) precision = value.get<int>();
                if (precision < 30)
                    throw gbx::config_error("config file: precision must be >= 30");
            } else if (key == "jobs") {
                if (o_jobs->count() == 0) jobs = value.get<unsigned>();
            } else if (key == "format") {
                if (o_format->count() == 0) format = value.get<std::string>();
                if (format != "table" && format != "json" && format != "csv")
                    throw gbx::config_error("config file: unknown format '" + format + "'");
            } else if (key == "out") {
                if (o_out->count() == 0) out = value.get<std::string>();
            } else if (key == "bq") {
                if (o_bq->count() == 0)
                    bq = value.is_string() ? value.get<std::string>() : value.dump();
            } else {
                throw gbx::config_error("config file: unknown key '" + key + "'");
            }
        }
    }

    gbx::real50 bq_value() const {
        try {
            return gbx::real50(bq);
        } catch (const std::exception&) {
            throw gbx::config_error("--bq: cannot parse '" + bq + "' as a real");
        }
    }

    std::string zeros_or_fail() const {
        if (zeros.empty())
            throw gbx::config_error(
                "no zero table configured: pass --zeros or set GOLDBACH_ZEROS");
        return zeros;
    }

    void emit(const Document& d) const {
        std::string rendered = format == "json"  ? render_json(d)
                               : format == "csv" ? render_csv(d)
                                                 : render_table(d);
        emit_raw(rendered);
    }

    void emit_raw(const std::string& rendered) const {
        if (out.empty()) {
            std::cout << rendered;
            return;
        }
        std::ofstream f(out, std::ios::binary);
        if (!f) throw gbx::config_error("cannot open output file " + out);
        f << rendered;
        if (!f) throw gbx::config_error("cannot write output file " + out);
    }
};

// Sieve sized for one query point rather than the configured batch limit.
gbx::SieveTable sieve_for(const Options&, std::uint64_t needed) {
    return gbx::build_sieve(std::max<std::uint64_t>(needed, 2));
}

Document breakdown_doc(std::string command, const gbx::BoundBreakdown& b, int digits) {
    Document d;
    d.command = std::move(command);
    d.rows.push_back(real_row("total", b.total, digits));
    if (b.has_packaged) d.rows.push_back(real_row("packaged", b.packaged, digits, "packaged"));
    if (b.log_x != 0) d.rows.push_back(real_row("log-x", b.log_x, digits));
    if (b.q != 0) d.rows.push_back(int_row("q", b.q));
    if (b.x0 != 0) d.rows.push_back(real_row("x0", b.x0, digits, "manifest"));
    if (b.t0 != 0) d.rows.push_back(real_row("t0", b.t0, digits, "manifest"));
    if (b.t1 != 0) d.rows.push_back(real_row("t1", b.t1, digits, "manifest"));
    if (b.b_q != 1) d.rows.push_back(real_row("b-q", b.b_q, digits));
    d.rows.push_back(text_row("hypotheses-met", b.hypotheses_met ? "true" : "false"));
    ListSection comps{"components", {}};
    for (const auto& [name, value] : b.components)
        comps.records.push_back(
            {text_row("name", name), real_row("value", value, digits)});
    d.lists.push_back(std::move(comps));
    d.notes = b.notes;
    return d;
}

Document check_doc(const gbx::CheckReport& r) {
    Document d;
    d.command = "verify one";
    d.rows.push_back(text_row("id", r.id));
    d.rows.push_back(text_row("status", gbx::to_string(r.status)));
    d.rows.push_back(double_row("worst-ratio", r.worst_ratio));
    d.rows.push_back(text_row("witness", r.witness));
    d.rows.push_back(int_row("grid-points", r.grid_points));
    d.rows.push_back(text_row("provenance", r.provenance));
    return d;
}

gbx::PropositionMode mode_from_name(const std::string& name) {
    if (name == "literal") return gbx::PropositionMode::literal;
    if (name == "small-conductor") return gbx::PropositionMode::small_conductor;
    if (name == "primitive") return gbx::PropositionMode::primitive;
    throw gbx::domain_error("unknown proposition mode '" + name + "'");
}

std::string verify_table(const gbx::VerifyRun& run) {
    std::string out = "# verify all\n";
    char line[512];
    std::size_t npass = 0, nfail = 0, nskip = 0, nunmet = 0;
    for (const auto& c : run.checks) {
        std::snprintf(line, sizeof line, "%-42s %-19s %s\n", c.id.c_str(),
                      gbx::to_string(c.status).c_str(), fmt_double(c.worst_ratio).c_str());
        out += line;
        switch (c.status) {
            case gbx::CheckStatus::pass: ++npass; break;
            case gbx::CheckStatus::fail: ++nfail; break;
            case gbx::CheckStatus::skipped_resources: ++nskip; break;
            case gbx::CheckStatus::hypotheses_unmet: ++nunmet; break;
        }
    }
    std::snprintf(line, sizeof line,
                  "%zu checks: %zu passed, %zu failed, %zu skipped-resources, "
                  "%zu hypotheses-unmet\n",
                  run.checks.size(), npass, nfail, nskip, nunmet);
    out += line;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    Options opt;
    int exit_code = 0;

    CLI::App app{"Goldbach summatory bounds: sieves, character sums, zero data, "
                 "explicit constants, and the verification suite"};
    app.require_subcommand(1);

    opt.o_zeros = app.add_option("--zeros", opt.zeros, "zero-ordinate table path")
                      ->envname("GOLDBACH_ZEROS");
    opt.o_sieve = app.add_option("--sieve-limit", opt.sieve_limit,
                                 "von Mangoldt sieve size (default 1e7)");
    opt.o_precision = app.add_option("--precision", opt.precision,
                                     "printed digits for 50-digit values")
                          ->check(CLI::Range(30, 200));
    opt.o_jobs = app.add_option("--jobs", opt.jobs, "worker threads for the verify suite");
    opt.o_format = app.add_option("--format", opt.format, "table, json, or csv")
                       ->check(CLI::IsMember({"table", "json", "csv"}));
    opt.o_out = app.add_option("--out", opt.out, "write the report to this file");
    opt.o_bq = app.add_option("--bq", opt.bq,
                              "zero real-part cap: 1 unconditional, 0.5 under GRH");
    app.add_option("--config", opt.config_path,
                   "JSON config file; flags and environment take precedence");

    // ---- sieve -----------------------------------------------------------
    auto* cmd_sieve = app.add_subcommand("sieve", "build the sieve and report psi");
    cmd_sieve->fallthrough();
    static std::uint64_t sieve_x = 0;
    cmd_sieve->add_option("--x", sieve_x, "report up to x (default: the sieve limit)");
    cmd_sieve->callback([&] {
        opt.apply_config();
        std::uint64_t limit = sieve_x ? sieve_x : opt.sieve_limit;
        gbx::SieveTable s = gbx::build_sieve(limit);
        std::uint64_t prime_powers = 0;
        for (double v : s.lambda())
            if (v != 0.0) ++prime_powers;
        Document d;
        d.command = "sieve";
        d.rows.push_back(int_row("limit", s.limit()));
        d.rows.push_back(int_row("prime-powers", prime_powers));
        d.rows.push_back(double_row("psi", s.psi_at(double(s.limit()))));
        d.rows.push_back(
            double_row("psi-over-x", s.psi_at(double(s.limit())) / double(s.limit())));
        opt.emit(d);
    });

    // ---- goldbach --------------------------------------------------------
    auto* cmd_gb = app.add_subcommand("goldbach", "Goldbach counts and summatory sums");
    cmd_gb->require_subcommand(1);
    cmd_gb->fallthrough();
    static std::uint64_t gb_x = 0, gb_q = 1, gb_a = 1, gb_b = 1, gb_c = 0;
    static std::vector<std::uint64_t> gb_chi;

    auto add_gb = [&](const char* name, const char* help) {
        auto* sub = cmd_gb->add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("--x", gb_x, "evaluation point")->required();
        return sub;
    };

    add_gb("g", "ordered prime pairs summing to x")->callback([&] {
        opt.apply_config();
        gbx::SieveTable s = sieve_for(opt, gb_x);
        Document d;
        d.command = "goldbach g";
        d.rows.push_back(int_row("x", gb_x));
        d.rows.push_back(int_row("g", gbx::goldbach_g(gb_x, s)));
        opt.emit(d);
    });

    add_gb("G", "von Mangoldt weighted Goldbach count at x")->callback([&] {
        opt.apply_config();
        gbx::SieveTable s = sieve_for(opt, gb_x);
        Document d;
        d.command = "goldbach G";
        d.rows.push_back(int_row("x", gb_x));
        d.rows.push_back(double_row("G", gbx::goldbach_G(gb_x, s)));
        opt.emit(d);
    });

    add_gb("sum", "summatory S(x)")->callback([&] {
        opt.apply_config();
        gbx::SieveTable s = sieve_for(opt, gb_x);
        gbx::SummatoryResult r = gbx::summatory_S(gb_x, s);
        Document d;
        d.command = "goldbach sum";
        d.rows.push_back(int_row("x", r.x));
        d.rows.push_back(double_row("S", r.value.real()));
        d.rows.push_back(text_row("method", r.method));
        opt.emit(d);
    });

    {
        auto* sub = add_gb("sum-congruence", "S(x; q, a, b) over residue classes");
        sub->add_option("--q", gb_q, "modulus")->required();
        sub->add_option("--a", gb_a, "first residue class, 1..q (q names the zero class)")
            ->required();
        sub->add_option("--b", gb_b, "second residue class, 1..q")->required();
        sub->callback([&] {
            opt.apply_config();
            gbx::SieveTable s = sieve_for(opt, gb_x);
            gbx::SummatoryResult r = gbx::summatory_S_congruence(gb_x, gb_q, gb_a, gb_b, s);
            Document d;
            d.command = "goldbach sum-congruence";
            d.rows.push_back(int_row("x", r.x));
            d.rows.push_back(int_row("q", gb_q));
            d.rows.push_back(int_row("a", gb_a));
            d.rows.push_back(int_row("b", gb_b));
            d.rows.push_back(double_row("S", r.value.real()));
            d.rows.push_back(text_row("coprime-classes", r.coprime_classes ? "true" : "false"));
            opt.emit(d);
        });
    }

    {
        auto* sub = add_gb("sum-characters", "S(x; chi1, chi2) for two characters mod q");
        sub->add_option("--q", gb_q, "modulus")->required();
        sub->add_option("--chi-index", gb_chi, "two character indices")
            ->required()
            ->expected(2);
        sub->callback([&] {
            opt.apply_config();
            gbx::CharacterGroup group(gb_q);
            gbx::SieveTable s = sieve_for(opt, gb_x);
            gbx::SummatoryResult r =
                gbx::summatory_S_characters(gb_x, group.at(gb_chi[0]), group.at(gb_chi[1]), s);
            Document d;
            d.command = "goldbach sum-characters";
            d.rows.push_back(int_row("x", r.x));
            d.rows.push_back(int_row("q", gb_q));
            d.rows.push_back(int_row("chi1", gb_chi[0]));
            d.rows.push_back(int_row("chi2", gb_chi[1]));
            d.rows.push_back(double_row("S-re", r.value.real()));
            d.rows.push_back(double_row("S-im", r.value.imag()));
            opt.emit(d);
        });
    }

    {
        auto* sub = add_gb("g-minus-j", "sum of G - J over a residue class");
        sub->add_option("--q", gb_q, "modulus")->required();
        sub->add_option("--c", gb_c, "residue class, reduced mod q")->required();
        sub->callback([&] {
            opt.apply_config();
            gbx::SieveTable s = sieve_for(opt, gb_x);
            Document d;
            d.command = "goldbach g-minus-j";
            d.rows.push_back(int_row("x", gb_x));
            d.rows.push_back(int_row("q", gb_q));
            d.rows.push_back(int_row("c", gb_c));
            d.rows.push_back(double_row("sum", gbx::G_minus_J_sum(gb_x, gb_q, gb_c, s)));
            opt.emit(d);
        });
    }

    // ---- chars -----------------------------------------------------------
    auto* cmd_chars = app.add_subcommand("chars", "Dirichlet character inspection");
    cmd_chars->require_subcommand(1);
    cmd_chars->fallthrough();
    static std::uint64_t ch_q = 0, ch_x = 0;
    static std::uint64_t ch_index = 0;

    {
        auto* sub = cmd_chars->add_subcommand("list", "all characters mod q");
        sub->fallthrough();
        sub->add_option("--q", ch_q, "modulus")->required();
        sub->callback([&] {
            opt.apply_config();
            gbx::CharacterGroup group(ch_q);
            Document d;
            d.command = "chars list";
            d.rows.push_back(int_row("q", ch_q));
            d.rows.push_back(int_row("count", group.size()));
            ListSection list{"characters", {}};
            for (std::size_t i = 0; i < group.size(); ++i) {
                const auto& chi = group.at(i);
                list.records.push_back({int_row("index", i),
                                        int_row("order", chi.order()),
                                        int_row("conductor", chi.conductor()),
                                        text_row("parity", chi.parity() > 0 ? "even" : "odd"),
                                        text_row("principal", chi.is_principal() ? "true" : "false"),
                                        text_row("real", chi.is_real() ? "true" : "false")});
            }
            d.lists.push_back(std::move(list));
            opt.emit(d);
        });
    }

    {
        auto* sub = cmd_chars->add_subcommand("eval", "chi(n) as an exact root of unity");
        sub->fallthrough();
        sub->add_option("--q", ch_q, "modulus")->required();
        sub->add_option("--chi-index", ch_index, "character index from chars list")->required();
        sub->add_option("--x", ch_x, "argument n")->required();
        sub->callback([&] {
            opt.apply_config();
            gbx::CharacterGroup group(ch_q);
            const auto& chi = group.at(ch_index);
            gbx::UnitValue v = chi.value_exact(ch_x);
            std::complex<double> z = v.to_complex();
            Document d;
            d.command = "chars eval";
            d.rows.push_back(int_row("q", ch_q));
            d.rows.push_back(int_row("chi-index", ch_index));
            d.rows.push_back(int_row("n", ch_x));
            d.rows.push_back(text_row("zero", v.zero ? "true" : "false"));
            if (!v.zero) {
                d.rows.push_back(int_row("rotation-num", v.num));
                d.rows.push_back(int_row("rotation-den", v.den));
            }
            d.rows.push_back(double_row("re", z.real()));
            d.rows.push_back(double_row("im", z.imag()));
            opt.emit(d);
        });
    }

    {
        auto* sub = cmd_chars->add_subcommand("phi-star", "primitive-character counts");
        sub->fallthrough();
        sub->add_option("--q", ch_q, "modulus")->required();
        sub->callback([&] {
            opt.apply_config();
            Document d;
            d.command = "chars phi-star";
            d.rows.push_back(int_row("q", ch_q));
            d.rows.push_back(int_row("phi", gbx::euler_phi(ch_q)));
            d.rows.push_back(int_row("phi-star", gbx::phi_star(ch_q)));
            d.rows.push_back(int_row("phi1-star", gbx::phi1_star(ch_q)));
            opt.emit(d);
        });
    }

    // ---- zeros -----------------------------------------------------------
    auto* cmd_zeros = app.add_subcommand("zeros", "zero-table ingestion and zero sums");
    cmd_zeros->require_subcommand(1);
    cmd_zeros->fallthrough();
    static double z_T = 0, z_u = 0, z_x = 0;
    static std::string z_which;

    auto load_zeros_table = [&] {
        return gbx::load_zeros_file(opt.zeros_or_fail());
    };

    {
        auto* sub = cmd_zeros->add_subcommand("ingest", "load a table and report coverage");
        sub->fallthrough();
        sub->callback([&] {
            opt.apply_config();
            gbx::ZeroTable t = load_zeros_table();
            Document d;
            d.command = "zeros ingest";
            d.rows.push_back(int_row("count", t.count()));
            d.rows.push_back(double_row("height", t.height));
            d.rows.push_back(int_row("modulus", t.modulus));
            d.rows.push_back(text_row("character",
                                      t.character < 0 ? "-" : std::to_string(t.character)));
            d.rows.push_back(text_row("source", t.source));
            opt.emit(d);
        });
    }

    {
        auto* sub = cmd_zeros->add_subcommand("count", "ordinates strictly below T");
        sub->fallthrough();
        sub->add_option("--T", z_T, "cutoff height")->required();
        sub->callback([&] {
            opt.apply_config();
            gbx::ZeroTable t = load_zeros_table();
            Document d;
            d.command = "zeros count";
            d.rows.push_back(double_row("T", z_T));
            d.rows.push_back(int_row("count", gbx::count_zeros(t, z_T)));
            opt.emit(d);
        });
    }

    {
        auto* sub = cmd_zeros->add_subcommand(
            "sum", "zero sums: inv-rho, inv-gamma-sq, inv-rho-rho1, or h");
        sub->fallthrough();
        sub->add_option("--which", z_which, "sum kind")->required();
        sub->add_option("--T", z_T, "truncation height (from-height for inv-gamma-sq)");
        sub->add_option("--x", z_x, "evaluation point (kind h only)");
        sub->callback([&] {
            opt.apply_config();
            gbx::ZeroTable t = load_zeros_table();
            gbx::ZeroSumResult r;
            if (z_which == "inv-rho") {
                r = gbx::sum_inv_rho(t, z_T);
            } else if (z_which == "inv-gamma-sq") {
                r = gbx::sum_inv_gamma_sq(t, z_T);
            } else if (z_which == "inv-rho-rho1") {
                r = gbx::sum_inv_rho_rho1(t, z_T);
            } else if (z_which == "h") {
                gbx::HCutoff cutoff;
                if (z_T > 0) cutoff = {gbx::HCutoff::gamma_lt_T, z_T};
                r = gbx::H_truncated(t, z_x, cutoff);
            } else {
                throw gbx::domain_error("unknown zero sum '" + z_which + "'");
            }
            Document d;
            d.command = "zeros sum";
            d.rows.push_back(text_row("which", z_which));
            d.rows.push_back(double_row("T", r.T));
            if (r.x != 0) d.rows.push_back(double_row("x", r.x));
            d.rows.push_back(double_row("value", r.value));
            if (r.tail != 0) d.rows.push_back(double_row("tail", r.tail));
            d.rows.push_back(int_row("terms-used", r.terms_used));
            d.rows.push_back(text_row("doubled", r.doubled ? "true" : "false"));
            opt.emit(d);
        });
    }

    {
        auto* sub = cmd_zeros->add_subcommand("explicit-psi",
                                              "zero-sum model of psi(u), truncated at T");
        sub->fallthrough();
        sub->add_option("--u", z_u, "evaluation point, >= 2")->required();
        sub->add_option("--T", z_T, "truncation height")->required();
        sub->callback([&] {
            opt.apply_config();
            gbx::ZeroTable t = load_zeros_table();
            gbx::ZeroSumResult r = gbx::psi_explicit_truncated(t, z_u, z_T);
            Document d;
            d.command = "zeros explicit-psi";
            d.rows.push_back(double_row("u", z_u));
            d.rows.push_back(double_row("T", r.T));
            d.rows.push_back(double_row("model", r.value));
            d.rows.push_back(int_row("terms-used", r.terms_used));
            if (z_u <= double(opt.sieve_limit)) {
                gbx::SieveTable s = sieve_for(opt, std::uint64_t(z_u));
                double psi = s.psi_at(z_u);
                d.rows.push_back(double_row("psi", psi));
                d.rows.push_back(double_row("abs-error", std::abs(psi - r.value)));
            }
            opt.emit(d);
        });
    }

    // ---- bound -----------------------------------------------------------
    auto* cmd_bound = app.add_subcommand("bound", "explicit bounds and constants");
    cmd_bound->require_subcommand(1);
    cmd_bound->fallthrough();
    static std::string b_which, b_mode = "literal", b_chi_class = "any";
    static std::uint64_t b_q = 0;
    static double b_T = 0, b_u = 0, b_x = 0, b_log_x = 0;

    {
        auto* sub = cmd_bound->add_subcommand("f", "one coefficient block from the tables");
        sub->fallthrough();
        sub->add_option("--which", b_which, "f1..f8, f4z..f7z")->required();
        sub->add_option("--q", b_q, "conductor; omit for the zeta table");
        sub->add_option("--T", b_T, "height slot (default: the table's T1)");
        sub->callback([&] {
            opt.apply_config();
            gbx::FFunction which = gbx::f_function_from_name(b_which);
            gbx::AssumptionConstants k =
                b_q == 0 ? gbx::zeta_constants() : gbx::general_q_constants(b_q);
            bool slot_given = b_T > 0;
            gbx::real50 t_slot = slot_given ? gbx::real50(b_T) : k.t1;
            Document d;
            d.command = "bound f";
            d.rows.push_back(text_row("which", b_which));
            d.rows.push_back(
                text_row("context", k.context == gbx::BoundContext::zeta ? "zeta" : "general-q"));
            if (b_q != 0) d.rows.push_back(int_row("q", b_q));
            d.rows.push_back(real_row("t-slot", t_slot, opt.precision,
                                      slot_given ? "computed" : "manifest"));
            d.rows.push_back(
                real_row("value", gbx::f_function(which, k, t_slot), opt.precision));
            opt.emit(d);
        });
    }

    {
        auto* sub = cmd_bound->add_subcommand("theorem", "recompute a headline coefficient");
        sub->fallthrough();
        sub->add_option("--which", b_which, "thm1..thm4")->required();
        sub->add_option("--log-x", b_log_x, "log x (default: the stated threshold)");
        sub->add_option("--q", b_q, "conductor (thm3/thm4; default 4e5 + 1)");
        sub->callback([&] {
            opt.apply_config();
            gbx::BoundBreakdown b = gbx::theorem_bound(gbx::theorem_from_name(b_which),
                                                       gbx::real50(b_log_x), b_q);
            Document d = breakdown_doc("bound theorem", b, opt.precision);
            d.rows.insert(d.rows.begin(), text_row("which", b_which));
            opt.emit(d);
        });
    }

    {
        auto* sub = cmd_bound->add_subcommand("proposition", "evaluate a stated bound literally");
        sub->fallthrough();
        sub->add_option("--which", b_which,
                        "first-moment-zeta, first-moment-progression, second-moment-zeta, "
                        "second-moment-progression, average-comparison")
            ->required();
        sub->add_option("--log-x", b_log_x, "log x, > 1")->required();
        sub->add_option("--q", b_q, "conductor");
        sub->add_option("--mode", b_mode, "literal, small-conductor, or primitive");
        sub->callback([&] {
            opt.apply_config();
            gbx::PropositionArgs args;
            args.log_x = gbx::real50(b_log_x);
            args.q = b_q == 0 ? 1 : b_q;
            args.b_q = opt.bq_value();
            args.mode = mode_from_name(b_mode);
            gbx::BoundBreakdown b =
                gbx::proposition_bound(gbx::proposition_from_name(b_which), args);
            Document d = breakdown_doc("bound proposition", b, opt.precision);
            d.rows.insert(d.rows.begin(), text_row("mode", b_mode));
            d.rows.insert(d.rows.begin(), text_row("which", b_which));
            opt.emit(d);
        });
    }

    {
        auto* sub = cmd_bound->add_subcommand("region", "one zero-region or lemma bound");
        sub->fallthrough();
        sub->add_option("--which", b_which, "region name from the catalogue")->required();
        sub->add_option("--q", b_q, "conductor");
        sub->add_option("--T", b_T, "height t");
        sub->add_option("--u", b_u, "explicit-formula evaluation point");
        sub->add_option("--x", b_x, "product or divisor argument");
        sub->add_option("--chi-class", b_chi_class,
                        "any, principal, primitive, non-real, real-odd, real-even, even, odd");
        sub->callback([&] {
            opt.apply_config();
            gbx::RegionArgs args;
            args.q = b_q == 0 ? 1 : b_q;
            args.t = gbx::real50(b_T);
            args.u = gbx::real50(b_u);
            args.x = gbx::real50(b_x);
            args.chi = gbx::char_class_from_name(b_chi_class);
            gbx::BoundBreakdown b =
                gbx::zero_region_bound(gbx::zero_region_from_name(b_which), args);
            Document d = breakdown_doc("bound region", b, opt.precision);
            d.rows.insert(d.rows.begin(), text_row("which", b_which));
            opt.emit(d);
        });
    }

    {
        auto* sub = cmd_bound->add_subcommand("threshold", "solved validity threshold");
        sub->fallthrough();
        sub->add_option("--which", b_which,
                        "first-moment-zeta-log-x, first-moment-progression-log-x, "
                        "second-moment-zeta-log-x, second-moment-progression-log-x, "
                        "zero-free-x")
            ->required();
        sub->add_option("--q", b_q, "conductor (zero-free-x only)");
        sub->callback([&] {
            opt.apply_config();
            gbx::ThresholdKind kind = gbx::threshold_from_name(b_which);
            gbx::ThresholdResult r = gbx::threshold(kind, b_q);
            Document d;
            d.command = "bound threshold";
            d.rows.push_back(text_row("which", b_which));
            if (b_q != 0) d.rows.push_back(int_row("q", b_q));
            d.rows.push_back(real_row("value", r.value, opt.precision));
            if (r.w_branch != 0) {
                d.rows.push_back(text_row("w-branch", std::to_string(r.w_branch)));
                d.rows.push_back(real_row("w-argument", r.w_argument, opt.precision));
            }
            d.rows.push_back(real_row("residual", r.residual, opt.precision));
            const char* target_key =
                kind == gbx::ThresholdKind::first_moment_zeta_log_x ? "threshold.thm1_approx"
                : kind == gbx::ThresholdKind::first_moment_progression_log_x
                    ? "threshold.thm3_approx"
                    : nullptr;
            if (target_key)
                d.rows.push_back(real_row("target", gbx::Manifest::embedded().value(target_key),
                                          opt.precision, "manifest"));
            opt.emit(d);
        });
    }

    // ---- verify ----------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
    cmd_verify->require_subcommand(1);
    cmd_verify->fallthrough();
    static std::string v_which;
    static double v_T = 0;
    cmd_verify->add_option("--T", v_T, "explicit-formula truncation height (default 4e5)");

    auto make_config = [&] {
        gbx::VerifyConfig cfg;
        cfg.zeros_path = opt.zeros;
        cfg.sieve_limit = opt.sieve_limit;
        cfg.jobs = opt.jobs;
        if (v_T > 0) cfg.explicit_T = v_T;
        return cfg;
    };

    {
        auto* sub = cmd_verify->add_subcommand("all", "every registered check");
        sub->fallthrough();
        sub->callback([&] {
            opt.apply_config();
            gbx::VerifyRun run = gbx::run_all(make_config());
            if (opt.format == "json")
                opt.emit_raw(run.to_json());
            else if (opt.format == "csv")
                opt.emit_raw(run.to_csv());
            else
                opt.emit_raw(verify_table(run));
            if (!run.all_passed()) exit_code = 1;
        });
    }

    {
        auto* sub = cmd_verify->add_subcommand("one", "a single check by id");
        sub->fallthrough();
        sub->add_option("--which", v_which, "check id from the registry")->required();
        sub->callback([&] {
            opt.apply_config();
            gbx::CheckReport r = gbx::run_one(v_which, make_config());
            opt.emit(check_doc(r));
            if (r.status == gbx::CheckStatus::fail) exit_code = 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const gbx::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
