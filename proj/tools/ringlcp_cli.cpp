// ringlcp command-line tool. Talks to the core exclusively through the C
// interface in ringlcp.h; everything below is argument plumbing and
// presentation.
//
// Exit codes: 0 = a report was produced (verdicts, including "no" and
// refutations, are data); 1 = usage, configuration, or budget error;
// 2 = the library detected an internal inconsistency.
#include <ringlcp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

using nlohmann::ordered_json;

namespace {

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(int exit_code, const std::string& message) {
    throw CliError{exit_code, message};
}

[[noreturn]] void die_status(int status) {
    die(status == RINGLCP_EINTERNAL ? 2 : 1, ringlcp_last_error());
}

void check(int status) {
    if (status != RINGLCP_OK) die_status(status);
}

struct RingDeleter {
    void operator()(ringlcp_ring* r) const { ringlcp_ring_free(r); }
};
struct CodeDeleter {
    void operator()(ringlcp_code* c) const { ringlcp_code_free(c); }
};
using RingHandle = std::unique_ptr<ringlcp_ring, RingDeleter>;
using CodeHandle = std::unique_ptr<ringlcp_code, CodeDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    ringlcp_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(1, "cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool preset_shaped(const std::string& text) {
    if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
    size_t i = 1;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
    return i < text.size() && text[i] == '(' && text.back() == ')';
}

RingHandle load_ring(const std::string& ref) {
    ringlcp_ring* r = nullptr;
    if (preset_shaped(ref)) {
        check(ringlcp_ring_from_preset(ref.c_str(), &r));
    } else {
        std::string text = read_file(ref);
        check(ringlcp_ring_from_spec(text.c_str(), ref.c_str(), &r));
    }
    return RingHandle(r);
}

CodeHandle load_code(const ringlcp_ring* ring, const std::string& path) {
    std::string text = read_file(path);
    ringlcp_code* c = nullptr;
    check(ringlcp_code_from_spec(ring, text.c_str(), path.c_str(), &c));
    return CodeHandle(c);
}

// ---- budget flags ---------------------------------------------------------

struct BudgetFlags {
    std::optional<uint64_t> scan_cap, distance_cap, sample, seed;
    std::optional<int> threads;
    bool timings = false;

    /// JSON carrying only the explicitly set flags, so that environment
    /// defaults (RINGLCP_BUDGET, RINGLCP_THREADS) stay in force otherwise.
    std::string to_json() const {
        ordered_json j = ordered_json::object();
        if (scan_cap) j["scan_cap"] = *scan_cap;
        if (distance_cap) j["distance_cap"] = *distance_cap;
        if (sample) {
            j["sampling"] = true;
            j["sample_count"] = *sample;
        }
        if (seed) j["seed"] = *seed;
        if (threads) j["threads"] = *threads;
        if (timings) j["timings"] = true;
        return j.empty() ? std::string() : j.dump();
    }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& b) {
    cmd->add_option("--scan-cap", b.scan_cap,
                    "cap on |R|^n for exhaustive vector scans");
    cmd->add_option("--distance-cap", b.distance_cap,
                    "cap on codeword enumerations for distances");
    cmd->add_option("--sample", b.sample,
                    "sample count for one-sided randomized scans");
    cmd->add_option("--seed", b.seed, "seed for randomized scans");
    cmd->add_option("--threads", b.threads, "worker threads (0 = auto)");
    cmd->add_flag("--timings", b.timings, "attach per-criterion timings");
}

// ---- human rendering ------------------------------------------------------

std::string vec_text(const ordered_json& arr) {
    std::string out = "(";
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i) out += ", ";
        out += arr[i].get<std::string>();
    }
    return out + ")";
}

void print_criterion(const ordered_json& c, int indent) {
    std::string pad(indent, ' ');
    std::ostringstream line;
    line << pad << c["criterion"].get<std::string>() << ": "
         << c["verdict"].get<std::string>();
    if (c.contains("timing_ms"))
        line << "  [" << c["timing_ms"].get<double>() << " ms]";
    std::cout << line.str() << "\n";
    if (!c["preconditions"].empty()) {
        std::cout << pad << "  gates:";
        for (const auto& [name, ok] : c["preconditions"].items())
            std::cout << " " << name << "=" << (ok.get<bool>() ? "yes" : "no");
        std::cout << "\n";
    }
    if (c.contains("witness"))
        std::cout << pad << "  witness: " << vec_text(c["witness"]["vector"]) << "\n";
    if (c.contains("note"))
        std::cout << pad << "  note: " << c["note"].get<std::string>() << "\n";
}

void print_lcp_report(const ordered_json& j) {
    std::cout << "ring: " << j["ring"].get<std::string>() << "\n";
    for (const auto& c : j["criteria"]) {
        print_criterion(c, 0);
        if (c.contains("slots")) {
            std::cout << "  cardinality_ok: "
                      << (c["cardinality_ok"].get<bool>() ? "yes" : "no")
                      << ", disjoint: " << (c["disjoint"].get<bool>() ? "yes" : "no")
                      << "\n";
            for (const auto& s : c["slots"]) print_criterion(s, 2);
        }
    }
    std::cout << "consistent: " << (j["consistent"].get<bool>() ? "yes" : "no") << "\n";
    if (j["security"].is_object()) {
        std::cout << "security: d(C) = " << j["security"]["d_C"].get<int>()
                  << ", d(D-dual) = " << j["security"]["d_D_dual"].get<int>() << "\n";
    } else {
        std::cout << "security: not applicable\n";
    }
}

void print_ring_info(const ordered_json& j) {
    std::cout << "name: " << j["name"].get<std::string>() << "\n"
              << "field: q = " << j["field"]["q"].get<int>() << " (p = "
              << j["field"]["p"].get<int>() << ", m = " << j["field"]["m"].get<int>()
              << ")\n"
              << "dim: " << j["dim"].get<int>() << "\n"
              << "size: " << j["size"].get<std::string>() << "\n"
              << "commutative: " << (j["commutative"].get<bool>() ? "yes" : "no") << "\n"
              << "local: " << (j["local"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "jacobson radical: dim " << j["jacobson"]["dim"].get<int>()
              << ", nilpotency index " << j["jacobson"]["nilpotency_index"].get<int>();
    if (!j["jacobson"]["basis"].empty()) {
        std::cout << ", basis {";
        for (size_t i = 0; i < j["jacobson"]["basis"].size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << j["jacobson"]["basis"][i].get<std::string>();
        }
        std::cout << "}";
    }
    std::cout << "\n";
    std::cout << "socle: right dim " << j["socle"]["right_dim"].get<int>()
              << ", left dim " << j["socle"]["left_dim"].get<int>() << "\n";
    std::cout << "residue map: "
              << (j["residue"]["map_available"].get<bool>() ? "available" : "unavailable")
              << ", dim R/J = " << j["residue"]["dim_residue"].get<int>() << "\n";
    if (j["unit_count"].is_null())
        std::cout << "units: not enumerated (budget)\n";
    else
        std::cout << "units: " << j["unit_count"].get<uint64_t>() << "\n";
    std::cout << "frobenius necessary conditions: "
              << (j["frobenius_necessary"]["passed"].get<bool>() ? "passed" : "failed")
              << "\n";
}

void print_matrix(const ordered_json& rows, const std::string& label) {
    std::cout << label << ":\n";
    for (const auto& row : rows) std::cout << "  " << vec_text(row) << "\n";
}

void print_equivalence(const ordered_json& j) {
    std::cout << "kind: " << j["kind"].get<std::string>() << "\n";
    if (j["kind"] != "none-within-budget" && j["kind"] != "set-equal") {
        std::cout << "sigma: [";
        for (size_t i = 0; i < j["permutation"].size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << j["permutation"][i].get<int>();
        }
        std::cout << "]\nscalars: " << vec_text(j["scalars"]) << "\n";
    }
    std::cout << "checked basis size: " << j["checked_basis_size"].get<int>() << "\n";
}

// ---- subcommand bodies ----------------------------------------------------

struct CommonArgs {
    std::string ring_ref, c_path, d_path;
    BudgetFlags budget;
    bool json = false;
};

int cmd_ring_info(const CommonArgs& args) {
    RingHandle ring = load_ring(args.ring_ref);
    char* out = nullptr;
    check(ringlcp_ring_info_json(ring.get(), args.budget.to_json().c_str(), &out));
    std::string report = take_string(out);
    if (args.json)
        std::cout << report << "\n";
    else
        print_ring_info(ordered_json::parse(report));
    return 0;
}

int cmd_check_lcp(const CommonArgs& args, const std::string& methods) {
    RingHandle ring = load_ring(args.ring_ref);
    CodeHandle c = load_code(ring.get(), args.c_path);
    CodeHandle d = load_code(ring.get(), args.d_path);
    char* out = nullptr;
    check(ringlcp_check_lcp_json(c.get(), d.get(), methods.c_str(),
                                 args.budget.to_json().c_str(), &out));
    std::string report = take_string(out);
    auto j = ordered_json::parse(report);
    if (args.json)
        std::cout << report << "\n";
    else
        print_lcp_report(j);
    return j["consistent"].get<bool>() ? 0 : 2;
}

int cmd_dual(const CommonArgs& args) {
    RingHandle ring = load_ring(args.ring_ref);
    CodeHandle c = load_code(ring.get(), args.c_path);
    char* out = nullptr;
    check(ringlcp_dual_json(c.get(), args.budget.to_json().c_str(), &out));
    std::string report = take_string(out);
    if (args.json) {
        std::cout << report << "\n";
    } else {
        auto j = ordered_json::parse(report);
        std::cout << "n: " << j["n"].get<int>() << "\nside: "
                  << j["side"].get<std::string>() << "\ndim: " << j["dim"].get<int>()
                  << "\ncardinality: " << j["cardinality"].get<std::string>() << "\n";
        print_matrix(j["generators"], "generators");
        if (j["min_distance"].is_null())
            std::cout << "min distance: not computed\n";
        else
            std::cout << "min distance: " << j["min_distance"].get<int>() << "\n";
    }
    return 0;
}

int cmd_min_distance(const CommonArgs& args) {
    RingHandle ring = load_ring(args.ring_ref);
    CodeHandle c = load_code(ring.get(), args.c_path);
    int dist = 0;
    check(ringlcp_min_distance(c.get(), args.budget.to_json().c_str(), &dist));
    if (args.json)
        std::cout << ordered_json{{"min_distance", dist}}.dump() << "\n";
    else
        std::cout << "min distance: " << dist << "\n";
    return 0;
}

int cmd_security(const CommonArgs& args) {
    RingHandle ring = load_ring(args.ring_ref);
    CodeHandle c = load_code(ring.get(), args.c_path);
    CodeHandle d = load_code(ring.get(), args.d_path);
    char* out = nullptr;
    check(ringlcp_security_json(c.get(), d.get(), args.budget.to_json().c_str(), &out));
    std::string report = take_string(out);
    if (args.json) {
        std::cout << report << "\n";
    } else {
        auto j = ordered_json::parse(report);
        std::cout << "d(C) = " << j["d_C"].get<int>()
                  << ", d(D-dual) = " << j["d_D_dual"].get<int>() << "\n";
    }
    return 0;
}

int cmd_idempotent(const CommonArgs& args) {
    RingHandle ring = load_ring(args.ring_ref);
    CodeHandle c = load_code(ring.get(), args.c_path);
    CodeHandle d = load_code(ring.get(), args.d_path);
    char* out = nullptr;
    check(ringlcp_idempotent_json(c.get(), d.get(), args.budget.to_json().c_str(), &out));
    std::string report = take_string(out);
    if (args.json) {
        std::cout << report << "\n";
    } else {
        auto j = ordered_json::parse(report);
        print_matrix(j["e"], "e (row convention)");
        print_matrix(j["E"], "E = e^T (projection onto C along D)");
        std::cout << "e * e = e: " << (j["e_squared"].get<bool>() ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_equivalence(const CommonArgs& args) {
    RingHandle ring = load_ring(args.ring_ref);
    CodeHandle c = load_code(ring.get(), args.c_path);
    CodeHandle d = load_code(ring.get(), args.d_path);
    char* out = nullptr;
    check(ringlcp_equivalence_json(c.get(), d.get(), args.budget.to_json().c_str(), &out));
    std::string report = take_string(out);
    if (args.json)
        std::cout << report << "\n";
    else
        print_equivalence(ordered_json::parse(report));
    return 0;
}

int cmd_reproduce(const BudgetFlags& budget, const std::string& examples,
                  const std::string& q_sweep, bool json) {
    char* out = nullptr;
    if (json) {
        check(ringlcp_reproduce_json(examples.c_str(), q_sweep.c_str(),
                                     budget.to_json().c_str(), &out));
    } else {
        check(ringlcp_reproduce_text(examples.c_str(), q_sweep.c_str(),
                                     budget.to_json().c_str(), &out));
    }
    std::string report = take_string(out);
    std::cout << report;
    if (json) std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear complementary pairs of codes over finite rings"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string methods = "all";
    std::string examples = "all";
    std::string q_sweep;

    auto add_ring = [&](CLI::App* cmd) {
        cmd->add_option("ring", args.ring_ref, "ring preset like ut2(3) or config file")
            ->required();
    };
    auto add_pair = [&](CLI::App* cmd) {
        add_ring(cmd);
        cmd->add_option("C", args.c_path, "first code config file")->required();
        cmd->add_option("D", args.d_path, "second code config file")->required();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", args.json, "emit the JSON report");
        add_budget_flags(cmd, args.budget);
    };

    CLI::App* ring_info = app.add_subcommand("ring-info", "structural report on a ring");
    add_ring(ring_info);
    add_common(ring_info);

    CLI::App* check_lcp =
        app.add_subcommand("check-lcp", "run the complementary-pair criteria");
    add_pair(check_lcp);
    check_lcp->add_option(
        "--methods", methods,
        "comma list: definition, pi_reduction, parity_product, generator_stack, "
        "structural, injective_hull (default: all)");
    add_common(check_lcp);

    CLI::App* dual = app.add_subcommand("dual", "dual (left annihilator) of a code");
    add_ring(dual);
    dual->add_option("C", args.c_path, "code config file")->required();
    add_common(dual);

    CLI::App* mind = app.add_subcommand("min-distance", "minimum Hamming distance");
    add_ring(mind);
    mind->add_option("C", args.c_path, "code config file")->required();
    add_common(mind);

    CLI::App* security =
        app.add_subcommand("security", "security parameters (d(C), d(D-dual))");
    add_pair(security);
    add_common(security);

    CLI::App* idem = app.add_subcommand(
        "idempotent", "projection idempotent of a complementary pair");
    add_pair(idem);
    add_common(idem);

    CLI::App* equivalence =
        app.add_subcommand("equivalence", "coordinate-equivalence search");
    add_pair(equivalence);
    add_common(equivalence);

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "re-evaluate the bundled worked examples");
    reproduce->add_option("--examples", examples, "comma list of example ids or 'all'");
    reproduce->add_option("--q-sweep", q_sweep, "comma list of field sizes for the sweep");
    add_common(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (ring_info->parsed()) return cmd_ring_info(args);
        if (check_lcp->parsed()) return cmd_check_lcp(args, methods);
        if (dual->parsed()) return cmd_dual(args);
        if (mind->parsed()) return cmd_min_distance(args);
        if (security->parsed()) return cmd_security(args);
        if (idem->parsed()) return cmd_idempotent(args);
        if (equivalence->parsed()) return cmd_equivalence(args);
        if (reproduce->parsed())
            return cmd_reproduce(args.budget, examples, q_sweep, args.json);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    }
    return 1;
}
