#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "galois_param.h"

namespace {

using Json = nlohmann::json;

struct Owned {
    char* s = nullptr;
    ~Owned() { gp_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

// inline JSON or a path to a file holding it
std::string slurp_arg(const std::string& arg) {
    std::ifstream in(arg);
    if (!in.good()) return arg;
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return text;
}

int report_error(int rc, const std::string& payload) {
    std::string msg = payload;
    try {
        msg = Json::parse(payload).at("error").at("message").get<std::string>();
    } catch (...) {
    }
    std::cerr << "error: " << msg << "\n";
    if (rc == GP_ERR_PARSE) {
        std::cerr << "run 'galois-param --help' for usage\n";
        return 64;
    }
    return 3;
}

int exit_for_verdict(int verdict) {
    switch (verdict) {
        case GP_VERDICT_ESTABLISHED:
        case GP_VERDICT_SUPPORTED: return 0;
        case GP_VERDICT_REFUTED: return 2;
        default: return 3;
    }
}

int deliver(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream out(output_path);
    if (!out.good()) {
        std::cerr << "error: cannot write " << output_path << "\n";
        return 3;
    }
    out << payload;
    if (payload.empty() || payload.back() != '\n') out << "\n";
    return 0;
}

// format: "" picks the per-subcommand default
bool text_mode(const std::string& format, bool default_text) {
    if (format == "json") return false;
    if (format == "text") return true;
    return default_text;
}

int run_case_all(bool as_text) {
    Owned ids;
    int rc = gp_case_ids(&ids.s);
    if (rc != GP_OK) return report_error(rc, ids.str());
    Json idlist = Json::parse(ids.str());
    Json bundle = Json::array();
    bool failed = false;
    for (const auto& id : idlist) {
        const std::string case_id = id.get<std::string>();
        Owned out;
        int verdict = -1;
        rc = gp_case(case_id.c_str(), nullptr, as_text ? 1 : 0, &out.s, &verdict);
        if (rc != GP_OK) {
            std::cerr << "case " << case_id << " failed: " << out.str() << "\n";
            failed = true;
            continue;
        }
        if (as_text)
            std::cout << out.str() << "\n";
        else
            bundle.push_back(Json::parse(out.str()));
    }
    if (!as_text) std::cout << bundle.dump(2) << "\n";
    return failed ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "galois-param: decides, certifies, or empirically supports "
        "non-parametricity of regular Galois extensions of Q(T)"};
    app.set_version_flag("--version", std::string("galois-param ") + gp_version());
    app.require_subcommand(1);
    app.footer(
        "Exit codes for check/case: 0 established or empirically supported, "
        "2 refuted, 3 inconclusive or operation error, 64 usage error.\n"
        "JSON arguments may be given inline or as a path to a file.\n"
        "GALOIS_PARAM_CAP overrides the group enumeration cap.");

    std::string format;
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // ---- build ----
    auto* build = app.add_subcommand("build", "construct an extension descriptor");
    build->require_subcommand(1);
    build->fallthrough();
    std::string output_path;
    build->add_option("-o,--output", output_path, "write the descriptor to a file");

    auto* b_sqrt = build->add_subcommand(
        "sqrt", "quadratic extension Q(T, sqrt(f)) from a radicand polynomial");
    b_sqrt->fallthrough();
    std::string radicand;
    b_sqrt->add_option("--radicand", radicand, "radicand polynomial (wire format)")
        ->required();

    auto* b_tri = build->add_subcommand(
        "trinomial", "degree-n trinomial family with symmetric group S_n");
    b_tri->fallthrough();
    long tri_n = 0, tri_m = 0, tri_q = -1, tri_s = -1;
    b_tri->add_option("--n", tri_n, "degree")->required();
    b_tri->add_option("--m", tri_m, "lower exponent, coprime to n")->required();
    b_tri->add_option("--q", tri_q, "T-exponent on the middle term (derived when absent)");
    b_tri->add_option("--s", tri_s, "T-exponent on the constant term (derived when absent)");

    auto* b_morse = build->add_subcommand("morse",
                                          "Galois closure of T = M(Y) for a Morse polynomial M");
    b_morse->fallthrough();
    std::string morse_poly;
    b_morse->add_option("--poly", morse_poly, "Morse polynomial M (wire format)")->required();

    auto* b_cyc = build->add_subcommand("cyclotomic",
                                        "cyclic degree-n extension ramified over the n-th "
                                        "cyclotomic polynomial");
    b_cyc->fallthrough();
    long cyc_n = 0;
    b_cyc->add_option("--n", cyc_n, "order of the cyclic group")->required();

    auto* b_manual = build->add_subcommand("manual", "validate a hand-written descriptor");
    b_manual->fallthrough();
    std::string manual_arg;
    b_manual->add_option("descriptor", manual_arg, "descriptor JSON or file")->required();

    // ---- specialize ----
    auto* spec = app.add_subcommand("specialize",
                                    "splitting data of the specialization at t0");
    spec->fallthrough();
    std::string spec_desc, spec_t0;
    unsigned long long census_bound = 0;
    spec->add_option("descriptor", spec_desc, "descriptor JSON or file")->required();
    spec->add_option("--t0", spec_t0, "specialization point, integer or p/q")->required();
    spec->add_option("--census-bound", census_bound,
                     "prime bound for the factorization pattern census (degree >= 5)");

    // ---- check ----
    auto* check = app.add_subcommand("check", "run one criterion against two descriptors");
    check->fallthrough();
    std::string criterion, e1_arg, e2_arg;
    unsigned long long prime_bound = 0;
    long min_witnesses = 0;
    check->add_option("--criterion", criterion,
                      "ih | bph | ic1 | ic2 | ic3 | bpc | ramvar | cor61")
        ->required()
        ->check(CLI::IsMember({"ih", "bph", "ic1", "ic2", "ic3", "bpc", "ramvar", "cor61"}));
    check->add_option("--e1", e1_arg, "descriptor under test (JSON or file)")->required();
    check->add_option("--e2", e2_arg, "comparison descriptor (unused by cor61)");
    check->add_option("--prime-bound", prime_bound, "sampling bound (default 10000)");
    check->add_option("--min-witnesses", min_witnesses,
                      "witness primes required for empirical support (default 10)");

    // ---- case ----
    auto* kase = app.add_subcommand("case", "run a worked case study ('all' runs every one)");
    kase->fallthrough();
    std::string case_id;
    std::vector<std::string> case_params;
    kase->add_option("id", case_id, "case id, or 'all'")->required();
    kase->add_option("params", case_params, "case parameters");

    // ---- group ----
    auto* group = app.add_subcommand("group", "order and class table of a finite group");
    group->fallthrough();
    std::string group_spec;
    group->add_option("group", group_spec,
                      "S<n>, A<n>, D<n>, Z<n>, V4, PSL2(<p>), or group JSON/file")
        ->required();

    // ---- primes ----
    auto* primes = app.add_subcommand("primes",
                                      "census of primes dividing some value of a polynomial");
    primes->fallthrough();
    std::string primes_poly;
    unsigned long long primes_bound = 0;
    primes->add_option("poly", primes_poly, "polynomial (wire format, or file)")->required();
    primes->add_option("--bound", primes_bound, "prime bound (default 10000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    if (build->parsed()) {
        std::string kind, params;
        if (b_sqrt->parsed()) {
            kind = "sqrt";
            params = std::string("{\"radicand\":") + slurp_arg(radicand) + "}";
        } else if (b_tri->parsed()) {
            kind = "trinomial";
            Json p{{"n", tri_n}, {"m", tri_m}};
            if (tri_q >= 0 || tri_s >= 0) {
                p["q"] = tri_q;
                p["s"] = tri_s;
            }
            params = p.dump();
        } else if (b_morse->parsed()) {
            kind = "morse";
            params = std::string("{\"poly\":") + slurp_arg(morse_poly) + "}";
        } else if (b_cyc->parsed()) {
            kind = "cyclotomic";
            params = Json{{"n", cyc_n}}.dump();
        } else {
            kind = "manual";
            params = slurp_arg(manual_arg);
        }
        Owned out;
        int rc = gp_build(kind.c_str(), params.c_str(), text_mode(format, false) ? 1 : 0,
                          &out.s);
        if (rc != GP_OK) return report_error(rc, out.str());
        return deliver(out.str(), output_path);
    }

    if (spec->parsed()) {
        Owned out;
        int rc = gp_specialize(spec_desc.c_str(), spec_t0.c_str(), census_bound,
                               text_mode(format, true) ? 1 : 0, &out.s);
        if (rc != GP_OK) return report_error(rc, out.str());
        return deliver(out.str(), "");
    }

    if (check->parsed()) {
        if (criterion != "cor61" && e2_arg.empty()) {
            std::cerr << "error: --e2 is required for criterion " << criterion << "\n";
            std::cerr << "run 'galois-param --help' for usage\n";
            return 64;
        }
        Owned out;
        int verdict = -1;
        int rc = gp_check(criterion.c_str(), e1_arg.c_str(),
                          e2_arg.empty() ? nullptr : e2_arg.c_str(), prime_bound,
                          min_witnesses, text_mode(format, false) ? 1 : 0, &out.s,
                          &verdict);
        if (rc != GP_OK) return report_error(rc, out.str());
        deliver(out.str(), "");
        return exit_for_verdict(verdict);
    }

    if (kase->parsed()) {
        const bool as_text = text_mode(format, true);
        if (case_id == "all") return run_case_all(as_text);
        Json params = Json::array();
        for (const std::string& p : case_params) params.push_back(p);
        Owned out;
        int verdict = -1;
        int rc = gp_case(case_id.c_str(), params.dump().c_str(), as_text ? 1 : 0, &out.s,
                         &verdict);
        if (rc != GP_OK) return report_error(rc, out.str());
        deliver(out.str(), "");
        return exit_for_verdict(verdict);
    }

    if (group->parsed()) {
        Owned out;
        int rc = gp_group_info(slurp_arg(group_spec).c_str(),
                               text_mode(format, true) ? 1 : 0, &out.s);
        if (rc != GP_OK) return report_error(rc, out.str());
        return deliver(out.str(), "");
    }

    if (primes->parsed()) {
        Owned out;
        int rc = gp_primes(slurp_arg(primes_poly).c_str(), primes_bound,
                           text_mode(format, true) ? 1 : 0, &out.s);
        if (rc != GP_OK) return report_error(rc, out.str());
        return deliver(out.str(), "");
    }

    std::cerr << "error: no subcommand\n";
    return 64;
}
