#include "../include/galois_param.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "render.hpp"
#include "wire.hpp"

using namespace galois;

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

int finish_error(int code, const std::string& msg, char** out) {
    if (out) {
        Json j;
        j["error"] = Json{{"code", code}, {"message", msg}};
        *out = dup_string(j.dump(2));
    }
    return code;
}

// NonSeparableError is handled inside gp_specialize before these fire.
template <typename Fn>
int guarded(char** out, Fn&& fn) {
    if (out) *out = nullptr;
    try {
        return fn();
    } catch (const ParseError& e) {
        return finish_error(GP_ERR_PARSE, e.what(), out);
    } catch (const CapError& e) {
        return finish_error(GP_ERR_CAP, e.what(), out);
    } catch (const Error& e) {
        return finish_error(GP_ERR_DOMAIN, e.what(), out);
    } catch (const Json::exception& e) {
        return finish_error(GP_ERR_PARSE, e.what(), out);
    } catch (const std::exception& e) {
        return finish_error(GP_ERR_INTERNAL, e.what(), out);
    }
}

std::string require(const char* s, const char* what) {
    if (!s) throw ParseError(std::string(what) + " must not be NULL");
    return s;
}

int verdict_code(const Verdict& v) {
    switch (v.kind) {
        case Verdict::Kind::Established: return GP_VERDICT_ESTABLISHED;
        case Verdict::Kind::Refuted: return GP_VERDICT_REFUTED;
        case Verdict::Kind::EmpiricallySupported: return GP_VERDICT_SUPPORTED;
        case Verdict::Kind::Inconclusive: break;
    }
    return GP_VERDICT_INCONCLUSIVE;
}

ExtensionDescriptor descriptor_from_arg(const std::string& text) {
    return descriptor_from_json(json_from_arg(text));
}

int emit(const std::string& text, char** out) {
    if (out) *out = dup_string(text);
    return GP_OK;
}

long int_param(const Json& p, const char* key) {
    auto it = p.find(key);
    if (it == p.end() || !it->is_number_integer())
        throw ParseError(std::string("build parameter \"") + key +
                         "\" must be an integer");
    return it->get<long>();
}

// smallest s in [1, n] with s(n - m) = 1 mod n, and the matching q >= 0
std::pair<int, int> derive_trinomial_exponents(long n, long m) {
    if (n < 2 || m < 1 || m >= n)
        throw DomainError("trinomial exponents need 0 < m < n, n >= 2");
    for (long s = 1; s <= n; ++s) {
        if ((s * (n - m)) % n == 1 % n) {
            long q = (s * (n - m) - 1) / n;
            return {static_cast<int>(q), static_cast<int>(s)};
        }
    }
    throw DomainError("no exponent s with s(n - m) = 1 mod n: gcd(m, n) > 1");
}

PermGroup group_by_name(const std::string& raw) {
    std::string name;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '/') name += c;
    auto bad = [&]() -> PermGroup {
        throw ParseError("unknown group \"" + raw +
                         "\": use S<n>, A<n>, D<n>, Z<n>, V4, PSL2(<p>) or group JSON");
    };
    if (name.empty()) return bad();
    std::string upper;
    for (char c : name) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == "V4") return klein_four_group();
    if (upper.rfind("PSL2", 0) == 0) {
        std::string digits;
        for (char c : upper.substr(4))
            if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
        if (digits.empty()) return bad();
        return psl2_group(std::stoul(digits));
    }
    char kind = upper[0];
    std::string digits = upper.substr(1);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c))) return bad();
    if (digits.empty()) return bad();
    long n = std::stol(digits);
    switch (kind) {
        case 'S': return symmetric_group(static_cast<int>(n));
        case 'A': return alternating_group(static_cast<int>(n));
        case 'D': return dihedral_group(static_cast<int>(n));
        case 'Z': return cyclic_group(static_cast<int>(n));
        default: return bad();
    }
}

}  // namespace

extern "C" {

const char* gp_version(void) { return "0.1.0"; }

void gp_string_free(char* s) { std::free(s); }

int gp_build(const char* kind, const char* params_json, int as_text, char** out) {
    return guarded(out, [&]() -> int {
        const std::string k = require(kind, "kind");
        Json p = json_from_arg(require(params_json, "params"));
        if (!p.is_object()) throw ParseError("build parameters: expected a JSON object");
        ExtensionDescriptor e;
        if (k == "sqrt") {
            auto it = p.find("radicand");
            if (it == p.end()) throw ParseError("build sqrt: missing \"radicand\"");
            e = builder_quadratic_sqrt(poly_from_json(*it));
        } else if (k == "trinomial") {
            long n = int_param(p, "n");
            long m = int_param(p, "m");
            long q, s;
            if (p.contains("q") || p.contains("s")) {
                q = int_param(p, "q");
                s = int_param(p, "s");
            } else {
                auto [dq, ds] = derive_trinomial_exponents(n, m);
                q = dq;
                s = ds;
            }
            e = builder_trinomial(static_cast<int>(n), static_cast<int>(m),
                                  static_cast<int>(q), static_cast<int>(s));
        } else if (k == "morse") {
            auto it = p.find("poly");
            if (it == p.end()) throw ParseError("build morse: missing \"poly\"");
            e = builder_morse(poly_from_json(*it));
        } else if (k == "cyclotomic") {
            e = builder_cyclic_cyclotomic(static_cast<int>(int_param(p, "n")));
        } else if (k == "manual") {
            e = descriptor_from_json(p);
        } else {
            throw ParseError("build kind \"" + k +
                             "\" is not one of sqrt, trinomial, morse, cyclotomic, manual");
        }
        return emit(as_text ? render_text(e) : descriptor_to_json(e).dump(2), out);
    });
}

int gp_specialize(const char* descriptor_json, const char* t0,
                  unsigned long long census_bound, int as_text, char** out) {
    return guarded(out, [&]() -> int {
        ExtensionDescriptor e = descriptor_from_arg(require(descriptor_json, "descriptor"));
        Rat t = parse_rat(require(t0, "t0"));
        try {
            SpecializationResult s = specialize(e, t, census_bound ? census_bound : 300);
            return emit(as_text ? render_text(s) : specialization_to_json(s).dump(2), out);
        } catch (const NonSeparableError& ns) {
            if (as_text)
                return emit("specialization at t0 = " + rat_to_string(ns.t0) +
                                "\n  separable: no (" + ns.what() + ")\n",
                            out);
            Json j;
            j["t0"] = rat_to_string(ns.t0);
            j["separable"] = false;
            j["reason"] = ns.what();
            return emit(j.dump(2), out);
        }
    });
}

int gp_check(const char* criterion, const char* e1_json, const char* e2_json,
             unsigned long long prime_bound, long min_witnesses, int as_text,
             char** out, int* out_verdict) {
    return guarded(out, [&]() -> int {
        const std::string c = require(criterion, "criterion");
        ExtensionDescriptor e1 = descriptor_from_arg(require(e1_json, "e1"));
        const std::uint64_t bound = prime_bound ? prime_bound : 10000;
        const long minw = min_witnesses > 0 ? min_witnesses : 10;
        CriterionReport rep;
        if (c == "cor61") {
            rep = eval_cor61(e1);
        } else {
            ExtensionDescriptor e2 = descriptor_from_arg(require(e2_json, "e2"));
            if (c == "ih") {
                rep = eval_inertia_hypothesis(e1, e2);
            } else if (c == "bph") {
                rep = eval_branch_point_hypothesis(e1, e2, bound, minw);
            } else if (c == "ic1" || c == "ic2" || c == "ic3") {
                rep = eval_inertia_criterion(c[2] - '0', e1, e2);
            } else if (c == "bpc") {
                rep = eval_branch_point_criterion(e1, e2, bound, minw);
            } else if (c == "ramvar") {
                Verdict v = eval_ramification_variant(e1, e2);
                rep.criterion = "RAMVAR";
                rep.conditions.push_back({"(RAMVAR)", v});
                rep.overall = v;
            } else {
                throw ParseError("criterion \"" + c +
                                 "\" is not one of ih, bph, ic1, ic2, ic3, bpc, "
                                 "ramvar, cor61");
            }
        }
        if (out_verdict) *out_verdict = verdict_code(rep.overall);
        return emit(as_text ? render_text(rep) : report_to_json(rep).dump(2), out);
    });
}

int gp_case(const char* case_id, const char* params_json, int as_text, char** out,
            int* out_verdict) {
    return guarded(out, [&]() -> int {
        const std::string id = require(case_id, "case id");
        std::vector<std::string> params;
        if (params_json && *params_json) {
            Json p = json_from_arg(params_json);
            if (!p.is_array()) throw ParseError("case parameters: expected a JSON array");
            for (const auto& v : p) {
                if (v.is_string())
                    params.push_back(v.get<std::string>());
                else if (v.is_number_integer())
                    params.push_back(std::to_string(v.get<long long>()));
                else
                    throw ParseError("case parameters must be strings or integers");
            }
        }
        CaseReport r = run_case_study(id, params);
        if (out_verdict) *out_verdict = verdict_code(r.conclusion);
        return emit(as_text ? render_text(r) : case_report_to_json(r).dump(2), out);
    });
}

int gp_case_ids(char** out) {
    return guarded(out, [&]() -> int {
        Json j = Json::array();
        for (const std::string& id : case_ids()) j.push_back(id);
        return emit(j.dump(), out);
    });
}

int gp_group_info(const char* group_spec, int as_text, char** out) {
    return guarded(out, [&]() -> int {
        std::string s = require(group_spec, "group");
        std::size_t first = s.find_first_not_of(" \t\r\n");
        PermGroup g = (first != std::string::npos && s[first] == '{') ||
                              s.find(".json") != std::string::npos
                          ? realize(group_from_json(json_from_arg(s)))
                          : group_by_name(s);
        return emit(as_text ? render_text(g) : group_info_to_json(g).dump(2), out);
    });
}

int gp_primes(const char* poly_json, unsigned long long bound, int as_text,
              char** out) {
    return guarded(out, [&]() -> int {
        RatPoly p = poly_from_json(json_from_arg(require(poly_json, "polynomial")));
        PrimeCensus c = prime_divisor_census(p, bound ? bound : 10000);
        return emit(as_text ? render_text(c) : census_to_json(c).dump(2), out);
    });
}

}  // extern "C"
