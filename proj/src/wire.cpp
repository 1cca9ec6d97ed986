#include "wire.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace galois {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const Json& need(const Json& j, const char* key, const char* ctx) {
    if (!j.is_object()) fail(std::string(ctx) + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string(ctx) + ": missing \"" + key + "\"");
    return *it;
}

const Json* opt(const Json& j, const char* key) {
    if (!j.is_object()) return nullptr;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::string str_from(const Json& j, const char* ctx) {
    if (!j.is_string()) fail(std::string(ctx) + ": expected a string");
    return j.get<std::string>();
}

bool bool_from(const Json& j, const char* ctx) {
    if (!j.is_boolean()) fail(std::string(ctx) + ": expected a boolean");
    return j.get<bool>();
}

long long_from(const Json& j, const char* ctx) {
    if (j.is_number_integer()) return j.get<long>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            std::size_t used = 0;
            long v = std::stol(s, &used);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
        fail(std::string(ctx) + ": \"" + s + "\" is not an integer");
    }
    fail(std::string(ctx) + ": expected an integer");
}

Int int_from(const Json& j, const char* ctx) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::exception&) {
            fail(std::string(ctx) + ": \"" + s + "\" is not an integer");
        }
    }
    fail(std::string(ctx) + ": expected an integer");
}

Rat rat_from(const Json& j, const char* ctx) {
    if (j.is_number_integer()) return Rat(Int(j.get<long>()));
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const Error& e) {
            fail(std::string(ctx) + ": " + e.what());
        }
    }
    fail(std::string(ctx) + ": expected an exact rational (string or integer)");
}

// emit element orders as plain numbers, big integers as decimal strings
Json int_to_json(const Int& n) {
    if (n.fits_slong_p()) return Json(n.get_si());
    return Json(n.get_str());
}

Json perm_to_json(const Perm& p) { return Json(p.images()); }

Perm perm_from_json(const Json& j, const char* ctx) {
    if (!j.is_array()) fail(std::string(ctx) + ": expected an image array");
    std::vector<int> images;
    images.reserve(j.size());
    for (const auto& v : j) images.push_back(static_cast<int>(long_from(v, ctx)));
    try {
        return Perm::from_images(images);
    } catch (const Error& e) {
        fail(std::string(ctx) + ": " + e.what());
    }
}

std::vector<int> lengths_from(const Json& j, const char* ctx) {
    if (!j.is_array() || j.empty())
        fail(std::string(ctx) + ": expected a nonempty array of cycle lengths");
    std::vector<int> lengths;
    lengths.reserve(j.size());
    for (const auto& v : j) lengths.push_back(static_cast<int>(long_from(v, ctx)));
    return lengths;
}

}  // namespace

Json poly_to_json(const RatPoly& p) {
    Json a = Json::array();
    if (p.is_zero()) {
        a.push_back("0");
        return a;
    }
    for (const Rat& c : p.coeffs()) a.push_back(rat_to_string(c));
    return a;
}

RatPoly poly_from_json(const Json& j) {
    if (!j.is_array()) fail("polynomial: expected an array of coefficients");
    std::vector<Rat> coeffs;
    coeffs.reserve(j.size());
    for (const auto& v : j) coeffs.push_back(rat_from(v, "polynomial coefficient"));
    return RatPoly::from_coeffs(std::move(coeffs));
}

Json group_to_json(const GroupRef& g) {
    Json j = Json::object();
    switch (g.kind) {
        case GroupRef::Kind::Sn:
            j["kind"] = "Sn";
            j["n"] = g.n;
            break;
        case GroupRef::Kind::An:
            j["kind"] = "An";
            j["n"] = g.n;
            break;
        case GroupRef::Kind::Psl2:
            j["kind"] = "psl2";
            j["p"] = g.n;
            break;
        case GroupRef::Kind::Explicit: {
            j["kind"] = "perm";
            j["degree"] = g.degree;
            Json gens = Json::array();
            for (const Perm& p : g.generators) gens.push_back(perm_to_json(p));
            j["generators"] = std::move(gens);
            if (!g.name.empty()) j["name"] = g.name;
            break;
        }
        case GroupRef::Kind::Abstract: {
            j["kind"] = "abstract";
            j["name"] = g.name;
            Json orders = Json::object();
            for (const auto& [cls, ord] : g.class_orders) orders[cls] = int_to_json(ord);
            j["class_orders"] = std::move(orders);
            if (g.order) j["order"] = g.order->get_str();
            break;
        }
    }
    return j;
}

GroupRef group_from_json(const Json& j) {
    const std::string kind = str_from(need(j, "kind", "group"), "group kind");
    GroupRef g;
    if (kind == "Sn" || kind == "An") {
        g.kind = kind == "Sn" ? GroupRef::Kind::Sn : GroupRef::Kind::An;
        g.n = static_cast<int>(long_from(need(j, "n", "group"), "group n"));
    } else if (kind == "psl2") {
        g.kind = GroupRef::Kind::Psl2;
        g.n = static_cast<int>(long_from(need(j, "p", "group"), "group p"));
    } else if (kind == "perm") {
        g.kind = GroupRef::Kind::Explicit;
        g.degree = static_cast<int>(long_from(need(j, "degree", "group"), "group degree"));
        const Json& gens = need(j, "generators", "group");
        if (!gens.is_array()) fail("group generators: expected an array");
        for (const auto& v : gens) g.generators.push_back(perm_from_json(v, "generator"));
        if (const Json* n = opt(j, "name")) g.name = str_from(*n, "group name");
    } else if (kind == "abstract") {
        g.kind = GroupRef::Kind::Abstract;
        g.name = str_from(need(j, "name", "abstract group"), "group name");
        const Json& orders = need(j, "class_orders", "abstract group");
        if (!orders.is_object()) fail("class_orders: expected an object");
        for (const auto& [cls, ord] : orders.items())
            g.class_orders[cls] = int_from(ord, "class order");
        if (const Json* o = opt(j, "order")) g.order = int_from(*o, "group order");
    } else {
        fail("group kind \"" + kind + "\" is not one of Sn, An, psl2, perm, abstract");
    }
    return g;
}

Json class_to_json(const ClassRef& c) {
    Json j = Json::object();
    switch (c.kind) {
        case ClassRef::Kind::CycleType:
            j["kind"] = "cycle_type";
            j["cycles"] = c.cycles.lengths;
            break;
        case ClassRef::Kind::AnType:
            j["kind"] = "an_type";
            j["cycles"] = c.cycles.lengths;
            j["split_tag"] = c.split_tag;
            break;
        case ClassRef::Kind::Abstract:
            j["kind"] = "abstract";
            j["name"] = c.name;
            j["order"] = int_to_json(c.order);
            break;
        case ClassRef::Kind::Explicit:
            j["kind"] = "explicit";
            j["representative"] = perm_to_json(*c.representative);
            if (!c.name.empty()) j["name"] = c.name;
            break;
    }
    return j;
}

ClassRef class_from_json(const Json& j) {
    const std::string kind = str_from(need(j, "kind", "class"), "class kind");
    ClassRef c;
    if (kind == "cycle_type") {
        c.kind = ClassRef::Kind::CycleType;
        c.cycles = CycleType::from_lengths(lengths_from(need(j, "cycles", "class"), "cycles"));
    } else if (kind == "an_type") {
        c.kind = ClassRef::Kind::AnType;
        c.cycles = CycleType::from_lengths(lengths_from(need(j, "cycles", "class"), "cycles"));
        if (const Json* t = opt(j, "split_tag")) {
            long tag = long_from(*t, "split_tag");
            if (tag < 0 || tag > 2) fail("split_tag must be 0, 1 or 2");
            c.split_tag = static_cast<int>(tag);
        }
    } else if (kind == "abstract") {
        c.kind = ClassRef::Kind::Abstract;
        c.name = str_from(need(j, "name", "abstract class"), "class name");
        if (const Json* o = opt(j, "order")) c.order = int_from(*o, "class order");
    } else if (kind == "explicit") {
        c.kind = ClassRef::Kind::Explicit;
        c.representative =
            perm_from_json(need(j, "representative", "explicit class"), "representative");
        if (const Json* n = opt(j, "name")) c.name = str_from(*n, "class name");
    } else {
        fail("class kind \"" + kind +
             "\" is not one of cycle_type, an_type, abstract, explicit");
    }
    return c;
}

Json field_to_json(const FieldInfo& f) {
    Json j = Json::object();
    j["kind"] = field_kind_name(f.kind);
    if (f.kind == FieldKind::AbstractHilbertian ||
        f.kind == FieldKind::AbstractDedekindFraction) {
        j["hilbertian"] = f.hilbertian;
        j["infinite_prime_divisors"] = f.infinite_prime_divisors;
    }
    return j;
}

FieldInfo field_from_json(const Json& j) {
    const std::string kind = str_from(need(j, "kind", "field"), "field kind");
    FieldKind k;
    if (kind == "Q")
        k = FieldKind::RationalsQ;
    else if (kind == "function_field_over_alg_closed")
        k = FieldKind::FunctionFieldOverAlgClosedChar0;
    else if (kind == "abstract_hilbertian")
        k = FieldKind::AbstractHilbertian;
    else if (kind == "abstract_dedekind")
        k = FieldKind::AbstractDedekindFraction;
    else
        fail("field kind \"" + kind +
             "\" is not one of Q, function_field_over_alg_closed, "
             "abstract_hilbertian, abstract_dedekind");
    FieldInfo f = make_field(k);
    if (k == FieldKind::AbstractHilbertian || k == FieldKind::AbstractDedekindFraction) {
        if (const Json* h = opt(j, "hilbertian")) {
            bool v = bool_from(*h, "hilbertian");
            if (k == FieldKind::AbstractHilbertian && !v)
                fail("an abstract_hilbertian field cannot assert hilbertian = false");
            f.hilbertian = v;
        }
        if (const Json* ipd = opt(j, "infinite_prime_divisors"))
            f.infinite_prime_divisors = bool_from(*ipd, "infinite_prime_divisors");
    }
    return f;
}

Json descriptor_to_json(const ExtensionDescriptor& e) {
    Json j = Json::object();
    j["label"] = e.label;
    j["group"] = group_to_json(e.group);
    j["field"] = field_to_json(e.field);
    Json orbits = Json::array();
    for (const BranchOrbit& o : e.orbits) {
        Json jo = Json::object();
        switch (o.kind) {
            case LocusKind::Finite: jo["locus"] = poly_to_json(o.locus); break;
            case LocusKind::AtZero: jo["locus"] = "zero"; break;
            case LocusKind::AtInfinity: jo["locus"] = "infinity"; break;
        }
        jo["class"] = class_to_json(o.cls);
        jo["ramification_index"] = o.ramification_index;
        jo["rational"] = o.rational;
        orbits.push_back(std::move(jo));
    }
    j["orbits"] = std::move(orbits);
    if (e.defining_poly) {
        Json rows = Json::array();
        for (const RatPoly& c : e.defining_poly->coeffs()) rows.push_back(poly_to_json(c));
        j["defining_poly"] = std::move(rows);
    }
    j["schematic_loci"] = e.schematic_loci;
    return j;
}

ExtensionDescriptor descriptor_from_json(const Json& j) {
    ExtensionDescriptor e;
    if (const Json* l = opt(j, "label")) e.label = str_from(*l, "label");
    e.group = group_from_json(need(j, "group", "descriptor"));
    e.field = field_from_json(need(j, "field", "descriptor"));
    const Json& orbits = need(j, "orbits", "descriptor");
    if (!orbits.is_array()) fail("orbits: expected an array");
    for (const auto& jo : orbits) {
        BranchOrbit o;
        const Json& locus = need(jo, "locus", "orbit");
        if (locus.is_string()) {
            const std::string s = locus.get<std::string>();
            if (s == "zero")
                o.kind = LocusKind::AtZero;
            else if (s == "infinity")
                o.kind = LocusKind::AtInfinity;
            else
                fail("orbit locus \"" + s + "\" is not \"zero\", \"infinity\" or an array");
        } else {
            o.kind = LocusKind::Finite;
            o.locus = poly_from_json(locus);
        }
        o.cls = class_from_json(need(jo, "class", "orbit"));
        o.ramification_index = static_cast<int>(
            long_from(need(jo, "ramification_index", "orbit"), "ramification_index"));
        // the "rational" flag is display data; validate_descriptor rederives it
        o.rational = false;
        e.orbits.push_back(std::move(o));
    }
    if (const Json* dp = opt(j, "defining_poly")) {
        if (!dp->is_array()) fail("defining_poly: expected an array of polynomials");
        std::vector<RatPoly> rows;
        rows.reserve(dp->size());
        for (const auto& row : *dp) rows.push_back(poly_from_json(row));
        e.defining_poly = BiPoly::from_coeffs(std::move(rows));
    }
    if (const Json* s = opt(j, "schematic_loci"))
        e.schematic_loci = bool_from(*s, "schematic_loci");
    validate_descriptor(e);
    return e;
}

Json verdict_to_json(const Verdict& v) {
    Json j = Json::object();
    j["kind"] = v.kind_name();
    j["detail"] = v.detail;
    if (v.kind == Verdict::Kind::EmpiricallySupported) {
        j["prime_bound"] = v.prime_bound;
        j["witness_count"] = v.witness_count();
        j["witnesses"] = v.witnesses;
    }
    return j;
}

Json report_to_json(const CriterionReport& r) {
    Json j = Json::object();
    j["criterion"] = r.criterion;
    Json conds = Json::array();
    for (const SubVerdict& sv : r.conditions) {
        Json c = Json::object();
        c["condition"] = sv.condition;
        c["verdict"] = verdict_to_json(sv.verdict);
        conds.push_back(std::move(c));
    }
    j["conditions"] = std::move(conds);
    j["overall"] = verdict_to_json(r.overall);
    j["trace"] = r.trace;
    return j;
}

Json case_report_to_json(const CaseReport& r) {
    Json j = Json::object();
    j["id"] = r.id;
    j["title"] = r.title;
    j["params"] = r.params;
    j["conclusion"] = verdict_to_json(r.conclusion);
    Json reports = Json::array();
    for (const CriterionReport& cr : r.reports) reports.push_back(report_to_json(cr));
    j["reports"] = std::move(reports);
    j["certificates"] = r.certificates;
    j["notes"] = r.notes;
    return j;
}

Json specialization_to_json(const SpecializationResult& s) {
    Json j = Json::object();
    j["t0"] = rat_to_string(s.t0);
    j["separable"] = s.separable;
    j["specialized"] = poly_to_json(s.specialized);
    if (s.quadratic_kernel) j["quadratic_kernel"] = s.quadratic_kernel->get_str();
    if (s.group_tag) j["group"] = galois_tag_name(*s.group_tag);
    if (s.totally_real) j["totally_real"] = *s.totally_real;
    if (s.census) {
        Json c = Json::object();
        c["bound"] = s.census->bound;
        c["primes_used"] = s.census->primes_used;
        Json patterns = Json::array();
        for (const auto& [pattern, count] : s.census->counts) {
            Json row = Json::object();
            row["pattern"] = pattern;
            row["count"] = count;
            patterns.push_back(std::move(row));
        }
        c["patterns"] = std::move(patterns);
        j["census"] = std::move(c);
    }
    return j;
}

Json census_to_json(const PrimeCensus& c) {
    auto row = [](const PrimeDivisorReport& r) {
        Json j = Json::object();
        j["prime"] = r.prime;
        switch (r.verdict) {
            case PrimeVerdict::Divisor: j["verdict"] = "divisor"; break;
            case PrimeVerdict::NonDivisor: j["verdict"] = "non_divisor"; break;
            case PrimeVerdict::Excluded: j["verdict"] = "excluded"; break;
        }
        if (r.witness) j["witness"] = *r.witness;
        if (!r.reason.empty()) j["reason"] = r.reason;
        return j;
    };
    Json j = Json::object();
    Json div = Json::array(), non = Json::array(), exc = Json::array();
    for (const auto& r : c.divisors) div.push_back(row(r));
    for (const auto& r : c.non_divisors) non.push_back(row(r));
    for (const auto& r : c.excluded) exc.push_back(row(r));
    j["divisors"] = std::move(div);
    j["non_divisors"] = std::move(non);
    j["excluded"] = std::move(exc);
    return j;
}

Json genus_to_json(const GenusBound& g) {
    Json j = Json::object();
    j["two_g"] = rat_to_string(g.two_g);
    j["g_min"] = g.g_min.get_str();
    return j;
}

Json group_info_to_json(const PermGroup& g) {
    Json j = Json::object();
    j["name"] = g.name();
    j["degree"] = g.degree();
    j["order"] = g.order();
    Json classes = Json::array();
    for (const auto& c : g.classes()) {
        Json row = Json::object();
        row["name"] = c.name;
        row["element_order"] = c.element_order;
        row["size"] = c.member_ids.size();
        row["representative"] = perm_to_json(c.rep);
        classes.push_back(std::move(row));
    }
    j["classes"] = std::move(classes);
    return j;
}

Json json_from_arg(const std::string& arg) {
    std::string text = arg;
    {
        std::ifstream in(arg);
        if (in.good()) {
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace galois
