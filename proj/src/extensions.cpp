#include "extensions.hpp"

#include <numeric>
#include <utility>

#include "common.hpp"
#include "numbertheory.hpp"

namespace galois {

FieldInfo make_field(FieldKind kind) {
    FieldInfo f;
    f.kind = kind;
    switch (kind) {
        case FieldKind::RationalsQ:
        case FieldKind::FunctionFieldOverAlgClosedChar0:
            f.hilbertian = true;
            f.infinite_prime_divisors = true;
            break;
        case FieldKind::AbstractHilbertian:
            f.hilbertian = true;
            f.infinite_prime_divisors = false;
            break;
        case FieldKind::AbstractDedekindFraction:
            f.hilbertian = false;
            f.infinite_prime_divisors = false;
            break;
    }
    return f;
}

std::string field_kind_name(FieldKind kind) {
    switch (kind) {
        case FieldKind::RationalsQ: return "Q";
        case FieldKind::FunctionFieldOverAlgClosedChar0: return "function_field_over_alg_closed";
        case FieldKind::AbstractHilbertian: return "abstract_hilbertian";
        case FieldKind::AbstractDedekindFraction: return "abstract_dedekind";
    }
    return "?";
}

Int group_order(const GroupRef& g) {
    switch (g.kind) {
        case GroupRef::Kind::Sn: {
            Int f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(g.n));
            return f;
        }
        case GroupRef::Kind::An: {
            Int f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(g.n));
            return f / 2;
        }
        case GroupRef::Kind::Explicit:
            return Int(realize(g).order());
        case GroupRef::Kind::Psl2: {
            Int p(g.n);
            return p * (p * p - 1) / 2;
        }
        case GroupRef::Kind::Abstract:
            if (g.order) return *g.order;
            throw DomainError("abstract group " + g.name + " has unknown order");
    }
    throw Error("unreachable");
}

PermGroup realize(const GroupRef& g) {
    switch (g.kind) {
        case GroupRef::Kind::Sn: return symmetric_group(g.n);
        case GroupRef::Kind::An: return alternating_group(g.n);
        case GroupRef::Kind::Explicit:
            return PermGroup::from_generators(g.degree, g.generators, g.name);
        case GroupRef::Kind::Psl2: return psl2_group(static_cast<std::uint64_t>(g.n));
        case GroupRef::Kind::Abstract:
            throw DomainError("abstract group " + g.name + " has no permutation realization");
    }
    throw Error("unreachable");
}

std::string group_name(const GroupRef& g) {
    switch (g.kind) {
        case GroupRef::Kind::Sn: return "S" + std::to_string(g.n);
        case GroupRef::Kind::An: return "A" + std::to_string(g.n);
        case GroupRef::Kind::Explicit:
            return g.name.empty() ? "G<" + std::to_string(g.degree) + "pts>" : g.name;
        case GroupRef::Kind::Psl2: return "PSL2(" + std::to_string(g.n) + ")";
        case GroupRef::Kind::Abstract: return g.name;
    }
    return "?";
}

std::string ClassRef::str() const {
    switch (kind) {
        case Kind::CycleType: return cycles.str();
        case Kind::AnType:
            return cycles.str() + (split_tag ? "#" + std::to_string(split_tag) : "");
        case Kind::Abstract: return name;
        case Kind::Explicit: return representative ? representative->str() : "{}";
    }
    return "?";
}

Int class_order(const ClassRef& c) {
    switch (c.kind) {
        case ClassRef::Kind::CycleType:
        case ClassRef::Kind::AnType:
            return Int(c.cycles.element_order());
        case ClassRef::Kind::Abstract:
            if (sgn(c.order) > 0) return c.order;
            throw DomainError("class " + c.name + " has unknown order");
        case ClassRef::Kind::Explicit:
            if (c.representative) return Int(c.representative->order());
            throw DomainError("explicit class without representative");
    }
    throw Error("unreachable");
}

namespace {

void check_class_vocabulary(const GroupRef& g, ClassRef& c, const PermGroup* psl) {
    using GK = GroupRef::Kind;
    using CK = ClassRef::Kind;
    switch (g.kind) {
        case GK::Sn:
            if (c.kind == CK::AnType)
                throw DomainError("split class tags are alternating-group data");
            if (c.kind == CK::Abstract)
                throw DomainError("symmetric group classes are cycle types");
            if (c.kind == CK::CycleType && c.cycles.degree() != g.n)
                throw DomainError("cycle type " + c.cycles.str() + " has wrong degree for S" +
                                  std::to_string(g.n));
            if (c.kind == CK::Explicit &&
                (!c.representative || c.representative->degree() != g.n))
                throw DomainError("class representative does not act on " + std::to_string(g.n) +
                                  " points");
            break;
        case GK::An:
            if (c.kind == CK::Abstract)
                throw DomainError("alternating group classes are cycle types");
            if (c.kind == CK::CycleType || c.kind == CK::AnType) {
                if (c.cycles.degree() != g.n)
                    throw DomainError("cycle type " + c.cycles.str() + " has wrong degree for A" +
                                      std::to_string(g.n));
                if (!c.cycles.even())
                    throw DomainError("odd cycle type " + c.cycles.str() +
                                      " in an alternating group");
            }
            if (c.kind == CK::AnType) {
                if (c.split_tag < 0 || c.split_tag > 2)
                    throw DomainError("split tag out of range");
                if (c.split_tag != 0 && !an_class_splits(c.cycles))
                    throw DomainError("class " + c.cycles.str() + " does not split, tag is void");
            }
            if (c.kind == CK::Explicit) {
                if (!c.representative || c.representative->degree() != g.n)
                    throw DomainError("class representative does not act on " +
                                      std::to_string(g.n) + " points");
                if (!c.representative->is_even())
                    throw DomainError("odd representative in an alternating group");
            }
            break;
        case GK::Explicit:
            if (c.kind == CK::CycleType) {
                if (c.cycles.degree() != g.degree)
                    throw DomainError("cycle type degree mismatch");
            } else if (c.kind == CK::Explicit) {
                if (!c.representative || c.representative->degree() != g.degree)
                    throw DomainError("class representative degree mismatch");
            } else {
                throw DomainError("explicit group classes are cycle types or representatives");
            }
            break;
        case GK::Psl2: {
            if (c.kind != CK::Abstract || c.name.empty())
                throw DomainError("psl2 classes are referenced by name");
            int idx = psl->class_index_by_name(c.name);
            if (idx < 0)
                throw DomainError("no class named " + c.name + " in " + group_name(g));
            Int real_order(psl->classes()[static_cast<size_t>(idx)].element_order);
            if (sgn(c.order) > 0 && c.order != real_order)
                throw DomainError("declared order of class " + c.name + " is wrong");
            c.order = real_order;
            break;
        }
        case GK::Abstract:
            if (c.kind != CK::Abstract || c.name.empty())
                throw DomainError("abstract group classes are referenced by name");
            if (!g.class_orders.empty()) {
                auto it = g.class_orders.find(c.name);
                if (it == g.class_orders.end())
                    throw DomainError("class " + c.name + " not among the declared classes of " +
                                      g.name);
                if (sgn(c.order) > 0 && c.order != it->second)
                    throw DomainError("class order conflict for " + c.name);
                c.order = it->second;
            }
            if (sgn(c.order) <= 0)
                throw DomainError("abstract class " + c.name + " needs an element order");
            break;
    }
}

}  // namespace

void validate_descriptor(ExtensionDescriptor& e) {
    using GK = GroupRef::Kind;
    switch (e.group.kind) {
        case GK::Sn:
            if (e.group.n < 1) throw DomainError("symmetric group needs n >= 1");
            break;
        case GK::An:
            if (e.group.n < 3) throw DomainError("alternating group needs n >= 3");
            break;
        case GK::Explicit:
            if (e.group.degree < 1 || e.group.generators.empty())
                throw DomainError("explicit group needs a degree and generators");
            for (const Perm& p : e.group.generators)
                if (p.degree() != e.group.degree)
                    throw DomainError("generator degree mismatch");
            break;
        case GK::Psl2:
            if (e.group.n < 5 || !is_prime_u64(static_cast<std::uint64_t>(e.group.n)))
                throw DomainError("psl2 needs a prime p >= 5");
            break;
        case GK::Abstract:
            if (e.group.name.empty()) throw DomainError("abstract group needs a name");
            break;
    }
    std::optional<PermGroup> psl;
    if (e.group.kind == GK::Psl2)
        psl.emplace(psl2_group(static_cast<std::uint64_t>(e.group.n)));

    int nzero = 0, ninf = 0;
    std::vector<RatPoly> seen;
    for (BranchOrbit& orb : e.orbits) {
        check_class_vocabulary(e.group, orb.cls, psl ? &*psl : nullptr);
        if (orb.ramification_index < 2)
            throw DomainError("ramification index must be at least 2");
        if (class_order(orb.cls) != orb.ramification_index)
            throw DomainError("ramification index " + std::to_string(orb.ramification_index) +
                              " does not match the order of class " + orb.cls.str());
        switch (orb.kind) {
            case LocusKind::AtZero:
                ++nzero;
                orb.rational = true;
                break;
            case LocusKind::AtInfinity:
                ++ninf;
                orb.rational = true;
                break;
            case LocusKind::Finite: {
                if (orb.locus.degree() < 1)
                    throw DomainError("finite orbit needs a nonconstant locus");
                orb.locus = orb.locus.monic();
                for (const RatPoly& s : seen)
                    if (s == orb.locus) throw DomainError("duplicate branch orbit locus");
                seen.push_back(orb.locus);
                orb.rational = orb.locus.degree() == 1;
                Factorization fac = factor_rational(orb.locus);
                if (fac.complete && fac.factors.size() > 1)
                    throw DomainError("reducible locus " + orb.locus.str());
                // an incomplete factorization leaves irreducibility asserted
                break;
            }
        }
    }
    if (nzero > 1) throw DomainError("more than one orbit at zero");
    if (ninf > 1) throw DomainError("more than one orbit at infinity");
    if (e.field.kind == FieldKind::RationalsQ ||
        e.field.kind == FieldKind::FunctionFieldOverAlgClosedChar0) {
        e.field.hilbertian = true;
        e.field.infinite_prime_divisors = true;
    } else if (e.field.kind == FieldKind::AbstractHilbertian) {
        e.field.hilbertian = true;
    }
    if (e.defining_poly && e.defining_poly->degree_y() < 1)
        throw DomainError("defining polynomial must involve Y");
}

MPolys m_polys(const ExtensionDescriptor& e) {
    MPolys out{RatPoly(Rat(1)), RatPoly(Rat(1))};
    for (const BranchOrbit& orb : e.orbits) {
        switch (orb.kind) {
            case LocusKind::Finite:
                out.m = out.m * orb.locus;
                out.m_star = out.m_star * reciprocal_minpoly(orb.locus);
                break;
            case LocusKind::AtZero:
                out.m = out.m * RatPoly::variable();
                break;  // reciprocal of T is 1
            case LocusKind::AtInfinity:
                out.m_star = out.m_star * RatPoly::variable();
                break;  // infinity maps to 0
        }
    }
    return out;
}

long branch_point_count(const ExtensionDescriptor& e) {
    long r = 0;
    for (const BranchOrbit& orb : e.orbits)
        r += orb.kind == LocusKind::Finite ? orb.locus.degree() : 1;
    return r;
}

ExtensionDescriptor builder_quadratic_sqrt(const RatPoly& p) {
    if (p.degree() < 1) throw DomainError("radicand must be nonconstant");
    if (gcd(p, p.derivative()).degree() > 0)
        throw DomainError("radicand is not squarefree: pass its squarefree part");
    Factorization fac = factor_rational(p);
    if (!fac.complete)
        throw CapError("radicand resists exact factorization; provide the orbits manually");
    ExtensionDescriptor e;
    e.label = "sqrt(" + p.str() + ")";
    e.group.kind = GroupRef::Kind::Sn;
    e.group.n = 2;
    ClassRef invol;
    invol.kind = ClassRef::Kind::CycleType;
    invol.cycles = CycleType::from_lengths({2});
    for (const RatPoly& f : fac.factors) {
        BranchOrbit orb;
        if (f == RatPoly::variable())
            orb.kind = LocusKind::AtZero;
        else
            orb.locus = f;
        orb.cls = invol;
        orb.ramification_index = 2;
        e.orbits.push_back(orb);
    }
    if (p.degree() % 2 == 1) {
        BranchOrbit orb;
        orb.kind = LocusKind::AtInfinity;
        orb.cls = invol;
        orb.ramification_index = 2;
        e.orbits.push_back(orb);
    }
    e.defining_poly =
        BiPoly::from_coeffs({p * Rat(-1), RatPoly(Rat(0)), RatPoly(Rat(1))});
    validate_descriptor(e);
    return e;
}

ExtensionDescriptor builder_trinomial(int n, int m, int q, int s) {
    if (n < 3 || m < 1 || m >= n) throw DomainError("need n >= 3 and 1 <= m < n");
    if (std::gcd(m, n) != 1) throw DomainError("m and n must be coprime");
    if (q < 0 || s < 1) throw DomainError("need q >= 0 and s >= 1");
    if (static_cast<long>(s) * (n - m) - static_cast<long>(q) * n != 1)
        throw DomainError("s(n - m) - q n = 1 fails");
    ExtensionDescriptor e;
    e.label = "trinomial(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
              ",q=" + std::to_string(q) + ",s=" + std::to_string(s) + ")";
    e.group.kind = GroupRef::Kind::Sn;
    e.group.n = n;

    BranchOrbit zero;
    zero.kind = LocusKind::AtZero;
    zero.cls.kind = ClassRef::Kind::CycleType;
    zero.cls.cycles = CycleType::from_lengths({m, n - m});
    zero.ramification_index = static_cast<int>(std::lcm(m, n - m));
    e.orbits.push_back(zero);

    BranchOrbit inf;
    inf.kind = LocusKind::AtInfinity;
    inf.cls.kind = ClassRef::Kind::CycleType;
    inf.cls.cycles = CycleType::from_lengths({n});
    inf.ramification_index = n;
    e.orbits.push_back(inf);

    // the one finite branch point m^m (n-m)^(n-m) / n^n
    Int a, b, den;
    mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(m));
    mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(n - m),
                  static_cast<unsigned long>(n - m));
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    Rat tstar(a * b, den);
    tstar.canonicalize();
    BranchOrbit fin;
    fin.locus = RatPoly::from_coeffs({-tstar, Rat(1)});
    fin.cls.kind = ClassRef::Kind::CycleType;
    std::vector<int> tw(static_cast<size_t>(n - 2), 1);
    tw.push_back(2);
    fin.cls.cycles = CycleType::from_lengths(tw);
    fin.ramification_index = 2;
    e.orbits.push_back(fin);

    std::vector<RatPoly> cs(static_cast<size_t>(n) + 1, RatPoly(Rat(0)));
    cs[0] = RatPoly::monomial(s, Rat(1));
    cs[static_cast<size_t>(m)] = RatPoly::monomial(q, Rat(-1));
    cs[static_cast<size_t>(n)] = RatPoly(Rat(1));
    e.defining_poly = BiPoly::from_coeffs(std::move(cs));
    validate_descriptor(e);
    return e;
}

ExtensionDescriptor builder_morse(const RatPoly& mpoly) {
    int n = mpoly.degree();
    if (n < 3) throw DomainError("Morse realization needs degree >= 3");
    if (mpoly.lc() != Rat(1)) throw DomainError("Morse polynomial must be monic");
    RatPoly mp = mpoly.derivative();
    if (gcd(mp, mp.derivative()).degree() > 0)
        throw DomainError("NotMorse: a critical point is degenerate");
    RatPoly cv = critical_values_poly(mpoly);
    if (gcd(cv, cv.derivative()).degree() > 0)
        throw DomainError("NotMorse: two critical points share a critical value");
    Factorization fac = factor_rational(cv);
    if (!fac.complete)
        throw CapError("critical values resist exact factorization; provide the orbits manually");
    ExtensionDescriptor e;
    e.label = "morse(" + mpoly.str() + ")";
    e.group.kind = GroupRef::Kind::Sn;
    e.group.n = n;
    ClassRef twist;
    twist.kind = ClassRef::Kind::CycleType;
    std::vector<int> tw(static_cast<size_t>(n - 2), 1);
    tw.push_back(2);
    twist.cycles = CycleType::from_lengths(tw);
    for (const RatPoly& f : fac.factors) {
        BranchOrbit orb;
        if (f == RatPoly::variable())
            orb.kind = LocusKind::AtZero;
        else
            orb.locus = f;
        orb.cls = twist;
        orb.ramification_index = 2;
        e.orbits.push_back(orb);
    }
    BranchOrbit inf;
    inf.kind = LocusKind::AtInfinity;
    inf.cls.kind = ClassRef::Kind::CycleType;
    inf.cls.cycles = CycleType::from_lengths({n});
    inf.ramification_index = n;
    e.orbits.push_back(inf);

    std::vector<RatPoly> cs(static_cast<size_t>(n) + 1, RatPoly(Rat(0)));
    cs[0] = RatPoly::from_coeffs({mpoly.coeff(0), Rat(-1)});  // M(0) - T
    for (int i = 1; i <= n; ++i) cs[static_cast<size_t>(i)] = RatPoly(mpoly.coeff(i));
    e.defining_poly = BiPoly::from_coeffs(std::move(cs));
    validate_descriptor(e);
    return e;
}

ExtensionDescriptor builder_cyclic_cyclotomic(int n) {
    if (n < 3) throw DomainError("cyclotomic realization needs n >= 3");
    std::vector<int> pts(static_cast<size_t>(n));
    std::iota(pts.begin(), pts.end(), 0);
    Perm cycle = Perm::from_cycles(n, {pts});
    ExtensionDescriptor e;
    e.label = "cyclotomic(" + std::to_string(n) + ")";
    e.group.kind = GroupRef::Kind::Explicit;
    e.group.degree = n;
    e.group.generators = {cycle};
    e.group.name = "Z/" + std::to_string(n);
    BranchOrbit orb;
    orb.locus = cyclotomic(static_cast<unsigned>(n));
    orb.cls.kind = ClassRef::Kind::Explicit;
    orb.cls.representative = cycle;
    orb.ramification_index = n;
    e.orbits.push_back(orb);
    validate_descriptor(e);
    return e;
}

ExtensionDescriptor builder_manual(ExtensionDescriptor e) {
    validate_descriptor(e);
    return e;
}

const char* galois_tag_name(GaloisTag t) {
    switch (t) {
        case GaloisTag::Trivial: return "trivial";
        case GaloisTag::Z2: return "Z2";
        case GaloisTag::C3: return "C3";
        case GaloisTag::S3: return "S3";
        case GaloisTag::V4: return "V4";
        case GaloisTag::C4: return "C4";
        case GaloisTag::D4: return "D4";
        case GaloisTag::A4: return "A4";
        case GaloisTag::S4: return "S4";
    }
    return "?";
}

namespace {

GaloisTag cubic_tag(const RatPoly& f) {
    Factorization fac = factor_rational(f);
    if (!fac.complete) throw CapError("specialized cubic out of desk scale");
    int nlin = 0;
    for (const RatPoly& h : fac.factors)
        if (h.degree() == 1) ++nlin;
    if (nlin == 3) return GaloisTag::Trivial;
    if (nlin == 1) return GaloisTag::Z2;
    return is_square_rational(discriminant(f)) ? GaloisTag::C3 : GaloisTag::S3;
}

// Irreducible separable quartic: resolvent cubic of the depressed form.
// With a unique rational resolvent root b the group is Z/4 exactly when
// (b - p) (resp. b^2 - 4r when b = p) generates the same quadratic field
// as the discriminant; three roots give V4, none give A4/S4 by disc square.
GaloisTag quartic_tag(const RatPoly& f0) {
    RatPoly f = f0.monic();
    Rat shift = f.coeff(3) / Rat(4);
    RatPoly ym = RatPoly::from_coeffs({-shift, Rat(1)});
    RatPoly g(Rat(0));
    for (int i = f.degree(); i >= 0; --i) g = g * ym + RatPoly(f.coeff(i));
    Rat p = g.coeff(2), q = g.coeff(1), r = g.coeff(0);
    RatPoly rc = RatPoly::from_coeffs({Rat(4) * p * r - q * q, Rat(-4) * r, -p, Rat(1)});
    Rat disc = discriminant(f);
    Factorization rf = factor_rational(rc);
    if (!rf.complete) throw CapError("resolvent cubic out of desk scale");
    std::vector<Rat> roots;
    for (const RatPoly& h : rf.factors)
        if (h.degree() == 1) roots.push_back(-h.coeff(0));
    if (roots.empty()) return is_square_rational(disc) ? GaloisTag::A4 : GaloisTag::S4;
    if (roots.size() == 3) return GaloisTag::V4;
    const Rat& beta = roots.front();
    if (beta != p)
        return same_quadratic_field(beta - p, disc) ? GaloisTag::C4 : GaloisTag::D4;
    return same_quadratic_field(beta * beta - Rat(4) * r, disc) ? GaloisTag::C4
                                                                : GaloisTag::D4;
}

GaloisTag quartic_reducible_tag(const std::vector<RatPoly>& factors) {
    std::vector<int> degs;
    for (const RatPoly& h : factors) degs.push_back(h.degree());
    std::sort(degs.begin(), degs.end());
    if (degs == std::vector<int>{1, 1, 1, 1}) return GaloisTag::Trivial;
    if (degs == std::vector<int>{1, 1, 2}) return GaloisTag::Z2;
    if (degs == std::vector<int>{2, 2}) {
        std::vector<Rat> ds;
        for (const RatPoly& h : factors)
            if (h.degree() == 2) ds.push_back(discriminant(h));
        return same_quadratic_field(ds[0], ds[1]) ? GaloisTag::Z2 : GaloisTag::V4;
    }
    // one linear, one cubic
    for (const RatPoly& h : factors)
        if (h.degree() == 3)
            return is_square_rational(discriminant(h)) ? GaloisTag::C3 : GaloisTag::S3;
    throw Error("unreachable");
}

}  // namespace

SpecializationResult specialize(const ExtensionDescriptor& e, const Rat& t0,
                                std::uint64_t census_bound) {
    if (!e.defining_poly) throw DomainError("descriptor carries no defining polynomial");
    if (e.schematic_loci) throw DomainError("schematic loci carry no specialization data");
    SpecializationResult res;
    res.t0 = t0;
    for (const BranchOrbit& orb : e.orbits) {
        if (orb.kind == LocusKind::AtZero && sgn(t0) == 0) throw NonSeparableError(t0);
        if (orb.kind == LocusKind::Finite && sgn(orb.locus.eval(t0)) == 0)
            throw NonSeparableError(t0);
    }
    RatPoly f = e.defining_poly->specialize_t(t0);
    res.specialized = f;
    if (f.degree() < e.defining_poly->degree_y() || f.degree() < 1)
        throw NonSeparableError(t0);
    if (f.degree() > 1 && sgn(discriminant(f)) == 0) throw NonSeparableError(t0);
    res.totally_real = sturm_real_root_count(f) == f.degree();
    switch (f.degree()) {
        case 1:
            res.group_tag = GaloisTag::Trivial;
            break;
        case 2: {
            Int k = squarefree_kernel(discriminant(f));
            res.quadratic_kernel = k;
            res.group_tag = k == 1 ? GaloisTag::Trivial : GaloisTag::Z2;
            break;
        }
        case 3:
            res.group_tag = cubic_tag(f);
            break;
        case 4: {
            Factorization fac = factor_rational(f);
            if (!fac.complete) throw CapError("specialized quartic out of desk scale");
            res.group_tag = fac.factors.size() == 1 ? quartic_tag(f)
                                                    : quartic_reducible_tag(fac.factors);
            break;
        }
        default: {
            PatternCensus census;
            census.bound = census_bound;
            for (std::uint64_t p : primes_up_to(census_bound)) {
                DegreePattern dp = factor_degree_pattern_mod_p(f, p);
                if (dp.status != ModStatus::Ok) continue;
                census.counts[dp.pattern]++;
                census.primes_used++;
            }
            res.census = std::move(census);
            break;
        }
    }
    return res;
}

GenusBound genus_lower_bound(const ExtensionDescriptor& e) {
    Int n = group_order(e.group);
    long r = branch_point_count(e);
    Rat two_g = Rat(2) + Rat(n) * (Rat(r) / Rat(2) - Rat(2));
    Int g;
    Int den2 = Int(two_g.get_den()) * 2;
    mpz_cdiv_q(g.get_mpz_t(), two_g.get_num().get_mpz_t(), den2.get_mpz_t());
    if (sgn(g) < 0) g = 0;
    return {two_g, g};
}

}  // namespace galois
