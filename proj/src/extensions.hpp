#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "groups.hpp"

namespace galois {

// Base field of the function field E/k(T). Q and function fields over an
// algebraically closed field of characteristic 0 carry both standing
// assumptions automatically; the abstract kinds take them as assertions.
enum class FieldKind {
    RationalsQ,
    FunctionFieldOverAlgClosedChar0,
    AbstractHilbertian,
    AbstractDedekindFraction,
};

struct FieldInfo {
    FieldKind kind = FieldKind::RationalsQ;
    bool hilbertian = true;
    // every nonconstant polynomial has infinitely many prime divisors
    bool infinite_prime_divisors = true;
};

FieldInfo make_field(FieldKind kind);
std::string field_kind_name(FieldKind kind);

// Reference to the Galois group of E/k(T).
struct GroupRef {
    enum class Kind { Sn, An, Explicit, Abstract, Psl2 } kind = Kind::Sn;
    int n = 0;                     // Sn/An degree; Psl2 prime
    int degree = 0;                // Explicit: points acted on
    std::vector<Perm> generators;  // Explicit
    std::string name;              // Abstract; display name otherwise
    std::map<std::string, Int> class_orders;  // Abstract: known classes
    std::optional<Int> order;                 // Abstract: total order when known
};

Int group_order(const GroupRef& g);      // throws DomainError when unknown
PermGroup realize(const GroupRef& g);    // concrete kinds only
std::string group_name(const GroupRef& g);

// One conjugacy class, in whichever vocabulary the group supports.
struct ClassRef {
    enum class Kind { CycleType, AnType, Abstract, Explicit } kind = Kind::CycleType;
    CycleType cycles;    // CycleType, AnType
    int split_tag = 0;   // AnType: 0 = unsplit or either, 1 / 2 = the two classes
    std::string name;    // Abstract (also names concrete classes, e.g. "5A")
    Int order;           // Abstract: element order
    std::optional<Perm> representative;  // Explicit
    std::string str() const;
};

Int class_order(const ClassRef& c);

enum class LocusKind { Finite, AtZero, AtInfinity };

// Galois orbit of branch points: a closed point of P^1_Q with its inertia
// canonical class and ramification index.
struct BranchOrbit {
    LocusKind kind = LocusKind::Finite;
    RatPoly locus;  // monic irreducible; Finite only
    ClassRef cls;
    int ramification_index = 0;
    bool rational = false;  // degree-1 point (always true for 0 and infinity)
};

struct ExtensionDescriptor {
    std::string label;
    GroupRef group;
    FieldInfo field;
    std::vector<BranchOrbit> orbits;
    std::optional<BiPoly> defining_poly;
    // Loci mark orbit degrees and rationality only; the actual branch point
    // positions are not claimed (published realizations without equations).
    bool schematic_loci = false;
};

// Throws DomainError/ParseError on inconsistent data; normalizes loci monic.
void validate_descriptor(ExtensionDescriptor& e);

struct MPolys {
    RatPoly m;       // product of the finite orbit minimal polynomials
    RatPoly m_star;  // the same after T -> 1/T, infinity contributing T
};
MPolys m_polys(const ExtensionDescriptor& e);

// total number of geometric branch points (sum of orbit degrees)
long branch_point_count(const ExtensionDescriptor& e);

ExtensionDescriptor builder_quadratic_sqrt(const RatPoly& p);
ExtensionDescriptor builder_trinomial(int n, int m, int q, int s);
ExtensionDescriptor builder_morse(const RatPoly& m);
ExtensionDescriptor builder_cyclic_cyclotomic(int n);
ExtensionDescriptor builder_manual(ExtensionDescriptor e);

// Splitting field data of a specialized polynomial of degree <= 4.
enum class GaloisTag { Trivial, Z2, C3, S3, V4, C4, D4, A4, S4 };
const char* galois_tag_name(GaloisTag t);

struct PatternCensus {
    std::uint64_t bound = 0;
    int primes_used = 0;
    std::map<std::vector<int>, int> counts;  // factor degree pattern -> hits
};

struct SpecializationResult {
    Rat t0;
    bool separable = true;  // stays true on return; the wire layer flips it
                            // when reporting a NonSeparableError as data
    RatPoly specialized;    // P(t0, Y)
    std::optional<Int> quadratic_kernel;   // degree 2
    std::optional<GaloisTag> group_tag;    // degree <= 4
    std::optional<bool> totally_real;      // all roots real
    std::optional<PatternCensus> census;   // degree >= 5
};

// t0 is a branch point, or the specialized polynomial drops degree or
// acquires a repeated root.
struct NonSeparableError : DomainError {
    Rat t0;
    explicit NonSeparableError(const Rat& t)
        : DomainError("NonSeparable: t0 = " + t.get_str()), t0(t) {}
};

// Splitting data of P(t0, Y) for a descriptor with a defining polynomial.
// Exact group identification stops at degree 4 (resolvent cubic); higher
// degrees get a factorization-pattern census modulo primes <= census_bound.
// Throws NonSeparableError at branch points; separability is decided by
// exact discriminant evaluation.
SpecializationResult specialize(const ExtensionDescriptor& e, const Rat& t0,
                                std::uint64_t census_bound = 300);

struct GenusBound {
    Rat two_g;  // lower bound for 2g
    Int g_min;  // ceil(two_g / 2), clamped at 0
};
// 2g >= 2 + |G| (r/2 - 2) with r the geometric branch point count.
GenusBound genus_lower_bound(const ExtensionDescriptor& e);

}  // namespace galois
