#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace galois {

// Squarefree integer d with n/d a rational square; sign preserved.
Int squarefree_kernel(const Int& n);
// Kernel of a nonzero rational: Q(sqrt(q)) = Q(sqrt(kernel)).
Int squarefree_kernel(const Rat& q);

// True iff Q(sqrt(d1)) = Q(sqrt(d2)), i.e. d1*d2 is a nonzero square.
bool same_quadratic_field(const Rat& d1, const Rat& d2);

// Diagonal ternary form a X^2 + b Y^2 + c Z^2; abc != 0.
struct TernaryForm {
    Int a, b, c;
    std::string str() const;
};

struct TernarySolution {
    Int x, y, z;
};

// Decision record for one form: the solvability-preserving reduction chain
// down to a squarefree pairwise-coprime form, then Legendre's criterion,
// with one note per step so a certificate can be audited.
struct LegendreCheck {
    bool solvable = false;
    TernaryForm reduced;
    std::vector<TernaryForm> chain;  // input first, reduced last
    std::vector<std::string> notes;
};

LegendreCheck legendre_check(const TernaryForm& f);
bool legendre_solvable(const TernaryForm& f);
TernaryForm legendre_reduce(const TernaryForm& f);

// ceil(sqrt(max pairwise coefficient product)): a solvable reduced form has
// a zero inside this box, so search up to here is a complete decision.
long holzer_bound(const TernaryForm& f);

// Nontrivial zero with 0 <= x, y <= bound (signs of variables are free),
// z derived exactly; nullopt when the box holds none.
std::optional<TernarySolution> brute_force_ternary(const TernaryForm& f, long bound);

enum class PrimeVerdict { Divisor, NonDivisor, Excluded };

// p divides P at t0: some rational t0 with v_p(P(t0)) >= 1.
struct PrimeDivisorReport {
    std::uint64_t prime = 0;
    PrimeVerdict verdict = PrimeVerdict::NonDivisor;
    std::optional<std::uint64_t> witness;  // residue t0, set for Divisor
    std::string reason;                    // set when Excluded
};

PrimeDivisorReport is_prime_divisor(const RatPoly& poly, std::uint64_t prime);

struct PrimeCensus {
    std::vector<PrimeDivisorReport> divisors, non_divisors, excluded;
};
// Classification of every prime <= bound.
PrimeCensus prime_divisor_census(const RatPoly& poly, std::uint64_t bound);

// Rational point on the conic d Y^2 = a T^2 + b T + c.
struct ConicPoint {
    Rat t, y;
};

// Chord parametrization through a fixed rational point: the slope-lambda
// line meets the conic in one further point, rational in lambda.
class ConicParametrization {
  public:
    ConicParametrization(Rat a, Rat b, Rat c, Rat d, ConicPoint base);
    ConicPoint at(const Rat& lambda) const;

  private:
    Rat a_, b_, c_, d_;
    ConicPoint base_;
};

ConicParametrization conic_parametrize(const Rat& a, const Rat& b, const Rat& c,
                                       const Rat& d, const ConicPoint& base);

struct Prop31Point {
    Rat t0;
    Rat value;   // radicand at t0, nonzero, kernel equal to kernel(d)
    Int kernel;
    Rat lambda;  // chord slope used; 0 on the degenerate branches
};

// A point t0 specializing Q(T)(sqrt(a T^2 + b T + c)) to Q(sqrt(d)).
// Requires b^2 - 4ac to be a nonzero rational square (two rational branch
// points). b = c = 0 encodes the extension Q(T)(sqrt(a T)) instead, where
// t0 = a d always works; a = 0 is the linear radicand b T + c.
Prop31Point prop31_specialization_point(const Rat& a, const Rat& b, const Rat& c,
                                        const Int& d);

struct ObstructionPrime {
    std::uint64_t prime = 0;
    Int delta;        // integral discriminant entering the symbol
    int symbol = 0;   // Legendre (delta/prime), always -1 here
};

// First `count` odd primes p, coprime to 2 a delta and the denominators,
// with (delta/p) = -1: for such p the field Q(sqrt(p)) is not a
// specialization of Q(T)(sqrt(a T^2 + b T + c)). Requires delta non-square.
std::vector<ObstructionPrime> prop31_obstruction_primes(const Rat& a, const Rat& b,
                                                        const Rat& c, int count);

// The six diagonal forms attached to (d1, d2) for E = Q(T)(sqrt(aT), sqrt(bT-b)),
// in the fixed order (i)..(vi). A simultaneous rational zero of none of them
// means Q(sqrt(d1), sqrt(d2)) is not a specialization of E.
std::vector<TernaryForm> prop32_forms(const Int& a, const Int& b, const Int& d1,
                                      const Int& d2);

struct Prop32Pair {
    Int d1, d2;
    std::vector<LegendreCheck> checks;  // six certificates, all unsolvable
};

// Distinct squarefree pairs (d1, d2), each emitted only with all six forms
// certified unsolvable. Candidates follow the sign of (a, b): when a < 0 < b
// every positive pair works (all six forms definite); otherwise d1 or d2 runs
// through primes p with two prescribed Legendre symbols equal to -1.
std::vector<Prop32Pair> prop32_nonspecializable_pairs(const Int& a, const Int& b,
                                                      int count);

}  // namespace galois
