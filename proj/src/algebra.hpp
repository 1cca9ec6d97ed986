#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace galois {

using Int = mpz_class;
using Rat = mpq_class;

// Accepts "-7", "3/4"; rejects everything else (no decimals, no whitespace).
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& q);

bool is_square_rational(const Rat& q, Rat* root = nullptr);
bool is_square_int(const Int& n, Int* root = nullptr);

// Dense univariate polynomial over Q, coefficients lowest degree first.
// Value-immutable: every operation returns a fresh polynomial.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(const Rat& constant);
    static RatPoly from_coeffs(std::vector<Rat> coeffs);
    static RatPoly variable();
    static RatPoly monomial(int deg, const Rat& coeff);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lc() const;

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator-() const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;

    RatPoly derivative() const;
    Rat eval(const Rat& x) const;
    RatPoly pow(unsigned e) const;

    // Field division by a nonzero divisor: (quotient, remainder).
    std::pair<RatPoly, RatPoly> divrem(const RatPoly& d) const;
    RatPoly exact_div(const RatPoly& d) const;
    RatPoly monic() const;

    // P = content * primitive, primitive with coprime integer coefficients
    // and positive leading coefficient. Cached; copies share the cache.
    struct PrimForm {
        std::vector<Int> coeffs;
        Rat content;
    };
    const PrimForm& primitive() const;

    std::string str(const std::string& var = "T") const;

  private:
    std::vector<Rat> c_;
    mutable std::shared_ptr<const PrimForm> prim_;
    void normalize();
};

RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic, or zero
RatPoly squarefree_part(const RatPoly& p);        // monic; pre: p nonzero
Rat resultant(const RatPoly& a, const RatPoly& b);
Rat discriminant(const RatPoly& p);  // pre: deg >= 1
int sturm_real_root_count(const RatPoly& p);  // pre: squarefree, nonzero

// Minimal polynomial of 1/theta as primitive integer polynomial with
// positive leading coefficient; the convention for theta = 0 (input T) is 1.
// Pre: input monic irreducible with the irreducibility taken on trust.
RatPoly reciprocal_minpoly(const RatPoly& m);

RatPoly cyclotomic(unsigned n);  // pre: n >= 1

// Polynomial in Y whose coefficients live in Q[T], lowest Y-degree first.
class BiPoly {
  public:
    BiPoly() = default;
    static BiPoly from_coeffs(std::vector<RatPoly> coeffs);
    int degree_y() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const RatPoly& coeff(int i) const;
    const std::vector<RatPoly>& coeffs() const { return c_; }
    BiPoly derivative_y() const;
    RatPoly specialize_t(const Rat& t0) const;  // member of Q[Y]
    std::string str() const;

  private:
    std::vector<RatPoly> c_;
};

// Resultant with respect to Y of two elements of Q[T][Y].
RatPoly resultant_y(const BiPoly& a, const BiPoly& b);
// Discriminant with respect to Y; result in Q[T]. Pre: deg_y >= 1.
RatPoly discriminant_in_t(const BiPoly& p);

// Monic polynomial in T whose roots are the critical values of M,
// Res_Y(M'(Y), T - M(Y)) up to normalization. Pre: deg M >= 2.
RatPoly critical_values_poly(const RatPoly& m);

// ----- arithmetic modulo a machine prime -----

bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Factorization of |n| as (prime, multiplicity) pairs, primes ascending.
// nullopt when a cofactor resists the desk-scale methods. Pre: n != 0.
std::optional<std::vector<std::pair<Int, int>>> factor_integer(const Int& n);

enum class ModStatus { Ok, Excluded };

struct ModReduction {
    ModStatus status = ModStatus::Ok;
    std::string reason;            // set when Excluded
    bool content_divisible = false;  // p divides the content numerator
    std::vector<std::uint64_t> coeffs;  // reduced primitive form, lowest first
};

// Reduction of the primitive integer form mod p. Excluded when p divides the
// content denominator or the leading coefficient of the primitive form.
// When p divides the content numerator the reduction is still performed and
// content_divisible is set: every value of the polynomial then has positive
// p-valuation regardless of the residue.
ModReduction reduce_mod_p(const RatPoly& p, std::uint64_t prime);

struct RootsModP {
    ModStatus status = ModStatus::Ok;
    std::string reason;
    std::vector<std::uint64_t> roots;
};
RootsModP roots_mod_p(const RatPoly& p, std::uint64_t prime);

struct DegreePattern {
    ModStatus status = ModStatus::Ok;
    std::string reason;  // Excluded also when the reduction is not squarefree
    std::vector<int> pattern;  // sorted factor degrees with multiplicity
};
DegreePattern factor_degree_pattern_mod_p(const RatPoly& p, std::uint64_t prime);

struct IrredCertificate {
    bool certified = false;
    std::uint64_t prime = 0;  // witness prime when certified
};
// Searches the first `good_primes` primes modulo which the reduction is
// clean and squarefree for one where the polynomial stays irreducible.
IrredCertificate irreducibility_certificate(const RatPoly& p, int good_primes = 25);

// Exact factorization into monic irreducibles (with multiplicity, as
// repeats). Complete whenever each squarefree piece left after removing
// rational roots has degree <= 4; higher-degree pieces are emitted whole
// when a modular certificate proves them irreducible (a pattern argument
// also refutes 2+3 splits of quintics), otherwise complete=false and the
// piece is returned unfactored.
struct Factorization {
    bool complete = true;
    std::vector<RatPoly> factors;
    Rat unit;  // leading coefficient of the input
    std::string note;
};
Factorization factor_rational(const RatPoly& p);

}  // namespace galois
