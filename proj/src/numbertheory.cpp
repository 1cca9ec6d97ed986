#include "numbertheory.hpp"

#include <algorithm>
#include <utility>

#include "common.hpp"

namespace galois {

namespace {

Int igcd(const Int& x, const Int& y) {
    Int r;
    mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

bool perfect_square(const Int& n, Int* root = nullptr) {
    if (sgn(n) < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

}  // namespace

Int squarefree_kernel(const Int& n) {
    if (sgn(n) == 0) throw DomainError("squarefree kernel of zero");
    auto fac = factor_integer(n);
    if (!fac) throw CapError("squarefree kernel: integer out of desk scale");
    Int k(sgn(n) < 0 ? -1 : 1);
    for (const auto& [p, e] : *fac)
        if (e & 1) k *= p;
    return k;
}

Int squarefree_kernel(const Rat& q) {
    if (sgn(q) == 0) throw DomainError("squarefree kernel of zero");
    return squarefree_kernel(Int(q.get_num() * q.get_den()));
}

bool same_quadratic_field(const Rat& d1, const Rat& d2) {
    if (sgn(d1) == 0 || sgn(d2) == 0) throw DomainError("quadratic field of zero");
    return is_square_rational(d1 * d2);
}

std::string TernaryForm::str() const {
    auto term = [](const Int& k, const char* var, bool lead) {
        std::string s;
        Int m = k;
        if (lead) {
            if (sgn(m) < 0) {
                s += "-";
                m = -m;
            }
        } else {
            s += sgn(m) < 0 ? " - " : " + ";
            if (sgn(m) < 0) m = -m;
        }
        if (m != 1) s += m.get_str() + " ";
        s += var;
        return s;
    };
    return term(a, "X^2", true) + term(b, "Y^2", false) + term(c, "Z^2", false) + " = 0";
}

LegendreCheck legendre_check(const TernaryForm& input) {
    if (sgn(input.a) == 0 || sgn(input.b) == 0 || sgn(input.c) == 0)
        throw DomainError("ternary form with a zero coefficient");
    LegendreCheck out;
    out.chain.push_back(input);
    TernaryForm f = input;
    auto record = [&](std::string why) {
        out.chain.push_back(f);
        out.notes.push_back(std::move(why));
    };

    // Reduce to a squarefree, pairwise coprime form. Each rewrite keeps the
    // solvable/unsolvable status; |abc| never increases and strictly drops on
    // every coprimality step, so this terminates.
    for (;;) {
        TernaryForm g{squarefree_kernel(f.a), squarefree_kernel(f.b), squarefree_kernel(f.c)};
        if (g.a != f.a || g.b != f.b || g.c != f.c) {
            f = g;
            record("square parts absorbed into the variables");
        }
        Int t = igcd(igcd(f.a, f.b), f.c);
        if (t > 1) {
            f.a /= t;
            f.b /= t;
            f.c /= t;
            record("common factor " + t.get_str() + " removed");
            continue;
        }
        Int gab = igcd(f.a, f.b);
        if (gab > 1) {
            f = {f.a / gab, f.b / gab, f.c * gab};
            record("gcd(a, b) = " + gab.get_str() + " moved onto c");
            continue;
        }
        Int gbc = igcd(f.b, f.c);
        if (gbc > 1) {
            f = {f.a * gbc, f.b / gbc, f.c / gbc};
            record("gcd(b, c) = " + gbc.get_str() + " moved onto a");
            continue;
        }
        Int gac = igcd(f.a, f.c);
        if (gac > 1) {
            f = {f.a / gac, f.b * gac, f.c / gac};
            record("gcd(a, c) = " + gac.get_str() + " moved onto b");
            continue;
        }
        break;
    }
    out.reduced = f;

    int sa = sgn(f.a), sb = sgn(f.b), sc = sgn(f.c);
    if (sa == sb && sb == sc) {
        out.notes.push_back("all signs equal: definite form, only the trivial zero");
        out.solvable = false;
        return out;
    }

    // Legendre: a zero exists iff -bc, -ca, -ab are squares modulo every odd
    // prime dividing a, b, c respectively. Coefficients are coprime to the
    // moduli here, so each symbol is +-1.
    auto residue_ok = [&](const Int& m, const Int& o1, const Int& o2, const char* at) {
        Int residue = -(o1 * o2);
        auto fac = factor_integer(m);
        if (!fac) throw CapError("ternary coefficient out of desk scale");
        for (const auto& [q, e] : *fac) {
            if (q == 2) continue;
            int s = mpz_legendre(residue.get_mpz_t(), q.get_mpz_t());
            out.notes.push_back(std::string("(") + residue.get_str() + "/" + q.get_str() +
                                ") = " + std::to_string(s) + " at " + at);
            if (s == -1) return false;
        }
        return true;
    };
    out.solvable = residue_ok(f.a, f.b, f.c, "a") && residue_ok(f.b, f.a, f.c, "b") &&
                   residue_ok(f.c, f.a, f.b, "c");
    if (out.solvable) out.notes.push_back("mixed signs and every residue condition holds");
    return out;
}

bool legendre_solvable(const TernaryForm& f) { return legendre_check(f).solvable; }

TernaryForm legendre_reduce(const TernaryForm& f) { return legendre_check(f).reduced; }

long holzer_bound(const TernaryForm& f) {
    Int m = abs(f.a * f.b);
    Int bc = abs(f.b * f.c);
    Int ac = abs(f.a * f.c);
    if (bc > m) m = bc;
    if (ac > m) m = ac;
    Int r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    if (sgn(rem) != 0) r += 1;
    if (!r.fits_slong_p()) throw CapError("search bound out of desk scale");
    return r.get_si();
}

std::optional<TernarySolution> brute_force_ternary(const TernaryForm& f, long bound) {
    if (sgn(f.a) == 0 || sgn(f.b) == 0 || sgn(f.c) == 0)
        throw DomainError("ternary form with a zero coefficient");
    if (bound < 1) throw DomainError("search bound must be positive");
    // signs of the variables are free, so x, y >= 0 suffices; z is solved for
    for (long x = 0; x <= bound; ++x) {
        Int ax2 = f.a * Int(x) * Int(x);
        for (long y = (x == 0 ? 1 : 0); y <= bound; ++y) {
            Int n = -(ax2 + f.b * Int(y) * Int(y));
            if (!mpz_divisible_p(n.get_mpz_t(), f.c.get_mpz_t())) continue;
            Int q;
            mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), f.c.get_mpz_t());
            Int z;
            if (perfect_square(q, &z)) return TernarySolution{Int(x), Int(y), z};
        }
    }
    return std::nullopt;
}

PrimeDivisorReport is_prime_divisor(const RatPoly& poly, std::uint64_t prime) {
    if (poly.degree() < 1) throw DomainError("prime divisor test needs a nonconstant polynomial");
    PrimeDivisorReport rep;
    rep.prime = prime;
    ModReduction red = reduce_mod_p(poly, prime);
    if (red.status == ModStatus::Excluded) {
        rep.verdict = PrimeVerdict::Excluded;
        rep.reason = red.reason;
        return rep;
    }
    if (red.content_divisible) {
        // the content already carries a factor p at every integral residue
        rep.verdict = PrimeVerdict::Divisor;
        rep.witness = 0;
        return rep;
    }
    RootsModP roots = roots_mod_p(poly, prime);
    if (!roots.roots.empty()) {
        rep.verdict = PrimeVerdict::Divisor;
        rep.witness = roots.roots.front();
    }
    return rep;
}

PrimeCensus prime_divisor_census(const RatPoly& poly, std::uint64_t bound) {
    PrimeCensus census;
    for (std::uint64_t p : primes_up_to(bound)) {
        PrimeDivisorReport rep = is_prime_divisor(poly, p);
        switch (rep.verdict) {
            case PrimeVerdict::Divisor: census.divisors.push_back(std::move(rep)); break;
            case PrimeVerdict::NonDivisor: census.non_divisors.push_back(std::move(rep)); break;
            case PrimeVerdict::Excluded: census.excluded.push_back(std::move(rep)); break;
        }
    }
    return census;
}

ConicParametrization::ConicParametrization(Rat a, Rat b, Rat c, Rat d, ConicPoint base)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), base_(std::move(base)) {
    if (sgn(d_) == 0) throw DomainError("conic needs d != 0");
    if (sgn(a_) == 0 && sgn(b_) == 0) throw DomainError("degenerate conic: constant right side");
    if (sgn(a_) != 0 && sgn(b_ * b_ - Rat(4) * a_ * c_) == 0)
        throw DomainError("degenerate conic: right side is a times a square");
    if (d_ * base_.y * base_.y != a_ * base_.t * base_.t + b_ * base_.t + c_)
        throw DomainError("base point not on the conic");
}

ConicPoint ConicParametrization::at(const Rat& lambda) const {
    Rat den = d_ * lambda * lambda - a_;
    if (sgn(den) == 0) throw DomainError("slope meets the conic only once");
    Rat s = (Rat(2) * a_ * base_.t + b_ - Rat(2) * d_ * base_.y * lambda) / den;
    return {base_.t + s, base_.y + lambda * s};
}

ConicParametrization conic_parametrize(const Rat& a, const Rat& b, const Rat& c,
                                       const Rat& d, const ConicPoint& base) {
    return ConicParametrization(a, b, c, d, base);
}

Prop31Point prop31_specialization_point(const Rat& a, const Rat& b, const Rat& c,
                                        const Int& d) {
    if (sgn(d) == 0) throw DomainError("target d must be nonzero");
    Prop31Point out;
    out.kernel = squarefree_kernel(d);
    out.lambda = 0;
    if (sgn(b) == 0 && sgn(c) == 0) {
        if (sgn(a) == 0) throw DomainError("zero radicand");
        // sqrt(a T) branch: radicand a * (a d) = a^2 d
        out.t0 = a * Rat(d);
        out.value = a * out.t0;
        return out;
    }
    if (sgn(a) == 0) {
        if (sgn(b) == 0) throw DomainError("constant radicand");
        // linear radicand hits d on the nose
        out.t0 = (Rat(d) - c) / b;
        out.value = Rat(d);
        return out;
    }
    Rat disc = b * b - Rat(4) * a * c;
    Rat e;
    if (sgn(disc) == 0 || !is_square_rational(disc, &e))
        throw DomainError("NotParametric: discriminant is not a nonzero square");
    // chord of slope lambda on d Y^2 = a T^2 + b T + c through the root
    // (t1, 0): the second point has s = sqrt(disc) / (d lambda^2 - a) and
    // radicand d (lambda s)^2, of the same kernel as d
    Rat t1 = (-b + e) / (Rat(2) * a);
    for (long l = 1; l <= 64; ++l) {
        Rat lambda(l);
        Rat den = Rat(d) * lambda * lambda - a;
        if (sgn(den) == 0) continue;
        Rat s = e / den;
        out.t0 = t1 + s;
        out.lambda = lambda;
        out.value = a * out.t0 * out.t0 + b * out.t0 + c;
        if (sgn(out.value) == 0) continue;
        return out;
    }
    throw Error("NoBranchAvoidance: chord slopes exhausted");
}

std::vector<ObstructionPrime> prop31_obstruction_primes(const Rat& a, const Rat& b,
                                                        const Rat& c, int count) {
    Rat disc = b * b - Rat(4) * a * c;
    if (is_square_rational(disc))
        throw DomainError("NotApplicable: discriminant is a square");
    Int L;
    mpz_lcm(L.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den().get_mpz_t());
    Int A = Int(Rat(a * L).get_num());
    Int B = Int(Rat(b * L).get_num());
    Int C = Int(Rat(c * L).get_num());
    // scaling by L multiplies the discriminant by the square L^2
    Int delta = B * B - 4 * A * C;
    Int bad = 2 * A * delta * L;
    std::vector<ObstructionPrime> out;
    for (std::uint64_t p = 3; static_cast<int>(out.size()) < count; p += 2) {
        if (p > 100000000) throw Error("obstruction prime search exhausted");
        if (!is_prime_u64(p)) continue;
        if (mpz_divisible_ui_p(bad.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        Int P(static_cast<unsigned long>(p));
        if (mpz_legendre(delta.get_mpz_t(), P.get_mpz_t()) == -1)
            out.push_back({p, delta, -1});
    }
    return out;
}

std::vector<TernaryForm> prop32_forms(const Int& a, const Int& b, const Int& d1,
                                      const Int& d2) {
    return {
        {a * d1, -b * d2, Int(-1)},
        {a, -b * d2, -d1},
        {a * d2, -b * d1, Int(-1)},
        {a, -b * d1, -d2},
        {a * d2, -b, -d1},
        {a * d1, -b, -d2},
    };
}

std::vector<Prop32Pair> prop32_nonspecializable_pairs(const Int& a, const Int& b,
                                                      int count) {
    if (sgn(a) == 0 || sgn(b) == 0) throw DomainError("a and b must be nonzero");
    if (squarefree_kernel(a) != a || squarefree_kernel(b) != b)
        throw DomainError("a and b must be squarefree");
    std::vector<Prop32Pair> out;
    auto try_pair = [&](const Int& d1, const Int& d2) {
        if (d1 == d2) return;
        Prop32Pair pair{d1, d2, {}};
        for (const TernaryForm& f : prop32_forms(a, b, d1, d2)) {
            LegendreCheck ck = legendre_check(f);
            if (ck.solvable) return;
            pair.checks.push_back(std::move(ck));
        }
        out.push_back(std::move(pair));
    };

    if (sgn(a) < 0 && sgn(b) > 0) {
        // every positive pair works: all six forms are negative definite
        for (long hi = 3; static_cast<int>(out.size()) < count && hi < 3000; ++hi) {
            if (squarefree_kernel(Int(hi)) != hi) continue;
            for (long lo = 2; lo < hi && static_cast<int>(out.size()) < count; ++lo) {
                if (squarefree_kernel(Int(lo)) != lo) continue;
                try_pair(Int(lo), Int(hi));
            }
        }
        return out;
    }

    // The remaining sign cases take one of d1, d2 to be -p and the other a
    // small positive squarefree q; two residue conditions at p make the six
    // mod-p descents close. q = d1 exactly when a > 0 > b.
    bool q_is_d1 = sgn(a) > 0 && sgn(b) < 0;
    auto symbol_args = [&](const Int& q) -> std::pair<Int, Int> {
        if (sgn(a) > 0 && sgn(b) > 0) return {a * q, a * b * q};
        if (q_is_d1) return {a * q, -b * q};
        return {-b * q, a * b * q};
    };
    std::vector<Int> qs;
    for (long q = 2; static_cast<int>(qs.size()) < 4 && q < 200; ++q) {
        if (squarefree_kernel(Int(q)) != q) continue;
        auto [s1, s2] = symbol_args(Int(q));
        if (perfect_square(s1) || perfect_square(s2)) continue;
        qs.push_back(Int(q));
    }
    for (std::uint64_t p = 3; static_cast<int>(out.size()) < count && p < 50000; p += 2) {
        if (!is_prime_u64(p)) continue;
        Int P(static_cast<unsigned long>(p));
        for (const Int& q : qs) {
            if (static_cast<int>(out.size()) >= count) break;
            if (mpz_divisible_p(Int(2 * a * b * q).get_mpz_t(), P.get_mpz_t())) continue;
            auto [s1, s2] = symbol_args(q);
            if (mpz_legendre(s1.get_mpz_t(), P.get_mpz_t()) != -1) continue;
            if (mpz_legendre(s2.get_mpz_t(), P.get_mpz_t()) != -1) continue;
            if (q_is_d1)
                try_pair(q, -P);
            else
                try_pair(-P, q);
        }
    }
    return out;
}

}  // namespace galois
