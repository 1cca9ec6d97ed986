#include "algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace galois {

// ----- rationals -----

Rat parse_rat(const std::string& s) {
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char ch : t)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!digits(num) || !digits(den))
        throw ParseError("bad rational literal: '" + s + "'");
    Rat q{Int(num), Int(den)};
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

std::string rat_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    std::string s = c.get_num().get_str();
    if (c.get_den() != 1) s += "/" + c.get_den().get_str();
    return s;
}

bool is_square_int(const Int& n, Int* root) {
    if (sgn(n) < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (root) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        *root = r;
    }
    return true;
}

bool is_square_rational(const Rat& q, Rat* root) {
    if (sgn(q) < 0) return false;
    Int rn, rd;
    if (!is_square_int(q.get_num(), &rn) || !is_square_int(q.get_den(), &rd)) return false;
    if (root) *root = Rat(rn, rd);
    return true;
}

static Rat rat_pow(const Rat& base, unsigned e) {
    Rat r(1);
    Rat b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

// ----- RatPoly -----

static const Rat kZeroRat(0);

RatPoly::RatPoly(const Rat& constant) {
    if (sgn(constant) != 0) c_.push_back(constant);
}

RatPoly RatPoly::from_coeffs(std::vector<Rat> coeffs) {
    RatPoly p;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

RatPoly RatPoly::variable() { return from_coeffs({Rat(0), Rat(1)}); }

RatPoly RatPoly::monomial(int deg, const Rat& coeff) {
    if (deg < 0) throw DomainError("monomial degree negative");
    std::vector<Rat> c(static_cast<size_t>(deg) + 1, Rat(0));
    c.back() = coeff;
    return from_coeffs(std::move(c));
}

void RatPoly::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    for (auto& x : c_) x.canonicalize();
    prim_.reset();
}

const Rat& RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroRat;
    return c_[static_cast<size_t>(i)];
}

const Rat& RatPoly::lc() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return from_coeffs(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x = -x;
    return from_coeffs(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return from_coeffs(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= s;
    return from_coeffs(std::move(r));
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return from_coeffs(std::move(r));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly r(Rat(1));
    RatPoly b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    std::vector<Rat> rem = c_;
    int dn = d.degree();
    if (degree() < dn) return {RatPoly(), *this};
    std::vector<Rat> q(static_cast<size_t>(degree() - dn) + 1, Rat(0));
    const Rat& dl = d.lc();
    for (int i = degree(); i >= dn; --i) {
        Rat coef = rem[static_cast<size_t>(i)] / dl;
        if (sgn(coef) == 0) continue;
        q[static_cast<size_t>(i - dn)] = coef;
        for (int j = 0; j <= dn; ++j)
            rem[static_cast<size_t>(i - dn + j)] -= coef * d.c_[static_cast<size_t>(j)];
    }
    return {from_coeffs(std::move(q)), from_coeffs(std::move(rem))};
}

RatPoly RatPoly::exact_div(const RatPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw DomainError("monic of zero polynomial");
    return *this * (Rat(1) / lc());
}

const RatPoly::PrimForm& RatPoly::primitive() const {
    if (prim_) return *prim_;
    auto form = std::make_shared<PrimForm>();
    if (c_.empty()) {
        form->content = Rat(0);
    } else {
        Int den_lcm(1);
        for (const auto& x : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<Int> ints(c_.size());
        Int g(0);
        for (size_t i = 0; i < c_.size(); ++i) {
            ints[i] = c_[i].get_num() * (den_lcm / c_[i].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
        }
        if (sgn(ints.back()) < 0) g = -g;
        for (auto& x : ints) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        form->coeffs = std::move(ints);
        form->content = Rat(g, den_lcm);
        form->content.canonicalize();
    }
    prim_ = form;
    return *prim_;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = coeff(i);
        if (sgn(a) == 0) continue;
        Rat mag = abs(a);
        if (first) {
            if (sgn(a) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        bool unit = mag == 1;
        if (i == 0 || !unit) os << rat_to_string(mag);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// scale by a positive rational to reach +/- the primitive integer form
static RatPoly primitive_scaled(const RatPoly& p) {
    if (p.is_zero()) return p;
    const auto& form = p.primitive();
    Rat scale = abs(form.content);
    return p * (Rat(1) / scale);
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = primitive_scaled(a), y = primitive_scaled(b);
    while (!y.is_zero()) {
        RatPoly r = x.divrem(y).second;
        x = y;
        y = primitive_scaled(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree part of zero polynomial");
    if (p.degree() == 0) return RatPoly(Rat(1));
    RatPoly g = gcd(p, p.derivative());
    return p.exact_div(g).monic();
}

// ----- generic subresultant PRS -----

namespace {

template <class R>
R ring_zero();
template <>
Int ring_zero<Int>() { return Int(0); }
template <>
RatPoly ring_zero<RatPoly>() { return RatPoly(); }

template <class R>
R ring_one();
template <>
Int ring_one<Int>() { return Int(1); }
template <>
RatPoly ring_one<RatPoly>() { return RatPoly(Rat(1)); }

bool ring_is_zero(const Int& x) { return sgn(x) == 0; }
bool ring_is_zero(const RatPoly& x) { return x.is_zero(); }

Int ring_exact_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) throw DomainError("inexact integer division in resultant chain");
    return q;
}
RatPoly ring_exact_div(const RatPoly& a, const RatPoly& b) { return a.exact_div(b); }

template <class R>
R ring_pow(R base, unsigned e) {
    R r = ring_one<R>();
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

template <class R>
struct PolyR {
    std::vector<R> c;  // lowest first, normalized
    void norm() {
        while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const R& lc() const { return c.back(); }
    bool zero() const { return c.empty(); }
};

// lc(b)^(deg a - deg b + 1) * a = q*b + result
template <class R>
PolyR<R> prem(PolyR<R> a, const PolyR<R>& b) {
    int n = b.deg();
    const R& lb = b.lc();
    int e = a.deg() - n + 1;
    while (!a.zero() && a.deg() >= n) {
        int shift = a.deg() - n;
        R la = a.lc();
        std::vector<R> next(a.c.size(), ring_zero<R>());
        for (size_t i = 0; i < a.c.size(); ++i) next[i] = lb * a.c[i];
        for (int j = 0; j <= n; ++j)
            next[static_cast<size_t>(j + shift)] =
                next[static_cast<size_t>(j + shift)] - la * b.c[static_cast<size_t>(j)];
        a.c = std::move(next);
        a.norm();
        --e;
    }
    if (e > 0) {
        R f = ring_pow(lb, static_cast<unsigned>(e));
        for (auto& x : a.c) x = f * x;
    }
    return a;
}

// Subresultant pseudo-remainder sequence; exact resultant of nonzero inputs.
template <class R>
R resultant_prs(PolyR<R> a, PolyR<R> b) {
    bool neg = false;
    if (a.deg() < b.deg()) {
        if ((a.deg() & 1) && (b.deg() & 1)) neg = !neg;
        std::swap(a, b);
    }
    R num = ring_one<R>(), den = ring_one<R>();
    if (b.deg() > 0) {
        R g = ring_one<R>(), h = ring_one<R>();
        while (true) {
            int m = a.deg(), n = b.deg(), d = m - n;
            PolyR<R> r = prem(a, b);
            if (r.zero()) return ring_zero<R>();
            if ((m & 1) && (n & 1)) neg = !neg;
            num = num * ring_pow(b.lc(), static_cast<unsigned>(m - r.deg()));
            den = den * ring_pow(b.lc(), static_cast<unsigned>((d + 1) * n));
            R div = g * ring_pow(h, static_cast<unsigned>(d));
            num = num * ring_pow(div, static_cast<unsigned>(n));
            for (auto& x : r.c) x = ring_exact_div(x, div);
            a = b;
            b = r;
            g = a.lc();
            if (d == 1)
                h = g;
            else if (d > 1)
                h = ring_exact_div(ring_pow(g, static_cast<unsigned>(d)),
                                   ring_pow(h, static_cast<unsigned>(d - 1)));
            if (b.deg() == 0) break;
        }
    }
    num = num * ring_pow(b.lc(), static_cast<unsigned>(a.deg()));
    R res = ring_exact_div(num, den);
    if (neg) res = ring_zero<R>() - res;
    return res;
}

}  // namespace

Rat resultant(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    const auto& fa = a.primitive();
    const auto& fb = b.primitive();
    PolyR<Int> pa, pb;
    pa.c = fa.coeffs;
    pb.c = fb.coeffs;
    Int core = resultant_prs<Int>(pa, pb);
    return Rat(core) * rat_pow(fa.content, static_cast<unsigned>(b.degree())) *
           rat_pow(fb.content, static_cast<unsigned>(a.degree()));
}

Rat discriminant(const RatPoly& p) {
    int n = p.degree();
    if (n < 1) throw DomainError("discriminant needs degree >= 1");
    if (n == 1) return Rat(1);
    Rat res = resultant(p, p.derivative());
    Rat d = res / p.lc();
    if (((static_cast<long>(n) * (n - 1)) / 2) % 2 != 0) d = -d;
    return d;
}

int sturm_real_root_count(const RatPoly& p) {
    if (p.is_zero()) throw DomainError("Sturm count of zero polynomial");
    if (gcd(p, p.derivative()).degree() > 0)
        throw DomainError("Sturm count requires squarefree input");
    if (p.degree() == 0) return 0;
    std::vector<RatPoly> chain;
    chain.push_back(primitive_scaled(p));
    chain.push_back(primitive_scaled(p.derivative()));
    while (!chain.back().is_zero()) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain.back();
        RatPoly r = -(a.divrem(b).second);
        if (r.is_zero()) break;
        chain.push_back(primitive_scaled(r));
    }
    auto variations = [&](bool at_plus_inf) {
        int count = 0, prev = 0;
        for (const auto& q : chain) {
            if (q.is_zero()) continue;
            int s = sgn(q.lc());
            if (!at_plus_inf && (q.degree() & 1)) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++count;
            if (s != 0) prev = s;
        }
        return count;
    };
    return variations(false) - variations(true);
}

RatPoly reciprocal_minpoly(const RatPoly& m) {
    if (m.is_zero() || m.degree() < 1) throw DomainError("reciprocal of a constant");
    if (m.lc() != 1) throw DomainError("reciprocal expects a monic polynomial");
    if (m == RatPoly::variable()) return RatPoly(Rat(1));
    if (sgn(m.coeff(0)) == 0)
        throw DomainError("reciprocal expects nonzero constant term (or exactly T)");
    std::vector<Rat> rev(m.coeffs().rbegin(), m.coeffs().rend());
    RatPoly r = RatPoly::from_coeffs(std::move(rev));
    const auto& form = r.primitive();
    std::vector<Rat> out;
    out.reserve(form.coeffs.size());
    for (const auto& x : form.coeffs) out.emplace_back(x);
    return RatPoly::from_coeffs(std::move(out));
}

RatPoly cyclotomic(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic index must be >= 1");
    static std::map<unsigned, RatPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Rat> xn(n + 1, Rat(0));
    xn[0] = Rat(-1);
    xn[n] = Rat(1);
    RatPoly p = RatPoly::from_coeffs(std::move(xn));
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = p.exact_div(cyclotomic(d));
    cache[n] = p;
    return p;
}

// ----- bivariate -----

BiPoly BiPoly::from_coeffs(std::vector<RatPoly> coeffs) {
    BiPoly p;
    p.c_ = std::move(coeffs);
    while (!p.c_.empty() && p.c_.back().is_zero()) p.c_.pop_back();
    return p;
}

static const RatPoly kZeroPoly;

const RatPoly& BiPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroPoly;
    return c_[static_cast<size_t>(i)];
}

BiPoly BiPoly::derivative_y() const {
    if (c_.size() <= 1) return BiPoly();
    std::vector<RatPoly> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return from_coeffs(std::move(r));
}

RatPoly BiPoly::specialize_t(const Rat& t0) const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].eval(t0);
    return RatPoly::from_coeffs(std::move(r));
}

std::string BiPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree_y(); i >= 0; --i) {
        if (coeff(i).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff(i).str() << ")";
        if (i > 0) {
            os << "*Y";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RatPoly resultant_y(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    PolyR<RatPoly> pa, pb;
    pa.c = a.coeffs();
    pb.c = b.coeffs();
    return resultant_prs<RatPoly>(pa, pb);
}

RatPoly discriminant_in_t(const BiPoly& p) {
    int n = p.degree_y();
    if (n < 1) throw DomainError("discriminant needs Y-degree >= 1");
    if (n == 1) return RatPoly(Rat(1));
    RatPoly res = resultant_y(p, p.derivative_y());
    RatPoly d = res.exact_div(p.coeff(n));
    if (((static_cast<long>(n) * (n - 1)) / 2) % 2 != 0) d = -d;
    return d;
}

RatPoly critical_values_poly(const RatPoly& m) {
    int n = m.degree();
    if (n < 2) throw DomainError("critical values need degree >= 2");
    RatPoly dm = m.derivative();
    std::vector<RatPoly> da(static_cast<size_t>(dm.degree()) + 1);
    for (int i = 0; i <= dm.degree(); ++i) da[static_cast<size_t>(i)] = RatPoly(dm.coeff(i));
    std::vector<RatPoly> db(static_cast<size_t>(n) + 1);
    db[0] = RatPoly::from_coeffs({-m.coeff(0), Rat(1)});  // T - m_0
    for (int i = 1; i <= n; ++i) db[static_cast<size_t>(i)] = RatPoly(-m.coeff(i));
    RatPoly res = resultant_y(BiPoly::from_coeffs(std::move(da)), BiPoly::from_coeffs(std::move(db)));
    if (res.is_zero() || res.degree() < 1)
        throw DomainError("degenerate critical values polynomial");
    return res.monic();
}

// ----- primes and machine-prime arithmetic -----

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1u) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1u;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(bound + 1, true);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

ModReduction reduce_mod_p(const RatPoly& p, std::uint64_t prime) {
    ModReduction out;
    if (prime < 2 || !is_prime_u64(prime)) throw DomainError("modulus must be prime");
    if (p.is_zero()) throw DomainError("reduction of zero polynomial");
    const auto& form = p.primitive();
    Int pr(static_cast<unsigned long>(prime));
    if (mpz_divisible_p(form.content.get_den().get_mpz_t(), pr.get_mpz_t())) {
        out.status = ModStatus::Excluded;
        out.reason = "prime divides a coefficient denominator";
        return out;
    }
    if (mpz_divisible_p(form.coeffs.back().get_mpz_t(), pr.get_mpz_t())) {
        out.status = ModStatus::Excluded;
        out.reason = "prime divides the leading coefficient";
        return out;
    }
    out.content_divisible =
        mpz_divisible_p(form.content.get_num().get_mpz_t(), pr.get_mpz_t());
    out.coeffs.resize(form.coeffs.size());
    for (size_t i = 0; i < form.coeffs.size(); ++i)
        out.coeffs[i] = mpz_fdiv_ui(form.coeffs[i].get_mpz_t(), static_cast<unsigned long>(prime));
    return out;
}

RootsModP roots_mod_p(const RatPoly& p, std::uint64_t prime) {
    if (prime > 10000000ull) throw DomainError("prime too large for root enumeration");
    RootsModP out;
    ModReduction red = reduce_mod_p(p, prime);
    if (red.status == ModStatus::Excluded) {
        out.status = ModStatus::Excluded;
        out.reason = red.reason;
        return out;
    }
    for (std::uint64_t x = 0; x < prime; ++x) {
        std::uint64_t acc = 0;
        for (size_t i = red.coeffs.size(); i-- > 0;)
            acc = (mulmod_u64(acc, x, prime) + red.coeffs[i]) % prime;
        if (acc == 0) out.roots.push_back(x);
    }
    return out;
}

// dense polynomial over F_p, lowest first, normalized
namespace {

struct FpPoly {
    std::uint64_t p;
    std::vector<std::uint64_t> c;
    void norm() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
};

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.p, {}};
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + static_cast<unsigned __int128>(a.c[i]) * b.c[j]) % a.p;
    }
    r.norm();
    return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m) {
    std::uint64_t p = m.p;
    std::uint64_t inv_lead = powmod_u64(m.c.back(), p - 2, p);
    while (a.deg() >= m.deg()) {
        std::uint64_t coef = mulmod_u64(a.c.back(), inv_lead, p);
        int shift = a.deg() - m.deg();
        for (size_t j = 0; j < m.c.size(); ++j) {
            std::uint64_t sub = mulmod_u64(coef, m.c[j], p);
            std::uint64_t& slot = a.c[static_cast<size_t>(shift) + j];
            slot = (slot + p - sub) % p;
        }
        a.norm();
        if (a.c.empty()) break;
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    a.norm();
    b.norm();
    while (!b.c.empty()) {
        FpPoly r = fp_mod(a, b);
        a = b;
        b = r;
    }
    if (!a.c.empty()) {
        std::uint64_t inv = powmod_u64(a.c.back(), a.p - 2, a.p);
        for (auto& x : a.c) x = mulmod_u64(x, inv, a.p);
    }
    return a;
}

FpPoly fp_deriv(const FpPoly& a) {
    FpPoly r{a.p, {}};
    for (size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(mulmod_u64(a.c[i], i % a.p, a.p));
    r.norm();
    return r;
}

// x^(p^k) iterates of the Frobenius modulo f, for distinct-degree splitting
FpPoly fp_frobenius_step(const FpPoly& w, const FpPoly& f) {
    std::uint64_t p = f.p;
    FpPoly r{p, {1 % p}};
    FpPoly base = w;
    std::uint64_t e = p;
    while (e) {
        if (e & 1u) r = fp_mod(fp_mul(r, base), f);
        base = fp_mod(fp_mul(base, base), f);
        e >>= 1u;
    }
    return r;
}

FpPoly fp_divexact(const FpPoly& a, const FpPoly& b) {
    // schoolbook division, remainder asserted zero
    if (b.c.empty() || a.c.size() < b.c.size()) throw DomainError("bad division over F_p");
    FpPoly rem = a, q{a.p, {}};
    std::uint64_t p = a.p;
    q.c.assign(a.c.size() - b.c.size() + 1, 0);
    std::uint64_t inv = powmod_u64(b.c.back(), p - 2, p);
    while (rem.deg() >= b.deg() && !rem.c.empty()) {
        int shift = rem.deg() - b.deg();
        std::uint64_t coef = mulmod_u64(rem.c.back(), inv, p);
        q.c[static_cast<size_t>(shift)] = coef;
        for (size_t j = 0; j < b.c.size(); ++j) {
            std::uint64_t sub = mulmod_u64(coef, b.c[j], p);
            std::uint64_t& slot = rem.c[static_cast<size_t>(shift) + j];
            slot = (slot + p - sub) % p;
        }
        rem.norm();
    }
    if (!rem.c.empty()) throw DomainError("inexact division over F_p");
    q.norm();
    return q;
}

}  // namespace

DegreePattern factor_degree_pattern_mod_p(const RatPoly& poly, std::uint64_t prime) {
    DegreePattern out;
    ModReduction red = reduce_mod_p(poly, prime);
    if (red.status == ModStatus::Excluded) {
        out.status = ModStatus::Excluded;
        out.reason = red.reason;
        return out;
    }
    FpPoly f{prime, red.coeffs};
    f.norm();
    if (f.deg() < 1) {
        out.status = ModStatus::Excluded;
        out.reason = "constant reduction";
        return out;
    }
    FpPoly d = fp_deriv(f);
    FpPoly sq = d.c.empty() ? f : fp_gcd(f, d);
    if (sq.deg() > 0) {
        out.status = ModStatus::Excluded;
        out.reason = "reduction not squarefree";
        return out;
    }
    // distinct-degree factorization
    FpPoly x{prime, {0, 1}};
    FpPoly w = fp_mod(x, f);
    int degree_left = f.deg();
    for (int d_step = 1; degree_left >= 2 * d_step; ++d_step) {
        w = fp_frobenius_step(w, f);
        FpPoly diff = w;
        // diff = w - x
        if (diff.c.size() < 2) diff.c.resize(2, 0);
        diff.c[1] = (diff.c[1] + prime - 1) % prime;
        diff.norm();
        FpPoly g = diff.c.empty() ? f : fp_gcd(f, diff);
        if (g.deg() > 0) {
            for (int k = 0; k < g.deg() / d_step; ++k) out.pattern.push_back(d_step);
            f = fp_divexact(f, g);
            degree_left = f.deg();
            if (degree_left == 0) break;
            w = fp_mod(w, f);
        }
    }
    if (f.deg() > 0) out.pattern.push_back(f.deg());
    std::sort(out.pattern.begin(), out.pattern.end());
    return out;
}

IrredCertificate irreducibility_certificate(const RatPoly& p, int good_primes) {
    IrredCertificate cert;
    if (p.degree() < 1) return cert;
    int seen = 0;
    for (std::uint64_t q = 2; seen < good_primes && q < 100000; ++q) {
        if (!is_prime_u64(q)) continue;
        DegreePattern pat = factor_degree_pattern_mod_p(p, q);
        if (pat.status == ModStatus::Excluded) continue;
        ++seen;
        if (pat.pattern.size() == 1 && pat.pattern[0] == p.degree()) {
            cert.certified = true;
            cert.prime = q;
            return cert;
        }
    }
    return cert;
}

// ----- factorization over Q -----

namespace {

// Pollard rho on a 64-bit composite; 0 when no factor was found
std::uint64_t rho_u64(std::uint64_t v) {
    for (std::uint64_t c = 1; c < 50; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, v) + c) % v;
            y = (mulmod_u64(y, y, v) + c) % v;
            y = (mulmod_u64(y, y, v) + c) % v;
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = std::gcd(diff, v);
        }
        if (d != 1 && d != v) return d;
    }
    return 0;
}

bool factor_u64_into(std::uint64_t v, std::map<Int, int>& acc) {
    for (std::uint64_t d = 2; d < 1000000 && d * d <= v; d = (d == 2 ? 3 : d + 2))
        while (v % d == 0) {
            acc[Int(static_cast<unsigned long>(d))]++;
            v /= d;
        }
    std::vector<std::uint64_t> stack{v};
    while (!stack.empty()) {
        std::uint64_t m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime_u64(m)) {
            acc[Int(static_cast<unsigned long>(m))]++;
            continue;
        }
        std::uint64_t f = rho_u64(m);
        if (f == 0) return false;
        stack.push_back(f);
        stack.push_back(m / f);
    }
    return true;
}

// full factorization of |n| by trial division then Pollard rho; nullopt
// when a cofactor is out of desk scale
std::optional<std::vector<std::pair<Int, int>>> factor_abs(Int n) {
    if (sgn(n) < 0) n = -n;
    if (sgn(n) == 0) return std::nullopt;
    std::map<Int, int> acc;
    if (!n.fits_ulong_p()) {
        // strip small primes, hoping the cofactor shrinks into 64 bits
        for (std::uint64_t d = 2; d <= 20000; d = (d == 2 ? 3 : d + 2))
            while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
                acc[Int(static_cast<unsigned long>(d))]++;
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d));
            }
        if (!n.fits_ulong_p()) {
            if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
                acc[n]++;
                n = 1;
            } else {
                Int r;
                if (is_square_int(n, &r) && mpz_probab_prime_p(r.get_mpz_t(), 32)) {
                    acc[r] += 2;
                    n = 1;
                } else {
                    return std::nullopt;
                }
            }
        }
    }
    if (n > 1 && !factor_u64_into(n.get_ui(), acc)) return std::nullopt;
    std::vector<std::pair<Int, int>> out(acc.begin(), acc.end());
    return out;
}

std::optional<std::vector<Int>> divisors_of(const Int& n) {
    auto fac = factor_abs(n);
    if (!fac) return std::nullopt;
    std::vector<Int> divs{Int(1)};
    for (const auto& [prime, mult] : *fac) {
        size_t base = divs.size();
        Int pk(1);
        for (int k = 1; k <= mult; ++k) {
            pk *= prime;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 200000) return std::nullopt;
    }
    return divs;
}

// monic quartic with no rational roots: complete split into quadratics or
// proof of irreducibility, via the resolvent cubic of the depressed form.
// decisive=false only when divisor enumeration overflowed desk scale.
std::pair<std::vector<RatPoly>, bool> factor_quartic(const RatPoly& f) {
    Rat shift = f.coeff(3) / Rat(4);
    // g(y) = f(y - shift) = y^4 + p y^2 + q y + r
    RatPoly y_minus = RatPoly::from_coeffs({-shift, Rat(1)});
    RatPoly g(Rat(0));
    for (int i = f.degree(); i >= 0; --i) g = g * y_minus + RatPoly(f.coeff(i));
    Rat p = g.coeff(2), q = g.coeff(1), r = g.coeff(0);

    auto undepress = [&](const RatPoly& h) {
        // h(y) back to x: substitute y = x + shift
        RatPoly x_plus = RatPoly::from_coeffs({shift, Rat(1)});
        RatPoly out(Rat(0));
        for (int i = h.degree(); i >= 0; --i) out = out * x_plus + RatPoly(h.coeff(i));
        return out;
    };

    auto quad_pair = [&](const Rat& u, const Rat& v, const Rat& w) {
        RatPoly a = RatPoly::from_coeffs({v, u, Rat(1)});
        RatPoly b = RatPoly::from_coeffs({w, -u, Rat(1)});
        return std::make_pair(std::vector<RatPoly>{undepress(a), undepress(b)}, true);
    };

    if (sgn(q) == 0) {
        // biquadratic y^4 + p y^2 + r
        Rat s;
        if (is_square_rational(p * p - Rat(4) * r, &s)) {
            Rat v = (p + s) / Rat(2), w = (p - s) / Rat(2);
            return std::make_pair(
                std::vector<RatPoly>{undepress(RatPoly::from_coeffs({v, Rat(0), Rat(1)})),
                                     undepress(RatPoly::from_coeffs({w, Rat(0), Rat(1)}))},
                true);
        }
        Rat sr;
        if (is_square_rational(r, &sr)) {
            Rat options[2] = {sr, Rat(-sr)};
            for (const Rat& v : options) {
                Rat u2 = Rat(2) * v - p;
                Rat u;
                if (sgn(u2) > 0 && is_square_rational(u2, &u)) return quad_pair(u, v, v);
            }
        }
        return std::make_pair(std::vector<RatPoly>{f}, true);
    }
    // z^3 + 2p z^2 + (p^2-4r) z - q^2 has root u^2 for any split into quadratics
    RatPoly resolvent = RatPoly::from_coeffs(
        {-(q * q), p * p - Rat(4) * r, Rat(2) * p, Rat(1)});
    const auto& form = resolvent.primitive();
    auto num_divs = divisors_of(form.coeffs.front());
    auto den_divs = divisors_of(form.coeffs.back());
    if (!num_divs || !den_divs) return std::make_pair(std::vector<RatPoly>{f}, false);
    for (const Int& a : *num_divs) {
        for (const Int& b : *den_divs) {
            for (int s = 0; s < 2; ++s) {
                Rat z(s ? Int(-a) : a, b);
                z.canonicalize();
                if (sgn(resolvent.eval(z)) != 0) continue;
                Rat u;
                if (sgn(z) <= 0 || !is_square_rational(z, &u)) continue;
                Rat v = ((p + z) - q / u) / Rat(2);
                Rat w = ((p + z) + q / u) / Rat(2);
                return quad_pair(u, v, w);
            }
        }
    }
    return std::make_pair(std::vector<RatPoly>{f}, true);
}

}  // namespace

std::optional<std::vector<std::pair<Int, int>>> factor_integer(const Int& n) {
    if (sgn(n) == 0) throw DomainError("factorization of zero");
    return factor_abs(n);
}

Factorization factor_rational(const RatPoly& input) {
    if (input.is_zero()) throw DomainError("factorization of zero polynomial");
    Factorization out;
    out.unit = input.lc();
    RatPoly work = input.monic();

    // powers of T
    while (work.degree() > 0 && sgn(work.coeff(0)) == 0) {
        out.factors.push_back(RatPoly::variable());
        std::vector<Rat> shifted(work.coeffs().begin() + 1, work.coeffs().end());
        work = RatPoly::from_coeffs(std::move(shifted));
    }

    // rational roots of the primitive form
    bool roots_stripped = true;
    if (work.degree() > 0) {
        const auto& form = work.primitive();
        auto nd = divisors_of(form.coeffs.front());
        auto ld = divisors_of(form.coeffs.back());
        if (nd && ld) {
            std::vector<Rat> candidates;
            for (const Int& a : *nd)
                for (const Int& b : *ld)
                    for (int s = 0; s < 2; ++s) {
                        Rat r(s ? Int(-a) : a, b);
                        r.canonicalize();
                        candidates.push_back(r);
                    }
            std::sort(candidates.begin(), candidates.end(),
                      [](const Rat& x, const Rat& y) { return cmp(x, y) < 0; });
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            for (const Rat& r : candidates) {
                while (work.degree() > 0 && sgn(work.eval(r)) == 0) {
                    out.factors.push_back(RatPoly::from_coeffs({-r, Rat(1)}));
                    work = work.exact_div(RatPoly::from_coeffs({-r, Rat(1)}));
                }
            }
        } else {
            roots_stripped = false;
        }
    }
    if (!roots_stripped) {
        // without the root pass the low-degree shortcuts below are unsound
        out.complete = false;
        out.note = "rational-root search skipped: coefficients out of desk scale";
        if (work.degree() > 0) out.factors.push_back(work);
        return out;
    }

    // squarefree split of what remains, then per-degree handling
    std::vector<RatPoly> pending;
    {
        RatPoly rest = work;
        while (rest.degree() > 0) {
            RatPoly g = gcd(rest, rest.derivative());
            if (g.degree() == 0) {
                pending.push_back(rest);
                break;
            }
            pending.push_back(rest.exact_div(g));
            rest = g;
        }
    }
    // pending holds a chain whose product (with multiplicities folded in) is
    // work; refactor each chain entry and merge
    std::vector<RatPoly> chain_factors;
    for (const RatPoly& piece : pending) {
        RatPoly rem = piece;
        int d = rem.degree();
        if (d == 0) continue;
        if (d <= 3) {
            chain_factors.push_back(rem);  // no rational roots left: irreducible
            continue;
        }
        if (d == 4) {
            auto [parts, decisive] = factor_quartic(rem);
            for (const auto& f : parts) chain_factors.push_back(f);
            if (!decisive) {
                out.complete = false;
                out.note = "quartic resolvent root search out of desk scale";
            }
            continue;
        }
        IrredCertificate cert = irreducibility_certificate(rem);
        if (cert.certified) {
            chain_factors.push_back(rem);
            continue;
        }
        if (d == 5) {
            // no rational root: the only proper split is 2+3; refute it from
            // modular degree patterns when possible
            bool split_possible = true;
            int seen = 0;
            for (std::uint64_t q = 2; seen < 25 && q < 100000 && split_possible; ++q) {
                if (!is_prime_u64(q)) continue;
                DegreePattern pat = factor_degree_pattern_mod_p(rem, q);
                if (pat.status == ModStatus::Excluded) continue;
                ++seen;
                int ones = 0, twos = 0;
                bool big = false;
                for (int deg : pat.pattern) {
                    if (deg == 1) ++ones;
                    if (deg == 2) ++twos;
                    if (deg > 3) big = true;
                }
                // a 2+3 split forces every pattern to refine {2,3}
                (void)ones;
                (void)twos;
                bool compatible = !big;
                if (compatible) {
                    // pieces must partition into a group summing 2 and a
                    // group summing 3
                    std::vector<int> ps = pat.pattern;
                    int n_pieces = static_cast<int>(ps.size());
                    compatible = false;
                    for (int mask = 0; mask < (1 << n_pieces); ++mask) {
                        int sum = 0;
                        for (int i = 0; i < n_pieces; ++i)
                            if (mask & (1 << i)) sum += ps[static_cast<size_t>(i)];
                        if (sum == 2) {
                            compatible = true;
                            break;
                        }
                    }
                }
                if (!compatible) split_possible = false;
            }
            if (!split_possible) {
                chain_factors.push_back(rem);
                continue;
            }
        }
        out.complete = false;
        out.note = "no irreducibility certificate for a degree-" + std::to_string(d) +
                   " factor; supply the factorization explicitly";
        chain_factors.push_back(rem);
    }
    // restore multiplicities: chain entry k divides entry k-1's radical
    // layering; recover by dividing work by each found factor repeatedly
    for (const RatPoly& f : chain_factors) {
        while (true) {
            auto [q, r] = work.divrem(f);
            if (!r.is_zero()) break;
            out.factors.push_back(f.monic());
            work = q;
            if (work.degree() < f.degree()) break;
        }
    }
    if (work.degree() != 0) {
        out.complete = false;
        if (out.note.empty()) out.note = "unfactored remainder of degree " + std::to_string(work.degree());
        out.factors.push_back(work);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const RatPoly& x, const RatPoly& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        for (int i = x.degree(); i >= 0; --i) {
            int c = cmp(x.coeff(i), y.coeff(i));
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

}  // namespace galois
