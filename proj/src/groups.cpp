#include "groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace galois {

// ----- Perm -----

Perm Perm::identity(int n) {
    if (n < 0) throw DomainError("negative degree");
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    Perm p;
    p.im_ = std::move(im);
    return p;
}

Perm Perm::from_images(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : images) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw DomainError("image array is not a permutation");
        seen[static_cast<size_t>(v)] = 1;
    }
    Perm p;
    p.im_ = std::move(images);
    return p;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm p = identity(n);
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= n || used[static_cast<size_t>(from)])
                throw DomainError("bad cycle notation");
            used[static_cast<size_t>(from)] = 1;
            p.im_[static_cast<size_t>(from)] = to;
        }
    }
    return from_images(std::move(p.im_));  // revalidates
}

Perm Perm::operator*(const Perm& o) const {
    if (degree() != o.degree()) throw DomainError("degree mismatch in composition");
    std::vector<int> im(im_.size());
    for (size_t i = 0; i < im.size(); ++i) im[i] = im_[static_cast<size_t>(o.im_[i])];
    Perm p;
    p.im_ = std::move(im);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> im(im_.size());
    for (size_t i = 0; i < im_.size(); ++i) im[static_cast<size_t>(im_[i])] = static_cast<int>(i);
    Perm p;
    p.im_ = std::move(im);
    return p;
}

Perm Perm::power(long a) const {
    long n = order();
    a %= n;
    if (a < 0) a += n;
    Perm acc = identity(degree());
    Perm base = *this;
    while (a > 0) {
        if (a & 1) acc = acc * base;
        base = base * base;
        a >>= 1;
    }
    return acc;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < im_.size(); ++i)
        if (im_[i] != static_cast<int>(i)) return false;
    return true;
}

bool Perm::is_even() const {
    int transpositions = 0;
    for (const auto& cyc : cycles()) transpositions += static_cast<int>(cyc.size()) - 1;
    return transpositions % 2 == 0;
}

long Perm::order() const { return CycleType::of(*this).element_order(); }

std::uint64_t Perm::key() const {
    if (degree() > 16) throw CapError("packed keys require degree <= 16");
    std::uint64_t k = 0;
    for (size_t i = 0; i < im_.size(); ++i)
        k |= static_cast<std::uint64_t>(im_[i]) << (4 * i);
    return k;
}

std::vector<std::vector<int>> Perm::cycles(bool with_fixed) const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(im_.size(), 0);
    for (int start = 0; start < degree(); ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cyc;
        int cur = start;
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = 1;
            cyc.push_back(cur);
            cur = im_[static_cast<size_t>(cur)];
        }
        if (cyc.size() > 1 || with_fixed) out.push_back(std::move(cyc));
    }
    return out;
}

std::string Perm::str() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& cyc : cs) {
        s += '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(cyc[i]);
        }
        s += ')';
    }
    return s;
}

// ----- CycleType -----

CycleType CycleType::of(const Perm& g) {
    std::vector<int> lens;
    for (const auto& cyc : g.cycles(true)) lens.push_back(static_cast<int>(cyc.size()));
    std::sort(lens.begin(), lens.end());
    return CycleType{std::move(lens)};
}

CycleType CycleType::from_lengths(std::vector<int> lengths) {
    for (int l : lengths)
        if (l < 1) throw DomainError("cycle lengths must be positive");
    std::sort(lengths.begin(), lengths.end());
    return CycleType{std::move(lengths)};
}

long CycleType::degree() const {
    long n = 0;
    for (int l : lengths) n += l;
    return n;
}

long CycleType::element_order() const {
    long m = 1;
    for (int l : lengths) m = std::lcm(m, static_cast<long>(l));
    return m;
}

bool CycleType::even() const {
    long transpositions = 0;
    for (int l : lengths) transpositions += l - 1;
    return transpositions % 2 == 0;
}

std::string CycleType::str() const {
    std::string s = "[";
    size_t i = 0;
    bool first = true;
    while (i < lengths.size()) {
        size_t j = i;
        while (j < lengths.size() && lengths[j] == lengths[i]) ++j;
        if (!first) s += ' ';
        first = false;
        s += std::to_string(lengths[i]) + "^" + std::to_string(j - i);
        i = j;
    }
    s += ']';
    return s;
}

CycleType cycle_type_power(const CycleType& ct, long a) {
    if (a < 1) throw DomainError("power must be >= 1");
    std::vector<int> lens;
    for (int l : ct.lengths) {
        long g = std::gcd(static_cast<long>(l), a);
        for (long i = 0; i < g; ++i) lens.push_back(static_cast<int>(l / g));
    }
    return CycleType::from_lengths(std::move(lens));
}

bool an_class_splits(const CycleType& ct) {
    if (!ct.even()) throw DomainError("split test needs an even cycle type");
    for (size_t i = 0; i < ct.lengths.size(); ++i) {
        if (ct.lengths[i] % 2 == 0) return false;
        if (i + 1 < ct.lengths.size() && ct.lengths[i + 1] == ct.lengths[i]) return false;
    }
    return true;
}

Perm canonical_of_type(const CycleType& ct) {
    std::vector<std::vector<int>> cycles;
    int next = 0;
    for (int l : ct.lengths) {
        std::vector<int> cyc(static_cast<size_t>(l));
        std::iota(cyc.begin(), cyc.end(), next);
        next += l;
        cycles.push_back(std::move(cyc));
    }
    return Perm::from_cycles(static_cast<int>(ct.degree()), cycles);
}

bool conjugate_in_An(const Perm& g, const Perm& h) {
    if (g.degree() != h.degree()) throw DomainError("degree mismatch");
    if (g.degree() > 12) throw CapError("A_n conjugacy capped at degree 12");
    CycleType tg = CycleType::of(g), th = CycleType::of(h);
    if (!tg.even()) throw DomainError("A_n conjugacy needs even permutations");
    if (tg != th) return false;
    if (!an_class_splits(tg)) return true;
    // split type: all lengths odd and distinct, so the conjugators are
    // exactly the cycle alignments; scan them for an even one
    auto gc = g.cycles(true), hc = h.cycles(true);
    auto by_len = [](const std::vector<int>& a, const std::vector<int>& b) {
        return a.size() < b.size();
    };
    std::sort(gc.begin(), gc.end(), by_len);
    std::sort(hc.begin(), hc.end(), by_len);
    std::vector<size_t> rot(gc.size(), 0);
    while (true) {
        std::vector<int> im(static_cast<size_t>(g.degree()));
        for (size_t c = 0; c < gc.size(); ++c) {
            size_t l = gc[c].size();
            for (size_t i = 0; i < l; ++i)
                im[static_cast<size_t>(gc[c][i])] = hc[c][(i + rot[c]) % l];
        }
        Perm sigma = Perm::from_images(std::move(im));
        if (sigma * g * sigma.inverse() != h) throw Error("alignment conjugator failed");
        if (sigma.is_even()) return true;
        size_t c = 0;
        while (c < rot.size()) {
            if (++rot[c] < gc[c].size()) break;
            rot[c] = 0;
            ++c;
        }
        if (c == rot.size()) return false;
    }
}

AnClass an_class_of(const Perm& g) {
    CycleType t = CycleType::of(g);
    if (!t.even()) throw DomainError("not an element of A_n");
    if (!an_class_splits(t)) return {t, 0};
    return {t, conjugate_in_An(canonical_of_type(t), g) ? 1 : 2};
}

// ----- PermGroup -----

namespace {

long enumeration_cap() {
    if (const char* env = std::getenv("GALOIS_PARAM_CAP")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 20000;
}

}  // namespace

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens, std::string name) {
    if (degree > 16) throw CapError("group enumeration supports degree <= 16");
    PermGroup g;
    g.degree_ = degree;
    g.name_ = std::move(name);
    for (const Perm& p : gens) {
        if (p.degree() != degree) throw DomainError("generator degree mismatch");
        if (!p.is_identity()) g.gens_.push_back(p);
    }
    long cap = enumeration_cap();
    g.elems_.push_back(Perm::identity(degree));
    g.ids_.emplace(g.elems_[0].key(), 0);
    for (size_t head = 0; head < g.elems_.size(); ++head) {
        Perm cur = g.elems_[head];
        for (const Perm& gen : g.gens_) {
            Perm next = cur * gen;
            std::uint64_t k = next.key();
            if (g.ids_.count(k)) continue;
            if (static_cast<long>(g.elems_.size()) >= cap)
                throw CapError("group closure exceeds enumeration cap");
            g.ids_.emplace(k, static_cast<int>(g.elems_.size()));
            g.elems_.push_back(std::move(next));
        }
    }
    // conjugacy classes as orbits under generator conjugation
    g.class_of_elem_.assign(g.elems_.size(), -1);
    for (size_t start = 0; start < g.elems_.size(); ++start) {
        if (g.class_of_elem_[start] >= 0) continue;
        int cid = static_cast<int>(g.classes_.size());
        ConjClass cls;
        cls.rep = g.elems_[start];
        cls.element_order = cls.rep.order();
        std::vector<int> queue{static_cast<int>(start)};
        g.class_of_elem_[start] = cid;
        while (!queue.empty()) {
            int id = queue.back();
            queue.pop_back();
            cls.member_ids.push_back(id);
            for (const Perm& gen : g.gens_) {
                Perm conj = gen * g.elems_[static_cast<size_t>(id)] * gen.inverse();
                int cj = g.ids_.at(conj.key());
                if (g.class_of_elem_[static_cast<size_t>(cj)] < 0) {
                    g.class_of_elem_[static_cast<size_t>(cj)] = cid;
                    queue.push_back(cj);
                }
            }
        }
        std::sort(cls.member_ids.begin(), cls.member_ids.end());
        g.classes_.push_back(std::move(cls));
    }
    // stable naming: sort by (element order, first member id), letter within order
    std::vector<int> perm_cls(g.classes_.size());
    std::iota(perm_cls.begin(), perm_cls.end(), 0);
    std::sort(perm_cls.begin(), perm_cls.end(), [&](int a, int b) {
        const auto& ca = g.classes_[static_cast<size_t>(a)];
        const auto& cb = g.classes_[static_cast<size_t>(b)];
        if (ca.element_order != cb.element_order) return ca.element_order < cb.element_order;
        return ca.member_ids[0] < cb.member_ids[0];
    });
    std::vector<ConjClass> ordered;
    for (int idx : perm_cls) ordered.push_back(std::move(g.classes_[static_cast<size_t>(idx)]));
    g.classes_ = std::move(ordered);
    long prev_order = -1;
    int letter = 0;
    for (auto& cls : g.classes_) {
        letter = (cls.element_order == prev_order) ? letter + 1 : 0;
        prev_order = cls.element_order;
        cls.name = std::to_string(cls.element_order) + static_cast<char>('A' + letter);
        for (int id : cls.member_ids)
            g.class_of_elem_[static_cast<size_t>(id)] =
                static_cast<int>(&cls - g.classes_.data());
    }
    return g;
}

int PermGroup::element_id(const Perm& g) const {
    if (g.degree() != degree_) return -1;
    auto it = ids_.find(g.key());
    return it == ids_.end() ? -1 : it->second;
}

int PermGroup::class_of(const Perm& g) const {
    int id = element_id(g);
    if (id < 0) throw DomainError("element not in group");
    return class_of_elem_[static_cast<size_t>(id)];
}

int PermGroup::class_index_by_name(const std::string& name) const {
    for (size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].name == name) return static_cast<int>(i);
    return -1;
}

std::vector<int> PermGroup::closure_of(const std::vector<Perm>& seed) const {
    std::vector<char> in(elems_.size(), 0);
    std::vector<int> members{element_id(Perm::identity(degree_))};
    in[static_cast<size_t>(members[0])] = 1;
    std::vector<int> seed_ids;
    for (const Perm& p : seed) {
        int id = element_id(p);
        if (id < 0) throw DomainError("closure seed outside group");
        seed_ids.push_back(id);
    }
    for (size_t head = 0; head < members.size(); ++head) {
        const Perm& cur = elems_[static_cast<size_t>(members[head])];
        for (int sid : seed_ids) {
            int nid = ids_.at((cur * elems_[static_cast<size_t>(sid)]).key());
            if (!in[static_cast<size_t>(nid)]) {
                in[static_cast<size_t>(nid)] = 1;
                members.push_back(nid);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

// ----- standard groups -----

PermGroup symmetric_group(int n) {
    if (n < 1) throw DomainError("degree must be >= 1");
    std::vector<Perm> gens;
    if (n >= 2) {
        std::vector<int> cyc(static_cast<size_t>(n));
        std::iota(cyc.begin(), cyc.end(), 0);
        gens.push_back(Perm::from_cycles(n, {cyc}));
        gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    }
    return PermGroup::from_generators(n, gens, "S" + std::to_string(n));
}

PermGroup alternating_group(int n) {
    if (n < 3) throw DomainError("alternating group needs degree >= 3");
    std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1, 2}})};
    if (n > 3) {
        std::vector<int> tail;
        if (n % 2 == 1) {
            std::vector<int> cyc(static_cast<size_t>(n));
            std::iota(cyc.begin(), cyc.end(), 0);
            gens.push_back(Perm::from_cycles(n, {cyc}));
        } else {
            std::vector<int> cyc(static_cast<size_t>(n - 1));
            std::iota(cyc.begin(), cyc.end(), 1);
            gens.push_back(Perm::from_cycles(n, {cyc}));
        }
    }
    return PermGroup::from_generators(n, gens, "A" + std::to_string(n));
}

PermGroup cyclic_group(int n) {
    if (n < 1) throw DomainError("order must be >= 1");
    std::vector<int> cyc(static_cast<size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 0);
    std::vector<Perm> gens;
    if (n > 1) gens.push_back(Perm::from_cycles(n, {cyc}));
    return PermGroup::from_generators(n, gens, "Z" + std::to_string(n));
}

PermGroup dihedral_group(int n) {
    if (n < 3) throw DomainError("dihedral group needs n >= 3");
    std::vector<int> cyc(static_cast<size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 0);
    std::vector<int> refl(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) refl[static_cast<size_t>(i)] = (n - i) % n;
    return PermGroup::from_generators(
        n, {Perm::from_cycles(n, {cyc}), Perm::from_images(refl)}, "D" + std::to_string(n));
}

PermGroup klein_four_group() {
    return PermGroup::from_generators(
        4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})},
        "V4");
}

PermGroup psl2_group(std::uint64_t p) {
    if (p < 5 || p > 13 || !(p == 5 || p == 7 || p == 11 || p == 13))
        throw DomainError("psl2 supported for primes 5 <= p <= 13");
    int n = static_cast<int>(p) + 1;  // points 0..p-1, then infinity
    std::vector<int> shift(static_cast<size_t>(n)), inv_neg(static_cast<size_t>(n));
    for (std::uint64_t x = 0; x < p; ++x) shift[x] = static_cast<int>((x + 1) % p);
    shift[p] = static_cast<int>(p);
    inv_neg[0] = static_cast<int>(p);
    inv_neg[p] = 0;
    for (std::uint64_t x = 1; x < p; ++x) {
        // inverse by Fermat
        std::uint64_t inv = 1, base = x, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        inv_neg[x] = static_cast<int>((p - inv) % p);
    }
    PermGroup g = PermGroup::from_generators(
        n, {Perm::from_images(shift), Perm::from_images(inv_neg)},
        "PSL2(" + std::to_string(p) + ")");
    long expected = static_cast<long>(p) * static_cast<long>(p * p - 1) / 2;
    if (g.order() != expected) throw Error("psl2 order check failed");
    return g;
}

// ----- class-set operations -----

std::vector<int> power_closure_indices(const PermGroup& g, const std::vector<int>& class_ids) {
    std::set<int> out;
    for (int cid : class_ids) {
        const Perm& rep = g.classes().at(static_cast<size_t>(cid)).rep;
        long n = rep.order();
        Perm acc = rep;
        for (long a = 1; a <= n; ++a) {
            out.insert(g.class_of(acc));
            acc = acc * rep;
        }
    }
    return {out.begin(), out.end()};
}

std::vector<CycleType> sn_power_closure(const std::vector<CycleType>& types) {
    std::set<CycleType> out;
    for (const CycleType& t : types) {
        long n = t.element_order();
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) out.insert(cycle_type_power(t, d));
    }
    return {out.begin(), out.end()};
}

bool is_rational_class_set(const PermGroup& g, const std::vector<int>& class_ids) {
    std::set<int> in(class_ids.begin(), class_ids.end());
    long exponent = 1;
    for (const auto& cls : g.classes()) exponent = std::lcm(exponent, cls.element_order);
    for (long m = 1; m <= exponent; ++m) {
        if (std::gcd(m, exponent) != 1) continue;
        for (int cid : class_ids) {
            const Perm& rep = g.classes().at(static_cast<size_t>(cid)).rep;
            if (!in.count(g.class_of(rep.power(m)))) return false;
        }
    }
    return true;
}

namespace {

struct ClosureState {
    std::vector<char> in;
    std::vector<int> members;
};

// extend H (closed) by one element; generators = everything added so far
ClosureState extend_closure(const PermGroup& g, const ClosureState& h,
                            std::vector<int>& gen_ids, int new_id) {
    ClosureState s = h;
    gen_ids.push_back(new_id);
    if (!s.in[static_cast<size_t>(new_id)]) {
        s.in[static_cast<size_t>(new_id)] = 1;
        s.members.push_back(new_id);
    }
    for (size_t head = 0; head < s.members.size(); ++head) {
        const Perm& cur = g.elements()[static_cast<size_t>(s.members[head])];
        for (int gid : gen_ids) {
            const Perm& gen = g.elements()[static_cast<size_t>(gid)];
            int nid = g.element_id(cur * gen);
            if (!s.in[static_cast<size_t>(nid)]) {
                s.in[static_cast<size_t>(nid)] = 1;
                s.members.push_back(nid);
            }
        }
    }
    return s;
}

bool g_complete_rec(const PermGroup& g, const std::vector<const std::vector<int>*>& pools,
                    size_t level, const ClosureState& state, std::vector<int>& gen_ids,
                    std::vector<int>& chosen, std::vector<int>* witness) {
    if (state.members.size() == static_cast<size_t>(g.order())) return true;
    if (level == pools.size()) {
        *witness = chosen;
        return false;
    }
    for (int id : *pools[level]) {
        size_t gens_before = gen_ids.size();
        ClosureState next = extend_closure(g, state, gen_ids, id);
        chosen.push_back(id);
        bool ok = g_complete_rec(g, pools, level + 1, next, gen_ids, chosen, witness);
        chosen.pop_back();
        gen_ids.resize(gens_before);
        if (!ok) return false;
    }
    return true;
}

}  // namespace

GCompleteResult is_g_complete(const PermGroup& g, const std::vector<int>& class_ids) {
    if (class_ids.empty()) {
        return {g.order() == 1, {}};
    }
    // anchor the largest class to its representative (conjugation symmetry)
    size_t anchor = 0;
    for (size_t i = 1; i < class_ids.size(); ++i) {
        auto size_of = [&](size_t j) {
            return g.classes()[static_cast<size_t>(class_ids[j])].member_ids.size();
        };
        if (size_of(i) > size_of(anchor)) anchor = i;
    }
    std::vector<int> anchor_only{
        g.classes()[static_cast<size_t>(class_ids[anchor])].member_ids[0]};
    std::vector<const std::vector<int>*> pools{&anchor_only};
    for (size_t i = 0; i < class_ids.size(); ++i)
        if (i != anchor)
            pools.push_back(&g.classes()[static_cast<size_t>(class_ids[i])].member_ids);

    ClosureState empty;
    empty.in.assign(static_cast<size_t>(g.order()), 0);
    int eid = g.element_id(Perm::identity(g.degree()));
    empty.in[static_cast<size_t>(eid)] = 1;
    empty.members.push_back(eid);
    std::vector<int> gen_ids, chosen, witness_ids;
    bool complete =
        g_complete_rec(g, pools, 0, empty, gen_ids, chosen, &witness_ids);
    GCompleteResult res;
    res.complete = complete;
    if (!complete) {
        // report in input class order (anchor back into position)
        std::vector<int> ordered(class_ids.size());
        size_t k = 1;
        for (size_t i = 0; i < class_ids.size(); ++i)
            ordered[i] = (i == anchor) ? witness_ids[0] : witness_ids[k++];
        for (int id : ordered) res.witness.push_back(g.elements()[static_cast<size_t>(id)]);
    }
    return res;
}

std::vector<std::vector<int>> enumerate_subgroups(const PermGroup& g) {
    if (g.order() > 360) throw CapError("subgroup enumeration capped at order 360");
    std::set<std::vector<int>> subs;
    subs.insert(g.closure_of({}));
    for (const Perm& e : g.elements()) subs.insert(g.closure_of({e}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(subs.begin(), subs.end());
        for (size_t i = 0; i < cur.size(); ++i) {
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<Perm> seed;
                for (int id : cur[i]) seed.push_back(g.elements()[static_cast<size_t>(id)]);
                for (int id : cur[j]) seed.push_back(g.elements()[static_cast<size_t>(id)]);
                if (subs.insert(g.closure_of(seed)).second) grew = true;
            }
        }
    }
    return {subs.begin(), subs.end()};
}

std::optional<Cor53Witness> find_class_set_cor53(const PermGroup& g, int max_r) {
    int nc = static_cast<int>(g.classes().size());
    std::vector<int> nontrivial;
    for (int i = 0; i < nc; ++i)
        if (g.classes()[static_cast<size_t>(i)].element_order > 1) nontrivial.push_back(i);
    for (int r = 1; r <= max_r && r <= static_cast<int>(nontrivial.size()); ++r) {
        std::vector<int> idx(static_cast<size_t>(r));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<int> cand;
            for (int i : idx) cand.push_back(nontrivial[static_cast<size_t>(i)]);
            // (1) the union of the classes generates
            std::vector<Perm> seed;
            for (int cid : cand)
                for (int id : g.classes()[static_cast<size_t>(cid)].member_ids)
                    seed.push_back(g.elements()[static_cast<size_t>(id)]);
            if (static_cast<long>(g.closure_of(seed).size()) == g.order()) {
                // (2) some class escapes the power closure
                auto closure = power_closure_indices(g, cand);
                std::set<int> in(closure.begin(), closure.end());
                for (int c = 0; c < nc; ++c) {
                    if (!in.count(c)) return Cor53Witness{cand, c};
                }
            }
            // next r-subset
            int pos = r - 1;
            while (pos >= 0 &&
                   idx[static_cast<size_t>(pos)] ==
                       static_cast<int>(nontrivial.size()) - r + pos)
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int k = pos + 1; k < r; ++k)
                idx[static_cast<size_t>(k)] = idx[static_cast<size_t>(k - 1)] + 1;
        }
    }
    return std::nullopt;
}

RealTupleReport real_tuple_construction(const PermGroup& g) {
    if (g.order() % 2 != 0) throw DomainError("no involution: group has odd order");
    Perm g1;
    bool found = false;
    for (const Perm& e : g.elements())
        if (e.order() == 2) {
            g1 = e;
            found = true;
            break;
        }
    if (!found) throw DomainError("no involution: group has odd order");
    // base g_1..g_r: the involution extended by generators that enlarge the
    // closure
    std::vector<Perm> base{g1};
    for (const Perm& gen : g.generators()) {
        if (static_cast<long>(g.closure_of(base).size()) == g.order()) break;
        base.push_back(gen);
    }
    size_t r = base.size();
    std::vector<Perm> tail = base;
    for (size_t i = r; i-- > 1;) tail.push_back(base[i].inverse());
    // tail = (g_1, ..., g_r, g_r^-1, ..., g_2^-1), length 2r-1
    Perm g0 = g1;
    std::vector<Perm> tuple{g0};
    for (size_t i = tail.size(); i-- > 0;) tuple.push_back(g0 * tail[i].inverse() * g0);
    for (const Perm& t : tail) tuple.push_back(t);

    RealTupleReport rep;
    rep.tuple = tuple;
    rep.involution_ok = g0.order() == 2;
    Perm prod = Perm::identity(g.degree());
    std::vector<Perm> after(tuple.begin() + 1, tuple.end());
    for (const Perm& t : after) prod = prod * t;
    rep.product_ok = prod.is_identity();
    rep.generates_ok = static_cast<long>(g.closure_of(after).size()) == g.order();
    rep.symmetry_ok = true;
    size_t rp = after.size();  // 4r-2
    for (size_t i = 1; i <= rp; ++i) {
        const Perm& lhs = after[rp - i];  // entry r'+1-i, 1-based
        Perm rhs = g0 * after[i - 1].inverse() * g0;
        if (lhs != rhs) rep.symmetry_ok = false;
    }
    return rep;
}

}  // namespace galois
