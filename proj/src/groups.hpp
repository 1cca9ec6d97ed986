#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "common.hpp"

namespace galois {

// Permutation of {0..n-1}, stored as the image array. Enumeration-backed
// operations are capped at degree 16 (packed 4-bit keys).
class Perm {
  public:
    Perm() = default;
    static Perm identity(int n);
    static Perm from_images(std::vector<int> images);
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(im_.size()); }
    int apply(int i) const { return im_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return im_; }

    // (p * q)(i) = p(q(i))
    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    Perm power(long a) const;

    bool operator==(const Perm& o) const { return im_ == o.im_; }
    bool operator!=(const Perm& o) const { return im_ != o.im_; }
    bool operator<(const Perm& o) const { return im_ < o.im_; }

    bool is_identity() const;
    bool is_even() const;
    long order() const;
    std::uint64_t key() const;  // degree <= 16 only
    // cycle decomposition; fixed points included only on request
    std::vector<std::vector<int>> cycles(bool with_fixed = false) const;
    std::string str() const;

  private:
    std::vector<int> im_;
};

// Multiset of cycle lengths (ascending, fixed points included).
struct CycleType {
    std::vector<int> lengths;

    static CycleType of(const Perm& g);
    static CycleType from_lengths(std::vector<int> lengths);

    long degree() const;
    long element_order() const;  // lcm of lengths
    bool even() const;
    bool operator==(const CycleType& o) const { return lengths == o.lengths; }
    bool operator!=(const CycleType& o) const { return lengths != o.lengths; }
    bool operator<(const CycleType& o) const { return lengths < o.lengths; }
    std::string str() const;  // e.g. "[1^3 2^1]"
};

// Type of g^a for any g of the given type: each length-l cycle contributes
// gcd(l,a) cycles of length l/gcd(l,a).
CycleType cycle_type_power(const CycleType& ct, long a);

// An S_n class inside A_n splits into two A_n classes exactly when all
// cycle lengths are odd and pairwise distinct. Odd types are a domain error.
bool an_class_splits(const CycleType& ct);

// Representative with cycles laid out on consecutive points, shortest first.
Perm canonical_of_type(const CycleType& ct);

// Exact A_n-conjugacy for even permutations of equal type, degree <= 12.
// Non-split types are conjugate outright; split types are decided by
// enumerating cycle-alignment conjugators and looking for an even one.
bool conjugate_in_An(const Perm& g, const Perm& h);

// A_n class of an even permutation: its type plus a split tag (0 when the
// S_n class does not split; otherwise 1 for the class of the canonical
// representative, 2 for the other).
struct AnClass {
    CycleType type;
    int split_tag = 0;
};
AnClass an_class_of(const Perm& g);

// Finite permutation group with eagerly built element list and conjugacy
// classes. Construction throws CapError when the closure exceeds the cap
// (default 20000, override via GALOIS_PARAM_CAP) or the degree exceeds 16.
class PermGroup {
  public:
    struct ConjClass {
        Perm rep;
        std::vector<int> member_ids;
        long element_order = 0;
        std::string name;  // "<order><letter>" by discovery order
    };

    static PermGroup from_generators(int degree, std::vector<Perm> gens,
                                     std::string name = "");

    int degree() const { return degree_; }
    const std::string& name() const { return name_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Perm>& elements() const { return elems_; }
    long order() const { return static_cast<long>(elems_.size()); }
    const std::vector<ConjClass>& classes() const { return classes_; }

    int element_id(const Perm& g) const;  // -1 when absent
    bool contains(const Perm& g) const { return element_id(g) >= 0; }
    int class_of(const Perm& g) const;  // index into classes(); throws if absent
    int class_index_by_name(const std::string& name) const;  // -1 when absent

    // subgroup closure of a set of elements, as sorted element ids
    std::vector<int> closure_of(const std::vector<Perm>& seed) const;

  private:
    int degree_ = 0;
    std::string name_;
    std::vector<Perm> gens_;
    std::vector<Perm> elems_;
    std::unordered_map<std::uint64_t, int> ids_;
    std::vector<int> class_of_elem_;
    std::vector<ConjClass> classes_;
};

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);
PermGroup dihedral_group(int n);  // order 2n on n points
PermGroup klein_four_group();
// PSL2(F_p) on the projective line (p+1 points), generators x -> x+1 and
// x -> -1/x. Order verified to equal p(p^2-1)/2. 5 <= p <= 13.
PermGroup psl2_group(std::uint64_t p);

// {C^a : C in classes, a >= 1} as class indices, sorted.
std::vector<int> power_closure_indices(const PermGroup& g,
                                       const std::vector<int>& class_ids);

// Same closure at the level of S_n cycle types (no enumeration; valid for
// any n). Powers only need a ranging over divisors of each type's order.
std::vector<CycleType> sn_power_closure(const std::vector<CycleType>& types);

// Union of the classes closed under all powers coprime to the exponent.
bool is_rational_class_set(const PermGroup& g, const std::vector<int>& class_ids);

// Tuple-generation test: true when every tuple (x_1..x_s), x_i in C_i,
// generates. The largest class is anchored to one representative (valid by
// conjugation symmetry); witness holds a non-generating tuple in input
// class order when false.
struct GCompleteResult {
    bool complete = false;
    std::vector<Perm> witness;
};
GCompleteResult is_g_complete(const PermGroup& g, const std::vector<int>& class_ids);

// All subgroups as sorted element-id lists, by layered pairwise joins of
// cyclic subgroups. Pre: |G| <= 360.
std::vector<std::vector<int>> enumerate_subgroups(const PermGroup& g);

// Smallest class set (r <= max_r) whose union generates while some class
// stays outside its power closure; None when no witness exists in range.
struct Cor53Witness {
    std::vector<int> generating_class_ids;
    int excluded_class_id = -1;
};
std::optional<Cor53Witness> find_class_set_cor53(const PermGroup& g, int max_r = 4);

// (g_0, g_0 g_{2r-1}^{-1} g_0, ..., g_0 g_1^{-1} g_0, g_1, ..., g_{2r-1})
// where g_1 is an involution, g_1..g_r generate, and the tail repeats
// inverses in reverse. The verifier checks the involution, the product and
// generation of the entries after g_0, and the reflection symmetry.
struct RealTupleReport {
    std::vector<Perm> tuple;  // length 4r-1
    bool involution_ok = false;
    bool product_ok = false;
    bool generates_ok = false;
    bool symmetry_ok = false;
    bool ok() const { return involution_ok && product_ok && generates_ok && symmetry_ok; }
};
RealTupleReport real_tuple_construction(const PermGroup& g);

}  // namespace galois
