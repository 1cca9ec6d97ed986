#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extensions.hpp"

namespace galois {

// Outcome of one condition or one whole criterion. Exactly decidable facts
// (class containments, rationality flags, field flags) come back Established
// or Refuted; statements about infinitely many primes are at most
// EmpiricallySupported, with the sampled witnesses attached.
struct Verdict {
    enum class Kind { Established, Refuted, EmpiricallySupported, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::string detail;  // witness / counterexample / reason, human-readable
    std::uint64_t prime_bound = 0;             // EmpiricallySupported only
    std::vector<std::uint64_t> witnesses;      // witness primes, ascending

    static Verdict established(std::string detail = "");
    static Verdict refuted(std::string detail = "");
    static Verdict supported(std::uint64_t bound, std::vector<std::uint64_t> ws,
                             std::string detail = "");
    static Verdict inconclusive(std::string reason);

    long witness_count() const { return static_cast<long>(witnesses.size()); }
    bool passing() const {
        return kind == Kind::Established || kind == Kind::EmpiricallySupported;
    }
    const char* kind_name() const;
    std::string str() const;
};

struct SubVerdict {
    std::string condition;  // e.g. "(IC1-2)", "(BPH)", "(IH-b)[2]"
    Verdict verdict;
};

struct CriterionReport {
    std::string criterion;  // "IC1", "BPH", "SN-GENERAL", ...
    std::vector<SubVerdict> conditions;
    Verdict overall;
    std::vector<std::string> trace;

    const Verdict* find(const std::string& condition) const;  // nullptr if absent
    std::string str() const;
};

// Class-fusion data for comparisons across distinct groups: maps an E1 class
// name to the name of its class in the E2 group. Without it, cross-group
// containment falls back to element orders.
using ClassFusion = std::map<std::string, std::string>;

// Inertia Hypothesis against a comparison extension: some branch point orbit
// of E1 whose locus polynomial has infinitely many prime divisors (a) and
// whose class, seen in the E2 group, avoids the power closure of the
// comparison invariant (b). E1's group must embed in E2's.
CriterionReport eval_inertia_hypothesis(const ExtensionDescriptor& e1,
                                        const ExtensionDescriptor& e2,
                                        const std::optional<ClassFusion>& fusion = std::nullopt);

// Branch Point Hypothesis, sampled over Q: primes dividing the branch
// polynomial of E1 but not that of E2, up to prime_bound. Never better than
// EmpiricallySupported: the counted set being infinite is not sampled-decidable.
CriterionReport eval_branch_point_hypothesis(const ExtensionDescriptor& e1,
                                             const ExtensionDescriptor& e2,
                                             std::uint64_t prime_bound,
                                             long min_witnesses);

// Inertia criteria. Variant 1: all branch points of E1 rational, some class
// outside the comparison power closure, invariant g-complete. Variant 2: a
// rational branch point carrying such a class, base field hilbertian.
// Variant 3: such a class anywhere, base field a number field or a function
// field over an algebraically closed field of characteristic 0.
CriterionReport eval_inertia_criterion(int variant,
                                       const ExtensionDescriptor& e1,
                                       const ExtensionDescriptor& e2,
                                       const std::optional<ClassFusion>& fusion = std::nullopt);

// Branch Point Criterion: number-field base (or hilbertian replacement), a
// rational branch point on E1, and a sampled census of primes not dividing
// the comparison branch polynomial.
CriterionReport eval_branch_point_criterion(const ExtensionDescriptor& e1,
                                            const ExtensionDescriptor& e2,
                                            std::uint64_t prime_bound,
                                            long min_witnesses = 10);

// Ramification-index form of the containment condition: Established iff some
// E1 index has no multiple among the E2 indices. Order data suffices, so this
// works for purely abstract class tables.
Verdict eval_ramification_variant(const ExtensionDescriptor& e1,
                                  const ExtensionDescriptor& e2);

// Power-closure test (H2): the powers of the given classes miss some class
// of G. Alongside, the three conditions under which a rigidity-style descent
// conjecture would produce a Q-regular witness: generation, rationality of
// the class set, and H2 itself.
CriterionReport eval_h2_and_fried(const PermGroup& g, const std::vector<int>& class_ids);

// Branch-point orbit data criterion over Q. Condition (1): every orbit of
// size >= 2 with linearly disjoint orbit fields (decided exactly in the
// multiquadratic case). Condition (2): exactly two orbits, both of size 2.
// Either one suffices.
CriterionReport eval_cor61(const ExtensionDescriptor& e);

// General non-parametricity conditions for a symmetric-group extension given
// by its cycle-type invariant; decided by class-list membership, with the
// phi(n)/2 branch-point-count bound reported alongside.
CriterionReport eval_sn_general(const ExtensionDescriptor& e, FieldKind field);

// Alternating-group counterpart; split classes are handled tag-symmetrically.
CriterionReport eval_an_general(const ExtensionDescriptor& e, FieldKind field);

}  // namespace galois
