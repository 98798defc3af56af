#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "dilate/lattice.hpp"
#include "dilate/normal_form.hpp"

namespace dilate {

/// Finite group Z^d / Λ. Elements are numbered 0 .. order-1 through a
/// mixed-radix encoding of the Smith coordinates, so element 0 is the
/// identity and equality is integer equality.
class QuotientGroup {
public:
    using Element = std::uint64_t;

    explicit QuotientGroup(Lattice lattice);

    const Lattice& lattice() const noexcept { return lattice_; }
    std::size_t dim() const noexcept { return lattice_.dim(); }
    /// Invariant factors d_1 | ... | d_d (including ones).
    const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
    std::uint64_t order() const noexcept { return order_; }

    Element encode(const IntVector& v) const;
    /// Canonical representative of the coset (reduced by the Hermite basis).
    IntVector decode(Element e) const;
    /// Residues of the element under the nontrivial invariant factors.
    std::vector<std::uint64_t> digits(Element e) const;

    /// Number of nontrivial invariant factors.
    std::size_t rank() const noexcept { return radix_.size(); }
    /// Element whose only nonzero Smith coordinate is a 1 in slot k < rank().
    Element generator(std::size_t k) const;

    Element add(Element a, Element b) const;
    Element negate(Element a) const;
    Element scale(Element a, std::uint64_t k) const;

private:
    Element from_digits(const std::vector<std::uint64_t>& digits) const;

    Lattice lattice_;
    SnfDecomposition snf_;
    std::vector<Integer> factors_;
    std::vector<std::size_t> positions_;  // indices i with d_i > 1
    std::vector<std::uint64_t> radix_;    // d_i for those indices
    std::uint64_t order_ = 1;
};

using GroupPtr = std::shared_ptr<const QuotientGroup>;

GroupPtr quotient(const Lattice& lattice);

/// Set of elements of one quotient group.
class GroupSubset {
public:
    GroupSubset(GroupPtr parent, std::vector<QuotientGroup::Element> elements);

    const GroupPtr& parent() const noexcept { return parent_; }
    const std::vector<QuotientGroup::Element>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool contains(QuotientGroup::Element e) const;
    bool contains_all(const GroupSubset& other) const;

    /// Every element of the parent group.
    static GroupSubset whole(GroupPtr parent);
    /// Images of integer vectors.
    static GroupSubset from_vectors(GroupPtr parent, const std::vector<IntVector>& vectors);
    /// Elements of sub / parent-lattice, for a lattice sub containing the parent lattice.
    static GroupSubset from_lattice(GroupPtr parent, const Lattice& sub);

private:
    GroupPtr parent_;
    std::vector<QuotientGroup::Element> elements_;
};

GroupSubset subset_sum(const GroupSubset& a, const GroupSubset& b);
/// Subgroup generated by the subset.
GroupSubset generated_subgroup(const GroupSubset& x);
bool generates(const GroupSubset& x);

/// Homomorphism Z^d/src -> Z^d/dst induced by an integer matrix M with
/// M src ⊆ dst.
class InducedMap {
public:
    /// Throws NotIntegral if M is not integral and IllDefinedMap (witness:
    /// the offending source basis column) if M src is not inside dst.
    InducedMap(const RatMatrix& m, GroupPtr src, GroupPtr dst);

    const RatMatrix& matrix() const noexcept { return matrix_; }
    const GroupPtr& source() const noexcept { return src_; }
    const GroupPtr& target() const noexcept { return dst_; }

    QuotientGroup::Element operator()(QuotientGroup::Element e) const;
    GroupSubset image(const GroupSubset& x) const;

    friend InducedMap operator+(const InducedMap& a, const InducedMap& b);
    /// after ∘ before.
    friend InducedMap compose(const InducedMap& after, const InducedMap& before);

private:
    RatMatrix matrix_;
    GroupPtr src_, dst_;
    std::vector<QuotientGroup::Element> generator_images_;
};

bool is_isomorphism(const InducedMap& f);

/// The lattices attached to a nonsingular integer pair (L1, L2):
///   P1 = Z^d ∩ L2^-1 L1 Z^d, P2 = Z^d ∩ L1^-1 L2 Z^d, P = P1 ∩ P2,
///   Q = L1 Z^d ∩ L2 Z^d, K1 = P ∩ L2^-1 L1 P Z^d, K2 = P ∩ L1^-1 L2 P Z^d,
/// and the maps phi1, phi2 : Z^d/K1 -> Z^d/L1 P Z^d induced by L1 and L2.
struct PairLattices {
    Lattice P1, P2, P, Q, K1, K2, L1P, L2P;
    GroupPtr G;       // Z^d / K1
    GroupPtr target;  // Z^d / L1 P Z^d
    InducedMap phi1, phi2;
};

PairLattices pair_lattices(const IntMatrix& l1, const IntMatrix& l2);

enum class TrichotomyCase { NotGenerate, StrictGrowth, ContainsH, ContainsP };
const char* to_string(TrichotomyCase c);

/// Cases that hold for X in G = Z^d / L^2 Z^d with H = L Z^d / L^2 Z^d:
/// X + H does not generate G; X + L X strictly contains X; H ⊆ X.
/// Throws InvalidArgument if 0 is not in X or X lives in another group.
std::set<TrichotomyCase> trichotomy_L(const GroupSubset& x, const IntMatrix& l);

/// Cases that hold for X in G = Z^d / K1: X does not generate G;
/// |phi1(X) + phi2(X)| > |X|; P / K1 ⊆ X.
std::set<TrichotomyCase> trichotomy_pair(const GroupSubset& x, const InducedMap& phi1, const InducedMap& phi2,
                                         const Lattice& p);

}  // namespace dilate
