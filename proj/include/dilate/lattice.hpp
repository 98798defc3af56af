#pragma once

#include <vector>

#include "dilate/matrix.hpp"

namespace dilate {

/// Full-rank sublattice of Z^d, stored by its column Hermite normal form so
/// two lattices are equal exactly when their bases are.
class Lattice {
public:
    /// Z^d.
    static Lattice standard(std::size_t d);
    /// Lattice spanned by the columns of a d x m integer matrix of rank d.
    static Lattice from_generators(const IntMatrix& generators);

    std::size_t dim() const noexcept { return basis_.rows(); }
    const IntMatrix& basis() const noexcept { return basis_; }
    /// [Z^d : this] = |det basis|.
    Integer index() const;

    /// Canonical coset representative: 0 <= r_i < h_ii for every i.
    IntVector reduce(const IntVector& v) const;
    bool contains(const IntVector& v) const;
    bool contains(const Lattice& other) const;

    bool operator==(const Lattice& other) const = default;

private:
    explicit Lattice(IntMatrix hnf) : basis_(std::move(hnf)) {}
    IntMatrix basis_;
};

/// M Z^d. Throws Singular for singular M and NotIntegral when M Z^d is not
/// contained in Z^d.
Lattice lattice_from(const IntMatrix& m);
Lattice lattice_from(const RatMatrix& m);

inline Integer index(const Lattice& l) { return l.index(); }

Lattice intersect(const Lattice& a, const Lattice& b);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
/// {v in Z^d : M v in target}. Throws Singular for singular M.
Lattice preimage(const RatMatrix& m, const Lattice& target);
Lattice preimage(const IntMatrix& m, const Lattice& target);

/// One representative per coset of `sub` in `sup`, canonical with respect to
/// `sub`, sorted lexicographically (so the zero vector comes first). Throws
/// NotContained with the first basis column of `sub` outside `sup`.
std::vector<IntVector> coset_reps(const Lattice& sub, const Lattice& sup);

bool lex_less(const IntVector& a, const IntVector& b);
std::string format_vector(const IntVector& v);

}  // namespace dilate
