#include "dilate/lattice.hpp"

#include <algorithm>
#include <string>

#include "dilate/normal_form.hpp"

namespace dilate {

namespace {

constexpr std::uint64_t kMaxCosets = 50'000'000;

void require_same_dim(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "lattices live in different dimensions");
}

}  // namespace

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Integer& x, const Integer& y) { return cmp(x, y) < 0; });
}

Lattice Lattice::standard(std::size_t d) {
    if (d == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be positive");
    return Lattice(IntMatrix::identity(d));
}

Lattice Lattice::from_generators(const IntMatrix& generators) { return Lattice(hermite_normal_form(generators)); }

Integer Lattice::index() const {
    Integer p = 1;
    for (std::size_t i = 0; i < dim(); ++i) p *= basis_(i, i);
    return p;
}

IntVector Lattice::reduce(const IntVector& v) const {
    if (v.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "vector dimension differs from lattice");
    IntVector r = v;
    for (std::size_t i = dim(); i-- > 0;) {
        Integer q = floor_div(r[i], basis_(i, i));
        if (q == 0) continue;
        for (std::size_t k = 0; k <= i; ++k) r[k] -= q * basis_(k, i);
    }
    return r;
}

bool Lattice::contains(const IntVector& v) const {
    for (const auto& x : reduce(v))
        if (x != 0) return false;
    return true;
}

bool Lattice::contains(const Lattice& other) const {
    if (other.dim() != dim()) return false;
    for (std::size_t j = 0; j < dim(); ++j)
        if (!contains(other.basis().column(j))) return false;
    return true;
}

Lattice lattice_from(const IntMatrix& m) {
    require_square(m, "lattice_from");
    if (det(m) == 0) throw Error(ErrorCode::Singular, "lattice generator matrix is singular");
    return Lattice::from_generators(m);
}

Lattice lattice_from(const RatMatrix& m) { return lattice_from(to_integer(m)); }

Lattice intersect(const Lattice& a, const Lattice& b) {
    require_same_dim(a, b);
    // a ∩ b = B_a {x : B_a x in b}.
    Lattice coords = preimage(a.basis(), b);
    return Lattice::from_generators(a.basis() * coords.basis());
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    require_same_dim(a, b);
    const std::size_t d = a.dim();
    IntMatrix g(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            g(i, j) = a.basis()(i, j);
            g(i, d + j) = b.basis()(i, j);
        }
    return Lattice::from_generators(g);
}

Lattice preimage(const RatMatrix& m, const Lattice& target) {
    require_square(m, "preimage");
    if (m.dim() != target.dim()) throw Error(ErrorCode::DimensionMismatch, "preimage: dimension mismatch");
    if (det(m) == 0) throw Error(ErrorCode::Singular, "preimage under a singular matrix");
    const std::size_t d = m.dim();
    // M = N/den; solve N x = den * B y over the integers.
    const Integer den = common_denominator(m);
    IntMatrix stacked(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            stacked(i, j) = Integer(m(i, j) * den);
            stacked(i, d + j) = -den * target.basis()(i, j);
        }
    IntMatrix kernel = integer_kernel(stacked);
    IntMatrix x(d, kernel.cols());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < kernel.cols(); ++j) x(i, j) = kernel(i, j);
    return Lattice::from_generators(x);
}

Lattice preimage(const IntMatrix& m, const Lattice& target) { return preimage(to_rational(m), target); }

std::vector<IntVector> coset_reps(const Lattice& sub, const Lattice& sup) {
    require_same_dim(sub, sup);
    const std::size_t d = sub.dim();
    for (std::size_t j = 0; j < d; ++j) {
        IntVector c = sub.basis().column(j);
        if (!sup.contains(c))
            throw Error(ErrorCode::NotContained, "sublattice is not contained in the superlattice", format_vector(c));
    }
    // Coordinates of sub inside sup, in Hermite form: the box of its diagonal
    // enumerates sup / sub.
    const IntMatrix t = to_integer(inverse(to_rational(sup.basis())) * to_rational(sub.basis()));
    const IntMatrix h = hermite_normal_form(t);
    Integer count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= h(i, i);
    if (count > kMaxCosets)
        throw Error(ErrorCode::BudgetExceeded, "too many cosets to enumerate", count.get_str());
    std::vector<Integer> digit(d, 0);
    std::vector<IntVector> reps;
    reps.reserve(count.get_ui());
    for (;;) {
        reps.push_back(sub.reduce(sup.basis() * digit));
        std::size_t i = 0;
        while (i < d) {
            digit[i] += 1;
            if (digit[i] < h(i, i)) break;
            digit[i] = 0;
            ++i;
        }
        if (i == d) break;
    }
    std::sort(reps.begin(), reps.end(), lex_less);
    return reps;
}


std::string format_vector(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace dilate
