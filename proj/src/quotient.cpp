#include "dilate/quotient.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dilate {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t(1) << 40;

void require_same_parent(const GroupSubset& a, const GroupSubset& b) {
    if (a.parent() != b.parent() && a.parent()->lattice() != b.parent()->lattice())
        throw Error(ErrorCode::InvalidArgument, "subsets belong to different quotient groups");
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || a->lattice() == b->lattice(); }

}  // namespace

QuotientGroup::QuotientGroup(Lattice lattice) : lattice_(std::move(lattice)), snf_(smith_normal_form(lattice_.basis())) {
    factors_ = snf_.invariant_factors();
    Integer order = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] == 1) continue;
        order *= factors_[i];
        if (order > kMaxOrder) throw Error(ErrorCode::BudgetExceeded, "quotient group too large", order.get_str());
        positions_.push_back(i);
        radix_.push_back(factors_[i].get_ui());
    }
    order_ = order.get_ui();
}

std::vector<std::uint64_t> QuotientGroup::digits(Element e) const {
    std::vector<std::uint64_t> out(radix_.size());
    for (std::size_t k = 0; k < radix_.size(); ++k) {
        out[k] = e % radix_[k];
        e /= radix_[k];
    }
    return out;
}

QuotientGroup::Element QuotientGroup::from_digits(const std::vector<std::uint64_t>& digits) const {
    Element e = 0;
    for (std::size_t k = radix_.size(); k-- > 0;) e = e * radix_[k] + digits[k];
    return e;
}

QuotientGroup::Element QuotientGroup::encode(const IntVector& v) const {
    const IntVector w = snf_.S_inverse * v;
    std::vector<std::uint64_t> d(radix_.size());
    for (std::size_t k = 0; k < radix_.size(); ++k) d[k] = mod_floor(w[positions_[k]], factors_[positions_[k]]).get_ui();
    return from_digits(d);
}

IntVector QuotientGroup::decode(Element e) const {
    const auto d = digits(e);
    IntVector r(dim(), 0);
    for (std::size_t k = 0; k < radix_.size(); ++k) r[positions_[k]] = Integer(static_cast<unsigned long>(d[k]));
    return lattice_.reduce(snf_.S * r);
}

QuotientGroup::Element QuotientGroup::generator(std::size_t k) const {
    std::vector<std::uint64_t> d(radix_.size(), 0);
    d.at(k) = 1;
    return from_digits(d);
}

QuotientGroup::Element QuotientGroup::add(Element a, Element b) const {
    auto da = digits(a), db = digits(b);
    for (std::size_t k = 0; k < radix_.size(); ++k) da[k] = (da[k] + db[k]) % radix_[k];
    return from_digits(da);
}

QuotientGroup::Element QuotientGroup::negate(Element a) const {
    auto da = digits(a);
    for (std::size_t k = 0; k < radix_.size(); ++k) da[k] = (radix_[k] - da[k]) % radix_[k];
    return from_digits(da);
}

QuotientGroup::Element QuotientGroup::scale(Element a, std::uint64_t s) const {
    auto da = digits(a);
    for (std::size_t k = 0; k < radix_.size(); ++k)
        da[k] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(da[k]) * (s % radix_[k])) % radix_[k]);
    return from_digits(da);
}

GroupPtr quotient(const Lattice& lattice) { return std::make_shared<const QuotientGroup>(lattice); }

GroupSubset::GroupSubset(GroupPtr parent, std::vector<QuotientGroup::Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (!elements_.empty() && elements_.back() >= parent_->order())
        throw Error(ErrorCode::InvalidArgument, "element index outside the group");
}

bool GroupSubset::contains(QuotientGroup::Element e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool GroupSubset::contains_all(const GroupSubset& other) const {
    return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end());
}

GroupSubset GroupSubset::whole(GroupPtr parent) {
    std::vector<QuotientGroup::Element> all(parent->order());
    for (std::uint64_t i = 0; i < all.size(); ++i) all[i] = i;
    return {std::move(parent), std::move(all)};
}

GroupSubset GroupSubset::from_vectors(GroupPtr parent, const std::vector<IntVector>& vectors) {
    std::vector<QuotientGroup::Element> e;
    e.reserve(vectors.size());
    for (const auto& v : vectors) e.push_back(parent->encode(v));
    return {std::move(parent), std::move(e)};
}

GroupSubset GroupSubset::from_lattice(GroupPtr parent, const Lattice& sub) {
    return from_vectors(parent, coset_reps(parent->lattice(), sub));
}

GroupSubset subset_sum(const GroupSubset& a, const GroupSubset& b) {
    require_same_parent(a, b);
    const auto& g = *a.parent();
    std::vector<char> mark(g.order(), 0);
    for (auto x : a.elements())
        for (auto y : b.elements()) mark[g.add(x, y)] = 1;
    std::vector<QuotientGroup::Element> out;
    for (std::uint64_t i = 0; i < mark.size(); ++i)
        if (mark[i]) out.push_back(i);
    return {a.parent(), std::move(out)};
}

GroupSubset generated_subgroup(const GroupSubset& x) {
    const auto& g = *x.parent();
    std::vector<char> mark(g.order(), 0);
    std::vector<QuotientGroup::Element> members{0}, frontier{0};
    mark[0] = 1;
    while (!frontier.empty()) {
        std::vector<QuotientGroup::Element> next;
        for (auto e : frontier)
            for (auto s : x.elements()) {
                auto t = g.add(e, s);
                if (!mark[t]) {
                    mark[t] = 1;
                    members.push_back(t);
                    next.push_back(t);
                }
            }
        frontier = std::move(next);
    }
    return {x.parent(), std::move(members)};
}

bool generates(const GroupSubset& x) { return generated_subgroup(x).size() == x.parent()->order(); }

InducedMap::InducedMap(const RatMatrix& m, GroupPtr src, GroupPtr dst)
    : matrix_(m), src_(std::move(src)), dst_(std::move(dst)) {
    require_square(m, "induced_map");
    if (m.dim() != src_->dim() || m.dim() != dst_->dim())
        throw Error(ErrorCode::DimensionMismatch, "induced map dimension mismatch");
    const IntMatrix mi = to_integer(m);
    for (std::size_t j = 0; j < src_->dim(); ++j) {
        IntVector col = src_->lattice().basis().column(j);
        if (!dst_->lattice().contains(mi * col))
            throw Error(ErrorCode::IllDefinedMap, "matrix does not map the source lattice into the target lattice",
                        format_vector(col));
    }
    for (std::size_t k = 0; k < src_->rank(); ++k)
        generator_images_.push_back(dst_->encode(mi * src_->decode(src_->generator(k))));
}

QuotientGroup::Element InducedMap::operator()(QuotientGroup::Element e) const {
    const auto d = src_->digits(e);
    QuotientGroup::Element acc = 0;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k]) acc = dst_->add(acc, dst_->scale(generator_images_[k], d[k]));
    return acc;
}

GroupSubset InducedMap::image(const GroupSubset& x) const {
    if (!same_group(x.parent(), src_)) throw Error(ErrorCode::InvalidArgument, "subset is not in the map's source");
    std::vector<QuotientGroup::Element> out;
    out.reserve(x.size());
    for (auto e : x.elements()) out.push_back((*this)(e));
    return {dst_, std::move(out)};
}

InducedMap operator+(const InducedMap& a, const InducedMap& b) {
    if (!same_group(a.src_, b.src_) || !same_group(a.dst_, b.dst_))
        throw Error(ErrorCode::InvalidArgument, "sum of maps with different source or target");
    return InducedMap(a.matrix_ + b.matrix_, a.src_, a.dst_);
}

InducedMap compose(const InducedMap& after, const InducedMap& before) {
    if (!same_group(before.dst_, after.src_))
        throw Error(ErrorCode::InvalidArgument, "composition of maps with mismatched groups");
    return InducedMap(after.matrix_ * before.matrix_, before.src_, after.dst_);
}

bool is_isomorphism(const InducedMap& f) {
    if (f.source()->order() != f.target()->order()) return false;
    return f.image(GroupSubset::whole(f.source())).size() == f.source()->order();
}

PairLattices pair_lattices(const IntMatrix& l1, const IntMatrix& l2) {
    require_square(l1, "pair_lattices");
    require_square(l2, "pair_lattices");
    if (l1.dim() != l2.dim()) throw Error(ErrorCode::DimensionMismatch, "pair matrices differ in dimension");
    const Lattice lat1 = lattice_from(l1);
    const Lattice lat2 = lattice_from(l2);
    Lattice p1 = preimage(l2, lat1);
    Lattice p2 = preimage(l1, lat2);
    Lattice p = intersect(p1, p2);
    Lattice q = intersect(lat1, lat2);
    Lattice l1p = lattice_from(l1 * p.basis());
    Lattice l2p = lattice_from(l2 * p.basis());
    Lattice k1 = intersect(p, preimage(l2, l1p));
    Lattice k2 = intersect(p, preimage(l1, l2p));
    GroupPtr g = quotient(k1);
    GroupPtr target = quotient(l1p);
    InducedMap phi1(to_rational(l1), g, target);
    InducedMap phi2(to_rational(l2), g, target);
    return {p1, p2, p, q, k1, k2, l1p, l2p, g, target, phi1, phi2};
}

const char* to_string(TrichotomyCase c) {
    switch (c) {
        case TrichotomyCase::NotGenerate: return "not_generate";
        case TrichotomyCase::StrictGrowth: return "strict_growth";
        case TrichotomyCase::ContainsH: return "contains_h";
        case TrichotomyCase::ContainsP: return "contains_p";
    }
    return "unknown";
}

std::set<TrichotomyCase> trichotomy_L(const GroupSubset& x, const IntMatrix& l) {
    const Lattice l2 = lattice_from(l * l);
    if (x.parent()->lattice() != l2)
        throw Error(ErrorCode::InvalidArgument, "subset is not in Z^d / L^2 Z^d");
    if (!x.contains(0)) throw Error(ErrorCode::InvalidArgument, "subset must contain 0");
    const GroupPtr& g = x.parent();
    const GroupSubset h = GroupSubset::from_lattice(g, lattice_from(l));
    const InducedMap lmap(to_rational(l), g, g);
    std::set<TrichotomyCase> cases;
    if (!generates(subset_sum(x, h))) cases.insert(TrichotomyCase::NotGenerate);
    if (subset_sum(x, lmap.image(x)).size() > x.size()) cases.insert(TrichotomyCase::StrictGrowth);
    if (x.contains_all(h)) cases.insert(TrichotomyCase::ContainsH);
    if (cases.empty()) throw std::logic_error("trichotomy produced no case");
    return cases;
}

std::set<TrichotomyCase> trichotomy_pair(const GroupSubset& x, const InducedMap& phi1, const InducedMap& phi2,
                                         const Lattice& p) {
    if (!same_group(x.parent(), phi1.source()) || !same_group(x.parent(), phi2.source()) ||
        !same_group(phi1.target(), phi2.target()))
        throw Error(ErrorCode::InvalidArgument, "inconsistent group parents");
    if (!x.contains(0)) throw Error(ErrorCode::InvalidArgument, "subset must contain 0");
    std::set<TrichotomyCase> cases;
    if (!generates(x)) cases.insert(TrichotomyCase::NotGenerate);
    if (subset_sum(phi1.image(x), phi2.image(x)).size() > x.size()) cases.insert(TrichotomyCase::StrictGrowth);
    if (x.contains_all(GroupSubset::from_lattice(x.parent(), p))) cases.insert(TrichotomyCase::ContainsP);
    if (cases.empty()) throw std::logic_error("trichotomy produced no case");
    return cases;
}

}  // namespace dilate
