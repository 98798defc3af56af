#include "dilate/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "dilate/text_format.hpp"

namespace dilate {

namespace {

constexpr std::uint64_t kMaxCells = std::uint64_t(1) << 24;
constexpr std::uint64_t kMaxSumVolume = std::uint64_t(1) << 26;
constexpr long kExhaustiveLimit = 100000000;

using Cells = std::vector<std::uint32_t>;

std::int64_t parse_int(const std::string& text, const char* what) {
    const std::string t = trim(text);
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(t, &pos);
        if (pos == t.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::Parse, std::string("malformed ") + what, t);
}

std::uint64_t parse_uint(const std::string& text, const char* what) {
    const std::string t = trim(text);
    if (!t.empty() && t[0] != '-') {
        try {
            std::size_t pos = 0;
            const unsigned long long v = std::stoull(t, &pos);
            if (pos == t.size()) return v;
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorCode::Parse, std::string("malformed ") + what, t);
}

// The cells of the box in lexicographic order together with the sum-box
// indices of L1 c and L2 c, so that L1 a + L2 b has index u[a] + v[b].
struct Layout {
    std::size_t d = 0;
    std::vector<std::int64_t> cells;  // flat
    std::vector<std::uint64_t> u, v;
    std::uint64_t sum_volume = 0;  // 0 when too large for dense counting

    std::size_t size() const { return cells.size() / d; }
    std::span<const std::int64_t> cell(std::size_t i) const { return {cells.data() + i * d, d}; }
};

std::vector<std::int64_t> image(const IntMatrix& m, std::span<const std::int64_t> p) {
    std::vector<std::int64_t> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        __int128 acc = 0;
        for (std::size_t j = 0; j < p.size(); ++j) acc += static_cast<__int128>(to_int64(m(i, j))) * p[j];
        if (acc > INT64_MAX / 4 || acc < INT64_MIN / 4) throw Error(ErrorCode::InvalidArgument, "coordinate overflow");
        r[i] = static_cast<std::int64_t>(acc);
    }
    return r;
}

Layout make_layout(const SearchSpec& spec) {
    Layout lay;
    const std::size_t d = lay.d = spec.box.dim();
    const std::uint64_t volume = spec.box.volume();
    if (volume > kMaxCells) throw Error(ErrorCode::BudgetExceeded, "box has too many cells", std::to_string(volume));
    lay.cells.reserve(volume * d);
    Point p = spec.box.lo;
    for (std::uint64_t k = 0; k < volume; ++k) {
        lay.cells.insert(lay.cells.end(), p.begin(), p.end());
        for (std::size_t j = d; j-- > 0;) {
            if (p[j] < spec.box.hi[j]) {
                ++p[j];
                break;
            }
            p[j] = spec.box.lo[j];
        }
    }
    std::vector<std::vector<std::int64_t>> iu, iv;
    for (std::size_t k = 0; k < volume; ++k) {
        iu.push_back(image(spec.l1, lay.cell(k)));
        iv.push_back(image(spec.l2, lay.cell(k)));
    }
    Point ulo = iu[0], uhi = iu[0], vlo = iv[0], vhi = iv[0];
    for (std::size_t k = 1; k < volume; ++k)
        for (std::size_t j = 0; j < d; ++j) {
            ulo[j] = std::min(ulo[j], iu[k][j]);
            uhi[j] = std::max(uhi[j], iu[k][j]);
            vlo[j] = std::min(vlo[j], iv[k][j]);
            vhi[j] = std::max(vhi[j], iv[k][j]);
        }
    std::vector<std::uint64_t> stride(d, 1);
    unsigned __int128 total = 1;
    for (std::size_t j = d; j-- > 0;) {
        stride[j] = static_cast<std::uint64_t>(total);
        total *= static_cast<unsigned __int128>(uhi[j] - ulo[j] + vhi[j] - vlo[j] + 1);
        if (total > kMaxSumVolume) return lay;
    }
    lay.sum_volume = static_cast<std::uint64_t>(total);
    lay.u.resize(volume);
    lay.v.resize(volume);
    for (std::size_t k = 0; k < volume; ++k) {
        std::uint64_t a = 0, b = 0;
        for (std::size_t j = 0; j < d; ++j) {
            a += static_cast<std::uint64_t>(iu[k][j] - ulo[j]) * stride[j];
            b += static_cast<std::uint64_t>(iv[k][j] - vlo[j]) * stride[j];
        }
        lay.u[k] = a;
        lay.v[k] = b;
    }
    return lay;
}

PointSet cells_to_set(const Layout& lay, const Cells& cells) {
    std::vector<std::int64_t> flat;
    flat.reserve(cells.size() * lay.d);
    for (auto c : cells) {
        auto p = lay.cell(c);
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return PointSet(lay.d, std::move(flat));
}

// |L1 A + L2 A| for a list of cells, by stamping a dense array.
class Evaluator {
public:
    Evaluator(const Layout& lay, const SearchSpec& spec) : lay_(lay), spec_(spec) {
        if (lay.sum_volume) stamp_.assign(lay.sum_volume, 0);
    }

    std::size_t operator()(const Cells& cells) {
        if (stamp_.empty()) return transform_sumset(spec_.l1, spec_.l2, cells_to_set(lay_, cells)).size();
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
        std::size_t distinct = 0;
        for (auto a : cells)
            for (auto b : cells) {
                auto& s = stamp_[lay_.u[a] + lay_.v[b]];
                if (s != epoch_) {
                    s = epoch_;
                    ++distinct;
                }
            }
        return distinct;
    }

private:
    const Layout& lay_;
    const SearchSpec& spec_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
};

struct Candidate {
    std::size_t size = std::numeric_limits<std::size_t>::max();
    PointSet witness;

    // Smaller size first, then the lexicographically least witness.
    bool improves_on(const Candidate& other) const {
        if (size != other.size) return size < other.size;
        return std::lexicographical_compare(witness.flat().begin(), witness.flat().end(), other.witness.flat().begin(),
                                            other.witness.flat().end());
    }
};

class ExhaustiveWorker {
public:
    ExhaustiveWorker(const Layout& lay, const Box& box, std::size_t n, std::atomic<std::size_t>& global)
        : lay_(lay), box_(box), n_(n), global_(global), counts_(lay.sum_volume, 0) {}

    void run_task(std::uint32_t first, std::uint32_t second) {
        add(first);
        add(second);
        if (!pruned()) dfs(second + 1);
        remove();
        remove();
    }

    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    Cells best;
    std::uint64_t nodes = 0;

private:
    void add(std::uint32_t c) {
        bump(lay_.u[c] + lay_.v[c]);
        for (auto a : chosen_) {
            bump(lay_.u[c] + lay_.v[a]);
            bump(lay_.u[a] + lay_.v[c]);
        }
        chosen_.push_back(c);
        ++nodes;
    }

    void remove() {
        const std::uint32_t c = chosen_.back();
        chosen_.pop_back();
        drop(lay_.u[c] + lay_.v[c]);
        for (auto a : chosen_) {
            drop(lay_.u[c] + lay_.v[a]);
            drop(lay_.u[a] + lay_.v[c]);
        }
    }

    void bump(std::uint64_t i) { distinct_ += counts_[i]++ == 0; }
    void drop(std::uint64_t i) { distinct_ -= --counts_[i] == 0; }

    // Sumsets only grow, so a partial set at least as large as this worker's
    // best (found earlier, hence lexicographically smaller) or larger than the
    // global best cannot lead to a better candidate.
    bool pruned() const { return distinct_ >= best_size || distinct_ > global_.load(std::memory_order_relaxed); }

    bool touches_corner() const {
        for (std::size_t j = 1; j < lay_.d; ++j) {
            bool hit = false;
            for (auto c : chosen_) hit = hit || lay_.cell(c)[j] == box_.lo[j];
            if (!hit) return false;
        }
        return true;
    }

    void dfs(std::uint32_t next) {
        if (chosen_.size() == n_) {
            if (!touches_corner()) return;
            best_size = distinct_;
            best = chosen_;
            std::size_t g = global_.load();
            while (distinct_ < g && !global_.compare_exchange_weak(g, distinct_)) {
            }
            return;
        }
        const std::uint32_t last = static_cast<std::uint32_t>(lay_.size() - (n_ - chosen_.size()));
        for (std::uint32_t c = next; c <= last; ++c) {
            add(c);
            if (!pruned()) dfs(c + 1);
            remove();
        }
    }

    const Layout& lay_;
    const Box& box_;
    const std::size_t n_;
    std::atomic<std::size_t>& global_;
    std::vector<std::uint32_t> counts_;
    Cells chosen_;
    std::size_t distinct_ = 0;
};

SearchResult exhaustive(const SearchSpec& spec, const Layout& lay) {
    if (!lay.sum_volume) throw Error(ErrorCode::BudgetExceeded, "sum box too large for exhaustive search");
    const std::size_t n = spec.n;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tasks;
    for (std::uint32_t a = 0; a < lay.size(); ++a) {
        if (lay.cell(a)[0] != spec.box.lo[0]) break;
        for (std::uint32_t b = a + 1; b + (n - 2) < lay.size(); ++b) tasks.emplace_back(a, b);
    }
    unsigned workers = spec.workers ? spec.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tasks.size(), 1)));
    std::atomic<std::size_t> global{std::numeric_limits<std::size_t>::max()};
    std::atomic<std::size_t> next_task{0};
    std::vector<ExhaustiveWorker> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(lay, spec.box, n, global);
    auto work = [&](ExhaustiveWorker& worker) {
        for (std::size_t t; (t = next_task.fetch_add(1)) < tasks.size();) worker.run_task(tasks[t].first, tasks[t].second);
    };
    std::vector<std::thread> threads;
    for (unsigned w = 1; w < workers; ++w) threads.emplace_back(work, std::ref(pool[w]));
    work(pool[0]);
    for (auto& t : threads) t.join();

    Candidate best;
    SearchResult r;
    for (const auto& w : pool) {
        r.nodes += w.nodes;
        if (w.best.empty()) continue;
        Candidate c{w.best_size, cells_to_set(lay, w.best)};
        if (c.improves_on(best)) best = std::move(c);
    }
    if (best.witness.empty()) throw std::logic_error("exhaustive search found no normalized set");
    r.minimum = best.size;
    r.witness = std::move(best.witness);
    r.exact = true;
    return r;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }
double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Cells random_subset(std::mt19937_64& rng, std::size_t volume, std::size_t n, std::vector<std::uint32_t>& scratch) {
    if (scratch.size() != volume) {
        scratch.resize(volume);
        for (std::uint32_t i = 0; i < volume; ++i) scratch[i] = i;
    }
    for (std::size_t i = 0; i < n; ++i) std::swap(scratch[i], scratch[i + draw(rng, volume - i)]);
    Cells out(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(n));
    std::sort(out.begin(), out.end());
    return out;
}

void offer(Candidate& best, std::size_t size, const Layout& lay, const Cells& cells, const Box& box) {
    if (size > best.size) return;
    Candidate c{size, normalize_translate(cells_to_set(lay, cells), box.lo)};
    if (c.improves_on(best)) best = std::move(c);
}

SearchResult random_search(const SearchSpec& spec, const Layout& lay) {
    if (spec.budget == 0) throw Error(ErrorCode::InvalidArgument, "random search needs a positive sample count");
    std::mt19937_64 rng(spec.seed);
    Evaluator eval(lay, spec);
    std::vector<std::uint32_t> scratch;
    Candidate best;
    SearchResult r;
    for (std::uint64_t s = 0; s < spec.budget; ++s) {
        const Cells cells = random_subset(rng, lay.size(), spec.n, scratch);
        offer(best, eval(cells), lay, cells, spec.box);
        ++r.nodes;
    }
    r.minimum = best.size;
    r.witness = std::move(best.witness);
    return r;
}

SearchResult anneal_search(const SearchSpec& spec, const Layout& lay) {
    if (spec.budget == 0) throw Error(ErrorCode::InvalidArgument, "annealing needs a positive step count");
    std::mt19937_64 rng(spec.seed);
    Evaluator eval(lay, spec);
    std::vector<std::uint32_t> scratch;
    Cells current = random_subset(rng, lay.size(), spec.n, scratch);
    std::vector<char> member(lay.size(), 0);
    for (auto c : current) member[c] = 1;
    std::size_t size = eval(current);
    Candidate best;
    offer(best, size, lay, current, spec.box);
    SearchResult r;
    r.nodes = 1;
    const double t0 = 2.0, t1 = 0.05;
    const double cooling = std::pow(t1 / t0, 1.0 / static_cast<double>(spec.budget));
    double temperature = t0;
    const bool can_move = spec.n < lay.size();
    for (std::uint64_t step = 0; step < spec.budget && can_move; ++step, temperature *= cooling) {
        const std::size_t slot = draw(rng, spec.n);
        std::uint32_t cell;
        do cell = static_cast<std::uint32_t>(draw(rng, lay.size()));
        while (member[cell]);
        Cells proposal = current;
        proposal[slot] = cell;
        std::sort(proposal.begin(), proposal.end());
        const std::size_t next = eval(proposal);
        ++r.nodes;
        const double delta = static_cast<double>(next) - static_cast<double>(size);
        if (delta <= 0 || draw_unit(rng) < std::exp(-delta / temperature)) {
            member[current[slot]] = 0;
            member[cell] = 1;
            current = std::move(proposal);
            size = next;
            offer(best, size, lay, current, spec.box);
        }
    }
    r.minimum = best.size;
    r.witness = std::move(best.witness);
    return r;
}

}  // namespace

std::uint64_t Box::volume() const {
    if (lo.size() != hi.size() || lo.empty()) throw Error(ErrorCode::DimensionMismatch, "malformed box");
    unsigned __int128 v = 1;
    for (std::size_t j = 0; j < lo.size(); ++j) {
        if (hi[j] < lo[j]) throw Error(ErrorCode::InvalidArgument, "box side with hi < lo", format_box(*this));
        v *= static_cast<unsigned __int128>(static_cast<__int128>(hi[j]) - lo[j] + 1);
        if (v > (static_cast<unsigned __int128>(1) << 40)) throw Error(ErrorCode::InvalidArgument, "box too large");
    }
    return static_cast<std::uint64_t>(v);
}

Box parse_box(const std::string& text) {
    Box box;
    for (const auto& part : split(text, ',')) {
        const auto ends = split(part, ':');
        if (ends.size() != 2) throw Error(ErrorCode::Parse, "box side must be lo:hi", part);
        box.lo.push_back(parse_int(ends[0], "box bound"));
        box.hi.push_back(parse_int(ends[1], "box bound"));
    }
    if (box.lo.empty()) throw Error(ErrorCode::Parse, "empty box", text);
    box.volume();
    return box;
}

std::string format_box(const Box& box) {
    std::string s;
    for (std::size_t j = 0; j < box.lo.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(box.lo[j]) + ":" + std::to_string(box.hi[j]);
    }
    return s;
}

void parse_strategy(const std::string& text, SearchSpec& spec) {
    const auto parts = split(text, ':');
    const std::string kind = trim(parts[0]);
    if (kind == "exhaustive" && parts.size() == 1) {
        spec.strategy = Strategy::Exhaustive;
        return;
    }
    if ((kind == "random" || kind == "anneal") && parts.size() == 3) {
        spec.strategy = kind == "random" ? Strategy::Random : Strategy::Anneal;
        spec.budget = parse_uint(parts[1], "strategy count");
        spec.seed = parse_uint(parts[2], "seed");
        return;
    }
    throw Error(ErrorCode::Parse, "strategy must be exhaustive, random:COUNT:SEED or anneal:STEPS:SEED", text);
}

std::string format_strategy(const SearchSpec& spec) {
    switch (spec.strategy) {
        case Strategy::Exhaustive: return "exhaustive";
        case Strategy::Random: return "random:" + std::to_string(spec.budget) + ":" + std::to_string(spec.seed);
        case Strategy::Anneal: return "anneal:" + std::to_string(spec.budget) + ":" + std::to_string(spec.seed);
    }
    return "unknown";
}

PointSet normalize_translate(const PointSet& a, const Point& corner) {
    if (a.empty()) return a;
    auto [lo, hi] = a.bounding_box();
    Point t(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) t[j] = corner[j] - lo[j];
    return translate(a, t);
}

SearchResult minimize(const SearchSpec& spec) {
    const auto start = std::chrono::steady_clock::now();
    require_square(spec.l1, "L1");
    require_square(spec.l2, "L2");
    const std::size_t d = spec.box.dim();
    if (spec.l1.dim() != d || spec.l2.dim() != d)
        throw Error(ErrorCode::DimensionMismatch, "matrices and box differ in dimension");
    if (spec.n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    const std::uint64_t volume = spec.box.volume();
    if (spec.n > volume) throw Error(ErrorCode::Infeasible, "n exceeds the number of box cells", std::to_string(volume));
    SearchResult r;
    if (spec.n == 1) {
        r.minimum = 1;
        r.witness = PointSet::from_points(d, {spec.box.lo});
        r.exact = true;
        r.nodes = 1;
    } else {
        if (spec.strategy == Strategy::Exhaustive && binomial(volume, spec.n) > kExhaustiveLimit)
            throw Error(ErrorCode::BudgetExceeded, "exhaustive search space exceeds 10^8 subsets",
                        binomial(volume, spec.n).get_str());
        const Layout lay = make_layout(spec);
        switch (spec.strategy) {
            case Strategy::Exhaustive: r = exhaustive(spec, lay); break;
            case Strategy::Random: r = random_search(spec, lay); break;
            case Strategy::Anneal: r = anneal_search(spec, lay); break;
        }
    }
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace dilate
