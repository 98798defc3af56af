#include "dilate/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>

#include "dilate/bootstrap.hpp"
#include "dilate/classify.hpp"
#include "dilate/compression.hpp"
#include "dilate/constructions.hpp"
#include "dilate/report_json.hpp"
#include "dilate/search.hpp"
#include "dilate/text_format.hpp"

namespace dilate::cli {

namespace {

struct Config {
    unsigned precision_bits = 0;
    std::string l1, l2, l, poly, tol;
    std::string points, with, lattice, basis, output;
    std::string a_path, b_path;
    std::size_t axis = 0;
    bool full = false;
    bool json = false, csv = false, stats = false;
    std::string kind;
    std::int64_t gen_m = 0, gen_n = 0;
    std::string sides;
    std::string n_range, box, strategy = "exhaustive";
    unsigned workers = 0;
    unsigned d = 1;
    std::optional<std::uint64_t> k, p, q;
    double sigma1 = 0, D = 0, alpha0 = 0, d1 = 0, target_eps = 0, d2_prime = 1;
    std::uint64_t max_steps = 1000000, every = 1;
};

void write_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

Rational tolerance(const Config& c) {
    if (c.tol.empty()) return default_h_tolerance();
    const Rational t = parse_rational(c.tol);
    if (t <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive", c.tol);
    return t;
}

// Writes points to --output when given, otherwise to `out`.
void emit_points(const Config& c, std::ostream& out, const PointSet& a) {
    if (c.output.empty()) {
        write_point_set(out, a);
        return;
    }
    std::ofstream f(c.output);
    if (!f) throw Error(ErrorCode::Parse, "cannot open output file", c.output);
    write_point_set(f, a);
}

CompressionBasis basis_of(const Config& c, std::size_t d) {
    if (c.basis.empty()) return CompressionBasis::standard(d);
    return CompressionBasis(parse_matrix(c.basis));
}

void cmd_classify(const Config& c, std::ostream& out) {
    write_json(out, to_json(classify(parse_int_matrix(c.l1), parse_int_matrix(c.l2), tolerance(c))));
}

void cmd_companion(const Config& c, std::ostream& out) {
    const CompanionPair pair = companion_pair(parse_polynomial(c.poly));
    Json j;
    j["polynomial"] = to_coefficient_string(pair.polynomial);
    j["b"] = integer_json(pair.b);
    j["l1"] = format_matrix(pair.l1);
    j["l2"] = format_matrix(pair.l2);
    j["classification"] = to_json(classify(pair.l1, pair.l2, tolerance(c)));
    write_json(out, j);
}

void cmd_hvalue(const Config& c, std::ostream& out) {
    if (!c.poly.empty()) {
        write_json(out, to_json(h_value(parse_polynomial(c.poly), tolerance(c))));
        return;
    }
    if (c.l1.empty() || c.l2.empty()) throw CLI::ValidationError("hvalue needs --poly or both --l1 and --l2");
    write_json(out, to_json(matrix_h_value(parse_int_matrix(c.l1), parse_int_matrix(c.l2), tolerance(c))));
}

void cmd_sumset(const Config& c, std::ostream& out) {
    const PointSet a = read_point_set_file(c.points);
    PointSet s(a.dim());
    if (!c.l.empty()) {
        s = sumset(a, apply(parse_matrix(c.l), a));
    } else if (!c.l1.empty() && !c.l2.empty()) {
        s = transform_sumset(parse_int_matrix(c.l1), parse_int_matrix(c.l2), a);
    } else if (!c.with.empty()) {
        s = sumset(a, read_point_set_file(c.with));
    } else {
        throw CLI::ValidationError("sumset needs --l1 and --l2, --l, or --with");
    }
    if (!c.output.empty()) emit_points(c, out, s);
    Json j;
    j["n"] = a.size();
    j["sumset"] = s.size();
    j["ratio"] = rational_json(make_rational(Integer(static_cast<unsigned long>(s.size())),
                                             Integer(static_cast<unsigned long>(a.size()))));
    write_json(out, j);
}

void cmd_partition(const Config& c, std::ostream& out) {
    const PointSet a = read_point_set_file(c.points);
    const Lattice lat = Lattice::from_generators(parse_int_matrix(c.lattice));
    const CosetPartition part = coset_partition(a, lat);
    Json parts = Json::array();
    for (const auto& [rep, pts] : part.parts) {
        Json r = Json::array();
        for (const auto& x : rep) r.push_back(integer_json(x));
        parts.push_back({{"rep", r}, {"size", pts.size()}, {"points", points_json(pts)}});
    }
    write_json(out, {{"n", a.size()}, {"index", integer_json(lat.index())}, {"parts", parts}});
}

void cmd_compress(const Config& c, std::ostream& out) {
    const PointSet a = read_point_set_file(c.points);
    const CompressionBasis basis = basis_of(c, a.dim());
    PointSet r(a.dim());
    if (c.full) {
        r = full_compress(a, basis);
    } else {
        if (c.axis < 1 || c.axis > a.dim()) throw Error(ErrorCode::InvalidArgument, "axis must be in 1..d", std::to_string(c.axis));
        r = i_compress(a, c.axis - 1, basis);
    }
    if (c.json) {
        write_json(out, {{"n", r.size()}, {"compressed", is_compressed(r)}, {"points", points_json(r)}});
        if (!c.output.empty()) emit_points(c, out, r);
        return;
    }
    emit_points(c, out, r);
}

void cmd_bmcheck(const Config& c, std::ostream& out) {
    const PointSet a = read_point_set_file(c.a_path);
    const PointSet b = read_point_set_file(c.b_path);
    write_json(out, to_json(bm_defect(a, b, basis_of(c, a.dim()))));
}

std::vector<std::int64_t> parse_sides(const std::string& text) {
    std::vector<std::int64_t> sides;
    for (const auto& s : split(text, ',')) {
        const Rational v = parse_rational(trim(s));
        if (!is_integer(v) || !fits_int64(v.get_num())) throw Error(ErrorCode::Parse, "malformed side length", s);
        sides.push_back(to_int64(v.get_num()));
    }
    return sides;
}

void cmd_generate(const Config& c, std::ostream& out) {
    PointSet a;
    if (c.kind == "kp") a = kp_box(c.gen_m, c.gen_n);
    else if (c.kind == "skew") a = skew_box(c.gen_n);
    else if (c.kind == "rotline") a = rot_line(c.gen_n);
    else if (c.kind == "grid") a = grid_box(parse_sides(c.sides));
    else throw CLI::ValidationError("generator must be kp, skew, rotline or grid");
    emit_points(c, out, a);
}

std::pair<std::size_t, std::size_t> parse_n_range(const std::string& text) {
    const auto parts = split(text, ':');
    auto one = [&](const std::string& s) {
        const Rational v = parse_rational(trim(s));
        if (!is_integer(v) || v < 1 || !fits_int64(v.get_num())) throw Error(ErrorCode::Parse, "malformed n", text);
        return static_cast<std::size_t>(to_int64(v.get_num()));
    };
    if (parts.size() == 1) return {one(parts[0]), one(parts[0])};
    if (parts.size() == 2 && one(parts[0]) <= one(parts[1])) return {one(parts[0]), one(parts[1])};
    throw Error(ErrorCode::Parse, "n must be k or a:b with a <= b", text);
}

void cmd_minimize(const Config& c, std::ostream& out) {
    SearchSpec spec;
    spec.l1 = parse_int_matrix(c.l1);
    spec.l2 = parse_int_matrix(c.l2);
    spec.box = parse_box(c.box);
    spec.workers = c.workers;
    parse_strategy(c.strategy, spec);
    const auto [lo, hi] = parse_n_range(c.n_range);
    if (c.csv) out << "n,minimum,ratio\n";
    for (std::size_t n = lo; n <= hi; ++n) {
        spec.n = n;
        const SearchResult r = minimize(spec);
        const Rational ratio = make_rational(Integer(static_cast<unsigned long>(r.minimum)), Integer(static_cast<unsigned long>(n)));
        if (c.csv) {
            out << n << ',' << r.minimum << ',' << to_decimal(ratio, 9, false) << '\n';
        } else if (c.json) {
            Json j = to_json(r, c.stats);
            j["strategy"] = format_strategy(spec);
            j["box"] = format_box(spec.box);
            write_json(out, j);
        } else {
            out << "n=" << n << " minimum=" << r.minimum << " ratio=" << to_string(ratio)
                << " exact=" << (r.exact ? "true" : "false") << " witness=";
            for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? ";" : "") << format_point(r.witness.point(i));
            out << '\n';
        }
    }
}

void cmd_constants(const Config& c, std::ostream& out) {
    const bool identity = c.k.has_value();
    if (identity == (c.p.has_value() || c.q.has_value()) || (!identity && !(c.p && c.q)))
        throw CLI::ValidationError("constants needs either --k or both --p and --q");
    BootstrapState s = identity ? identity_state(c.d, *c.k, c.sigma1, c.D, c.alpha0, c.d1)
                                : pair_state(c.d, *c.p, *c.q, c.sigma1, c.D, c.alpha0, c.d1);
    if (!(c.target_eps > 0)) throw Error(ErrorCode::InvalidArgument, "target eps must be positive");
    if (c.every == 0) throw CLI::ValidationError("--every must be positive");
    write_json(out, to_json(s));
    while (s.alpha >= c.target_eps) {
        if (s.m >= c.max_steps) throw Error(ErrorCode::BudgetExceeded, "step limit reached before the target", std::to_string(c.max_steps));
        s = identity ? bootstrap_step_identity(s) : bootstrap_step_pair(s);
        if (s.m % c.every == 0 || s.alpha < c.target_eps) write_json(out, to_json(s));
    }
    Json fin;
    fin["steps"] = s.m;
    if (identity) {
        const FinalConstants f = final_constants_identity(c.d, *c.k, c.sigma1, c.D, c.target_eps, c.d2_prime);
        fin["sigma2"] = f.sigma2;
        fin["D2"] = f.d2;
        fin["sigma2_extracted"] = extracted_sigma2(*c.k, c.sigma1);
        if (*c.k >= 2 && c.alpha0 <= 1) fin["closed_form_steps"] = closed_form_steps(c.alpha0, c.target_eps, *c.k);
    } else {
        fin["c"] = interval_json(pair_constant(*c.p, *c.q, c.d, default_precision_bits()));
    }
    write_json(out, {{"final", fin}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Exact sumsets of linear images, lattice quotients and matrix-pair classification", "dilate"};
    app.require_subcommand(1);
    app.add_option("--precision-bits", c.precision_bits, "Interval precision in bits (overrides DILATE_PRECISION_BITS)");

    auto* classify_cmd = app.add_subcommand("classify", "Irreducibility, coprimality, bound coefficient and H of a pair");
    classify_cmd->add_option("--l1", c.l1, "Matrix L1")->required();
    classify_cmd->add_option("--l2", c.l2, "Matrix L2")->required();
    classify_cmd->add_option("--tol", c.tol, "Width of the H enclosure (rational)");

    auto* companion_cmd = app.add_subcommand("companion", "Matrix pair of an irreducible integer polynomial");
    companion_cmd->add_option("--poly", c.poly, "Coefficients from the constant term up")->required();
    companion_cmd->add_option("--tol", c.tol, "Width of the H enclosure (rational)");

    auto* hvalue_cmd = app.add_subcommand("hvalue", "Certified H of a polynomial or an irreducible pair");
    hvalue_cmd->add_option("--poly", c.poly, "Coefficients from the constant term up");
    hvalue_cmd->add_option("--l1", c.l1, "Matrix L1");
    hvalue_cmd->add_option("--l2", c.l2, "Matrix L2");
    hvalue_cmd->add_option("--tol", c.tol, "Width of the H enclosure (rational)");

    auto* sumset_cmd = app.add_subcommand("sumset", "|L1 A + L2 A|, |A + L A| or |A + B|");
    sumset_cmd->add_option("--points", c.points, "Point-set file A")->required();
    sumset_cmd->add_option("--l1", c.l1, "Matrix L1");
    sumset_cmd->add_option("--l2", c.l2, "Matrix L2");
    sumset_cmd->add_option("--l", c.l, "Rational matrix L with L A integral");
    sumset_cmd->add_option("--with", c.with, "Point-set file B");
    sumset_cmd->add_option("--output", c.output, "Write the sumset points here");

    auto* partition_cmd = app.add_subcommand("partition", "Split A into cosets of a lattice");
    partition_cmd->add_option("--points", c.points, "Point-set file")->required();
    partition_cmd->add_option("--lattice", c.lattice, "Lattice generators as matrix columns")->required();

    auto* compress_cmd = app.add_subcommand("compress", "i-compression or full compression of a point set");
    compress_cmd->add_option("--points", c.points, "Point-set file")->required();
    compress_cmd->add_option("--basis", c.basis, "Basis vectors as matrix columns (default standard)");
    auto* axis_opt = compress_cmd->add_option("--axis", c.axis, "Axis to compress, 1-based");
    auto* full_opt = compress_cmd->add_flag("--full", c.full, "Compress along every axis until stable");
    axis_opt->excludes(full_opt);
    compress_cmd->add_flag("--json", c.json, "JSON summary instead of a point list");
    compress_cmd->add_option("--output", c.output, "Write the points here");

    auto* bm_cmd = app.add_subcommand("bmcheck", "Certified discrete Brunn-Minkowski defect of A and B");
    bm_cmd->add_option("--a", c.a_path, "Point-set file A")->required();
    bm_cmd->add_option("--b", c.b_path, "Point-set file B")->required();
    bm_cmd->add_option("--basis", c.basis, "Basis vectors as matrix columns (default standard)");

    auto* gen_cmd = app.add_subcommand("generate", "Named point sets: kp, skew, rotline, grid");
    gen_cmd->add_option("kind", c.kind, "kp | skew | rotline | grid")->required();
    gen_cmd->add_option("--m", c.gen_m, "First side of the kp box");
    gen_cmd->add_option("--n", c.gen_n, "Second side of the kp box, or n for skew and rotline");
    gen_cmd->add_option("--sides", c.sides, "Comma separated side lengths for grid");
    gen_cmd->add_option("--output", c.output, "Write the points here");

    auto* min_cmd = app.add_subcommand("minimize", "Smallest |L1 A + L2 A| over n-subsets of a box");
    min_cmd->add_option("--l1", c.l1, "Matrix L1")->required();
    min_cmd->add_option("--l2", c.l2, "Matrix L2")->required();
    min_cmd->add_option("-n", c.n_range, "Set size k, or a range a:b")->required();
    min_cmd->add_option("--box", c.box, "Box \"x0:x1,y0:y1\"")->required();
    min_cmd->add_option("--strategy", c.strategy, "exhaustive | random:COUNT:SEED | anneal:STEPS:SEED");
    min_cmd->add_option("--workers", c.workers, "Worker threads for exhaustive search (0 = all cores)");
    auto* json_opt = min_cmd->add_flag("--json", c.json, "JSON output");
    auto* csv_opt = min_cmd->add_flag("--csv", c.csv, "CSV rows n,minimum,ratio");
    json_opt->excludes(csv_opt);
    min_cmd->add_flag("--stats", c.stats, "Include node count and elapsed time in JSON");

    auto* const_cmd = app.add_subcommand("constants", "Trace of the deficit-shrinking recursion");
    const_cmd->add_option("--d", c.d, "Dimension");
    const_cmd->add_option("--k", c.k, "Dilate k (identity recursion)");
    const_cmd->add_option("--p", c.p, "|det L1| (pair recursion)");
    const_cmd->add_option("--q", c.q, "|det L2| (pair recursion)");
    const_cmd->add_option("--sigma1", c.sigma1, "Exponent sigma1")->required();
    const_cmd->add_option("--D", c.D, "Coefficient D")->required();
    const_cmd->add_option("--alpha0", c.alpha0, "Initial deficit")->required();
    const_cmd->add_option("--D1", c.d1, "Initial error coefficient")->required();
    const_cmd->add_option("--target-eps", c.target_eps, "Stop once alpha < eps")->required();
    const_cmd->add_option("--D2prime", c.d2_prime, "Error coefficient D2' for the final constants");
    const_cmd->add_option("--max-steps", c.max_steps, "Step limit");
    const_cmd->add_option("--every", c.every, "Print every n-th state");

    std::vector<std::string> argv_store{"dilate"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    struct PrecisionGuard {
        ~PrecisionGuard() { set_default_precision_bits(0); }
    } guard;
    try {
        set_default_precision_bits(c.precision_bits);
        if (classify_cmd->parsed()) cmd_classify(c, out);
        else if (companion_cmd->parsed()) cmd_companion(c, out);
        else if (hvalue_cmd->parsed()) cmd_hvalue(c, out);
        else if (sumset_cmd->parsed()) cmd_sumset(c, out);
        else if (partition_cmd->parsed()) cmd_partition(c, out);
        else if (compress_cmd->parsed()) {
            if (!c.full && c.axis == 0) throw CLI::ValidationError("compress needs --axis or --full");
            cmd_compress(c, out);
        } else if (bm_cmd->parsed()) cmd_bmcheck(c, out);
        else if (gen_cmd->parsed()) cmd_generate(c, out);
        else if (min_cmd->parsed()) cmd_minimize(c, out);
        else if (const_cmd->parsed()) cmd_constants(c, out);
    } catch (const CLI::Error& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        write_json(out, error_json(e));
        return 1;
    } catch (const std::exception& e) {
        write_json(out, {{"error", {{"code", "internal"}, {"message", e.what()}, {"witness", ""}}}});
        return 1;
    }
    return 0;
}

}  // namespace dilate::cli
