#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dilate/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = dilate::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

std::vector<nlohmann::json> parse_lines(const std::string& s) {
    std::vector<nlohmann::json> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(nlohmann::json::parse(line));
    return out;
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "dilate_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("classify command") {
    const Run r = run({"classify", "--l1", "1,0;0,1", "--l2", "0,2;1,0"});
    REQUIRE(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["p"] == 1);
    CHECK(j["q"] == 2);
    CHECK(j["irreducible"] == true);
    CHECK(j["coprime"] == true);
    CHECK(j["bound"][0].get<std::string>().rfind("5.828427124746190", 0) == 0);
    CHECK(j["h"][1].get<std::string>().rfind("5.828427124746190", 0) == 0);
    CHECK(j["h_vs_bound"] != "less");
    CHECK(j["certificates"]["irreducible"] == "char_poly_irreducible");

    const auto rot = parse(run({"classify", "--l1", "0,-1;1,0", "--l2", "0,-1;1,0"}).out);
    CHECK(rot["irreducible"] == false);
    CHECK(rot["coprime"].is_null());
    CHECK(rot["h"].is_null());

    const auto skew = parse(run({"classify", "--l1", "2,0;0,1", "--l2", "0,-1;2,0"}).out);
    CHECK(skew["coprime"] == false);
    CHECK(skew["c_prime"] == 1);
    CHECK(skew["certificates"]["coprime"]["det_l1"] == 2);
    CHECK(skew["h_for_non_coprime"] == true);
}

TEST_CASE("errors and exit codes") {
    const Run bad = run({"classify", "--l1", "1,2;3", "--l2", "1,0;0,1"});
    CHECK(bad.code == 1);
    const auto j = parse(bad.out);
    CHECK(j["error"]["code"] == "parse_error");
    CHECK(run({}).code == 2);
    CHECK(run({"classify", "--l1", "1,0;0,1"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    const Run red = run({"companion", "--poly", "-1,0,1"});
    CHECK(red.code == 1);
    CHECK(parse(red.out)["error"]["code"] == "reducible");
    CHECK(run({"minimize", "--l1", "1", "--l2", "2", "-n", "5", "--box", "0:3"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("companion and hvalue commands") {
    const auto c = parse(run({"companion", "--poly", "-2,1,2"}).out);
    CHECK(c["l1"] == "1,0;0,2");
    CHECK(c["l2"] == "0,2;1,-1");
    CHECK(c["b"] == 2);
    CHECK(c["classification"]["coprime"] == true);
    const Run h = run({"hvalue", "--poly", "-1,1"});
    REQUIRE(h.code == 0);
    const auto hj = parse(h.out);
    CHECK(hj["h"][0] == hj["h"][1]);
    const auto hp = parse(run({"hvalue", "--l1", "1,0;0,2", "--l2", "0,2;1,-1"}).out);
    CHECK(hp["h"][0].get<std::string>().rfind("8.1231056256", 0) == 0);
}

TEST_CASE("generate, sumset, partition, compress and bmcheck commands") {
    const auto skew = scratch("skew3.txt");
    REQUIRE(run({"generate", "skew", "--n", "3", "--output", skew.string()}).code == 0);
    const auto s = parse(run({"sumset", "--points", skew.string(), "--l1", "2,0;0,1", "--l2", "0,-1;2,0"}).out);
    CHECK(s["n"] == 9);
    CHECK(s["sumset"] == 25);
    CHECK(s["ratio"] == "25/9");
    const auto self = parse(run({"sumset", "--points", skew.string(), "--with", skew.string()}).out);
    CHECK(self["sumset"] == 25);

    const Run gen = run({"generate", "kp", "--m", "7", "--n", "5"});
    REQUIRE(gen.code == 0);
    const auto kp = scratch("kp.txt");
    std::ofstream(kp) << gen.out;
    const auto k = parse(run({"sumset", "--points", kp.string(), "--l", "0,2;1,0"}).out);
    CHECK(k["sumset"] == 165);

    const auto part = parse(run({"partition", "--points", skew.string(), "--lattice", "2,0;0,1"}).out);
    CHECK(part["parts"].size() == 2);

    const auto comp = parse(run({"compress", "--points", skew.string(), "--full", "--json"}).out);
    CHECK(comp["n"] == 9);
    CHECK(comp["compressed"] == true);

    const auto bm = parse(run({"bmcheck", "--a", skew.string(), "--b", skew.string()}).out);
    CHECK(bm["verdict"] == "nonnegative");
    CHECK(run({"sumset", "--points", "/nonexistent/file"}).code == 1);
}

TEST_CASE("minimize output is deterministic") {
    const std::vector<std::string> base{"minimize", "--l1", "1,0;0,1", "--l2", "0,-1;1,0", "-n", "2:4", "--box", "0:3,0:3"};
    auto with = [&](std::vector<std::string> extra) {
        auto a = base;
        a.insert(a.end(), extra.begin(), extra.end());
        return run(a);
    };
    const Run one = with({"--json", "--workers", "1"});
    const Run many = with({"--json", "--workers", "8"});
    REQUIRE(one.code == 0);
    CHECK(one.out == many.out);
    const auto lines = parse_lines(one.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[2]["minimum"] == 9);
    CHECK(lines[2]["exact"] == true);
    const Run csv = with({"--csv"});
    CHECK(csv.out == "n,minimum,ratio\n2,4,2.000000000\n3,7,2.333333333\n4,9,2.250000000\n");
    const Run anneal = with({"--json", "--strategy", "anneal:2000:5"});
    CHECK(anneal.out == with({"--json", "--strategy", "anneal:2000:5"}).out);
    CHECK(parse_lines(anneal.out)[2]["exact"] == false);
}

TEST_CASE("constants command") {
    const Run r = run({"constants", "--d", "1", "--k", "2", "--sigma1", "0.1", "--D", "1", "--alpha0", "0.5", "--D1",
                       "1", "--target-eps", "0.01", "--every", "100"});
    REQUIRE(r.code == 0);
    const auto lines = parse_lines(r.out);
    REQUIRE(lines.size() >= 2);
    const auto fin = lines.back()["final"];
    CHECK(std::fabs(fin["sigma2"].get<double>() - 0.0089373) < 1e-6);
    CHECK(std::fabs(fin["sigma2_extracted"].get<double>() - fin["sigma2"].get<double>()) < 1e-6);
    const long steps = fin["steps"], closed = fin["closed_form_steps"];
    CHECK(std::labs(steps - closed) <= 1);
    CHECK(run({"constants", "--d", "1", "--sigma1", "0.1", "--D", "1", "--alpha0", "0.5", "--D1", "1", "--target-eps",
               "0.01"})
              .code == 2);
}

TEST_CASE("precision override") {
    const Run lo = run({"--precision-bits", "64", "classify", "--l1", "1,0;0,1", "--l2", "0,2;1,0"});
    const Run hi = run({"--precision-bits", "256", "classify", "--l1", "1,0;0,1", "--l2", "0,2;1,0"});
    REQUIRE(lo.code == 0);
    REQUIRE(hi.code == 0);
    CHECK(parse(lo.out)["bound"][0].get<std::string>().size() < parse(hi.out)["bound"][0].get<std::string>().size());
    CHECK(run({"--precision-bits", "3", "classify", "--l1", "1", "--l2", "2"}).code != 0);
}
