#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "generators.hpp"
#include "toric/errors.hpp"
#include "toric/fan_io.hpp"
#include "toric/job.hpp"

using namespace toric;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kP2Text = R"(# the projective plane
rank: 2
rays:
  [1, 0]
  [0, 1]
  [-1, -1]
max_cones:
  [0, 1]
  [1, 2]
  [2, 0]
)";

struct Run {
    int status = -1;
    std::string out;
};

Run invoke(const std::string& args) {
    const std::string cmd = std::string(TORICPERF_BIN) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("toricperf_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

FanParseError parse_error(const std::string& text) {
    try {
        parse_fan_file(text);
    } catch (const FanParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    throw std::logic_error("unreachable");
}

JobSpec job(Command c, std::string fan, std::optional<std::string> divisor = std::nullopt) {
    JobSpec j;
    j.command = c;
    j.fan_source = std::move(fan);
    if (divisor) j.divisor = parse_divisor(*divisor);
    return j;
}

}  // namespace

TEST_CASE("parse a fan document") {
    const Fan f = parse_fan_file(kP2Text);
    CHECK(f.rank() == 2);
    CHECK(f.rays() == named_fan("P2").rays());
    CHECK(f.max_cones() == named_fan("P2").max_cones());
    // inline vectors and trailing comments
    const Fan g = parse_fan_file("rank: 2\nrays: [1,0] [0,1] [-1,-1]  # three\nmax_cones: [0,1] [1,2] [2,0]\n");
    CHECK(g.rays() == f.rays());
}

TEST_CASE("parse errors name the field and line") {
    const auto missing = parse_error("rank: 2\nrays:\n  [1, 0]\n  [0, 1]\n");
    CHECK(missing.kind() == FanParseError::Kind::Semantic);
    CHECK(missing.field() == "max_cones");

    const auto zero = parse_error("rank: 2\nrays:\n  [1, 0]\n  [0, 0]\nmax_cones:\n  [0, 1]\n");
    CHECK(zero.kind() == FanParseError::Kind::Semantic);
    CHECK(zero.field() == "rays");
    CHECK(zero.line() == 4);
    CHECK(std::string(zero.what()).find("zero ray") != std::string::npos);

    CHECK(parse_error("rank: 2\nrays: [2, 0] [0, 1]\nmax_cones: [0, 1]\n").kind() == FanParseError::Kind::Semantic);
    CHECK(parse_error("rank: 2\nrays: [1, 0, 0]\nmax_cones: [0]\n").field() == "rays");
    CHECK(parse_error("rank: 2\nrays: [1, 0] [0, 1]\nmax_cones: [0, 5]\n").field() == "max_cones");
    CHECK(parse_error("rank: 7\nrays: [1,0,0,0,0,0,0]\nmax_cones: [0]\n").field() == "rank");
    CHECK(parse_error("rank: 2\nrank: 2\nrays: [1, 0]\nmax_cones: [0]\n").kind() == FanParseError::Kind::Semantic);
    CHECK(parse_error("rank: two\nrays: [1, 0]\nmax_cones: [0]\n").kind() == FanParseError::Kind::Syntax);
    CHECK(parse_error("colour: red\n").kind() == FanParseError::Kind::Syntax);
    CHECK(parse_error("rank: 2\nrays: [1, 0\nmax_cones: [0]\n").kind() == FanParseError::Kind::Syntax);
}

TEST_CASE("serialize round trip") {
    for (const auto& name : named_fan_names()) {
        const Fan f = named_fan(name);
        const Fan g = parse_fan_file(serialize_fan(f));
        CHECK(g.rank() == f.rank());
        CHECK(g.rays() == f.rays());
        CHECK(g.max_cones() == f.max_cones());
    }
    gen::Rng rng(81);
    for (int i = 0; i < 20; ++i) {
        const Fan f = gen::random_complete_surface(rng, 3 + rng.index(5));
        CHECK(parse_fan_file(serialize_fan(f)).rays() == f.rays());
    }
}

TEST_CASE("divisor parsing") {
    CHECK(parse_divisor("1,-2, 3") == make_vector({1, -2, 3}));
    CHECK(parse_divisor("+4") == make_vector({4}));
    CHECK_THROWS_AS(parse_divisor(""), InputError);
    CHECK_THROWS_AS(parse_divisor("1,,2"), InputError);
    CHECK_THROWS_AS(parse_divisor("1,x"), InputError);
}

TEST_CASE("job runner reports") {
    const Report coh = run(job(Command::Cohomology, "named:P2", "-3,0,0"));
    CHECK(coh.exit_code == kExitOk);
    const json& doc = coh.document;
    CHECK(doc["schema"] == kReportSchema);
    CHECK(doc["command"] == "cohomology");
    CHECK(doc["status"] == "ok");
    CHECK(doc["results"]["dims"]["2"] == 1);
    CHECK(doc["ray_labels"].size() == 3);
    CHECK(doc["inputs"]["rank"] == 2);
    CHECK(doc.contains("timing"));

    const Report pic = run(job(Command::Picard, "named:P112"));
    CHECK(pic.document["results"]["index_in_class_group"] == 2);

    JobSpec perf = job(Command::PerfPic, "named:P2");
    perf.p = 2;
    CHECK(run(perf).document["results"]["perfectoid_picard_group"] == "Z[1/2]");

    // hypothesis and input failures exit with 2 and keep the envelope
    const Report bad_div = run(job(Command::Cohomology, "named:P2", "1,2"));
    CHECK(bad_div.exit_code == kExitInputError);
    CHECK(bad_div.document["status"] == "error");
    CHECK_FALSE(bad_div.diagnostics.empty());
    JobSpec singular = job(Command::PerfPic, "named:P112");
    singular.p = 2;
    CHECK(run(singular).exit_code == kExitInputError);
    singular.assume_trivialization = true;
    CHECK(run(singular).exit_code == kExitOk);
    JobSpec not_prime = job(Command::PerfPic, "named:P2");
    not_prime.p = 9;
    CHECK(run(not_prime).exit_code == kExitInputError);
    CHECK(run(job(Command::Validate, "/nonexistent/fan.txt")).exit_code == kExitInputError);
    CHECK(run(job(Command::Cohomology, "named:P2")).exit_code == kExitInputError);

    CHECK(run(job(Command::Demazure, "named:P2", "0,0,2")).exit_code == kExitOk);
}

TEST_CASE("invalid fans") {
    const std::string path = write_temp("overlap.fan", "rank: 2\nrays: [1,0] [1,2] [1,1] [0,1]\nmax_cones: [0,1] [2,3]\n");
    const Report v = run(job(Command::Validate, path));
    CHECK(v.exit_code == kExitInputError);
    CHECK(v.document["results"]["valid"] == false);
    CHECK_FALSE(v.diagnostics.empty());
    CHECK(run(job(Command::Cohomology, path, "0,0,0,0")).exit_code == kExitInputError);
    std::filesystem::remove(path);
}

TEST_CASE("results are deterministic") {
    JobSpec j = job(Command::PerfBB, "named:P2", "0,0,3");
    j.p = 2;
    j.n_max = 2;
    const Report a = run(j);
    const Report b = run(j);
    CHECK(a.exit_code == kExitOk);
    CHECK(a.document["results"].dump() == b.document["results"].dump());
    CHECK(a.document["results"]["basis_sizes"] == json::array({1, 10, 55}));

    JobSpec g = job(Command::Cohomology, "named:F1", "1,1,1,1");
    g.graded = true;
    CHECK(run(g).document["results"].dump() == run(g).document["results"].dump());
}

TEST_CASE("command line binary") {
    const auto coh = invoke("cohomology --fan named:P2 --divisor -3,0,0 --indent -1");
    CHECK(coh.status == 0);
    const json doc = json::parse(coh.out);
    CHECK(doc["results"]["dims"] == json{{"0", 0}, {"1", 0}, {"2", 1}});

    const std::string path = write_temp("p2.fan", kP2Text);
    const auto from_file = invoke("cohomology --fan " + path + " --divisor 0,0,2 --modp-check 3");
    CHECK(from_file.status == 0);
    CHECK(json::parse(from_file.out)["results"]["dims"]["0"] == 6);
    std::filesystem::remove(path);

    const auto broken = write_temp("broken.fan", "rank: 2\nrays:\n  [1, 0]\n  [0, 0]\nmax_cones:\n  [0, 1]\n");
    const auto parse_fail = invoke("validate --fan " + broken);
    CHECK(parse_fail.status == 2);
    CHECK(json::parse(parse_fail.out)["status"] == "error");
    std::filesystem::remove(broken);

    CHECK(invoke("no-such-command --fan named:P2").status == 2);
    CHECK(invoke("perf-pic --fan named:P2 --p 4").status == 2);
    CHECK(invoke("perf-demazure --fan named:P2 --divisor 0,0,1 --p 2 --level 1 --nmax 3").status == 0);
    const auto with_threads = invoke("cohomology --fan named:P3 --divisor 0,0,0,-6 --threads 2 --indent -1");
    CHECK(with_threads.status == 0);
    CHECK(json::parse(with_threads.out)["results"]["dims"]["3"] == 10);
}
