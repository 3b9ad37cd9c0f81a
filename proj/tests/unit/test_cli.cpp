#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qmcut/cli.hpp"
#include "qmcut/schema.hpp"

using namespace qmcut;
using nlohmann::json;

#ifndef QMCUT_SOURCE_DIR
#error "QMCUT_SOURCE_DIR must point at the repository root"
#endif

namespace {

const std::string kSchemaDir = std::string(QMCUT_SOURCE_DIR) + "/schemas";

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args, const std::string& schema_name) {
    auto res = run_cli(args);
    REQUIRE(res.code == cli::kExitOk);
    json j = json::parse(res.out);
    auto violations = schema_violations(j, load_schema(kSchemaDir, schema_name));
    for (const auto& v : violations)
        MESSAGE(v);
    CHECK(violations.empty());
    return j;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = std::string("qmcut_test_") + std::to_string(rand()) + ".edges";
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("solve values through the command line") {
    json a = run_json({"solve", "--d", "3", "--parts", "2,2,1", "--output", "json"}, "solve");
    CHECK(a["value"] == 24);
    CHECK(a["method"] == "search");

    json b = run_json({"solve", "--d", "2", "--parts", "3,1,1", "--output", "json"}, "solve");
    CHECK(b["value"] == 16);

    json c = run_json({"solve", "--d", "1", "--parts", "4,2,1", "--output", "json"}, "solve");
    CHECK(c["value"] == 0);

    // parts are sorted before solving
    json d = run_json({"solve", "--d", "2", "--parts", "1,3,1", "--output", "json"}, "solve");
    CHECK(d["value"] == 16);
    CHECK(d["parts"] == json::array({3, 1, 1}));

    // non-tripartite parts go through the multipartite search
    json e = run_json({"solve", "--d", "2", "--parts", "1,1,1,1", "--output", "json"}, "solve");
    CHECK(e["value"] == 12);
    CHECK(e["argmax"][0].contains("factors"));

    auto text = run_cli({"solve", "--d", "2", "--parts", "1,1,1"});
    CHECK(text.code == cli::kExitOk);
    CHECK(text.out.find("value = 6") != std::string::npos);
    CHECK(text.out.find("lambda=(2,1)") != std::string::npos);
}

TEST_CASE("closed-form command") {
    json a = run_json({"closed-form", "--d", "3", "--parts", "2,2,1", "--output", "json"},
                      "closed-form");
    CHECK(a["value"] == 24);
    CHECK(a["method"] == "closed_form");
    json b = run_json({"closed-form", "--d", "2", "--parts", "2,2,1", "--output", "json"},
                      "closed-form");
    CHECK(b["value"] == 16);
    CHECK(run_cli({"closed-form", "--d", "4", "--parts", "2,2,1"}).code == cli::kExitUsage);
    CHECK(run_cli({"closed-form", "--d", "2", "--parts", "2,2"}).code == cli::kExitUsage);
}

TEST_CASE("brute command on parts and on a graph file") {
    json a = run_json({"brute", "--d", "2", "--parts", "1,1,1", "--output", "json"}, "brute");
    CHECK(std::abs(a["value"].get<double>() - 6.0) < 1e-6);
    CHECK(a["seed"] == 42);

    TempFile tri("3 3\n0 1\n1 2\n0 2\n");
    json b = run_json({"brute", "--d", "3", "--graph", tri.path, "--output", "json"}, "brute");
    CHECK(std::abs(b["value"].get<double>() - 12.0) < 1e-6);

    TempFile single("2 1\n0 1\n");
    json c = run_json({"brute", "--d", "2", "--graph", single.path, "--output", "json"}, "brute");
    CHECK(std::abs(c["value"].get<double>() - 4.0) < 1e-9);
}

TEST_CASE("brute error contract") {
    // exactly one input source
    CHECK(run_cli({"brute", "--d", "2"}).code == cli::kExitUsage);
    // size guard -> computation failure
    auto guard = run_cli({"brute", "--d", "2", "--parts", "12,12"});
    CHECK(guard.code == cli::kExitComputation);
    CHECK(guard.err.find("2^22") != std::string::npos);
    // non-convergence -> computation failure with diagnostics
    auto conv = run_cli({"brute", "--d", "2", "--parts", "2,2,1", "--tol", "1e-18", "--max-iters", "3"});
    CHECK(conv.code == cli::kExitComputation);
    CHECK(conv.err.find("Rayleigh") != std::string::npos);
    // malformed graph file -> usage error
    TempFile bad("2 1\n0 0\n");
    CHECK(run_cli({"brute", "--d", "2", "--graph", bad.path}).code == cli::kExitUsage);
    CHECK(run_cli({"brute", "--d", "2", "--graph", "no_such_file.edges"}).code == cli::kExitUsage);
}

TEST_CASE("lr command") {
    json a = run_json({"lr", "--lambda", "3,3,2", "--factors", "2,1/2,1/2", "--direct",
                       "--output", "json"},
                      "lr");
    CHECK(a["coefficient"] == 3);
    CHECK(a["direct_coefficient"] == 3);

    json b = run_json({"lr", "--lambda", "3,3,2", "--factors", "2,1/3/2", "--direct",
                       "--output", "json"},
                      "lr");
    CHECK(b["coefficient"] == 1);
    CHECK(b["direct_coefficient"] == 1);

    json c = run_json({"lr", "--lambda", "2,1", "--factors", "1/1,1", "--output", "json"}, "lr");
    CHECK(c["coefficient"] == 1);

    CHECK(run_cli({"lr", "--lambda", "2,1", "--factors", "1/1,1", "--direct"}).code ==
          cli::kExitUsage);
    CHECK(run_cli({"lr", "--lambda", "1,2", "--factors", "1/1,1"}).code == cli::kExitUsage);
}

TEST_CASE("eta command") {
    json a = run_json({"eta", "--partition", "3,2", "--d", "2", "--output", "json"}, "eta");
    CHECK(a["content_sum"] == 2);
    CHECK(a["eta"] == 16);
    CHECK(a["eta_rows"] == 16);
    json b = run_json({"eta", "--partition", "2,1", "--output", "json"}, "eta");
    CHECK(b["eta"] == 6);
    CHECK_FALSE(b.contains("eta_rows"));
    CHECK(run_cli({"eta", "--partition", "1,1,1", "--d", "2"}).code == cli::kExitUsage);
}

TEST_CASE("sweep command") {
    json a = run_json({"sweep", "--d", "3", "--max-n", "6", "--output", "json"}, "sweep");
    REQUIRE(!a["rows"].empty());
    for (const auto& row : a["rows"]) {
        CHECK(row["search"] == row["closed_form"]);
        REQUIRE(!row["oracle"].is_null());
        CHECK(std::abs(row["oracle"].get<double>() - row["search"].get<double>()) < 1e-6);
    }

    auto tsv = run_cli({"sweep", "--d", "2", "--max-n", "5"});
    CHECK(tsv.code == cli::kExitOk);
    CHECK(tsv.out.find("p\tq\tr\td\tsearch\tclosed_form\toracle") == 0);
    auto tsv2 = run_cli({"sweep", "--d", "2", "--max-n", "5"});
    CHECK(tsv.out == tsv2.out); // deterministic

    // oracle column is dropped beyond the budget
    json b = run_json({"sweep", "--d", "2", "--max-n", "5", "--oracle-budget", "8",
                       "--output", "json"},
                      "sweep");
    for (const auto& row : b["rows"])
        if (row["n"].get<int>() > 3)
            CHECK(row["oracle"].is_null());
}

TEST_CASE("spectrum command") {
    auto text = run_cli({"spectrum", "--d", "2", "--parts", "1,1"});
    CHECK(text.code == cli::kExitOk);
    CHECK(text.out == "0\n0\n0\n4\n");

    json a = run_json({"spectrum", "--d", "2", "--parts", "1,1,1", "--output", "json"}, "spectrum");
    REQUIRE(a["eigenvalues"].size() == 8);
    CHECK(std::abs(a["eigenvalues"].back().get<double>() - 6.0) < 1e-8);

    CHECK(run_cli({"spectrum", "--d", "2", "--parts", "7,6"}).code == cli::kExitComputation);
    CHECK(run_cli({"spectrum", "--d", "2"}).code == cli::kExitUsage);
}

TEST_CASE("verify command subsets") {
    auto anchors = run_cli({"verify", "--checks", "anchors"});
    CHECK(anchors.code == cli::kExitOk);
    CHECK(anchors.out.find("FAIL") == std::string::npos);

    json j = run_json({"verify", "--max-n", "4", "--checks", "clique,anchors", "--output", "json"},
                      "verify");
    CHECK(j["all_pass"] == true);
    CHECK(j["seed"] == 42);

    auto tri = run_cli({"verify", "--max-n", "4", "--checks", "tripartite"});
    CHECK(tri.code == cli::kExitOk);
    CHECK(tri.out.find("printed=5 computed=6") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run_cli({"solve", "--parts", "1,1,1"}).code == cli::kExitUsage);
    CHECK(run_cli({"solve", "--d", "2", "--parts", "banana"}).code == cli::kExitUsage);
    CHECK(run_cli({"solve", "--d", "2", "--parts", "2,-1"}).code == cli::kExitUsage);
    CHECK(run_cli({"solve", "--d", "2", "--parts", "3"}).code == cli::kExitUsage);
    CHECK(run_cli({"solve", "--d", "0", "--parts", "1,1,1"}).code == cli::kExitUsage);
}

TEST_CASE("help exits cleanly") {
    auto res = run_cli({"--help"});
    CHECK(res.code == cli::kExitOk);
    CHECK(res.out.find("solve") != std::string::npos);
}

TEST_SUITE_END();
