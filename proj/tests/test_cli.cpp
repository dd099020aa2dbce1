#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Paths are passed by the test driver: argv[1] = binary, argv[2] = data dir.
static std::string g_bin;
static std::string g_data;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = g_bin + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

using nlohmann::json;

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <equistab-binary> <data-dir>\n");
        return 1;
    }
    g_bin = argv[1];
    g_data = argv[2];
    doctest::Context ctx;
    return ctx.run();
}

TEST_CASE("bredon homology of the sign circle: exact JSON") {
    RunResult r = run_cli("bredon homology --complex " + g_data + "/s_sigma.json --coeffs Z");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    json expect = json::parse(R"([{"d":0,"free":1,"torsion":[2]},{"d":1,"free":0,"torsion":[]}])");
    CHECK(out == expect);
}

TEST_CASE("bredon homology of the disk matches a point in every degree") {
    RunResult disk = run_cli("bredon homology --complex " + g_data + "/d_sigma.json --coeffs Z");
    REQUIRE(disk.exit_code == 0);
    json out = json::parse(disk.out);
    CHECK(out[0] == json::parse(R"({"d":0,"free":1,"torsion":[]})"));
    CHECK(out[1] == json::parse(R"({"d":1,"free":0,"torsion":[]})"));
}

TEST_CASE("gsets enum: two classes of cardinality 3 over C2") {
    RunResult r = run_cli("gsets enum --group '[2]' --size 3");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("count") == 2);
}

TEST_CASE("byte-identical output across repeated runs") {
    std::string cmd = "conf geometric-module --manifold " + g_data + "/rho_c2.json --degree 0 --bound 6";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult c = run_cli("group subgroups --group '[2,2]'");
    RunResult d = run_cli("group subgroups --group '[2,2]'");
    CHECK(c.out == d.out);
}

TEST_CASE("exit codes: validation 2, resource 3, success 0 for negative reports") {
    RunResult bad = run_cli("gsets enum --group '[3,2]' --size 1");
    CHECK(bad.exit_code == 2);

    RunResult huge = run_cli("group subgroups --group '[128]'");
    CHECK(huge.exit_code == 3);

    // a negative mathematical report still exits 0
    std::string mod = g_data + "/tmp_h0_module.json";
    RunResult gen =
        run_cli("conf h0-presentation --manifold " + g_data + "/rho_c2.json --bound 8 --emit-module " + mod);
    REQUIRE(gen.exit_code == 0);
    RunResult fg = run_cli("stab fg --module " + mod + " --ring 'sigma[G/G]'");
    CHECK(fg.exit_code == 0);
    json rep = json::parse(fg.out);
    CHECK(rep.at("finitely_generated") == false);
    std::remove(mod.c_str());
}

TEST_CASE("stab fg over the full ring certifies the rho model") {
    std::string mod = g_data + "/tmp_geo_module.json";
    RunResult gen = run_cli("conf geometric-module --manifold " + g_data +
                            "/rho_c2.json --degree 0 --bound 8 --emit-module " + mod);
    REQUIRE(gen.exit_code == 0);
    RunResult fg = run_cli("stab fg --module " + mod);
    REQUIRE(fg.exit_code == 0);
    json rep = json::parse(fg.out);
    CHECK(rep.at("finitely_generated") == true);
    std::remove(mod.c_str());
}

TEST_CASE("table format and manifest writing") {
    std::string manifest = g_data + "/tmp_manifest.json";
    RunResult r = run_cli("--format table --manifest " + manifest + " gsets enum --group '[2]' --size 4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("3 classes") != std::string::npos);
    std::ifstream mf(manifest);
    REQUIRE(mf.good());
    json m = json::parse(mf);
    CHECK(m.at("tool") == "equistab 0.1.0");
    CHECK(m.contains("input_digests"));
    std::remove(manifest.c_str());
}

TEST_CASE("malformed input never yields partial output") {
    RunResult r = run_cli("gsets enum --group 'not json' --size 1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("stab restrict prints the ring map with integrality") {
    RunResult r = run_cli("stab restrict --group '[4]' --subgroup '\"H1\"'");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("integral") == true);
    CHECK(out.at("images")[0].at("exponent") == 2);
}

TEST_CASE("stab check-seq on the staircase example") {
    RunResult r = run_cli("stab check-seq --sequence " + g_data + "/seq_staircase.json");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("stable") == true);
    CHECK(out.at("stable_from") == 3);
}

TEST_CASE("conf homology at degree zero is Z for a realizable class") {
    RunResult r = run_cli("conf homology --manifold " + g_data + "/rho_c2.json --gset "
                          "'{\"orbits\":[{\"subgroup\":[[0]],\"mult\":1},{\"subgroup\":[[0],[1]],\"mult\":2}]}' "
                          "--degree 0");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("homology") == json::parse(R"({"free":1,"torsion":[]})"));
}

TEST_CASE("conf oracle census totals") {
    RunResult r = run_cli("conf oracle --group '[2]' --gset "
                          "'{\"orbits\":[{\"subgroup\":[[0]],\"mult\":2},{\"subgroup\":[[0],[1]],\"mult\":1}]}' "
                          "--size 2");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("total") == 2);
}

TEST_CASE("bredon homology with custom Mackey coefficients from a file") {
    // a hand-written copy of the constant coefficient system for C2
    std::string path = g_data + "/tmp_mackey_z.json";
    {
        std::ofstream f(path);
        f << R"({
  "schema": "equistab/mackey/v1",
  "group": [2],
  "name": "custom",
  "levels": [{"subgroup": [[0]], "rank": 1}, {"subgroup": [[0],[1]], "rank": 1}],
  "res": [
    {"lower": [[0]], "upper": [[0]], "matrix": [[1]]},
    {"lower": [[0]], "upper": [[0],[1]], "matrix": [[1]]},
    {"lower": [[0],[1]], "upper": [[0],[1]], "matrix": [[1]]}
  ],
  "tr": [
    {"lower": [[0]], "upper": [[0]], "matrix": [[1]]},
    {"lower": [[0]], "upper": [[0],[1]], "matrix": [[2]]},
    {"lower": [[0],[1]], "upper": [[0],[1]], "matrix": [[1]]}
  ]
})";
    }
    RunResult custom = run_cli("bredon homology --complex " + g_data + "/s_sigma.json --coeffs " + path);
    RunResult builtin = run_cli("bredon homology --complex " + g_data + "/s_sigma.json --coeffs Z");
    REQUIRE(custom.exit_code == 0);
    CHECK(custom.out == builtin.out);

    // corrupting a transfer makes the load fail validation
    std::string bad_path = g_data + "/tmp_mackey_bad.json";
    {
        std::ifstream in(path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        auto pos = text.find("[[2]]");
        text.replace(pos, 5, "[[3]]");
        std::ofstream f(bad_path);
        f << text;
    }
    RunResult bad = run_cli("bredon homology --complex " + g_data + "/s_sigma.json --coeffs " + bad_path);
    CHECK(bad.exit_code == 2);
    std::remove(path.c_str());
    std::remove(bad_path.c_str());
}

TEST_CASE("stab mackey-fg certifies the regular model levelwise") {
    RunResult r = run_cli("stab mackey-fg --manifold " + g_data + "/rho_c3.json --degree 0 --bound 9");
    REQUIRE(r.exit_code == 0);
    json out = json::parse(r.out);
    CHECK(out.at("finitely_generated") == true);
    CHECK(out.at("levels").size() == 2);
}
