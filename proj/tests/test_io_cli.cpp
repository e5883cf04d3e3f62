#include "frobalg/cli.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace frobalg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("frobalg_test_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    [[nodiscard]] std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

std::string generate(const cli::GenerateParams& p, const std::string& dest) {
    const auto r = cli::run_generate(p, dest);
    REQUIRE(r.exit_code == 0);
    write_file(dest, *r.output_text);
    return dest;
}

cli::GenerateParams params(std::string kind) {
    cli::GenerateParams p;
    p.kind = std::move(kind);
    return p;
}

struct Run {
    int code;
    std::string out;
};

Run run_binary(const std::string& args) {
    const std::string cmd = std::string(FROBALG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("algebra files round-trip exactly") {
    for (auto& [name, pkg] : standard_suite()) {
        INFO(name);
        AlgebraFile f{name, {}, complete(pkg)};
        for (std::size_t i = 0; i < pkg.algebra.dim(); ++i) f.basis_labels.push_back("b" + std::to_string(i));
        const std::string text = emit_algebra_file_text(f);
        const AlgebraFile back = parse_algebra_file_text(text);
        CHECK(emit_algebra_file_text(back) == text);
        CHECK(back.package.pairing->kappa().matrix() == f.package.pairing->kappa().matrix());
        CHECK(back.package.phi_rho->matrix() == f.package.phi_rho->matrix());
        CHECK(back.package.delta_eps->delta().matrix() == f.package.delta_eps->delta().matrix());
    }
}

TEST_CASE("file layout follows the documented index conventions") {
    const AlgebraFile f{"Lambda_2", {"1", "x", "y", "xy"}, complete(quantum_plane(Scalar(2)))};
    const Json j = emit_algebra_file(f);
    CHECK(j["schema_version"] == 1);
    CHECK(j["carrier_dim"] == 4);
    CHECK(j["m"][2][1][3] == "2/1");   // y·x = 2 xy
    CHECK(j["m"][1][2][3] == "1/1");   // x·y = xy
    CHECK(j["eta"][0] == "1/1");
    CHECK(j["eps"][3] == "1/1");
    CHECK(j["kappa"][2][1] == "2/1");
    // Δ(1) contains x ⊗ y with coefficient 1/2.
    CHECK(j["delta"][0][1][2] == "1/2");
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"schema_version", "name", "carrier_dim", "basis_labels", "meta", "m", "eta",
                                           "delta", "eps", "kappa", "phi"});
}

TEST_CASE("parse errors") {
    const std::string good = emit_algebra_file_text({"unit", {"1"}, unit_algebra()});
    CHECK_NOTHROW(parse_algebra_file_text(good));
    auto with = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        const auto pos = s.find(from);
        REQUIRE(pos != std::string::npos);
        return s.replace(pos, from.size(), to);
    };
    CHECK_THROWS_AS(parse_algebra_file_text("{"), ParseError);
    CHECK_THROWS_AS(parse_algebra_file_text("[]"), ParseError);
    CHECK_THROWS_AS(parse_algebra_file_text(with("\"schema_version\": 1", "\"schema_version\": 2")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file_text(with("\"carrier_dim\": 1", "\"carrier_dim\": 2")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file_text(with("\"carrier_dim\": 1", "\"carrier_dim\": 0")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file_text(with("\"eps\": [\n    \"1/1\"", "\"eps\": [\n    \"1/0\"")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file_text(with("\"eps\": [\n    \"1/1\"", "\"eps\": [\n    1")), ParseError);
    CHECK_THROWS_AS(parse_algebra_file_text(with("\"eps\"", "\"eps_missing\"")), ParseError);
}

TEST_CASE("check command") {
    TempDir dir;
    const auto m2 = generate([] {
        auto p = params("matrix");
        p.n = 2;
        return p;
    }(), dir.file("m2.json"));
    const auto ok = cli::run_check(m2);
    CHECK(ok.exit_code == 0);
    CHECK(ok.report["status"] == "pass");
    CHECK(ok.report["flags"]["symmetric"] == true);

    // Corrupt one structure constant: E_12 · E_21 gains an E_22 term.
    Json j = Json::parse(slurp(m2));
    j["m"][1][2][3] = "1/1";
    write_file(dir.file("bad.json"), j.dump(2));
    const auto bad = cli::run_check(dir.file("bad.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.report["status"] == "fail");
    CHECK_FALSE(bad.report["reason"].get<std::string>().empty());
    bool saw_assoc_witness = false;
    for (const auto& c : bad.report["checks"])
        if (c["name"] == "associativity" && c["pass"] == false && c["witness"].is_array()) saw_assoc_witness = true;
    CHECK(saw_assoc_witness);

    j = Json::parse(slurp(m2));
    j["eta"][0] = "1/0";
    write_file(dir.file("zero_den.json"), j.dump());
    const auto zd = cli::run_check(dir.file("zero_den.json"));
    CHECK(zd.exit_code == 2);
    CHECK(zd.report["status"] == "error");
    CHECK_FALSE(zd.report["reason"].get<std::string>().empty());

    CHECK(cli::run_check(dir.file("missing.json")).exit_code == 2);
}

TEST_CASE("convert command") {
    TempDir dir;
    auto pm = params("matrix");
    pm.n = 2;
    const auto m2 = generate(pm, dir.file("m2.json"));

    const auto to_k = cli::run_convert(m2, cli::Presentation::deltaeps, cli::Presentation::kappa, dir.file("m2k.json"));
    REQUIRE(to_k.exit_code == 0);
    write_file(*to_k.output_path, *to_k.output_text);
    const Json kj = Json::parse(*to_k.output_text);
    CHECK_FALSE(kj.contains("delta"));
    // Matches the trace pairing Gram matrix.
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            const auto tr = oracle::trace(oracle::multiply(oracle::matrix_unit(2, a / 2, a % 2),
                                                           oracle::matrix_unit(2, b / 2, b % 2)));
            CHECK(kj["kappa"][a][b] == Scalar(tr).to_string());
        }

    // Reverse conversion reproduces the input block.
    const auto back = cli::run_convert(*to_k.output_path, cli::Presentation::kappa, cli::Presentation::deltaeps,
                                       dir.file("m2d.json"));
    REQUIRE(back.exit_code == 0);
    const Json orig = Json::parse(slurp(m2)), dj = Json::parse(*back.output_text);
    CHECK(dj["delta"] == orig["delta"]);
    CHECK(dj["eps"] == orig["eps"]);

    // kappa -> phi -> kappa.
    const auto to_phi = cli::run_convert(*to_k.output_path, cli::Presentation::kappa, cli::Presentation::phi,
                                         dir.file("m2p.json"));
    REQUIRE(to_phi.exit_code == 0);
    write_file(*to_phi.output_path, *to_phi.output_text);
    const auto phi_back = cli::run_convert(*to_phi.output_path, cli::Presentation::phi, cli::Presentation::kappa,
                                           dir.file("m2k2.json"));
    REQUIRE(phi_back.exit_code == 0);
    CHECK(Json::parse(*phi_back.output_text)["kappa"] == kj["kappa"]);

    // Dimension 1, every direction.
    const auto unit = generate(params("unit"), dir.file("unit.json"));
    for (auto from : {cli::Presentation::deltaeps, cli::Presentation::kappa})
        for (auto to : {cli::Presentation::deltaeps, cli::Presentation::kappa, cli::Presentation::phi}) {
            const auto r = cli::run_convert(unit, from, to, dir.file("u.json"));
            CHECK(r.exit_code == 0);
        }

    // Degenerate κ: exit 1 with a null witness.
    Json z = kj;
    for (auto& row : z["kappa"])
        for (auto& v : row) v = "0/1";
    write_file(dir.file("zero.json"), z.dump());
    const auto deg = cli::run_convert(dir.file("zero.json"), cli::Presentation::kappa, cli::Presentation::deltaeps,
                                      dir.file("never.json"));
    CHECK(deg.exit_code == 1);
    CHECK(deg.report["null_witness"].size() == 4);
    CHECK_FALSE(deg.output_text.has_value());

    CHECK(cli::run_convert(m2, cli::Presentation::phi, cli::Presentation::kappa).exit_code == 2);
}

TEST_CASE("nakayama command") {
    TempDir dir;
    auto pq = params("quantum_plane");
    pq.q = "2";
    const auto l2 = generate(pq, dir.file("l2.json"));
    const auto r = cli::run_nakayama(l2);
    CHECK(r.exit_code == 0);
    CHECK(r.report["is_identity"] == false);
    CHECK(r.report["is_algebra_morphism"] == true);
    CHECK(r.report["inner"]["witness"].is_null());
    CHECK(r.report["inner"]["certified"] == true);
    CHECK(r.report["nakayama"][1][1] == "2/1");
    CHECK(r.report["nakayama"][2][2] == "1/2");

    auto pm = params("matrix");
    pm.n = 2;
    pm.twist_diag = std::vector<std::string>{"1", "2"};
    const auto m2u = generate(pm, dir.file("m2u.json"));
    cli::NakayamaOptions opts;
    opts.symmetrize = true;
    const auto ru = cli::run_nakayama(m2u, opts);
    CHECK(ru.exit_code == 0);
    CHECK(ru.report["is_identity"] == false);
    REQUIRE(ru.report["inner"]["witness"].is_object());
    REQUIRE(ru.report["symmetrized_kappa"].is_array());
    // The symmetrized pairing is symmetric as a Gram matrix.
    const Json& s = ru.report["symmetrized_kappa"];
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) CHECK(s[a][b] == s[b][a]);

    auto pg = params("group");
    pg.cyclic = 2;
    const auto z2 = generate(pg, dir.file("z2.json"));
    CHECK(cli::run_nakayama(z2).report["is_identity"] == true);
}

TEST_CASE("generate command") {
    TempDir dir;
    auto pm = params("matrix");
    pm.n = 2;
    CHECK(cli::run_check(generate(pm, dir.file("m2.json"))).exit_code == 0);
    auto pg = params("group");
    pg.cyclic = 2;
    CHECK(cli::run_check(generate(pg, dir.file("z2.json"))).exit_code == 0);
    auto ps = params("group");
    ps.symmetric = 3;
    CHECK(cli::run_check(generate(ps, dir.file("s3.json"))).exit_code == 0);
    auto pc = params("canonical_dual");
    pc.dim = 2;
    CHECK(cli::run_check(generate(pc, dir.file("c2.json"))).exit_code == 0);

    write_file(dir.file("table.json"), "[[0,1,2],[1,2,0],[2,0,1]]");
    auto pt = params("group");
    pt.table_path = dir.file("table.json");
    CHECK(cli::run_check(generate(pt, dir.file("z3.json"))).exit_code == 0);
    write_file(dir.file("bad_table.json"), "[[0,1],[1,1]]");
    pt.table_path = dir.file("bad_table.json");
    CHECK(cli::run_generate(pt).exit_code == 2);

    auto pq = params("quantum_plane");
    pq.q = "0";
    const auto q0 = cli::run_generate(pq);
    CHECK(q0.exit_code == 2);
    CHECK_FALSE(q0.report["reason"].get<std::string>().empty());
    pq.q = "1/0";
    CHECK(cli::run_generate(pq).exit_code == 2);
    CHECK(cli::run_generate(params("octonions")).exit_code == 2);
    auto two = params("group");
    two.cyclic = 2;
    two.symmetric = 3;
    CHECK(cli::run_generate(two).exit_code == 2);
}

TEST_CASE("default output directory comes from FROBALG_OUT_DIR") {
    TempDir dir;
    ::setenv("FROBALG_OUT_DIR", dir.path.c_str(), 1);
    CHECK(cli::default_output_path(std::nullopt, "x.json") == dir.file("x.json"));
    CHECK(cli::default_output_path(std::string("y.json"), "x.json") == "y.json");
    ::unsetenv("FROBALG_OUT_DIR");
    CHECK(cli::default_output_path(std::nullopt, "x.json") == "x.json");
}

TEST_CASE("executable: exit codes, reasons and byte-identical reports") {
    TempDir dir;
    const std::string l2 = dir.file("l2.json");
    CHECK(run_binary("generate quantum_plane --q 2 --out " + l2).code == 0);
    const Run a = run_binary("nakayama " + l2 + " --seed 99");
    const Run b = run_binary("nakayama " + l2 + " --seed 99");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["seed"] == 99);

    const Run q0 = run_binary("generate quantum_plane --q 0 --out " + dir.file("q0.json"));
    CHECK(q0.code == 2);
    CHECK_FALSE(Json::parse(q0.out)["reason"].get<std::string>().empty());

    const Run usage = run_binary("convert " + l2 + " --from nonsense --to kappa");
    CHECK(usage.code == 2);
    CHECK_FALSE(Json::parse(usage.out)["reason"].get<std::string>().empty());

    const Run text = run_binary("check " + l2 + " --format text");
    CHECK(text.code == 0);
    CHECK(text.out.find("status: pass") != std::string::npos);

    const std::string report = dir.file("report.json");
    CHECK(run_binary("check " + l2 + " --out " + report).code == 0);
    CHECK(Json::parse(slurp(report))["command"] == "check");
}
