#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "twistor/report.hpp"

using namespace twistor;

namespace {

const std::string kBin = TWISTORLAB_BIN;
const std::string kTmp = TWISTORLAB_TEST_TMP;

int run(const std::string& args) {
    const std::string cmd = kBin + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("check report bookkeeping") {
    CheckReport r;
    r.name = "demo";
    r.add("ok", 1e-14, 1e-12);
    r.add("bad", 1.0, 1e-12);
    CHECK(!r.all_pass());
    CHECK(r.fail_count() == 1);
    CHECK(r.entries[0].pass);
    CHECK(!r.entries[1].pass);

    ReportDocument doc;
    doc.tool_version = "test";
    doc.reports.push_back(r);
    const std::string json = report_to_json_string(doc);
    CHECK(json.find("\"pass\": 1") != std::string::npos);
    CHECK(json.find("\"fail\": 1") != std::string::npos);
    CHECK(json.find("\"lift_sign\"") != std::string::npos);
}

TEST_CASE("csv row format") {
    CHECK(surface_csv_header() ==
          "u,v,x1,x2,x3,x4,x5,conf_res,mean_curv,ind_center,ind_radius,ind_circ_res,spin");
    SurfaceSampleRow row;
    row.u = 0.5;
    row.spin = -1;
    const std::string line = surface_csv_row(row);
    CHECK(std::count(line.begin(), line.end(), ',') == 12);
    SurfaceSampleRow masked;
    masked.masked = true;
    CHECK(surface_csv_row(masked).find("nan") != std::string::npos);
}

TEST_CASE("cli: generate, project, verify round-trip") {
    const std::string curve = kTmp + "/cli_cubic.json";
    const std::string report = kTmp + "/cli_report.json";
    const std::string csv = kTmp + "/cli_surface.csv";

    CHECK(run("gen-legendrian --p3 0,1 --p4 0,0,1 --c0 0 --out " + curve) == 0);
    const std::string text = slurp(curve);
    CHECK(text.find("\"chart\": \"z1\"") != std::string::npos);
    CHECK(text.find("-0.33333333333333") != std::string::npos);

    CHECK(run("verify-roundtrip --curve " + curve + " --grid -1,1,-1,1,7 --seed 7 --out " +
              report) == 0);
    const std::string rep = slurp(report);
    CHECK(rep.find("\"fail\": 0") != std::string::npos);
    CHECK(rep.find("lift_vs_curve_chordal_max") != std::string::npos);

    CHECK(run("project --curve " + curve + " --grid -1,1,-1,1,5 --out " + csv) == 0);
    const std::string table = slurp(csv);
    CHECK(table.rfind(surface_csv_header(), 0) == 0);
    CHECK(std::count(table.begin(), table.end(), '\n') == 26);  // header + 25 rows

    // The report embeds the calibration record and a serialized lift point.
    CHECK(slurp(report).find("center_lift_point_flat8") != std::string::npos);

    // Stereographic slice columns for plotting.
    CHECK(run("project --curve " + curve + " --grid -1,1,-1,1,3 --stereo3d --out " + csv) == 0);
    CHECK(slurp(csv).find(",s1,s2,s3") != std::string::npos);
}

TEST_CASE("cli: tolerance overrides") {
    const std::string curve = kTmp + "/cli_tol.json";
    CHECK(run("gen-legendrian --p3 0,1 --p4 0,0,1 --c0 0 --out " + curve) == 0);
    // An absurdly tight tolerance turns the passing round-trip into a failure.
    CHECK(run("verify-roundtrip --curve " + curve + " --grid -1,1,-1,1,5 --tolerance "
              "lift_chordal=1e-300") == 1);
    CHECK(run("verify-roundtrip --curve " + curve +
              " --grid -1,1,-1,1,5 --tolerance lift_chordal=-1") == 2);
    CHECK(run("verify-roundtrip --curve " + curve +
              " --grid -1,1,-1,1,5 --tolerance no_such_key=1") == 2);
}

TEST_CASE("cli: non-Legendrian curve file is a precondition error") {
    const std::string path = kTmp + "/cli_bad.json";
    std::ofstream out(path);
    out << R"({"chart":"z1","c0":[0,0],"p3":[[0,0],[1,0]],"p4":[[0,0],[1,0]],)"
        << R"("z2":[[0,0],[1,0]]})";
    out.close();
    CHECK(run("verify-roundtrip --curve " + path) == 2);
    CHECK(run("project --curve " + path + " --out " + kTmp + "/never.csv") == 2);
}

TEST_CASE("cli: exit codes for usage and io errors") {
    CHECK(run("no-such-command") == 2);
    CHECK(run("verify-roundtrip") == 2);  // missing required --curve
    CHECK(run("check-algebra --out /nonexistent_dir_for_sure/x.json") == 3);
    const std::string curve = kTmp + "/cli_cubic2.json";
    CHECK(run("gen-legendrian --p3 0,1 --p4 0,0,1 --c0 0 --out " + curve) == 0);
    CHECK(run("project --curve " + curve + " --out /nonexistent_dir_for_sure/x.csv") == 3);
}

TEST_CASE("cli: catalog, metric and h4 commands") {
    CHECK(run("verify-catalog --catalog totally_geodesic_s2") == 0);
    CHECK(run("verify-catalog --catalog flat_graph") == 0);
    CHECK(run("verify-catalog --catalog no_such_surface") == 2);
    CHECK(run("sample-metric --catalog totally_geodesic_s2 --path equator") == 0);
    CHECK(run("sample-metric --catalog hyperbolic_plane --path radial,0.9") == 0);
    CHECK(run("verify-h4 --seed 11") == 0);
}

TEST_CASE("cli: deterministic output for a fixed seed") {
    const std::string a = kTmp + "/det_a.json", b = kTmp + "/det_b.json";
    CHECK(run("check-algebra --seed 99 --out " + a) == 0);
    CHECK(run("check-algebra --seed 99 --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("cli: coefficient token formats") {
    const std::string a = kTmp + "/coef_a.json";
    // Rational and complex tokens stay exact through the generator.
    CHECK(run("gen-legendrian --p3 0,1/2 --p4 0,0,1/3i --c0 1/2-1/3i --out " + a) == 0);
    const std::string text = slurp(a);
    CHECK(text.find("0.5") != std::string::npos);

    // Decimal coefficients fall back to numeric generation and still certify.
    const std::string b = kTmp + "/coef_b.json";
    CHECK(run("gen-legendrian --p3 0,0.5 --p4 0,0,0.25 --c0 0 --out " + b) == 0);
    CHECK(run("verify-roundtrip --curve " + b + " --grid -1,1,-1,1,5") == 0);

    CHECK(run("gen-legendrian --p3 0,zzz --p4 0,1 --c0 0 --out " + a) == 2);
}

TEST_CASE("cli: indicatrix sampling") {
    const std::string csv = kTmp + "/ind.csv";
    CHECK(run("indicatrix --catalog veronese --point 0.3,0.2 --samples 32 --out " + csv) == 0);
    const std::string table = slurp(csv);
    CHECK(table.rfind("sample,y1,y2", 0) == 0);
    CHECK(table.find("spin=") != std::string::npos);
}
