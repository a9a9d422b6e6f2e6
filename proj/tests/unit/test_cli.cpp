#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "hexmetric_cli/commands.hpp"
#include "hexmetric_cli/io.hpp"

using namespace hexmetric::cli;

namespace {

const std::string kData = HEXMETRIC_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hexmetric");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hexmetric_test_" + name)).string();
}

}  // namespace

TEST(Cli, ValidatePants) {
  const Result r = run_cli({"validate", data("pants.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "hexagons=2 edges=3 xarcs=6 chi=-1 boundary=3");
}

TEST(Cli, ValidateErrors) {
  Result r = run_cli({"validate", data("odd_hexagons.json")});
  EXPECT_EQ(r.code, kInputError);
  r = run_cli({"validate", data("duplicate_slot.json")});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("(0,1)"), std::string::npos) << r.err;
  r = run_cli({"validate", data("does_not_exist.json")});
  EXPECT_EQ(r.code, kInputError);
  r = run_cli({"frobnicate"});
  EXPECT_EQ(r.code, kInputError);
}

TEST(Cli, Feasible) {
  Result r = run_cli({"feasible", data("pants.json"), "--z", data("pants_z_ones.json")});
  EXPECT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  EXPECT_TRUE(doc["feasible"].get<bool>());
  EXPECT_EQ(doc["boundary_values"], json({2.0, 2.0, 2.0}));

  r = run_cli({"feasible", data("pants.json"), "--z", data("pants_z_infeasible.json")});
  EXPECT_EQ(r.code, kInfeasible);
  doc = json::parse(r.out);
  EXPECT_FALSE(doc["feasible"].get<bool>());
  double dot = 0.0;
  const double z[3] = {-3.0, 1.0, 1.0};
  for (int e = 0; e < 3; ++e) dot += doc["certificate"]["e" + std::to_string(e)].get<double>() * z[e];
  EXPECT_LE(dot, 0.0);

  r = run_cli({"feasible", data("pants.json"), "--z", data("pants_z_missing.json")});
  EXPECT_EQ(r.code, kInputError);
}

TEST(Cli, SolveAndForwardRoundTrip) {
  const std::string out_path = temp_path("solve.json");
  const std::string vert_path = temp_path("vertices.json");
  Result r = run_cli({"solve", data("four_hex.json"), "--z", data("four_z.json"), "--json-out", out_path,
                      "--vertices-out", vert_path});
  ASSERT_EQ(r.code, 0) << r.err;
  const json solved = read_json_file(out_path);
  EXPECT_TRUE(solved["verification"]["passed"].get<bool>());
  EXPECT_TRUE(solved["report"]["converged"].get<bool>());
  const json verts = read_json_file(vert_path);
  ASSERT_EQ(verts.size(), 4u);
  EXPECT_EQ(verts[0].size(), 6u);

  r = run_cli({"forward", data("four_hex.json"), "--lengths", out_path});
  ASSERT_EQ(r.code, 0) << r.err;
  const json fwd = json::parse(r.out);
  const json z_in = read_json_file(data("four_z.json"));
  for (const auto& [label, value] : z_in.items()) {
    EXPECT_NEAR(fwd["z"][label].get<double>(), value.get<double>(), 1e-8) << label;
  }
  // forward output feeds feasible
  const std::string fwd_path = temp_path("forward.json");
  write_json_file(fwd_path, fwd);
  r = run_cli({"feasible", data("four_hex.json"), "--z", fwd_path});
  EXPECT_EQ(r.code, 0);
  std::remove(out_path.c_str());
  std::remove(vert_path.c_str());
  std::remove(fwd_path.c_str());
}

TEST(Cli, SolveSymmetricPantsToStdout) {
  const Result r = run_cli({"solve", data("pants.json"), "--z", data("pants_z_symmetric.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  for (const auto& [label, value] : doc["lengths"].items()) EXPECT_NEAR(value.get<double>(), 1.3169579, 1e-7);
}

TEST(Cli, SolveFailures) {
  Result r = run_cli({"solve", data("four_hex.json"), "--z", data("four_z.json"), "--max-iter", "1"});
  EXPECT_EQ(r.code, kNotConverged);
  r = run_cli({"solve", data("pants.json"), "--z", data("pants_z_infeasible.json")});
  EXPECT_EQ(r.code, kInfeasible);
  r = run_cli({"solve", data("pants.json"), "--z", data("pants_z_ones.json"), "--tol", "-1"});
  EXPECT_EQ(r.code, kInputError);
}

TEST(Cli, ForwardErrors) {
  Result r = run_cli({"forward", data("pants.json"), "--lengths", data("pants_lengths_negative.json")});
  EXPECT_EQ(r.code, kInputError);
  r = run_cli({"forward", data("pants.json"), "--lengths", data("pants_lengths_symmetric.json")});
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  for (const auto& [label, value] : doc["z"].items()) EXPECT_NEAR(value.get<double>(), 1.3169578969248167, 1e-14);
  for (const auto& b : doc["boundary_lengths"]) EXPECT_NEAR(b.get<double>(), 2.6339157938496334, 1e-14);
}

TEST(Cli, EnergyProfile) {
  Result r = run_cli({"energy-profile", data("four_hex.json"), "--z", data("four_z.json"), "--samples", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "segment,s,V\n");

  r = run_cli({"energy-profile", data("four_hex.json"), "--z", data("four_z.json"), "--samples", "25",
               "--segments", "4", "--seed", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> by_segment(4);
  while (std::getline(in, line)) {
    int seg = 0;
    double s = 0, v = 0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%d,%lf,%lf", &seg, &s, &v), 3);
    by_segment[static_cast<std::size_t>(seg)].push_back(v);
  }
  for (const auto& vals : by_segment) {
    ASSERT_EQ(vals.size(), 25u);
    for (std::size_t i = 1; i + 1 < vals.size(); ++i) EXPECT_LE(vals[i - 1] - 2 * vals[i] + vals[i + 1], 1e-12);
  }
  // Deterministic for a fixed seed.
  const Result again = run_cli({"energy-profile", data("four_hex.json"), "--z", data("four_z.json"),
                                "--samples", "25", "--segments", "4", "--seed", "9"});
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, Polytope) {
  Result r = run_cli({"polytope", data("pants.json")});
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["equalities"].size(), 3u);
  EXPECT_EQ(doc["inequalities"].size(), 3u);
  EXPECT_FALSE(doc["truncated"].get<bool>());

  r = run_cli({"polytope", data("torus.json")});
  doc = json::parse(r.out);
  ASSERT_EQ(doc["equalities"].size(), 1u);
  EXPECT_EQ(doc["equalities"][0]["edges"].size(), 6u);

  r = run_cli({"polytope", data("four_hex.json"), "--enumerate-limit", "3"});
  doc = json::parse(r.out);
  EXPECT_TRUE(doc["truncated"].get<bool>());
  EXPECT_EQ(doc["inequalities"].size(), 3u);
}

TEST(Cli, CoordFileForms) {
  const hexmetric::HexComplex cx = load_complex(data("pants.json"));
  EXPECT_EQ(parse_coords(json::parse(R"({"0": 1, "e1": 2, "2": 3})"), cx, "z"), (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(parse_coords(json::parse(R"({"z": {"e0": 1, "e1": 2, "e2": 3}})"), cx, "z"),
            (std::vector<double>{1, 2, 3}));
  EXPECT_THROW(parse_coords(json::parse(R"({"e0": 1, "0": 2, "e1": 2, "e2": 3})"), cx, "z"), InputError);
  EXPECT_THROW(parse_coords(json::parse(R"({"e0": 1, "e1": 2, "e2": 3, "e9": 1})"), cx, "z"), InputError);
  EXPECT_THROW(parse_coords(json::parse(R"({"e0": "x", "e1": 2, "e2": 3})"), cx, "z"), InputError);
  EXPECT_THROW(parse_coords(json::parse(R"([1, 2, 3])"), cx, "z"), InputError);
}

TEST(Cli, TriangulationRoundTrip) {
  const json doc = read_json_file(data("four_hex.json"));
  const hexmetric::ComplexSpec spec = parse_triangulation(doc);
  EXPECT_EQ(triangulation_json(spec), doc);
  EXPECT_THROW(parse_triangulation(json::parse(R"({"hexagons": 2})")), InputError);
  EXPECT_THROW(parse_triangulation(json::parse(R"({"hexagons": 2, "gluings": [{"a": [0, 1]}]})")), InputError);
  EXPECT_THROW(parse_triangulation(json::parse(R"({"hexagons": "2", "gluings": []})")), InputError);
}
