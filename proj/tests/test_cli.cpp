#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gelfand/json_io.hpp"
#include "gelfand/run.hpp"

using namespace gelfand;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("gelfand_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

RunConfig config(std::string command, std::uint64_t q, std::size_t n, std::string sub = {}) {
  RunConfig c;
  c.command = std::move(command);
  c.subcommand = std::move(sub);
  c.q = q;
  c.n = n;
  return c;
}

}  // namespace

TEST_CASE("field and matrix JSON round trip") {
  for (std::uint64_t q : {2, 3, 4, 9, 25}) {
    const Field f = field_of_order(q);
    const Json j = field_to_json(f);
    CHECK(j["characteristic"] == f.characteristic());
    CHECK(j["extension_degree"] == f.degree());
    CHECK(j.contains("modulus") == (q != f.characteristic()));
    CHECK(field_from_json(j) == f);
    Matrix m(f, 3, 3);
    for (std::size_t k = 0; k < 9; ++k) m(k / 3, k % 3) = static_cast<Code>((k * 7) % q);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
  }
  const Json f9 = field_to_json(field_of_order(9));
  CHECK(f9.dump() == R"({"characteristic":3,"extension_degree":2,"modulus":[1,0,1]})");
  // Towers carry their base.
  const Field f9b = field_of_order(9);
  const Field f81 = make_extension(f9b, lowest_irreducible(f9b, 2));
  CHECK(field_from_json(field_to_json(f81)) == f81);
  CHECK(field_to_json(f81).contains("base"));
}

TEST_CASE("malformed JSON names the offending field") {
  auto message = [](const Json& j) {
    try {
      matrix_from_json(j);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidInput);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  const Json good = Json::parse(R"({"field":{"characteristic":3,"extension_degree":1},"size":2,
                                    "entries":[[1,0],[0,1]]})");
  CHECK(matrix_from_json(good).is_identity());

  Json j = good;
  j["field"]["characteristic"] = 4;
  CHECK(message(j).find("/field/characteristic") != std::string::npos);
  j = good;
  j["entries"][1][0] = 5;
  CHECK(message(j).find("/entries/1/0") != std::string::npos);
  j = good;
  j.erase("size");
  CHECK(message(j).find("/size") != std::string::npos);
  j = good;
  j["entries"][0] = Json::array({1});
  CHECK(message(j).find("/entries/0") != std::string::npos);
  j = good;
  j["field"] = Json::parse(R"({"characteristic":2,"extension_degree":2,"modulus":[1,0,1]})");
  CHECK(message(j).find("/field/modulus") != std::string::npos);
}

TEST_CASE("orbits enumerate --q 3 --n 1") {
  const RunResult r = run(config("orbits", 3, 1, "enumerate"));
  CHECK(r.exit_code == 0);
  REQUIRE(r.report["cosets"].size() == 2);
  std::uint64_t total = 0;
  for (const auto& c : r.report["cosets"]) total += c["size"].get<std::uint64_t>();
  CHECK(total == 48);
  CHECK(r.report["sigma_stable"] == true);
  CHECK(r.report["q"] == 3);
}

TEST_CASE("hecke and verify-good") {
  const RunResult h = run(config("hecke", 2, 2));
  CHECK(h.exit_code == 0);
  CHECK(h.report["hecke_commutative"] == true);
  const RunResult g = run(config("orbits", 2, 2, "verify-good"));
  CHECK(g.exit_code == 0);
  CHECK(g.report["sigma_stable"] == true);
}

TEST_CASE("verify-all --q 2 --n 2") {
  const RunResult r = run(config("verify-all", 2, 2));
  CHECK(r.exit_code == 0);
  CHECK(r.report["cosets"].size() == 3);
  CHECK(r.report["hecke_commutative"] == true);
  CHECK(r.report["status"] == "pass");
  CHECK_FALSE(r.report["descendants"].empty());
  for (const auto& d : r.report["descendants"]) CHECK(d["verified"] == true);
  // Deterministic reports.
  CHECK(run(config("verify-all", 2, 2)).report.dump() == r.report.dump());
}

TEST_CASE("descend from a matrix file") {
  const std::string path = write_temp("diag1212.json", R"({"field":{"characteristic":3,"extension_degree":1},
      "size":4,"entries":[[1,0,0,0],[0,2,0,0],[0,0,1,0],[0,0,0,2]]})");
  RunConfig c = config("descend", 3, 2);
  c.input_path = path;
  const RunResult r = run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.report["pair"] == "X_1(F_3) x X_1(F_3)");
  CHECK(r.report["predicted_H_x_order"] == 576);
  CHECK(r.report["brute_force_H_x_order"] == 576);
  CHECK(r.report["verified"] == true);
  REQUIRE(r.report["components"].size() == 2);
  CHECK(r.report["components"][0]["pair"] == "X_1(F_3)");
  CHECK(r.report["components"][0]["e_dim"] == 2);

  // --from-g: g = d(x0) gives x = diag(x0, x0^t).
  const std::string gpath = write_temp("g.json", R"({"field":{"characteristic":3,"extension_degree":1},
      "size":4,"entries":[[0,1,0,0],[1,0,0,0],[0,0,1,0],[0,0,0,1]]})");
  c.input_path = gpath;
  c.from_g = true;
  const RunResult rg = run(c);
  CHECK(rg.exit_code == 0);
  CHECK(rg.report["verified"] == true);

  // Not sigma-symmetric: an input error.
  const std::string bad = write_temp("bad.json", R"({"field":{"characteristic":3,"extension_degree":1},
      "size":4,"entries":[[2,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})");
  c.input_path = bad;
  c.from_g = false;
  const RunResult rb = run(c);
  CHECK(rb.exit_code == 2);
  CHECK(rb.report.is_null());
  CHECK(rb.error.find("NotSigmaSymmetric") != std::string::npos);

  c.input_path = write_temp("malformed.json", R"({"field":{"characteristic":3},"size":4,"entries":[]})");
  const RunResult rm = run(c);
  CHECK(rm.exit_code == 2);
  CHECK(rm.error.find("/field/extension_degree") != std::string::npos);
}

TEST_CASE("configuration and resource errors exit 2 without a report") {
  CHECK(run(config("orbits", 6, 1, "enumerate")).exit_code == 2);
  CHECK(run(config("orbits", 2, 1, "bogus")).exit_code == 2);
  CHECK(run(config("bogus", 2, 1)).exit_code == 2);
  CHECK(run(config("orbits", 2, 0, "enumerate")).exit_code == 2);
  RunConfig c = config("verify-all", 2, 2);
  c.max_group_size = 1000;
  const RunResult r = run(c);
  CHECK(r.exit_code == 2);
  CHECK(r.report.is_null());
  CHECK(r.error.find("TooLarge") != std::string::npos);
  RunConfig d = config("descend", 3, 2);
  CHECK(run(d).exit_code == 2);  // no --matrix
}

TEST_CASE("GELFAND_MAX_GROUP_SIZE overrides the default bound") {
  CHECK(default_max_group_size() == 100'000'000);
  setenv("GELFAND_MAX_GROUP_SIZE", "12345", 1);
  CHECK(default_max_group_size() == 12345);
  unsetenv("GELFAND_MAX_GROUP_SIZE");
}

TEST_CASE("fields command") {
  const RunResult r = run(config("fields", 9, 1));
  CHECK(r.exit_code == 0);
  CHECK(r.report["field"]["modulus"] == Json::array({1, 0, 1}));
  CHECK(r.report["modulus"] == "t^2 + 1");
  CHECK_FALSE(render_text(config("fields", 9, 1), r).empty());
}
