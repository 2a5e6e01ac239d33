#include "doctest.h"
#include "forge/io.hpp"

#include <filesystem>

using namespace forge;
using forge::io::Json;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  auto dir = fs::temp_directory_path() / "forge_io_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("group json round trip") {
  auto d8 = build_dihedral(8);
  auto j = io::group_to_json(*d8);
  auto back = io::group_from_json(j);
  CHECK(back->order() == 8);
  CHECK(back->name() == "D8");
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(back->mul(a, b) == d8->mul(a, b));

  // Malformed inputs carry a pointer to the offending field.
  auto bad = j;
  bad["table"][2][3] = 99;
  try {
    io::group_from_json(bad);
    CHECK(false);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("table") != std::string::npos);
  }
  bad = j;
  bad.erase("order");
  CHECK_THROWS_AS(io::group_from_json(bad), InputError);
}

TEST_CASE("family json round trip with inline and referenced groups") {
  auto g = build_elementary_abelian(2, 3);
  KantorFamily fam;
  fam.group = g;
  fam.type = {2, 2};
  for (int e : {1, 2, 4}) {
    fam.f.push_back(Subgroup::from_members(g, {0, e}));
    fam.fstar.push_back(Subgroup::from_members(g, {0, e, 7 ^ e, 7}));
  }

  auto j = io::family_to_json(fam);
  auto back = io::family_from_json(j, ".");
  CHECK(verify_kantor_family(back).all_pass());
  CHECK(back.signature() == fam.signature());

  // Referenced group file, resolved relative to the family file directory.
  auto dir = temp_dir();
  io::save_json(dir / "group.json", io::group_to_json(*g));
  Json ref = j;
  ref["group"] = "group.json";
  auto loaded = io::family_from_json(ref, dir);
  CHECK(loaded.signature() == fam.signature());

  // A non-subgroup member list is rejected with its field name.
  Json broken = j;
  broken["F"][0] = std::vector<int>{0, 1, 2};
  try {
    io::family_from_json(broken, ".");
    CHECK(false);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("F[0]") != std::string::npos);
  }
}

TEST_CASE("geometry and plane json round trips") {
  auto g = build_elementary_abelian(2, 3);
  KantorFamily fam;
  fam.group = g;
  fam.type = {2, 2};
  for (int e : {1, 2, 4}) {
    fam.f.push_back(Subgroup::from_members(g, {0, e}));
    fam.fstar.push_back(Subgroup::from_members(g, {0, e, 7 ^ e, 7}));
  }
  auto egq = gq_from_kantor(fam);
  auto j = io::geometry_to_json(egq.gq.geom());
  auto back = io::geometry_from_json(j);
  CHECK(back.num_points() == 15);
  CHECK(back.num_lines() == 15);
  CHECK(back.point_label(0) == "(inf)");
  CHECK(verify_gq(back).ok);

  auto plane = derived_plane(egq.gq, 0);
  auto pj = io::plane_to_json(plane);
  auto pback = io::plane_from_json(pj);
  CHECK(pback.order == 2);
  CHECK(verify_affine_plane(pback).ok);
}

TEST_CASE("json file helpers") {
  auto dir = temp_dir();
  auto path = dir / "sample.json";
  io::save_json(path, Json{{"a", 1}});
  auto j = io::load_json(path);
  CHECK(j["a"] == 1);
  CHECK(io::file_hash(path).size() == 16);
  io::write_file(dir / "broken.json", "{not json");
  CHECK_THROWS_AS(io::load_json(dir / "broken.json"), InputError);
  CHECK_THROWS_AS(io::load_json(dir / "missing.json"), InputError);
}

TEST_CASE("suite report json shape and determinism") {
  SuiteOptions o;
  o.catalog_exhaustive = true;
  auto rep = suite_frohardt_case3(catalog_for_t(2), 2, o);
  auto j = io::suite_report_to_json(rep);
  CHECK(j["suite"] == "frohardt-case3");
  CHECK(j["global_verdict"] == "confirmed");
  CHECK(j["instances"].size() == 5);
  CHECK(j.contains("timing"));

  // Byte-identical reports once the timing sidecar is dropped.
  auto rep2 = suite_frohardt_case3(catalog_for_t(2), 2, o);
  auto j2 = io::suite_report_to_json(rep2);
  j.erase("timing");
  j2.erase("timing");
  CHECK(j.dump() == j2.dump());
}
