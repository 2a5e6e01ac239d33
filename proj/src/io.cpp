#include "forge/io.hpp"

#include <fstream>
#include <sstream>

namespace forge::io {

namespace {

const Json& require_field(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

int require_int(const Json& j, const char* key, const char* where) {
  const Json& v = require_field(j, key, where);
  if (!v.is_number_integer())
    throw InputError(std::string(where) + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

Json group_to_json(const GroupTable& g) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = g.rows();
  return j;
}

GroupPtr group_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("group: expected an object");
  std::string name = require_field(j, "name", "group").get<std::string>();
  int order = require_int(j, "order", "group");
  const Json& table = require_field(j, "table", "group");
  if (!table.is_array() || static_cast<int>(table.size()) != order)
    throw InputError("group: field \"table\" must be an order x order array");
  std::vector<std::vector<int>> rows;
  rows.reserve(order);
  for (int a = 0; a < order; ++a) {
    const Json& row = table[a];
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw InputError("group: table[" + std::to_string(a) + "] has wrong length");
    std::vector<int> r;
    r.reserve(order);
    for (int b = 0; b < order; ++b) {
      if (!row[b].is_number_integer())
        throw InputError("group: table[" + std::to_string(a) + "][" +
                         std::to_string(b) + "] must be an integer");
      r.push_back(row[b].get<int>());
    }
    rows.push_back(std::move(r));
  }
  return GroupTable::make(std::move(name), rows);
}

Json family_to_json(const KantorFamily& fam) {
  Json j;
  j["group"] = group_to_json(*fam.group);
  j["type"] = {fam.type.u, fam.type.v};
  Json f = Json::array(), fstar = Json::array();
  for (const auto& a : fam.f) f.push_back(a.members());
  for (const auto& a : fam.fstar) fstar.push_back(a.members());
  j["F"] = std::move(f);
  j["Fstar"] = std::move(fstar);
  return j;
}

KantorFamily family_from_json(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw InputError("family: expected an object");
  const Json& group_field = require_field(j, "group", "family");
  GroupPtr group;
  if (group_field.is_string()) {
    std::filesystem::path p = group_field.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    group = group_from_json(load_json(p));
  } else {
    group = group_from_json(group_field);
  }
  const Json& type = require_field(j, "type", "family");
  if (!type.is_array() || type.size() != 2)
    throw InputError("family: field \"type\" must be [u, v]");

  KantorFamily fam;
  fam.group = group;
  fam.type = {type[0].get<int>(), type[1].get<int>()};
  auto parse_list = [&](const char* key, std::vector<Subgroup>& out) {
    const Json& list = require_field(j, key, "family");
    if (!list.is_array())
      throw InputError(std::string("family: field \"") + key + "\" must be an array");
    for (size_t i = 0; i < list.size(); ++i) {
      if (!list[i].is_array())
        throw InputError(std::string("family: ") + key + "[" + std::to_string(i) +
                         "] must be an id array");
      std::vector<int> members = list[i].get<std::vector<int>>();
      try {
        out.push_back(Subgroup::from_members(group, std::move(members)));
      } catch (const InputError& e) {
        throw InputError(std::string("family: ") + key + "[" + std::to_string(i) +
                         "]: " + e.what());
      }
    }
  };
  parse_list("F", fam.f);
  parse_list("Fstar", fam.fstar);
  return fam;
}

Json geometry_to_json(const IncidenceGeometry& geom) {
  Json j;
  j["points"] = geom.num_points();
  j["lines"] = geom.lines();
  Json labels = Json::object();
  if (!geom.point_labels.empty()) {
    Json pl = Json::object();
    for (size_t p = 0; p < geom.point_labels.size(); ++p)
      if (!geom.point_labels[p].empty()) pl[std::to_string(p)] = geom.point_labels[p];
    labels["points"] = std::move(pl);
  }
  if (!geom.line_labels.empty()) {
    Json ll = Json::object();
    for (size_t l = 0; l < geom.line_labels.size(); ++l)
      if (!geom.line_labels[l].empty()) ll[std::to_string(l)] = geom.line_labels[l];
    labels["lines"] = std::move(ll);
  }
  if (!labels.empty()) j["labels"] = std::move(labels);
  return j;
}

IncidenceGeometry geometry_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("geometry: expected an object");
  int points = require_int(j, "points", "geometry");
  const Json& lines = require_field(j, "lines", "geometry");
  if (!lines.is_array()) throw InputError("geometry: field \"lines\" must be an array");
  std::vector<std::vector<int>> parsed;
  for (size_t l = 0; l < lines.size(); ++l) {
    if (!lines[l].is_array())
      throw InputError("geometry: lines[" + std::to_string(l) + "] must be an id array");
    parsed.push_back(lines[l].get<std::vector<int>>());
  }
  IncidenceGeometry geom(points, std::move(parsed));
  if (j.contains("labels")) {
    const Json& labels = j["labels"];
    if (labels.contains("points")) {
      geom.point_labels.assign(points, "");
      for (auto it = labels["points"].begin(); it != labels["points"].end(); ++it) {
        int p = std::stoi(it.key());
        if (p < 0 || p >= points) throw InputError("geometry: label for unknown point");
        geom.point_labels[p] = it.value().get<std::string>();
      }
    }
    if (labels.contains("lines")) {
      geom.line_labels.assign(geom.num_lines(), "");
      for (auto it = labels["lines"].begin(); it != labels["lines"].end(); ++it) {
        int l = std::stoi(it.key());
        if (l < 0 || l >= geom.num_lines())
          throw InputError("geometry: label for unknown line");
        geom.line_labels[l] = it.value().get<std::string>();
      }
    }
  }
  return geom;
}

Json plane_to_json(const AffinePlane& plane) {
  Json j = geometry_to_json(plane.geom);
  j["parallel_classes"] = plane.parallel_classes;
  return j;
}

AffinePlane plane_from_json(const Json& j) {
  AffinePlane plane;
  plane.geom = geometry_from_json(j);
  const Json& classes = require_field(j, "parallel_classes", "plane");
  if (!classes.is_array())
    throw InputError("plane: field \"parallel_classes\" must be an array");
  for (const auto& cls : classes)
    plane.parallel_classes.push_back(cls.get<std::vector<int>>());
  if (plane.parallel_classes.empty()) throw InputError("plane: no parallel classes");
  plane.order = static_cast<int>(plane.parallel_classes.size()) - 1;
  plane.class_of_line.assign(plane.geom.num_lines(), -1);
  for (size_t c = 0; c < plane.parallel_classes.size(); ++c)
    for (int l : plane.parallel_classes[c]) {
      if (l < 0 || l >= plane.geom.num_lines())
        throw InputError("plane: parallel class refers to unknown line");
      plane.class_of_line[l] = static_cast<int>(c);
    }
  return plane;
}

Json family_report_to_json(const FamilyReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json jc;
    jc["axiom"] = c.axiom;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  return Json{{"pass", rep.all_pass()}, {"checks", std::move(checks)}};
}

Json frohardt_to_json(const FrohardtReport& rep) {
  Json j;
  j["pair"] = {rep.i, rep.j};
  j["intersection"] = rep.s.members();
  j["central"] = rep.central;
  j["quotient_abelian"] = rep.quotient_abelian;
  j["case"] = to_string(rep.case_label);
  if (rep.stats) {
    j["involution_count"] = rep.stats->ell;
    j["commutator_order"] = rep.stats->commutator_order;
    j["ell_bound_ok"] = rep.ell_bound_ok;
  }
  return j;
}

Json gq_check_to_json(const GqCheck& check) {
  Json j;
  j["ok"] = check.ok;
  if (check.ok) {
    j["s"] = check.s;
    j["t"] = check.t;
  } else {
    j["failure"] = check.failure;
    j["detail"] = check.detail;
    if (!check.witness_points.empty()) j["witness_points"] = check.witness_points;
    if (!check.witness_lines.empty()) j["witness_lines"] = check.witness_lines;
  }
  return j;
}

Json benson_to_json(const BensonReport& rep) {
  return Json{{"f0", rep.f0},   {"f1", rep.f1},          {"lhs", rep.lhs},
              {"rhs", rep.rhs}, {"modulus", rep.modulus}, {"ok", rep.ok}};
}

Json suite_report_to_json(const SuiteReport& rep) {
  Json instances = Json::array();
  for (const auto& inst : rep.instances) {
    Json ji;
    ji["group"] = inst.group_name;
    ji["order"] = inst.group_order;
    ji["hash"] = inst.group_hash;
    ji["families"] = inst.families_found;
    ji["truncated"] = inst.truncated;
    ji["nodes"] = inst.nodes;
    if (rep.suite == "frohardt-case3") {
      ji["tallies"] = Json{{"case1", inst.case1},
                           {"case2", inst.case2},
                           {"case3", inst.case3},
                           {"not_applicable", inst.not_applicable}};
    } else {
      ji["stgq_families"] = inst.stgq_families;
      ji["stgq_groups_elementary_abelian"] = inst.stgq_groups_elementary_abelian;
      ji["axes_checked"] = inst.axes_checked;
      ji["axes_ok"] = inst.axes_ok;
    }
    if (!inst.notes.empty()) ji["notes"] = inst.notes;
    ji["verdict"] = inst.verdict;
    instances.push_back(std::move(ji));
  }
  Json j;
  j["suite"] = rep.suite;
  j["t"] = rep.t;
  j["catalog_exhaustive"] = rep.catalog_exhaustive;
  j["instances"] = std::move(instances);
  j["global_verdict"] = rep.global_verdict;
  j["any_truncated"] = rep.any_truncated;
  j["tool"] = Json{{"name", "gqforge"}, {"version", "0.1.0"}};
  j["timing"] = Json{{"wall_seconds", rep.wall_seconds}};
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path.string());
  out << content;
}

Json load_json(const std::filesystem::path& path) {
  std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_json(const std::filesystem::path& path, const Json& j) {
  write_file(path, j.dump(2) + "\n");
}

std::string file_hash(const std::filesystem::path& path) {
  return fnv1a_hex(read_file(path));
}

}  // namespace forge::io
