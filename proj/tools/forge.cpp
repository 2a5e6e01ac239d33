// forge: build groups and Kantor families, construct and verify generalized
// quadrangles, derive planes, extract subquadrangles, and run the theorem
// suites. Exit codes: 0 success, 1 verification failure, 2 usage or malformed
// input, 3 budget exhaustion.
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "forge/io.hpp"

namespace {

using forge::io::Json;
namespace io = forge::io;
using namespace forge;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    io::save_json(out_path, j);
}

GroupPtr load_group(const std::string& path) {
  return io::group_from_json(io::load_json(path));
}

KantorFamily load_family(const std::string& path) {
  std::filesystem::path p(path);
  return io::family_from_json(io::load_json(p), p.parent_path());
}

GQ load_gq(const std::string& path) {
  auto geom = io::geometry_from_json(io::load_json(path));
  auto check = verify_gq(geom);
  if (!check.ok)
    throw InputError(path + ": not a generalized quadrangle (" + check.failure + ")");
  return GQ(std::move(geom), check.s, check.t);
}

std::vector<int> parse_ids(const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  return out;
}

Json family_payload(const KantorFamily& fam) {
  Json f = Json::array(), fstar = Json::array();
  for (const auto& a : fam.f) f.push_back(a.members());
  for (const auto& a : fam.fstar) fstar.push_back(a.members());
  return Json{{"type", {fam.type.u, fam.type.v}}, {"F", std::move(f)},
              {"Fstar", std::move(fstar)}};
}

std::vector<CatalogEntry> load_catalog_dir(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> catalog;
  for (const auto& f : files) {
    auto g = load_group(f.string());
    catalog.push_back({g->name(), g, "loaded from " + f.string()});
  }
  return catalog;
}

void seed_doc(const std::vector<CatalogEntry>& catalog, const std::string& dir) {
  Json manifest = Json::array();
  int index = 0;
  for (const auto& entry : catalog) {
    char name[32];
    std::snprintf(name, sizeof(name), "group_%02d.json", index++);
    auto path = std::filesystem::path(dir) / name;
    io::save_json(path, io::group_to_json(*entry.group));
    manifest.push_back(Json{{"file", name},
                            {"name", entry.name},
                            {"order", entry.group->order()},
                            {"hash", group_content_hash(*entry.group)},
                            {"note", entry.note}});
  }
  io::save_json(std::filesystem::path(dir) / "catalog.json", manifest);
}

int suite_exit(const SuiteReport& rep) {
  return rep.global_verdict == "failed" ? kVerificationFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-geometry forge: groups, Kantor families, quadrangles"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ----- group ------------------------------------------------------------
  auto* group_cmd = app.add_subcommand("group", "group tables");
  {
    auto* build = group_cmd->add_subcommand("build", "build a group table");
    auto kind = std::make_shared<std::string>();
    auto p = std::make_shared<int>(2), k = std::make_shared<int>(1);
    auto q = std::make_shared<int>(2), n = std::make_shared<int>(2);
    auto order = std::make_shared<int>(4);
    auto a_path = std::make_shared<std::string>(), b_path = std::make_shared<std::string>();
    auto name = std::make_shared<std::string>(), out = std::make_shared<std::string>();
    build->add_option("--kind", *kind, "elem-abelian|heisenberg|cyclic|dihedral|quaternion8|product")
        ->required();
    build->add_option("--p", *p, "prime (elem-abelian)");
    build->add_option("--k", *k, "exponent count (elem-abelian)");
    build->add_option("--q", *q, "field order (heisenberg)");
    build->add_option("--n", *n, "order (cyclic)");
    build->add_option("--order", *order, "group order (dihedral)");
    build->add_option("--a", *a_path, "left factor group file (product)");
    build->add_option("--b", *b_path, "right factor group file (product)");
    build->add_option("--name", *name, "override the generated name");
    build->add_option("--out", *out, "output file (stdout when omitted)");
    build->callback([=]() mutable {
      action = [=]() {
        GroupPtr g;
        if (*kind == "elem-abelian") g = build_elementary_abelian(*p, *k);
        else if (*kind == "heisenberg") g = build_heisenberg(*q);
        else if (*kind == "cyclic") g = build_cyclic(*n);
        else if (*kind == "dihedral") g = build_dihedral(*order);
        else if (*kind == "quaternion8") g = build_quaternion8();
        else if (*kind == "product") {
          if (a_path->empty() || b_path->empty())
            throw InputError("product requires --a and --b");
          g = direct_product(load_group(*a_path), load_group(*b_path));
        } else {
          throw InputError("unknown kind: " + *kind);
        }
        Json j = io::group_to_json(*g);
        if (!name->empty()) j["name"] = *name;
        emit(j, *out);
        return kOk;
      };
    });

    auto* info = group_cmd->add_subcommand("info", "structure summary of a group file");
    auto file = std::make_shared<std::string>();
    auto iout = std::make_shared<std::string>();
    info->add_option("file", *file, "group JSON file")->required();
    info->add_option("--out", *iout, "output file");
    info->callback([=]() mutable {
      action = [=]() {
        auto g = load_group(*file);
        Json j;
        j["name"] = g->name();
        j["order"] = g->order();
        j["abelian"] = g->is_abelian();
        j["exponent"] = exponent(g);
        j["elementary_abelian"] = is_elementary_abelian(g);
        j["center"] = center(g).members();
        j["commutator_subgroup"] = commutator_subgroup(g).members();
        j["frattini"] = frattini(g).members();
        j["hash"] = group_content_hash(*g);
        emit(j, *iout);
        return kOk;
      };
    });
  }

  // ----- kantor -----------------------------------------------------------
  auto* kantor_cmd = app.add_subcommand("kantor", "Kantor families");
  {
    auto* verify = kantor_cmd->add_subcommand("verify", "check the family axioms");
    auto file = std::make_shared<std::string>(), out = std::make_shared<std::string>();
    verify->add_option("family", *file, "family JSON file")->required();
    verify->add_option("--out", *out, "output file");
    verify->callback([=]() mutable {
      action = [=]() {
        auto fam = load_family(*file);
        auto report = verify_kantor_family(fam);
        emit(io::family_report_to_json(report), *out);
        return report.all_pass() ? kOk : kVerificationFailure;
      };
    });

    auto* classify = kantor_cmd->add_subcommand("classify", "central-condition cases");
    auto cfile = std::make_shared<std::string>(), cout_path = std::make_shared<std::string>();
    auto pair = std::make_shared<std::vector<int>>();
    classify->add_option("family", *cfile, "family JSON file")->required();
    classify->add_option("--pair", *pair, "specific pair of member indices")->expected(2);
    classify->add_option("--out", *cout_path, "output file");
    classify->callback([=]() mutable {
      action = [=]() {
        auto fam = load_family(*cfile);
        auto report = verify_kantor_family(fam);
        if (!report.all_pass()) {
          emit(io::family_report_to_json(report), *cout_path);
          return kVerificationFailure;
        }
        Json j;
        if (pair->size() == 2) {
          j = io::frohardt_to_json(frohardt_condition(fam, (*pair)[0], (*pair)[1]));
        } else {
          Json pairs = Json::array();
          int m = static_cast<int>(fam.f.size());
          for (int i = 0; i < m; ++i)
            for (int jdx = i + 1; jdx < m; ++jdx)
              pairs.push_back(io::frohardt_to_json(frohardt_condition(fam, i, jdx)));
          j["pairs"] = std::move(pairs);
          j["classification"] = to_string(classify_family(fam).case_label);
        }
        auto c = stgq_condition(fam);
        j["stgq"] = c.has_value();
        if (c) j["stgq_complement"] = c->members();
        emit(j, *cout_path);
        return kOk;
      };
    });

    auto* search = kantor_cmd->add_subcommand("search", "enumerate families");
    auto gfile = std::make_shared<std::string>(), sout = std::make_shared<std::string>();
    auto u = std::make_shared<int>(), v = std::make_shared<int>();
    auto budget = std::make_shared<uint64_t>(KantorSearchOptions{}.budget);
    auto max_families = std::make_shared<uint64_t>(0);
    auto threads = std::make_shared<int>(1);
    auto require_stgq = std::make_shared<bool>(false);
    auto require_frohardt = std::make_shared<bool>(false);
    auto require_case = std::make_shared<int>(0);
    search->add_option("--group", *gfile, "group JSON file")->required();
    search->add_option("--u", *u, "member order")->required();
    search->add_option("--v", *v, "index parameter")->required();
    search->add_option("--budget", *budget, "search node budget");
    search->add_option("--max-families", *max_families, "retained family cap");
    search->add_option("--threads", *threads, "worker threads");
    search->add_flag("--require-stgq", *require_stgq, "only skew-translation families");
    search->add_flag("--require-frohardt", *require_frohardt,
                     "only families meeting the central condition");
    search->add_option("--require-case", *require_case, "only families of this case");
    search->add_option("--out", *sout, "output file");
    search->callback([=]() mutable {
      action = [=]() {
        auto g = load_group(*gfile);
        KantorSearchOptions opts;
        opts.budget = *budget;
        opts.max_families = *max_families;
        opts.threads = *threads;
        opts.require_stgq = *require_stgq;
        opts.require_frohardt = *require_frohardt;
        opts.require_case = *require_case;
        auto result = search_kantor_families(g, *u, *v, opts);
        Json families = Json::array();
        for (const auto& fam : result.families) families.push_back(family_payload(fam));
        Json j;
        j["group"] = Json{{"path", *gfile},
                          {"name", g->name()},
                          {"hash", io::file_hash(*gfile)}};
        j["type"] = {*u, *v};
        j["options"] = Json{{"budget", *budget},
                            {"max_families", *max_families},
                            {"require_stgq", *require_stgq},
                            {"require_frohardt", *require_frohardt},
                            {"require_case", *require_case}};
        j["count"] = result.families.size();
        j["families"] = std::move(families);
        j["truncated"] = result.truncated;
        j["nodes"] = result.nodes;
        j["duplicates_suppressed"] = result.duplicates_suppressed;
        emit(j, *sout);
        return result.truncated ? kBudget : kOk;
      };
    });
  }

  // ----- gq ---------------------------------------------------------------
  auto* gq_cmd = app.add_subcommand("gq", "generalized quadrangles");
  {
    auto* build = gq_cmd->add_subcommand("build", "coset geometry from a family");
    auto file = std::make_shared<std::string>(), out = std::make_shared<std::string>();
    build->add_option("--family", *file, "family JSON file")->required();
    build->add_option("--out", *out, "output geometry file");
    build->callback([=]() mutable {
      action = [=]() {
        auto egq = gq_from_kantor(load_family(*file));
        emit(io::geometry_to_json(egq.gq.geom()), *out);
        return kOk;
      };
    });

    auto* verify = gq_cmd->add_subcommand("verify", "check the quadrangle axioms");
    auto vfile = std::make_shared<std::string>(), vout = std::make_shared<std::string>();
    verify->add_option("geometry", *vfile, "geometry JSON file")->required();
    verify->add_option("--out", *vout, "output file");
    verify->callback([=]() mutable {
      action = [=]() {
        auto geom = io::geometry_from_json(io::load_json(*vfile));
        auto check = verify_gq(geom);
        emit(io::gq_check_to_json(check), *vout);
        return check.ok ? kOk : kVerificationFailure;
      };
    });

    auto* benson = gq_cmd->add_subcommand("benson", "Benson congruence checks");
    auto bfamily = std::make_shared<std::string>(), bout = std::make_shared<std::string>();
    auto element = std::make_shared<int>(-1);
    auto all = std::make_shared<bool>(false);
    benson->add_option("--family", *bfamily, "family JSON file")->required();
    benson->add_option("--element", *element, "single group element");
    benson->add_flag("--all", *all, "every elation map");
    benson->add_option("--out", *bout, "output file");
    benson->callback([=]() mutable {
      action = [=]() {
        auto egq = gq_from_kantor(load_family(*bfamily));
        Json results = Json::array();
        bool ok = true;
        auto run_one = [&](int g) {
          auto rep = benson_check(egq.gq, egq.action[g]);
          ok &= rep.ok;
          Json j = io::benson_to_json(rep);
          j["element"] = g;
          results.push_back(std::move(j));
        };
        if (*all)
          for (int g = 0; g < egq.group->order(); ++g) run_one(g);
        else
          run_one(*element < 0 ? 0 : *element);
        emit(Json{{"results", std::move(results)}, {"ok", ok}}, *bout);
        return ok ? kOk : kVerificationFailure;
      };
    });

    auto* sweep = gq_cmd->add_subcommand(
        "benson-sweep", "congruence table for the fixed-perp automorphism counts");
    auto max_t = std::make_shared<int>(12);
    auto wout = std::make_shared<std::string>();
    sweep->add_option("--max", *max_t, "largest parameter to tabulate");
    sweep->add_option("--out", *wout, "output file");
    sweep->callback([=]() mutable {
      action = [=]() {
        // Fixed-structure counts f0 = (t+1)(s+1), f1 = st against 1 + st.
        Json rows = Json::array();
        for (int s = 2; s <= *max_t; ++s)
          for (int t = 2; t <= *max_t; ++t) {
            long long lhs = static_cast<long long>(t + 1) * (s + 1) + static_cast<long long>(s) * t;
            long long rhs = 1 + static_cast<long long>(s) * t;
            bool holds = (lhs - rhs) % (s + t) == 0;
            rows.push_back(Json{{"s", s}, {"t", t}, {"holds", holds}});
          }
        emit(Json{{"congruence", "(t+1)(s+1) + st = st + 1 (mod s+t)"},
                  {"rows", std::move(rows)}},
             *wout);
        return kOk;
      };
    });

    auto* iso = gq_cmd->add_subcommand("iso", "isomorphism test");
    auto afile = std::make_shared<std::string>(), bfile = std::make_shared<std::string>();
    auto ibudget = std::make_shared<uint64_t>(50'000'000);
    auto iout = std::make_shared<std::string>();
    iso->add_option("first", *afile, "geometry JSON file")->required();
    iso->add_option("second", *bfile, "geometry JSON file")->required();
    iso->add_option("--budget", *ibudget, "node budget");
    iso->add_option("--out", *iout, "output file");
    iso->callback([=]() mutable {
      action = [=]() {
        auto a = load_gq(*afile);
        auto b = load_gq(*bfile);
        auto result = gq_isomorphic(a, b, *ibudget);
        Json j;
        j["nodes"] = result.nodes;
        switch (result.status) {
          case IsoResult::Status::Found:
            j["status"] = "isomorphic";
            j["point_map"] = result.map->point_perm;
            j["line_map"] = result.map->line_perm;
            break;
          case IsoResult::Status::NonIsomorphic:
            j["status"] = "non-isomorphic";
            break;
          case IsoResult::Status::Budget:
            j["status"] = "budget-exhausted";
            break;
        }
        emit(j, *iout);
        if (result.status == IsoResult::Status::Budget) return kBudget;
        return result.status == IsoResult::Status::Found ? kOk : kVerificationFailure;
      };
    });
  }

  // ----- reg --------------------------------------------------------------
  auto* reg_cmd = app.add_subcommand("reg", "regularity and symmetry");
  {
    auto* perp_sub = reg_cmd->add_subcommand("perp", "perp of a point or line set");
    auto geometry = std::make_shared<std::string>(), out = std::make_shared<std::string>();
    auto points = std::make_shared<std::string>(), lines = std::make_shared<std::string>();
    auto dbl = std::make_shared<bool>(false);
    perp_sub->add_option("--geometry", *geometry, "geometry JSON file")->required();
    perp_sub->add_option("--points", *points, "comma-separated point ids");
    perp_sub->add_option("--lines", *lines, "comma-separated line ids");
    perp_sub->add_flag("--double", *dbl, "compute the double perp");
    perp_sub->add_option("--out", *out, "output file");
    perp_sub->callback([=]() mutable {
      action = [=]() {
        auto gq = load_gq(*geometry);
        if (points->empty() == lines->empty())
          throw InputError("provide exactly one of --points or --lines");
        PerpKind kind = points->empty() ? PerpKind::Lines : PerpKind::Points;
        auto ids = parse_ids(points->empty() ? *lines : *points);
        auto result = *dbl ? double_perp(gq, kind, ids) : perp(gq, kind, ids);
        emit(Json{{"kind", kind == PerpKind::Points ? "points" : "lines"},
                  {"members", result.members},
                  {"size", result.size()}},
             *out);
        return kOk;
      };
    });

    auto* pair_sub = reg_cmd->add_subcommand("pair", "pair regularity");
    auto pg = std::make_shared<std::string>(), pout = std::make_shared<std::string>();
    auto x = std::make_shared<int>(), y = std::make_shared<int>();
    pair_sub->add_option("--geometry", *pg, "geometry JSON file")->required();
    pair_sub->add_option("--x", *x, "first point")->required();
    pair_sub->add_option("--y", *y, "second point")->required();
    pair_sub->add_option("--out", *pout, "output file");
    pair_sub->callback([=]() mutable {
      action = [=]() {
        auto gq = load_gq(*pg);
        bool regular = is_regular_pair(gq, *x, *y);
        auto trace = perp(gq, PerpKind::Points, {*x, *y});
        auto span = double_perp(gq, PerpKind::Points, {*x, *y});
        emit(Json{{"regular", regular},
                  {"trace", trace.members},
                  {"span", span.members}},
             *pout);
        return kOk;
      };
    });

    auto* point_sub = reg_cmd->add_subcommand("point", "point regularity");
    auto ptg = std::make_shared<std::string>(), ptout = std::make_shared<std::string>();
    auto px = std::make_shared<int>();
    point_sub->add_option("--geometry", *ptg, "geometry JSON file")->required();
    point_sub->add_option("--x", *px, "point id")->required();
    point_sub->add_option("--out", *ptout, "output file");
    point_sub->callback([=]() mutable {
      action = [=]() {
        auto gq = load_gq(*ptg);
        emit(Json{{"point", *px}, {"regular", is_regular_point(gq, *px)}}, *ptout);
        return kOk;
      };
    });

    auto* sym_sub = reg_cmd->add_subcommand("symmetry", "symmetry group at a point");
    auto sfam = std::make_shared<std::string>(), sout = std::make_shared<std::string>();
    auto spoint = std::make_shared<int>(0);
    auto full = std::make_shared<bool>(false);
    sym_sub->add_option("--family", *sfam, "family JSON file")->required();
    sym_sub->add_option("--point", *spoint, "point id (default: the base point)");
    sym_sub->add_flag("--full", *full, "use the full automorphism group (<= 15 points)");
    sym_sub->add_option("--out", *sout, "output file");
    sym_sub->callback([=]() mutable {
      action = [=]() {
        auto egq = gq_from_kantor(load_family(*sfam));
        std::vector<GeometryMap> candidates = egq.action;
        if (*full) candidates = all_automorphisms(egq.gq);
        auto sym = symmetry_group(egq.gq, *spoint, candidates);
        bool is_center = is_center_of_symmetry(egq.gq, *spoint, candidates);
        emit(Json{{"point", *spoint},
                  {"size", sym.size()},
                  {"center_of_symmetry", is_center},
                  {"candidates", candidates.size()}},
             *sout);
        return kOk;
      };
    });

    auto* star_sub = reg_cmd->add_subcommand("star", "local fixed-line property");
    auto stfam = std::make_shared<std::string>(), stout = std::make_shared<std::string>();
    auto stline = std::make_shared<int>(-1);
    star_sub->add_option("--family", *stfam, "family JSON file")->required();
    star_sub->add_option("--line", *stline, "restrict to one line through the base point");
    star_sub->add_option("--out", *stout, "output file");
    star_sub->callback([=]() mutable {
      action = [=]() {
        auto egq = gq_from_kantor(load_family(*stfam));
        bool holds = check_star_property(egq.gq, egq.action, 0, *stline);
        emit(Json{{"holds", holds}, {"line", *stline}}, *stout);
        return kOk;
      };
    });
  }

  // ----- plane ------------------------------------------------------------
  auto* plane_cmd = app.add_subcommand("plane", "affine and translation planes");
  {
    auto* derive = plane_cmd->add_subcommand("derive", "derived plane at a regular point");
    auto family = std::make_shared<std::string>(), geometry = std::make_shared<std::string>();
    auto x = std::make_shared<int>(0);
    auto out = std::make_shared<std::string>();
    derive->add_option("--family", *family, "family JSON file");
    derive->add_option("--geometry", *geometry, "geometry JSON file");
    derive->add_option("--x", *x, "regular point id");
    derive->add_option("--out", *out, "output plane file");
    derive->callback([=]() mutable {
      action = [=]() {
        GQ gq;
        if (!family->empty())
          gq = gq_from_kantor(load_family(*family)).gq;
        else if (!geometry->empty())
          gq = load_gq(*geometry);
        else
          throw InputError("provide --family or --geometry");
        auto plane = derived_plane(gq, *x);
        emit(io::plane_to_json(plane), *out);
        return kOk;
      };
    });

    auto* from_spread = plane_cmd->add_subcommand("from-spread", "Andre/Bruck-Bose plane");
    auto q = std::make_shared<int>(2), h = std::make_shared<int>(2);
    auto sout = std::make_shared<std::string>();
    from_spread->add_option("--q", *q, "field order");
    from_spread->add_option("--hdim", *h, "spread parameter h");
    from_spread->add_option("--out", *sout, "output plane file");
    from_spread->callback([=]() mutable {
      action = [=]() {
        Spread spread;
        if (*q == 2 && *h == 2) {
          spread = find_spread_pg32();
        } else if (*h == 1) {
          spread.q = *q;
          spread.h = 1;
          int n = static_cast<int>(pg::points(1, *q).size());
          for (int i = 0; i < n; ++i) spread.subspaces.push_back({i});
        } else {
          throw InputError("built-in spreads: --h 1 (any supported q) or --q 2 --h 2");
        }
        auto sp = plane_from_spread(spread);
        Json j = io::plane_to_json(sp.plane);
        j["spread"] = spread.subspaces;
        emit(j, *sout);
        return kOk;
      };
    });

    auto* subplanes = plane_cmd->add_subcommand("subplanes", "translation subplanes");
    auto spfam = std::make_shared<std::string>(), spout = std::make_shared<std::string>();
    auto r = std::make_shared<int>();
    subplanes->add_option("--family", *spfam, "family JSON file")->required();
    subplanes->add_option("--r", *r, "subplane order")->required();
    subplanes->add_option("--out", *spout, "output file");
    subplanes->callback([=]() mutable {
      action = [=]() {
        auto egq = gq_from_kantor(load_family(*spfam));
        auto s = symmetry_subgroup_in_action(egq.gq, egq.group, egq.action, 0);
        auto plane = derived_plane(egq.gq, 0);
        auto tgroup = plane_translation_group(plane, egq.gq, egq.group, egq.action, s);
        int z = egq.affine_point(0);
        auto key = perp(egq.gq, PerpKind::Points, {0, z}).members;
        int bp = plane.point_by_key(key);
        auto results = find_subplanes(plane, tgroup, *r, bp);
        Json list = Json::array();
        for (const auto& res : results)
          list.push_back(Json{{"tprime", res.tprime.members()},
                              {"classes", res.class_indices},
                              {"points", res.parent_points},
                              {"lines", res.parent_lines}});
        emit(Json{{"order", *r}, {"count", results.size()}, {"subplanes", std::move(list)}},
             *spout);
        return kOk;
      };
    });
  }

  // ----- subgq ------------------------------------------------------------
  auto* subgq_cmd = app.add_subcommand("subgq", "subquadrangle extraction");
  {
    auto* extract = subgq_cmd->add_subcommand("extract", "extract subquadrangles");
    auto parent = std::make_shared<std::string>(), family = std::make_shared<std::string>();
    auto r = std::make_shared<int>();
    auto out_dir = std::make_shared<std::string>();
    extract->add_option("--parent", *parent, "parent geometry JSON file")->required();
    extract->add_option("--family", *family, "family JSON file")->required();
    extract->add_option("--subplane-order", *r, "subplane order")->required();
    extract->add_option("--out", *out_dir, "output directory")->required();
    extract->callback([=]() mutable {
      action = [=]() {
        auto fam = load_family(*family);
        auto egq = gq_from_kantor(fam);
        auto parent_geom = io::geometry_from_json(io::load_json(*parent));
        if (parent_geom.lines() != egq.gq.geom().lines() ||
            parent_geom.num_points() != egq.gq.num_points())
          throw InputError("parent geometry does not match the family's coset geometry");

        auto s = symmetry_subgroup_in_action(egq.gq, egq.group, egq.action, 0);
        auto plane = derived_plane(egq.gq, 0);
        auto tgroup = plane_translation_group(plane, egq.gq, egq.group, egq.action, s);
        int z = egq.affine_point(0);
        auto key = perp(egq.gq, PerpKind::Points, {0, z}).members;
        int bp = plane.point_by_key(key);
        auto subplanes = find_subplanes(plane, tgroup, *r, bp);

        Json summary = Json::array();
        int index = 0;
        for (const auto& sp : subplanes) {
          auto res = subgq_from_subplane(egq.gq, egq.group, egq.action, s, 0, z, plane,
                                         tgroup, sp);
          char dir_name[32];
          std::snprintf(dir_name, sizeof(dir_name), "sub_%03d", index);
          auto dir = std::filesystem::path(*out_dir) / dir_name;
          io::save_json(dir / "family.json", io::family_to_json(res.family));
          io::save_json(dir / "geometry.json",
                        io::geometry_to_json(res.sub_egq.gq.geom()));
          Json report;
          report["r"] = res.r;
          report["sigma"] = res.sigma;
          report["sigma_equals_r"] = res.sigma_equals_r;
          report["kprime"] = res.kprime.members();
          report["sprime"] = res.sprime.members();
          report["s_inside_kprime"] = res.s_inside_kprime;
          report["improper"] = res.improper;
          report["family_check"] = io::family_report_to_json(res.family_report);
          report["point_embedding"] = res.point_embedding;
          report["line_embedding"] = res.line_embedding;
          io::save_json(dir / "report.json", report);
          summary.push_back(Json{{"dir", dir_name},
                                 {"r", res.r},
                                 {"sigma", res.sigma},
                                 {"improper", res.improper}});
          ++index;
        }
        io::save_json(std::filesystem::path(*out_dir) / "summary.json",
                      Json{{"parent", *parent},
                           {"parent_hash", io::file_hash(*parent)},
                           {"family", *family},
                           {"family_hash", io::file_hash(*family)},
                           {"count", subplanes.size()},
                           {"results", std::move(summary)}});
        return kOk;
      };
    });
  }

  // ----- suite ------------------------------------------------------------
  auto* suite_cmd = app.add_subcommand("suite", "theorem suites");
  {
    auto add_suite = [&](const char* name, const char* desc, bool frohardt) {
      auto* sub = suite_cmd->add_subcommand(name, desc);
      auto t = std::make_shared<int>();
      auto budget = std::make_shared<uint64_t>(SuiteOptions{}.budget);
      auto max_families = std::make_shared<uint64_t>(SuiteOptions{}.max_families);
      auto threads = std::make_shared<int>(1);
      auto out = std::make_shared<std::string>();
      auto catalog_dir = std::make_shared<std::string>();
      auto seed_dir = std::make_shared<std::string>();
      sub->add_option("--t", *t, "parameter t")->required();
      sub->add_option("--budget", *budget, "per-group search budget");
      sub->add_option("--max-families", *max_families, "per-group family cap");
      sub->add_option("--threads", *threads, "worker threads");
      sub->add_option("--out", *out, "report file");
      sub->add_option("--catalog", *catalog_dir, "directory of group JSON files");
      sub->add_option("--seed-doc", *seed_dir, "emit the built-in catalog as files and exit");
      sub->callback([=]() mutable {
        action = [=]() {
          std::vector<CatalogEntry> catalog;
          bool exhaustive = false;
          if (!catalog_dir->empty()) {
            catalog = load_catalog_dir(*catalog_dir);
          } else {
            catalog = catalog_for_t(*t);
            exhaustive = catalog_is_exhaustive(*t);
          }
          if (!seed_dir->empty()) {
            seed_doc(catalog, *seed_dir);
            return kOk;
          }
          SuiteOptions opts;
          opts.budget = *budget;
          opts.max_families = *max_families;
          opts.threads = *threads;
          opts.catalog_exhaustive = exhaustive;
          SuiteReport rep = frohardt ? suite_frohardt_case3(catalog, *t, opts)
                                     : suite_even_stgq_is_tgq(catalog, *t, opts);
          emit(io::suite_report_to_json(rep), *out);
          return suite_exit(rep);
        };
      });
    };
    add_suite("frohardt", "search for central-condition case-3 families", true);
    add_suite("even-stgq", "skew-translation families at even t", false);
  }

  // ----- report -----------------------------------------------------------
  auto* report_cmd = app.add_subcommand("report", "report utilities");
  {
    auto* merge = report_cmd->add_subcommand("merge", "merge suite reports");
    auto files = std::make_shared<std::vector<std::string>>();
    auto out = std::make_shared<std::string>();
    merge->add_option("files", *files, "report JSON files")->required()->expected(-1);
    merge->add_option("--out", *out, "output file");
    merge->callback([=]() mutable {
      action = [=]() {
        Json merged = Json::array();
        std::string worst = "confirmed";
        auto rank = [](const std::string& v) {
          if (v == "failed") return 3;
          if (v == "confirmed-on-searched-space") return 2;
          if (v == "vacuous") return 1;
          return 0;
        };
        for (const auto& f : *files) {
          Json j = io::load_json(f);
          if (j.contains("global_verdict") &&
              rank(j["global_verdict"].get<std::string>()) > rank(worst))
            worst = j["global_verdict"].get<std::string>();
          merged.push_back(Json{{"file", f}, {"hash", io::file_hash(f)}, {"report", j}});
        }
        emit(Json{{"reports", std::move(merged)}, {"global_verdict", worst}}, *out);
        return kOk;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const LemmaCounterexample& e) {
    std::cerr << "LEMMA COUNTEREXAMPLE CANDIDATE: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
}
