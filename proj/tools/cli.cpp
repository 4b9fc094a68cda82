#include "cli.hpp"

#include <fstream>
#include <future>
#include <ostream>

#include <CLI11.hpp>

#include "residua/constants.hpp"
#include "residua/errors.hpp"
#include "residua/group_io.hpp"
#include "residua/oracle.hpp"
#include "residua/report.hpp"
#include "residua/res_rad.hpp"
#include "residua/sharpness.hpp"
#include "residua/suites.hpp"

namespace residua::cli {

namespace {

struct Options {
  Caps caps;
  std::string out;
  std::string cls;
  std::vector<std::string> files;
  bool poly = false;
  std::size_t levels = 10;
  std::vector<std::string> classes;
};

ConstantsReport constants_for(const GroupClass& y, const Caps& caps) {
  return compute_constants(y, caps, bundled_simple_table(), load_primitive_catalog(data_dir(), caps));
}

Json cmd_constants(const Options& o, int& status) {
  status = ok;
  return to_json(constants_for(constants_class(o.cls), o.caps));
}

Json cmd_verify(const Options& o, int& status) {
  const GroupClass y = constants_class(o.cls);
  const ConstantsReport c = constants_for(y, o.caps);
  std::vector<NamedGroup> groups;
  if (o.files.empty()) {
    for (const auto& e : load_corpus(data_dir(), o.caps)) groups.push_back({e.name, e.group});
  } else {
    for (const auto& f : o.files) {
      GroupFile gf = read_group_file(f, o.caps);
      groups.push_back({gf.name, gf.group});
    }
  }
  std::vector<std::future<InequalityReport>> jobs;
  for (const auto& g : groups)
    jobs.push_back(std::async(std::launch::async, [&, g] {
      try {
        return main_inequality_check(g.group, y, c.lambda.gamma_bounds, g.name, o.caps);
      } catch (const Undecidable& e) {
        InequalityReport r;
        r.group_id = g.name;
        r.cls = y.descriptor();
        r.order = g.group.order();
        r.note = std::string("undecidable: ") + e.what();
        return r;
      }
    }));
  Json rows = Json::array();
  std::size_t passed = 0, failed = 0, skipped = 0, open = 0;
  for (auto& j : jobs) {
    InequalityReport r = j.get();
    switch (r.verdict) {
      case Verdict::pass: ++passed; break;
      case Verdict::fail: ++failed; break;
      case Verdict::hypothesis_not_met: ++skipped; break;
      case Verdict::inconclusive: ++open; break;
    }
    rows.push_back(to_json(r));
  }
  status = failed || open ? verification_failure : ok;
  return Json{{"class", y.descriptor()},
              {"gamma", format_real(c.lambda.gamma, 12)},
              {"gamma_upper", c.lambda.gamma_bounds.upper.str()},
              {"gamma_lower", c.lambda.gamma_bounds.lower.str()},
              {"summary", {{"passed", passed}, {"failed", failed}, {"inconclusive", open}, {"skipped", skipped}}},
              {"groups", rows}};
}

GroupFile single_group(const Options& o) {
  if (o.files.size() != 1) throw InputError("expected exactly one group file");
  return read_group_file(o.files.front(), o.caps);
}

Json cmd_residual(const Options& o, int& status) {
  const GroupClass x = GroupClass::parse(o.cls);
  const GroupFile gf = single_group(o);
  status = ok;
  return to_json(o.poly ? poly_residual(gf.group, x, o.caps) : residual(gf.group, x, o.caps), gf.name);
}

Json cmd_radical(const Options& o, int& status) {
  const GroupClass x = GroupClass::parse(o.cls);
  const GroupFile gf = single_group(o);
  status = ok;
  return to_json(o.poly ? poly_radical(gf.group, x, o.caps) : radical(gf.group, x, o.caps), gf.name);
}

Json cmd_classify(const Options& o, int& status) {
  const GroupFile gf = single_group(o);
  const Group& g = gf.group;
  std::vector<std::string> classes = o.classes;
  if (classes.empty()) classes = {"abelian", "nilpotent", "soluble", "d0xS:A5", "poly:d0xS:A5"};
  Json factors = Json::array();
  for (const auto& f : composition_factors(g, o.caps)) factors.push_back(f.label());
  Json members = Json::object();
  for (const auto& c : classes) {
    try {
      members[c] = member(GroupClass::parse(c), g, o.caps);
    } catch (const Undecidable& e) {
      members[c] = std::string("undecidable: ") + e.what();
    }
  }
  status = ok;
  return Json{{"group", gf.name},
              {"degree", g.degree()},
              {"order", g.order().get_str()},
              {"abelian", is_abelian(g)},
              {"nilpotent", is_nilpotent(g)},
              {"soluble", is_soluble(g)},
              {"perfect", is_perfect(g)},
              {"transitive", is_transitive(g)},
              {"primitive", is_transitive(g) && is_primitive(g)},
              {"composition_factors", factors},
              {"membership", members}};
}

Json cmd_sharpness(const Options& o, int& status) {
  const GroupClass y = constants_class(o.cls);
  const ConstantsReport c = constants_for(y, o.caps);
  SharpnessConfig config{c.lambda.s0, c.beta.witness.order(), c.beta.degree, c.lambda.gamma};
  BigInt r_max = big_pow(static_cast<unsigned long>(config.nu), o.levels);
  SharpnessReport rep = convergence_report(config, r_max);
  rep.notes.push_back("towers are indexed by level k with r = nu^k");

  // Tower orders |L_k| = |L|^((nu^k - 1)/(nu - 1)) on the degrees that stay small.
  Json towers = Json::array();
  for (std::size_t k = 1, deg = config.nu; k <= o.levels && deg <= 25; ++k, deg *= config.nu) {
    Group t = build_L_tower(c.beta.witness, k, o.caps);
    const BigInt expected = big_pow(config.l_order, static_cast<unsigned long>((deg - 1) / (config.nu - 1)));
    towers.push_back({{"level", k}, {"degree", t.degree()}, {"order", t.order().get_str()},
                      {"matches_formula", t.order() == expected}});
  }

  const auto& table = bundled_simple_table();
  if (c.lambda.s0.name == "A5") {
    rep.notes.push_back("instance uses top group C2 in place of the beta witness; Aut(A5) realized as S5 on 5 points");
    for (const auto& x : {GroupClass::nilpotent(), GroupClass::soluble()})
      rep.instances.push_back(verify_sharpness_instance(Group::symmetric(5), Group::symmetric(2), x,
                                                        *table.find("A5"), 2, "S5 wr C2, X = " + x.descriptor(),
                                                        o.caps));
  } else if (c.lambda.s0.name == "A6" && y.is_poly()) {
    rep.notes.push_back("instance uses Aut(A6) = PGammaL(2,9) with a trivial top group");
    Group aut = read_group_file(data_dir() / "corpus" / "PGammaL2_9.grp", o.caps).group;
    rep.instances.push_back(verify_sharpness_instance(aut, Group::trivial(1), y.inner(), *table.find("A6"), 1,
                                                      "PGammaL(2,9), X = " + y.inner().descriptor(), o.caps));
  } else {
    rep.notes.push_back("no shipped structural instance for S0 = " + c.lambda.s0.name);
  }

  bool good = rep.strictly_decreasing && rep.above_limit && rep.limit_ok;
  for (const auto& i : rep.instances) good = good && i.ok();
  for (const auto& t : towers) good = good && t["matches_formula"].get<bool>();
  status = good ? ok : verification_failure;
  Json j = to_json(rep);
  j["class"] = y.descriptor();
  j["L_witness"] = group_to_json(c.beta.witness, "L");
  j["towers"] = towers;
  return j;
}

Json cmd_selftest(const Options& o, int& status) {
  const auto corpus = oracle_corpus(o.caps);
  std::vector<SuiteReport> suites;
  suites.push_back(perm_core_suite(corpus, o.caps));
  suites.push_back(oracle_equivalence_suite(corpus, o.caps));
  suites.push_back(closure_law_suite(corpus, o.caps));
  suites.push_back(frattini_suite(corpus, o.caps));
  suites.push_back(data_suite(bundled_simple_table(), load_primitive_catalog(data_dir(), o.caps)));
  Json arr = Json::array();
  bool good = true;
  for (const auto& s : suites) {
    arr.push_back(to_json(s));
    good = good && s.passed();
  }
  status = good ? ok : verification_failure;
  return Json{{"passed", good}, {"corpus_size", corpus.size()}, {"suites", arr}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"residua: residuals, radicals and extension-closure constants of finite groups"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--element-cap", o.caps.element, "largest order enumerated elementwise")->capture_default_str();
  app.add_option("--subgroup-cap", o.caps.subgroup, "largest order whose subgroup lattice is built")
      ->capture_default_str();
  app.add_option("--degree-cap", o.caps.degree, "largest permutation degree")->capture_default_str();
  app.add_option("--out", o.out, "write the report to this file (plus a .manifest.json)");

  auto* constants = app.add_subcommand("constants", "compute m0, c0, n0, beta, lambda, gamma for poly:<class>");
  constants->add_option("class", o.cls)->required();
  auto* verify = app.add_subcommand("verify", "check |G^Xbar| > |G|^gamma on group files (default: corpus)");
  verify->add_option("class", o.cls)->required();
  verify->add_option("files", o.files);
  auto* residual_cmd = app.add_subcommand("residual", "X-residual of a group");
  auto* radical_cmd = app.add_subcommand("radical", "X-radical of a group");
  for (auto* s : {residual_cmd, radical_cmd}) {
    s->add_flag("--poly", o.poly, "use the extension closure poly(X)");
    s->add_option("class", o.cls)->required();
    s->add_option("file", o.files)->required();
  }
  auto* classify = app.add_subcommand("classify", "structure and class membership of a group");
  classify->add_option("file", o.files)->required();
  classify->add_option("--class", o.classes, "class descriptors to test");
  auto* sharpness = app.add_subcommand("sharpness", "gamma_r sequence and structural instance checks");
  sharpness->add_option("class", o.cls)->required();
  sharpness->add_option("--levels", o.levels, "largest tower level k (r = nu^k)")->capture_default_str();
  auto* selftest = app.add_subcommand("selftest", "run every property suite");
  for (auto* s : app.get_subcommands({})) s->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  int status = ok;
  Json report;
  try {
    if (o.caps.degree > 65535) throw InputError("--degree-cap above 65535");
    if (*constants) report = cmd_constants(o, status);
    else if (*verify) report = cmd_verify(o, status);
    else if (*residual_cmd) report = cmd_residual(o, status);
    else if (*radical_cmd) report = cmd_radical(o, status);
    else if (*classify) report = cmd_classify(o, status);
    else if (*sharpness) report = cmd_sharpness(o, status);
    else if (*selftest) report = cmd_selftest(o, status);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return input_error;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return scale_error;
  } catch (const Undecidable& e) {
    err << "undecidable at configured scale: " << e.what() << "\n";
    return scale_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return verification_failure;
  }

  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "input error: cannot write " << o.out << "\n";
      return input_error;
    }
    f << text;
    RunManifest m;
    m.command = app.get_subcommands().front()->get_name();
    m.cls = o.cls;
    m.inputs = o.files;
    m.caps = o.caps;
    m.outputs = {o.out};
    m.exit_status = status;
    std::ofstream(o.out + ".manifest.json") << to_json(m).dump(2) << "\n";
  }
  return status;
}

}  // namespace residua::cli
