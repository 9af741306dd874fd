#include "osg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "osg/biideals.hpp"
#include "osg/laws.hpp"
#include "osg/osgfile.hpp"
#include "osg/render.hpp"
#include "osg/transform.hpp"

namespace osg {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string basename_no_ext(const std::string& path) {
  size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

std::string compat_name(const OrderedSemigroup& s) {
  if (s.left_compatible() && s.right_compatible()) return "two-sided";
  if (s.left_compatible()) return "left only";
  if (s.right_compatible()) return "right only";
  return "none";
}

// either a file path or a transformation degree
struct Input {
  std::string file;
  uint32_t tn = 0;
  std::string name;

  void add_options(CLI::App* cmd) {
    cmd->add_option("file", file, "OSG v1 input file");
    cmd->add_option("--tn", tn, "use the full transformation semigroup Tn");
  }

  OrderedSemigroup resolve() {
    if (file.empty() == (tn == 0)) {
      throw Error("give exactly one of <file> or --tn <k>");
    }
    if (tn != 0) {
      name = "T" + std::to_string(tn);
      return ordered_semigroup(build_full_transformation(tn));
    }
    OsgDocument doc = parse_osg(read_file(file));
    name = doc.name.empty() ? basename_no_ext(file) : doc.name;
    return load(doc);
  }
};

const std::map<std::string, IdealKind> kKindNames = {
    {"left", IdealKind::left},
    {"right", IdealKind::right},
    {"two-sided", IdealKind::two_sided},
    {"bi", IdealKind::bi},
};

void print_summary(std::ostream& out, const std::string& name,
                   const OrderedSemigroup& s) {
  Regularity reg = regularity(s);
  out << "instance: " << name << "\n"
      << "elements: " << s.size() << "\n"
      << "order pairs: " << s.ord().pairs().size() << " non-reflexive\n"
      << "compatibility: " << compat_name(s) << "\n"
      << "regular: " << (reg.regular ? "true" : "false") << "\n"
      << "intra-regular: " << (reg.intra_regular ? "true" : "false") << "\n";
}

void print_report(std::ostream& out, const LawReport& rep, bool as_json) {
  if (as_json) {
    nlohmann::ordered_json doc;
    doc["instance"] = rep.instance;
    doc["laws"] = nlohmann::ordered_json::array();
    for (const LawResult& law : rep.laws) {
      nlohmann::ordered_json j;
      j["id"] = law.id;
      j["statement"] = law.statement;
      j["verdict"] = verdict_name(law.verdict);
      j["witness"] = law.witness.empty()
                         ? nlohmann::ordered_json(nullptr)
                         : nlohmann::ordered_json(law.witness);
      doc["laws"].push_back(std::move(j));
    }
    out << doc.dump(2) << "\n";
    return;
  }
  out << "instance: " << rep.instance << "\n";
  size_t pass = 0, fail = 0, na = 0;
  for (const LawResult& law : rep.laws) {
    out << "law " << law.id << ": " << verdict_name(law.verdict) << "  "
        << law.statement << "\n";
    if (!law.witness.empty()) out << "  note: " << law.witness << "\n";
    switch (law.verdict) {
      case Verdict::pass: ++pass; break;
      case Verdict::fail: ++fail; break;
      case Verdict::not_applicable: ++na; break;
    }
  }
  out << "result: " << pass << " pass, " << fail << " fail, " << na
      << " not-applicable\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite ordered semigroups: ideals, bi-ideals, Greens relations,"
               " egg-box diagrams"};
  app.name("osg");
  app.require_subcommand(1);
  int exit_code = 0;

  // validate
  auto* c_validate = app.add_subcommand("validate", "parse and validate an OSG file");
  auto val_file = std::make_shared<std::string>();
  c_validate->add_option("file", *val_file, "OSG v1 input file")->required();
  c_validate->callback([&out, val_file] {
    OsgDocument doc = parse_osg(read_file(*val_file));
    OrderedSemigroup s = load(doc);
    std::string name = doc.name.empty() ? basename_no_ext(*val_file) : doc.name;
    print_summary(out, name, s);
    out << "valid\n";
  });

  // tn
  auto* c_tn = app.add_subcommand("tn", "build (Tn, <=) under the natural order");
  auto tn_n = std::make_shared<uint32_t>(0);
  auto tn_emit = std::make_shared<bool>(false);
  c_tn->add_option("--n", *tn_n, "degree (1..4)")->required();
  c_tn->add_flag("--emit-osg", *tn_emit, "print the instance as an OSG file");
  c_tn->callback([&out, tn_n, tn_emit] {
    TnSemigroup t = build_full_transformation(*tn_n);
    OrderedSemigroup s = ordered_semigroup(t);
    std::string name = "T" + std::to_string(*tn_n);
    if (*tn_emit) {
      out << emit_osg(make_document(s, name));
    } else {
      print_summary(out, name, s);
    }
  });

  // ideals
  auto* c_ideals = app.add_subcommand("ideals", "enumerate an ideal family");
  auto id_in = std::make_shared<Input>();
  id_in->add_options(c_ideals);
  auto id_kind = std::make_shared<std::string>();
  auto id_budget = std::make_shared<uint64_t>(kDefaultDownSetBudget);
  c_ideals->add_option("--kind", *id_kind, "left|right|two-sided|bi")
      ->required()
      ->check(CLI::IsMember({"left", "right", "two-sided", "bi"}));
  c_ideals->add_option("--budget", *id_budget, "down-set visit budget");
  c_ideals->callback([&out, id_in, id_kind, id_budget] {
    OrderedSemigroup s = id_in->resolve();
    IdealFamily fam = enumerate_family(s, kKindNames.at(*id_kind), *id_budget);
    out << "instance: " << id_in->name << "\n"
        << "kind: " << *id_kind << "\n"
        << "count: " << fam.members.size() << "\n";
    for (uint32_t i = 0; i < fam.members.size(); ++i) {
      out << fam.member_name(i) << " = "
          << set_to_string(fam.members[i], s.sgp().names()) << "\n";
    }
  });

  // bsg
  auto* c_bsg = app.add_subcommand("bsg", "build the semigroup of bi-ideals B(S)");
  auto bsg_in = std::make_shared<Input>();
  bsg_in->add_options(c_bsg);
  auto bsg_table = std::make_shared<bool>(false);
  auto bsg_budget = std::make_shared<uint64_t>(kDefaultDownSetBudget);
  c_bsg->add_flag("--table", *bsg_table, "print the Cayley table of *");
  c_bsg->add_option("--budget", *bsg_budget, "down-set visit budget");
  c_bsg->callback([&out, bsg_in, bsg_table, bsg_budget] {
    OrderedSemigroup s = bsg_in->resolve();
    BiIdealSemigroup b = build_biideal_semigroup(s, *bsg_budget);
    BandRegular br = band_and_regular(b.sgp);
    out << "instance: " << bsg_in->name << "\n"
        << "bi-ideals: " << b.family.members.size() << "\n"
        << "band: " << (br.band ? "true" : "false") << "\n"
        << "regular: " << (br.regular ? "true" : "false") << "\n";
    for (uint32_t i = 0; i < b.family.members.size(); ++i) {
      out << b.family.member_name(i) << " = "
          << set_to_string(b.family.members[i], s.sgp().names()) << "\n";
    }
    if (*bsg_table) out << render_cayley(b.sgp, "*");
  });

  // shared by greens/eggbox: compute partitions + carrier names
  struct GreensArgs {
    Input in;
    std::string on = "base";
    std::string mode;  // defaults per target
    uint64_t budget = kDefaultDownSetBudget;

    std::pair<GreensPartitions, std::vector<std::string>> compute() {
      OrderedSemigroup s = in.resolve();
      if (mode.empty()) mode = on == "bsg" ? "plain" : "ordered";
      GreensMode m = mode == "ordered" ? GreensMode::ordered : GreensMode::plain;
      if (on == "bsg") {
        if (m == GreensMode::ordered) throw MissingOrder();
        BiIdealSemigroup b = build_biideal_semigroup(s, budget);
        return {greens_partitions(b.sgp, nullptr, m), b.sgp.names()};
      }
      return {greens_partitions(s, m), s.sgp().names()};
    }

    void add_options(CLI::App* cmd) {
      in.add_options(cmd);
      cmd->add_option("--on", on, "base|bsg (default base)")
          ->check(CLI::IsMember({"base", "bsg"}));
      cmd->add_option("--mode", mode, "ordered|plain (default per target)")
          ->check(CLI::IsMember({"ordered", "plain"}));
      cmd->add_option("--budget", budget, "down-set visit budget");
    }
  };

  // greens
  auto* c_greens = app.add_subcommand("greens", "Greens relations L R J H D");
  auto gr = std::make_shared<GreensArgs>();
  gr->add_options(c_greens);
  c_greens->callback([&out, gr] {
    auto [parts, names] = gr->compute();
    out << "instance: " << gr->in.name << " (" << gr->on << ", " << gr->mode
        << ")\n";
    out << render_partition("L", parts.l, names) << "\n"
        << render_partition("R", parts.r, names) << "\n"
        << render_partition("J", parts.j, names) << "\n"
        << render_partition("H", parts.h, names) << "\n"
        << render_partition("D", parts.d, names) << "\n";
    out << "D == J: " << (parts.d == parts.j ? "true" : "false") << "\n";
  });

  // eggbox
  auto* c_eggbox = app.add_subcommand("eggbox", "egg-box diagram");
  auto eb = std::make_shared<GreensArgs>();
  eb->add_options(c_eggbox);
  auto eb_format = std::make_shared<std::string>("ascii");
  c_eggbox->add_option("--format", *eb_format, "ascii|dot (default ascii)")
      ->check(CLI::IsMember({"ascii", "dot"}));
  c_eggbox->callback([&out, eb, eb_format] {
    auto [parts, names] = eb->compute();
    RenderFormat f = *eb_format == "dot" ? RenderFormat::dot : RenderFormat::ascii;
    out << render_eggbox(egg_box(parts), names, f);
  });

  // verify
  auto* c_verify = app.add_subcommand("verify", "run the law suite on an instance");
  auto ver_in = std::make_shared<Input>();
  ver_in->add_options(c_verify);
  auto ver_json = std::make_shared<bool>(false);
  auto ver_budget = std::make_shared<uint64_t>(kDefaultDownSetBudget);
  c_verify->add_flag("--json", *ver_json, "emit the report as JSON");
  c_verify->add_option("--budget", *ver_budget, "down-set visit budget");
  c_verify->callback([&out, &exit_code, ver_in, ver_json, ver_budget] {
    LawReport rep;
    if (ver_in->tn != 0 && !ver_in->file.empty()) {
      throw Error("give exactly one of <file> or --tn <k>");
    }
    if (ver_in->tn != 0) {
      rep = verify_transformation(ver_in->tn, *ver_budget);
    } else {
      OrderedSemigroup s = ver_in->resolve();
      rep = verify_instance(s, ver_in->name, *ver_budget);
    }
    print_report(out, rep, *ver_json);
    if (!rep.all_passed()) exit_code = 1;
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace osg
