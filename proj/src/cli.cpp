#include "bimon/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bimon/zoo.hpp"

namespace bimon {

bool LawResult::passed() const {
  return std::all_of(sections.begin(), sections.end(),
                     [](const Section& s) { return !s.decisive || s.outcome.passed(); });
}

const std::vector<std::string>& all_laws() {
  static const std::vector<std::string> laws{"monoid", "comonoid", "module", "comodule", "em:rc",  "em:lc",
                                             "em:ra",  "em:la",    "cdl",    "mdl",      "cowreath", "wreath",
                                             "ddl",    "bimonoid", "coring-compat"};
  return laws;
}

namespace {

std::string law_role(const std::string& law) {
  if (law.rfind("em:", 0) == 0) return "em-cell";
  if (law == "bimonoid") return "ddl";
  if (law == "coring-compat") return "coring";
  return law;
}

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  if (s == "bi") return Side::bi;
  throw SchemaError("side: expected left, right or bi");
}

std::optional<Morphism> optional_morphism(const Workspace& ws, const Json& entry, const std::string& key) {
  if (!entry.contains(key)) return std::nullopt;
  return ws.morphism(string_field(entry, key, "role"));
}

EmCell em_cell(const Workspace& ws, EmKind kind) {
  const auto& cells = ws.role("em-cell");
  const auto key = kind_name(kind);
  if (!cells.is_object() || !cells.contains(key))
    throw MissingRole("no '" + key + "' entry in the em-cell role");
  const auto& entry = cells.at(key);
  EmBase base = is_monoid_kind(kind) ? EmBase(ws.monoid(ws.role("monoid"))) : EmBase(ws.comonoid(ws.role("comonoid")));
  return {kind, base, ws.word(field(entry, "carrier", "em-cell")), ws.morphism(string_field(entry, "map", "em-cell"))};
}

CowreathData cowreath_data(const Workspace& ws, bool allow_dl) {
  const auto c = ws.comonoid(ws.role("comonoid"));
  if (ws.has_role("cowreath") || !allow_dl) {
    const auto& r = ws.role("cowreath");
    return {{EmKind::RC, c, ws.word(field(r, "carrier", "cowreath")), ws.morphism(string_field(r, "map", "cowreath"))},
            ws.morphism(string_field(r, "xi", "cowreath")),
            ws.morphism(string_field(r, "delta", "cowreath"))};
  }
  const auto& r = ws.role("cdl");
  return dl_to_cowreath(ws.cat(), c, ws.comonoid(field(r, "second", "cdl")), ws.morphism(string_field(r, "map", "cdl")));
}

WreathData wreath_data(const Workspace& ws, bool allow_dl) {
  const auto a = ws.monoid(ws.role("monoid"));
  if (ws.has_role("wreath") || !allow_dl) {
    const auto& r = ws.role("wreath");
    return {{EmKind::RA, a, ws.word(field(r, "carrier", "wreath")), ws.morphism(string_field(r, "map", "wreath"))},
            ws.morphism(string_field(r, "zeta", "wreath")),
            ws.morphism(string_field(r, "nu", "wreath"))};
  }
  const auto& r = ws.role("mdl");
  return dl_to_wreath(ws.cat(), a, ws.monoid(field(r, "second", "mdl")), ws.morphism(string_field(r, "map", "mdl")));
}

DoubleDL ddl_data(const Workspace& ws) {
  const auto& r = ws.role("ddl");
  DoubleDL d;
  d.monoid = ws.monoid(ws.role("monoid"));
  d.comonoid = ws.comonoid(ws.role("comonoid"));
  d.carrier = d.monoid.carrier;
  d.hbar = ws.morphism(string_field(r, "hbar", "ddl"));
  return d;
}

}  // namespace

std::vector<std::string> available_laws(const Workspace& ws) {
  std::vector<std::string> out;
  for (const auto& law : all_laws()) {
    const auto role = law_role(law);
    if (!ws.has_role(role)) continue;
    if (role == "em-cell" && !ws.role(role).contains(law.substr(3))) continue;
    out.push_back(law);
  }
  return out;
}

LawResult run_law(const Workspace& ws, const std::string& law) {
  const auto& cat = ws.cat();
  LawResult r;
  r.law = law;
  if (law == "monoid") {
    r.sections.push_back({"monoid", check_monoid(cat, ws.monoid(ws.role("monoid")))});
  } else if (law == "comonoid") {
    r.sections.push_back({"comonoid", check_comonoid(cat, ws.comonoid(ws.role("comonoid")))});
  } else if (law == "module") {
    const auto& entry = ws.role("module");
    r.sections.push_back(
        {"module", check_module(cat, parse_side(string_field(entry, "side", "module")), ws.monoid(ws.role("monoid")),
                                ws.word(field(entry, "carrier", "module")),
                                {optional_morphism(ws, entry, "left"), optional_morphism(ws, entry, "right")})});
  } else if (law == "comodule") {
    const auto& entry = ws.role("comodule");
    r.sections.push_back({"comodule", check_comodule(cat, parse_side(string_field(entry, "side", "comodule")),
                                                     ws.comonoid(ws.role("comonoid")),
                                                     ws.word(field(entry, "carrier", "comodule")),
                                                     {optional_morphism(ws, entry, "left"),
                                                      optional_morphism(ws, entry, "right")})});
  } else if (law.rfind("em:", 0) == 0) {
    const auto cell = em_cell(ws, parse_kind(law.substr(3)));
    r.sections.push_back({"cell", check_em_object(cat, cell)});
    r.sections.push_back({is_monoid_kind(cell.kind) ? "induced bimodule" : "induced bicomodule",
                          check_em_structure(cat, cell, em_structure(cat, cell))});
  } else if (law == "cdl") {
    const auto& entry = ws.role("cdl");
    r.sections.push_back({"comonoid distributive law",
                          check_comonoid_dl(cat, ws.comonoid(ws.role("comonoid")), ws.comonoid(field(entry, "second", "cdl")),
                                            ws.morphism(string_field(entry, "map", "cdl")))});
  } else if (law == "mdl") {
    const auto& entry = ws.role("mdl");
    r.sections.push_back({"monoid distributive law",
                          check_monoid_dl(cat, ws.monoid(ws.role("monoid")), ws.monoid(field(entry, "second", "mdl")),
                                          ws.morphism(string_field(entry, "map", "mdl")))});
  } else if (law == "cowreath") {
    r.sections.push_back({"cowreath", check_cowreath(cat, cowreath_data(ws, false))});
  } else if (law == "wreath") {
    r.sections.push_back({"wreath", check_wreath(cat, wreath_data(ws, false))});
  } else if (law == "ddl") {
    r.sections.push_back({"double distributive law", check_double_dl(cat, ddl_data(ws))});
  } else if (law == "bimonoid") {
    const auto rep = check_bimonoid(cat, ddl_data(ws));
    r.sections.push_back({"compatibility identities", rep.identities, true});
    r.sections.push_back({"Δ and ε as monoid morphisms", rep.structure, false});
    r.sections.push_back({"μ and η as comonoid morphisms", rep.costructure, false});
    r.consistent = rep.consistent;
  } else if (law == "coring-compat") {
    ws.role("coring");
    r.sections.push_back({"ring and coring compatibility", check_coring_compat(ws.coring())});
  } else {
    throw SchemaError("unknown law '" + law + "'");
  }
  return r;
}

namespace {

// Names are "key: lhs = rhs"; a failing line shows the inequality.
std::string failing_name(std::string name) {
  const auto pos = name.rfind(" = ");
  if (pos != std::string::npos) name.replace(pos, 3, " ≠ ");
  return name;
}

void text_section(std::ostream& out, const Section& s, bool titled) {
  if (titled) out << "[" << s.title << (s.decisive ? "" : ", detail") << "]\n";
  for (const auto& a : s.outcome.axioms()) {
    if (a.passed) {
      out << "PASS " << a.name << "\n";
      continue;
    }
    out << "FAIL " << failing_name(a.name) << "\n";
    if (!a.note.empty()) out << "  " << a.note << "\n";
    for (const auto& d : a.disagreements)
      out << "  at " << d.col_label << " → " << d.row_label << ": lhs " << format_rational(d.lhs) << ", rhs "
          << format_rational(d.rhs) << ", residual " << format_rational(d.lhs - d.rhs) << "\n";
  }
}

Json axiom_json(const AxiomResult& a) {
  Json j;
  j["name"] = a.name;
  j["passed"] = a.passed;
  if (!a.note.empty()) j["note"] = a.note;
  Json res = Json::array();
  for (const auto& d : a.disagreements) {
    Json e;
    e["row"] = d.row;
    e["col"] = d.col;
    e["row_label"] = d.row_label;
    e["col_label"] = d.col_label;
    e["lhs"] = format_rational(d.lhs);
    e["rhs"] = format_rational(d.rhs);
    e["residual"] = format_rational(d.lhs - d.rhs);
    res.push_back(std::move(e));
  }
  j["residuals"] = std::move(res);
  return j;
}

Json law_json(const LawResult& r) {
  Json j;
  j["law"] = r.law;
  j["verdict"] = r.passed() ? "PASS" : "FAIL";
  j["consistent"] = r.consistent;
  Json sections = Json::array();
  for (const auto& s : r.sections) {
    Json sj;
    sj["title"] = s.title;
    sj["decisive"] = s.decisive;
    sj["verdict"] = s.outcome.passed() ? "PASS" : "FAIL";
    Json axioms = Json::array();
    for (const auto& a : s.outcome.axioms()) axioms.push_back(axiom_json(a));
    sj["axioms"] = std::move(axioms);
    sections.push_back(std::move(sj));
  }
  j["sections"] = std::move(sections);
  return j;
}

void text_law(std::ostream& out, const LawResult& r) {
  const bool titled = r.sections.size() > 1;
  for (const auto& s : r.sections) text_section(out, s, titled);
  if (!r.consistent) out << "internal error: the equivalent bimonoid conditions disagree\n";
  out << "verdict: " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

int law_exit(const LawResult& r) {
  if (!r.consistent) return 2;
  return r.passed() ? 0 : 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw SchemaError("cannot write '" + path + "'");
  f << text;
}

Json word_names(const Obj& x) {
  Json j = Json::array();
  for (const auto& f : x.factors()) j.push_back(f.label);
  return j;
}

Json monoid_role(const Obj& a, const std::string& mul, const std::string& unit) {
  Json j;
  j["carrier"] = word_names(a);
  j["mul"] = mul;
  j["unit"] = unit;
  return j;
}

Json comonoid_role(const Obj& c, const std::string& comul, const std::string& counit) {
  Json j;
  j["carrier"] = word_names(c);
  j["comul"] = comul;
  j["counit"] = counit;
  return j;
}

std::vector<std::string> names_of(const Obj& x) {
  std::vector<std::string> out;
  for (const auto& f : x.factors()) out.push_back(f.label);
  return out;
}

void put_morphism(StructureFile& s, const std::string& name, const Morphism& m) {
  MorphismDecl d{name, names_of(m.dom), names_of(m.cod), m.map, false};
  for (auto& e : s.morphisms)
    if (e.name == name) {
      e = std::move(d);
      return;
    }
  s.morphisms.push_back(std::move(d));
}

void put_k_map(StructureFile& s, const std::string& name, std::vector<std::string> dom, std::vector<std::string> cod,
               const LinMap& m) {
  s.morphisms.push_back({name, std::move(dom), std::move(cod), m, true});
}

}  // namespace

StructureFile structure_from_ddl(const DoubleDL& d) {
  const auto& k = kmod();
  const auto& B = d.carrier;
  StructureFile s;
  s.objects.push_back({B.factors().at(0).label, B.factors().at(0).dim, std::nullopt, std::nullopt});
  put_morphism(s, "mu", d.monoid.mul);
  put_morphism(s, "eta", d.monoid.unit);
  put_morphism(s, "delta", d.comonoid.comul);
  put_morphism(s, "eps", d.comonoid.counit);
  put_morphism(s, "hbar", d.hbar);
  put_morphism(s, "act_left", k.tensor(d.monoid.mul, B));
  put_morphism(s, "act_right", k.tensor(B, d.monoid.mul));
  put_morphism(s, "coact_left", k.tensor(d.comonoid.comul, B));
  put_morphism(s, "coact_right", k.tensor(B, d.comonoid.comul));

  auto& roles = s.roles;
  roles["monoid"] = monoid_role(B, "mu", "eta");
  roles["comonoid"] = comonoid_role(B, "delta", "eps");
  Json module;
  module["side"] = "bi";
  module["carrier"] = word_names(B * B);
  module["left"] = "act_left";
  module["right"] = "act_right";
  roles["module"] = module;
  Json comodule;
  comodule["side"] = "bi";
  comodule["carrier"] = word_names(B * B);
  comodule["left"] = "coact_left";
  comodule["right"] = "coact_right";
  roles["comodule"] = comodule;
  Json cells;
  for (const char* kind : {"rc", "lc", "ra", "la"}) {
    Json c;
    c["carrier"] = word_names(B);
    c["map"] = "hbar";
    cells[kind] = c;
  }
  roles["em-cell"] = cells;
  Json cdl;
  cdl["second"] = comonoid_role(B, "delta", "eps");
  cdl["map"] = "hbar";
  roles["cdl"] = cdl;
  Json mdl;
  mdl["second"] = monoid_role(B, "mu", "eta");
  mdl["map"] = "hbar";
  roles["mdl"] = mdl;
  Json ddl;
  ddl["hbar"] = "hbar";
  roles["ddl"] = ddl;

  // Identity-reconstruction data for the universal properties, when the
  // products exist.
  if (check_double_dl(k, d).passed()) {
    const auto cw = dl_to_cowreath(k, d.comonoid, d.comonoid, d.hbar);
    const auto cp = cowreath_product(k, cw);
    const auto wr = dl_to_wreath(k, d.monoid, d.monoid, d.hbar);
    const auto wp = wreath_product(k, wr);
    put_morphism(s, "xi", cw.xi);
    put_morphism(s, "eps_b", k.tensor(d.comonoid.counit, B));
    put_morphism(s, "prod_comul", cp.comul);
    put_morphism(s, "prod_counit", cp.counit);
    put_morphism(s, "zeta", wr.zeta);
    put_morphism(s, "b_eta", k.tensor(B, d.monoid.unit));
    put_morphism(s, "prod_mul", wp.mul);
    put_morphism(s, "prod_unit", wp.unit);
    Json uc;
    uc["source"] = comonoid_role(B * B, "prod_comul", "prod_counit");
    uc["alpha"] = "xi";
    uc["beta"] = "eps_b";
    roles["universal-cowreath"] = uc;
    Json uw;
    uw["target"] = monoid_role(B * B, "prod_mul", "prod_unit");
    uw["phi"] = "zeta";
    uw["psi"] = "b_eta";
    roles["universal-wreath"] = uw;
  }
  return s;
}

StructureFile structure_from_coring(const CoringCompatData& c) {
  StructureFile s;
  s.backend = "rbimod";
  s.base_ring = c.base;
  const std::size_t n = c.ring_unit.rows();
  s.objects.push_back({"C", n, std::nullopt, std::nullopt});
  put_k_map(s, "ring_mul", {"C", "C"}, {"C"}, c.ring_mul);
  put_k_map(s, "ring_unit", {}, {"C"}, c.ring_unit);
  put_k_map(s, "iota", {"R"}, {"C"}, c.iota);
  s.morphisms.push_back({"comul", {"C"}, {"C", "C"}, c.comul, false});
  s.morphisms.push_back({"counit", {"C"}, {}, c.counit, false});
  s.morphisms.push_back({"hbar", {"C", "C"}, {"C", "C"}, c.hbar, false});
  Json coring;
  coring["carrier"] = "C";
  for (const char* key : {"ring_mul", "ring_unit", "iota", "comul", "counit", "hbar"}) coring[key] = key;
  s.roles["coring"] = coring;
  Json co;
  co["carrier"] = Json::array({"C"});
  co["comul"] = "comul";
  co["counit"] = "counit";
  s.roles["comonoid"] = co;
  return s;
}

namespace {

StructureFile flip_pair_structure(std::size_t n) {
  const auto p = build_tensor_flip_pair(n);
  StructureFile s;
  s.objects.push_back({"A", n, std::nullopt, std::nullopt});
  s.objects.push_back({"T", n, std::nullopt, std::nullopt});
  put_morphism(s, "a_mul", p.a_monoid.mul);
  put_morphism(s, "a_unit", p.a_monoid.unit);
  put_morphism(s, "a_comul", p.a_comonoid.comul);
  put_morphism(s, "a_counit", p.a_comonoid.counit);
  put_morphism(s, "t_mul", p.t_monoid.mul);
  put_morphism(s, "t_unit", p.t_monoid.unit);
  put_morphism(s, "t_comul", p.t_comonoid.comul);
  put_morphism(s, "t_counit", p.t_comonoid.counit);
  put_morphism(s, "twist", p.twist);
  s.roles["monoid"] = monoid_role(p.a_monoid.carrier, "a_mul", "a_unit");
  s.roles["comonoid"] = comonoid_role(p.a_comonoid.carrier, "a_comul", "a_counit");
  Json mdl;
  mdl["second"] = monoid_role(p.t_monoid.carrier, "t_mul", "t_unit");
  mdl["map"] = "twist";
  s.roles["mdl"] = mdl;
  Json cdl;
  cdl["second"] = comonoid_role(p.t_comonoid.carrier, "t_comul", "t_counit");
  cdl["map"] = "twist";
  s.roles["cdl"] = cdl;
  return s;
}

}  // namespace

StructureFile demo_structure(const std::string& name, std::size_t dim_l) {
  if (name == "kplusl") return structure_from_ddl(build_kplusl(dim_l));
  if (name == "kplusl-flip") return structure_from_ddl(with_flip(build_kplusl(dim_l)));
  if (name == "kplusl-coring") return structure_from_coring(kplusl_coring(dim_l));
  if (name == "trivial-ring-q") return structure_from_coring(build_trivial_ring(rationals_ring()));
  if (name == "trivial-ring-qxq") return structure_from_coring(build_trivial_ring(qxq_ring()));
  if (name == "trivial-ring-upper2") return structure_from_coring(build_trivial_ring(upper_triangular_ring()));
  if (name == "tensor-flip-pair") return flip_pair_structure(2);
  if (name.rfind("flip-c", 0) == 0) {
    const auto digits = name.substr(6);
    if (!digits.empty() && digits.size() < 4 && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      const auto n = std::stoul(digits);
      if (n >= 1) return structure_from_ddl(build_flip_bialgebra(n));
    }
  }
  throw UnknownDemo("unknown demo '" + name + "'");
}

StructureFile build_structure(const Workspace& ws, const std::string& construct) {
  const auto& cat = ws.cat();
  StructureFile s = ws.file();
  if (construct == "cowreath-product" || construct == "induced-comonoid") {
    const auto p = construct == "cowreath-product" ? cowreath_product(cat, cowreath_data(ws, true))
                                                   : induced_structures(cat, ddl_data(ws)).comonoid;
    const std::string prefix = construct == "cowreath-product" ? "product_" : "induced_";
    put_morphism(s, prefix + "comul", p.comul);
    put_morphism(s, prefix + "counit", p.counit);
    s.roles = Json::object();
    s.roles["comonoid"] = comonoid_role(p.carrier, prefix + "comul", prefix + "counit");
    return s;
  }
  if (construct == "wreath-product" || construct == "induced-monoid") {
    const auto p = construct == "wreath-product" ? wreath_product(cat, wreath_data(ws, true))
                                                 : induced_structures(cat, ddl_data(ws)).monoid;
    const std::string prefix = construct == "wreath-product" ? "product_" : "induced_";
    put_morphism(s, prefix + "mul", p.mul);
    put_morphism(s, prefix + "unit", p.unit);
    s.roles = Json::object();
    s.roles["monoid"] = monoid_role(p.carrier, prefix + "mul", prefix + "unit");
    return s;
  }
  if (construct == "universal-cowreath") {
    const auto& u = ws.role("universal-cowreath");
    const auto gamma = universal_cowreath_morphism(cat, cowreath_data(ws, true),
                                                   ws.comonoid(field(u, "source", "universal-cowreath")),
                                                   ws.morphism(string_field(u, "alpha", "universal-cowreath")),
                                                   ws.morphism(string_field(u, "beta", "universal-cowreath")));
    put_morphism(s, "gamma", gamma);
    return s;
  }
  if (construct == "universal-wreath") {
    const auto& u = ws.role("universal-wreath");
    const auto phi = universal_wreath_morphism(cat, wreath_data(ws, true),
                                               ws.monoid(field(u, "target", "universal-wreath")),
                                               ws.morphism(string_field(u, "phi", "universal-wreath")),
                                               ws.morphism(string_field(u, "psi", "universal-wreath")));
    put_morphism(s, "Phi", phi);
    return s;
  }
  throw SchemaError("unknown construct '" + construct + "'");
}

namespace {

int classify(const std::exception& e, std::ostream& err) {
  if (const auto* h = dynamic_cast<const HypothesisFailed*>(&e)) {
    err << "error: hypothesis failed:";
    for (const auto& n : h->names()) err << " " << n;
    err << "\n";
    return 1;
  }
  if (dynamic_cast<const PreconditionFailed*>(&e)) {
    err << "error: precondition failed: " << e.what() << "\n";
    return 1;
  }
  const char* kind = "input error";
  if (dynamic_cast<const ParseError*>(&e)) kind = "ParseError";
  else if (dynamic_cast<const SchemaError*>(&e)) kind = "SchemaError";
  else if (dynamic_cast<const MissingRole*>(&e)) kind = "MissingRole";
  else if (dynamic_cast<const UnknownDemo*>(&e)) kind = "UnknownDemo";
  else if (dynamic_cast<const DimensionMismatch*>(&e)) kind = "DimensionMismatch";
  else if (dynamic_cast<const KindMismatch*>(&e)) kind = "KindMismatch";
  else if (dynamic_cast<const NotBalanced*>(&e)) kind = "NotBalanced";
  else if (dynamic_cast<const InternalError*>(&e)) kind = "internal error";
  err << "error: " << kind << ": " << e.what() << "\n";
  return 2;
}

Workspace load(const std::string& path) { return Workspace(parse_structure(read_file(path))); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bimonoid and wreath checker over exact rationals", "bimon"};
  app.require_subcommand(1);

  std::string file, law, format = "text", construct, output, demo;
  bool timing = false;
  std::size_t dim_l = 1;

  auto* check = app.add_subcommand("check", "check a law against a structure file");
  check->add_option("file", file, "structure file")->required();
  check->add_option("--law", law, "law to check")->required()->check(CLI::IsMember(all_laws()));
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--timing", timing, "report elapsed time");

  auto* build = app.add_subcommand("build", "construct a derived structure");
  build->add_option("file", file, "structure file")->required();
  build->add_option("--construct", construct, "construction")
      ->required()
      ->check(CLI::IsMember({"cowreath-product", "wreath-product", "induced-monoid", "induced-comonoid",
                             "universal-cowreath", "universal-wreath"}));
  build->add_option("-o,--output", output, "output file");

  auto* demo_cmd = app.add_subcommand("demo", "emit a built-in example");
  demo_cmd->add_option("name", demo, "demo name")->required();
  demo_cmd->add_option("--dim-l", dim_l, "dimension of L for the k⊕L demos")->check(CLI::Range(1, 16));
  demo_cmd->add_option("-o,--output", output, "output file");

  auto* report = app.add_subcommand("report", "check every law the file has roles for");
  report->add_option("file", file, "structure file")->required();
  report->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  report->add_flag("--timing", timing, "report elapsed time");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };
    if (*check) {
      const auto ws = load(file);
      const auto r = run_law(ws, law);
      if (format == "json") {
        Json j;
        j["schema_version"] = 1;
        j["command"] = "check";
        j["file"] = file;
        j["backend"] = ws.file().backend;
        auto lj = law_json(r);
        for (auto it = lj.begin(); it != lj.end(); ++it) j[it.key()] = it.value();
        if (timing) j["elapsed_ms"] = elapsed_ms();
        out << j.dump(2) << "\n";
      } else {
        out << "check " << file << " --law " << law << "\n";
        text_law(out, r);
        if (timing) out << "elapsed: " << elapsed_ms() << " ms\n";
      }
      return law_exit(r);
    }
    if (*report) {
      const auto ws = load(file);
      std::vector<LawResult> results;
      int code = 0;
      for (const auto& l : available_laws(ws)) {
        try {
          results.push_back(run_law(ws, l));
        } catch (const PreconditionFailed& e) {
          LawResult failed;
          failed.law = l;
          AxiomResult a;
          a.name = "precondition";
          a.passed = false;
          a.note = e.what();
          CheckOutcome o;
          o.add(a);
          failed.sections.push_back({"precondition", o});
          results.push_back(failed);
        }
        code = std::max(code, law_exit(results.back()));
      }
      if (format == "json") {
        Json j;
        j["schema_version"] = 1;
        j["command"] = "report";
        j["file"] = file;
        j["backend"] = ws.file().backend;
        j["verdict"] = code == 0 ? "PASS" : "FAIL";
        Json laws = Json::array();
        for (const auto& r : results) laws.push_back(law_json(r));
        j["laws"] = std::move(laws);
        if (timing) j["elapsed_ms"] = elapsed_ms();
        out << j.dump(2) << "\n";
      } else {
        out << "report " << file << "\n";
        for (const auto& r : results) {
          out << "== " << r.law << "\n";
          text_law(out, r);
        }
        out << "overall: " << (code == 0 ? "PASS" : "FAIL") << "\n";
        if (timing) out << "elapsed: " << elapsed_ms() << " ms\n";
      }
      return code;
    }
    if (*build) {
      const auto ws = load(file);
      write_output(output, emit_structure(build_structure(ws, construct)), out);
      return 0;
    }
    if (*demo_cmd) {
      write_output(output, emit_structure(demo_structure(demo, dim_l)), out);
      return 0;
    }
  } catch (const std::exception& e) {
    return classify(e, err);
  }
  return 2;
}

}  // namespace bimon
