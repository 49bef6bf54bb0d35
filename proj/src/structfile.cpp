#include "bimon/structfile.hpp"

#include <algorithm>
#include <map>

namespace bimon {

bool operator==(const StructureFile& a, const StructureFile& b) { return emit_structure(a) == emit_structure(b); }

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const std::string& key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_string()) throw SchemaError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

namespace {

std::size_t dim_field(const Json& j, const std::string& where) {
  const auto& v = field(j, "dim", where);
  if (!v.is_number_unsigned()) throw SchemaError(where + ".dim: expected a nonnegative integer");
  return v.get<std::size_t>();
}

std::vector<std::string> word_field(const Json& j, const std::string& key, const std::string& where) {
  const auto& v = field(j, key, where);
  if (!v.is_array()) throw SchemaError(where + "." + key + ": expected a list of object names");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw SchemaError(where + "." + key + ": expected a list of object names");
    out.push_back(e.get<std::string>());
  }
  return out;
}

LinMap parse_matrix(const Json& v, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + ": matrix must be a list of rows");
  if (v.size() != rows)
    throw SchemaError(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
  LinMap m({cols, ""}, {rows, ""});
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = v[r];
    if (!row.is_array() || row.size() != cols)
      throw SchemaError(where + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = row[c];
      if (!e.is_string()) throw SchemaError(where + ": entry (" + std::to_string(r) + "," + std::to_string(c) +
                                            ") must be a rational string");
      try {
        m(r, c) = parse_rational(e.get<std::string>());
      } catch (const std::invalid_argument& ex) {
        throw SchemaError(where + ": entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + ex.what());
      }
    }
  }
  return m;
}

Json word_json(const std::vector<std::string>& w) {
  Json j = Json::array();
  for (const auto& s : w) j.push_back(s);
  return j;
}

}  // namespace

Json matrix_json(const LinMap& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

StructureFile parse_structure(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw SchemaError("top level: expected an object");
  StructureFile s;
  const auto& version = field(j, "schema_version", "top level");
  if (!version.is_number_integer() || version.get<int>() != 1) throw SchemaError("schema_version: only 1 is supported");
  s.scalar = string_field(j, "scalar", "top level");
  if (s.scalar != "rational") throw SchemaError("scalar: only 'rational' is supported");
  s.backend = string_field(j, "backend", "top level");
  if (s.backend != "kmod" && s.backend != "rbimod") throw SchemaError("backend: expected 'kmod' or 'rbimod'");

  std::map<std::string, std::size_t> dims;
  if (s.backend == "rbimod") {
    const auto& br = field(j, "base_ring", "top level");
    const auto n = dim_field(br, "base_ring");
    if (n == 0) throw SchemaError("base_ring.dim: must be positive");
    s.base_ring = make_base_ring(parse_matrix(field(br, "mul", "base_ring"), n, n * n, "base_ring.mul"),
                                 parse_matrix(field(br, "unit", "base_ring"), n, 1, "base_ring.unit"));
    dims["R"] = n;
  } else if (j.contains("base_ring")) {
    throw SchemaError("base_ring: only allowed with backend 'rbimod'");
  }

  const auto& objects = field(j, "objects", "top level");
  if (!objects.is_object()) throw SchemaError("objects: expected a map from names to declarations");
  for (const auto& [name, decl] : objects.items()) {
    const std::string where = "objects." + name;
    if (name.empty() || name.find("⊗") != std::string::npos) throw SchemaError(where + ": invalid name");
    if (name == "R" && s.backend == "rbimod") throw SchemaError(where + ": R is reserved for the base ring");
    ObjectDecl o;
    o.name = name;
    o.dim = dim_field(decl, where);
    if (decl.contains("lact") || decl.contains("ract")) {
      if (s.backend != "rbimod") throw SchemaError(where + ": actions are only allowed with backend 'rbimod'");
      const auto n = s.base_ring->dim();
      o.lact = parse_matrix(field(decl, "lact", where), o.dim, n * o.dim, where + ".lact");
      o.ract = parse_matrix(field(decl, "ract", where), o.dim, o.dim * n, where + ".ract");
    }
    dims[name] = o.dim;
    s.objects.push_back(std::move(o));
  }

  const auto& morphisms = field(j, "morphisms", "top level");
  if (!morphisms.is_object()) throw SchemaError("morphisms: expected a map from names to declarations");
  for (const auto& [name, decl] : morphisms.items()) {
    const std::string where = "morphisms." + name;
    MorphismDecl m;
    m.name = name;
    m.dom = word_field(decl, "dom", where);
    m.cod = word_field(decl, "cod", where);
    if (decl.contains("level")) {
      if (string_field(decl, "level", where) != "k") throw SchemaError(where + ".level: only 'k' is allowed");
      m.k_level = true;
    }
    // Shapes of category-level maps in rbimod depend on quotient dimensions,
    // which the workspace checks; here only the raw row/column structure is read.
    auto kdim = [&](const std::vector<std::string>& w, const std::string& key) {
      std::size_t d = 1;
      for (const auto& a : w) {
        auto it = dims.find(a);
        if (it == dims.end()) throw SchemaError(where + "." + key + ": unknown object '" + a + "'");
        d *= it->second;
      }
      return d;
    };
    const auto& mat = field(decl, "matrix", where);
    std::size_t rows = kdim(m.cod, "cod"), cols = kdim(m.dom, "dom");
    if (s.backend == "rbimod" && !m.k_level) {
      if (!mat.is_array()) throw SchemaError(where + ": matrix must be a list of rows");
      rows = mat.size();
      cols = rows == 0 ? 0 : (mat[0].is_array() ? mat[0].size() : 0);
    }
    m.matrix = parse_matrix(mat, rows, cols, where + ".matrix");
    s.morphisms.push_back(std::move(m));
  }

  if (j.contains("roles")) {
    if (!j.at("roles").is_object()) throw SchemaError("roles: expected an object");
    s.roles = j.at("roles");
  }
  Workspace validate(s);
  return s;
}

namespace {

// Like dump(2), but arrays of scalars stay on one line so matrix rows read as rows.
void pretty(std::string& out, const Json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(k).dump() + ": ";
      pretty(out, v, depth + 1);
    }
    out += "\n" + std::string(2 * depth, ' ') + "}";
  } else if (j.is_array() && !j.empty()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      pretty(out, j[i], depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * depth, ' ') + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string emit_structure(const StructureFile& s) {
  Json j;
  j["schema_version"] = s.schema_version;
  j["scalar"] = s.scalar;
  j["backend"] = s.backend;
  if (s.base_ring) {
    Json br;
    br["dim"] = s.base_ring->dim();
    br["mul"] = matrix_json(s.base_ring->mul);
    br["unit"] = matrix_json(s.base_ring->unit);
    j["base_ring"] = std::move(br);
  }
  Json objects = Json::object();
  for (const auto& o : s.objects) {
    Json d;
    d["dim"] = o.dim;
    if (o.lact) d["lact"] = matrix_json(*o.lact);
    if (o.ract) d["ract"] = matrix_json(*o.ract);
    objects[o.name] = std::move(d);
  }
  j["objects"] = std::move(objects);
  Json morphisms = Json::object();
  for (const auto& m : s.morphisms) {
    Json d;
    d["dom"] = word_json(m.dom);
    d["cod"] = word_json(m.cod);
    if (m.k_level) d["level"] = "k";
    d["matrix"] = matrix_json(m.matrix);
    morphisms[m.name] = std::move(d);
  }
  j["morphisms"] = std::move(morphisms);
  j["roles"] = s.roles;
  std::string out;
  pretty(out, j, 0);
  return out + "\n";
}

Workspace::Workspace(StructureFile file) : file_(std::move(file)) {
  if (file_.backend == "kmod") {
    kmod_ = std::make_unique<ModuleCategory>();
    cat_ = kmod_.get();
  } else {
    if (!file_.base_ring) throw SchemaError("backend 'rbimod' needs a base_ring");
    const auto ring_check = check_base_ring(*file_.base_ring);
    if (!ring_check.passed()) throw SchemaError("base_ring fails " + ring_check.failed_names().front());
    bimod_ = std::make_unique<BimoduleCategory>(*file_.base_ring);
    cat_ = bimod_.get();
    for (const auto& o : file_.objects) {
      if (o.lact) {
        try {
          bimod_->add_bimodule(o.name, {{o.dim, o.name}, *o.lact, *o.ract});
        } catch (const PreconditionFailed& e) {
          throw SchemaError("objects." + o.name + ": " + e.what());
        }
        continue;
      }
      // Without explicit actions an object must be the carrier of the coring
      // role and is made a bimodule by restriction along ι.
      if (!has_role("coring") || !file_.roles["coring"].is_object() ||
          file_.roles["coring"].value("carrier", std::string{}) != o.name)
        throw SchemaError("objects." + o.name + ": rbimod objects need lact/ract unless they carry the coring role");
      const auto c = coring();
      if (c.ring_unit.rows() != o.dim) throw SchemaError("objects." + o.name + ": dim disagrees with the ring");
      Bimodule b = restricted_bimodule(c);
      b.carrier.label = o.name;
      try {
        bimod_->add_bimodule(o.name, b);
      } catch (const PreconditionFailed& e) {
        throw SchemaError("objects." + o.name + " (restricted along ι): " + e.what());
      }
    }
  }
  for (const auto& m : file_.morphisms) {
    if (m.k_level) continue;
    const Obj dom = word(word_json(m.dom)), cod = word(word_json(m.cod));
    if (m.matrix.rows() != cat_->dim(cod) || m.matrix.cols() != cat_->dim(dom))
      throw SchemaError("morphisms." + m.name + ": matrix is " + std::to_string(m.matrix.rows()) + "x" +
                        std::to_string(m.matrix.cols()) + " but " + dom.label() + " → " + cod.label() + " needs " +
                        std::to_string(cat_->dim(cod)) + "x" + std::to_string(cat_->dim(dom)));
  }
}

Obj Workspace::word(const Json& names) const {
  if (!names.is_array()) throw SchemaError("expected a list of object names");
  Obj out;
  for (const auto& n : names) {
    if (!n.is_string()) throw SchemaError("expected a list of object names");
    const auto name = n.get<std::string>();
    if (bimod_) {
      if (!bimod_->has_bimodule(name)) throw SchemaError("unknown object '" + name + "'");
      out = out * bimod_->atom(name);
      continue;
    }
    bool found = false;
    for (const auto& o : file_.objects)
      if (o.name == name) {
        out = out * Obj(FreeModule{o.dim, o.name});
        found = true;
      }
    if (!found) throw SchemaError("unknown object '" + name + "'");
  }
  return out;
}

const MorphismDecl& Workspace::decl(const std::string& name) const {
  for (const auto& m : file_.morphisms)
    if (m.name == name) return m;
  throw SchemaError("unknown morphism '" + name + "'");
}

Morphism Workspace::morphism(const std::string& name) const {
  const auto& m = decl(name);
  if (m.k_level) throw SchemaError("morphism '" + name + "' is a 𝕜-level map, not a morphism of the category");
  return cat_->make(word(word_json(m.dom)), word(word_json(m.cod)), m.matrix);
}

const LinMap& Workspace::k_matrix(const std::string& name) const {
  const auto& m = decl(name);
  if (!m.k_level) throw SchemaError("morphism '" + name + "' must be declared with level 'k'");
  return m.matrix;
}

const Json& Workspace::role(const std::string& name) const {
  if (!has_role(name)) throw MissingRole("no '" + name + "' role in the structure file");
  return file_.roles.at(name);
}

MonoidData Workspace::monoid(const Json& entry) const {
  const Obj a = word(field(entry, "carrier", "monoid"));
  return {a, morphism(string_field(entry, "mul", "monoid")), morphism(string_field(entry, "unit", "monoid"))};
}

ComonoidData Workspace::comonoid(const Json& entry) const {
  const Obj c = word(field(entry, "carrier", "comonoid"));
  return {c, morphism(string_field(entry, "comul", "comonoid")), morphism(string_field(entry, "counit", "comonoid"))};
}

CoringCompatData Workspace::coring() const {
  const auto& r = role("coring");
  if (!file_.base_ring) throw SchemaError("coring role needs backend 'rbimod'");
  CoringCompatData c;
  c.base = *file_.base_ring;
  c.ring_mul = k_matrix(string_field(r, "ring_mul", "coring"));
  c.ring_unit = k_matrix(string_field(r, "ring_unit", "coring"));
  c.iota = k_matrix(string_field(r, "iota", "coring"));
  c.comul = decl(string_field(r, "comul", "coring")).matrix;
  c.counit = decl(string_field(r, "counit", "coring")).matrix;
  c.hbar = decl(string_field(r, "hbar", "coring")).matrix;
  return c;
}

}  // namespace bimon
