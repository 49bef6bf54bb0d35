#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bimon/bimonoid.hpp"

namespace bimon {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class MissingRole : public Error {
 public:
  using Error::Error;
};

struct ObjectDecl {
  std::string name;
  std::size_t dim = 0;
  std::optional<LinMap> lact;
  std::optional<LinMap> ract;
};

struct MorphismDecl {
  std::string name;
  std::vector<std::string> dom;
  std::vector<std::string> cod;
  LinMap matrix;
  bool k_level = false;  // a plain 𝕜-linear map between Kronecker spaces
};

struct StructureFile {
  int schema_version = 1;
  std::string scalar = "rational";
  std::string backend = "kmod";  // kmod | rbimod
  std::optional<BaseRing> base_ring;
  std::vector<ObjectDecl> objects;
  std::vector<MorphismDecl> morphisms;
  Json roles = Json::object();

  friend bool operator==(const StructureFile& a, const StructureFile& b);
};

// Throws ParseError on malformed JSON and SchemaError on anything that does
// not fit the format, including matrices whose shapes disagree with their words.
StructureFile parse_structure(const std::string& text);
std::string emit_structure(const StructureFile& s);

Json matrix_json(const LinMap& m);

// A validated file with its category built and every morphism resolved.
class Workspace {
 public:
  explicit Workspace(StructureFile file);

  const StructureFile& file() const noexcept { return file_; }
  const Category& cat() const { return *cat_; }
  const BimoduleCategory* bimod() const { return bimod_.get(); }

  Obj word(const Json& names) const;
  Morphism morphism(const std::string& name) const;
  const LinMap& k_matrix(const std::string& name) const;

  bool has_role(const std::string& name) const { return file_.roles.contains(name); }
  const Json& role(const std::string& name) const;  // MissingRole

  MonoidData monoid(const Json& entry) const;
  ComonoidData comonoid(const Json& entry) const;
  CoringCompatData coring() const;

 private:
  const MorphismDecl& decl(const std::string& name) const;

  StructureFile file_;
  std::unique_ptr<ModuleCategory> kmod_;
  std::unique_ptr<BimoduleCategory> bimod_;
  const Category* cat_ = nullptr;
};

// Field accessors that turn missing or mistyped entries into SchemaError.
const Json& field(const Json& j, const std::string& key, const std::string& where);
std::string string_field(const Json& j, const std::string& key, const std::string& where);

}  // namespace bimon
