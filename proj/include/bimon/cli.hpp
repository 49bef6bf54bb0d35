#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bimon/structfile.hpp"

namespace bimon {

class UnknownDemo : public Error {
 public:
  using Error::Error;
};

struct Section {
  std::string title;
  CheckOutcome outcome;
  bool decisive = true;  // counts toward the verdict
};

struct LawResult {
  std::string law;
  std::vector<Section> sections;
  bool consistent = true;

  bool passed() const;
};

const std::vector<std::string>& all_laws();
// Laws whose roles are present in the workspace.
std::vector<std::string> available_laws(const Workspace& ws);
LawResult run_law(const Workspace& ws, const std::string& law);

StructureFile structure_from_ddl(const DoubleDL& d);
StructureFile structure_from_coring(const CoringCompatData& c);
StructureFile demo_structure(const std::string& name, std::size_t dim_l);
StructureFile build_structure(const Workspace& ws, const std::string& construct);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bimon
