#pragma once
// Workspace files and the command-line front end.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twistcoh/error.hpp"
#include "twistcoh/ext.hpp"
#include "twistcoh/grp.hpp"

namespace twistcoh::cli {

using json = nlohmann::json;
using i64 = std::int64_t;

// Input problem located by a JSON pointer into the workspace.
class InputError : public Error {
 public:
  InputError(ErrorCode code, std::string pointer, const std::string& what)
      : Error(code, (pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct VerifyEntry {
  std::string check;
  std::vector<std::string> inputs;
};

struct Workspace {
  std::map<std::string, grp::GroupPtr> groups;
  std::map<std::string, grp::ProductGroup> products;  // groups declared as direct products
  std::map<std::string, grp::GroupHom> maps;
  std::map<std::string, coh::Cochain> cochains;
  std::map<std::string, std::string> cochain_groups;  // cochain -> declaring group name
  std::map<std::string, std::shared_ptr<const ext::CentralExtension>> extensions;
  std::map<std::string, ext::RepresentationGroup> repgroups;
  std::vector<VerifyEntry> verify;
  json provenance;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string hash;  // FNV-1a 64 of the input bytes, hex

  const grp::GroupPtr& group(const std::string& name, const std::string& pointer = {}) const;
  const coh::Cochain& cochain(const std::string& name, const std::string& pointer = {}) const;
  const ext::CentralExtension& extension(const std::string& name, const std::string& pointer = {}) const;
  const ext::RepresentationGroup& repgroup(const std::string& name, const std::string& pointer = {}) const;
};

std::string fnv1a_hex(const std::string& bytes);
Workspace parse_workspace(const std::string& text);
// "-" reads standard input.
Workspace load_workspace(const std::string& path);
std::string read_input(const std::string& path);

// Runs one command line (without the program name). Writes the report to
// `out` (or the --output file) and diagnostics to `err`. Returns the exit code:
// 0 all checks pass, 1 mathematical mismatch, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Exit code for an error raised while running a command.
int exit_code(ErrorCode code);

}  // namespace twistcoh::cli
