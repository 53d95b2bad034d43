#ifndef MTT_CHECKER_H
#define MTT_CHECKER_H

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mtt/syntax.h"
#include "mtt/value.h"

namespace mtt {

struct ModuleState;

struct Evaluated {
  SemType type;
  Value value;
};

struct CheckedDefinition {
  std::string name;
  SemType type;
  Value value;
  Definition source;
};

/// Definitions in order, each checked against its evaluated annotation
/// before later ones could refer to it.
class CheckedModule {
 public:
  CheckedModule();

  const std::vector<CheckedDefinition> &definitions() const { return defs_; }
  const CheckedDefinition *find(std::string_view name) const;

 private:
  friend CheckedModule check_program(const std::vector<Definition> &defs);
  friend Evaluated evaluate(const TermPtr &term, const CheckedModule *module);

  std::shared_ptr<ModuleState> state_;
  std::vector<CheckedDefinition> defs_;
};

/// Throws TypeError at the offending span.
CheckedModule check_program(const std::vector<Definition> &defs);
/// Parses and checks; throws ParseError or TypeError.
CheckedModule check_source(std::string_view source);

/// Infers the type of a closed term (globals from `module` in scope) and
/// evaluates it.
Evaluated evaluate(const TermPtr &term, const CheckedModule *module = nullptr);
Evaluated evaluate(std::string_view source, const CheckedModule *module = nullptr);

}  // namespace mtt

#endif  // MTT_CHECKER_H
