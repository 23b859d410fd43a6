#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringsynth/formula.hpp"

namespace ringsynth {

// Distinguished token-ring signal names.
inline constexpr const char* kTok = "tok";
inline constexpr const char* kSnd = "snd";
inline constexpr const char* kRcv = "rcv";

enum class Role { GenericProcess, ZeroProcess, MonolithicAfterHub };
enum class Shape { OneIndexed, TwoIndexed, Mixed };

const char* to_string(Role r);
const char* to_string(Shape s);

struct NamedFormula {
  std::string name;
  Fml formula = nullptr;
};

// A parameterized specification: signal declarations plus assumption and
// guarantee conjuncts. Localized specs (outputs contain tok and snd) are
// read as  forall i. (ass \ A5 -> TR(i)) & (ass & A5 -> gua(i)),
// pre-localization specs as  (forall i. ass(i)) -> (forall i. gua(i)).
struct ParamSpec {
  std::vector<std::string> inputs_local;
  std::vector<std::string> inputs_global;
  std::vector<std::string> outputs;         // per-process outputs
  std::vector<std::string> outputs_global;  // only before output localization
  std::vector<NamedFormula> assumptions;
  std::vector<NamedFormula> guarantees;
  Role role = Role::GenericProcess;
  Shape shape = Shape::OneIndexed;

  bool declares_output(const std::string& name) const;
  bool declares_input(const std::string& name) const;
  bool is_localized() const;  // outputs contain tok and snd

  // The token-ring guarantees over this spec's interface, in the index form
  // matching the role. Only meaningful for localized specs.
  std::vector<NamedFormula> tr_formulas() const;

  // A5-style token-arrival assumption (G F tok), if present.
  std::optional<NamedFormula> token_liveness() const;
  // Assumptions without the token-liveness conjunct (the TR-part guard).
  std::vector<NamedFormula> base_assumptions() const;

  const NamedFormula* find_guarantee(const std::string& name) const;
  const NamedFormula* find_assumption(const std::string& name) const;
};

// Validates declarations and atom usage; throws Error on violations.
// Recomputes the shape field.
void validate_spec(ParamSpec& spec);

// Rule for rebuilding a global output from per-process outputs after
// synthesis.
enum class GlobalRule {
  ExistsTokenAndLocal,  // g := exists i. tok_i & g_i
  MasterIndex,          // g := i whenever g_i is high
};

struct OutputLocalization {
  std::vector<std::pair<std::string, GlobalRule>> rules;
};

// Rewrites the listed global outputs into indexed local outputs and records
// how to reassemble them. Names with only indexed occurrences (equality-style
// uses such as hmaster) get the master-index rule.
std::pair<ParamSpec, OutputLocalization> localize_outputs(const ParamSpec& spec,
                                                          const std::vector<std::string>& globals);

// Rewrites a spec with a global assumption quantifier into the one-indexed
// guarded form: adds the token-liveness assumption, the token/send outputs
// and the grant-to-token link guarantee (G12 for AMBA-style grants).
ParamSpec localize_assumptions(const ParamSpec& spec);

// Derives the 0-process spec from the localized generic spec (drops G10.1 and
// G11.1, adds no_req with A6, G10.2 and G11.2).
ParamSpec specialize_zero(const ParamSpec& spec);

// Synchronous hub abstraction: erases index tags, makes rcv an ordinary
// input and adds the token-handover safety assumption G(tok -> !rcv).
// Token arrival stays as the retained G F tok premise of the guarantee part.
ParamSpec hub_reduce(const ParamSpec& spec);

// Spec-file text for a ParamSpec (reparseable; inverse of parse_spec on ASTs).
std::string pretty_print(const ParamSpec& spec);

}  // namespace ringsynth
