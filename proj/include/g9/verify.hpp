#ifndef G9_VERIFY_HPP
#define G9_VERIFY_HPP

// The full verification suite: every computed object is compared with the
// published values in g9/reference.hpp using exact equality.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "g9/covariants.hpp"
#include "g9/group.hpp"
#include "g9/reps.hpp"

namespace g9 {

struct CheckResult {
  std::string family;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::vector<std::string> only;  // empty runs every family
  // Test fixture: perturbs Delta inside the invariant identity checks.
  bool corrupt_delta = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  const CheckResult* first_failure() const;
};

// Family names in execution order.
const std::vector<std::string>& verify_families();

// Lazily built shared state: the group, the representations, and one
// covariant engine plus generator set per representation.
class Workspace {
 public:
  Workspace();
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;
  const GroupTable& group() { return group_; }
  const std::vector<Representation>& reps() { return reps_; }
  const Representation& rep(int id);
  CovariantEngine& engine(int id);
  const GeneratorSet& generators(int id);

 private:
  GroupTable group_;
  std::vector<Representation> reps_;
  std::vector<std::unique_ptr<CovariantEngine>> engines_;
  std::vector<std::optional<GeneratorSet>> gens_;
};

VerifyReport run_verification(Workspace& ws, const VerifyOptions& opt);

// Inverse permutation search: for each computed row, the 1-based index of
// the reference row it equals, or 0.
std::vector<int> match_reference_rows(const CharacterTable& ct);

}  // namespace g9

#endif  // G9_VERIFY_HPP
