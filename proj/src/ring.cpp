#include "polarcalc/ring.hpp"

#include <algorithm>
#include <set>

namespace polarcalc {

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> variables,
                                       std::optional<std::size_t> parameter_index) {
  if (variables.empty()) throw ValidationError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw ValidationError("empty variable name");
    if (!seen.insert(v).second)
      throw ValidationError("duplicate variable name: " + v);
  }
  if (parameter_index && *parameter_index >= variables.size())
    throw ValidationError("parameter index out of range");
  return std::shared_ptr<const Ring>(
      new Ring(std::move(variables), parameter_index));
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::shared_ptr<const Ring> Ring::extended(
    const std::vector<std::string>& extra) const {
  std::vector<std::string> vars = vars_;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make(std::move(vars), param_);
}

std::shared_ptr<const Ring> Ring::restricted(
    const std::vector<std::string>& keep) const {
  std::set<std::string> wanted(keep.begin(), keep.end());
  std::vector<std::string> vars;
  std::optional<std::size_t> param;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!wanted.count(vars_[i])) continue;
    if (param_ && *param_ == i) param = vars.size();
    vars.push_back(vars_[i]);
  }
  if (vars.size() != wanted.size())
    throw ValidationError("restricted: some names are not ring variables");
  return make(std::move(vars), param);
}

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
  if (!a.same_as(b)) throw RingMismatchError(where);
}

}  // namespace polarcalc
