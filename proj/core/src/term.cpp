#include "inhabit/term.hpp"

namespace inhabit {

NameSeq no_names() {
  static const NameSeq empty = std::make_shared<const std::vector<std::string>>();
  return empty;
}

MVarSeq no_mvars() {
  static const MVarSeq empty = std::make_shared<const std::vector<MVarRef>>();
  return empty;
}

TypeSeq no_types() {
  static const TypeSeq empty = std::make_shared<const std::vector<TypeMVarPtr>>();
  return empty;
}

std::uint64_t next_block_uid() {
  thread_local std::uint64_t counter = 0;
  return ++counter;
}

}  // namespace inhabit
