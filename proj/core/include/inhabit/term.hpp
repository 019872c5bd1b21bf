#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "inhabit/diagnostics.hpp"
#include "inhabit/instrument.hpp"

namespace inhabit {

// Index of a metavariable into the solver state arrays.
using MVarId = std::uint32_t;

struct TypeMVar;
using TypeMVarPtr = std::shared_ptr<const TypeMVar>;

struct MVarData;
using MVarRef = std::shared_ptr<const MVarData>;

// Shared immutable sequences. These are aliased freely between assignments,
// spines and telescope descriptors, so they must never be mutated after
// construction.
using NameSeq = std::shared_ptr<const std::vector<std::string>>;
using MVarSeq = std::shared_ptr<const std::vector<MVarRef>>;
using TypeSeq = std::shared_ptr<const std::vector<TypeMVarPtr>>;

NameSeq no_names();
MVarSeq no_mvars();
TypeSeq no_types();

inline NameSeq make_names(std::vector<std::string> names) {
  if (names.empty()) return no_names();
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}
inline MVarSeq make_mvars(std::vector<MVarRef> mvars) {
  if (mvars.empty()) return no_mvars();
  return std::make_shared<const std::vector<MVarRef>>(std::move(mvars));
}
inline TypeSeq make_types(std::vector<TypeMVarPtr> types) {
  if (types.empty()) return no_types();
  return std::make_shared<const std::vector<TypeMVarPtr>>(std::move(types));
}

// Persistent singly linked list, most recently pushed element first.
// Pushing never mutates the receiver; tails are shared.
template <class T>
class PList {
public:
  PList() = default;

  [[nodiscard]] PList push(T value) const {
    return PList(std::make_shared<const Node>(Node{std::move(value), node_}), size_ + 1);
  }

  const T& at(std::size_t index) const {
    const Node* n = node_.get();
    while (n != nullptr && index > 0) {
      n = n->next.get();
      --index;
    }
    if (n == nullptr) internal_error("PList: index out of range");
    return n->value;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // Front-to-back traversal: f(index, element).
  template <class F>
  void for_each(F&& f) const {
    std::size_t i = 0;
    for (const Node* n = node_.get(); n != nullptr; n = n->next.get()) f(i++, n->value);
  }

private:
  struct Node {
    T value;
    std::shared_ptr<const Node> next;
  };

  PList(std::shared_ptr<const Node> node, std::size_t size)
      : node_(std::move(node)), size_(size) {}

  std::shared_ptr<const Node> node_;
  std::size_t size_ = 0;
};

// A head variable: the block it was introduced by and the position inside it.
// Equality of heads is exactly componentwise equality of these two numbers.
// `uid` identifies the block object itself; two blocks that stand for the
// same binders share a uid, so `block_id == block_id` implies `uid == uid`
// unless a fresh-counter restart produced a spurious collision (audited in
// debug builds, see whnf_eq).
struct Var {
  std::uint64_t block_id = 0;
  std::uint32_t index = 0;
  std::uint64_t uid = 0;

  friend bool operator==(const Var& a, const Var& b) {
    return a.block_id == b.block_id && a.index == b.index;
  }
};

struct VarsBlock;
struct TermsView;
using Block = std::variant<VarsBlock, TermsView>;

// Explicit substitution: persistent list of blocks, innermost (most recently
// pushed) first. De Bruijn indices of assignments address positions in it.
using Es = PList<Block>;

struct Term;
struct Typ;

// An array of terms sharing one explicit substitution. Element i denotes
// Term{(*mvars)[i], es}.
struct TermsView {
  MVarSeq mvars = no_mvars();
  Es es;

  std::size_t size() const { return mvars->size(); }
  Term at(std::size_t i) const;
};

// An array of type metavariables sharing one explicit substitution.
struct TypesView {
  TypeSeq mvars = no_types();
  Es es;

  std::size_t size() const { return mvars->size(); }
  Typ at(std::size_t i) const;
};

// A block of variables pushed onto an ES as one unit. `arity` is the number
// of variables in the block, recorded for bounds checking; resolution itself
// never needs it.
struct VarsBlock {
  std::uint64_t block_id = 0;
  std::optional<TypesView> types;
  std::uint32_t arity = 0;
  std::uint64_t uid = 0;
};

std::uint64_t next_block_uid();

struct Term {
  MVarRef mvar;
  Es es;
};

struct Typ {
  TypeMVarPtr mvar;
  Es es;
};

inline Term TermsView::at(std::size_t i) const {
  if (i >= mvars->size()) internal_error("TermsView: index out of range");
  return Term{(*mvars)[i], es};
}
inline Typ TypesView::at(std::size_t i) const {
  if (i >= mvars->size()) internal_error("TypesView: index out of range");
  return Typ{(*mvars)[i], es};
}

// Describes an uncurried dependent function type: one input type per binder,
// and the output as a lambda term over those binders. preferred_names holds
// the binder names, one per input; they are display-only and never compared.
struct TypeMVar {
  TypeSeq inputs = no_types();
  MVarRef output;
  NameSeq preferred_names = no_names();

  std::size_t arity() const { return inputs->size(); }
};

// The local context of a metavariable: the telescope whose binders the hole
// may use as its head, innermost first. Entry 0 is the hole's own binder
// block when it has one.
using LCtx = PList<TypeMVarPtr>;

// A mutable hole in a term. `lctx` is the head-choice menu consulted by the
// search when the hole is unassigned; holes created pre-assigned (by the
// elaborator) carry an empty one. preferred_names are the hole's own binder
// names; their emptiness decides whether an argument block is pushed onto
// the ES when the hole's term is applied.
struct MVarData {
  MVarId id = 0;
  LCtx lctx;
  NameSeq preferred_names = no_names();
};

inline MVarRef make_mvar(MVarId id, LCtx lctx, NameSeq names) {
  return std::make_shared<const MVarData>(MVarData{id, std::move(lctx), std::move(names)});
}

// The unit of search choice: a head (position of a block in the ES, position
// within that block) plus one argument hole per input of the head's type.
struct Assignment {
  std::uint32_t debruijn = 0;
  std::uint32_t index = 0;
  MVarSeq args = no_mvars();

  Assignment(std::uint32_t debruijn_, std::uint32_t index_, MVarSeq args_)
      : debruijn(debruijn_), index(index_), args(std::move(args_)) {
    stats::detail::note_assignment_made();
  }
};

// Weak head normal form: a head variable, the head's type when its block is
// typed, and the argument spine.
struct WHNF {
  Var head;
  std::optional<Typ> type;
  TermsView args;
};

}  // namespace inhabit
