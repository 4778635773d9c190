#pragma once

// Tree-like Horn programs and their strong-computation semantics.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hornlog/syntax.hpp"

namespace hornlog {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct ProgramEdge {
  VertexId parent;
  VertexId child;
  HornFormula label;  // always a plain implication
};

/// A rooted binary tree whose edges carry plain Horn implications. Both
/// edges leaving a divergent vertex share one antecedent.
class HornProgram {
 public:
  /// The single-vertex program.
  HornProgram();

  static HornProgram single_edge(HornFormula label);
  /// Builds and validates an arbitrary program over vertices 0..vertex_count-1.
  /// Throws std::invalid_argument if the edges do not form a binary tree
  /// rooted at `root`, or break the edge-label invariants.
  static HornProgram from_parts(std::size_t vertex_count, VertexId root, std::vector<ProgramEdge> edges);

  /// Adds a fresh child below `parent`. Throws std::invalid_argument on a
  /// ⊕-label, a third child, or a second child whose antecedent differs.
  VertexId add_child(VertexId parent, HornFormula label);

  VertexId root() const noexcept { return root_; }
  std::size_t vertex_count() const noexcept { return out_.size(); }
  const std::vector<ProgramEdge>& edges() const noexcept { return edges_; }
  const ProgramEdge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const EdgeId> outgoing(VertexId v) const { return out_.at(v); }
  std::optional<EdgeId> incoming(VertexId v) const { return in_.at(v); }

  bool is_leaf(VertexId v) const { return out_.at(v).empty(); }
  bool is_divergent(VertexId v) const { return out_.at(v).size() == 2; }
  /// Leaves in preorder.
  std::vector<VertexId> leaves() const;
  /// Vertices in preorder (root first, children in edge order).
  std::vector<VertexId> preorder() const;
  /// Number of edges on the longest root-to-leaf path.
  std::size_t depth() const;
  /// Vertices on the path from the root to `v`, inclusive.
  std::vector<VertexId> path_to(VertexId v) const;

 private:
  void check_new_edge(VertexId parent, const HornFormula& label) const;

  VertexId root_ = 0;
  std::vector<ProgramEdge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::optional<EdgeId>> in_;
};

/// Structural equality: same shape and labels, children in edge order.
bool same_tree(const HornProgram& a, const HornProgram& b);

/// OUT(P, W, v) for every vertex; absent marks an undefined value.
struct Evaluation {
  std::vector<std::optional<SimpleProduct>> out;

  const std::optional<SimpleProduct>& at(VertexId v) const { return out.at(v); }
  bool fully_defined() const;
};

Evaluation evaluate(const HornProgram& program, const SimpleProduct& input);

/// The formula used on an edge: its own label, or X -o (Y1 + Y2) for both
/// edges of a divergent vertex (left alternative from the first edge).
HornFormula used_formula(const HornProgram& program, EdgeId e);

enum class ViolationKind { LeafMismatch, ForeignFormula, LinearCount };

struct Violation {
  ViolationKind kind;
  std::optional<VertexId> vertex;       // LeafMismatch: the leaf; LinearCount: leaf ending the path
  std::optional<EdgeId> edge;           // ForeignFormula
  std::optional<HornFormula> formula;   // ForeignFormula, LinearCount
  std::optional<SimpleProduct> actual;  // LeafMismatch: OUT at the leaf, absent when undefined
  std::size_t count = 0;                // LinearCount: uses on the path
  std::size_t expected = 0;             // LinearCount: occurrences in the linear zone

  std::string describe() const;
};

struct SolutionReport {
  std::vector<Violation> violations;

  bool accepted() const noexcept { return violations.empty(); }
  std::string describe() const;
};

/// Checks that every leaf computes the goal, every used formula belongs to
/// the sequent, and each linear-zone occurrence is used exactly once on
/// every root-to-leaf path. Banged formulas may be used any number of times;
/// a formula present in both zones absorbs surplus uses in the banged zone.
SolutionReport verify_strong_solution(const HornProgram& program, const HornSequent& sequent);

/// Glues a fresh copy of `second` onto every leaf of `first`.
HornProgram compose(const HornProgram& first, const HornProgram& second);

/// New root with edges x -o y1 into a copy of `left` and x -o y2 into a copy
/// of `right`.
HornProgram strong_fork(const SimpleProduct& x, const SimpleProduct& y1, const SimpleProduct& y2,
                        const HornProgram& left, const HornProgram& right);

/// Exhaustive AND/OR search for a strong-solution witness of depth at most
/// `max_depth`. Plain applications are tried before ⊕-branching, candidates
/// in order of their printed form. The witness always passes
/// verify_strong_solution. Absence is not a proof of non-derivability.
/// Throws std::invalid_argument when max_depth is zero.
std::optional<HornProgram> prove_bounded(const HornSequent& sequent, std::size_t max_depth);

}  // namespace hornlog
