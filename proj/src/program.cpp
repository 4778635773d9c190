#include "hornlog/program.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace hornlog {

HornProgram::HornProgram() : out_(1), in_(1) {}

HornProgram HornProgram::single_edge(HornFormula label) {
  HornProgram p;
  p.add_child(p.root(), std::move(label));
  return p;
}

void HornProgram::check_new_edge(VertexId parent, const HornFormula& label) const {
  if (parent >= out_.size()) throw std::invalid_argument("edge from unknown vertex " + std::to_string(parent));
  if (label.is_oplus()) throw std::invalid_argument("program edges carry plain implications, got " + to_string(label));
  const auto& siblings = out_[parent];
  if (siblings.size() >= 2) throw std::invalid_argument("vertex " + std::to_string(parent) + " already has two children");
  if (siblings.size() == 1 && edges_[siblings[0]].label.antecedent() != label.antecedent()) {
    throw std::invalid_argument("divergent vertex " + std::to_string(parent) + " has edges with different antecedents: " +
                                to_string(edges_[siblings[0]].label) + " and " + to_string(label));
  }
}

VertexId HornProgram::add_child(VertexId parent, HornFormula label) {
  check_new_edge(parent, label);
  const VertexId child = out_.size();
  out_.emplace_back();
  in_.push_back(edges_.size());
  out_[parent].push_back(edges_.size());
  edges_.push_back(ProgramEdge{parent, child, std::move(label)});
  return child;
}

HornProgram HornProgram::from_parts(std::size_t vertex_count, VertexId root, std::vector<ProgramEdge> edges) {
  if (vertex_count == 0) throw std::invalid_argument("a program needs at least one vertex");
  if (root >= vertex_count) throw std::invalid_argument("root " + std::to_string(root) + " is not a vertex");
  HornProgram p;
  p.root_ = root;
  p.out_.assign(vertex_count, {});
  p.in_.assign(vertex_count, std::nullopt);
  for (auto& e : edges) {
    if (e.child >= vertex_count) throw std::invalid_argument("edge to unknown vertex " + std::to_string(e.child));
    if (e.child == root) throw std::invalid_argument("the root cannot have an incoming edge");
    if (p.in_[e.child]) throw std::invalid_argument("vertex " + std::to_string(e.child) + " has two parents");
    p.check_new_edge(e.parent, e.label);
    p.in_[e.child] = p.edges_.size();
    p.out_[e.parent].push_back(p.edges_.size());
    p.edges_.push_back(std::move(e));
  }
  if (p.preorder().size() != vertex_count) throw std::invalid_argument("not every vertex is reachable from the root");
  return p;
}

std::vector<VertexId> HornProgram::preorder() const {
  std::vector<VertexId> order;
  std::vector<VertexId> stack{root_};
  std::vector<bool> seen(out_.size(), false);
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    order.push_back(v);
    for (auto it = out_[v].rbegin(); it != out_[v].rend(); ++it) stack.push_back(edges_[*it].child);
  }
  return order;
}

std::vector<VertexId> HornProgram::leaves() const {
  std::vector<VertexId> out;
  for (VertexId v : preorder()) {
    if (out_[v].empty()) out.push_back(v);
  }
  return out;
}

std::size_t HornProgram::depth() const {
  std::vector<std::size_t> level(out_.size(), 0);
  std::size_t deepest = 0;
  for (VertexId v : preorder()) {
    for (EdgeId e : out_[v]) {
      level[edges_[e].child] = level[v] + 1;
      deepest = std::max(deepest, level[v] + 1);
    }
  }
  return deepest;
}

std::vector<VertexId> HornProgram::path_to(VertexId v) const {
  std::vector<VertexId> path{v};
  while (auto e = in_.at(path.back())) path.push_back(edges_[*e].parent);
  std::reverse(path.begin(), path.end());
  return path;
}

bool same_tree(const HornProgram& a, const HornProgram& b) {
  std::function<bool(VertexId, VertexId)> same = [&](VertexId x, VertexId y) {
    auto ox = a.outgoing(x);
    auto oy = b.outgoing(y);
    if (ox.size() != oy.size()) return false;
    for (std::size_t i = 0; i < ox.size(); ++i) {
      if (a.edge(ox[i]).label != b.edge(oy[i]).label) return false;
      if (!same(a.edge(ox[i]).child, b.edge(oy[i]).child)) return false;
    }
    return true;
  };
  return a.vertex_count() == b.vertex_count() && same(a.root(), b.root());
}

// ---------------------------------------------------------------------------
// Evaluation

bool Evaluation::fully_defined() const {
  return std::all_of(out.begin(), out.end(), [](const auto& v) { return v.has_value(); });
}

Evaluation evaluate(const HornProgram& program, const SimpleProduct& input) {
  Evaluation result;
  result.out.assign(program.vertex_count(), std::nullopt);
  result.out[program.root()] = input;
  for (VertexId v : program.preorder()) {
    if (!result.out[v]) continue;
    for (EdgeId e : program.outgoing(v)) {
      const auto& edge = program.edge(e);
      result.out[edge.child] = apply_implication(*result.out[v], edge.label);
    }
  }
  return result;
}

HornFormula used_formula(const HornProgram& program, EdgeId e) {
  const auto& edge = program.edge(e);
  if (!program.is_divergent(edge.parent)) return edge.label;
  const auto pair = program.outgoing(edge.parent);
  const auto& first = program.edge(pair[0]).label;
  const auto& second = program.edge(pair[1]).label;
  return HornFormula::oplus(first.antecedent(), first.consequent(), second.consequent());
}

// ---------------------------------------------------------------------------
// Strong-solution verification

std::string Violation::describe() const {
  switch (kind) {
    case ViolationKind::LeafMismatch:
      return "LEAF_MISMATCH vertex " + std::to_string(vertex.value_or(0)) + ": OUT = " +
             (actual ? to_string(*actual) : std::string("undefined"));
    case ViolationKind::ForeignFormula:
      return "FOREIGN_FORMULA edge " + std::to_string(edge.value_or(0)) + ": " +
             (formula ? to_string(*formula) : std::string("?")) + " is not in the sequent";
    case ViolationKind::LinearCount:
      return "LINEAR_COUNT path to vertex " + std::to_string(vertex.value_or(0)) + ": " +
             (formula ? to_string(*formula) : std::string("?")) + " used " + std::to_string(count) +
             " times, linear zone holds " + std::to_string(expected);
  }
  return "violation";
}

std::string SolutionReport::describe() const {
  if (violations.empty()) return "ACCEPT\n";
  std::string out;
  for (const auto& v : violations) out += v.describe() + "\n";
  return out;
}

SolutionReport verify_strong_solution(const HornProgram& program, const HornSequent& sequent) {
  SolutionReport report;
  const Evaluation eval = evaluate(program, sequent.input);
  for (VertexId leaf : program.leaves()) {
    const auto& out = eval.at(leaf);
    if (!out || *out != sequent.goal) {
      Violation v{};
      v.kind = ViolationKind::LeafMismatch;
      v.vertex = leaf;
      v.actual = out;
      report.violations.push_back(std::move(v));
    }
  }

  std::vector<HornFormula> used(program.edges().size(), HornFormula::plain(sequent.goal, sequent.goal));
  for (EdgeId e = 0; e < program.edges().size(); ++e) {
    used[e] = used_formula(program, e).canonical();
    if (occurrences(sequent.linear, used[e]) == 0 && occurrences(sequent.banged, used[e]) == 0) {
      Violation v{};
      v.kind = ViolationKind::ForeignFormula;
      v.edge = e;
      v.formula = used_formula(program, e);
      report.violations.push_back(std::move(v));
    }
  }

  std::map<HornFormula, std::size_t> required;
  for (const auto& f : sequent.linear) ++required[f.canonical()];
  std::map<HornFormula, bool> also_banged;
  for (const auto& [f, _] : required) also_banged[f] = occurrences(sequent.banged, f) > 0;

  std::map<HornFormula, std::size_t> uses;
  std::function<void(VertexId)> walk = [&](VertexId v) {
    if (program.is_leaf(v)) {
      for (const auto& [f, expected] : required) {
        const auto it = uses.find(f);
        const std::size_t count = it == uses.end() ? 0 : it->second;
        const bool ok = also_banged[f] ? count >= expected : count == expected;
        if (!ok) {
          Violation violation{};
          violation.kind = ViolationKind::LinearCount;
          violation.vertex = v;
          violation.formula = f;
          violation.count = count;
          violation.expected = expected;
          report.violations.push_back(std::move(violation));
        }
      }
      return;
    }
    for (EdgeId e : program.outgoing(v)) {
      ++uses[used[e]];
      walk(program.edge(e).child);
      --uses[used[e]];
    }
  };
  walk(program.root());
  return report;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

// Copies `sub` below vertex `at` of `target`, identifying sub's root with `at`.
void graft(HornProgram& target, VertexId at, const HornProgram& sub) {
  std::vector<VertexId> image(sub.vertex_count());
  image[sub.root()] = at;
  for (VertexId v : sub.preorder()) {
    for (EdgeId e : sub.outgoing(v)) {
      const auto& edge = sub.edge(e);
      image[edge.child] = target.add_child(image[v], edge.label);
    }
  }
}

}  // namespace

HornProgram compose(const HornProgram& first, const HornProgram& second) {
  HornProgram result = first;
  for (VertexId leaf : first.leaves()) graft(result, leaf, second);
  return result;
}

HornProgram strong_fork(const SimpleProduct& x, const SimpleProduct& y1, const SimpleProduct& y2,
                        const HornProgram& left, const HornProgram& right) {
  HornProgram result;
  const VertexId v1 = result.add_child(result.root(), HornFormula::plain(x, y1));
  const VertexId v2 = result.add_child(result.root(), HornFormula::plain(x, y2));
  graft(result, v1, left);
  graft(result, v2, right);
  return result;
}

}  // namespace hornlog
