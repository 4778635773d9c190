#include "hornlog/ll.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <stdexcept>

#include "parser.hpp"

namespace hornlog {

namespace {

using Context = std::vector<LlFormula>;

constexpr std::array<std::pair<LlRule, std::string_view>, 9> kTags{{
    {LlRule::I, "I"},
    {LlRule::LTensor, "LTENSOR"},
    {LlRule::RTensor, "RTENSOR"},
    {LlRule::LImp, "LIMP"},
    {LlRule::LImpOplus, "LIMPOPLUS"},
    {LlRule::LOplus, "LOPLUS"},
    {LlRule::LBang, "LBANG"},
    {LlRule::WBang, "WBANG"},
    {LlRule::CBang, "CBANG"},
}};

LlFormula canonical(const LlFormula& f) {
  if (const auto* h = std::get_if<HornFormula>(&f)) return h->canonical();
  if (const auto* b = std::get_if<Banged>(&f)) return Banged{b->formula.canonical()};
  return f;
}

Context sorted(const Context& ctx) {
  Context out;
  out.reserve(ctx.size());
  for (const auto& f : ctx) out.push_back(canonical(f));
  std::sort(out.begin(), out.end());
  return out;
}

bool same(const Context& a, const Context& b) { return a.size() == b.size() && sorted(a) == sorted(b); }

bool contains(const Context& ctx, const LlFormula& f) {
  const LlFormula key = canonical(f);
  return std::any_of(ctx.begin(), ctx.end(), [&](const LlFormula& g) { return canonical(g) == key; });
}

std::optional<Context> without(Context ctx, const LlFormula& f) {
  const LlFormula key = canonical(f);
  for (auto it = ctx.begin(); it != ctx.end(); ++it) {
    if (canonical(*it) == key) {
      ctx.erase(it);
      return ctx;
    }
  }
  return std::nullopt;
}

Context plus(Context a, const Context& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::size_t arity(LlRule rule) {
  switch (rule) {
    case LlRule::I: return 0;
    case LlRule::RTensor:
    case LlRule::LImp:
    case LlRule::LImpOplus:
    case LlRule::LOplus: return 2;
    default: return 1;
  }
}

std::string duplicate_tag(const Context& ctx) {
  std::set<std::uint32_t> seen;
  for (const auto& f : ctx) {
    if (const auto* o = std::get_if<OplusProduct>(&f); o && !seen.insert(o->tag).second) {
      return "context holds two ⊕-products tagged " + std::to_string(o->tag);
    }
  }
  return {};
}

std::string check_node(const LlProof& p) {
  const LlSequent& c = p.conclusion;
  if (p.premises.size() != arity(p.rule)) {
    return "expected " + std::to_string(arity(p.rule)) + " premises, found " + std::to_string(p.premises.size());
  }
  if (auto dup = duplicate_tag(c.context); !dup.empty()) return dup;
  const bool needs_formula = p.rule == LlRule::LImp || p.rule == LlRule::LImpOplus || p.rule == LlRule::LBang ||
                             p.rule == LlRule::WBang || p.rule == LlRule::CBang;
  if (needs_formula && !p.formula) return "missing principal implication";

  switch (p.rule) {
    case LlRule::I:
      if (c.context.size() != 1 || c.context.front() != LlFormula{c.goal}) return "identity must conclude X |- X";
      return {};

    case LlRule::LTensor: {
      if (!p.parts) return "missing tensor parts";
      const auto& [x, y] = *p.parts;
      const auto& s = p.premises[0].conclusion;
      if (s.goal != c.goal) return "L⊗ changes the goal";
      auto rest = without(c.context, x * y);
      if (!rest) return "conclusion holds no " + to_string(x * y);
      if (!same(s.context, plus(*rest, {x, y}))) return "premise does not split " + to_string(x * y);
      return {};
    }

    case LlRule::RTensor: {
      const auto& s1 = p.premises[0].conclusion;
      const auto& s2 = p.premises[1].conclusion;
      if (c.goal != s1.goal * s2.goal) return "goal is not the tensor of the premise goals";
      if (!same(c.context, plus(s1.context, s2.context))) return "context is not the union of the premise contexts";
      return {};
    }

    case LlRule::LImp: {
      const HornFormula& a = *p.formula;
      if (a.is_oplus()) return "L⊸ needs a plain implication";
      const auto& s1 = p.premises[0].conclusion;
      const auto& s2 = p.premises[1].conclusion;
      if (s1.goal != a.antecedent()) return "left premise must prove " + to_string(a.antecedent());
      if (s2.goal != c.goal) return "right premise goal differs from the conclusion";
      auto rest = without(s2.context, a.consequent());
      if (!rest) return "right premise holds no " + to_string(a.consequent());
      if (!same(c.context, plus(plus(s1.context, {a}), *rest))) return "context does not match the split";
      return {};
    }

    case LlRule::LImpOplus: {
      const HornFormula& a = *p.formula;
      if (!a.is_oplus()) return "L⊸⊕ needs a ⊕-Horn implication";
      if (!p.oplus) return "missing ⊕-product";
      if (p.oplus->left != a.left() || p.oplus->right != a.right()) return "⊕-product does not match the implication";
      const auto& s1 = p.premises[0].conclusion;
      const auto& s2 = p.premises[1].conclusion;
      if (s1.goal != a.antecedent()) return "left premise must prove " + to_string(a.antecedent());
      if (s2.goal != c.goal) return "right premise goal differs from the conclusion";
      auto rest = without(s2.context, *p.oplus);
      if (!rest) return "right premise holds no " + to_string(LlFormula{*p.oplus});
      if (!same(c.context, plus(plus(s1.context, {a}), *rest))) return "context does not match the split";
      return {};
    }

    case LlRule::LOplus: {
      if (!p.oplus) return "missing ⊕-product";
      const auto& s1 = p.premises[0].conclusion;
      const auto& s2 = p.premises[1].conclusion;
      if (s1.goal != c.goal || s2.goal != c.goal) return "premise goals differ from the conclusion";
      auto rest1 = without(s1.context, p.oplus->left);
      auto rest2 = without(s2.context, p.oplus->right);
      if (!rest1 || !rest2) return "premises do not hold the ⊕ alternatives";
      if (!same(*rest1, *rest2)) return "premises have different side contexts";
      if (!same(c.context, plus(*rest1, {*p.oplus}))) return "conclusion does not hold the ⊕-product";
      return {};
    }

    case LlRule::LBang: {
      const auto& s = p.premises[0].conclusion;
      if (s.goal != c.goal) return "L! changes the goal";
      auto rest = without(c.context, Banged{*p.formula});
      if (!rest) return "conclusion holds no !" + to_string(*p.formula);
      if (!same(s.context, plus(*rest, {*p.formula}))) return "premise does not hold " + to_string(*p.formula);
      return {};
    }

    case LlRule::WBang: {
      const auto& s = p.premises[0].conclusion;
      if (s.goal != c.goal) return "W! changes the goal";
      if (!same(c.context, plus(s.context, {Banged{*p.formula}}))) return "conclusion does not add !" + to_string(*p.formula);
      return {};
    }

    case LlRule::CBang: {
      const auto& s = p.premises[0].conclusion;
      if (s.goal != c.goal) return "C! changes the goal";
      if (!contains(c.context, Banged{*p.formula})) return "conclusion holds no !" + to_string(*p.formula);
      if (!same(s.context, plus(c.context, {Banged{*p.formula}}))) return "premise does not hold a second !" + to_string(*p.formula);
      return {};
    }
  }
  return "unknown rule";
}

ProofCheck check_at(const LlProof& p, const std::string& path) {
  if (auto message = check_node(p); !message.empty()) return ProofCheck{false, path, std::string(rule_tag(p.rule)), message};
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    auto sub = check_at(p.premises[i], path + "." + std::to_string(i));
    if (!sub) return sub;
  }
  return {};
}

LlProof node(LlRule rule, Context ctx, SimpleProduct goal, std::vector<LlProof> premises) {
  return LlProof{rule, LlSequent{std::move(ctx), std::move(goal)}, std::move(premises), std::nullopt, std::nullopt,
                 std::nullopt};
}

[[noreturn]] void reject(const std::string& message) { throw std::invalid_argument(message); }

// Rebuilds an inference of `like`'s rule over new premises, recomputing the conclusion.
LlProof rebuild(const LlProof& like, std::vector<LlProof> premises) {
  switch (like.rule) {
    case LlRule::I: return like;
    case LlRule::LTensor: return ll::tensor_left(std::move(premises[0]), like.parts->first, like.parts->second);
    case LlRule::RTensor: return ll::tensor_right(std::move(premises[0]), std::move(premises[1]));
    case LlRule::LImp: return ll::imp_left(std::move(premises[0]), *like.formula, std::move(premises[1]));
    case LlRule::LImpOplus:
      return ll::imp_oplus_left(std::move(premises[0]), *like.formula, std::move(premises[1]), like.oplus->tag);
    case LlRule::LOplus: return ll::oplus_left(std::move(premises[0]), std::move(premises[1]), *like.oplus);
    case LlRule::LBang: return ll::bang_left(std::move(premises[0]), *like.formula);
    case LlRule::WBang: return ll::weaken(std::move(premises[0]), *like.formula);
    case LlRule::CBang: return ll::contract(std::move(premises[0]), *like.formula);
  }
  throw std::logic_error("unknown rule");
}

bool holds(const LlProof& p, const OplusProduct& o) {
  const auto& ctx = p.conclusion.context;
  return std::find(ctx.begin(), ctx.end(), LlFormula{o}) != ctx.end();
}

// Replaces the ⊕-product `o` by its alternative `side` wherever it flows,
// keeping the matching premise of each L⊕ that consumes it.
LlProof project(const LlProof& p, const OplusProduct& o, std::size_t side) {
  if (p.rule == LlRule::LOplus && p.oplus == o) return p.premises[side];
  std::vector<LlProof> premises;
  for (const auto& q : p.premises) premises.push_back(holds(q, o) ? project(q, o, side) : q);
  return rebuild(p, std::move(premises));
}

struct Consumer {
  std::vector<std::size_t> path;  // premise indices from the search root
};

void find_consumers(const LlProof& p, const OplusProduct& o, std::vector<std::size_t>& path,
                    std::vector<Consumer>& out) {
  if (p.rule == LlRule::LOplus && p.oplus == o) {
    out.push_back(Consumer{path});
    return;
  }
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    if (!holds(p.premises[i], o)) continue;
    path.push_back(i);
    find_consumers(p.premises[i], o, path, out);
    path.pop_back();
  }
}

std::vector<Consumer> consumers(const LlProof& p, const OplusProduct& o) {
  std::vector<Consumer> out;
  std::vector<std::size_t> path;
  if (holds(p, o)) find_consumers(p, o, path, out);
  return out;
}

// One conversion: the L⊕ at premise k of `r` moves below `r`.
LlProof commute(const LlProof& r, std::size_t k, const OplusProduct& o) {
  const LlProof& n = r.premises[k];
  std::vector<LlProof> branches;
  for (std::size_t side = 0; side < 2; ++side) {
    std::vector<LlProof> premises;
    for (std::size_t j = 0; j < r.premises.size(); ++j) {
      if (j == k) {
        premises.push_back(n.premises[side]);
      } else {
        premises.push_back(holds(r.premises[j], o) ? project(r.premises[j], o, side) : r.premises[j]);
      }
    }
    branches.push_back(rebuild(r, std::move(premises)));
  }
  LlProof out = ll::oplus_left(std::move(branches[0]), std::move(branches[1]), o);
  if (!ll_sequent_equiv(out.conclusion, r.conclusion)) throw std::logic_error("conversion changed a conclusion");
  out.conclusion = r.conclusion;
  return out;
}

LlProof commute_at(const LlProof& p, std::span<const std::size_t> path, const OplusProduct& o) {
  if (path.size() == 1) return commute(p, path[0], o);
  LlProof out = p;
  out.premises[path[0]] = commute_at(p.premises[path[0]], path.subspan(1), o);
  return out;
}

LlProof normalize(const LlProof& p, NormalizationTrace* trace) {
  LlProof q = p;
  for (auto& premise : q.premises) premise = normalize(premise, trace);
  if (q.rule != LlRule::LImpOplus) return q;

  const OplusProduct o = *q.oplus;
  std::vector<std::size_t> measures;
  for (;;) {
    auto found = consumers(q.premises[1], o);
    if (found.empty()) reject("⊕-product " + to_string(LlFormula{o}) + " is never consumed by L⊕");
    std::size_t measure = 0;
    for (const auto& c : found) measure += c.path.size();
    measures.push_back(measure);
    if (measure == 0) break;
    const auto shallowest = std::min_element(found.begin(), found.end(), [](const Consumer& a, const Consumer& b) {
      return a.path.size() < b.path.size();
    });
    q.premises[1] = commute_at(q.premises[1], shallowest->path, o);
    if (trace) ++trace->conversions;
  }
  if (trace) trace->measures.push_back(std::move(measures));
  return q;
}

bool adjacent_at(const LlProof& p, const LlProof* parent, std::size_t index) {
  if (p.rule == LlRule::LOplus) {
    if (!parent || parent->rule != LlRule::LImpOplus || index != 1 || parent->oplus != p.oplus) return false;
  }
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    if (!adjacent_at(p.premises[i], &p, i)) return false;
  }
  return true;
}

std::optional<HornSequent> reading_of(const LlSequent& s) {
  std::optional<SimpleProduct> input;
  HornSequent out{s.goal, {}, {}, s.goal};
  for (const auto& f : s.context) {
    if (const auto* x = std::get_if<SimpleProduct>(&f)) {
      input = input ? *input * *x : *x;
    } else if (const auto* h = std::get_if<HornFormula>(&f)) {
      out.linear.push_back(*h);
    } else if (const auto* b = std::get_if<Banged>(&f)) {
      out.banged.push_back(b->formula);
    } else {
      return std::nullopt;
    }
  }
  if (!input) return std::nullopt;
  out.input = *input;
  return out;
}

HornSequent reading(const LlSequent& s) {
  auto r = reading_of(s);
  if (!r) reject("sequent has no Horn reading: " + to_string(s));
  return *r;
}

Frame residual(const SimpleProduct& whole, const SimpleProduct& part) {
  auto rest = match_antecedent(whole, part);
  if (!rest) throw std::logic_error(to_string(part) + " is not part of " + to_string(whole));
  return *rest;
}

HllProof framed(HllProof p, const Frame& v) { return v.empty() ? p : hll::frame(std::move(p), v); }

HllProof translate(const LlProof& p) {
  switch (p.rule) {
    case LlRule::I: return hll::identity(p.conclusion.goal);
    case LlRule::LTensor: return hll::tensor_left(translate(p.premises[0]), reading(p.conclusion));
    case LlRule::RTensor: {
      HllProof first = translate(p.premises[0]);
      HllProof second = translate(p.premises[1]);
      const Frame w1 = first.conclusion.input.items();
      const Frame z2 = second.conclusion.goal.items();
      return hll::cut(hll::frame(std::move(second), w1), hll::frame(std::move(first), z2));
    }
    case LlRule::LImp: {
      const HornFormula& a = *p.formula;
      HllProof first = translate(p.premises[0]);
      HllProof second = translate(p.premises[1]);
      const Frame rest = residual(second.conclusion.input, a.consequent());
      HllProof head = framed(hll::cut(std::move(first), hll::horn(a)), rest);
      return hll::cut(std::move(head), std::move(second));
    }
    case LlRule::LImpOplus: {
      const LlProof& split = p.premises[1];
      if (split.rule != LlRule::LOplus || split.oplus != p.oplus) {
        throw std::logic_error("L⊸⊕ is not followed by its L⊕ after normalization");
      }
      const HornFormula& a = *p.formula;
      HllProof head = translate(p.premises[0]);
      HllProof left = translate(split.premises[0]);
      HllProof right = translate(split.premises[1]);
      const Frame rest = residual(left.conclusion.input, a.left());
      HllProof fork = hll::oplus_horn(a, rest, std::move(left), std::move(right));
      return hll::cut(framed(std::move(head), rest), std::move(fork));
    }
    case LlRule::LOplus: reject("L⊕ without an adjacent L⊸⊕");
    case LlRule::LBang: return hll::bang_left(translate(p.premises[0]), *p.formula);
    case LlRule::WBang: return hll::weaken(translate(p.premises[0]), *p.formula);
    case LlRule::CBang: return hll::contract(translate(p.premises[0]), *p.formula);
  }
  throw std::logic_error("unknown rule");
}

void separation(const LlProof& p, std::size_t& best) {
  if (p.rule == LlRule::LImpOplus) {
    for (const auto& c : consumers(p.premises[1], *p.oplus)) best = std::max(best, c.path.size());
  }
  for (const auto& q : p.premises) separation(q, best);
}

LlFormula item(detail::Parser& in) {
  if (in.accept(detail::Tok::Bang)) {
    in.expect(detail::Tok::LParen);
    HornFormula f = in.formula();
    in.expect(detail::Tok::RParen);
    return Banged{std::move(f)};
  }
  if (in.accept(detail::Tok::LParen)) {
    detail::Group g = in.group_tail();
    if (g.alternative) {
      in.expect(detail::Tok::Hash);
      const detail::Token t = in.expect(detail::Tok::Int);
      std::uint32_t tag = 0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), tag);
      if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) in.fail(t, "tag out of range");
      return OplusProduct{std::move(g.first), std::move(*g.alternative), tag};
    }
    if (in.peek().kind == detail::Tok::Lolli) return in.formula_after_antecedent(std::move(g.first));
    return g.first;
  }
  SimpleProduct x = in.product();
  if (in.peek().kind == detail::Tok::Lolli) return in.formula_after_antecedent(std::move(x));
  return x;
}

}  // namespace

bool ll_sequent_equiv(const LlSequent& a, const LlSequent& b) { return a.goal == b.goal && same(a.context, b.context); }

std::string_view rule_tag(LlRule rule) {
  for (const auto& [r, tag] : kTags) {
    if (r == rule) return tag;
  }
  return "?";
}

std::optional<LlRule> parse_ll_rule(std::string_view tag) {
  for (const auto& [r, t] : kTags) {
    if (t == tag) return r;
  }
  return std::nullopt;
}

namespace ll {

LlProof identity(SimpleProduct x) { return node(LlRule::I, {x}, x, {}); }

LlProof tensor_left(LlProof premise, SimpleProduct x, SimpleProduct y) {
  const auto& s = premise.conclusion;
  auto rest = without(s.context, x);
  if (rest) rest = without(std::move(*rest), y);
  if (!rest) reject("L⊗ premise must hold " + to_string(x) + " and " + to_string(y));
  Context ctx = plus(std::move(*rest), {x * y});
  SimpleProduct goal = s.goal;
  LlProof p = node(LlRule::LTensor, std::move(ctx), std::move(goal), {});
  p.premises.push_back(std::move(premise));
  p.parts = std::make_pair(std::move(x), std::move(y));
  return p;
}

LlProof tensor_right(LlProof left, LlProof right) {
  Context ctx = plus(left.conclusion.context, right.conclusion.context);
  if (auto dup = duplicate_tag(ctx); !dup.empty()) reject(dup);
  SimpleProduct goal = left.conclusion.goal * right.conclusion.goal;
  std::vector<LlProof> premises;
  premises.push_back(std::move(left));
  premises.push_back(std::move(right));
  return node(LlRule::RTensor, std::move(ctx), std::move(goal), std::move(premises));
}

LlProof imp_left(LlProof left, HornFormula a, LlProof right) {
  if (a.is_oplus()) reject("L⊸ needs a plain implication, got " + to_string(a));
  if (left.conclusion.goal != a.antecedent()) reject("L⊸ left premise must prove " + to_string(a.antecedent()));
  auto rest = without(right.conclusion.context, a.consequent());
  if (!rest) reject("L⊸ right premise must hold " + to_string(a.consequent()));
  Context ctx = plus(plus(left.conclusion.context, {a}), *rest);
  if (auto dup = duplicate_tag(ctx); !dup.empty()) reject(dup);
  SimpleProduct goal = right.conclusion.goal;
  std::vector<LlProof> premises;
  premises.push_back(std::move(left));
  premises.push_back(std::move(right));
  LlProof p = node(LlRule::LImp, std::move(ctx), std::move(goal), std::move(premises));
  p.formula = std::move(a);
  return p;
}

LlProof imp_oplus_left(LlProof left, HornFormula a, LlProof right, std::uint32_t tag) {
  if (!a.is_oplus()) reject("L⊸⊕ needs a ⊕-Horn implication, got " + to_string(a));
  if (left.conclusion.goal != a.antecedent()) reject("L⊸⊕ left premise must prove " + to_string(a.antecedent()));
  OplusProduct o{a.left(), a.right(), tag};
  auto rest = without(right.conclusion.context, o);
  if (!rest) reject("L⊸⊕ right premise must hold " + to_string(LlFormula{o}));
  Context ctx = plus(plus(left.conclusion.context, {a}), *rest);
  if (auto dup = duplicate_tag(ctx); !dup.empty()) reject(dup);
  SimpleProduct goal = right.conclusion.goal;
  std::vector<LlProof> premises;
  premises.push_back(std::move(left));
  premises.push_back(std::move(right));
  LlProof p = node(LlRule::LImpOplus, std::move(ctx), std::move(goal), std::move(premises));
  p.formula = std::move(a);
  p.oplus = std::move(o);
  return p;
}

LlProof oplus_left(LlProof left, LlProof right, OplusProduct occurrence) {
  auto rest1 = without(left.conclusion.context, occurrence.left);
  auto rest2 = without(right.conclusion.context, occurrence.right);
  if (!rest1 || !rest2) reject("L⊕ premises must hold the alternatives of " + to_string(LlFormula{occurrence}));
  if (!same(*rest1, *rest2) || left.conclusion.goal != right.conclusion.goal) {
    reject("L⊕ premises must share context and goal");
  }
  Context ctx = plus(std::move(*rest1), {occurrence});
  if (auto dup = duplicate_tag(ctx); !dup.empty()) reject(dup);
  SimpleProduct goal = left.conclusion.goal;
  std::vector<LlProof> premises;
  premises.push_back(std::move(left));
  premises.push_back(std::move(right));
  LlProof p = node(LlRule::LOplus, std::move(ctx), std::move(goal), std::move(premises));
  p.oplus = std::move(occurrence);
  return p;
}

LlProof bang_left(LlProof premise, HornFormula a) {
  auto rest = without(premise.conclusion.context, a);
  if (!rest) reject("L! premise must hold " + to_string(a));
  Context ctx = plus(std::move(*rest), {Banged{a}});
  SimpleProduct goal = premise.conclusion.goal;
  LlProof p = node(LlRule::LBang, std::move(ctx), std::move(goal), {});
  p.premises.push_back(std::move(premise));
  p.formula = std::move(a);
  return p;
}

LlProof weaken(LlProof premise, HornFormula a) {
  Context ctx = plus(premise.conclusion.context, {Banged{a}});
  SimpleProduct goal = premise.conclusion.goal;
  LlProof p = node(LlRule::WBang, std::move(ctx), std::move(goal), {});
  p.premises.push_back(std::move(premise));
  p.formula = std::move(a);
  return p;
}

LlProof contract(LlProof premise, HornFormula a) {
  auto once = without(premise.conclusion.context, Banged{a});
  if (!once || !contains(*once, Banged{a})) reject("C! premise must hold two copies of !" + to_string(a));
  SimpleProduct goal = premise.conclusion.goal;
  LlProof p = node(LlRule::CBang, std::move(*once), std::move(goal), {});
  p.premises.push_back(std::move(premise));
  p.formula = std::move(a);
  return p;
}

}  // namespace ll

ProofCheck check_ll_proof(const LlProof& proof) { return check_at(proof, "root"); }

std::optional<HornSequent> horn_reading(const LlSequent& s) { return reading_of(s); }

bool oplus_adjacent(const LlProof& proof) { return adjacent_at(proof, nullptr, 0); }

std::size_t oplus_separation(const LlProof& proof) {
  std::size_t best = 0;
  separation(proof, best);
  return best;
}

LlProof push_oplus_down(const LlProof& proof, NormalizationTrace* trace) {
  if (auto check = check_ll_proof(proof); !check) reject(check.describe());
  for (const auto& f : proof.conclusion.context) {
    if (std::holds_alternative<OplusProduct>(f)) reject("conclusion holds a ⊕-product with no L⊸⊕ below it");
  }
  LlProof out = normalize(proof, trace);
  if (!oplus_adjacent(out)) reject("an L⊕ has no matching L⊸⊕");
  if (auto check = check_ll_proof(out); !check) throw std::logic_error("normalization broke the proof: " + check.describe());
  return out;
}

HllProof translate_ll_to_hll(const LlProof& proof) {
  reading(proof.conclusion);
  HllProof out = translate(push_oplus_down(proof));
  if (auto check = check_hll_proof(out); !check) throw std::logic_error("translation failed to check: " + check.describe());
  return out;
}

std::string to_string(const LlFormula& formula) {
  if (const auto* x = std::get_if<SimpleProduct>(&formula)) return to_string(*x);
  if (const auto* h = std::get_if<HornFormula>(&formula)) return to_string(*h);
  if (const auto* b = std::get_if<Banged>(&formula)) return "!(" + to_string(b->formula) + ")";
  const auto& o = std::get<OplusProduct>(formula);
  return "(" + to_string(o.left) + " + " + to_string(o.right) + ")#" + std::to_string(o.tag);
}

std::string to_string(const LlSequent& sequent) {
  std::string out;
  for (const auto& f : sequent.context) {
    if (!out.empty()) out += ", ";
    out += to_string(f);
  }
  return out + (out.empty() ? "|- " : " |- ") + to_string(sequent.goal);
}

LlSequent parse_ll_sequent(std::string_view text) {
  detail::Parser in(text);
  LlSequent s{{}, SimpleProduct{"x"}};
  if (in.peek().kind != detail::Tok::Turnstile) {
    s.context.push_back(item(in));
    while (in.accept(detail::Tok::Comma)) s.context.push_back(item(in));
  }
  in.expect(detail::Tok::Turnstile);
  s.goal = in.product();
  in.finish();
  return s;
}

LlFormula parse_ll_formula(std::string_view text) {
  detail::Parser in(text);
  LlFormula f = item(in);
  in.finish();
  return f;
}

std::size_t proof_size(const LlProof& proof) {
  std::size_t n = 1;
  for (const auto& p : proof.premises) n += proof_size(p);
  return n;
}

}  // namespace hornlog
