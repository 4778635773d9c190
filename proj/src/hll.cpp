#include "hornlog/hll.hpp"

#include <array>
#include <stdexcept>

namespace hornlog {

namespace {

constexpr std::array<std::pair<HllRule, std::string_view>, 9> kTags{{
    {HllRule::I, "I"},
    {HllRule::LTensor, "LTENSOR"},
    {HllRule::H, "H"},
    {HllRule::M, "M"},
    {HllRule::OplusH, "OPLUS_H"},
    {HllRule::LBang, "LBANG"},
    {HllRule::WBang, "WBANG"},
    {HllRule::CBang, "CBANG"},
    {HllRule::Cut, "CUT"},
}};

using Zone = std::vector<HornFormula>;

Zone concat(const Zone& a, const Zone& b) {
  Zone out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Zone with(Zone zone, const HornFormula& f) {
  zone.push_back(f);
  return zone;
}

std::optional<Zone> without(Zone zone, const HornFormula& f) {
  const HornFormula key = f.canonical();
  for (auto it = zone.begin(); it != zone.end(); ++it) {
    if (it->canonical() == key) {
      zone.erase(it);
      return zone;
    }
  }
  return std::nullopt;
}

std::size_t arity(HllRule rule) {
  switch (rule) {
    case HllRule::I:
    case HllRule::H: return 0;
    case HllRule::OplusH:
    case HllRule::Cut: return 2;
    default: return 1;
  }
}

bool same(const Zone& a, const Zone& b) { return same_multiset(a, b); }

// Returns an empty string when the node instantiates its schema.
std::string check_node(const HllProof& p) {
  const HornSequent& c = p.conclusion;
  if (p.premises.size() != arity(p.rule)) {
    return "expected " + std::to_string(arity(p.rule)) + " premises, found " + std::to_string(p.premises.size());
  }
  const bool needs_formula =
      p.rule == HllRule::OplusH || p.rule == HllRule::LBang || p.rule == HllRule::WBang || p.rule == HllRule::CBang;
  if (needs_formula && !p.formula) return "missing principal formula";

  switch (p.rule) {
    case HllRule::I:
      if (!c.linear.empty() || !c.banged.empty()) return "identity has non-empty zones";
      if (c.input != c.goal) return "identity input " + to_string(c.input) + " differs from goal " + to_string(c.goal);
      return {};

    case HllRule::H: {
      if (!c.banged.empty() || c.linear.size() != 1) return "H needs exactly one linear formula and no banged ones";
      const HornFormula& f = c.linear.front();
      if (f.is_oplus()) return "H needs a plain implication";
      if (c.input != f.antecedent()) return "H input is not the antecedent of " + to_string(f);
      if (c.goal != f.consequent()) return "H goal is not the consequent of " + to_string(f);
      return {};
    }

    case HllRule::LTensor:
      if (!sequent_equiv(c, p.premises[0].conclusion)) return "conclusion does not restate the premise";
      return {};

    case HllRule::M: {
      const HornSequent& s = p.premises[0].conclusion;
      if (p.frame.empty()) return "M needs a non-empty frame";
      if (!same(c.linear, s.linear) || !same(c.banged, s.banged)) return "M changes the zones";
      if (c.input != s.input * p.frame) return "conclusion input is not premise input * " + to_string(p.frame);
      if (c.goal != s.goal * p.frame) return "conclusion goal is not premise goal * " + to_string(p.frame);
      return {};
    }

    case HllRule::OplusH: {
      const HornFormula& a = *p.formula;
      if (!a.is_oplus()) return "OPLUS_H needs a ⊕-Horn implication";
      const HornSequent& s1 = p.premises[0].conclusion;
      const HornSequent& s2 = p.premises[1].conclusion;
      if (s1.input != a.left() * p.frame) return "left premise input is not " + to_string(a.left() * p.frame);
      if (s2.input != a.right() * p.frame) return "right premise input is not " + to_string(a.right() * p.frame);
      if (c.input != a.antecedent() * p.frame) return "conclusion input is not " + to_string(a.antecedent() * p.frame);
      if (s1.goal != c.goal || s2.goal != c.goal) return "premise goals differ from the conclusion goal";
      if (!same(s1.linear, s2.linear) || !same(s1.banged, s2.banged)) return "premises have different zones";
      if (!same(c.linear, with(s1.linear, a))) return "conclusion linear zone is not premise zone plus " + to_string(a);
      if (!same(c.banged, s1.banged)) return "OPLUS_H changes the banged zone";
      return {};
    }

    case HllRule::LBang: {
      const HornSequent& s = p.premises[0].conclusion;
      if (c.input != s.input || c.goal != s.goal) return "L! changes input or goal";
      if (!same(s.linear, with(c.linear, *p.formula))) return "premise does not hold " + to_string(*p.formula) + " linearly";
      if (!same(c.banged, with(s.banged, *p.formula))) return "conclusion does not bang " + to_string(*p.formula);
      return {};
    }

    case HllRule::WBang: {
      const HornSequent& s = p.premises[0].conclusion;
      if (c.input != s.input || c.goal != s.goal) return "W! changes input or goal";
      if (!same(c.linear, s.linear)) return "W! changes the linear zone";
      if (!same(c.banged, with(s.banged, *p.formula))) return "conclusion does not add banged " + to_string(*p.formula);
      return {};
    }

    case HllRule::CBang: {
      const HornSequent& s = p.premises[0].conclusion;
      if (c.input != s.input || c.goal != s.goal) return "C! changes input or goal";
      if (!same(c.linear, s.linear)) return "C! changes the linear zone";
      if (occurrences(c.banged, *p.formula) == 0) return "conclusion has no banged " + to_string(*p.formula);
      if (!same(s.banged, with(c.banged, *p.formula))) return "premise does not hold a second banged " + to_string(*p.formula);
      return {};
    }

    case HllRule::Cut: {
      const HornSequent& s1 = p.premises[0].conclusion;
      const HornSequent& s2 = p.premises[1].conclusion;
      if (!p.cut) return "missing cut product";
      if (s1.goal != *p.cut) return "left premise proves " + to_string(s1.goal) + ", not " + to_string(*p.cut);
      if (s2.input != *p.cut) return "right premise consumes " + to_string(s2.input) + ", not " + to_string(*p.cut);
      if (c.input != s1.input) return "conclusion input differs from the left premise input";
      if (c.goal != s2.goal) return "conclusion goal differs from the right premise goal";
      if (!same(c.linear, concat(s1.linear, s2.linear))) return "linear zone is not the union of the premises";
      if (!same(c.banged, concat(s1.banged, s2.banged))) return "banged zone is not the union of the premises";
      return {};
    }
  }
  return "unknown rule";
}

ProofCheck check_at(const HllProof& p, const std::string& path) {
  if (auto message = check_node(p); !message.empty()) {
    return ProofCheck{false, path, std::string(rule_tag(p.rule)), message};
  }
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    auto sub = check_at(p.premises[i], path + "." + std::to_string(i));
    if (!sub) return sub;
  }
  return {};
}

HllProof unary(HllRule rule, HllProof premise, HornSequent conclusion) {
  HllProof p{rule, std::move(conclusion), {}, {}, std::nullopt, std::nullopt};
  p.premises.push_back(std::move(premise));
  return p;
}

HornProgram compile(const HllProof& p) {
  switch (p.rule) {
    case HllRule::I: return HornProgram{};
    case HllRule::H: return HornProgram::single_edge(p.conclusion.linear.front());
    case HllRule::OplusH:
      return strong_fork(p.formula->antecedent(), p.formula->left(), p.formula->right(), compile(p.premises[0]),
                         compile(p.premises[1]));
    case HllRule::Cut: return hornlog::compose(compile(p.premises[0]), compile(p.premises[1]));
    default: return compile(p.premises[0]);
  }
}

}  // namespace

std::string_view rule_tag(HllRule rule) {
  for (const auto& [r, tag] : kTags) {
    if (r == rule) return tag;
  }
  return "?";
}

std::optional<HllRule> parse_hll_rule(std::string_view tag) {
  for (const auto& [r, t] : kTags) {
    if (t == tag) return r;
  }
  return std::nullopt;
}

namespace hll {

HllProof identity(SimpleProduct x) {
  return HllProof{HllRule::I, HornSequent{x, {}, {}, x}, {}, {}, std::nullopt, std::nullopt};
}

HllProof horn(HornFormula f) {
  if (f.is_oplus()) throw std::invalid_argument("H needs a plain implication, got " + to_string(f));
  HornSequent s{f.antecedent(), {f}, {}, f.consequent()};
  return HllProof{HllRule::H, std::move(s), {}, {}, std::nullopt, std::nullopt};
}

HllProof tensor_left(HllProof premise, HornSequent conclusion) {
  if (!sequent_equiv(premise.conclusion, conclusion)) {
    throw std::invalid_argument("L⊗ conclusion must restate the premise up to ≅");
  }
  return unary(HllRule::LTensor, std::move(premise), std::move(conclusion));
}

HllProof tensor_left(HllProof premise) {
  HornSequent c = premise.conclusion;
  return unary(HllRule::LTensor, std::move(premise), std::move(c));
}

HllProof frame(HllProof premise, Frame v) {
  if (v.empty()) throw std::invalid_argument("M needs a non-empty frame");
  const HornSequent& s = premise.conclusion;
  HornSequent c{s.input * v, s.linear, s.banged, s.goal * v};
  HllProof p = unary(HllRule::M, std::move(premise), std::move(c));
  p.frame = std::move(v);
  return p;
}

HllProof oplus_horn(HornFormula a, Frame v, HllProof left, HllProof right) {
  if (!a.is_oplus()) throw std::invalid_argument("⊕-H needs a ⊕-Horn implication, got " + to_string(a));
  const HornSequent& s1 = left.conclusion;
  const HornSequent& s2 = right.conclusion;
  if (s1.input != a.left() * v || s2.input != a.right() * v) {
    throw std::invalid_argument("⊕-H premises must consume " + to_string(a.left() * v) + " and " +
                                to_string(a.right() * v));
  }
  if (s1.goal != s2.goal || !same(s1.linear, s2.linear) || !same(s1.banged, s2.banged)) {
    throw std::invalid_argument("⊕-H premises must share zones and goal");
  }
  HornSequent c{a.antecedent() * v, with(s1.linear, a), s1.banged, s1.goal};
  HllProof p{HllRule::OplusH, std::move(c), {}, std::move(v), std::move(a), std::nullopt};
  p.premises.push_back(std::move(left));
  p.premises.push_back(std::move(right));
  return p;
}

HllProof bang_left(HllProof premise, HornFormula a) {
  const HornSequent& s = premise.conclusion;
  auto linear = without(s.linear, a);
  if (!linear) throw std::invalid_argument("L! needs " + to_string(a) + " in the linear zone");
  HornSequent c{s.input, std::move(*linear), with(s.banged, a), s.goal};
  HllProof p = unary(HllRule::LBang, std::move(premise), std::move(c));
  p.formula = std::move(a);
  return p;
}

HllProof weaken(HllProof premise, HornFormula a) {
  const HornSequent& s = premise.conclusion;
  HornSequent c{s.input, s.linear, with(s.banged, a), s.goal};
  HllProof p = unary(HllRule::WBang, std::move(premise), std::move(c));
  p.formula = std::move(a);
  return p;
}

HllProof contract(HllProof premise, HornFormula a) {
  const HornSequent& s = premise.conclusion;
  if (occurrences(s.banged, a) < 2) throw std::invalid_argument("C! needs two banged copies of " + to_string(a));
  HornSequent c{s.input, s.linear, *without(s.banged, a), s.goal};
  HllProof p = unary(HllRule::CBang, std::move(premise), std::move(c));
  p.formula = std::move(a);
  return p;
}

HllProof cut(HllProof first, HllProof second) {
  const HornSequent& s1 = first.conclusion;
  const HornSequent& s2 = second.conclusion;
  if (s1.goal != s2.input) {
    throw std::invalid_argument("cut mismatch: " + to_string(s1.goal) + " against " + to_string(s2.input));
  }
  HornSequent c{s1.input, concat(s1.linear, s2.linear), concat(s1.banged, s2.banged), s2.goal};
  HllProof p{HllRule::Cut, std::move(c), {}, {}, std::nullopt, s1.goal};
  p.premises.push_back(std::move(first));
  p.premises.push_back(std::move(second));
  return p;
}

}  // namespace hll

std::string ProofCheck::describe() const {
  if (ok) return "ACCEPT";
  return "REJECT at " + path + " (" + rule + "): " + message;
}

ProofCheck check_hll_proof(const HllProof& proof) { return check_at(proof, "root"); }

HornProgram compile_hll_to_program(const HllProof& proof) {
  if (auto check = check_hll_proof(proof); !check) throw std::invalid_argument(check.describe());
  return compile(proof);
}

std::size_t proof_size(const HllProof& proof) {
  std::size_t n = 1;
  for (const auto& p : proof.premises) n += proof_size(p);
  return n;
}

}  // namespace hornlog
