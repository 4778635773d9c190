#include "hornlog/io.hpp"

#include <charconv>
#include <stdexcept>

#include <json.hpp>

#include "parser.hpp"

namespace hornlog {

using nlohmann::json;

namespace {

std::optional<std::size_t> number(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, column] = detail::position_of(text, std::min(at, text.size()));
    throw ParseError("malformed JSON", line, column);
  }
}

const json& field(const json& node, const char* key) {
  if (!node.is_object() || !node.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return node.at(key);
}

std::string text_field(const json& node, const char* key) {
  const json& v = field(node, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::string> optional_text(const json& node, const char* key) {
  if (!node.contains(key)) return std::nullopt;
  return text_field(node, key);
}

std::size_t index_field(const json& node, const char* key) {
  const json& v = field(node, key);
  if (!v.is_number_unsigned()) throw std::invalid_argument(std::string("field '") + key + "' must be a vertex index");
  return v.get<std::size_t>();
}

Frame parse_frame(const std::string& text) {
  if (trim(text).empty()) return {};
  return parse_product(text).items();
}

HornProgram program_from_json(const json& doc) {
  const json& vertices = field(doc, "vertices");
  if (!vertices.is_array()) throw std::invalid_argument("'vertices' must be an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!vertices[i].is_number_unsigned() || vertices[i].get<std::size_t>() != i) {
      throw std::invalid_argument("'vertices' must list 0..n-1 in order");
    }
  }
  std::vector<ProgramEdge> edges;
  const json& list = field(doc, "edges");
  if (!list.is_array()) throw std::invalid_argument("'edges' must be an array");
  for (const auto& e : list) {
    edges.push_back(ProgramEdge{index_field(e, "parent"), index_field(e, "child"), parse_formula(text_field(e, "label"))});
  }
  return HornProgram::from_parts(vertices.size(), index_field(doc, "root"), std::move(edges));
}

HornProgram program_from_text(std::string_view text) {
  std::optional<std::size_t> vertices;
  std::optional<std::size_t> root;
  std::vector<ProgramEdge> edges;
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto fail = [&](std::size_t column, const std::string& message) { throw ParseError(message, line_no, column); };
    const std::string_view body = trim(line);
    const std::size_t indent = body.empty() ? 0 : static_cast<std::size_t>(body.data() - line.data());

    if (!body.empty()) {
      if (body.substr(0, 9) == "vertices ") {
        if (vertices) fail(indent + 1, "duplicate 'vertices' declaration");
        vertices = number(trim(body.substr(9)));
        if (!vertices || *vertices == 0) fail(indent + 10, "expected a positive vertex count");
      } else if (body.substr(0, 5) == "root ") {
        if (root) fail(indent + 1, "duplicate 'root' declaration");
        root = number(trim(body.substr(5)));
        if (!root) fail(indent + 6, "expected a root vertex");
      } else {
        const std::size_t arrow = body.find("->");
        const std::size_t colon = body.find(':');
        if (arrow == std::string_view::npos || colon == std::string_view::npos || colon < arrow) {
          fail(indent + 1, "expected '<parent> -> <child> : <formula>'");
        }
        auto parent = number(trim(body.substr(0, arrow)));
        if (!parent) fail(indent + 1, "expected a parent vertex");
        auto child = number(trim(body.substr(arrow + 2, colon - arrow - 2)));
        if (!child) fail(indent + arrow + 3, "expected a child vertex");
        const std::string_view label = body.substr(colon + 1);
        try {
          edges.push_back(ProgramEdge{*parent, *child, parse_formula(label)});
        } catch (const ParseError& e) {
          fail(indent + colon + 1 + e.column(), e.message());
        }
      }
    }
    if (end == text.size()) break;
    start = end + 1;
    ++line_no;
  }
  if (!vertices) throw ParseError("missing 'vertices <n>' declaration", 1, 1);
  return HornProgram::from_parts(*vertices, root.value_or(0), std::move(edges));
}

json hll_to_json(const HllProof& p) {
  json node{{"rule", rule_tag(p.rule)}, {"conclusion", to_string(p.conclusion)}};
  if (p.rule == HllRule::M || p.rule == HllRule::OplusH) node["frame"] = to_string(p.frame);
  if (p.formula) node["formula"] = to_string(*p.formula);
  if (p.cut) node["cut"] = to_string(*p.cut);
  json premises = json::array();
  for (const auto& q : p.premises) premises.push_back(hll_to_json(q));
  node["premises"] = std::move(premises);
  return node;
}

HllProof hll_from_json(const json& node) {
  const std::string tag = text_field(node, "rule");
  const auto rule = parse_hll_rule(tag);
  if (!rule) throw std::invalid_argument("unknown HLL rule '" + tag + "'");
  HllProof p{*rule, parse_sequent(text_field(node, "conclusion")), {}, {}, std::nullopt, std::nullopt};
  if (auto frame = optional_text(node, "frame")) p.frame = parse_frame(*frame);
  if (auto f = optional_text(node, "formula")) p.formula = parse_formula(*f);
  if (auto u = optional_text(node, "cut")) p.cut = parse_product(*u);
  if (node.contains("premises")) {
    const json& list = node.at("premises");
    if (!list.is_array()) throw std::invalid_argument("'premises' must be an array");
    for (const auto& q : list) p.premises.push_back(hll_from_json(q));
  }
  return p;
}

json ll_to_json(const LlProof& p) {
  json node{{"rule", rule_tag(p.rule)}, {"conclusion", to_string(p.conclusion)}};
  if (p.formula) node["formula"] = to_string(*p.formula);
  if (p.parts) node["parts"] = json::array({to_string(p.parts->first), to_string(p.parts->second)});
  if (p.oplus) node["oplus"] = to_string(LlFormula{*p.oplus});
  json premises = json::array();
  for (const auto& q : p.premises) premises.push_back(ll_to_json(q));
  node["premises"] = std::move(premises);
  return node;
}

LlProof ll_from_json(const json& node) {
  const std::string tag = text_field(node, "rule");
  const auto rule = parse_ll_rule(tag);
  if (!rule) throw std::invalid_argument("unknown LL rule '" + tag + "'");
  LlProof p{*rule, parse_ll_sequent(text_field(node, "conclusion")), {}, std::nullopt, std::nullopt, std::nullopt};
  if (auto f = optional_text(node, "formula")) p.formula = parse_formula(*f);
  if (node.contains("parts")) {
    const json& parts = node.at("parts");
    if (!parts.is_array() || parts.size() != 2 || !parts[0].is_string() || !parts[1].is_string()) {
      throw std::invalid_argument("'parts' must hold two products");
    }
    p.parts = std::make_pair(parse_product(parts[0].get<std::string>()), parse_product(parts[1].get<std::string>()));
  }
  if (auto o = optional_text(node, "oplus")) {
    LlFormula f = parse_ll_formula(*o);
    if (!std::holds_alternative<OplusProduct>(f)) throw std::invalid_argument("'oplus' must be a tagged ⊕-product");
    p.oplus = std::get<OplusProduct>(std::move(f));
  }
  if (node.contains("premises")) {
    const json& list = node.at("premises");
    if (!list.is_array()) throw std::invalid_argument("'premises' must be an array");
    for (const auto& q : list) p.premises.push_back(ll_from_json(q));
  }
  return p;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string format_program(const HornProgram& program) {
  std::string out = "vertices " + std::to_string(program.vertex_count()) + "\n";
  out += "root " + std::to_string(program.root()) + "\n";
  for (const auto& e : program.edges()) {
    out += std::to_string(e.parent) + " -> " + std::to_string(e.child) + " : " + to_string(e.label) + "\n";
  }
  return out;
}

std::string program_to_json(const HornProgram& program) {
  json vertices = json::array();
  for (std::size_t v = 0; v < program.vertex_count(); ++v) vertices.push_back(v);
  json edges = json::array();
  for (const auto& e : program.edges()) {
    edges.push_back(json{{"parent", e.parent}, {"child", e.child}, {"label", to_string(e.label)}});
  }
  json doc{{"vertices", std::move(vertices)}, {"root", program.root()}, {"edges", std::move(edges)}};
  return doc.dump(2) + "\n";
}

HornProgram parse_program(std::string_view text) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return program_from_json(parse_json(text));
  return program_from_text(text);
}

std::string program_to_dot(const HornProgram& program, const std::optional<SimpleProduct>& input) {
  std::optional<Evaluation> eval;
  if (input) eval = evaluate(program, *input);
  std::string out = "digraph program {\n  node [shape=box];\n";
  for (std::size_t v = 0; v < program.vertex_count(); ++v) {
    std::string label = std::to_string(v);
    if (eval) label += ": " + (eval->at(v) ? to_string(*eval->at(v)) : std::string("undefined"));
    out += "  v" + std::to_string(v) + " [label=\"" + escape(label) + "\"];\n";
  }
  for (const auto& e : program.edges()) {
    out += "  v" + std::to_string(e.parent) + " -> v" + std::to_string(e.child) + " [label=\"" +
           escape(to_string(e.label)) + "\"];\n";
  }
  return out + "}\n";
}

std::string hll_proof_to_json(const HllProof& proof) { return hll_to_json(proof).dump(2) + "\n"; }

HllProof parse_hll_proof(std::string_view text) { return hll_from_json(parse_json(text)); }

std::string ll_proof_to_json(const LlProof& proof) { return ll_to_json(proof).dump(2) + "\n"; }

LlProof parse_ll_proof(std::string_view text) { return ll_from_json(parse_json(text)); }

}  // namespace hornlog
