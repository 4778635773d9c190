#include "hornlog/syntax.hpp"

#include <algorithm>
#include <cctype>

#include "parser.hpp"

namespace hornlog {

bool is_valid_literal(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// ---------------------------------------------------------------------------
// Frame

Frame::Frame(std::initializer_list<std::string_view> literals) {
  for (auto literal : literals) add(literal);
}

void Frame::add(std::string_view literal, std::uint32_t count) {
  if (!is_valid_literal(literal)) {
    throw std::invalid_argument("invalid literal name '" + std::string(literal) + "'");
  }
  if (count == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), literal,
                             [](const Entry& e, std::string_view l) { return e.first < l; });
  if (it != entries_.end() && it->first == literal) {
    it->second += count;
  } else {
    entries_.insert(it, Entry{std::string(literal), count});
  }
}

std::size_t Frame::size() const noexcept {
  std::size_t total = 0;
  for (const auto& [_, count] : entries_) total += count;
  return total;
}

std::uint32_t Frame::count(std::string_view literal) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), literal,
                             [](const Entry& e, std::string_view l) { return e.first < l; });
  return (it != entries_.end() && it->first == literal) ? it->second : 0;
}

bool Frame::includes(const Frame& other) const noexcept {
  auto mine = entries_.begin();
  for (const auto& [literal, count] : other.entries_) {
    while (mine != entries_.end() && mine->first < literal) ++mine;
    if (mine == entries_.end() || mine->first != literal || mine->second < count) return false;
  }
  return true;
}

std::optional<Frame> Frame::minus(const Frame& other) const {
  if (!includes(other)) return std::nullopt;
  Frame rest;
  for (const auto& [literal, count] : entries_) {
    const std::uint32_t left = count - other.count(literal);
    if (left > 0) rest.entries_.emplace_back(literal, left);
  }
  return rest;
}

Frame Frame::operator+(const Frame& other) const {
  Frame sum;
  sum.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      sum.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      sum.entries_.push_back(*b++);
    } else {
      sum.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return sum;
}

// ---------------------------------------------------------------------------
// SimpleProduct

SimpleProduct::SimpleProduct(Frame items) : items_(std::move(items)) {
  if (items_.empty()) throw std::invalid_argument("a simple product needs at least one literal");
}

SimpleProduct::SimpleProduct(std::initializer_list<std::string_view> literals)
    : SimpleProduct(Frame(literals)) {}

SimpleProduct SimpleProduct::operator*(const SimpleProduct& other) const {
  return SimpleProduct(items_ + other.items_);
}

SimpleProduct SimpleProduct::operator*(const Frame& frame) const {
  return SimpleProduct(items_ + frame);
}

std::optional<Frame> match_antecedent(const SimpleProduct& x, const SimpleProduct& antecedent) {
  return x.items().minus(antecedent.items());
}

// ---------------------------------------------------------------------------
// HornFormula

HornFormula HornFormula::plain(SimpleProduct antecedent, SimpleProduct consequent) {
  return HornFormula(std::move(antecedent), std::move(consequent), std::nullopt);
}

HornFormula HornFormula::oplus(SimpleProduct antecedent, SimpleProduct left, SimpleProduct right) {
  return HornFormula(std::move(antecedent), std::move(left), std::move(right));
}

const SimpleProduct& HornFormula::right() const {
  if (!right_) throw std::logic_error("plain implication has no right alternative");
  return *right_;
}

HornFormula HornFormula::canonical() const {
  if (right_ && *right_ < left_) return HornFormula(antecedent_, *right_, left_);
  return *this;
}

std::optional<SimpleProduct> apply_implication(const SimpleProduct& x, const HornFormula& f) {
  if (f.is_oplus()) {
    throw std::invalid_argument("apply_implication: " + to_string(f) + " is a ⊕-implication");
  }
  auto frame = match_antecedent(x, f.antecedent());
  if (!frame) return std::nullopt;
  return f.consequent() * *frame;
}

// ---------------------------------------------------------------------------
// Multisets of formulas

std::vector<HornFormula> canonical_multiset(std::span<const HornFormula> formulas) {
  std::vector<HornFormula> out;
  out.reserve(formulas.size());
  for (const auto& f : formulas) out.push_back(f.canonical());
  std::sort(out.begin(), out.end());
  return out;
}

bool same_multiset(std::span<const HornFormula> a, std::span<const HornFormula> b) {
  return a.size() == b.size() && canonical_multiset(a) == canonical_multiset(b);
}

std::size_t occurrences(std::span<const HornFormula> zone, const HornFormula& f) {
  const HornFormula key = f.canonical();
  return static_cast<std::size_t>(
      std::count_if(zone.begin(), zone.end(), [&](const HornFormula& g) { return g.canonical() == key; }));
}

bool sequent_equiv(const HornSequent& a, const HornSequent& b) {
  return a.input == b.input && a.goal == b.goal && same_multiset(a.linear, b.linear) &&
         same_multiset(a.banged, b.banged);
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Frame& frame) {
  std::string out;
  for (const auto& [literal, count] : frame.entries()) {
    for (std::uint32_t i = 0; i < count; ++i) {
      if (!out.empty()) out += '*';
      out += literal;
    }
  }
  return out;
}

std::string to_string(const SimpleProduct& product) { return to_string(product.items()); }

namespace {

std::string operand(const SimpleProduct& p) {
  return p.size() > 1 ? "(" + to_string(p) + ")" : to_string(p);
}

std::string join(const std::vector<HornFormula>& formulas) {
  std::string out;
  for (const auto& f : formulas) {
    if (!out.empty()) out += ", ";
    out += to_string(f);
  }
  return out;
}

}  // namespace

std::string to_string(const HornFormula& formula) {
  std::string out = operand(formula.antecedent()) + " -o ";
  if (formula.is_oplus()) {
    out += "(" + to_string(formula.left()) + " + " + to_string(formula.right()) + ")";
  } else {
    out += operand(formula.consequent());
  }
  return out;
}

std::string to_string(const HornSequent& sequent) {
  std::string out = to_string(sequent.input) + " ;";
  if (!sequent.linear.empty()) out += " " + join(sequent.linear);
  out += " ;";
  if (!sequent.banged.empty()) out += " " + join(sequent.banged);
  out += " |- " + to_string(sequent.goal);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

SimpleProduct parse_product(std::string_view text) {
  detail::Parser parser(text);
  auto product = parser.product();
  parser.finish();
  return product;
}

HornFormula parse_formula(std::string_view text) {
  detail::Parser parser(text);
  auto formula = parser.formula();
  parser.finish();
  return formula;
}

HornSequent parse_sequent(std::string_view text) {
  detail::Parser parser(text);
  auto sequent = parser.sequent();
  parser.finish();
  return sequent;
}

namespace detail {

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "literal";
    case Tok::Int: return "integer";
    case Tok::Star: return "'*'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Plus: return "'+'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Turnstile: return "'|-'";
    case Tok::Lolli: return "'-o'";
    case Tok::Bang: return "'!'";
    case Tok::Hash: return "'#'";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Parser::Parser(std::string_view text) : text_(text) {
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t start, std::size_t length) {
    tokens_.push_back(Token{kind, std::string(text.substr(start, length)), start});
    i = start + length;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      push(Tok::Ident, i, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::Int, i, j - i);
      continue;
    }
    switch (c) {
      case '*': push(Tok::Star, i, 1); continue;
      case '(': push(Tok::LParen, i, 1); continue;
      case ')': push(Tok::RParen, i, 1); continue;
      case '+': push(Tok::Plus, i, 1); continue;
      case ',': push(Tok::Comma, i, 1); continue;
      case ';': push(Tok::Semi, i, 1); continue;
      case '!': push(Tok::Bang, i, 1); continue;
      case '#': push(Tok::Hash, i, 1); continue;
      case '|':
        if (i + 1 < text.size() && text[i + 1] == '-') {
          push(Tok::Turnstile, i, 2);
          continue;
        }
        break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == 'o') {
          push(Tok::Lolli, i, 2);
          continue;
        }
        break;
      default:
        break;
    }
    auto [line, column] = position_of(text, i);
    throw ParseError(std::string("unexpected character '") + c + "'", line, column);
  }
  tokens_.push_back(Token{Tok::End, "", text.size()});
}

Token Parser::next() {
  Token t = tokens_[pos_];
  if (t.kind != Tok::End) ++pos_;
  return t;
}

bool Parser::accept(Tok kind) {
  if (peek().kind != kind) return false;
  next();
  return true;
}

Token Parser::expect(Tok kind) {
  if (peek().kind != kind) {
    fail_here("expected " + std::string(describe(kind)) + ", found " + std::string(describe(peek().kind)));
  }
  return next();
}

void Parser::finish() {
  if (!at_end()) fail_here("unexpected " + std::string(describe(peek().kind)) + " after end of expression");
}

void Parser::fail(const Token& at, const std::string& message) const {
  auto [line, column] = position_of(text_, at.offset);
  throw ParseError(message, line, column);
}

SimpleProduct Parser::atom() {
  if (peek().kind == Tok::Ident) return SimpleProduct(Frame{next().text});
  if (accept(Tok::LParen)) {
    SimpleProduct inner = product();
    expect(Tok::RParen);
    return inner;
  }
  fail_here("expected literal or '(', found " + std::string(describe(peek().kind)));
}

SimpleProduct Parser::product() {
  SimpleProduct result = atom();
  while (accept(Tok::Star)) result = result * atom();
  return result;
}

Group Parser::group_tail() {
  SimpleProduct first = product();
  if (accept(Tok::Plus)) {
    SimpleProduct second = product();
    expect(Tok::RParen);
    return Group{std::move(first), std::move(second)};
  }
  expect(Tok::RParen);
  while (accept(Tok::Star)) first = first * atom();
  return Group{std::move(first), std::nullopt};
}

Group Parser::consequent() {
  if (accept(Tok::LParen)) return group_tail();
  return Group{product(), std::nullopt};
}

HornFormula Parser::formula_after_antecedent(SimpleProduct antecedent) {
  expect(Tok::Lolli);
  Group rhs = consequent();
  if (rhs.alternative) {
    return HornFormula::oplus(std::move(antecedent), std::move(rhs.first), std::move(*rhs.alternative));
  }
  return HornFormula::plain(std::move(antecedent), std::move(rhs.first));
}

HornFormula Parser::formula() { return formula_after_antecedent(product()); }

std::vector<HornFormula> Parser::formula_list(Tok stop) {
  std::vector<HornFormula> out;
  if (peek().kind == stop) return out;
  out.push_back(formula());
  while (accept(Tok::Comma)) out.push_back(formula());
  return out;
}

HornSequent Parser::sequent() {
  SimpleProduct input = product();
  expect(Tok::Semi);
  auto linear = formula_list(Tok::Semi);
  expect(Tok::Semi);
  auto banged = formula_list(Tok::Turnstile);
  expect(Tok::Turnstile);
  SimpleProduct goal = product();
  return HornSequent{std::move(input), std::move(linear), std::move(banged), std::move(goal)};
}

}  // namespace detail
}  // namespace hornlog
