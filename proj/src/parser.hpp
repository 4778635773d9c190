#pragma once

// Recursive-descent reader for the product/formula/sequent text grammar.
// Internal to the library; the LL sequent reader builds on it.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hornlog/syntax.hpp"

namespace hornlog::detail {

enum class Tok {
  Ident,
  Int,
  Star,
  LParen,
  RParen,
  Plus,
  Comma,
  Semi,
  Turnstile,
  Lolli,
  Bang,
  Hash,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::string_view describe(Tok kind);

/// A parenthesised group is either a product or a binary ⊕ of products.
struct Group {
  SimpleProduct first;
  std::optional<SimpleProduct> alternative;
};

class Parser {
 public:
  /// Throws ParseError on characters outside the grammar.
  explicit Parser(std::string_view text);

  const Token& peek() const { return tokens_[pos_]; }
  Token next();
  bool accept(Tok kind);
  Token expect(Tok kind);
  bool at_end() const { return peek().kind == Tok::End; }
  void finish();

  [[noreturn]] void fail(const Token& at, const std::string& message) const;
  [[noreturn]] void fail_here(const std::string& message) const { fail(peek(), message); }

  SimpleProduct product();
  /// `(` already consumed: reads `P )` or `P + Q )`, then any `* atom` tail
  /// for the plain case.
  Group group_tail();
  /// Product or parenthesised ⊕ group, as found on the right of `-o`.
  Group consequent();
  HornFormula formula();
  HornFormula formula_after_antecedent(SimpleProduct antecedent);
  /// Comma-separated, possibly empty, list ended by `stop` (not consumed).
  std::vector<HornFormula> formula_list(Tok stop);
  HornSequent sequent();

 private:
  SimpleProduct atom();

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// 1-based line/column of a byte offset.
std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t offset);

}  // namespace hornlog::detail
