#pragma once

// Literals, simple products, Horn implications and Horn sequents.
//
// Products are multisets of literals. They are stored canonically as
// lexicographically sorted (literal, count) pairs, so two products denote
// the same multiset exactly when their representations are equal.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hornlog {

/// True when `name` matches `[A-Za-z][A-Za-z0-9_]*`.
bool is_valid_literal(std::string_view name) noexcept;

/// A possibly-empty multiset of literals.
class Frame {
 public:
  using Entry = std::pair<std::string, std::uint32_t>;

  Frame() = default;
  Frame(std::initializer_list<std::string_view> literals);

  /// Adds `count` copies of `literal`. Throws std::invalid_argument for a
  /// malformed literal name.
  void add(std::string_view literal, std::uint32_t count = 1);

  bool empty() const noexcept { return entries_.empty(); }
  /// Total number of literal occurrences.
  std::size_t size() const noexcept;
  std::uint32_t count(std::string_view literal) const noexcept;
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// Multiset inclusion: every literal of `other` occurs here at least as often.
  bool includes(const Frame& other) const noexcept;
  /// Multiset difference, absent unless `other` is included in this frame.
  std::optional<Frame> minus(const Frame& other) const;
  Frame operator+(const Frame& other) const;

  friend auto operator<=>(const Frame&, const Frame&) = default;
  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<Entry> entries_;
};

/// A tensor product of one or more literals.
class SimpleProduct {
 public:
  /// Throws std::invalid_argument when `items` is empty.
  explicit SimpleProduct(Frame items);
  SimpleProduct(std::initializer_list<std::string_view> literals);

  const Frame& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  std::uint32_t count(std::string_view literal) const noexcept { return items_.count(literal); }

  SimpleProduct operator*(const SimpleProduct& other) const;
  SimpleProduct operator*(const Frame& frame) const;

  friend auto operator<=>(const SimpleProduct&, const SimpleProduct&) = default;
  friend bool operator==(const SimpleProduct&, const SimpleProduct&) = default;

 private:
  Frame items_;
};

/// X ≅ Y: both products denote the same multiset.
inline bool product_equiv(const SimpleProduct& x, const SimpleProduct& y) { return x == y; }

/// The residual V with x ≅ antecedent ⊗ V, or absent when the antecedent is
/// not a sub-multiset of x. V may be empty.
std::optional<Frame> match_antecedent(const SimpleProduct& x, const SimpleProduct& antecedent);

/// Plain Horn implication X -o Y, or ⊕-Horn implication X -o (Y1 + Y2).
class HornFormula {
 public:
  static HornFormula plain(SimpleProduct antecedent, SimpleProduct consequent);
  static HornFormula oplus(SimpleProduct antecedent, SimpleProduct left, SimpleProduct right);

  bool is_oplus() const noexcept { return right_.has_value(); }
  const SimpleProduct& antecedent() const noexcept { return antecedent_; }
  /// The consequent of a plain implication, or the left alternative of a ⊕-implication.
  const SimpleProduct& consequent() const noexcept { return left_; }
  const SimpleProduct& left() const noexcept { return left_; }
  /// Throws std::logic_error on a plain implication.
  const SimpleProduct& right() const;

  /// Same formula with the ⊕ alternatives in sorted order. Plain formulas
  /// are returned unchanged.
  HornFormula canonical() const;

  friend auto operator<=>(const HornFormula&, const HornFormula&) = default;
  friend bool operator==(const HornFormula&, const HornFormula&) = default;

 private:
  HornFormula(SimpleProduct antecedent, SimpleProduct left, std::optional<SimpleProduct> right)
      : antecedent_(std::move(antecedent)), left_(std::move(left)), right_(std::move(right)) {}

  SimpleProduct antecedent_;
  SimpleProduct left_;
  std::optional<SimpleProduct> right_;
};

/// Equality up to commutativity of ⊕.
inline bool formula_equiv(const HornFormula& a, const HornFormula& b) {
  return a.canonical() == b.canonical();
}

/// Y ⊗ V when x ≅ X ⊗ V for f = X -o Y; absent when the antecedent does not
/// match. Throws std::invalid_argument if f is a ⊕-implication.
std::optional<SimpleProduct> apply_implication(const SimpleProduct& x, const HornFormula& f);

/// W, Γ, !Δ |- Z. Zones keep insertion order for printing; all comparisons
/// treat them as multisets.
struct HornSequent {
  SimpleProduct input;
  std::vector<HornFormula> linear;
  std::vector<HornFormula> banged;
  SimpleProduct goal;
};

/// Sorted canonical copy of a formula multiset.
std::vector<HornFormula> canonical_multiset(std::span<const HornFormula> formulas);
bool same_multiset(std::span<const HornFormula> a, std::span<const HornFormula> b);
/// Number of occurrences of `f` in `zone`, up to ⊕ commutativity.
std::size_t occurrences(std::span<const HornFormula> zone, const HornFormula& f);

/// Products equal, zones equal as multisets.
bool sequent_equiv(const HornSequent& a, const HornSequent& b);

// Text forms. Products print as `a*b*b`; formulas as `(a*b) -o c` and
// `a -o (b + c*d)`; sequents as `W ; Γ ; Δ |- Z`.
std::string to_string(const Frame& frame);
std::string to_string(const SimpleProduct& product);
std::string to_string(const HornFormula& formula);
std::string to_string(const HornSequent& sequent);

/// Malformed text input, with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The message without its position prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

SimpleProduct parse_product(std::string_view text);
HornFormula parse_formula(std::string_view text);
HornSequent parse_sequent(std::string_view text);

}  // namespace hornlog
