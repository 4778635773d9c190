#include <algorithm>
#include <map>
#include <stdexcept>

#include "hornlog/program.hpp"

namespace hornlog {

namespace {

struct Candidate {
  HornFormula formula;
  std::optional<std::size_t> linear;  // index into the linear table, absent for a banged use
};

class Prover {
 public:
  explicit Prover(const HornSequent& s) : goal_(s.goal) {
    for (const auto& f : canonical_multiset(s.linear)) {
      if (linear_.empty() || linear_.back() != f) {
        linear_.push_back(f);
        initial_.push_back(0);
      }
      ++initial_.back();
    }
    const auto banged = canonical_multiset(s.banged);
    std::vector<HornFormula> distinct = linear_;
    distinct.insert(distinct.end(), banged.begin(), banged.end());
    std::sort(distinct.begin(), distinct.end(), [](const HornFormula& a, const HornFormula& b) {
      if (a.is_oplus() != b.is_oplus()) return !a.is_oplus();
      return to_string(a) < to_string(b);
    });
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& f : distinct) {
      const auto it = std::find(linear_.begin(), linear_.end(), f);
      if (it != linear_.end()) candidates_.push_back({f, static_cast<std::size_t>(it - linear_.begin())});
      if (std::binary_search(banged.begin(), banged.end(), f)) candidates_.push_back({f, std::nullopt});
    }
  }

  std::optional<HornProgram> run(const SimpleProduct& input, std::size_t depth) {
    return search(input, initial_, depth);
  }

 private:
  using Key = std::pair<SimpleProduct, std::vector<std::uint32_t>>;

  std::optional<HornProgram> search(const SimpleProduct& x, const std::vector<std::uint32_t>& remaining,
                                    std::size_t depth) {
    const bool spent = std::all_of(remaining.begin(), remaining.end(), [](auto c) { return c == 0; });
    if (spent && x == goal_) return HornProgram{};
    if (depth == 0) return std::nullopt;
    Key key{x, remaining};
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= depth) return std::nullopt;

    for (const auto& c : candidates_) {
      if (c.linear && remaining[*c.linear] == 0) continue;
      auto rest = remaining;
      if (c.linear) --rest[*c.linear];
      const auto frame = match_antecedent(x, c.formula.antecedent());
      if (!frame) continue;
      if (!c.formula.is_oplus()) {
        if (auto sub = search(c.formula.consequent() * *frame, rest, depth - 1)) {
          return compose(HornProgram::single_edge(c.formula), *sub);
        }
        continue;
      }
      auto left = search(c.formula.left() * *frame, rest, depth - 1);
      if (!left) continue;
      auto right = search(c.formula.right() * *frame, rest, depth - 1);
      if (!right) continue;
      return strong_fork(c.formula.antecedent(), c.formula.left(), c.formula.right(), *left, *right);
    }

    auto& worst = failed_[std::move(key)];
    worst = std::max(worst, depth);
    return std::nullopt;
  }

  SimpleProduct goal_;
  std::vector<HornFormula> linear_;
  std::vector<std::uint32_t> initial_;
  std::vector<Candidate> candidates_;
  std::map<Key, std::size_t> failed_;
};

}  // namespace

std::optional<HornProgram> prove_bounded(const HornSequent& sequent, std::size_t max_depth) {
  if (max_depth == 0) throw std::invalid_argument("max_depth must be positive");
  Prover prover(sequent);
  auto witness = prover.run(sequent.input, max_depth);
  if (witness) {
    const auto report = verify_strong_solution(*witness, sequent);
    if (!report.accepted()) throw std::logic_error("prover produced an invalid witness:\n" + report.describe());
  }
  return witness;
}

}  // namespace hornlog
