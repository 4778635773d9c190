#include "hornlog/encoding.hpp"

#include <charconv>
#include <stdexcept>

namespace hornlog {

EncodingContext::EncodingContext(std::uint32_t counters) : counters_(counters) {
  if (counters_ == 0) throw std::invalid_argument("encoding context needs at least one counter");
}

std::string EncodingContext::label_literal(std::uint32_t label) const { return "l" + std::to_string(label); }

std::string EncodingContext::counter_literal(std::uint32_t m) const { return "r" + std::to_string(m); }

std::string EncodingContext::killer_literal(std::uint32_t m) const { return "k" + std::to_string(m); }

HornFormula encode_instruction(const EncodingContext& ctx, const Instruction& ins) {
  const SimpleProduct li{ctx.label_literal(ins.label)};
  const SimpleProduct lj{ctx.label_literal(ins.target)};
  const SimpleProduct rm{ctx.counter_literal(ins.counter)};
  switch (ins.kind) {
    case InstructionKind::Inc: return HornFormula::plain(li, lj * rm);
    case InstructionKind::Dec: return HornFormula::plain(li * rm, lj);
    case InstructionKind::IfPos: return HornFormula::plain(li * rm, lj * rm);
    case InstructionKind::IfZero:
      return HornFormula::oplus(li, lj, SimpleProduct{ctx.killer_literal(ins.counter)});
    case InstructionKind::Halt: break;
  }
  throw std::invalid_argument("halt instructions have no encoding");
}

std::vector<HornFormula> build_killers_for(const EncodingContext& ctx, std::uint32_t m) {
  const SimpleProduct km{ctx.killer_literal(m)};
  std::vector<HornFormula> out{HornFormula::plain(km, SimpleProduct{ctx.label_literal(0)})};
  for (std::uint32_t i = 1; i <= ctx.counters(); ++i) {
    if (i != m) out.push_back(HornFormula::plain(km * SimpleProduct{ctx.counter_literal(i)}, km));
  }
  return out;
}

std::vector<HornFormula> build_killers(const EncodingContext& ctx) {
  std::vector<HornFormula> out;
  for (std::uint32_t m = 1; m <= ctx.counters(); ++m) {
    auto km = build_killers_for(ctx, m);
    out.insert(out.end(), km.begin(), km.end());
  }
  return out;
}

namespace {

SimpleProduct with_counters(const EncodingContext& ctx, std::string head,
                            const std::vector<std::uint32_t>& counters) {
  if (counters.size() != ctx.counters()) {
    throw std::invalid_argument("expected " + std::to_string(ctx.counters()) + " counters, got " +
                                std::to_string(counters.size()));
  }
  Frame items{head};
  for (std::uint32_t m = 1; m <= counters.size(); ++m) items.add(ctx.counter_literal(m), counters[m - 1]);
  return SimpleProduct(std::move(items));
}

// `<prefix><digits>` with no leading zeros (other than "0" itself).
std::optional<std::uint32_t> indexed(std::string_view literal, char prefix) {
  if (literal.size() < 2 || literal.front() != prefix) return std::nullopt;
  const std::string_view digits = literal.substr(1);
  if (digits.size() > 1 && digits.front() == '0') return std::nullopt;
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

}  // namespace

SimpleProduct encode_config(const EncodingContext& ctx, const Configuration& k) {
  return with_counters(ctx, ctx.label_literal(k.label), k.counters);
}

SimpleProduct encode_killer_state(const EncodingContext& ctx, std::uint32_t m,
                                  const std::vector<std::uint32_t>& counters) {
  return with_counters(ctx, ctx.killer_literal(m), counters);
}

std::optional<DecodedState> decode_product(const EncodingContext& ctx, const SimpleProduct& x) {
  std::optional<DecodedState> state;
  std::vector<std::uint32_t> counters(ctx.counters(), 0);
  for (const auto& [literal, count] : x.items().entries()) {
    if (auto m = indexed(literal, 'r'); m && *m >= 1 && *m <= ctx.counters()) {
      counters[*m - 1] = count;
      continue;
    }
    std::optional<DecodedState> head;
    if (auto i = indexed(literal, 'l')) {
      head = DecodedState{HeadKind::Label, *i, {}};
    } else if (auto m = indexed(literal, 'k'); m && *m >= 1 && *m <= ctx.counters()) {
      head = DecodedState{HeadKind::Killer, *m, {}};
    } else {
      return std::nullopt;
    }
    if (state || count != 1) return std::nullopt;
    state = std::move(head);
  }
  if (!state) return std::nullopt;
  state->counters = std::move(counters);
  return state;
}

std::vector<HornFormula> EncodedMachine::banged_zone() const {
  std::vector<HornFormula> zone;
  zone.reserve(program.size() + killers.size());
  for (const auto& f : program) zone.push_back(f.formula);
  for (const auto& f : killers) zone.push_back(f.formula);
  return zone;
}

EncodedMachine encode_machine(const EncodingContext& ctx, const MinskyMachine& machine) {
  if (ctx.counters() != machine.counters()) {
    throw std::invalid_argument("encoding context has " + std::to_string(ctx.counters()) +
                                " counters, machine has " + std::to_string(machine.counters()));
  }
  EncodedMachine out;
  const auto& program = machine.instructions();
  for (std::size_t i = 0; i < program.size(); ++i) {
    if (program[i].kind == InstructionKind::Halt) continue;
    out.program.push_back(EncodedFormula{encode_instruction(ctx, program[i]), EncodedFormula::Origin::Program, i, 0});
  }
  for (std::uint32_t m = 1; m <= ctx.counters(); ++m) {
    for (auto& f : build_killers_for(ctx, m)) {
      out.killers.push_back(EncodedFormula{std::move(f), EncodedFormula::Origin::Killer, 0, m});
    }
  }
  return out;
}

HornSequent build_sequent(const EncodingContext& ctx, const MinskyMachine& machine,
                          const std::vector<std::uint32_t>& inputs) {
  const auto encoded = encode_machine(ctx, machine);
  return HornSequent{encode_config(ctx, Configuration{1, inputs}), {}, encoded.banged_zone(),
                     SimpleProduct{ctx.label_literal(0)}};
}

}  // namespace hornlog
