// hornlog: command-line front end.
//
// Exit status: 0 success or accept, 1 reject or no witness, 2 malformed input.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hornlog/bridge.hpp"
#include "hornlog/encoding.hpp"
#include "hornlog/hll.hpp"
#include "hornlog/io.hpp"
#include "hornlog/ll.hpp"
#include "hornlog/minsky.hpp"
#include "hornlog/program.hpp"
#include "hornlog/syntax.hpp"

using namespace hornlog;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kMalformed = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  bool dot = false;
  bool structured() const { return format == "structured"; }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename F>
auto load(const std::string& path, F parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::uint32_t> parse_inputs(const std::string& text, const MinskyMachine& machine) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v > UINT32_MAX) throw std::out_of_range(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      throw InputError("--input: '" + item + "' is not a counter value");
    }
  }
  if (out.size() != machine.counters()) {
    throw InputError("--input: expected " + std::to_string(machine.counters()) + " counter values, got " +
                     std::to_string(out.size()));
  }
  return out;
}

std::string_view kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::LeafMismatch: return "LEAF_MISMATCH";
    case ViolationKind::ForeignFormula: return "FOREIGN_FORMULA";
    case ViolationKind::LinearCount: return "LINEAR_COUNT";
  }
  return "?";
}

json sequent_json(const HornSequent& s) {
  json linear = json::array();
  for (const auto& f : s.linear) linear.push_back(to_string(f));
  json banged = json::array();
  for (const auto& f : s.banged) banged.push_back(to_string(f));
  return json{{"input", to_string(s.input)}, {"linear", linear}, {"banged", banged}, {"goal", to_string(s.goal)}};
}

json computation_json(const Computation& c) {
  json configs = json::array();
  for (const auto& k : c.configs) configs.push_back(json{{"label", k.label}, {"counters", k.counters}});
  json moves = json::array();
  for (auto m : c.moves) moves.push_back(m + 1);
  return json{{"configs", configs}, {"moves", moves}};
}

json report_json(const SolutionReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json item{{"kind", kind_name(v.kind)}};
    if (v.vertex) item["vertex"] = *v.vertex;
    if (v.edge) item["edge"] = *v.edge;
    if (v.formula) item["formula"] = to_string(*v.formula);
    if (v.kind == ViolationKind::LeafMismatch) item["actual"] = v.actual ? json(to_string(*v.actual)) : json(nullptr);
    if (v.kind == ViolationKind::LinearCount) {
      item["count"] = v.count;
      item["expected"] = v.expected;
    }
    violations.push_back(std::move(item));
  }
  return json{{"accepted", r.accepted()}, {"violations", violations}};
}

void emit_program(const Options& opt, const HornProgram& p, const std::optional<SimpleProduct>& input) {
  if (opt.dot) {
    std::cout << program_to_dot(p, input);
  } else if (opt.structured()) {
    std::cout << program_to_json(p);
  } else {
    std::cout << format_program(p);
  }
}

void emit_computation(const Options& opt, const Computation& c) {
  if (opt.structured()) {
    std::cout << computation_json(c).dump(2) << "\n";
  } else {
    std::cout << format_computation(c);
  }
}

int emit_check(const Options& opt, const ProofCheck& check) {
  if (opt.structured()) {
    json out{{"accepted", check.ok}};
    if (!check.ok) out.update(json{{"path", check.path}, {"rule", check.rule}, {"message", check.message}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << check.describe() << "\n";
  }
  return check ? kOk : kReject;
}

MinskyMachine load_machine(const std::string& path) { return load(path, [](const std::string& t) { return parse_machine(t); }); }

// Deterministic simulation: always takes the first enabled move.
int run_machine(const Options& opt, const MinskyMachine& m, const std::vector<std::uint32_t>& inputs, std::size_t max_steps) {
  Computation c;
  c.configs.push_back(Configuration{1, inputs});
  while (!is_halting(c.configs.back()) && c.moves.size() < max_steps) {
    auto next = successors(m, c.configs.back());
    if (next.empty()) break;
    c.moves.push_back(next.front().instruction);
    c.configs.push_back(next.front().next);
  }
  emit_computation(opt, c);
  if (is_halting(c.configs.back())) return kOk;
  std::cerr << (c.moves.size() >= max_steps ? "step limit reached" : "no enabled move") << " at "
            << to_string(c.configs.back()) << "\n";
  return kReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Horn linear logic and Minsky machine toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output serialization")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--dot", opt.dot, "Emit programs in Graphviz dot format");

  std::function<int()> action;
  std::string machine_path, second_path, input_text;
  std::size_t max_steps = 1000, depth = 20;
  std::uint32_t max_counter = 10;

  auto* machine = app.add_subcommand("machine", "Parse, simulate or search a Minsky machine");
  machine->require_subcommand(1);
  auto* m_check = machine->add_subcommand("check", "Validate a machine and print its normal form");
  m_check->add_option("machine", machine_path)->required();
  m_check->callback([&] {
    action = [&] {
      const auto m = load_machine(machine_path);
      if (opt.structured()) {
        json ins = json::array();
        for (const auto& i : m.instructions()) ins.push_back(to_string(i));
        std::cout << json{{"counters", m.counters()}, {"instructions", ins}}.dump(2) << "\n";
      } else {
        std::cout << to_string(m);
      }
      return kOk;
    };
  });
  auto* m_run = machine->add_subcommand("run", "Simulate taking the first enabled move");
  m_run->add_option("machine", machine_path)->required();
  m_run->add_option("--input", input_text, "Initial counters, e.g. 2,0")->required();
  m_run->add_option("--max-steps", max_steps);
  m_run->callback([&] {
    action = [&] {
      const auto m = load_machine(machine_path);
      return run_machine(opt, m, parse_inputs(input_text, m), max_steps);
    };
  });
  auto* m_search = machine->add_subcommand("search", "Bounded search for a halting computation");
  m_search->add_option("machine", machine_path)->required();
  m_search->add_option("--input", input_text)->required();
  m_search->add_option("--max-steps", max_steps);
  m_search->add_option("--max-counter", max_counter);
  m_search->callback([&] {
    action = [&] {
      const auto m = load_machine(machine_path);
      auto c = search_halting(m, Configuration{1, parse_inputs(input_text, m)}, SearchBounds{max_steps, max_counter});
      if (!c) {
        std::cerr << "no halting computation within bounds\n";
        return kReject;
      }
      emit_computation(opt, *c);
      return kOk;
    };
  });

  auto* encode = app.add_subcommand("encode", "Print the Horn sequent encoding a machine run");
  encode->add_option("machine", machine_path)->required();
  encode->add_option("--input", input_text)->required();
  encode->callback([&] {
    action = [&] {
      const auto m = load_machine(machine_path);
      const auto s = build_sequent(EncodingContext(m.counters()), m, parse_inputs(input_text, m));
      if (opt.structured()) {
        std::cout << sequent_json(s).dump(2) << "\n";
      } else {
        std::cout << to_string(s) << "\n";
      }
      return kOk;
    };
  });

  auto* prove = app.add_subcommand("prove", "Bounded search for a strong-solution program");
  prove->add_option("sequent", machine_path, "File holding one Horn sequent")->required();
  prove->add_option("--depth", depth);
  prove->callback([&] {
    action = [&] {
      const auto s = load(machine_path, [](const std::string& t) { return parse_sequent(t); });
      if (depth == 0) throw InputError("--depth must be positive");
      auto p = prove_bounded(s, depth);
      if (!p) {
        std::cerr << "no witness within depth " << depth << "\n";
        return kReject;
      }
      emit_program(opt, *p, s.input);
      return kOk;
    };
  });

  auto* compile = app.add_subcommand("compile", "Translate proofs");
  compile->require_subcommand(1);
  auto* c_ll = compile->add_subcommand("ll-to-hll", "LL derivation to HLL derivation");
  c_ll->add_option("proof", machine_path)->required();
  c_ll->callback([&] {
    action = [&] {
      const auto p = load(machine_path, [](const std::string& t) { return parse_ll_proof(t); });
      if (auto check = check_ll_proof(p); !check) {
        std::cerr << check.describe() << "\n";
        return kReject;
      }
      std::cout << hll_proof_to_json(translate_ll_to_hll(p));
      return kOk;
    };
  });
  auto* c_hll = compile->add_subcommand("hll-to-program", "HLL derivation to Horn program");
  c_hll->add_option("proof", machine_path)->required();
  c_hll->callback([&] {
    action = [&] {
      const auto p = load(machine_path, [](const std::string& t) { return parse_hll_proof(t); });
      if (auto check = check_hll_proof(p); !check) {
        std::cerr << check.describe() << "\n";
        return kReject;
      }
      emit_program(opt, compile_hll_to_program(p), p.conclusion.input);
      return kOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "Check programs and proofs");
  verify->require_subcommand(1);
  auto* v_sp = verify->add_subcommand("sequent-program", "Is the program a strong solution of the sequent?");
  v_sp->add_option("sequent", machine_path)->required();
  v_sp->add_option("program", second_path)->required();
  v_sp->callback([&] {
    action = [&] {
      const auto s = load(machine_path, [](const std::string& t) { return parse_sequent(t); });
      const auto p = load(second_path, [](const std::string& t) { return parse_program(t); });
      const auto report = verify_strong_solution(p, s);
      if (opt.structured()) {
        std::cout << report_json(report).dump(2) << "\n";
      } else {
        std::cout << report.describe();
      }
      return report.accepted() ? kOk : kReject;
    };
  });
  auto* v_hll = verify->add_subcommand("hll", "Check an HLL derivation");
  v_hll->add_option("proof", machine_path)->required();
  v_hll->callback([&] {
    action = [&] {
      return emit_check(opt, check_hll_proof(load(machine_path, [](const std::string& t) { return parse_hll_proof(t); })));
    };
  });
  auto* v_ll = verify->add_subcommand("ll", "Check an LL derivation");
  v_ll->add_option("proof", machine_path)->required();
  v_ll->callback([&] {
    action = [&] {
      return emit_check(opt, check_ll_proof(load(machine_path, [](const std::string& t) { return parse_ll_proof(t); })));
    };
  });

  auto* bridge = app.add_subcommand("bridge", "Between machine computations and Horn programs");
  bridge->require_subcommand(1);
  auto* b_c2p = bridge->add_subcommand("comp-to-prog", "Computation to strong-solution program");
  b_c2p->add_option("machine", machine_path)->required();
  b_c2p->add_option("computation", second_path)->required();
  b_c2p->callback([&] {
    action = [&] {
      const auto m = load_machine(machine_path);
      const auto c = load(second_path, [](const std::string& t) { return parse_computation(t); });
      const EncodingContext ctx(m.counters());
      if (c.configs.front().counters.size() != m.counters()) throw InputError(second_path + ": wrong number of counters");
      if (auto check = validate_computation(m, c); !check) {
        std::cerr << "invalid computation at " << check.index << ": " << check.reason << "\n";
        return kReject;
      }
      if (!is_halting(c.configs.back())) {
        std::cerr << "computation does not end at the halting configuration\n";
        return kReject;
      }
      const auto built = computation_to_program(ctx, m, c);
      emit_program(opt, built.program, encode_config(ctx, c.configs.front()));
      return kOk;
    };
  });
  auto* b_p2c = bridge->add_subcommand("prog-to-comp", "Extract a computation from a program");
  b_p2c->add_option("machine", machine_path)->required();
  b_p2c->add_option("program", second_path)->required();
  b_p2c->add_option("--input", input_text)->required();
  b_p2c->callback([&] {
    action = [&] {
      const auto m = load_machine(machine_path);
      const auto p = load(second_path, [](const std::string& t) { return parse_program(t); });
      const auto inputs = parse_inputs(input_text, m);
      const auto ext = program_to_computation(EncodingContext(m.counters()), m, p, inputs);
      if (!ext) {
        if (opt.structured()) {
          std::cout << json{{"error", to_string(ext.error->kind)}, {"detail", ext.error->describe()}}.dump(2) << "\n";
        } else {
          std::cout << ext.error->describe() << "\n";
        }
        return kReject;
      }
      emit_computation(opt, *ext.computation);
      return kOk;
    };
  });
  auto* b_rt = bridge->add_subcommand("roundtrip", "Cross-check machine search against proof search");
  b_rt->add_option("machine", machine_path)->required();
  b_rt->add_option("--input", input_text)->required();
  b_rt->add_option("--max-steps", max_steps);
  b_rt->add_option("--max-counter", max_counter);
  b_rt->add_option("--depth", depth);
  b_rt->callback([&] {
    action = [&] {
      const auto m = load_machine(machine_path);
      const auto inputs = parse_inputs(input_text, m);
      if (max_steps == 0 || max_counter == 0 || depth == 0) throw InputError("bounds must be positive");
      const auto r = round_trip_check(EncodingContext(m.counters()), m, inputs, RoundTripBounds{max_steps, max_counter, depth});
      if (opt.structured()) {
        json out{{"verdict", to_string(r.verdict)},
                 {"search", r.search_witness ? computation_json(*r.search_witness) : json(nullptr)},
                 {"program_verified", r.built_program_verified},
                 {"extraction_matches", r.extracted_matches},
                 {"proof_depth", r.proof_witness ? json(r.proof_witness->depth()) : json(nullptr)},
                 {"notes", r.notes}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << r.describe();
      }
      return r.verdict == Verdict::AgreeHalts || r.verdict == Verdict::AgreeNoWitness ? kOk : kReject;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kReject;
  }
}
