#include "cartcoh/cli.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <type_traits>

#include "CLI11.hpp"

#include "cartcoh/coherence.h"
#include "cartcoh/collapse.h"
#include "cartcoh/error.h"
#include "cartcoh/graph.h"
#include "cartcoh/json_io.h"
#include "cartcoh/rewrite.h"
#include "cartcoh/syntax.h"

namespace cartcoh {

namespace {

// A command-line operand names a file when one exists at that path and is
// otherwise taken as inline text.
SourceTerm source_of(const std::string& operand) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(operand, ec)) return load_source(operand);
  return SourceTerm{operand, "<inline>"};
}

class Session {
 public:
  Session(std::ostream& out, std::ostream& err, bool tty, Mode mode)
      : out_(out), err_(err), tty_(tty), mode_(mode) {}

  int object(const std::string& operand) {
    return guarded([&] {
      const SourceTerm src = source_of(operand);
      const Object a = parse(src, [&](std::string_view text) {
        return parse_object(text, mode_);
      });
      out_ << "object: " << to_string(a) << "\n"
           << "letter_length: " << a.letter_length() << "\n"
           << "symbol_length: " << a.symbol_length() << "\n";
      return kExitTrue;
    });
  }

  int check(const std::string& operand) {
    return guarded([&] {
      const Arrow t = term(operand);
      out_ << to_string(typecheck(t, mode_)) << "\n";
      return kExitTrue;
    });
  }

  int graph(const std::string& operand) {
    return guarded([&] {
      const Arrow t = term(operand);
      if (tty_) out_ << "graph of " << to_string(t.type()) << "\n";
      out_ << graph_to_json(graph_of(t)).dump(2) << "\n";
      return kExitTrue;
    });
  }

  int normalize_cmd(const std::string& operand, bool trace) {
    return guarded([&] {
      const Arrow t = term(operand);
      if (!trace) {
        out_ << print_arrow(normal_form(t, mode_)) << "\n";
        return kExitTrue;
      }
      const ReductionTrace tr = normalize(t, mode_);
      out_ << "term: " << print_arrow(t) << "\n"
           << "degree: " << to_string(degree(t)) << "\n"
           << format_trace(tr)
           << "steps: " << tr.steps.size() << "\n"
           << "result: " << print_arrow(tr.result) << "\n";
      return kExitTrue;
    });
  }

  int equal(const std::string& lhs, const std::string& rhs,
            const std::string& method) {
    return guarded([&] {
      const Arrow f = term(lhs);
      const Arrow g = term(rhs);
      std::optional<bool> by_graph, by_normal;
      if (method != "normalize") by_graph = equal_in_cart(f, g, mode_);
      if (method != "graph") by_normal = equal_via_normal_forms(f, g, mode_);
      if (by_graph && by_normal && *by_graph != *by_normal) {
        err_ << "error: InternalError: graph and normal-form verdicts disagree\n";
        return kExitError;
      }
      const bool verdict = by_graph ? *by_graph : *by_normal;
      out_ << (verdict ? "equal" : "not equal") << "\n";
      return verdict ? kExitTrue : kExitFalse;
    });
  }

  int collapse(const std::string& lhs, const std::string& rhs) {
    return guarded([&] {
      const Arrow f = term(lhs);
      const Arrow g = term(rhs);
      std::optional<CollapseWitness> w;
      try {
        w = collapse_witness(f, g, mode_);
      } catch (const Error& e) {
        if (e.code() != Errc::kAlreadyEqual) throw;
        out_ << "equal: no collapse witness exists\n";
        return kExitFalse;
      }
      if (tty_) {
        out_ << "collapse witness: j . f' . h = " << print_arrow(w->lhs_normal)
             << " and j . g' . h = " << print_arrow(w->rhs_normal) << "\n";
      }
      out_ << witness_to_json(*w).dump(2) << "\n";
      return kExitTrue;
    });
  }

  int synth(const std::string& operand) {
    return guarded([&] {
      const SourceTerm src = source_of(operand);
      Json spec;
      try {
        spec = Json::parse(src.text);
      } catch (const Json::parse_error& e) {
        throw Error(Errc::kInvalidArgument,
                    src.origin + ": malformed JSON: " + e.what());
      }
      if (!spec.is_object() || !spec.contains("dom") || !spec.contains("cod") ||
          !spec.contains("map")) {
        throw Error(Errc::kInvalidArgument,
                    src.origin + ": expected {\"dom\", \"cod\", \"map\"}");
      }
      auto object_field = [&](const char* key) {
        if (!spec[key].is_string()) {
          throw Error(Errc::kInvalidArgument,
                      std::string("field '") + key + "' must be a string");
        }
        const SourceTerm field{spec[key].get<std::string>(),
                               src.origin + ":" + key};
        return parse(field, [&](std::string_view text) {
          return parse_object(text, mode_);
        });
      };
      const Object dom = object_field("dom");
      const Object cod = object_field("cod");
      Json graph_doc{{"source_letters", dom.letter_length()},
                     {"target_letters", cod.letter_length()},
                     {"map", spec["map"]}};
      const Arrow t = synth_from_graph(dom, cod, graph_from_json(graph_doc), mode_);
      if (tty_) out_ << to_string(t.type()) << "\n";
      out_ << print_arrow(t) << "\n";
      return kExitTrue;
    });
  }

 private:
  template <typename Fn>
  std::invoke_result_t<Fn, std::string_view> parse(const SourceTerm& src, Fn&& fn) {
    try {
      return fn(src.text);
    } catch (const ParseError& e) {
      err_ << render(e.diagnostic(), src);
      throw Reported{};
    }
  }

  Arrow term(const std::string& operand) {
    const SourceTerm src = source_of(operand);
    return parse(src, [&](std::string_view text) { return parse_arrow(text, mode_); });
  }

  template <typename Fn>
  int guarded(Fn&& fn) {
    try {
      return fn();
    } catch (const Reported&) {
      return kExitError;
    } catch (const Error& e) {
      err_ << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
      return kExitError;
    }
  }

  struct Reported {};

  std::ostream& out_;
  std::ostream& err_;
  bool tty_;
  Mode mode_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, bool tty) {
  CLI::App app{"Typecheck, normalize and compare arrows of the free cartesian category",
               args.empty() ? "cartcoh" : args.front()};
  app.require_subcommand(1);

  Mode mode = Mode::kCartesian;
  const std::map<std::string, Mode> modes{{"cartesian", Mode::kCartesian},
                                          {"binary-products", Mode::kBinaryProducts}};
  app.add_option("--mode", mode, "cartesian (default) or binary-products")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

  std::string first, second, method = "graph";
  bool trace = false;

  auto* object_cmd = app.add_subcommand("object", "Letter and symbol length of an object");
  object_cmd->add_option("object", first, "object text or file")->required();
  auto* check_cmd = app.add_subcommand("check", "Typecheck an arrow term");
  check_cmd->add_option("term", first, "term file or inline term")->required();
  auto* graph_cmd = app.add_subcommand("graph", "Print the graph of a term as JSON");
  graph_cmd->add_option("term", first, "term file or inline term")->required();
  auto* normalize_cmd = app.add_subcommand("normalize", "Reduce a term to normal form");
  normalize_cmd->add_option("term", first, "term file or inline term")->required();
  normalize_cmd->add_flag("--trace", trace, "print every reduction step");
  auto* equal_cmd = app.add_subcommand("equal", "Decide whether two terms are equal");
  equal_cmd->add_option("lhs", first)->required();
  equal_cmd->add_option("rhs", second)->required();
  equal_cmd->add_option("--method", method, "graph (default), normalize or both")
      ->check(CLI::IsMember({"graph", "normalize", "both"}));
  auto* collapse_cmd = app.add_subcommand("collapse", "Build a collapse witness for two unequal terms");
  collapse_cmd->add_option("lhs", first)->required();
  collapse_cmd->add_option("rhs", second)->required();
  auto* synth_cmd = app.add_subcommand("synth", "Build the normal form with a given graph");
  synth_cmd->add_option("spec", first, "JSON {\"dom\", \"cod\", \"map\"}, file or inline")
      ->required();

  try {
    // CLI11 consumes its argument vector from the back.
    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitError;
  }

  Session session(out, err, tty, mode);
  if (*object_cmd) return session.object(first);
  if (*check_cmd) return session.check(first);
  if (*graph_cmd) return session.graph(first);
  if (*normalize_cmd) return session.normalize_cmd(first, trace);
  if (*equal_cmd) return session.equal(first, second, method);
  if (*collapse_cmd) return session.collapse(first, second);
  if (*synth_cmd) return session.synth(first);
  return kExitError;
}

}  // namespace cartcoh
