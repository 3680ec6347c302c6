#include "qlink/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qlink/beads.hpp"
#include "qlink/error.hpp"
#include "qlink/evaluator.hpp"
#include "qlink/homfly.hpp"
#include "qlink/moves.hpp"
#include "qlink/random_diagram.hpp"
#include "qlink/statesum.hpp"

namespace qlink {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string algebra = "homfly";
  int rank = 2;
  std::string algebra_file;
  std::string format = "text";
  bool lenient = false;
  int trials = 20;
  std::uint64_t seed = 1;
  int max_crossings = 6;
  int site = 0;
  bool dump_states = false;
  bool insertions = false;
};

struct Loaded {
  MatrixOQA algebra;
  AxiomReport report;
};

Loaded load_algebra(const Options& o, bool strict, std::ostream& err, bool warn = true) {
  if (!o.algebra_file.empty()) {
    LoadedAlgebra l = load_algebra_file(o.algebra_file, strict);
    if (warn && !l.report.all_pass()) err << "warning: algebra fails the axioms\n" << l.report.to_text();
    return {std::move(l.algebra), std::move(l.report)};
  }
  if (o.algebra != "homfly") throw Error("cli", "unknown algebra '" + o.algebra + "'");
  MatrixOQA a = build_homfly(o.rank);
  return {a, verify_homfly(o.rank)};
}

json summary_json(const MorseDiagram& d) {
  const DiagramSummary s = summarize(d);
  return {{"slices", s.slices},     {"crossings", s.crossings}, {"components", s.components},
          {"max_width", s.max_width}, {"domain", signs_to_string(s.domain)}, {"codomain", signs_to_string(s.codomain)}};
}

json algebra_json(const MatrixOQA& a, const DiagramMatrices* m) {
  json j = {{"provenance", a.provenance}, {"rank", a.rank}};
  if (m) j["convention"] = m->convention;
  return j;
}

void print_summary(std::ostream& out, const MorseDiagram& d) {
  const DiagramSummary s = summarize(d);
  out << "diagram: " << s.slices << " slices, " << s.crossings << " crossings, " << s.components
      << " components, width " << s.max_width << ", <" << signs_to_string(s.domain) << "> to <"
      << signs_to_string(s.codomain) << ">\n";
}

std::string colours(const std::vector<int>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i] + 1);
  return s + "]";
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  const MorseDiagram d = load_morse_file(o.input);
  const Loaded l = load_algebra(o, !o.lenient, err);
  const DiagramMatrices m = diagram_matrices(l.algebra, !o.lenient);
  for (const auto& n : m.notes) err << "warning: " << n << '\n';
  const BoundaryTensor t = evaluate(d, m);
  const bool one_one = d.domain().size() == 1 && d.codomain() == d.domain();
  if (o.format == "json") {
    json j = {{"diagram", summary_json(d)}, {"algebra", algebra_json(l.algebra, &m)}};
    if (d.closed()) {
      j["invariant"] = poly_to_json(t.scalar());
    } else {
      j["tensor"] = json::array();
      for (const auto& [k, v] : t.entries) {
        std::vector<int> in(k.first), ot(k.second);
        for (int& c : in) ++c;
        for (int& c : ot) ++c;
        j["tensor"].push_back({{"in", in}, {"out", ot}, {"value", poly_to_json(v)}});
      }
      if (one_one) j["closure"] = poly_to_json(closure_value(d, m));
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  print_summary(out, d);
  out << "algebra: " << l.algebra.provenance << " (convention " << m.convention << ")\n";
  if (d.closed()) {
    out << "invariant: " << t.scalar() << '\n';
  } else {
    for (const auto& [k, v] : t.entries) out << colours(k.first) << " -> " << colours(k.second) << ": " << v << '\n';
    if (one_one) out << "closure: " << closure_value(d, m) << '\n';
  }
  return 0;
}

int cmd_statesum(const Options& o, std::ostream& out) {
  if (!o.algebra_file.empty() || o.algebra != "homfly") {
    throw Error("cli", "the state sum uses the Homfly expansion; choose --algebra homfly");
  }
  const MorseDiagram d = load_morse_file(o.input);
  const ExpansionWeights w = homfly_weights();
  const std::vector<State> states = expand_states(d, w, 12);
  const LaurentPoly v = evaluate(d, w, o.rank);
  if (o.format == "json") {
    json j = {{"diagram", summary_json(d)}, {"rank", o.rank}, {"states", states.size()}, {"invariant", poly_to_json(v)}};
    if (o.dump_states) {
      j["state_list"] = json::array();
      for (const auto& s : states) j["state_list"].push_back(state_to_json(s));
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  print_summary(out, d);
  out << "states: " << states.size() << '\n';
  if (o.dump_states) {
    for (const auto& s : states) out << state_to_json(s).dump() << '\n';
  }
  out << "invariant: " << v << '\n';
  return 0;
}

int cmd_beads(const Options& o, std::ostream& out, std::ostream& err) {
  const MorseDiagram d = load_morse_file(o.input);
  const Loaded l = load_algebra(o, !o.lenient, err);
  const BeadWord bw = bead_word(d);
  const BeadWord closed = closed_word(bw, d);
  const LaurentPoly v = evaluate_word(closed, l.algebra);
  if (o.format == "json") {
    json j = {{"diagram", summary_json(d)},
              {"algebra", algebra_json(l.algebra, nullptr)},
              {"word", bw.to_string()},
              {"curl_count", bw.curl_count},
              {"closed_word", closed.to_string()},
              {"invariant", poly_to_json(v)}};
    out << j.dump(2) << '\n';
    return 0;
  }
  print_summary(out, d);
  out << "word: " << bw.to_string() << '\n';
  if (!d.closed()) out << "closed word: " << closed.to_string() << '\n';
  out << "invariant: " << v << '\n';
  return 0;
}

int cmd_check_axioms(const Options& o, std::ostream& out, std::ostream& err) {
  const Loaded l = load_algebra(o, false, err, false);
  const bool pass = l.report.all_pass();
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& c : l.report.checks) {
      json r = {{"name", c.name}, {"pass", c.pass}};
      if (!c.pass) {
        r["detail"] = c.detail;
        r["index"] = c.index;
        r["lhs"] = poly_to_json(c.lhs);
        r["rhs"] = poly_to_json(c.rhs);
      }
      checks.push_back(std::move(r));
    }
    out << json{{"algebra", algebra_json(l.algebra, nullptr)}, {"checks", checks}, {"pass", pass}}.dump(2) << '\n';
  } else {
    out << "algebra: " << l.algebra.provenance << '\n' << l.report.to_text();
    out << (pass ? "all axioms hold\n" : "axiom failure\n");
  }
  return pass ? 0 : 1;
}

int cmd_check_moves(const Options& o, std::ostream& out, std::ostream& err) {
  const Loaded l = load_algebra(o, false, err);
  const DiagramMatrices m = diagram_matrices(l.algebra, false);
  for (const auto& n : m.notes) err << "warning: " << n << '\n';
  long checked = 0;
  for (int t = 0; t < o.trials; ++t) {
    const MorseDiagram d = random_diagram(o.seed * 7919 + static_cast<std::uint64_t>(t), o.max_crossings, true);
    const LaurentPoly before = evaluate(d, m).scalar();
    for (const MoveSite& site : enumerate_move_sites(d, o.insertions)) {
      const MorseDiagram e = apply_move(d, site);
      const LaurentPoly after = evaluate(e, m).scalar();
      ++checked;
      if (after == before) continue;
      if (o.format == "json") {
        out << json{{"counterexample", true},
                    {"trial", t},
                    {"move", describe(site)},
                    {"before", render_morse(d)},
                    {"after", render_morse(e)},
                    {"value_before", poly_to_json(before)},
                    {"value_after", poly_to_json(after)}}
                   .dump(2)
            << '\n';
      } else {
        out << "counterexample at trial " << t << ": " << describe(site) << "\n# before\n"
            << render_morse(d) << "# after\n"
            << render_morse(e) << "value before: " << before << "\nvalue after: " << after << '\n';
      }
      return 1;
    }
  }
  if (o.format == "json") {
    out << json{{"counterexample", false}, {"trials", o.trials}, {"moves_checked", checked}}.dump(2) << '\n';
  } else {
    out << "checked " << checked << " moves on " << o.trials << " diagrams: no counterexample\n";
  }
  return 0;
}

int cmd_skein(const Options& o, std::ostream& out, std::ostream& err) {
  const MorseDiagram d = load_morse_file(o.input);
  const Loaded l = load_algebra(o, !o.lenient, err);
  const DiagramMatrices m = diagram_matrices(l.algebra, !o.lenient);
  const SkeinTriple st = skein_triple(d, o.site);
  const LaurentPoly plus = evaluate(st.plus, m).scalar();
  const LaurentPoly minus = evaluate(st.minus, m).scalar();
  const LaurentPoly smooth = evaluate(st.smoothed, m).scalar();
  const bool holds = plus - minus == z_poly() * smooth;
  if (o.format == "json") {
    out << json{{"site", o.site},
                {"plus", poly_to_json(plus)},
                {"minus", poly_to_json(minus)},
                {"smoothed", poly_to_json(smooth)},
                {"holds", holds}}
               .dump(2)
        << '\n';
  } else {
    out << "K+: " << plus << "\nK-: " << minus << "\nK0: " << smooth << '\n'
        << "K+ - K- = (q - q^-1) K0: " << (holds ? "holds" : "fails") << '\n';
  }
  return holds ? 0 : 1;
}

int cmd_export(const Options& o, std::ostream& out, std::ostream& err) {
  const Loaded l = load_algebra(o, false, err);
  out << algebra_to_json(l.algebra).dump(2) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Regular-isotopy invariants of oriented tangles from oriented quantum algebras", "qlink"};
  app.require_subcommand(1);

  auto add_algebra = [&](CLI::App* c) {
    auto* alg = c->add_option("--algebra", o.algebra, "Built-in algebra")->check(CLI::IsMember({"homfly"}));
    c->add_option("--rank", o.rank, "Rank N of the built-in algebra")->check(CLI::PositiveNumber);
    c->add_option("--algebra-file", o.algebra_file, "Algebra JSON file")->excludes(alg);
  };
  auto add_common = [&](CLI::App* c, bool with_input) {
    if (with_input) c->add_option("--input,-i", o.input, "Morse diagram file")->required();
    c->add_option("--out", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a diagram with the matrix model");
  add_common(eval, true);
  add_algebra(eval);
  eval->add_flag("--lenient", o.lenient, "Warn instead of failing on axiom violations");

  auto* ss = app.add_subcommand("statesum", "Evaluate a closed diagram with the Homfly state sum");
  add_common(ss, true);
  add_algebra(ss);
  ss->add_flag("--dump-states", o.dump_states, "Print every state");

  auto* beads = app.add_subcommand("beads", "Bead normal form of a knot or 1-1 tangle");
  add_common(beads, true);
  add_algebra(beads);
  beads->add_flag("--lenient", o.lenient, "Warn instead of failing on axiom violations");

  auto* axioms = app.add_subcommand("check-axioms", "Check the algebra axioms");
  add_common(axioms, false);
  add_algebra(axioms);

  auto* moves = app.add_subcommand("check-moves", "Fuzz move invariance of the matrix model");
  add_common(moves, false);
  add_algebra(moves);
  moves->add_option("--trials", o.trials, "Number of random diagrams")->check(CLI::NonNegativeNumber);
  moves->add_option("--seed", o.seed, "Seed of the diagram stream");
  moves->add_option("--max-crossings", o.max_crossings, "Crossings per diagram")->check(CLI::NonNegativeNumber);
  moves->add_flag("--insertions", o.insertions, "Also try R2 and zig-zag insertions");

  auto* skein = app.add_subcommand("skein", "Check the skein relation at one crossing");
  add_common(skein, true);
  add_algebra(skein);
  skein->add_option("--site", o.site, "Crossing number (0-based)");
  skein->add_flag("--lenient", o.lenient, "Warn instead of failing on axiom violations");

  auto* exp = app.add_subcommand("export-algebra", "Write the algebra as JSON");
  add_algebra(exp);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "cli: " << e.what() << '\n';
    return 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out, err);
    if (ss->parsed()) return cmd_statesum(o, out);
    if (beads->parsed()) return cmd_beads(o, out, err);
    if (axioms->parsed()) return cmd_check_axioms(o, out, err);
    if (moves->parsed()) return cmd_check_moves(o, out, err);
    if (skein->parsed()) return cmd_skein(o, out, err);
    if (exp->parsed()) return cmd_export(o, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "qlink: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qlink
