#include "triang/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "triang/errors.hpp"
#include "triang/lie.hpp"
#include "triang/parse.hpp"
#include "triang/report.hpp"
#include "triang/witness.hpp"

namespace triang::cli {

using nlohmann::json;

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::optional<std::string> stdin_text;

  template <typename F>
  static auto with_path(const std::string& path, F f) {
    try {
      return f();
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  std::string read(const std::string& path) {
    if (path == "-") {
      if (!stdin_text) {
        std::ostringstream buf;
        buf << in.rdbuf();
        stdin_text = buf.str();
      }
      return *stdin_text;
    }
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }

  TriangularAutomorphism automorphism(const std::string& path) {
    return with_path(path, [&] { return parse_automorphism(read(path)); });
  }
  TriangularDerivation derivation(const std::string& path) {
    return with_path(path, [&] { return parse_derivation(read(path)); });
  }
  std::vector<TriangularDerivation> derivations(const std::vector<std::string>& paths) {
    std::vector<TriangularDerivation> all;
    for (const auto& path : paths) {
      auto ds = with_path(path, [&] { return parse_derivations(read(path)); });
      all.insert(all.end(), ds.begin(), ds.end());
    }
    return all;
  }

};

// What a command produced: text for humans, JSON for --json.
struct Outcome {
  std::string text;
  json result;
};

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw InputError("'" + text + "' is not a rational number");
  }
  r.canonicalize();
  return r;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (auto v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Outcome automorphism_outcome(const TriangularAutomorphism& phi) {
  return {format_automorphism(phi), to_json(phi)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact algebra of triangular automorphisms and derivations", "triang"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t word_len = 8;
  std::size_t cap = kDefaultClosureCap;
  app.add_flag("--json", as_json, "Emit a JSON object {command, inputs, result, diagnostics}");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--trials", trials, "Number of random trials");
  app.add_option("--word-len", word_len, "Maximum word length");
  app.add_option("--cap", cap, "Round cap for the Lie closure");

  Context ctx{in, out, std::nullopt};
  json inputs = json::object();
  std::function<Outcome()> action;

  auto* compose_cmd = app.add_subcommand("compose", "Compose automorphisms, first file outermost");
  std::vector<std::string> compose_files;
  compose_cmd->add_option("files", compose_files, "Automorphism files")->required()->expected(2, -1);
  compose_cmd->callback([&] {
    inputs["files"] = compose_files;
    action = [&] {
      auto result = ctx.automorphism(compose_files.front());
      for (std::size_t i = 1; i < compose_files.size(); ++i) {
        result = compose(result, ctx.automorphism(compose_files[i]));
      }
      return automorphism_outcome(result);
    };
  });

  auto* invert_cmd = app.add_subcommand("invert", "Invert an automorphism");
  std::string invert_file;
  invert_cmd->add_option("file", invert_file)->required();
  invert_cmd->callback([&] {
    inputs["file"] = invert_file;
    action = [&] { return automorphism_outcome(invert(ctx.automorphism(invert_file))); };
  });

  auto* power_cmd = app.add_subcommand("power", "Integer power of an automorphism");
  std::string power_file;
  long power_k = 1;
  power_cmd->add_option("file", power_file)->required();
  power_cmd->add_option("k", power_k, "Exponent (negative for inverse powers)")->required();
  power_cmd->callback([&] {
    inputs["file"] = power_file;
    inputs["k"] = power_k;
    action = [&] {
      auto phi = power(ctx.automorphism(power_file), power_k);
      Outcome o = automorphism_outcome(phi);
      o.text += "# degree " + std::to_string(degree(phi)) + "\n";
      return o;
    };
  });

  auto* comm_cmd = app.add_subcommand("commutator", "phi psi phi^-1 psi^-1");
  std::string comm_a, comm_b;
  comm_cmd->add_option("phi", comm_a)->required();
  comm_cmd->add_option("psi", comm_b)->required();
  comm_cmd->callback([&] {
    inputs["files"] = {comm_a, comm_b};
    action = [&] {
      return automorphism_outcome(
          commutator(ctx.automorphism(comm_a), ctx.automorphism(comm_b)));
    };
  });

  auto* factor_cmd = app.add_subcommand("factor", "Elementary factorization, outermost first");
  std::string factor_file;
  factor_cmd->add_option("file", factor_file)->required();
  factor_cmd->callback([&] {
    inputs["file"] = factor_file;
    action = [&] {
      const auto factors = elementary_factorization(ctx.automorphism(factor_file));
      Outcome o;
      o.result = json::array();
      for (std::size_t i = 0; i < factors.size(); ++i) {
        o.text += "# factor " + std::to_string(i + 1) + " of " + std::to_string(factors.size()) +
                  "\n" + format_automorphism(factors[i]);
        o.result.push_back(format_automorphism(factors[i]));
      }
      if (factors.empty()) o.text = "# identity: no factors\n";
      return o;
    };
  });

  auto* exp_cmd = app.add_subcommand("exp", "exp(sD) of a triangular derivation");
  std::string exp_file, exp_s = "1";
  exp_cmd->add_option("file", exp_file)->required();
  exp_cmd->add_option("s", exp_s, "Rational parameter, e.g. -3/2");
  exp_cmd->callback([&] {
    inputs["file"] = exp_file;
    inputs["s"] = exp_s;
    action = [&] {
      return automorphism_outcome(exp(ctx.derivation(exp_file), parse_rational(exp_s)));
    };
  });

  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket [D1, D2]");
  std::string bracket_a, bracket_b;
  bracket_cmd->add_option("d1", bracket_a)->required();
  bracket_cmd->add_option("d2", bracket_b)->required();
  bracket_cmd->callback([&] {
    inputs["files"] = {bracket_a, bracket_b};
    action = [&] {
      auto d = bracket(ctx.derivation(bracket_a), ctx.derivation(bracket_b));
      return Outcome{format_derivation(d), to_json(d)};
    };
  });

  auto* closure_cmd = app.add_subcommand("closure", "Lie algebra generated by derivations");
  std::vector<std::string> closure_files;
  closure_cmd->add_option("files", closure_files, "Derivation files (several blocks allowed)")
      ->required();
  closure_cmd->callback([&] {
    inputs["files"] = closure_files;
    inputs["cap"] = cap;
    action = [&] {
      const auto basis = lie_closure(ctx.derivations(closure_files), cap);
      Outcome o{"", lie_report(basis)};
      const auto& r = o.result;
      o.text = "dimension: " + std::to_string(basis.dimension()) + "\n" +
               "lower central series: " +
               join(r["lower_central_series"].get<std::vector<std::size_t>>()) + "\n" +
               "nilpotency class: " + std::to_string(r["nilpotency_class"].get<std::size_t>()) +
               "\n" + "derived series: " +
               join(r["derived_series"].get<std::vector<std::size_t>>()) + "\n" + "basis:\n";
      for (const auto& d : basis.elements()) o.text += format_derivation(d);
      return o;
    };
  });

  auto* fuzz_cmd = app.add_subcommand("fuzz-degree", "Check deg <= m^(n-1) on random words");
  FuzzOptions fuzz;
  std::vector<std::string> fuzz_files;
  fuzz_cmd->add_option("--n", fuzz.n, "Dimension")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--m", fuzz.m, "Degree of the letters")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--coeff-bound", fuzz.coeff_bound)->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--density", fuzz.density)->check(CLI::Range(0.0, 1.0));
  fuzz_cmd->add_option("generators", fuzz_files, "Use words over these automorphisms");
  fuzz_cmd->callback([&] {
    fuzz.seed = seed;
    fuzz.trials = trials;
    fuzz.max_word_len = word_len;
    inputs = {{"n", fuzz.n},         {"m", fuzz.m},         {"trials", trials},
              {"word_len", word_len}, {"seed", seed},        {"coeff_bound", fuzz.coeff_bound},
              {"density", fuzz.density}, {"generators", fuzz_files}};
    action = [&] {
      if (!fuzz_files.empty()) {
        GeneratorTable table;
        for (std::size_t i = 0; i < fuzz_files.size(); ++i) {
          table.emplace("g" + std::to_string(i + 1), ctx.automorphism(fuzz_files[i]));
        }
        fuzz.generators = std::move(table);
      }
      const auto report = degree_fuzz(fuzz);
      Outcome o{"", to_json(report)};
      o.text = "n: " + std::to_string(report.n) + "\nm: " + std::to_string(report.m) +
               "\ntrials: " + std::to_string(report.trials) +
               "\nmax word length: " + std::to_string(report.max_word_len) +
               "\nmax degree observed: " + std::to_string(report.max_degree) +
               "\nbound m^(n-1): " + std::to_string(report.bound) + "\n";
      if (report.witness) {
        o.text += "witness word: " + to_string(*report.witness) + "\n" +
                  format_automorphism(evaluate(*report.witness));
      }
      return o;
    };
  });

  auto* depth_cmd = app.add_subcommand("derived-depth", "Iterated commutators fix x1..x_{d-1}");
  DepthOptions depth;
  depth_cmd->add_option("--n", depth.n)->check(CLI::PositiveNumber);
  depth_cmd->add_option("--depth", depth.depth)->check(CLI::PositiveNumber);
  depth_cmd->add_option("--m", depth.m)->check(CLI::PositiveNumber);
  depth_cmd->callback([&] {
    depth.seed = seed;
    depth.trials = trials;
    inputs = {{"n", depth.n}, {"depth", depth.depth}, {"m", depth.m},
              {"trials", trials}, {"seed", seed}};
    action = [&] {
      const auto report = derived_depth_test(depth);
      return Outcome{"n: " + std::to_string(report.n) + "\ndepth: " +
                         std::to_string(report.depth) + "\ntrials: " +
                         std::to_string(report.trials) + "\nunitriangular: " +
                         std::to_string(report.unitriangular) + "\nfix x1..x" +
                         std::to_string(report.depth - 1) + ": " +
                         std::to_string(report.prefix_fixed) + "\nidentity: " +
                         std::to_string(report.identity) + "\nmax degree: " +
                         std::to_string(report.max_degree) + "\npassed\n",
                     to_json(report)};
    };
  });

  auto* unip_cmd = app.add_subcommand("unipotent-test", "Products of exponentials are unitriangular");
  std::vector<std::string> unip_files;
  unip_cmd->add_option("files", unip_files, "Derivation files")->required();
  unip_cmd->callback([&] {
    inputs = {{"files", unip_files}, {"trials", trials}, {"word_len", word_len}, {"seed", seed}};
    action = [&] {
      const auto report = unipotent_generation_test(
          ctx.derivations(unip_files),
          UnipotentOptions{.max_word_len = word_len, .trials = trials, .seed = seed});
      return Outcome{"generators: " + std::to_string(report.generators) + "\ntrials: " +
                         std::to_string(report.trials) + "\nunitriangular: " +
                         std::to_string(report.unitriangular) + "\nmax degree: " +
                         std::to_string(report.max_degree) + "\npassed\n",
                     to_json(report)};
    };
  });

  auto* cex_cmd = app.add_subcommand(
      "counterexample", "Determinant-1 elements of <A, B> for A=(1 a; 0 -1), B=(1 b; 0 -1)");
  std::string cex_a = "1", cex_b = "0";
  cex_cmd->add_option("--a", cex_a);
  cex_cmd->add_option("--b", cex_b);
  cex_cmd->callback([&] {
    inputs = {{"a", cex_a}, {"b", cex_b}, {"word_len", word_len}};
    action = [&] {
      const auto report =
          nonconnected_counterexample(parse_rational(cex_a), parse_rational(cex_b), word_len);
      Outcome o{"", to_json(report)};
      o.text = "a: " + to_string(report.a) + "\nb: " + to_string(report.b) + "\n";
      o.text += "length words det1 distinct k-values\n";
      for (const auto& c : report.lengths) {
        std::string ks;
        for (const auto& k : c.k_values) ks += (ks.empty() ? "" : " ") + k.get_str();
        o.text += std::to_string(c.length) + " " + std::to_string(c.words) + " " +
                  std::to_string(c.determinant_one) + " " + std::to_string(c.k_values.size()) +
                  " {" + ks + "}\n";
      }
      o.text += std::string("all determinant-1 elements are (1, k(a-b); 0, 1): ") +
                (report.all_in_lattice ? "yes" : "no") + "\n";
      return o;
    };
  });

  std::string command;
  auto emit_json = [&](const json& result, const json& diagnostics) {
    out << json{{"command", command},
                {"inputs", inputs},
                {"result", result},
                {"diagnostics", diagnostics}}
               .dump(2)
        << "\n";
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kInputError;
  }
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  try {
    Outcome o = action();
    if (as_json) {
      emit_json(o.result, json::array());
    } else {
      out << o.text;
    }
    return kSuccess;
  } catch (const PropertyViolation& e) {
    err << "property violation: " << e.what() << "\n";
    if (as_json) emit_json(nullptr, json::array({std::string("property violation: ") + e.what()}));
    return kPropertyViolation;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    if (as_json) emit_json(nullptr, json::array({std::string("error: ") + e.what()}));
    return kInputError;
  }
}

}  // namespace triang::cli
