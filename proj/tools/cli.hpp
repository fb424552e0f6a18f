#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rbsym.hpp"
#include "rbsym/json_io.hpp"

namespace rbsym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

struct CommonOptions {
  std::string input;
  std::string gen;
  std::string format = "text";
  int threads = 0;
  int cap = kDefaultEnumerationCap;
  std::string pivot = "lex";
  std::string eval;
};

struct BenchRow {
  int n = 0;
  std::string algorithm;
  double seconds = 0.0;
  std::string checksum;
};

/// FNV-1a 64 over the rendered polynomial, as 16 hex digits.
[[nodiscard]] inline std::string polynomial_checksum(const Polynomial& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : p.to_string()) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

/// Times each route to u_X on generated digraphs for n in [n_min, n_max].
/// Routes: "enumeration" (n! listings, then F -> M and ps^1), "subset_dp"
/// (zeta over subsets, then ps^1) and "delcon" (for n <= delcon_max).
[[nodiscard]] inline std::vector<BenchRow> run_bench(GeneratorSpec spec, int n_min, int n_max, int reps,
                                                     int delcon_max, const EnumerationOptions& enumeration,
                                                     PivotRule pivot = PivotRule::lex) {
  std::vector<BenchRow> rows;
  if (reps < 1) throw InvalidArgument("repetitions must be positive");
  if (n_min < 0 || n_max < n_min) throw InvalidArgument("empty or negative n range");
  using clock = std::chrono::steady_clock;
  for (int n = n_min; n <= n_max; ++n) {
    spec.n = n;
    const Digraph x = generate(spec);
    auto time_route = [&](const std::string& name, auto&& route) {
      Polynomial result;
      const auto start = clock::now();
      for (int r = 0; r < reps; ++r) result = route();
      const std::chrono::duration<double> elapsed = clock::now() - start;
      rows.push_back({n, name, elapsed.count() / reps, polynomial_checksum(result)});
    };
    time_route("enumeration", [&] { return principal_specialization(f_to_m(u_fundamental(x, enumeration))); });
    time_route("subset_dp", [&] { return rb_polynomial_binomial(x); });
    if (n <= delcon_max) {
      DelconOptions opts;
      opts.pivot = pivot;
      time_route("delcon", [&] { return rb_polynomial_delcon(x, opts); });
    }
  }
  return rows;
}

namespace detail {

inline std::string render(const Digraph& g) {
  std::string out = "[" + std::to_string(g.size()) + ":";
  for (const Edge& e : g.edges()) out += " (" + std::to_string(e.source) + "," + std::to_string(e.target) + ")";
  return out + "]";
}

inline void print_combination(std::ostream& out, const DigraphCombination& x) {
  if (x.is_zero()) out << "0\n";
  for (const auto& [g, c] : x.terms()) out << c.str() << ' ' << render(g) << '\n';
}

inline void print_tensor(std::ostream& out, const TensorCombination& t) {
  if (t.is_zero()) out << "0\n";
  for (const auto& [k, c] : t.terms()) out << c.str() << ' ' << render(k.first) << " (x) " << render(k.second) << '\n';
}

inline std::vector<Integer> parse_integer_list(const std::string& s, const std::string& what) {
  std::vector<Integer> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(tok, &used));
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw InvalidArgument("malformed " + what + " '" + s + "'");
  }
  return out;
}

inline PivotRule parse_pivot(const std::string& s) {
  if (s == "lex") return PivotRule::lex;
  if (s == "max-degree") return PivotRule::max_degree;
  throw InvalidArgument("unknown pivot rule '" + s + "'");
}

inline Digraph load_input(const CommonOptions& o) {
  if (!o.gen.empty() && !o.input.empty()) throw InvalidArgument("give either a digraph file or --gen, not both");
  if (!o.gen.empty()) return generate(parse_generator_spec(o.gen));
  if (o.input.empty()) throw InvalidArgument("no input: give a digraph file or --gen SPEC");
  std::ifstream in(o.input);
  if (!in) throw InvalidArgument("cannot open '" + o.input + "'");
  try {
    return parse_digraph(in);
  } catch (const ParseError& e) {
    throw ParseError(0, o.input + ": " + std::string(e.what()));
  }
}

inline void add_common(CLI::App* cmd, CommonOptions& o, bool with_input = true) {
  if (with_input) {
    cmd->add_option("file", o.input, "Digraph text file");
    cmd->add_option("--gen", o.gen, "Generator spec kind:n[:p=float][:seed=int]");
  }
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--threads", o.threads, "Worker threads for enumeration (0 = all cores)");
  cmd->add_option("--cap", o.cap, "Listing enumeration cap (max " + std::to_string(kMaxVertices) + ")");
}

}  // namespace detail

inline constexpr const char* kFooter = R"(Digraph file format:
  first significant line: vertex count n; then one "u v" line per edge (u,v).
  Blank lines and lines starting with '#' are ignored; loops and duplicate
  edges are errors.

Generator spec: kind:n[:p=float][:seed=int]
  kinds: empty, complete, path, cycle, descent, random, random_tournament
  random kinds need seed=; random uses p (default 0.5). Random digraphs are
  drawn from std::mt19937_64(seed): pairs (u,v) in row-major order, edge iff
  (draw >> 11) * 2^-53 < p; tournaments orient each pair u<v as (u,v) iff the
  top bit of the draw is set.

Exit status: 0 ok, 1 usage/input error, 2 a verified identity failed.)";

/// Runs one CLI invocation. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Redei-Berge symmetric functions and polynomials of digraphs", "rbsym"};
  app.require_subcommand(1);
  app.footer(kFooter);

  CommonOptions o;
  std::string listing;
  std::string ham_method = "auto";
  std::string poly_method = "binomial";
  bool takeuchi = false;
  std::string gen_spec;
  int n_min = 0;
  int n_max = 9;
  int reps = 1;
  int delcon_max = 6;
  std::string bench_gen = "random:p=0.5:seed=1";

  auto* descents = app.add_subcommand("descents", "X-descent set of a listing, or the lambda table");
  detail::add_common(descents, o);
  descents->add_option("--listing", listing, "Comma-separated listing, e.g. 2,1,3");

  auto* ham = app.add_subcommand("ham", "Number of Hamiltonian paths");
  detail::add_common(ham, o);
  ham->add_option("--method", ham_method, "auto|enumerate|dp")->check(CLI::IsMember({"auto", "enumerate", "dp"}));

  auto* zeta_cmd = app.add_subcommand("zeta", "Listings with empty X-descent set");
  detail::add_common(zeta_cmd, o);

  auto* uxf = app.add_subcommand("uxf", "U_X in the fundamental basis (listing enumeration)");
  detail::add_common(uxf, o);

  auto* uxm = app.add_subcommand("uxm", "U_X in the monomial basis (subset DP over zeta)");
  detail::add_common(uxm, o);

  auto* poly = app.add_subcommand("poly", "Redei-Berge polynomial u_X(m)");
  detail::add_common(poly, o);
  poly->add_option("--method", poly_method, "binomial|delcon")->check(CLI::IsMember({"binomial", "delcon"}));
  poly->add_option("--pivot", o.pivot, "Deletion-contraction pivot rule")->check(CLI::IsMember({"lex", "max-degree"}));
  poly->add_option("--eval", o.eval, "Extra evaluation points m1,m2,...");

  auto* anti = app.add_subcommand("antipode", "S(U_X) in the F basis, or S([X]) in the digraph algebra");
  detail::add_common(anti, o);
  anti->add_flag("--takeuchi", takeuchi, "Print the Takeuchi antipode S([X]) instead");

  auto* cop = app.add_subcommand("coproduct", "Coproduct of [X] in the digraph algebra");
  detail::add_common(cop, o);

  auto* verify = app.add_subcommand("verify", "Check all identities for X; exit 2 on failure");
  detail::add_common(verify, o);
  verify->add_option("--pivot", o.pivot, "Deletion-contraction pivot rule")->check(CLI::IsMember({"lex", "max-degree"}));

  auto* gen = app.add_subcommand("gen", "Print a generated digraph in the text format");
  gen->add_option("spec", gen_spec, "Generator spec")->required();
  detail::add_common(gen, o, false);

  auto* bench = app.add_subcommand("bench", "Time enumeration vs subset DP vs deletion-contraction (CSV)");
  detail::add_common(bench, o, false);
  bench->add_option("--gen", bench_gen, "Generator spec without n, e.g. random:p=0.5:seed=1");
  bench->add_option("--n-min", n_min, "Smallest n");
  bench->add_option("--n-max", n_max, "Largest n");
  bench->add_option("--reps", reps, "Repetitions per measurement");
  bench->add_option("--delcon-max", delcon_max, "Largest n for the deletion-contraction route");
  bench->add_option("--pivot", o.pivot, "Deletion-contraction pivot rule")->check(CLI::IsMember({"lex", "max-degree"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (o.cap < 0 || o.cap > kMaxVertices) {
      throw CapExceeded("--cap " + std::to_string(o.cap) + " is outside the compiled limit 0.." +
                        std::to_string(kMaxVertices));
    }
    const bool as_json = o.format == "json";
    EnumerationOptions enumeration{{o.threads}, o.cap};

    if (gen->parsed()) {
      const Digraph x = generate(parse_generator_spec(gen_spec));
      if (as_json) {
        out << to_json(x).dump() << '\n';
      } else {
        write_digraph(out, x);
      }
      return kExitOk;
    }

    if (bench->parsed()) {
      GeneratorSpec spec = parse_generator_spec(bench_gen);
      const auto rows = run_bench(spec, n_min, n_max, reps, delcon_max, enumeration, detail::parse_pivot(o.pivot));
      out << "n,algorithm,seconds,checksum\n";
      bool agree = true;
      for (const BenchRow& r : rows) {
        out << r.n << ',' << r.algorithm << ',' << std::fixed << std::setprecision(6) << r.seconds << ','
            << r.checksum << '\n';
        for (const BenchRow& s : rows) agree = agree && (s.n != r.n || s.checksum == r.checksum);
      }
      if (!agree) {
        err << "error: checksums disagree across algorithms\n";
        return kExitVerifyFailed;
      }
      return kExitOk;
    }

    const Digraph x = detail::load_input(o);

    if (descents->parsed()) {
      if (!listing.empty()) {
        std::vector<Vertex> order;
        for (Integer v : detail::parse_integer_list(listing, "listing")) {
          if (v < 0 || v > kMaxVertices) throw InvalidArgument("listing entry " + std::to_string(v) + " out of range");
          order.push_back(static_cast<Vertex>(v));
        }
        const Listing sigma(order);
        const DescentSet d = x_descent_set(x, sigma);
        if (as_json) {
          out << json{{"listing", sigma.order()}, {"descent_set", d.positions()}}.dump() << '\n';
        } else {
          out << "XDes = {";
          const auto pos = d.positions();
          for (std::size_t i = 0; i < pos.size(); ++i) out << (i ? "," : "") << pos[i];
          out << "}\n";
        }
        return kExitOk;
      }
      const CoefficientTable lambda = lambda_table(x, enumeration);
      json entries = json::array();
      for (PositionMask i = 0; i < lambda.values.size(); ++i) {
        if (lambda[i] == 0) continue;
        const DescentSet s(x.size(), i);
        if (as_json) {
          entries.push_back({{"subset", s.positions()}, {"count", lambda[i]}});
        } else {
          out << '{';
          const auto pos = s.positions();
          for (std::size_t k = 0; k < pos.size(); ++k) out << (k ? "," : "") << pos[k];
          out << "}: " << lambda[i] << '\n';
        }
      }
      if (as_json) out << json{{"degree", x.size()}, {"lambda", entries}}.dump() << '\n';
      return kExitOk;
    }

    if (ham->parsed()) {
      const HamMethod m = ham_method == "enumerate" ? HamMethod::enumerate
                          : ham_method == "dp"      ? HamMethod::dynamic_programming
                                                    : HamMethod::automatic;
      const Integer c = count_hamiltonian_paths(x, m, enumeration);
      if (as_json) {
        out << json{{"hamiltonian_paths", c}}.dump() << '\n';
      } else {
        out << c << '\n';
      }
      return kExitOk;
    }

    if (zeta_cmd->parsed()) {
      const Integer c = zeta(x, HamMethod::automatic, enumeration);
      if (as_json) {
        out << json{{"zeta", c}}.dump() << '\n';
      } else {
        out << c << '\n';
      }
      return kExitOk;
    }

    if (uxf->parsed() || uxm->parsed()) {
      const QSymElem u = uxf->parsed() ? u_fundamental(x, enumeration) : u_monomial_via_zeta(x);
      if (as_json) {
        out << to_json(u).dump() << '\n';
      } else {
        out << "U_X = " << to_string(u) << '\n';
      }
      return kExitOk;
    }

    if (poly->parsed()) {
      Polynomial p;
      if (poly_method == "delcon") {
        DelconOptions opts;
        opts.pivot = detail::parse_pivot(o.pivot);
        p = rb_polynomial_delcon(x, opts);
      } else {
        p = rb_polynomial_binomial(x);
      }
      const std::vector<Integer> points = detail::parse_integer_list(o.eval, "evaluation list");
      if (as_json) {
        json evals = json::array();
        for (Integer m : points) evals.push_back({{"m", m}, {"value", p.evaluate_integer(m)}});
        out << json{{"polynomial", to_json(p)}, {"evaluations", evals}}.dump() << '\n';
      } else {
        out << "u(m) = " << p.to_string() << '\n';
        for (Integer m : points) out << "u(" << m << ") = " << p.evaluate_integer(m) << '\n';
      }
      return kExitOk;
    }

    if (anti->parsed()) {
      if (takeuchi) {
        const DigraphCombination s = antipode_takeuchi(DigraphCombination::basis(x));
        if (as_json) {
          out << to_json(s).dump() << '\n';
        } else {
          detail::print_combination(out, s);
        }
      } else {
        const QSymElem s = antipode(u_fundamental(x, enumeration));
        if (as_json) {
          out << to_json(s).dump() << '\n';
        } else {
          out << "S(U_X) = " << to_string(s) << '\n';
        }
      }
      return kExitOk;
    }

    if (cop->parsed()) {
      const TensorCombination t = coproduct(DigraphCombination::basis(x));
      if (as_json) {
        out << to_json(t).dump() << '\n';
      } else {
        detail::print_tensor(out, t);
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      VerifyOptions opts;
      opts.enumeration = enumeration;
      opts.delcon.pivot = detail::parse_pivot(o.pivot);
      const IdentityReport report = verify_identities(x, opts);
      if (as_json) {
        out << to_json(report).dump() << '\n';
      } else {
        for (const IdentityCheck& c : report.checks) {
          out << status_name(c.status) << ' ' << c.name;
          if (c.status == CheckStatus::fail) out << ": " << c.lhs << " != " << c.rhs;
          if (c.status == CheckStatus::skip) out << " (" << c.note << ")";
          out << '\n';
        }
      }
      return report.all_passed() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rbsym::cli
