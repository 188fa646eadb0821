#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylmin/errors.hpp"
#include "weylmin/expr.hpp"
#include "weylmin/fock.hpp"
#include "weylmin/render.hpp"
#include "weylmin/serialize.hpp"
#include "weylmin/surface.hpp"

namespace weylmin {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParse = 2,
  kExitNotIntegrable = 3,
  kExitScope = 4,
};

namespace cli_detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline std::vector<mpq_class> parse_offsets(const std::string& src) {
  std::vector<mpq_class> out;
  if (src.empty()) return out;
  std::stringstream ss(src);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const RatLambda r = parse_rat(item);
    if (!r.is_constant()) throw ParseError("offset '" + item + "' is not a constant");
    const HbarField c = r.constant();
    if (!c.is_polynomial() || c.num().degree() > 0) throw ParseError("offset '" + item + "' depends on h");
    const GaussRational z = c.num().coeff(0);
    if (!z.is_real()) throw ParseError("offset '" + item + "' is not real");
    out.push_back(z.re());
  }
  return out;
}

inline void write_surface(const Surface& s, const std::string& fmt, std::ostream& out) {
  if (fmt == "json") {
    out << dump(to_json(s));
    return;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (fmt == "latex") out << "X^{" << i + 1 << "} = " << render_latex(s.components[i]) << "\n";
    else out << "X" << i + 1 << " = " << render_uv_text(s.components[i]) << "\n";
  }
}

inline void write_element(const WeylElement& a, const std::string& fmt, std::ostream& out) {
  if (fmt == "json") out << dump(element_doc(a));
  else if (fmt == "latex") out << render_latex(a) << "\n";
  else if (fmt == "uv") out << render_uv_text(a) << "\n";
  else out << render_text(a) << "\n";
}

/// Components must equal Re(primitive) + offset for the stored primitives to
/// describe the same surface.
inline void check_provenance(const Surface& s) {
  const auto& prims = s.provenance.primitives;
  if (prims.empty()) return;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (re(prims[i]) + WeylElement(GaussRational(s.offsets[i])) != s.components[i])
      throw ParseError("component X" + std::to_string(i + 1) + " does not match its stored primitive");
}

}  // namespace cli_detail

/// Runs the command line; args excludes the program name. Returns the exit code.
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with noncommutative minimal surfaces in the Weyl algebra", "weylmin"};
  app.require_subcommand(1);

  std::string fmt = "json", offsets_src, f_src, g_src, F_src, Ft_src, in_path, expr_src, op = "none";
  int enneper_n = 0, dim = 64, safe_rows = -1;
  double hbar_value = 1.0, tol = 1e-8;
  const std::vector<std::string> surface_fmts{"json", "text", "latex"};

  auto* surface = app.add_subcommand("surface", "Build a surface from Weierstrass data");
  surface->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--offsets", offsets_src, "Comma-separated real constants x^i (default 0)");
    sub->add_option("--fmt", fmt, "Output format")->check(CLI::IsMember(surface_fmts));
  };
  auto* from_fg = surface->add_subcommand("from-fg", "Phi = (f(1-g^2)/2, i f(1+g^2)/2, f g)");
  from_fg->add_option("--f", f_src, "r-holomorphic f")->required();
  from_fg->add_option("--g", g_src, "r-holomorphic g")->required();
  add_common(from_fg);
  auto* from_F = surface->add_subcommand("from-F", "Phi = ((1-L^2)F, i(1+L^2)F, 2LF)");
  from_F->add_option("--F", F_src, "r-holomorphic F")->required();
  add_common(from_F);
  auto* from_Ft = surface->add_subcommand("from-Ftilde", "Integrated form from a polynomial Ft");
  from_Ft->add_option("--Ft", Ft_src, "polynomial Ft in L")->required();
  add_common(from_Ft);
  auto* pair = surface->add_subcommand("pair", "Surface in R^4 from holomorphic f, g");
  pair->add_option("--f", f_src, "polynomial f in L")->required();
  pair->add_option("--g", g_src, "polynomial g in L")->required();
  add_common(pair);
  auto* enn = surface->add_subcommand("enneper", "Higher-order Enneper surface, f = 2, g = L^n");
  enn->add_option("--n", enneper_n, "order n")->required()->check(CLI::Range(0, 4096));
  add_common(enn);

  auto* verify = app.add_subcommand("verify", "Check hermiticity, harmonicity and conformality");
  verify->add_option("--in", in_path, "surface JSON, or - for stdin")->required();
  verify->add_option("--fmt", fmt, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* conj = app.add_subcommand("conjugate", "Conjugate surface from stored primitives");
  conj->add_option("--in", in_path, "surface JSON, or - for stdin")->required();
  conj->add_option("--fmt", fmt, "Output format")->check(CLI::IsMember(surface_fmts));

  auto* fock = app.add_subcommand("fock", "Truncated Fock representation checks");
  fock->require_subcommand(1);
  auto* cat = fock->add_subcommand("catenoid", "Residuals of the catenoid on the safe window");
  cat->add_option("--hbar", hbar_value, "hbar > 0")->capture_default_str();
  cat->add_option("--dim", dim, "truncation dimension")->capture_default_str()->check(CLI::Range(2, 4096));
  cat->add_option("--safe-rows", safe_rows, "largest trusted basis index (default dim/3)");
  cat->add_option("--tol", tol, "residual tolerance")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Evaluate an expression in the Weyl algebra");
  eval->add_option("--expr", expr_src, "expression in L, Ls, U, V, h, i")->required();
  eval->add_option("--op", op, "operator to apply")
      ->check(CLI::IsMember({"none", "d", "dbar", "u", "v", "lap", "re", "im", "star"}));
  eval->add_option("--fmt", fmt, "Output format")->check(CLI::IsMember({"text", "uv", "latex", "json"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (surface->parsed()) {
      const auto offsets = cli_detail::parse_offsets(offsets_src);
      Surface s;
      if (from_fg->parsed()) {
        s = surface_from_fg(parse_rat(f_src), parse_rat(g_src), offsets, {{"f", f_src}, {"g", g_src}});
      } else if (from_F->parsed()) {
        s = surface_from_F(parse_rat(F_src), offsets, {{"F", F_src}});
      } else if (from_Ft->parsed()) {
        s = surface_from_Ftilde(parse_poly_lambda(Ft_src), offsets, {{"Ft", Ft_src}});
      } else if (pair->parsed()) {
        s = surface_from_pair(parse_poly_lambda(f_src), parse_poly_lambda(g_src), offsets,
                              {{"f", f_src}, {"g", g_src}});
      } else {
        s = enneper(enneper_n, offsets);
      }
      cli_detail::write_surface(s, fmt, out);
      return kExitOk;
    }
    if (verify->parsed()) {
      const Surface s = surface_from_json(parse_json(cli_detail::read_input(in_path, in)));
      const auto rep = verify_minimal(s);
      if (fmt == "text") {
        out << (rep.passes() ? "PASS" : "FAIL") << "\n";
        for (const auto& w : rep.witnesses) out << "  " << w.label << " = " << render_text(w.residual) << "\n";
      } else {
        out << dump(to_json(rep));
      }
      return rep.passes() ? kExitOk : kExitVerifyFailed;
    }
    if (conj->parsed()) {
      const Surface s = surface_from_json(parse_json(cli_detail::read_input(in_path, in)));
      cli_detail::check_provenance(s);
      cli_detail::write_surface(conjugate_surface(s), fmt, out);
      return kExitOk;
    }
    if (cat->parsed()) {
      FockConfig cfg{dim, hbar_value, safe_rows < 0 ? dim / 3 : safe_rows};
      const auto r = residual_report(cfg);
      out << dump(to_json(r, tol));
      return r.max_residual() < tol ? kExitOk : kExitVerifyFailed;
    }
    if (eval->parsed()) {
      WeylElement a = parse_weyl(expr_src);
      if (op == "d") a = derive(a, Direction::d);
      else if (op == "dbar") a = derive(a, Direction::dbar);
      else if (op == "u") a = derive(a, Direction::u);
      else if (op == "v") a = derive(a, Direction::v);
      else if (op == "lap") a = laplace0(a);
      else if (op == "re") a = re(a);
      else if (op == "im") a = im(a);
      else if (op == "star") a = star(a);
      if (fmt == "json" && !eval->count("--fmt")) fmt = "text";
      cli_detail::write_element(a, fmt, out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotIntegrableError& e) {
    err << "not integrable: " << e.what() << "\n";
    return kExitNotIntegrable;
  } catch (const ScopeError& e) {
    err << "out of scope: " << e.what() << "\n";
    return kExitScope;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}

}  // namespace weylmin
