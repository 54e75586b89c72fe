#include "pellred/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "pellred/pell2.hpp"
#include "pellred/pellm.hpp"
#include "pellred/redei.hpp"

namespace pellred::cli {

namespace {

using ordered = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

const char* bool_text(bool v) { return v ? "true" : "false"; }

void emit_redei(const RedeiPair& p, bool json, std::ostream& out) {
  if (json) {
    out << ordered{{"n", p.n}, {"N", to_json(p.N)}, {"D", to_json(p.D)}}.dump() << '\n';
    return;
  }
  out << "N = " << to_string(p.N) << '\n' << "D = " << to_string(p.D) << '\n';
}

void emit_solution(const PellSolution& s, const IntPoly& D, bool json, std::ostream& out) {
  if (json) {
    out << ordered{{"n", s.n},
                   {"D", to_json(D)},
                   {"P", to_json(s.P)},
                   {"Q", to_json(s.Q)},
                   {"normalizer", s.normalizer.get_str()},
                   {"integral", s.integral}}
               .dump()
        << '\n';
    return;
  }
  out << "P = " << to_string(s.P) << '\n'
      << "Q = " << to_string(s.Q) << '\n'
      << "D = " << to_string(D) << '\n'
      << "normalizer = " << s.normalizer.get_str() << '\n'
      << "integral = " << bool_text(s.integral) << '\n';
}

void emit_solution_m(const PellMSolution& s, bool json, std::ostream& out) {
  if (json) {
    ordered sols = ordered::array();
    for (const auto& p : s.sols) sols.push_back(ordered(to_json(p)));
    out << ordered{{"m", s.m},
                   {"n", s.n},
                   {"R", to_json(s.R)},
                   {"sols", sols},
                   {"normalizer", s.normalizer.get_str()},
                   {"integral", s.integral}}
               .dump()
        << '\n';
    return;
  }
  for (std::size_t i = 0; i < s.sols.size(); ++i)
    out << 'P' << i + 1 << " = " << to_string(s.sols[i]) << '\n';
  out << "R = " << to_string(s.R) << '\n'
      << "normalizer = " << s.normalizer.get_str() << '\n'
      << "integral = " << bool_text(s.integral) << '\n';
}

}  // namespace

void emit_table(const IntPoly& alpha, const IntPoly& z, unsigned long n_max,
                TableFormat format, std::ostream& out) {
  if (format == TableFormat::Text && n_max > 0) out << "n\tN\tD\n";
  for (unsigned long n = 1; n <= n_max; ++n) {
    const RedeiPair p = redei_recurrence(alpha, z, n);
    if (format == TableFormat::JsonLines)
      emit_redei(p, true, out);
    else
      out << n << '\t' << to_string(p.N) << '\t' << to_string(p.D) << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Redei polynomials and polynomial Pell equations", "pellred"};
  app.require_subcommand(1, 1);

  std::string alpha_text, z_text, f_text, p_text, q_text, d_poly_text, method = "recurrence";
  long d = 0, r = 0;
  unsigned long m = 0, n = 0, n_max = 0;
  bool json = false;

  auto* redei_cmd = app.add_subcommand("redei", "N_n and D_n for given alpha and z");
  redei_cmd->add_option("--alpha", alpha_text, "alpha as a polynomial in x")->required();
  redei_cmd->add_option("--z", z_text, "z as a polynomial in x")->required();
  redei_cmd->add_option("-n", n, "index")->required();
  redei_cmd->add_option("--method", method, "recurrence, matrix or closed-form")
      ->check(CLI::IsMember({"recurrence", "matrix", "closed-form"}));
  redei_cmd->add_flag("--json", json);

  auto* solve_cmd = app.add_subcommand("solve", "normalized solution of P^2 - (f^2+d) Q^2 = 1");
  solve_cmd->add_option("-f", f_text, "f as a polynomial in x")->required();
  solve_cmd->add_option("-d", d, "nonzero integer")->required();
  solve_cmd->add_option("-n", n, "index")->required();
  solve_cmd->add_flag("--json", json);

  auto* solve_m_cmd = app.add_subcommand("solve-m", "degree-m solution for R = (-f)^m + r");
  solve_m_cmd->add_option("-f", f_text, "f as a polynomial in x")->required();
  solve_m_cmd->add_option("-r", r, "nonzero integer")->required();
  solve_m_cmd->add_option("-m", m, "degree, at least 2")->required();
  solve_m_cmd->add_option("-n", n, "index")->required();
  solve_m_cmd->add_flag("--json", json);

  auto* verify_cmd = app.add_subcommand("verify", "check P^2 - D Q^2 = 1");
  verify_cmd->add_option("-P", p_text, "P")->required();
  verify_cmd->add_option("-Q", q_text, "Q")->required();
  auto* d_poly_opt = verify_cmd->add_option("-D", d_poly_text, "D");
  auto* verify_f = verify_cmd->add_option("-f", f_text, "f, with D = f^2 + d");
  auto* verify_d = verify_cmd->add_option("-d", d, "d, with D = f^2 + d");
  d_poly_opt->excludes(verify_f)->excludes(verify_d);
  verify_f->needs(verify_d);
  verify_d->needs(verify_f);

  auto* identify_cmd = app.add_subcommand("identify", "index n of an integer solution");
  identify_cmd->add_option("-P", p_text, "P")->required();
  identify_cmd->add_option("-Q", q_text, "Q")->required();
  identify_cmd->add_option("-f", f_text, "f")->required();
  identify_cmd->add_option("-d", d, "d")->required();

  auto* classify_cmd = app.add_subcommand("classify", "integrality classification");
  auto* classify_d = classify_cmd->add_option("-d", d, "d, quadratic case");
  auto* classify_r = classify_cmd->add_option("-r", r, "r, degree-m case");
  auto* classify_m_opt = classify_cmd->add_option("-m", m, "degree m");
  auto* classify_n = classify_cmd->add_option("-n", n, "index");
  classify_d->excludes(classify_r);
  classify_r->needs(classify_m_opt)->needs(classify_n);

  auto* table_cmd = app.add_subcommand("table", "rows n = 1..n-max of N_n and D_n");
  table_cmd->add_option("--alpha", alpha_text, "alpha")->required();
  table_cmd->add_option("--z", z_text, "z")->required();
  table_cmd->add_option("--n-max", n_max, "last row")->required();
  table_cmd->add_flag("--json", json);

  auto* probe_cmd = app.add_subcommand("probe", "m^floor(n/m) divisibility for r = +-m");
  probe_cmd->add_option("-f", f_text, "f")->required();
  probe_cmd->add_option("-m", m, "prime degree")->required();
  probe_cmd->add_option("--n-max", n_max, "largest index")->required();

  std::vector<const char*> argv{"pellred"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*redei_cmd) {
      const IntPoly alpha = parse_poly(alpha_text), z = parse_poly(z_text);
      const RedeiPair p = method == "matrix"        ? redei_matrix(alpha, z, n)
                          : method == "closed-form" ? redei_closed_form(alpha, z, n)
                                                    : redei_recurrence(alpha, z, n);
      emit_redei(p, json, out);
    } else if (*solve_cmd) {
      const PellProblem problem = PellProblem::make(parse_poly(f_text), d);
      emit_solution(solve(problem, n), problem.D, json, out);
    } else if (*solve_m_cmd) {
      emit_solution_m(solve_m(parse_poly(f_text), r, m, n), json, out);
    } else if (*verify_cmd) {
      const IntPoly D = d_poly_opt->count() > 0 ? parse_poly(d_poly_text)
                        : verify_f->count() > 0 ? PellProblem::make(parse_poly(f_text), d).D
                                                : throw CLI::RequiredError("-D or -f/-d");
      out << bool_text(verify(to_rat(parse_poly(p_text)), to_rat(parse_poly(q_text)), D))
          << '\n';
    } else if (*identify_cmd) {
      auto found =
          identify_solution(parse_poly(p_text), parse_poly(q_text), parse_poly(f_text), d);
      if (found)
        out << "n = " << *found << '\n';
      else
        out << "not a Redei solution\n";
    } else if (*classify_cmd) {
      if (classify_d->count() > 0)
        out << tag_name(classify(d).tag) << '\n';
      else if (classify_r->count() > 0)
        out << bool_text(classify_m(r, m, n)) << '\n';
      else
        throw CLI::RequiredError("-d or -r/-m/-n");
    } else if (*table_cmd) {
      emit_table(parse_poly(alpha_text), parse_poly(z_text), n_max,
                 json ? TableFormat::JsonLines : TableFormat::Text, out);
    } else if (*probe_cmd) {
      const ProbeReport report = divisibility_probe(parse_poly(f_text), m, n_max);
      if (report.ok()) {
        out << "ok\n";
      } else {
        const ProbeViolation& v = *report.violation;
        out << "violation r=" << v.r << " n=" << v.n << " component=" << v.component
            << " modulus=" << v.modulus.get_str() << '\n';
        return kDomainError;
      }
    }
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace pellred::cli
