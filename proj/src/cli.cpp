#include "podles/cli.hpp"

#include "podles/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace podles::cli {

namespace {

struct Options {
  std::string q = "1/2";
  std::string c = "0";
  std::string l0 = "0";
  std::string sign = "+";
  std::string sector;
  std::string l = "0";
  std::string lmax;
  std::string rep;
  std::string presentation;
  std::string in;
  std::string out;
  std::string element;
  double h = 1;
  double y0 = 1;
  int cutoff = 8;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 20190101;
};

ParamSet params_of(const Options& o) {
  ParamSet p;
  p.q = parse_rational(o.q);
  p.c_infinite = o.c == "inf";
  if (!p.c_infinite) p.c = parse_rational(o.c);
  p.sign = sign_from_string(o.sign);
  p.l0 = HalfInt::parse(o.l0);
  p.h = o.h;
  p.y0 = o.y0;
  p.cutoff = o.cutoff;
  p.validate();
  return p;
}

/// Top spin of the ladder l0, l0+1, ...; an off-ladder value rounds down.
HalfInt top_spin(const Options& o, HalfInt l0) {
  if (o.lmax.empty()) return l0 + HalfInt::integer(6);
  HalfInt top = HalfInt::parse(o.lmax);
  if (!(top - l0).is_integer()) top.doubled -= 1;
  return top;
}

Sector sector_of(const Options& o, Sign fallback) {
  if (o.sector.empty()) return fallback == Sign::plus ? Sector::plus : Sector::minus;
  if (o.sector == "+" || o.sector == "plus") return Sector::plus;
  if (o.sector == "-" || o.sector == "minus") return Sector::minus;
  if (o.sector == "0" || o.sector == "zero") return Sector::zero;
  throw ParameterError("sector must be +, - or 0, got \"" + o.sector + "\"");
}

Rep build_from(const Options& o) {
  if (!o.in.empty()) {
    std::ifstream f(o.in);
    if (!f) throw ParameterError("cannot read " + o.in);
    nlohmann::json doc;
    try {
      f >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw ParameterError(std::string("malformed JSON in ") + o.in + ": " + e.what());
    }
    return rep_from_json(doc);
  }
  const ParamSet p = params_of(o);
  if (o.rep == "podles") return build_podles(p, sector_of(o, p.sign));
  if (o.rep == "spin") return build_spin(HalfInt::parse(o.l), p.q);
  if (o.rep == "yc") return build_yc(p);
  if (o.rep == "cross1") return build_cross_I(p);
  if (o.rep == "cross2") return build_cross_II(p, top_spin(o, p.l0));
  if (o.rep.empty()) throw ParameterError("--rep or --in is required");
  throw ParameterError("unknown representation \"" + o.rep + "\"");
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ParameterError("cannot write " + o.out);
  f << text;
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_normal_form(const Options& o, std::ostream& out) {
  if (o.presentation.empty()) throw ParameterError("--presentation is required");
  const Regime regime = o.c == "inf" ? Regime::c_infinite : Regime::c_finite;
  const Presentation p = make_presentation(presentation_from_name(o.presentation), regime);
  emit(o, out, to_string(normal_form(parse_element(o.element, p), p)) + "\n");
  return kExitOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  emit(o, out, to_json(build_from(o)).dump(2) + "\n");
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Rep r = build_from(o);
  const auto reports = run_suite(r, o.tol, o.seed);
  emit(o, out, to_json(reports).dump(2) + "\n");
  return all_pass(reports) ? kExitOk : kExitFailure;
}

int cmd_coeffs(const Options& o, std::ostream& out) {
  const ParamSet p = params_of(o);
  const CoeffTable t = coeff_table(p, top_spin(o, p.l0));
  std::ostringstream csv;
  csv << "l,j,alpha_plus,alpha_zero,alpha_minus,beta_plus,beta_zero\n";
  for (const auto& row : t.rows)
    csv << to_string(row.l) << ',' << to_string(row.j) << ',' << g17(row.alpha_plus) << ','
        << g17(row.alpha_zero) << ',' << g17(row.alpha_minus) << ',' << g17(row.beta_plus) << ','
        << g17(row.beta_zero) << '\n';
  emit(o, out, csv.str());
  return kExitOk;
}

int cmd_export(const Options& o, std::ostream& out) {
  if (o.in.empty()) throw ParameterError("--in is required");
  emit(o, out, to_json(build_from(o)).dump(2) + "\n");
  return kExitOk;
}

void add_params(CLI::App* sub, Options& o) {
  sub->add_option("--q", o.q, "deformation parameter, fraction in (0,1)");
  sub->add_option("--c", o.c, "sphere parameter: fraction >= 0 or inf");
  sub->add_option("--l0", o.l0, "lowest spin (half-integer)");
  sub->add_option("--sign", o.sign, "+ or -");
  sub->add_option("--h", o.h, "scale of K in the first cross construction");
  sub->add_option("--y0", o.y0, "initial Y eigenvalue");
  sub->add_option("--cutoff", o.cutoff, "truncation level");
  sub->add_option("--lmax", o.lmax, "top spin of the tower (default l0+6)");
}

void add_rep_source(CLI::App* sub, Options& o) {
  add_params(sub, o);
  sub->add_option("--rep", o.rep, "podles, spin, yc, cross1 or cross2");
  sub->add_option("--l", o.l, "spin for --rep spin");
  sub->add_option("--sector", o.sector, "podles sector: +, - or 0");
  sub->add_option("--in", o.in, "read a stored representation");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Podles sphere cross product toolkit"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);

  auto* nf = app.add_subcommand("normal-form", "normal form of an algebra element");
  nf->add_option("element", o.element, "element text, e.g. \"A B\"")->required();
  nf->add_option("--presentation", o.presentation, "Uq, UqPrime, Podles, Cross, CrossHat, Yc, Decoupled, CrossHatK");
  nf->add_option("--c", o.c, "inf selects the c = infinity relations");

  auto* build = app.add_subcommand("build", "construct a representation and write its JSON");
  add_rep_source(build, o);
  auto* check = app.add_subcommand("check", "run the verification suite");
  add_rep_source(check, o);
  check->add_option("--tol", o.tol, "residual tolerance");
  check->add_option("--seed", o.seed, "seed for random words");
  auto* coeffs = app.add_subcommand("coeffs", "coefficient table as CSV");
  add_params(coeffs, o);
  auto* exp = app.add_subcommand("export", "re-serialize a stored representation");
  exp->add_option("--in", o.in, "stored representation")->required();
  for (auto* sub : {nf, build, check, coeffs, exp}) sub->add_option("--out", o.out, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (nf->parsed()) return cmd_normal_form(o, out);
    if (build->parsed()) return cmd_build(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (coeffs->parsed()) return cmd_coeffs(o, out);
    return cmd_export(o, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace podles::cli
