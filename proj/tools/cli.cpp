#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "teissier/errors.hpp"
#include "teissier/hilbert.hpp"
#include "teissier/io.hpp"
#include "teissier/milnor.hpp"
#include "teissier/newton.hpp"
#include "teissier/sweep.hpp"
#include "teissier/theorems.hpp"

namespace teissier::cli {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kStabilization = 3;

struct Options {
  std::string ideal_i, ideal_j;
  std::string exponents;
  int dim = 0;
  long n = -1;
  bool json = false;
  bool oracle = false;
  std::uint64_t seed = 1;
  int count = 50;
  int sweep_dim = 2;
  long max_exp = 5;
  int threads = 0;
};

void emit(const Options& o, const Json& payload, const std::string& human,
          std::ostream& out) {
  if (o.json)
    out << payload.dump() << "\n";
  else
    out << human << "\n";
}

long oracle_kmax(const MonomialIdeal& I) {
  Exp mc = 0;
  for (const auto& g : I.gens)
    for (Exp e : g) mc = std::max(mc, e);
  long k = 1;
  for (int i = 0; i < I.dim; ++i) k *= std::max<long>(mc, 1);
  for (int i = 2; i <= I.dim; ++i) k *= i;
  return std::min<long>(k, 64);
}

int cmd_colength(const Options& o, std::ostream& out, std::ostream& err) {
  MonomialIdeal I = parse_ideal(o.ideal_i, o.dim);
  mpz_class len = colength(I);
  if (o.oracle && colength(I, ColengthMode::BruteForce) != len) {
    err << "oracle mismatch: sliced and brute-force colength disagree\n";
    return kViolation;
  }
  emit(o, Json{{"colength", to_json(len)}},
       "colength " + ideal_to_text(I) + " = " + len.get_str(), out);
  return kOk;
}

int cmd_mult(const Options& o, std::ostream& out, std::ostream& err) {
  MonomialIdeal I = parse_ideal(o.ideal_i, o.dim);
  mpz_class e = multiplicity(I);
  if (o.oracle) {
    bool ok = true;
    if (I.dim == 1)
      ok = (e == colength(I));
    else if (I.dim == 2)
      ok = (e == 2 * covolume_2d(I));
    else
      ok = (e == multiplicity(integral_closure(I)));
    if (!ok) {
      err << "oracle mismatch: multiplicity cross-check failed\n";
      return kViolation;
    }
  }
  emit(o, Json{{"multiplicity", to_json(e)}},
       "e" + ideal_to_text(I) + " = " + e.get_str(), out);
  return kOk;
}

int cmd_hilbert(const Options& o, std::ostream& out, std::ostream&) {
  MonomialIdeal I = parse_ideal(o.ideal_i, o.dim);
  if (o.n >= 0) {
    mpz_class v = hilbert_function(I, o.n);
    emit(o, Json{{"n", o.n}, {"value", to_json(v)}},
         "H(" + std::to_string(o.n) + ") = " + v.get_str(), out);
    return kOk;
  }
  HilbertPolynomial P = hilbert_polynomial(I);
  std::ostringstream os;
  os << "Hilbert coefficients (e_0..e_" << P.dim << "):";
  for (const auto& c : P.e) os << " " << c.get_str();
  os << "  [threshold " << P.threshold << "]";
  emit(o, to_json(P), os.str(), out);
  return kOk;
}

int cmd_mixed(const Options& o, std::ostream& out, std::ostream& err) {
  MonomialIdeal I = parse_ideal(o.ideal_i, o.dim);
  MonomialIdeal J = parse_ideal(o.ideal_j, o.dim > 0 ? o.dim : I.dim);
  MixedMultiplicities e = mixed_multiplicities(I, J);
  if (o.oracle && mixed_via_vandermonde(I, J) != e) {
    err << "oracle mismatch: vandermonde extraction disagrees\n";
    return kViolation;
  }
  std::ostringstream os;
  os << "e_i(I|J) =";
  for (const auto& v : e.e) os << " " << v.get_str();
  emit(o, to_json(e), os.str(), out);
  return kOk;
}

int cmd_closure(const Options& o, std::ostream& out, std::ostream& err) {
  MonomialIdeal I = parse_ideal(o.ideal_i, o.dim);
  MonomialIdeal C = integral_closure(I);
  if (o.oracle) {
    // One-sided consistency: the power oracle may never certify a point
    // the polyhedron rejects.
    const long kmax = oracle_kmax(I);
    std::vector<Exp> bounds(I.dim);
    for (int i = 0; i < I.dim; ++i) bounds[i] = pure_power_bound(I, i);
    ExponentVector p(I.dim, 0);
    while (true) {
      if (!contains_monomial(C, p) &&
          closure_membership_oracle(I, p, kmax)) {
        err << "oracle mismatch: power test certifies a point outside the "
               "computed closure\n";
        return kViolation;
      }
      int axis = 0;
      while (axis < I.dim) {
        if (++p[axis] <= bounds[axis]) break;
        p[axis] = 0;
        ++axis;
      }
      if (axis == I.dim) break;
    }
  }
  emit(o, closure_report(I, C),
       "closure " + ideal_to_text(I) + " = " + ideal_to_text(C), out);
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream&) {
  MonomialIdeal J = parse_ideal(o.ideal_i, o.dim);
  MonomialIdeal I = parse_ideal(o.ideal_j, o.dim > 0 ? o.dim : J.dim);
  bool red = is_reduction(J, I);
  emit(o, Json{{"is_reduction", red}},
       ideal_to_text(J) + (red ? " is" : " is not") + " a reduction of " +
           ideal_to_text(I),
       out);
  return kOk;
}

int cmd_minkowski(const Options& o, std::ostream& out, std::ostream&) {
  MonomialIdeal I = parse_ideal(o.ideal_i, o.dim);
  MonomialIdeal J = parse_ideal(o.ideal_j, o.dim > 0 ? o.dim : I.dim);
  Status s = minkowski_status(I, J);
  Json j{{"theorem", "minkowski"},
         {"inputs", Json{{"i", ideal_to_json(I)}, {"j", ideal_to_json(J)}}},
         {"status", to_string(s)}};
  emit(o, j, "Minkowski inequality: " + to_string(s), out);
  return kOk;
}

int cmd_equality(const Options& o, std::ostream& out, std::ostream&) {
  MonomialIdeal I = parse_ideal(o.ideal_i, o.dim);
  MonomialIdeal J = parse_ideal(o.ideal_j, o.dim > 0 ? o.dim : I.dim);
  EqualityCertificate cert = equality_pipeline(I, J);
  std::ostringstream os;
  if (cert.condition_minkowski) {
    os << "equality";
    if (cert.ratio)
      os << ", ratio " << cert.ratio->first.get_str() << "/"
         << cert.ratio->second.get_str();
  } else {
    os << "strict inequality (all three conditions false, agree)";
  }
  emit(o, to_json(cert), os.str(), out);
  return kOk;
}

int cmd_rees(const Options& o, std::ostream& out, std::ostream& err) {
  MonomialIdeal J = parse_ideal(o.ideal_i, o.dim);
  MonomialIdeal I = parse_ideal(o.ideal_j, o.dim > 0 ? o.dim : J.dim);
  ReesReport rep = check_rees(J, I);
  Json j = rees_report_json(rep);
  std::string human =
      !rep.hypothesis_met
          ? "hypothesis not satisfied: e = " + rep.mult_sub.get_str() +
                " vs " + rep.mult_super.get_str()
          : (rep.closures_equal ? "closures coincide (e = " +
                                      rep.mult_super.get_str() + ")"
                                : "VIOLATION: equal multiplicity but "
                                  "different closures");
  emit(o, j, human, out);
  if (rep.hypothesis_met && !rep.closures_equal) {
    err << "Rees theorem violated: implementation bug\n";
    return kViolation;
  }
  return kOk;
}

int cmd_milnor(const Options& o, std::ostream& out, std::ostream&) {
  BrieskornPolynomial f;
  std::stringstream ss(o.exponents);
  std::string tok;
  while (std::getline(ss, tok, ','))
    f.exponents.push_back(std::stoll(tok));
  Json j = milnor_report_json(f);
  std::ostringstream os;
  os << "mu = [";
  for (std::size_t i = 0; i < j["mu"].size(); ++i)
    os << (i ? "," : "") << j["mu"][i].dump();
  os << "], milnor = " << j["milnor"].dump();
  emit(o, j, os.str(), out);
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepOptions so;
  so.seed = o.seed;
  so.count = o.count;
  so.dim = o.sweep_dim;
  so.max_exp = static_cast<Exp>(o.max_exp);
  so.threads = o.threads;
  SweepResult res = run_sweep(so);
  if (o.json) {
    out << res.report.dump() << "\n";
  } else {
    out << res.report["pairs"].get<int>() << "/" << o.count
        << " pairs checked, verdict: "
        << res.report["verdict"].get<std::string>() << "\n";
    for (const auto& v : res.report["violations"])
      out << "  " << v.dump() << "\n";
  }
  if (!res.ok) {
    err << "sweep found violations\n";
    return kViolation;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact multiplicities, mixed multiplicities and integral "
               "closures of m-primary monomial ideals"};
  app.require_subcommand(1);

  Options o;
  int (*handler)(const Options&, std::ostream&, std::ostream&) = nullptr;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit machine-readable JSON");
    sub->add_flag("--oracle", o.oracle, "run brute-force cross-checks");
    sub->add_option("--dim", o.dim, "ambient dimension override");
  };
  auto add_one = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--i", o.ideal_i, "ideal (text, JSON or file)")
        ->required();
  };
  auto add_two = [&](CLI::App* sub) {
    add_one(sub);
    sub->add_option("--j", o.ideal_j, "second ideal")->required();
  };

  struct Verb {
    const char* name;
    const char* help;
    int arity;  // 1 or 2 ideals, 0 for custom
    int (*fn)(const Options&, std::ostream&, std::ostream&);
  };
  const Verb verbs[] = {
      {"colength", "lattice-point colength of R/I", 1, cmd_colength},
      {"mult", "Hilbert-Samuel multiplicity e(I)", 1, cmd_mult},
      {"hilbert", "Hilbert polynomial or H(n) of I", 1, cmd_hilbert},
      {"mixed", "mixed multiplicities e_i(I|J)", 2, cmd_mixed},
      {"closure", "integral closure via the Newton polyhedron", 1,
       cmd_closure},
      {"reduce", "is --i a reduction of --j", 2, cmd_reduce},
      {"minkowski", "Minkowski inequality status for (I,J)", 2,
       cmd_minkowski},
      {"equality", "Minkowski equality certificate for (I,J)", 2,
       cmd_equality},
      {"rees", "Rees multiplicity theorem for --i inside --j", 2, cmd_rees},
  };
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    if (v.arity == 2)
      add_two(sub);
    else
      add_one(sub);
    sub->callback([&handler, &v] { handler = v.fn; });
  }

  CLI::App* hil = app.get_subcommand("hilbert");
  hil->add_option("--n", o.n, "evaluate the Hilbert function at n");

  CLI::App* mil = app.add_subcommand(
      "milnor", "sectional Milnor numbers of sum-of-powers singularities");
  add_common(mil);
  mil->add_option("--exponents", o.exponents, "comma-separated a_0,...,a_n")
      ->required();
  mil->callback([&handler] { handler = cmd_milnor; });

  CLI::App* sw = app.add_subcommand("sweep", "seeded property sweep");
  sw->add_flag("--json", o.json, "emit machine-readable JSON");
  sw->add_option("--seed", o.seed, "PRNG seed");
  sw->add_option("--count", o.count, "number of ideal pairs");
  sw->add_option("--dim", o.sweep_dim, "ambient dimension (1-3)");
  sw->add_option("--max-exp", o.max_exp, "largest generator exponent");
  sw->add_option("--threads", o.threads,
                 "worker threads (default: TEISSIER_THREADS or all cores)");
  sw->callback([&handler] { handler = cmd_sweep; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    return handler(o, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const StabilizationError& e) {
    err << "stabilization cap exceeded: " << e.what() << "\n";
    return kStabilization;
  } catch (const TheoremViolation& e) {
    err << "theorem violation (implementation bug): " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace teissier::cli
