#include "teissier/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "teissier/errors.hpp"
#include "teissier/newton.hpp"

namespace teissier {

namespace {

Exp json_to_exp(const Json& v) {
  if (!v.is_number_integer() || v.get<long>() < 0)
    throw InputError("exponents must be nonnegative integers");
  return v.get<long>();
}

struct TextParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit TextParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw InputError("expected an integer in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
  }

  // Returns 1-based variable index, or 0 for the literal "1".
  int variable() {
    skip_ws();
    if (pos >= s.size()) throw InputError("unexpected end of ideal text");
    char c = s[pos];
    if (c == '1' &&
        (pos + 1 >= s.size() ||
         !std::isdigit(static_cast<unsigned char>(s[pos + 1])))) {
      ++pos;
      return 0;
    }
    if (c == 'x') {
      ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        return static_cast<int>(integer());
      return 1;
    }
    if (c == 'y') {
      ++pos;
      return 2;
    }
    if (c == 'z') {
      ++pos;
      return 3;
    }
    throw InputError(std::string("unexpected character '") + c +
                     "' in ideal text");
  }

  // var(^int)? ('*' var(^int)?)*  accumulated into a sparse exponent map
  std::map<int, Exp> monomial() {
    std::map<int, Exp> exps;
    while (true) {
      int var = variable();
      Exp e = 1;
      if (eat('^')) e = integer();
      if (var > 0) exps[var] += e;
      if (!eat('*')) break;
    }
    return exps;
  }
};

}  // namespace

MonomialIdeal parse_ideal_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("gens"))
    throw InputError("ideal JSON must carry \"dim\" and \"gens\"");
  const int dim = j["dim"].get<int>();
  std::vector<ExponentVector> gens;
  for (const auto& g : j["gens"]) {
    ExponentVector v;
    for (const auto& e : g) v.push_back(json_to_exp(e));
    gens.push_back(std::move(v));
  }
  return normalize(dim, std::move(gens));
}

MonomialIdeal parse_ideal_text(const std::string& raw, int dim_hint) {
  // Allow an optional surrounding "( ... )" around the generator list.
  std::string text = raw;
  std::size_t a = text.find_first_not_of(" \t\n\r");
  std::size_t b = text.find_last_not_of(" \t\n\r");
  if (a != std::string::npos && text[a] == '(' && text[b] == ')')
    text = text.substr(a + 1, b - a - 1);
  TextParser p(text);
  std::vector<std::map<int, Exp>> monos;
  int max_var = 0;
  do {
    auto m = p.monomial();
    if (!m.empty()) max_var = std::max(max_var, m.rbegin()->first);
    monos.push_back(std::move(m));
  } while (p.eat(','));
  p.skip_ws();
  if (p.pos != text.size())
    throw InputError("trailing characters in ideal text: '" + text + "'");

  int dim = dim_hint > 0 ? dim_hint : max_var;
  if (dim == 0) dim = 1;  // "1" alone: unit ideal in one variable
  if (max_var > dim)
    throw InputError("variable index exceeds the requested dimension");

  std::vector<ExponentVector> gens;
  for (const auto& m : monos) {
    ExponentVector v(dim, 0);
    for (auto [var, e] : m) v[var - 1] = e;
    gens.push_back(std::move(v));
  }
  return normalize(dim, std::move(gens));
}

MonomialIdeal parse_ideal(const std::string& arg, int dim_hint) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    // trim
    while (!text.empty() && std::isspace(static_cast<unsigned char>(
                                text.back())))
      text.pop_back();
  }
  if (!text.empty() && text[0] == '{') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed ideal JSON");
    return parse_ideal_json(j);
  }
  return parse_ideal_text(text, dim_hint);
}

std::string monomial_to_text(const ExponentVector& p) {
  static const char* named[] = {"x", "y", "z"};
  const int dim = static_cast<int>(p.size());
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < dim; ++i) {
    if (p[i] == 0) continue;
    if (any) os << "*";
    if (dim <= 3)
      os << named[i];
    else
      os << "x" << (i + 1);
    if (p[i] > 1) os << "^" << p[i];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

std::string ideal_to_text(const MonomialIdeal& I) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < I.gens.size(); ++i)
    os << (i ? ", " : "") << monomial_to_text(I.gens[i]);
  os << ")";
  return os.str();
}

Json ideal_to_json(const MonomialIdeal& I) {
  Json gens = Json::array();
  for (const auto& g : I.gens) gens.push_back(g);
  return Json{{"dim", I.dim}, {"gens", gens}};
}

Json to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json to_json(const mpq_class& v) {
  if (v.get_den() == 1) return to_json(mpz_class(v.get_num()));
  return Json{{"num", to_json(mpz_class(v.get_num()))},
              {"den", to_json(mpz_class(v.get_den()))}};
}

Json to_json(const HilbertPolynomial& P) {
  Json e = Json::array();
  for (const auto& c : P.e) e.push_back(to_json(c));
  return Json{{"threshold", P.threshold}, {"e", e}};
}

Json to_json(const BhattacharyaPolynomial& P) {
  Json terms = Json::array();
  for (const auto& [jk, c] : P.coeffs)
    terms.push_back(Json{{"r", jk.first},
                         {"s", jk.second},
                         {"num", to_json(mpz_class(c.get_num()))},
                         {"den", to_json(mpz_class(c.get_den()))}});
  return Json{{"threshold", P.threshold}, {"terms", terms}};
}

Json to_json(const MixedMultiplicities& e) {
  Json arr = Json::array();
  for (const auto& v : e.e) arr.push_back(to_json(v));
  return Json{{"e", arr}};
}

Json to_json(const EqualityCertificate& cert) {
  Json j;
  if (cert.ratio)
    j["ratio"] = Json{{"r", to_json(cert.ratio->first)},
                      {"s", to_json(cert.ratio->second)}};
  else
    j["ratio"] = nullptr;
  j["condition_minkowski"] = cert.condition_minkowski;
  j["condition_geometric"] = cert.condition_geometric;
  j["condition_closure"] = cert.condition_closure;
  j["closure_orientation"] = cert.closure_orientation;
  j["agree"] = cert.agree;
  return j;
}

Json closure_report(const MonomialIdeal& I, const MonomialIdeal& closure) {
  Json gens = Json::array();
  Json added = Json::array();
  for (const auto& g : closure.gens) {
    gens.push_back(g);
    if (std::find(I.gens.begin(), I.gens.end(), g) == I.gens.end())
      added.push_back(g);
  }
  return Json{{"closure_gens", gens}, {"added", added}};
}

Json verdict_json(const std::string& theorem, Json inputs,
                  const InequalityReport& rep) {
  Json statuses = Json::array();
  for (Status s : rep.statuses) statuses.push_back(to_string(s));
  std::string verdict = rep.violated()      ? "violation"
                        : rep.all_equality() ? "equality"
                                             : "holds";
  return Json{{"theorem", theorem},
              {"inputs", std::move(inputs)},
              {"statuses", statuses},
              {"verdict", verdict}};
}

Json rees_report_json(const ReesReport& rep) {
  Json j;
  j["theorem"] = "rees-multiplicity";
  j["mult_sub"] = to_json(rep.mult_sub);
  j["mult_super"] = to_json(rep.mult_super);
  if (!rep.hypothesis_met) {
    j["verdict"] = "hypothesis-unmet";
  } else {
    j["closures_equal"] = rep.closures_equal;
    j["verdict"] = rep.closures_equal ? "holds" : "violation";
  }
  return j;
}

Json milnor_report_json(const BrieskornPolynomial& f) {
  MilnorSpectrum sp = sectional_milnor(f);
  check_low_sections(sp, f);
  InequalityReport convex = check_log_convexity(sp);
  Json mu = Json::array();
  for (const auto& v : sp.mu) mu.push_back(to_json(v));
  return Json{{"mu", mu},
              {"milnor", to_json(sp.mu.back())},
              {"log_convex", !convex.violated()},
              {"alt_sum", to_json(euler_characteristic_sum(sp))}};
}

}  // namespace teissier
