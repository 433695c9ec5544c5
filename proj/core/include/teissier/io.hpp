#pragma once

#include <json.hpp>

#include <string>

#include "teissier/hilbert.hpp"
#include "teissier/ideal.hpp"
#include "teissier/milnor.hpp"
#include "teissier/theorems.hpp"

namespace teissier {

using Json = nlohmann::ordered_json;

/// {"dim": d, "gens": [[...], ...]}
MonomialIdeal parse_ideal_json(const Json& j);

/// Text sugar: comma-separated monomials, '*' for product, '^' for power,
/// variables x,y,z or x1..xd. "1" denotes the unit ideal's generator.
/// dim_hint = 0 infers the dimension from the highest variable used.
MonomialIdeal parse_ideal_text(const std::string& text, int dim_hint = 0);

/// Dispatch: inline JSON (leading '{'), a file path, or text sugar.
MonomialIdeal parse_ideal(const std::string& arg, int dim_hint = 0);

std::string monomial_to_text(const ExponentVector& p);
std::string ideal_to_text(const MonomialIdeal& I);

Json ideal_to_json(const MonomialIdeal& I);
Json to_json(const mpz_class& v);
Json to_json(const mpq_class& v);
Json to_json(const HilbertPolynomial& P);
Json to_json(const BhattacharyaPolynomial& P);
Json to_json(const MixedMultiplicities& e);
Json to_json(const EqualityCertificate& cert);

Json closure_report(const MonomialIdeal& I, const MonomialIdeal& closure);

Json verdict_json(const std::string& theorem, Json inputs,
                  const InequalityReport& rep);

Json rees_report_json(const ReesReport& rep);

Json milnor_report_json(const BrieskornPolynomial& f);

}  // namespace teissier
