#include "mpvi/job.hpp"

#include <random>

#include "mpvi/error.hpp"

namespace mpvi {

namespace {

constexpr std::size_t formal_limit = 18;

Integer integer_from_json(const Json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Rational r = parse_rational(v.get<std::string>());
    if (r.get_den() != 1) throw Error(ErrorKind::ParseError, "expected an integer, got " + v.get<std::string>());
    return r.get_num();
  }
  throw Error(ErrorKind::ParseError, "expected an integer, got " + v.dump());
}

Json basis_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& row : s.basis()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(r);
  }
  return rows;
}

Json exponents_json(const ExponentVector& a) {
  Json out = Json::array();
  for (const auto& x : a) out.push_back(to_string(x));
  return out;
}

Json provenance(const JobOptions& options) {
  return Json{{"tool", "mpvi"}, {"version", tool_version}, {"seed", options.seed}};
}

ExponentVector required_exponents(const Json& job) {
  if (!job.contains("exponents")) throw Error(ErrorKind::ParseError, "job needs \"exponents\"");
  return exponents_from_json(job.at("exponents"));
}

MultiplicityVector required_multiplicities(const Json& job) {
  if (!job.contains("multiplicities") || !job.at("multiplicities").is_array()) {
    throw Error(ErrorKind::ParseError, "job needs \"multiplicities\"");
  }
  MultiplicityVector m;
  for (const auto& v : job.at("multiplicities")) m.push_back(to_long(integer_from_json(v)));
  return m;
}

Json edges_payload(const StratumTable& table) {
  const Arrangement& arr = table.arrangement();
  Json edges = Json::array();
  for (const auto& e : table.lattice().edges()) {
    edges.push_back(Json{{"basis", basis_json(e.space)},
                         {"codim", e.codim},
                         {"containing", e.containing},
                         {"dense", is_dense_edge(arr, e.space)}});
  }
  return Json{{"edges", edges},
              {"strata", table.stratum_count()},
              {"origin_is_edge", table.lattice().origin().has_value()},
              {"essential", is_essential(arr)},
              {"indecomposable", is_indecomposable(arr)},
              {"generic", is_generic(arr)}};
}

Json classes_payload(const StratumTable& table) {
  Json strata = Json::array();
  table.for_each_chain([&](const Chain& chain) {
    Json bases = Json::array();
    for (std::size_t w : chain) bases.push_back(basis_json(table.space(w)));
    strata.push_back(Json{{"chain", bases},
                          {"open", to_json(chain_stratum_class(table, chain, false))},
                          {"closed", to_json(chain_stratum_class(table, chain, true))}});
  });
  const LPoly projective = projective_complement_class(table.arrangement());
  return Json{{"affine_complement", to_json(affine_complement_class(table.arrangement()))},
              {"projective_complement", to_json(projective)},
              {"euler_characteristic", to_json(euler_characteristic(projective))},
              {"resolution", to_json(resolution_class(table))},
              {"strata", strata}};
}

Json pv_payload(const StratumTable& table, const ExponentVector& a) {
  const long q = root_order(a);
  const long n = table.arrangement().projective_dim();
  PuiseuxRational pv = pv_integral(table, a);
  const auto b = b_values(table, a);
  Json bs = Json::array();
  for (std::size_t x = 1; x < table.top_node(); ++x) {
    bs.push_back(Json{{"basis", basis_json(table.space(x))}, {"b", to_string(b[x])}});
  }
  return Json{{"q", q},
              {"pv", to_json(pv)},
              {"scaled_pv", to_json(pv.shifted(n * q))},
              {"zero", pv.is_zero()},
              {"closed_strata_agree", pv == pv_integral_closed_form_check(table, a)},
              {"b", bs}};
}

Json delta_payload(const StratumTable& table, const ExponentVector& a, long truncation) {
  ConstantTermReport report = series_constant_term_report(table, a, truncation);
  Json coeffs = Json::array();
  for (long e = 0; e <= report.truncation; ++e) coeffs.push_back(to_json(report.series.coefficient(e)));
  const Integer delta = delta_chain_count(table, a);
  return Json{{"delta", to_json(delta)},
              {"constant_term", to_json(report.constant_term)},
              {"agree", delta == report.constant_term},
              {"truncation", report.truncation},
              {"series", coeffs}};
}

Json formal_payload(const FormalFraction& f) {
  Json denominators = Json::array();
  for (std::size_t i = 0; i < f.denominator.size(); ++i) {
    denominators.push_back(Json{{"edge", f.edge_labels[i]}, {"c", f.denominator[i].to_string()}});
  }
  Json numerator = Json::array();
  for (const auto& [e, c] : f.numerator.terms()) numerator.push_back(Json{{"exponent", e}, {"coefficient", to_json(c)}});
  Json out{{"zero", formal_is_zero(f)},
           {"terms", f.numerator.term_count()},
           {"numerator", numerator},
           {"denominator", denominators}};
  if (auto reduced = reduce_fully(f); reduced && reduced->is_univariate_in_u()) {
    out["reduced"] = to_json(reduced->as_u_poly());
  }
  return out;
}

Json poles_payload(const FormalFraction& f) {
  Json poles = Json::array();
  for (std::size_t i = 0; i < f.denominator.size(); ++i) {
    const bool integer = f.denominator[i].is_integer();
    poles.push_back(Json{{"edge", f.edge_labels[i]},
                         {"c", f.denominator[i].to_string()},
                         {"kappa", pole_multiplicity(f, i)},
                         {"integer_direction", integer},
                         {"pole", integer ? is_integer_direction_pole(f, i) : is_pole(f, i)}});
  }
  return Json{{"poles", poles}};
}

Json ndpole_payload(const StratumTable& table, const MultiplicityVector& m) {
  NdPoleResult r = nd_pole_check(table, m);
  Json out{{"candidate_pole", to_string(r.candidate_pole)},
           {"generic", r.generic},
           {"exponents", exponents_json(r.exponents)}};
  if (r.residue) {
    const long q = r.residue->root_order();
    out["residue"] = to_json(*r.residue);
    out["scaled_residue"] = to_json(r.residue->shifted(table.arrangement().projective_dim() * q));
    out["is_pole"] = *r.is_pole;
  } else {
    out["is_pole"] = nullptr;
  }
  return out;
}

Json witness_payload(const StratumTable& table, const JobOptions& options) {
  WitnessSearchResult r = genericity_witness_search(table, options.bound, options.samples, options.seed);
  return Json{{"bound", options.bound},
              {"sampled", r.sampled},
              {"tested", r.tested},
              {"non_generic", r.non_generic},
              {"non_generic_fraction", r.tested ? static_cast<double>(r.non_generic) / r.tested : 0.0},
              {"vanishing", r.vanishing},
              {"witnesses", r.witnesses}};
}

Json positive_payload(const StratumTable& table) {
  PositiveExponentWitness w = construct_positive_a(table);
  return Json{{"exponents", exponents_json(w.a)},
              {"q", to_json(common_denominator(w.a))},
              {"delta_parameter", to_string(w.delta)},
              {"epsilon_parameter", to_string(w.epsilon)},
              {"halvings", w.halvings},
              {"coordinate_hyperplanes", w.coordinate_hyperplanes},
              {"chosen", w.chosen},
              {"delta", to_json(delta_chain_count(table, w.a))},
              {"pv_nonzero", pv_certified_nonzero(table, w.a)}};
}

struct CheckLog {
  Json entries = Json::array();
  bool all = true;
  void record(const std::string& name, bool passed, const std::string& detail) {
    entries.push_back(Json{{"name", name}, {"passed", passed}, {"detail", detail}});
    all = all && passed;
  }
};

Json check_payload(const StratumTable& table, const JobOptions& options) {
  const Arrangement& arr = table.arrangement();
  const bool essential = is_essential(arr);
  const bool indecomposable = is_indecomposable(arr);
  const bool generic = is_generic(arr);
  const bool formal_ok = table.stratum_count() <= formal_limit;
  const long n = arr.projective_dim();
  std::mt19937_64 rng(options.seed);
  SamplerOptions sampler;
  sampler.avoid_zero_one = generic;

  CheckLog log;
  const LPoly resolution = resolution_class(table);
  log.record("resolution class has constant term 1", resolution.coeff(0) == 1 && resolution.valuation() >= 0,
             resolution.to_string("L"));

  std::optional<FormalFraction> formal;
  if (formal_ok) {
    formal = formal_pv(table);
    if (!essential || !indecomposable) {
      log.record("formal integral vanishes", formal_is_zero(*formal),
                 std::to_string(formal->numerator.term_count()) + " numerator terms");
    }
  }

  std::size_t closed = 0, constant = 0, special = 0, vanish = 0, closed_form = 0, ring = 0, nonzero = 0;
  for (std::size_t s = 0; s < options.samples; ++s) {
    ExponentVector a = random_exponents(table, rng, sampler);
    const long q = root_order(a);
    PuiseuxRational pv = pv_integral(table, a);
    if (pv == pv_integral_closed_form_check(table, a)) ++closed;
    try {
      ConstantTermReport report = series_constant_term_report(table, a, options.truncation);
      ++ring;
      if (report.constant_term == delta_chain_count(table, a)) ++constant;
    } catch (const Error&) {
    }
    if (formal && specialize(*formal, a) == pv.shifted(n * q)) ++special;
    if (pv.is_zero()) ++vanish;
    else ++nonzero;
    if (generic && generic_closed_form(n, a) == pv) ++closed_form;
  }
  const std::string of = " of " + std::to_string(options.samples);
  log.record("open and closed strata agree", closed == options.samples, std::to_string(closed) + of);
  log.record("no negative exponents in L^n PV", ring == options.samples, std::to_string(ring) + of);
  log.record("constant term equals chain count", constant == options.samples, std::to_string(constant) + of);
  if (formal) {
    log.record("specialization matches", special == options.samples, std::to_string(special) + of);
  }
  if (!essential || !indecomposable) {
    log.record("PV vanishes", vanish == options.samples, std::to_string(vanish) + of);
  }
  if (generic) {
    log.record("generic closed form matches", closed_form == options.samples, std::to_string(closed_form) + of);
  }
  if (essential && indecomposable) {
    PositiveExponentWitness w = construct_positive_a(table);
    const bool ok = delta_chain_count(table, w.a) == 1 && pv_certified_nonzero(table, w.a);
    log.record("positive exponent witness", ok,
               "a = " + exponents_json(w.a).dump() + "; nonzero on " + std::to_string(nonzero) + of + " draws");
  }
  return Json{{"checks", log.entries}, {"all_passed", log.all}};
}

}  // namespace

Json to_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const LaurentPoly& poly) {
  Json out = Json::array();
  if (poly.is_zero()) return out;
  for (long e = poly.valuation(); e <= poly.degree(); ++e) {
    Integer c = poly.coeff(e);
    if (c != 0) out.push_back(Json::array({e, to_json(c)}));
  }
  return out;
}

Json to_json(const PuiseuxRational& value) {
  auto [num, den] = value.as_fraction();
  return Json{{"q", value.root_order()},
              {"numerator", to_json(num)},
              {"denominator", to_json(den)},
              {"pretty", value.to_string()}};
}

PuiseuxRational puiseux_from_json(const Json& doc) {
  auto poly = [](const Json& pairs) {
    LaurentPoly p;
    for (const auto& pair : pairs) p += LaurentPoly::monomial(integer_from_json(pair.at(1)), pair.at(0).get<long>());
    return p;
  };
  return PuiseuxRational::from_fraction(doc.at("q").get<long>(), poly(doc.at("numerator")),
                                        poly(doc.at("denominator")));
}

Arrangement arrangement_from_json(const Json& job) {
  if (!job.is_object()) throw Error(ErrorKind::ParseError, "job must be an object");
  if (!job.contains("ambient_dim") || !job.at("ambient_dim").is_number_integer()) {
    throw Error(ErrorKind::ParseError, "job needs an integer \"ambient_dim\"");
  }
  if (!job.contains("hyperplanes") || !job.at("hyperplanes").is_array()) {
    throw Error(ErrorKind::ParseError, "job needs a \"hyperplanes\" list");
  }
  const long dim = job.at("ambient_dim").get<long>();
  if (dim < 1) throw Error(ErrorKind::DimensionMismatch, "ambient dimension must be >= 1");
  std::vector<IntegerVector> normals;
  for (const auto& h : job.at("hyperplanes")) {
    if (!h.is_array()) throw Error(ErrorKind::ParseError, "each hyperplane is a list of integers");
    IntegerVector v;
    for (const auto& x : h) v.push_back(integer_from_json(x));
    normals.push_back(std::move(v));
  }
  return parse_arrangement(static_cast<std::size_t>(dim), normals);
}

ExponentVector exponents_from_json(const Json& values) {
  if (!values.is_array()) throw Error(ErrorKind::ParseError, "exponents must be a list");
  ExponentVector a;
  for (const auto& v : values) {
    if (v.is_string()) a.push_back(parse_rational(v.get<std::string>()));
    else if (v.is_number_integer()) a.emplace_back(v.get<long>());
    else throw Error(ErrorKind::ParseError, "exponent must be a \"p/q\" string or an integer");
  }
  return a;
}

Json run_job(const std::string& command, const Json& job, const JobOptions& options) {
  if (job.contains("command") && job.at("command") != command) {
    throw Error(ErrorKind::ParseError, "job command does not match the subcommand");
  }
  const Arrangement arr = arrangement_from_json(job);
  const StratumTable table(arr);
  Json result;
  if (command == "edges") result = edges_payload(table);
  else if (command == "classes") result = classes_payload(table);
  else if (command == "pv") result = pv_payload(table, required_exponents(job));
  else if (command == "delta") result = delta_payload(table, required_exponents(job), options.truncation);
  else if (command == "generic-closed-form") {
    ExponentVector a = required_exponents(job);
    PuiseuxRational value = generic_closed_form(arr.projective_dim(), a);
    result = Json{{"value", to_json(value)}, {"generic", is_generic(arr)}};
    if (is_generic(arr)) result["matches_pv"] = value == pv_integral(table, a);
  } else if (command == "formal") result = formal_payload(formal_pv(table));
  else if (command == "poles") result = poles_payload(formal_pv(table));
  else if (command == "ndpole") result = ndpole_payload(table, required_multiplicities(job));
  else if (command == "witness-search") result = witness_payload(table, options);
  else if (command == "positive-a") result = positive_payload(table);
  else if (command == "check") result = check_payload(table, options);
  else throw Error(ErrorKind::ParseError, "unknown command " + command);

  Json echo = job;
  echo["command"] = command;
  return Json{{"job", echo}, {"result", result}, {"provenance", provenance(options)}};
}

Json error_document(const std::string& command, const Json& job, const JobOptions& options,
                    const std::string& kind, const std::string& message, const std::string& subject) {
  Json echo = job;
  if (echo.is_object()) echo["command"] = command;
  return Json{{"job", echo},
              {"error", Json{{"kind", kind}, {"message", message}, {"subject", subject}}},
              {"provenance", provenance(options)}};
}

}  // namespace mpvi
