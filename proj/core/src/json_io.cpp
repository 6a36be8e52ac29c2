#include "nsz/json_io.hpp"

#include "nsz/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nsz::json_io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(std::string("unexpected JSON layout: ") + e.what());
  }
}

json system_header(const AxiomSystem& sys) {
  json j = {{"family", to_string(sys.family())}, {"n", sys.n()}};
  if (sys.family() == Family::Custom) {
    j["variables"] = sys.var_names();
    json axioms = json::array();
    for (const auto& a : sys.axioms()) axioms.push_back({{"label", a.label}, {"monomial", format_monomial(a.monomial)}});
    j["axioms"] = axioms;
  }
  return j;
}

std::shared_ptr<const AxiomSystem> system_from(const json& j) {
  Family family = parse_family(j.at("family").get<std::string>());
  if (family != Family::Custom) return std::make_shared<const AxiomSystem>(build_family(family, j.at("n").get<int>()));
  std::vector<Axiom> axioms;
  for (const auto& a : j.at("axioms")) {
    axioms.push_back({a.at("label").get<std::string>(), parse_monomial(a.at("monomial").get<std::string>()),
                      AxiomKind::Custom, {}});
  }
  return std::make_shared<const AxiomSystem>(Family::Custom, 0, j.at("variables").get<std::vector<std::string>>(),
                                             std::move(axioms));
}

json terms_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"monomial", format_monomial(m)}, {"coeff", to_fraction(c)}});
  return out;
}

}  // namespace

std::string system_to_json(const AxiomSystem& sys) {
  json j = system_header(sys);
  j["name"] = sys.name();
  j["variables"] = sys.var_names();
  json axioms = json::array();
  for (const auto& a : sys.axioms()) axioms.push_back({{"label", a.label}, {"monomial", format_monomial(a.monomial)}});
  j["axioms"] = axioms;
  return j.dump(2);
}

std::shared_ptr<const AxiomSystem> system_from_json(const std::string& text) {
  json j = parse(text);
  return guarded([&] { return system_from(j); });
}

std::string certificate_to_json(const ProofCertificate& cert) {
  const AxiomSystem& sys = cert.system();
  json j;
  j["system"] = system_header(sys);
  j["target"] = cert.target() == 1 ? "+1" : cert.target() == -1 ? "-1" : to_fraction(cert.target());
  json entries = json::array();
  for (const auto& [key, c] : cert.entries()) {
    entries.push_back({{"axiom_label", sys.axiom(key.axiom_index).label},
                       {"multiplier", format_monomial(cert.multiplier(key))},
                       {"coeff", to_fraction(c)}});
  }
  j["entries"] = entries;
  json squares = json::array();
  for (const auto& g : cert.squares()) squares.push_back(terms_json(g));
  j["squares"] = squares;
  json monomials = json::array();
  for (const auto& [m, c] : cert.monomial_terms()) {
    monomials.push_back({{"monomial", format_monomial(m)}, {"coeff", to_fraction(c)}});
  }
  j["monomial_terms"] = monomials;
  j["total_coefficient_size"] = to_fraction(cert.total_coefficient_size());
  return j.dump(2);
}

ProofCertificate certificate_from_json(const std::string& text) {
  json j = parse(text);
  return guarded([&] {
    auto sys = system_from(j.at("system"));
    std::string target = j.at("target").get<std::string>();
    ProofCertificate cert(sys, parse_rational(target[0] == '+' ? target.substr(1) : target));
    for (const auto& e : j.at("entries")) {
      std::string label = e.at("axiom_label").get<std::string>();
      auto axiom = sys->find_label(label);
      if (!axiom) throw StructuralError("unknown axiom label '" + label + "'");
      cert.add(*axiom, parse_monomial(e.at("multiplier").get<std::string>()),
               parse_rational(e.at("coeff").get<std::string>()));
    }
    if (j.contains("squares")) {
      for (const auto& sq : j.at("squares")) {
        Polynomial g;
        for (const auto& t : sq) {
          g.add_term(parse_monomial(t.at("monomial").get<std::string>()), parse_rational(t.at("coeff").get<std::string>()));
        }
        cert.add_square(std::move(g));
      }
    }
    if (j.contains("monomial_terms")) {
      for (const auto& t : j.at("monomial_terms")) {
        cert.add_monomial_term(parse_monomial(t.at("monomial").get<std::string>()),
                               parse_rational(t.at("coeff").get<std::string>()));
      }
    }
    return cert;
  });
}

std::string functional_to_json(const lp::DualFunctional& d) {
  json j;
  j["var_count"] = d.var_count();
  j["total"] = to_fraction(d.total());
  json values = json::array();
  for (const auto& [x, v] : d.values()) {
    values.push_back({{"assignment", format_bits(x, d.var_count())}, {"value", to_fraction(v)}});
  }
  j["values"] = values;
  return j.dump(2);
}

lp::DualFunctional functional_from_json(const std::string& text) {
  json j = parse(text);
  return guarded([&] {
    lp::DualFunctional d(j.at("var_count").get<std::size_t>());
    for (const auto& e : j.at("values")) {
      Assignment a = Assignment::parse(e.at("assignment").get<std::string>());
      if (a.size() != d.var_count()) throw FormatError("assignment length does not match var_count");
      d.set(a.packed(), parse_rational(e.at("value").get<std::string>()));
    }
    return d;
  });
}

std::string lp_result_to_json(const LpResultRecord& r) {
  json j = {{"status", r.status},
            {"value_numer", r.value.get_num().get_str()},
            {"value_denom", r.value.get_den().get_str()},
            {"decimal_10dp", to_decimal(r.value, 10)},
            {"witness_path", r.witness_path},
            {"family", r.family},
            {"n", r.n},
            {"mode", r.mode},
            {"side", r.side},
            {"method", r.method},
            {"pivots", r.pivots},
            {"rounds", r.rounds}};
  return j.dump(2);
}

LpResultRecord lp_result_from_json(const std::string& text) {
  json j = parse(text);
  return guarded([&] {
    LpResultRecord r;
    r.status = j.at("status").get<std::string>();
    r.value = Rational(Integer(j.at("value_numer").get<std::string>()), Integer(j.at("value_denom").get<std::string>()));
    r.value.canonicalize();
    r.witness_path = j.value("witness_path", "");
    r.family = j.value("family", "");
    r.n = j.value("n", 0);
    r.mode = j.value("mode", "");
    r.side = j.value("side", "");
    r.method = j.value("method", "");
    r.pivots = j.value("pivots", std::size_t{0});
    r.rounds = j.value("rounds", std::size_t{0});
    return r;
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

}  // namespace nsz::json_io
