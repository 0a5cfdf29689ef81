#include "tower_cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "tower/countability.hpp"
#include "tower/relation.hpp"
#include "tower_cli/expr.hpp"

namespace tower::cli {

namespace {

using json = nlohmann::ordered_json;

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json value_json(const Value& v, unsigned precision) {
  json j;
  if (const auto* d = std::get_if<Dyadic>(&v)) {
    j["exact"] = true;
    j["value"] = d->to_string();
  } else {
    Interval iv = std::get<Real>(v).approx(precision);
    j["exact"] = false;
    j["lo"] = iv.lo.to_string();
    j["hi"] = iv.hi.to_string();
    j["prec"] = precision;
  }
  return j;
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void require_args(const std::string& what, const std::vector<std::string>& args, std::size_t n) {
  if (args.size() != n) {
    throw Error(Errc::SyntaxError, "enum " + what + " expects " + std::to_string(n) + " argument(s)");
  }
}

}  // namespace

void check_precision(unsigned precision) {
  if (precision > kMaxPrecision) {
    throw Error(Errc::PrecisionCap, "precision " + std::to_string(precision) + " exceeds the cap of " +
                                        std::to_string(kMaxPrecision));
  }
}

int cmd_eval(const std::string& expression, const Options& options, std::ostream& out) {
  check_precision(options.precision);
  ExprPtr e = parse(expression);
  Value v = evaluate(*e, EvalOptions{options.precision, 0});
  if (options.format == Format::JsonLines) {
    json j{{"expr", e->to_string()}};
    j.update(value_json(v, options.precision));
    emit(out, j);
  } else {
    out << format_value(v, options.precision) << '\n';
  }
  return 0;
}

int cmd_cmp(const std::string& lhs, const std::string& rhs, const Options& options, std::ostream& out) {
  check_precision(options.precision);
  const EvalOptions eo{options.precision, 0};
  Value a = evaluate(*parse(lhs), eo);
  Value b = evaluate(*parse(rhs), eo);
  std::string verdict;
  const auto* da = std::get_if<Dyadic>(&a);
  const auto* db = std::get_if<Dyadic>(&b);
  if (da && db) {
    verdict = *da < *db ? "less" : (*db < *da ? "greater" : "equal");
  } else {
    auto as_real = [](const Value& v) {
      if (const auto* d = std::get_if<Dyadic>(&v)) return Real::from_dyadic(*d);
      return std::get<Real>(v);
    };
    verdict = std::string(approx_name(compare_eps(as_real(a), as_real(b), options.precision)));
  }
  if (options.format == Format::JsonLines) {
    emit(out, json{{"cmp", verdict}, {"prec", options.precision}});
  } else {
    out << verdict << '\n';
  }
  return verdict == "indistinguishable" ? 2 : 0;
}

int cmd_relcheck(const std::string& path, const Options& options, std::istream& in, std::ostream& out) {
  std::string text;
  if (path == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(path);
    if (!file) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    text = read_all(file);
  }
  const Relation r = parse_relation(text);
  const PropertyReport p = classify(r);
  const Extremal e = extremal(r, AtomSet::all(r.source()));

  const std::vector<std::pair<std::string, bool>> flags{
      {"reflexive", p.reflexive},
      {"antireflexive", p.antireflexive},
      {"symmetric", p.symmetric},
      {"antisymmetric", p.antisymmetric},
      {"transitive", p.transitive},
      {"connective", p.connective},
      {"directive", p.directive},
      {"minimum-property", p.minimum_property},
      {"pre-ordering", p.pre_ordering},
      {"ordering", p.ordering},
      {"ordering-lt", p.ordering_lt},
      {"ordering-le", p.ordering_le},
      {"direction", p.direction},
      {"equivalence", p.equivalence},
      {"total-ordering", p.total_ordering},
      {"well-ordering", p.well_ordering},
  };
  const std::vector<std::pair<std::string, const AtomSet*>> sets{
      {"minima", &e.minima},
      {"maxima", &e.maxima},
      {"weak-minima", &e.weak_minima},
      {"weak-maxima", &e.weak_maxima},
  };

  if (options.format == Format::JsonLines) {
    json j;
    j["carrier"] = r.source().atoms();
    j["pairs"] = r.count();
    for (const auto& [k, v] : flags) j[k] = v;
    j["minimum-property-exact"] = p.minimum_property_exact;
    for (const auto& [k, s] : sets) j[k] = s->names();
    emit(out, j);
    return 0;
  }
  std::string carrier;
  for (const auto& a : r.source().atoms()) carrier += " " + a;
  out << "carrier:" << carrier << '\n';
  out << "pairs: " << r.count() << '\n';
  for (const auto& [k, v] : flags) {
    out << k << ": " << yes_no(v);
    if (k == "minimum-property" && !p.minimum_property_exact) out << " (sampled)";
    out << '\n';
  }
  for (const auto& [k, s] : sets) out << k << ": " << s->to_string() << '\n';
  return 0;
}

int cmd_enum(const std::string& what, const std::vector<std::string>& args, const Options& options, std::ostream& out) {
  json j{{"enum", what}};
  std::string plain;
  if (what == "pair") {
    require_args(what, args, 2);
    Nat r = pair(Nat::parse(args[0]), Nat::parse(args[1]));
    plain = r.to_string();
    j["value"] = plain;
  } else if (what == "unpair") {
    require_args(what, args, 1);
    auto [p, q] = unpair(Nat::parse(args[0]));
    plain = p.to_string() + " " + q.to_string();
    j["p"] = p.to_string();
    j["q"] = q.to_string();
  } else if (what == "dyadic") {
    require_args(what, args, 1);
    plain = enum_dyadics().forward(Nat::parse(args[0])).to_string();
    j["value"] = plain;
  } else if (what == "dyadic-index") {
    require_args(what, args, 1);
    auto n = enum_dyadics().back(Dyadic::parse(args[0]));
    if (!n) throw Error(Errc::NegativeInput, "only nonnegative dyadics are enumerated");
    plain = n->to_string();
    j["value"] = plain;
  } else {
    throw Error(Errc::SyntaxError, "unknown enumeration '" + what + "' (pair, unpair, dyadic, dyadic-index)");
  }
  if (options.format == Format::JsonLines) {
    emit(out, j);
  } else {
    out << plain << '\n';
  }
  return 0;
}

}  // namespace tower::cli
