#include "phaseless/io.hpp"

#include "phaseless/error.hpp"

namespace phaseless::io {

namespace {

Error parse_error(const std::string& what) {
  return Error(ErrorCode::ParseError, what);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw parse_error(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) {
    throw parse_error(std::string("field '") + name + "' must be an integer");
  }
  return v.get<int>();
}

std::vector<Rat> rat_array(const Json& j) {
  if (!j.is_array()) throw parse_error("expected an array of rationals");
  std::vector<Rat> out;
  for (const Json& v : j) out.push_back(rat_from_json(v));
  return out;
}

Json rat_array_to_json(const std::vector<Rat>& v) {
  Json arr = Json::array();
  for (const Rat& r : v) arr.push_back(rat_to_json(r));
  return arr;
}

Json points_to_json(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (const Point& p : pts) {
    arr.push_back(Json{{"x", rat_to_json(p.x)}, {"y", rat_to_json(p.y)}});
  }
  return arr;
}

std::vector<Point> points_from_json(const Json& j) {
  if (!j.is_array()) throw parse_error("'points' must be an array");
  std::vector<Point> pts;
  for (const Json& p : j) {
    pts.push_back({rat_from_json(field(p, "x")), rat_from_json(field(p, "y"))});
  }
  return pts;
}

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw parse_error("rational must be a string like \"-3/4\" or an integer");
}

Json rat_to_json(const Rat& r) { return r.str(); }

Json instance_to_json(const Instance& inst) {
  return Json{{"n", inst.n}, {"points", points_to_json(inst.points)}};
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.n = int_field(j, "n");
  inst.points = points_from_json(field(j, "points"));
  return inst;
}

Json coeffs_to_json(const UPoly& p, std::size_t min_length) {
  std::vector<Rat> c = p.coeffs();
  if (c.empty()) c.emplace_back(0);
  if (c.size() < min_length) c.resize(min_length);
  return rat_array_to_json(c);
}

UPoly coeffs_from_json(const Json& j) { return UPoly(rat_array(j)); }

Json solutions_to_json(const SolutionSet& set) {
  Json sols = Json::array();
  for (const UPoly& p : set.polys) sols.push_back(Json{{"coeffs", coeffs_to_json(p)}});
  Json out{{"solutions", sols}, {"count", set.size()}};
  if (!set.complete) out["complete"] = false;
  return out;
}

SolutionSet solutions_from_json(const Json& j) {
  const Json& sols = field(j, "solutions");
  if (!sols.is_array()) throw parse_error("'solutions' must be an array");
  std::vector<UPoly> polys;
  for (const Json& s : sols) polys.push_back(coeffs_from_json(field(s, "coeffs")));
  SolutionSet set;
  set.polys = std::move(polys);
  if (j.contains("complete")) set.complete = j.at("complete").get<bool>();
  return set;
}

Json reduction_to_json(const ReductionInstance& inst) {
  Json signs = Json::array();
  for (int s : inst.decode_signs) signs.push_back(s);
  return Json{{"n", inst.n},
              {"k", inst.k},
              {"exact_points", points_to_json(inst.exact_points)},
              {"phaseless_points", points_to_json(inst.phaseless_points)},
              {"weights", rat_array_to_json(inst.weights)},
              {"decode_signs", signs},
              {"alpha", rat_array_to_json(inst.alpha)},
              {"beta", rat_array_to_json(inst.beta)},
              {"S", rat_to_json(inst.s)}};
}

ReductionInstance reduction_from_json(const Json& j) {
  ReductionInstance inst;
  inst.n = int_field(j, "n");
  inst.k = int_field(j, "k");
  inst.exact_points = points_from_json(field(j, "exact_points"));
  inst.phaseless_points = points_from_json(field(j, "phaseless_points"));
  inst.weights = rat_array(field(j, "weights"));
  const Json& signs = field(j, "decode_signs");
  if (!signs.is_array()) throw parse_error("'decode_signs' must be an array");
  for (const Json& s : signs) {
    if (!s.is_number_integer()) throw parse_error("decode sign must be +-1");
    inst.decode_signs.push_back(s.get<int>());
  }
  inst.alpha = rat_array(field(j, "alpha"));
  inst.beta = rat_array(field(j, "beta"));
  inst.s = rat_from_json(field(j, "S"));
  const std::size_t m = inst.phaseless_points.size();
  if (inst.weights.size() != m || inst.decode_signs.size() != m ||
      inst.alpha.size() != m || inst.beta.size() != m) {
    throw parse_error("reduction instance arrays differ in length");
  }
  return inst;
}

std::vector<Rat> parse_rat_list(std::string_view text) {
  std::vector<Rat> out;
  for (const std::string& part : split_commas(text)) out.push_back(Rat::parse(part));
  return out;
}

std::vector<int> parse_sign_list(std::string_view text) {
  std::vector<int> out;
  for (const std::string& part : split_commas(text)) {
    if (part == "+" || part == "1" || part == "+1") {
      out.push_back(1);
    } else if (part == "-" || part == "-1") {
      out.push_back(-1);
    } else {
      throw parse_error("bad sign '" + part + "'");
    }
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace phaseless::io
