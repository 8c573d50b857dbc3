#include "lefschetz/io.hpp"

#include <fstream>
#include <sstream>

namespace lefschetz {

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::vector<int> int_list(const json& v, const char* key) {
  if (!v.is_array()) throw ValidationError(std::string("field \"") + key + "\" must be an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_number_integer())
      throw ValidationError(std::string("field \"") + key + "\"[" + std::to_string(k) + "] is not an integer");
    out.push_back(v[k].get<int>());
  }
  return out;
}

Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  throw ValidationError(where + ": expected an integer or a \"p/q\" string");
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file " + path);
  out << doc.dump(2) << "\n";
}

RawPresentation raw_presentation_from_json(const json& doc) {
  RawPresentation raw;
  if (doc.contains("vars")) {
    const json& v = doc.at("vars");
    if (!v.is_array()) throw ValidationError("field \"vars\" must be an array of strings");
    raw.vars.clear();
    for (const auto& name : v) {
      if (!name.is_string()) throw ValidationError("field \"vars\" must be an array of strings");
      raw.vars.push_back(name.get<std::string>());
    }
  }
  raw.a = int_list(field(doc, "a"), "a");
  raw.b = int_list(field(doc, "b"), "b");
  const json& rows = field(doc, "entries");
  if (!rows.is_array()) throw ValidationError("field \"entries\" must be an array of rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array()) throw ValidationError("entries row " + std::to_string(i + 1) + " is not an array");
    std::vector<std::string> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const json& e = rows[i][j];
      if (e.is_string())
        row.push_back(e.get<std::string>());
      else if (e.is_number_integer())
        row.push_back(std::to_string(e.get<long>()));
      else
        throw ValidationError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") must be a polynomial string");
    }
    raw.entries.push_back(std::move(row));
  }
  return raw;
}

GradedPresentation presentation_from_json(const json& doc) { return validate(raw_presentation_from_json(doc)); }

json presentation_to_json(const GradedPresentation& p) {
  json rows = json::array();
  for (int i = 0; i < p.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < p.n() + 2; ++j) row.push_back(p.entry(i, j).to_string(p.vars()));
    rows.push_back(row);
  }
  return json{{"kind", "presentation"}, {"vars", p.vars()}, {"a", p.a()}, {"b", p.b()}, {"entries", rows}};
}

ArtinianGradedModule module_from_structure(const json& doc) {
  const json& rj = field(doc, "r");
  if (!rj.is_number_integer() || rj.get<int>() < 1) throw ValidationError("field \"r\" must be a positive integer");
  const int r = rj.get<int>();
  int t0 = 0;
  if (doc.contains("t0")) {
    if (!doc.at("t0").is_number_integer()) throw ValidationError("field \"t0\" must be an integer");
    t0 = doc.at("t0").get<int>();
  }
  std::vector<int> d = int_list(field(doc, "dims"), "dims");
  std::vector<std::size_t> dims;
  for (int x : d) {
    if (x < 0) throw ValidationError("field \"dims\" has a negative entry");
    dims.push_back(static_cast<std::size_t>(x));
  }
  if (dims.empty()) throw ValidationError("field \"dims\" is empty");
  const int c = t0 + static_cast<int>(dims.size()) - 1;

  std::vector<std::vector<std::optional<ScalarMatrix>>> slots(r, std::vector<std::optional<ScalarMatrix>>(dims.size() - 1));
  const json& mats = doc.contains("matrices") ? doc.at("matrices") : json::object();
  if (!mats.is_object()) throw ValidationError("field \"matrices\" must be an object");
  for (auto it = mats.begin(); it != mats.end(); ++it) {
    const std::string& key = it.key();
    int i = 0, j = 0;
    char comma = 0;
    std::istringstream ks(key);
    if (!(ks >> i >> comma >> j) || comma != ',' || !(ks >> std::ws).eof())
      throw ValidationError("matrix key \"" + key + "\" is not of the form \"i,j\"");
    if (i < 1 || i > r) throw ValidationError("matrix key \"" + key + "\": variable index out of range");
    if (j < t0 || j >= c) throw ValidationError("matrix key \"" + key + "\": degree outside [t0, c-1]");
    const json& rows = it.value();
    const std::size_t nr = dims[j + 1 - t0], nc = dims[j - t0];
    if (!rows.is_array() || rows.size() != nr)
      throw ValidationError("matrix \"" + key + "\" must have " + std::to_string(nr) + " rows");
    ScalarMatrix x(nr, nc);
    for (std::size_t a = 0; a < nr; ++a) {
      if (!rows[a].is_array() || rows[a].size() != nc)
        throw ValidationError("matrix \"" + key + "\" row " + std::to_string(a + 1) + " must have " +
                              std::to_string(nc) + " entries");
      for (std::size_t b = 0; b < nc; ++b)
        x(a, b) = rational_from_json(rows[a][b], "matrix \"" + key + "\" entry (" + std::to_string(a + 1) + "," +
                                                     std::to_string(b + 1) + ")");
    }
    slots[i - 1][j - t0] = std::move(x);
  }
  std::vector<std::vector<ScalarMatrix>> structure(r);
  for (int i = 0; i < r; ++i)
    for (std::size_t k = 0; k < slots[i].size(); ++k) {
      if (slots[i][k])
        structure[i].push_back(std::move(*slots[i][k]));
      else if (dims[k] == 0 || dims[k + 1] == 0)
        structure[i].emplace_back(dims[k + 1], dims[k]);
      else
        throw ValidationError("missing matrix \"" + std::to_string(i + 1) + "," + std::to_string(t0 + k) + "\"");
    }
  return ArtinianGradedModule(r, t0, std::move(dims), std::move(structure));
}

json module_to_json(const ArtinianGradedModule& N) {
  json mats = json::object();
  for (int i = 0; i < N.r(); ++i)
    for (int j = N.initial_degree(); j < N.top_degree(); ++j) {
      ScalarMatrix x = N.structure(i, j);
      json rows = json::array();
      for (std::size_t a = 0; a < x.rows(); ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < x.cols(); ++b) row.push_back(rational_to_json(x(a, b)));
        rows.push_back(row);
      }
      mats[std::to_string(i + 1) + "," + std::to_string(j)] = rows;
    }
  return json{{"kind", "structure"}, {"r", N.r()}, {"t0", N.initial_degree()}, {"dims", N.dims()}, {"matrices", mats}};
}

ModuleInput load_input(const std::string& path) {
  json doc = read_json_file(path);
  std::string kind = doc.is_object() && doc.contains("kind") && doc.at("kind").is_string()
                         ? doc.at("kind").get<std::string>()
                         : "presentation";
  try {
    if (kind == "presentation") return presentation_from_json(doc);
    if (kind == "structure") return module_from_structure(doc);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
  throw ValidationError(path + ": unknown kind \"" + kind + "\"");
}

json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

json ideal_to_json(const DualIdeal& I) {
  auto names = dual_varnames(I.nvars());
  json gens = json::array();
  DualIdeal canon = I.canonical();
  for (const auto& g : canon.generators()) gens.push_back(g.to_string(names));
  return gens;
}

std::string ideal_to_string(const DualIdeal& I) {
  if (I.is_zero()) return "(0)";
  auto names = dual_varnames(I.nvars());
  std::string s = "(";
  bool first = true;
  DualIdeal canon = I.canonical();
  for (const auto& g : canon.generators()) {
    if (!first) s += ", ";
    s += g.to_string(names);
    first = false;
  }
  return s + ")";
}

}  // namespace lefschetz
