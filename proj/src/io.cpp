#include "satake_fold/io.hpp"

#include <fstream>
#include <sstream>
#include <algorithm>

namespace satake_fold {

namespace {

std::vector<Integer> int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of integers");
  std::vector<Integer> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(what + " must contain only integers");
    out.push_back(x.get<Integer>());
  }
  return out;
}

std::vector<std::vector<Integer>> int_table(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of arrays");
  std::vector<std::vector<Integer>> out;
  for (const auto& row : j) out.push_back(int_list(row, what));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

RootDatum datum_from_json(const Json& j) {
  const Json& dj = field(j, "d");
  if (!dj.is_number_integer() || dj.get<Integer>() < 0) throw ParseError("\"d\" must be a nonnegative integer");
  const auto d = static_cast<Eigen::Index>(dj.get<Integer>());
  const auto roots = int_table(field(j, "simple_roots"), "simple_roots");
  const auto coroots = int_table(field(j, "simple_coroots"), "simple_coroots");
  RootDatum datum = RootDatum::from_lists(d, roots, coroots);
  const auto violations = validate(datum);
  if (!violations.empty()) {
    std::string msg = "invalid root datum:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw InvalidDatum(msg);
  }
  return datum;
}

Json to_json(const RootDatum& datum) {
  Json roots = Json::array();
  Json coroots = Json::array();
  for (Eigen::Index i = 0; i < datum.rank(); ++i) {
    roots.push_back(to_json(IntVector(datum.root(i))));
    coroots.push_back(to_json(IntVector(datum.coroot(i))));
  }
  return Json{{"d", datum.dim()}, {"simple_roots", roots}, {"simple_coroots", coroots}};
}

PinnedAut sigma_from_json(const Json& j, const RootDatum& datum) {
  const auto perm1 = int_list(field(j, "perm"), "perm");
  const auto rows = int_table(field(j, "matrix_on_X"), "matrix_on_X");
  std::vector<int> perm;
  for (Integer p : perm1) perm.push_back(static_cast<int>(p - 1));
  const auto d = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != d) {
      throw ParseError("matrix_on_X must be square");
    }
    for (Eigen::Index k = 0; k < d; ++k) m(i, k) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  }
  return make_pinned_aut(datum, std::move(perm), std::move(m));
}

Json to_json(const PinnedAut& sigma) {
  Json perm = Json::array();
  for (int p : sigma.perm) perm.push_back(p + 1);
  return Json{{"perm", perm}, {"matrix_on_X", to_json(sigma.matrix_on_X)}, {"order", sigma.order}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

RootDatum load_group(const std::string& source) {
  for (const auto& name : builtin_group_names()) {
    if (name == source) return builtin_datum(name);
  }
  if (source.find(".json") == std::string::npos && source.find('/') == std::string::npos) {
    throw InvalidDatum("unknown group '" + source + "' (not a built-in name or a .json path)");
  }
  return datum_from_json(read_json_file(source));
}

PinnedAut load_sigma(const std::string& source, const RootDatum& datum) {
  for (const auto& name : builtin_sigma_names()) {
    if (name == source) return builtin_sigma(name, datum);
  }
  if (source.find(".json") == std::string::npos && source.find('/') == std::string::npos) {
    throw InvalidAutomorphism("unknown automorphism '" + source + "' (not a built-in name or a .json path)");
  }
  return sigma_from_json(read_json_file(source), datum);
}

IntVector parse_vector(const std::string& text, Eigen::Index expected_length, const std::string& what) {
  std::vector<Integer> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    Integer v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ParseError(what + ": '" + item + "' is not an integer");
    values.push_back(v);
  }
  if (static_cast<Eigen::Index>(values.size()) != expected_length) {
    throw ParseError(what + " has " + std::to_string(values.size()) + " entries, expected " +
                     std::to_string(expected_length));
  }
  return from_std(values);
}

Word parse_word(const std::string& text, int rank) {
  Word out;
  if (text.empty()) return out;
  const IntVector v = parse_vector(text, static_cast<Eigen::Index>(std::count(text.begin(), text.end(), ',') + 1), "word");
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (v(k) < 1 || v(k) > rank) throw ParseError("word letter " + std::to_string(v(k)) + " out of range");
    out.push_back(static_cast<int>(v(k) - 1));
  }
  return out;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const RationalCoweight& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).denominator() == 1) {
      out.push_back(v(i).numerator());
    } else {
      out.push_back(std::to_string(v(i).numerator()) + "/" + std::to_string(v(i).denominator()));
    }
  }
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(IntVector(m.row(i).transpose())));
  return out;
}

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (int i : w) out.push_back(i + 1);
  return out;
}

Json to_json(const CharPoly& ch, const RootSystem& system) {
  Json terms = Json::array();
  for (const auto& [x, m] : ch.sorted(system)) terms.push_back(Json{{"coweight", to_json(x)}, {"mult", m}});
  return Json{{"terms", terms}};
}

Json to_json(const TwiningReport& report, const TwiningContext& ctx) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"lambda", to_json(row.lambda)},
                        {"folded_lambda", to_json(project_coweight(ctx.folded(), ctx.sigma(), row.lambda))},
                        {"lhs_trace", row.lhs_trace},
                        {"rhs_mult", row.rhs_mult},
                        {"pass", row.pass}});
  }
  Json orbits = Json::array();
  for (const auto& o : report.non_invariant) {
    Json members = Json::array();
    for (const auto& x : o.orbit) members.push_back(to_json(x));
    orbits.push_back(Json{{"orbit", members}, {"mult", o.mult}, {"trace", 0}});
  }
  return Json{{"mu", to_json(report.mu)},
              {"folded_mu", to_json(report.folded_mu)},
              {"rows", rows},
              {"non_invariant", orbits},
              {"dimension", report.dimension},
              {"overall", report.overall}};
}

Json fold_to_json(const RootDatum& datum, const PinnedAut& sigma, const FoldedDatum& fd, const FoldedWeyl& fw) {
  Json orbits = Json::array();
  for (std::size_t e = 0; e < fd.orbits.orbits.size(); ++e) {
    const auto ee = static_cast<Eigen::Index>(e);
    orbits.push_back(Json{
        {"orbit", word_to_json(fd.orbits.orbits[e])},
        {"type", fd.orbits.types[e] == OrbitType::Disconnected ? "disconnected" : "connected_pair"},
        {"folded_root", to_json(IntVector(fd.datum.root(ee)))},
        {"folded_coroot", to_json(IntVector(fd.datum.coroot(ee)))},
        {"folded_coroot_in_X_vee", to_json(IntVector(fd.incl * fd.datum.coroot(ee)))},
    });
  }
  Json torsion = Json::array();
  for (Integer t : fd.torsion) torsion.push_back(t);
  return Json{{"sigma", to_json(sigma)},
              {"orbits", orbits},
              {"folded_datum", to_json(fd.datum)},
              {"folded_cartan", to_json(fd.datum.cartan())},
              {"incl", to_json(fd.incl)},
              {"q", to_json(fd.q)},
              {"torsion", torsion},
              {"coxeter_matrix", to_json(fw.coxeter)},
              {"folded_weyl_order", fw.elements.size()},
              {"longest_word_sigma", word_to_json(fw.longest_word)},
              {"rho_check", rho_check(datum, sigma)}};
}

}  // namespace satake_fold
