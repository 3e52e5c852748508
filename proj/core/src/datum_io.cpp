#include "satake/datum_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace satake {

using nlohmann::ordered_json;

namespace {

Int to_int(const ordered_json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw input_error("expected an integer, got: " + j.dump());
}

IVec to_ivec(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string("expected an array for ") + what);
  IVec v;
  for (const auto& x : j) v.push_back(to_int(x));
  return v;
}

IntMat to_matrix(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string("expected a matrix for ") + what);
  std::vector<IVec> rows;
  for (const auto& r : j) rows.push_back(to_ivec(r, what));
  if (rows.empty()) return IntMat(0, 0);
  IntMat m(int(rows.size()), int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw input_error(std::string("ragged matrix for ") + what);
    for (size_t k = 0; k < rows[i].size(); ++k) m(int(i), int(k)) = rows[i][k];
  }
  return m;
}

std::vector<int> to_index_list(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string("expected an index list for ") + what);
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw input_error(std::string("bad index in ") + what);
    v.push_back(x.get<int>());
  }
  return v;
}

ordered_json ivec_json(const IVec& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.convert_to<long long>());
  return a;
}

ordered_json matrix_json(const IntMat& m) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(ivec_json(m.row(i)));
  return a;
}

}  // namespace

GaloisRootDatum parse_datum(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw input_error(std::string("group file is not valid JSON: ") + e.what());
  }
  GaloisRootDatum d;
  if (!j.contains("rank")) throw input_error("group file is missing 'rank'");
  d.rank = j.at("rank").get<int>();
  d.name = j.value("name", std::string("unnamed"));
  if (!j.contains("coroots") || !j.contains("roots"))
    throw input_error("group file must list roots and coroots explicitly");
  for (const auto& r : j.at("roots")) d.roots.push_back(to_ivec(r, "roots"));
  for (const auto& c : j.at("coroots")) d.coroots.push_back(to_ivec(c, "coroots"));
  if (j.contains("simple_indices"))
    d.simple_indices = to_index_list(j.at("simple_indices"), "simple_indices");
  if (j.contains("inertia_gens"))
    for (const auto& g : j.at("inertia_gens")) d.inertia_gens.push_back(to_matrix(g, "inertia_gens"));
  if (j.contains("frobenius")) d.frobenius = to_matrix(j.at("frobenius"), "frobenius");
  else d.frobenius = IntMat::identity(d.rank);
  if (j.contains("echelonnage")) {
    EchelonnageInput e;
    for (const auto& r : j.at("echelonnage").at("roots")) e.roots.push_back(to_ivec(r, "echelonnage.roots"));
    for (const auto& c : j.at("echelonnage").at("coroots")) e.coroots.push_back(to_ivec(c, "echelonnage.coroots"));
    d.echelonnage_input = std::move(e);
  }
  if (j.contains("inner_twist")) {
    TwistInput t;
    t.levi = to_index_list(j.at("inner_twist").at("levi"), "inner_twist.levi");
    t.w_sigma = to_index_list(j.at("inner_twist").at("w_sigma"), "inner_twist.w_sigma");
    d.inner_twist = std::move(t);
  }
  if (j.contains("levis"))
    for (const auto& [key, val] : j.at("levis").items())
      d.levis[key] = to_index_list(val, "levis");
  d.validate();
  return d;
}

GaloisRootDatum load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open group file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_datum(ss.str());
}

std::string datum_to_json(const GaloisRootDatum& d) {
  ordered_json j;
  j["name"] = d.name;
  j["rank"] = d.rank;
  j["roots"] = ordered_json::array();
  for (const auto& r : d.roots) j["roots"].push_back(ivec_json(r));
  j["coroots"] = ordered_json::array();
  for (const auto& c : d.coroots) j["coroots"].push_back(ivec_json(c));
  j["simple_indices"] = d.simple_indices;
  j["inertia_gens"] = ordered_json::array();
  for (const auto& g : d.inertia_gens) j["inertia_gens"].push_back(matrix_json(g));
  j["frobenius"] = matrix_json(d.frobenius);
  if (d.echelonnage_input) {
    ordered_json e;
    e["roots"] = ordered_json::array();
    for (const auto& r : d.echelonnage_input->roots) e["roots"].push_back(ivec_json(r));
    e["coroots"] = ordered_json::array();
    for (const auto& c : d.echelonnage_input->coroots) e["coroots"].push_back(ivec_json(c));
    j["echelonnage"] = e;
  }
  if (d.inner_twist) {
    j["inner_twist"] = {{"levi", d.inner_twist->levi}, {"w_sigma", d.inner_twist->w_sigma}};
  }
  if (!d.levis.empty()) {
    ordered_json l;
    for (const auto& [k, v] : d.levis) l[k] = v;
    j["levis"] = l;
  }
  return j.dump(2);
}

}  // namespace satake
