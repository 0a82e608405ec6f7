#include "grouph1/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace grouph1 {

Json int_to_json(const Int& value) {
  if (value.fits_slong_p())
    return Json(static_cast<std::int64_t>(value.get_si()));
  return Json(to_decimal(value));
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw Error("not an integer literal: " + j.dump());
    }
  }
  throw Error("expected an integer, got " + j.dump());
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected a matrix (array of rows)");
  const Index rows = static_cast<Index>(j.size());
  if (rows == 0) return IntMatrix(0, 0);
  if (!j[0].is_array()) throw Error("expected a matrix row (array)");
  const Index cols = static_cast<Index>(j[0].size());
  IntMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw Error("matrix rows have inconsistent lengths");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = int_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json representation_to_json(const MatrixRepresentation& rep) {
  Json gens = Json::object();
  for (Index i = 0; i < rep.generator_count(); ++i) {
    const std::string& name = rep.generator_names()[static_cast<std::size_t>(i)];
    gens[name] = Json{{"matrix", matrix_to_json(rep.matrix(i))}};
  }
  return Json{{"dimension", rep.dimension()}, {"generators", std::move(gens)}};
}

MatrixRepresentation representation_from_json(const Json& j,
                                              const GroupPresentation& p) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("generators"))
    throw Error("representation document needs `dimension` and `generators`");
  const Json& dim = j.at("dimension");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() <= 0)
    throw Error("`dimension` must be a positive integer");
  const Json& gens = j.at("generators");
  if (!gens.is_object()) throw Error("`generators` must be an object");
  for (const auto& item : gens.items())
    if (!p.generator_index(item.key()))
      throw Error("representation names generator `" + item.key() +
                  "` that the presentation does not have");

  MatrixRepresentation rep(static_cast<Index>(dim.get<std::int64_t>()));
  for (const auto& g : p.generators) {
    if (!gens.contains(g.name)) throw UnknownGenerator(g.name);
    const Json& entry = gens.at(g.name);
    if (!entry.is_object() || !entry.contains("matrix"))
      throw Error("generator `" + g.name + "` needs a `matrix` field");
    rep.add_generator(g.name, matrix_from_json(entry.at("matrix")));
  }
  return rep;
}

Json module_to_json(const CoefficientModule& m) {
  Json relations = Json::array();
  for (const IntVector& v : m.relation_vectors) {
    Json row = Json::array();
    for (Index i = 0; i < v.size(); ++i) row.push_back(int_to_json(v(i)));
    relations.push_back(std::move(row));
  }
  return Json{{"rank", m.rank}, {"relations", std::move(relations)}};
}

CoefficientModule module_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("relations"))
    throw Error("module document needs `rank` and `relations`");
  const Json& rank = j.at("rank");
  if (!rank.is_number_integer() || rank.get<std::int64_t>() <= 0)
    throw Error("`rank` must be a positive integer");
  CoefficientModule m;
  m.rank = static_cast<Index>(rank.get<std::int64_t>());
  const Json& relations = j.at("relations");
  if (!relations.is_array()) throw Error("`relations` must be an array");
  for (const Json& row : relations) {
    if (!row.is_array() || static_cast<Index>(row.size()) != m.rank)
      throw Error("module relation vectors must have length " +
                  std::to_string(m.rank));
    IntVector v(m.rank);
    for (Index i = 0; i < m.rank; ++i)
      v(i) = int_from_json(row[static_cast<std::size_t>(i)]);
    m.relation_vectors.push_back(std::move(v));
  }
  if (j.contains("description") && j.at("description").is_string())
    m.description = j.at("description").get<std::string>();
  return m;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace grouph1
