#include "choikit/json_io.hpp"

#include <cmath>
#include <cstdint>

namespace choikit {

namespace {

using nlohmann::json;

double number_or_throw(const json& node, const std::string& what) {
  if (!node.is_number()) throw DocumentError(what + ": expected a number");
  const double value = node.get<double>();
  if (!std::isfinite(value)) throw DocumentError(what + ": non-finite value");
  return value;
}

Complex complex_from_json(const json& node, const std::string& what) {
  if (!node.is_array() || node.size() != 2) {
    throw DocumentError(what + ": complex entries must be [re, im] pairs");
  }
  return Complex(number_or_throw(node[0], what), number_or_throw(node[1], what));
}

const json& field(const json& doc, const char* name, const std::string& what) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw DocumentError(what + ": missing \"" + name + "\"");
  return *it;
}

int dim_from_document(const json& doc) {
  const json& d = field(doc, "dim", "document");
  if (!d.is_number_integer()) throw DocumentError("document: \"dim\" must be an integer");
  const auto dim = d.get<std::int64_t>();
  if (dim < 1) throw DocumentError("document: \"dim\" must be positive");
  if (dim > kMaxDocumentDim) {
    throw DocumentError("document: \"dim\" exceeds the supported maximum " +
                        std::to_string(kMaxDocumentDim));
  }
  return static_cast<int>(dim);
}

ChannelSpec builtin_spec_from_json(const json& doc, int dim) {
  const json& builtin = field(doc, "builtin", "builtin document");
  if (!builtin.is_object()) throw DocumentError("builtin document: \"builtin\" must be an object");
  const json& kind_node = field(builtin, "kind", "builtin document");
  if (!kind_node.is_string()) throw DocumentError("builtin document: \"kind\" must be a string");
  const std::string kind = kind_node.get<std::string>();
  const json params = builtin.value("params", json::object());
  if (!params.is_object()) throw DocumentError("builtin document: \"params\" must be an object");

  if (kind == "identity") return ChannelSpec::identity(dim);
  if (kind == "transposition") return ChannelSpec::transposition(dim);
  if (kind == "replacement") {
    return ChannelSpec::replacement(
        matrix_from_json(field(params, "w", "replacement params"), dim, dim, "replacement W"));
  }
  if (kind == "depolarizing") {
    ComplexMatrix w =
        matrix_from_json(field(params, "w", "depolarizing params"), dim, dim, "depolarizing W");
    const double mu = number_or_throw(field(params, "mu", "depolarizing params"), "depolarizing mu");
    return ChannelSpec::depolarizing(std::move(w), mu);
  }
  if (kind == "unitary_conjugation") {
    return ChannelSpec::unitary_conjugation(
        matrix_from_json(field(params, "u", "unitary_conjugation params"), dim, dim,
                         "conjugation U"));
  }
  if (kind == "kraus_explicit") {
    const json& list = field(params, "operators", "kraus_explicit params");
    if (!list.is_array() || list.empty()) {
      throw DocumentError("kraus_explicit params: \"operators\" must be a non-empty array");
    }
    std::vector<ComplexMatrix> ops;
    ops.reserve(list.size());
    for (std::size_t p = 0; p < list.size(); ++p) {
      ops.push_back(matrix_from_json(list[p], dim, dim, "operator " + std::to_string(p)));
    }
    return ChannelSpec::kraus_explicit(std::move(ops));
  }
  throw DocumentError("builtin document: unknown kind \"" + kind + "\"");
}

}  // namespace

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& node, Eigen::Index rows, Eigen::Index cols,
                               const std::string& what) {
  if (!node.is_array() || static_cast<Eigen::Index>(node.size()) != rows) {
    throw DocumentError(what + ": expected " + std::to_string(rows) + " rows");
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = node[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw DocumentError(what + " row " + std::to_string(r) + ": expected " +
                          std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                  what + " entry (" + std::to_string(r) + ", " +
                                      std::to_string(c) + ")");
    }
  }
  return m;
}

ParsedChannel parse_channel_document(const json& doc) {
  if (!doc.is_object()) throw DocumentError("document: expected a JSON object");
  const int dim = dim_from_document(doc);
  const json& rep_node = field(doc, "representation", "document");
  if (!rep_node.is_string()) throw DocumentError("document: \"representation\" must be a string");
  const std::string rep = rep_node.get<std::string>();

  if (rep == "kraus") {
    const json& data = field(doc, "data", "kraus document");
    if (!data.is_array() || data.empty()) {
      throw DocumentError("kraus document: \"data\" must be a non-empty array of operators");
    }
    std::vector<ComplexMatrix> ops;
    ops.reserve(data.size());
    for (std::size_t p = 0; p < data.size(); ++p) {
      ops.push_back(matrix_from_json(data[p], dim, dim, "kraus operator " + std::to_string(p)));
    }
    return ParsedChannel{dim, rep, channel_from_kraus(make_kraus_set(std::move(ops)))};
  }

  if (rep == "choi") {
    const json& ordering = field(doc, "ordering", "choi document");
    if (!ordering.is_string() || ordering.get<std::string>() != kChoiOrdering) {
      throw DocumentError("choi document: \"ordering\" must be present and equal to \"" +
                          std::string(kChoiOrdering) + "\"");
    }
    const Eigen::Index side = static_cast<Eigen::Index>(dim) * dim;
    ComplexMatrix m = matrix_from_json(field(doc, "data", "choi document"), side, side,
                                       "choi matrix");
    return ParsedChannel{dim, rep, channel_from_choi(ChoiMatrix{dim, std::move(m)})};
  }

  if (rep == "action") {
    const json& data = field(doc, "data", "action document");
    if (!data.is_array() || static_cast<int>(data.size()) != dim) {
      throw DocumentError("action document: \"data\" must be a " + std::to_string(dim) + "x" +
                          std::to_string(dim) + " grid of matrices");
    }
    ChannelMap channel(dim);
    for (int i = 0; i < dim; ++i) {
      const json& row = data[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != dim) {
        throw DocumentError("action document row " + std::to_string(i) + ": expected " +
                            std::to_string(dim) + " matrices");
      }
      for (int j = 0; j < dim; ++j) {
        channel.set_basis_action(i, j,
                                 matrix_from_json(row[static_cast<std::size_t>(j)], dim, dim,
                                                  "action (" + std::to_string(i) + ", " +
                                                      std::to_string(j) + ")"));
      }
    }
    return ParsedChannel{dim, rep, std::move(channel)};
  }

  if (rep == "builtin") {
    const ChannelSpec spec = builtin_spec_from_json(doc, dim);
    try {
      return ParsedChannel{dim, rep, make_channel(spec)};
    } catch (const std::invalid_argument& e) {
      throw DocumentError(std::string("builtin document: ") + e.what());
    }
  }

  throw DocumentError("document: unknown representation \"" + rep + "\"");
}

json kraus_document(const KrausSet& ks) {
  json ops = json::array();
  for (const ComplexMatrix& m : ks.operators) ops.push_back(matrix_to_json(m));
  return json{{"dim", ks.dim}, {"representation", "kraus"}, {"data", std::move(ops)}};
}

json choi_document(const ChoiMatrix& j) {
  return json{{"dim", j.dim},
              {"representation", "choi"},
              {"ordering", std::string(kChoiOrdering)},
              {"data", matrix_to_json(j.matrix)}};
}

json report_to_json(const CpReport& report) {
  json out{{"verdict", report.verdict},
           {"hermiticity_defect", report.hermiticity_defect},
           {"tolerance_used", report.tolerance_used}};
  if (report.spectrum_available()) {
    out["choi_spectrum"] = report.choi_spectrum;
    out["min_eigenvalue"] = report.min_eigenvalue;
    out["minimal_rank"] = report.minimal_rank;
  }
  return out;
}

}  // namespace choikit
