#pragma once

#include "choikit/builtin_channels.hpp"

#include <json.hpp>

#include <string>

namespace choikit {

// Malformed or out-of-contract channel documents.
class DocumentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Largest accepted document dimension; keeps Choi matrices at desk scale.
inline constexpr int kMaxDocumentDim = 64;

struct ParsedChannel {
  int dim = 0;
  std::string representation;  // kraus | choi | action | builtin
  ChannelMap channel;
};

nlohmann::json complex_to_json(const Complex& z);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

// Parses a nested array of [re, im] pairs with the exact given shape.
ComplexMatrix matrix_from_json(const nlohmann::json& node, Eigen::Index rows,
                               Eigen::Index cols, const std::string& what);

// Channel document schema:
//   dim            positive integer (<= kMaxDocumentDim)
//   representation "kraus" | "choi" | "action" | "builtin"
//   ordering       required and equal to "output-first" for choi documents
//   data           kraus: list of dim x dim operators
//                  choi:  dim^2 x dim^2 matrix
//                  action: dim x dim grid of dim x dim matrices
//   builtin        {kind, params} for builtin documents
// Complex entries are [re, im] pairs throughout.
ParsedChannel parse_channel_document(const nlohmann::json& doc);

nlohmann::json kraus_document(const KrausSet& ks);
nlohmann::json choi_document(const ChoiMatrix& j);
nlohmann::json report_to_json(const CpReport& report);

}  // namespace choikit
