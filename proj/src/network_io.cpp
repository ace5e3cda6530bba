#include <setbound/network_io.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace setbound {

using nlohmann::json;

json to_document(const Network& net) {
  json doc;
  doc["format"] = kNetworkFormatTag;
  json layers = json::array();
  for (const Layer& l : net.layers()) {
    json rec;
    json rows = json::array();
    for (Eigen::Index r = 0; r < l.weights.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < l.weights.cols(); ++c) row.push_back(l.weights(r, c));
      rows.push_back(std::move(row));
    }
    rec["weights"] = std::move(rows);
    json bias = json::array();
    for (Eigen::Index r = 0; r < l.bias.size(); ++r) bias.push_back(l.bias(r));
    rec["bias"] = std::move(bias);
    rec["activation"] = act_name(l.activation);
    if (l.activation.kind == ActKind::LeakyRelu) rec["slope"] = l.activation.param;
    if (l.activation.kind == ActKind::Elu) rec["alpha"] = l.activation.param;
    layers.push_back(std::move(rec));
  }
  doc["layers"] = std::move(layers);
  return doc;
}

Network network_from_document(const json& doc) {
  if (!doc.is_object() || !doc.contains("layers") || !doc["layers"].is_array())
    throw std::invalid_argument("network document: missing 'layers' array");
  if (doc.contains("format") && doc["format"] != kNetworkFormatTag)
    throw std::invalid_argument("network document: unsupported format tag '" +
                                doc["format"].get<std::string>() + "'");
  std::vector<Layer> layers;
  int idx = 0;
  for (const json& rec : doc["layers"]) {
    const std::string where = "layer " + std::to_string(idx);
    if (!rec.contains("weights") || !rec["weights"].is_array() || rec["weights"].empty())
      throw std::invalid_argument(where + ": missing weights");
    if (!rec.contains("bias") || !rec["bias"].is_array())
      throw std::invalid_argument(where + ": missing bias");
    if (!rec.contains("activation"))
      throw std::invalid_argument(where + ": missing activation");

    const json& rows = rec["weights"];
    const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index c = static_cast<Eigen::Index>(rows[0].size());
    Eigen::MatrixXd W(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
      if (static_cast<Eigen::Index>(rows[i].size()) != c)
        throw std::invalid_argument(where + ": ragged weight rows");
      for (Eigen::Index j = 0; j < c; ++j) W(i, j) = rows[i][j].get<double>();
    }
    Eigen::VectorXd b(static_cast<Eigen::Index>(rec["bias"].size()));
    for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = rec["bias"][i].get<double>();

    std::optional<double> param;
    if (rec.contains("slope")) param = rec["slope"].get<double>();
    if (rec.contains("alpha")) param = rec["alpha"].get<double>();
    const Activation act = act_from_name(rec["activation"].get<std::string>(), param);

    layers.push_back(Layer{std::move(W), std::move(b), act});
    ++idx;
  }
  return Network(std::move(layers));  // validates bias lengths and chaining
}

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open network file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("network file '" + path + "': " + e.what());
  }
  return network_from_document(doc);
}

void save_network(const Network& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write network file '" + path + "'");
  out << to_document(net).dump(2) << "\n";
}

}  // namespace setbound
