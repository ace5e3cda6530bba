#include <setbound/network.hpp>
#include <setbound/network_io.hpp>
#include <setbound/oracle.hpp>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"

using namespace setbound;
using nlohmann::json;

TEST_CASE("example network has expected shape") {
  const Network net = fixtures::exm47_network();
  CHECK(net.widths() == std::vector<Eigen::Index>{2, 4, 3, 2});
  CHECK(net.input_dim() == 2);
  CHECK(net.output_dim() == 2);
  CHECK(net.layer_count() == 3);
}

TEST_CASE("document load honours exact values") {
  const json doc = to_document(fixtures::exm47_network());
  const Network net = network_from_document(doc);
  CHECK(net.layer(0).weights(0, 1) == -1.2349);
  CHECK(net.layer(2).bias(1) == 0.7323);
  CHECK(net.layer(1).activation == Activation::sigmoid());
}

TEST_CASE("single identity layer is the identity") {
  const Network net = fixtures::identity_network(2);
  Eigen::VectorXd x(2);
  x << 0.3, -0.7;
  CHECK(net.forward(x) == x);
}

TEST_CASE("chaining violations name the offending layer") {
  // 3x5 weights after a width-4 layer.
  std::vector<Layer> layers;
  layers.push_back({Eigen::MatrixXd::Ones(4, 2), Eigen::VectorXd::Zero(4), Activation::tanh()});
  layers.push_back({Eigen::MatrixXd::Ones(3, 5), Eigen::VectorXd::Zero(3), Activation::tanh()});
  CHECK_THROWS_WITH_AS(Network(std::move(layers)),
                       doctest::Contains("layer 1"), std::invalid_argument);

  std::vector<Layer> bad_bias;
  bad_bias.push_back({Eigen::MatrixXd::Ones(2, 2), Eigen::VectorXd::Zero(3), Activation::tanh()});
  CHECK_THROWS_WITH_AS(Network(std::move(bad_bias)),
                       doctest::Contains("layer 0"), std::invalid_argument);
}

TEST_CASE("unknown activation in document") {
  json doc = to_document(fixtures::identity_network(1));
  doc["layers"][0]["activation"] = "softmax";
  CHECK_THROWS_WITH_AS(network_from_document(doc), doctest::Contains("softmax"),
                       std::invalid_argument);
}

TEST_CASE("forward reference values") {
  const Network net = fixtures::exm47_network();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(2);
  const Eigen::VectorXd y = net.forward(x);
  // Frozen from an independent hand-rolled matrix/sigmoid evaluation.
  CHECK(y(0) == doctest::Approx(1.0787138283172957).epsilon(1e-12));
  CHECK(y(1) == doctest::Approx(-0.04551323840316079).epsilon(1e-12));

  const Network tanh_net = fixtures::single_layer(Eigen::MatrixXd::Ones(1, 1),
                                                  Eigen::VectorXd::Zero(1), Activation::tanh());
  CHECK(tanh_net.forward(Eigen::VectorXd::Zero(1))(0) == 0.0);

  CHECK_THROWS_AS(net.forward(Eigen::VectorXd::Zero(3)), std::invalid_argument);
}

TEST_CASE("slice produces sub-networks") {
  const Network net = fixtures::exm47_network();
  const Network suffix = net.slice(1, 2);
  CHECK(suffix.widths() == std::vector<Eigen::Index>{4, 3, 2});
  const Network first = net.slice(0, 0);
  CHECK(first.widths() == std::vector<Eigen::Index>{2, 4});
  const Network whole = net.slice(0, net.layer_count() - 1);

  SplitMix64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Eigen::VectorXd x(2);
    x << rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0);
    CHECK((whole.forward(x) - net.forward(x)).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS(net.slice(1, 3), std::out_of_range);
  CHECK_THROWS_AS(net.slice(-1, 1), std::out_of_range);
  CHECK_THROWS_AS(net.slice(2, 1), std::out_of_range);
}

TEST_CASE("slices compose to the full network") {
  const Network net = fixtures::exm47_network();
  SplitMix64 rng(5);
  for (int k = 0; k + 1 < net.layer_count(); ++k) {
    const Network head = net.slice(0, k);
    const Network tail = net.slice(k + 1, net.layer_count() - 1);
    for (int i = 0; i < 100; ++i) {
      Eigen::VectorXd x(2);
      x << rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0);
      const Eigen::VectorXd composed = tail.forward(head.forward(x));
      CHECK((composed - net.forward(x)).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("save and load is value-identical") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "setbound_roundtrip.net";
  const Network net = fixtures::exm47_network();
  save_network(net, path.string());
  const Network loaded = load_network(path.string());
  REQUIRE(loaded.layer_count() == net.layer_count());
  for (int i = 0; i < net.layer_count(); ++i) {
    CHECK(loaded.layer(i).weights == net.layer(i).weights);
    CHECK(loaded.layer(i).bias == net.layer(i).bias);
    CHECK(loaded.layer(i).activation == net.layer(i).activation);
  }
  // Randomly perturbed doubles survive the text round trip bit-exactly.
  SplitMix64 rng(23);
  Network noisy = fixtures::identity_network(3);
  std::vector<Layer> layers{noisy.layer(0)};
  for (Eigen::Index r = 0; r < 3; ++r)
    for (Eigen::Index c = 0; c < 3; ++c) layers[0].weights(r, c) = rng.uniform(-1.0, 1.0);
  layers[0].activation = Activation::leaky_relu(0.015625);
  const Network noisy2(layers);
  save_network(noisy2, path.string());
  const Network reloaded = load_network(path.string());
  CHECK(reloaded.layer(0).weights == layers[0].weights);
  CHECK(reloaded.layer(0).activation == layers[0].activation);
  fs::remove(path);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(network_from_document(json::object()), std::invalid_argument);
  json doc = to_document(fixtures::identity_network(2));
  doc["layers"][0]["weights"] = json::array({json::array({1.0, 0.0}), json::array({1.0})});
  CHECK_THROWS_WITH_AS(network_from_document(doc), doctest::Contains("ragged"),
                       std::invalid_argument);
  CHECK_THROWS_AS(load_network("/nonexistent/path.net"), std::runtime_error);
}
