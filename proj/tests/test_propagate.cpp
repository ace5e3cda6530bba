#include <setbound/gen.hpp>
#include <setbound/geometry.hpp>
#include <setbound/oracle.hpp>
#include <setbound/propagate.hpp>

#include <Eigen/Dense>
#include <doctest.h>

#include "fixtures.hpp"

using namespace setbound;

namespace {

Eigen::VectorXd sample_point(SplitMix64& rng, const Boxd& box) {
  Eigen::VectorXd p(box.size());
  for (Eigen::Index i = 0; i < box.size(); ++i) p(i) = rng.uniform(box(i).lo(), box(i).hi());
  return p;
}

}  // namespace

TEST_CASE("affine image basics") {
  const Boxd unit = fixtures::square_box(0.0, 1.0, 2);
  const Boxd id = affine_image(Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Zero(2), unit);
  CHECK(box_contains(id, unit));
  CHECK(fixtures::approx_box(id, unit, 1e-12));

  Eigen::MatrixXd sum(1, 2);
  sum << 1.0, 1.0;
  const Boxd s = affine_image(sum, Eigen::VectorXd::Zero(1), unit);
  CHECK(s(0).contains(Intervald(0.0, 2.0)));
  CHECK(s(0).lo() == doctest::Approx(0.0));
  CHECK(s(0).hi() == doctest::Approx(2.0));

  CHECK_THROWS_AS(affine_image(sum, Eigen::VectorXd::Zero(1), fixtures::square_box(0, 1, 3)),
                  std::invalid_argument);
}

TEST_CASE("first layer of the example matches the published bounds") {
  const Network net = fixtures::exm47_network();
  const Boxd input = fixtures::square_box(-0.5, 0.5, 2);
  const Layer& l1 = net.layer(0);
  const Boxd post = act_box(l1.activation, affine_image(l1.weights, l1.bias, input));
  Eigen::VectorXd lo(4), hi(4);
  lo << 0.5437, 0.5995, 0.7426, 0.2731;
  hi << 0.8487, 0.7481, 0.9300, 0.3641;
  CHECK(fixtures::approx_box(post, make_box(lo, hi), 5e-4));
}

TEST_CASE("ibp reproduces the published output box") {
  const Network net = fixtures::exm47_network();
  const IbpResult res = ibp_forward(net, fixtures::square_box(-0.5, 0.5, 2));
  Eigen::VectorXd lo(2), hi(2);
  lo << 0.8952, -0.2896;
  hi << 1.2753, 0.2783;
  CHECK(fixtures::approx_box(res.output, make_box(lo, hi), 5e-4));
  CHECK(res.bounds.pre_activation.size() == 3);
  CHECK(res.bounds.post_activation.size() == 3);
}

TEST_CASE("ibp on the identity network returns the box") {
  const Boxd box = fixtures::square_box(-2.0, 3.0, 3);
  const Boxd out = ibp_forward(fixtures::identity_network(3), box).output;
  CHECK(box_contains(out, box));
  CHECK(fixtures::approx_box(out, box, 1e-12));
}

TEST_CASE("ibp on a point box follows point evaluation") {
  const Network net = fixtures::exm47_network();
  Eigen::VectorXd p(2);
  p << 0.25, -0.125;
  const Boxd out = ibp_forward(net, make_box(p)).output;
  CHECK(box_contains(out, net.forward(p)));
  for (Eigen::Index i = 0; i < out.size(); ++i) CHECK(out(i).width() <= 1e-9);
}

TEST_CASE("ibp soundness and isotonicity on random networks") {
  SplitMix64 rng(29);
  const std::vector<std::vector<Eigen::Index>> shapes = {{2, 4, 3, 2}, {3, 3, 3}, {4, 4, 2}};
  const std::vector<Activation> acts = {Activation::tanh(), Activation::sigmoid(),
                                        Activation::leaky_relu(0.1), Activation::elu(1.0)};
  int which = 0;
  for (const auto& shape : shapes) {
    for (const Activation& act : acts) {
      const Network net = gen_net(shape, act, 1000 + which++);
      const double eps = rng.uniform(0.1, 0.6);
      const Boxd outer = fixtures::square_box(-eps, eps, static_cast<int>(shape.front()));
      const Boxd inner = fixtures::square_box(-eps / 2, eps / 2, static_cast<int>(shape.front()));
      const Boxd outer_img = ibp_forward(net, outer).output;
      const Boxd inner_img = ibp_forward(net, inner).output;
      CHECK(box_contains(outer_img, inner_img));  // inclusion isotonicity
      for (int s = 0; s < 1000; ++s) {
        const Eigen::VectorXd p = sample_point(rng, outer);
        CHECK(box_contains(outer_img, net.forward(p)));
      }
    }
  }
}

TEST_CASE("refinement dominance") {
  const Network net = fixtures::exm47_network();
  const Boxd box = fixtures::square_box(-0.5, 0.5, 2);
  const Boxd whole = ibp_forward(net, box).output;
  Boxd refined;
  bool first = true;
  for (const Boxd& cell : partition_box(box, 4)) {
    const Boxd img = ibp_forward(net, cell).output;
    refined = first ? img : box_hull(refined, img);
    first = false;
  }
  CHECK(box_contains(whole, refined));
}

TEST_CASE("interval jacobian trivia") {
  const IntervalMatrixd jid = interval_jacobian(fixtures::identity_network(2),
                                                fixtures::square_box(-1.0, 1.0, 2));
  CHECK(jid(0, 0).contains(1.0));
  CHECK(jid(0, 0).width() <= 1e-12);
  CHECK(jid(0, 1).contains(0.0));
  CHECK(jid(0, 1).width() <= 1e-12);
  CHECK(jid(1, 1).contains(1.0));
  CHECK(jid(1, 1).width() <= 1e-12);

  Eigen::MatrixXd w(1, 1);
  w << 2.0;
  const Network tanh_net = fixtures::single_layer(w, Eigen::VectorXd::Zero(1),
                                                  Activation::tanh());
  const IntervalMatrixd j = interval_jacobian(tanh_net, fixtures::square_box(0.0, 0.0, 1));
  CHECK(j(0, 0).contains(2.0));
  CHECK(j(0, 0).width() <= 1e-10);
}

TEST_CASE("interval jacobian encloses sampled analytic jacobians") {
  const Network net = fixtures::exm47_network();
  const Boxd box = fixtures::square_box(-0.5, 0.5, 2);
  const IntervalMatrixd J = interval_jacobian(net, box);
  SplitMix64 rng(31);
  for (int s = 0; s < 1000; ++s) {
    const Eigen::MatrixXd pj = point_jacobian(net, sample_point(rng, box));
    for (Eigen::Index r = 0; r < J.rows(); ++r)
      for (Eigen::Index c = 0; c < J.cols(); ++c) CHECK(J(r, c).contains(pj(r, c)));
  }
}

TEST_CASE("interval determinant small sizes") {
  IntervalMatrixd eye(2, 2);
  eye << Intervald(1.0), Intervald(0.0), Intervald(0.0), Intervald(1.0);
  const Intervald ed = interval_det(eye);
  CHECK(ed.contains(1.0));
  CHECK(ed.width() <= 1e-12);

  IntervalMatrixd diag(2, 2);
  diag << Intervald(1.0, 2.0), Intervald(0.0), Intervald(0.0), Intervald(1.0, 2.0);
  const Intervald d = interval_det(diag);
  CHECK(d.contains(Intervald(1.0, 4.0)));
  CHECK(d.lo() == doctest::Approx(1.0));
  CHECK(d.hi() == doctest::Approx(4.0));
}

TEST_CASE("interval determinant encloses sampled determinants") {
  SplitMix64 rng(37);
  for (const Eigen::Index n : {3, 5, 6, 8}) {
    IntervalMatrixd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) {
        const double center = rng.uniform(-2.0, 2.0) + (r == c ? 3.0 : 0.0);
        const double radius = rng.uniform(0.0, 0.15);
        m(r, c) = Intervald(center - radius, center + radius);
      }
    }
    const Intervald det = interval_det(m);
    for (int s = 0; s < 1000; ++s) {
      Eigen::MatrixXd pm(n, n);
      for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) pm(r, c) = rng.uniform(m(r, c).lo(), m(r, c).hi());
      CHECK(det.contains(pm.determinant()));
    }
  }
}

TEST_CASE("interval determinant degenerate and oversized cases") {
  IntervalMatrixd wide(5, 5);
  for (Eigen::Index r = 0; r < 5; ++r)
    for (Eigen::Index c = 0; c < 5; ++c) wide(r, c) = Intervald(-1.0, 1.0);
  // Every pivot candidate contains zero; the fallback must still enclose
  // all point determinants (and in particular zero).
  const Intervald d = interval_det(wide);
  CHECK(d.contains(0.0));
  SplitMix64 rng(41);
  for (int s = 0; s < 200; ++s) {
    Eigen::MatrixXd pm(5, 5);
    for (Eigen::Index r = 0; r < 5; ++r)
      for (Eigen::Index c = 0; c < 5; ++c) pm(r, c) = rng.uniform(-1.0, 1.0);
    CHECK(d.contains(pm.determinant()));
  }

  CHECK_THROWS_AS(interval_det(IntervalMatrixd(9, 9)), std::invalid_argument);
  CHECK_THROWS_AS(interval_det(IntervalMatrixd(2, 3)), std::invalid_argument);
}
