#include "cplx/lc.hpp"

#include <stdexcept>

#include "cplx/manifold.hpp"

namespace cplx {

namespace {

SearchOptions search_options(const LcOptions& opt) { return {opt.seed, opt.restarts, opt.strategy, opt.parallel}; }

}  // namespace

LcEvidence check_lc_ball_triangle(const SimplicialComplex& ball, const Simplex& triangle, const LcOptions& opt) {
  auto bd = boundary_complex(ball);
  auto target = remove_facet(bd, triangle);
  LcEvidence ev;
  ev.collapsed = ball;
  ev.candidates_tried = 1;
  auto res = search_collapse(ball, CollapseTarget::subcomplex(target), search_options(opt));
  ev.restarts_used = res.restarts_run;
  if (res.certificate) {
    ev.success = true;
    ev.removed = triangle;
    ev.certificate = std::move(res.certificate);
  }
  return ev;
}

LcEvidence check_lc_ball(const SimplicialComplex& ball, const LcOptions& opt) {
  if (ball.is_simplex() && ball.dim() == 3) {
    LcEvidence ev;
    ev.success = true;
    ev.collapsed = ball;
    return ev;
  }
  if (manifold_check(ball).kind != ManifoldClass::Ball3) throw std::invalid_argument("check_lc_ball: not a 3-ball");
  LcEvidence total;
  total.collapsed = ball;
  const auto bd = boundary_complex(ball);
  for (const auto& t : bd.facets()) {
    auto ev = check_lc_ball_triangle(ball, t, opt);
    ev.candidates_tried = total.candidates_tried + 1;
    ev.restarts_used += total.restarts_used;
    if (ev.success) return ev;
    total.candidates_tried = ev.candidates_tried;
    total.restarts_used = ev.restarts_used;
  }
  return total;
}

LcEvidence check_lc_sphere_facet(const SimplicialComplex& sphere, const Simplex& facet, const LcOptions& opt) {
  LcEvidence ev;
  ev.collapsed = remove_facet(sphere, facet);
  ev.candidates_tried = 1;
  auto res = search_collapse(ev.collapsed, CollapseTarget::point(), search_options(opt));
  ev.restarts_used = res.restarts_run;
  if (res.certificate) {
    ev.success = true;
    ev.removed = facet;
    ev.certificate = std::move(res.certificate);
  }
  return ev;
}

LcEvidence check_lc_sphere(const SimplicialComplex& sphere, const LcOptions& opt) {
  if (manifold_check(sphere).kind != ManifoldClass::Sphere3) throw std::invalid_argument("check_lc_sphere: not a 3-sphere");
  LcEvidence total;
  for (const auto& f : sphere.facets()) {
    auto ev = check_lc_sphere_facet(sphere, f, opt);
    ev.candidates_tried = total.candidates_tried + 1;
    ev.restarts_used += total.restarts_used;
    if (ev.success) return ev;
    total.candidates_tried = ev.candidates_tried;
    total.restarts_used = ev.restarts_used;
  }
  return total;
}

}  // namespace cplx
