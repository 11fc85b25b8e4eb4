#include <json.hpp>
#include <stdexcept>
#include <tuple>

#include "cplx/flips.hpp"
#include "cplx/io.hpp"
#include "cplx/random.hpp"
#include "flip_complex.hpp"

namespace cplx {

AnnealConfig anneal_config_from_json(std::string_view json_text) {
  auto j = nlohmann::json::parse(json_text);
  AnnealConfig c;
  c.initial_temperature = j.value("initial_temperature", c.initial_temperature);
  c.cooling = j.value("cooling", c.cooling);
  c.min_temperature = j.value("min_temperature", c.min_temperature);
  c.plateau = j.value("plateau", c.plateau);
  c.insert_probability = j.value("insert_probability", c.insert_probability);
  if (c.cooling <= 0 || c.cooling > 1) throw std::invalid_argument("anneal config: cooling must lie in (0, 1]");
  if (c.plateau < 1) throw std::invalid_argument("anneal config: plateau must be positive");
  return c;
}

std::string anneal_config_to_json(const AnnealConfig& c) {
  nlohmann::json j = {{"initial_temperature", c.initial_temperature},
                      {"cooling", c.cooling},
                      {"min_temperature", c.min_temperature},
                      {"plateau", c.plateau},
                      {"insert_probability", c.insert_probability}};
  return j.dump(2);
}

bool ReduceResult::reached_boundary_of_4_simplex() const {
  return final.num_vertices() == 5 && final.num_facets() == 5;
}

ReduceResult reduce(const SimplicialComplex& s, const ReduceOptions& opt) {
  detail::FlipComplex fc(s, opt.protected_edges);
  Rng rng(opt.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const auto& cfg = opt.anneal;

  ReduceResult res;
  res.seed = opt.seed;
  res.log.initial_hash = canonical_hash(s);
  auto objective = [&] { return std::make_pair(fc.num_vertices(), fc.num_facets()); };
  auto best = objective();
  std::size_t best_len = 0;
  double temperature = cfg.initial_temperature;
  int since_best = 0;

  std::vector<FlipMove> by_kind[4];
  for (int step = 0; step < opt.budget; ++step) {
    if (best.first == 5 && best.second == 5) break;
    for (auto& v : by_kind) v.clear();
    for (auto& m : fc.moves(opt.allow_1_4)) by_kind[static_cast<int>(m.kind)].push_back(std::move(m));
    auto& ins = by_kind[static_cast<int>(MoveKind::OneFour)];
    auto& up = by_kind[static_cast<int>(MoveKind::TwoThree)];
    auto& down = by_kind[static_cast<int>(MoveKind::ThreeTwo)];
    auto& drop = by_kind[static_cast<int>(MoveKind::FourOne)];
    std::vector<FlipMove>* pool = nullptr;
    if (!ins.empty() && coin(rng) < cfg.insert_probability) pool = &ins;
    else if (!drop.empty()) pool = &drop;
    else if (!down.empty() && coin(rng) >= temperature) pool = &down;
    else if (!up.empty()) pool = &up;
    else if (!down.empty()) pool = &down;
    else break;
    const FlipMove& m = (*pool)[uniform_index(rng, pool->size())];
    fc.apply(m);
    res.log.moves.push_back(m);
    ++res.steps_run;
    auto obj = objective();
    if (obj < best) {
      best = obj;
      best_len = res.log.moves.size();
      since_best = 0;
    } else if (++since_best >= cfg.plateau) {
      temperature = cfg.initial_temperature;
      since_best = 0;
    }
    temperature = std::max(cfg.min_temperature, temperature * cfg.cooling);
  }
  res.log.moves.resize(best_len);
  detail::FlipComplex again(s, opt.protected_edges);
  for (const auto& m : res.log.moves) again.apply(m);
  res.final = again.to_complex();
  res.log.final_hash = canonical_hash(res.final);
  return res;
}

ReduceResult reduce_many(const SimplicialComplex& s, const ReduceOptions& opt, int runs) {
  if (runs < 1) throw std::invalid_argument("reduce_many: need at least one run");
  std::vector<ReduceResult> out(runs);
#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 0; r < runs; ++r) {
    ReduceOptions o = opt;
    o.seed = opt.seed + static_cast<std::uint64_t>(r);
    out[r] = reduce(s, o);
  }
  auto rank = [](const ReduceResult& r) {
    return std::make_tuple(r.final.num_vertices(), r.final.num_facets(), r.log.moves.size(), r.seed);
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < out.size(); ++i)
    if (rank(out[i]) < rank(out[best])) best = i;
  return std::move(out[best]);
}

}  // namespace cplx
