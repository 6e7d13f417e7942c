#include "dqa/instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "dqa/rng.hpp"
#include "dqa/schedule.hpp"
#include "dqa/spectral.hpp"

namespace dqa {

Max2SatInstance gen_max2sat(int n, int m, std::uint64_t seed) {
  require(n >= 2, "gen_max2sat: n must be >= 2");
  require(m >= 1, "gen_max2sat: m must be >= 1");
  Rng rng(seed);
  Max2SatInstance inst;
  inst.problem = SpinProblem::make(n);
  inst.problem.name = "max2sat";

  std::map<std::pair<int, int>, double> J;
  for (int c = 0; c < m; ++c) {
    Max2SatClause cl{};
    cl.var[0] = static_cast<int>(rng.uniform_int(0, n - 1));
    do {
      cl.var[1] = static_cast<int>(rng.uniform_int(0, n - 1));
    } while (cl.var[1] == cl.var[0]);
    cl.neg[0] = rng.bernoulli(0.5);
    cl.neg[1] = rng.bernoulli(0.5);
    inst.clauses.push_back(cl);

    // Penalty (1 - s_i z_i)(1 - s_j z_j)/4 with s = +1 for a positive
    // literal, -1 for a negated one; expands into h, J, and a constant.
    const double si = cl.neg[0] ? -1.0 : 1.0;
    const double sj = cl.neg[1] ? -1.0 : 1.0;
    inst.problem.h(cl.var[0]) += si / 4.0;
    inst.problem.h(cl.var[1]) += sj / 4.0;
    const int a = std::min(cl.var[0], cl.var[1]);
    const int b = std::max(cl.var[0], cl.var[1]);
    J[{a, b}] += -si * sj / 4.0;
    inst.offset += 0.25;
  }
  for (const auto& [key, v] : J)
    if (v != 0.0) inst.problem.add_coupling(key.first, key.second, v);
  inst.problem.validate();
  return inst;
}

int violated_clauses(const Max2SatInstance& inst, std::uint64_t index) {
  const int n = inst.problem.n;
  int count = 0;
  for (const auto& cl : inst.clauses) {
    bool sat = false;
    for (int t = 0; t < 2; ++t) {
      // Literal true when z agrees with its polarity (z = +1 for bit 0).
      const int z = z_value(index, cl.var[t], n);
      if ((z == 1) != cl.neg[t]) sat = true;
    }
    if (!sat) ++count;
  }
  return count;
}

SpinProblem gen_sk(int n, std::uint64_t seed) {
  require(n >= 2, "gen_sk: n must be >= 2");
  Rng rng(seed);
  SpinProblem p = SpinProblem::make(n);
  p.name = "sk";
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      p.add_coupling(i, j, scale * rng.normal());
  return p;
}

DiagonalCost gen_rem(int n, std::uint64_t seed) {
  require(n >= 1, "gen_rem: n must be >= 1");
  if (n > 24) throw ResourceError("gen_rem: n above 24 cannot be materialized");
  Rng rng(seed);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = rng.normal();
  return DiagonalCost::from_vector(n, std::move(v));
}

void GluedTreesGraph::validate() const {
  const int expected = 2 * ((1 << (d + 1)) - 1);
  require(vertex_count() == expected, "GluedTreesGraph: wrong vertex count");
  require(entrance >= 0 && entrance < expected && exit >= 0 && exit < expected,
          "GluedTreesGraph: terminal vertices out of range");
  for (int v = 0; v < expected; ++v) {
    const auto& nb = adjacency[static_cast<std::size_t>(v)];
    require(nb.size() <= 3, "GluedTreesGraph: degree above 3");
    for (int u : nb) {
      require(u >= 0 && u < expected && u != v, "GluedTreesGraph: bad edge");
      const auto& back = adjacency[static_cast<std::size_t>(u)];
      require(std::find(back.begin(), back.end(), v) != back.end(),
              "GluedTreesGraph: edge not symmetric");
    }
  }
  require(adjacency[static_cast<std::size_t>(entrance)].size() == 2 &&
              adjacency[static_cast<std::size_t>(exit)].size() == 2,
          "GluedTreesGraph: terminal degree must be 2");
}

GluedTreesGraph gen_glued_trees(int d, std::uint64_t seed) {
  require(d >= 1, "gen_glued_trees: d must be >= 1");
  require(d <= 20, "gen_glued_trees: depth too large");
  Rng rng(seed);
  const int tree = (1 << (d + 1)) - 1;  // nodes per tree, level order
  const int leaves = 1 << d;
  GluedTreesGraph g;
  g.d = d;
  g.adjacency.assign(static_cast<std::size_t>(2 * tree), {});
  g.entrance = 0;
  g.exit = tree;

  auto link = [&](int a, int b) {
    g.adjacency[static_cast<std::size_t>(a)].push_back(b);
    g.adjacency[static_cast<std::size_t>(b)].push_back(a);
  };
  for (int off : {0, tree})
    for (int v = 0; v < tree; ++v) {
      if (2 * v + 1 < tree) link(off + v, off + 2 * v + 1);
      if (2 * v + 2 < tree) link(off + v, off + 2 * v + 2);
    }

  // Random alternating cycle across the two leaf sets: every leaf picks up
  // exactly two cycle edges on top of its one parent edge.
  std::vector<int> left(static_cast<std::size_t>(leaves)),
      right(static_cast<std::size_t>(leaves));
  for (int i = 0; i < leaves; ++i) {
    left[static_cast<std::size_t>(i)] = (leaves - 1) + i;
    right[static_cast<std::size_t>(i)] = tree + (leaves - 1) + i;
  }
  for (auto* side : {&left, &right})
    for (int i = leaves - 1; i > 0; --i)
      std::swap((*side)[static_cast<std::size_t>(i)],
                (*side)[static_cast<std::size_t>(rng.uniform_int(0, i))]);
  for (int i = 0; i < leaves; ++i) {
    link(left[static_cast<std::size_t>(i)], right[static_cast<std::size_t>(i)]);
    link(right[static_cast<std::size_t>(i)],
         left[static_cast<std::size_t>((i + 1) % leaves)]);
  }
  g.validate();
  return g;
}

HardnessReport hardness_filter(const std::vector<SpinProblem>& problems,
                               double gap_threshold,
                               const std::vector<double>& coarse_grid) {
  require(gap_threshold >= 0.0, "hardness_filter: threshold must be >= 0");
  require(coarse_grid.size() >= 3, "hardness_filter: need at least 3 grid points");
  HardnessReport rep;
  const Schedule sched = linear_forward(1.0);
  // Only two levels are needed per frame, so prefer the warm-started
  // iterative path well below the general dense-solve cutoff.
  SpectrumOptions sopts;
  sopts.dense_limit = Eigen::Index{1} << 9;
  for (std::size_t idx = 0; idx < problems.size(); ++idx) {
    const SpinProblem& p = problems[idx];
    require(p.n <= 16, "hardness_filter: n above 16");
    TimFamily fam(p);
    Assembler H = [&fam, &sched](double s) { return fam.at(sched.A(s), sched.B(s)); };
    // Coarse pass first; only gaps near the threshold earn a refinement.
    double coarse = std::numeric_limits<double>::infinity();
    {
      GapProfile prof = gap_profile(H, coarse_grid, 1, sopts);
      for (double v : prof.Delta) coarse = std::min(coarse, v);
    }
    double refined = coarse;
    if (std::isfinite(gap_threshold) && coarse < 1.5 * gap_threshold)
      refined = global_minimum(min_gap(H, 1, coarse_grid, sopts)).gap;
    rep.min_gaps.push_back(refined);
    if (refined < gap_threshold) rep.selected.push_back(idx);
  }
  return rep;
}

}  // namespace dqa
