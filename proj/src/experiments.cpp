#include "localflow/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "localflow/errors.hpp"
#include "localflow/hash.hpp"
#include "localflow/max_flow.hpp"
#include "localflow/parallel.hpp"

namespace localflow {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Decimal with 12 digits, then the exact p/q.
void put_rational(std::ostream& out, const Rational& r) {
  out << to_decimal(r, 12) << ',' << to_string(r);
}

std::string ms_text(double ms) {
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << ms;
  return s.str();
}

}  // namespace

NamedInstance make_instance(const InstanceSpec& spec) {
  Instance inst = generate(spec);
  std::string id = std::string(to_string(spec.family)) + "-n" +
                   std::to_string(inst.graph.node_count()) + "-g" + std::to_string(spec.gen_seed);
  return {std::move(id), std::move(inst.graph), std::move(inst.meta)};
}

std::vector<NamedInstance> make_instances(InstanceSpec spec, int count, std::uint64_t first_seed) {
  std::vector<NamedInstance> out;
  for (int i = 0; i < count; ++i) {
    spec.gen_seed = first_seed + static_cast<std::uint64_t>(i);
    out.push_back(make_instance(spec));
  }
  return out;
}

InstanceSpec default_random_family(std::uint64_t gen_seed) {
  InstanceSpec spec;
  spec.family = Family::kRandomBounded;
  spec.n = 200;
  spec.d = 4;
  spec.m_ticks = 5;
  spec.rounds = 3;
  spec.rho_s = 0.05;
  spec.rho_t = 0.05;
  spec.gen_seed = gen_seed;
  return spec;
}

std::string seeds_label(const std::vector<std::uint64_t>& seeds) {
  if (seeds.empty()) return "";
  bool contiguous = true;
  for (std::size_t i = 1; i < seeds.size(); ++i) contiguous &= seeds[i] == seeds[i - 1] + 1;
  if (contiguous && seeds.size() > 2) {
    return std::to_string(seeds.front()) + ".." + std::to_string(seeds.back());
  }
  std::string out;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(seeds[i]);
  }
  return out;
}

std::vector<EdgeId> skip_structure_violations(const ColoredGraph& g, const PreparedRun& prepared,
                                              const Flow& f1, const Flow& f2, int s) {
  if (!prepared.depths) throw PreconditionError("skip-structure check needs chain depths");
  std::vector<bool> deep(g.edge_count(), false);
  const LabeledPaths& labeled = *prepared.labeled;
  for (std::size_t i = 0; i < labeled.paths.size(); ++i) {
    if (prepared.depths->depth[i] < s) continue;
    for (ArcIndex a : labeled.paths.arcs(i)) deep[ColoredGraph::edge_of(a)] = true;
  }
  std::vector<EdgeId> bad;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (f1.f_ab(i) != f2.f_ab(i) && !deep[i]) bad.push_back(g.edges()[i].id);
  }
  return bad;
}

// --- approximation -----------------------------------------------------------

std::vector<ApproxRow> experiment_approx(const std::vector<NamedInstance>& instances,
                                         const ApproxOptions& options) {
  struct SeedResult {
    Ticks f1 = 0;
    std::vector<Ticks> f2;  // per s
    bool short_path_left = false;
    int boundary_violations = 0;
    int invalid = 0;
  };
  struct Item {
    std::size_t instance;
    std::size_t l_index;
  };

  std::vector<MaxFlowResult> fstar(instances.size());
  std::vector<double> fstar_ms(instances.size(), 0);
  parallel_for(instances.size(), options.threads, [&](std::size_t i) {
    const auto t0 = Clock::now();
    fstar[i] = max_flow(instances[i].graph);
    fstar_ms[i] = elapsed_ms(t0);
  });

  std::vector<Item> items;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (std::size_t li = 0; li < options.ls.size(); ++li) items.push_back({i, li});
  }
  std::vector<std::vector<SeedResult>> results(items.size());
  std::vector<double> item_ms(items.size(), 0);
  parallel_for(items.size(), options.threads, [&](std::size_t k) {
    const auto t0 = Clock::now();
    const ColoredGraph& g = instances[items[k].instance].graph;
    const int l = options.ls[items[k].l_index];
    const PathSet paths = enumerate_paths(g, l, options.interior);
    auto& out = results[k];
    for (const std::uint64_t seed : options.seeds) {
      const PreparedRun prepared = prepare_run(g, paths, l, seed, !options.ss.empty());
      SeedResult r;
      const RunResult a1 = run_prepared(g, prepared, 0, true);
      r.invalid += validate_flow(g, a1.flow).ok() ? 0 : 1;
      r.f1 = flow_value(g, a1.flow);
      r.short_path_left = shortest_augmenting_path_length(g, a1.flow, l).has_value();
      r.boundary_violations = static_cast<int>(a1.trace.boundary_violations.size());
      for (const int s : options.ss) {
        const RunResult a2 = run_prepared(g, prepared, s, false);
        if (!validate_flow(g, a2.flow).ok()) {
          ++r.invalid;
          r.f2.push_back(0);
        } else {
          r.f2.push_back(flow_value(g, a2.flow));
        }
      }
      out.push_back(std::move(r));
    }
    item_ms[k] = elapsed_ms(t0);
  });

  std::vector<ApproxRow> rows;
  const auto m = static_cast<std::int64_t>(options.seeds.size());
  for (std::size_t k = 0; k < items.size(); ++k) {
    const NamedInstance& inst = instances[items[k].instance];
    const ColoredGraph& g = inst.graph;
    const MaxFlowResult& opt = fstar[items[k].instance];
    const int l = options.ls[items[k].l_index];
    const auto n = static_cast<std::int64_t>(g.node_count());
    const Rational bound = Rational(opt.value) -
                           Rational(static_cast<std::int64_t>(g.degree_bound()) * g.capacity_bound() * n, l);
    const bool fstar_valid = validate_flow(g, opt.flow).ok();
    const std::size_t s_count = std::max<std::size_t>(options.ss.size(), 1);
    for (std::size_t si = 0; si < s_count; ++si) {
      ApproxRow row;
      row.instance = inst.id;
      row.n = g.node_count();
      row.d = g.degree_bound();
      row.m_ticks = g.capacity_bound();
      row.l = l;
      row.s = options.ss.empty() ? 0 : options.ss[si];
      row.seeds = seeds_label(options.seeds);
      row.fstar = opt.value;
      row.length_bound = bound;
      row.invalid_flows = fstar_valid ? 0 : 1;
      Ticks sum1 = 0;
      Ticks sum2 = 0;
      row.min_f1 = results[k].empty() ? 0 : results[k].front().f1;
      for (const SeedResult& r : results[k]) {
        sum1 += r.f1;
        if (!options.ss.empty()) sum2 += r.f2[si];
        row.min_f1 = std::min(row.min_f1, r.f1);
        row.length_bound_ok &= Rational(r.f1) >= bound;
        row.residual_short_paths += r.short_path_left ? 1 : 0;
        row.boundary_violations += r.boundary_violations;
        row.invalid_flows += r.invalid;
      }
      if (m > 0) {
        row.mean_f1 = Rational(sum1, m);
        row.mean_f2 = Rational(sum2, m);
        row.mean_gap_f1_f2 = Rational(sum1 - sum2, m);
      }
      row.wall_ms = item_ms[k] + fstar_ms[items[k].instance];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string approx_csv(const std::vector<ApproxRow>& rows, bool timing) {
  std::ostringstream out;
  out << "instance,n,d,M_ticks,l,s,seeds,fstar,mean_f1,mean_f1_exact,mean_f2,mean_f2_exact,"
         "mean_gap_f1_f2,mean_gap_f1_f2_exact,length_bound,length_bound_exact,min_f1,length_bound_ok,"
         "residual_short_paths,boundary_violations,invalid_flows,passed";
  if (timing) out << ",wall_ms";
  out << '\n';
  for (const ApproxRow& r : rows) {
    out << r.instance << ',' << r.n << ',' << r.d << ',' << r.m_ticks << ',' << r.l << ','
        << r.s << ',' << r.seeds << ',' << r.fstar << ',';
    put_rational(out, r.mean_f1);
    out << ',';
    put_rational(out, r.mean_f2);
    out << ',';
    put_rational(out, r.mean_gap_f1_f2);
    out << ',';
    put_rational(out, r.length_bound);
    out << ',' << r.min_f1 << ',' << (r.length_bound_ok ? 1 : 0) << ',' << r.residual_short_paths << ','
        << r.boundary_violations << ',' << r.invalid_flows << ',' << (r.passed() ? 1 : 0);
    if (timing) out << ',' << ms_text(r.wall_ms);
    out << '\n';
  }
  return out.str();
}

// --- chain tail --------------------------------------------------------------

ChainTailResult experiment_chain_tail(const std::vector<NamedInstance>& instances,
                                      const ChainTailOptions& options) {
  struct Item {
    std::size_t instance;
    std::size_t seed_index;
  };
  std::vector<PathSet> paths(instances.size());
  parallel_for(instances.size(), options.threads, [&](std::size_t i) {
    paths[i] = enumerate_paths(instances[i].graph, options.l, options.interior);
  });

  std::vector<Item> items;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (std::size_t j = 0; j < options.seeds.size(); ++j) items.push_back({i, j});
  }
  // Per item: histogram of per-edge max depth.
  std::vector<std::vector<std::uint64_t>> hist(items.size());
  parallel_for(items.size(), options.threads, [&](std::size_t k) {
    const ColoredGraph& g = instances[items[k].instance].graph;
    const LabeledPaths labeled =
        label_paths(g, paths[items[k].instance], options.seeds[items[k].seed_index]);
    const ChainDepthTable depths = chain_depth_all(g, labeled);
    std::vector<int> edge_max(g.edge_count(), 0);
    for (std::size_t p = 0; p < labeled.paths.size(); ++p) {
      for (ArcIndex a : labeled.paths.arcs(p)) {
        int& slot = edge_max[ColoredGraph::edge_of(a)];
        slot = std::max(slot, depths.depth[p]);
      }
    }
    auto& h = hist[k];
    for (int d : edge_max) {
      if (static_cast<std::size_t>(d) >= h.size()) h.resize(static_cast<std::size_t>(d) + 1, 0);
      ++h[static_cast<std::size_t>(d)];
    }
  });

  auto tail_rows = [](const std::string& id, const std::vector<std::uint64_t>& h) {
    std::vector<ChainTailRow> rows;
    std::uint64_t total = 0;
    for (auto c : h) total += c;
    std::uint64_t at_least = total;
    for (std::size_t q = 1; q <= h.size(); ++q) {
      at_least -= h[q - 1];
      rows.push_back({id, static_cast<int>(q), at_least, total});
    }
    return rows;
  };

  ChainTailResult result;
  std::vector<std::uint64_t> pooled;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::vector<std::uint64_t> h;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (items[k].instance != i) continue;
      if (hist[k].size() > h.size()) h.resize(hist[k].size(), 0);
      for (std::size_t d = 0; d < hist[k].size(); ++d) h[d] += hist[k][d];
    }
    if (h.size() > pooled.size()) pooled.resize(h.size(), 0);
    for (std::size_t d = 0; d < h.size(); ++d) pooled[d] += h[d];
    auto rows = tail_rows(instances[i].id, h);
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
  }
  result.pooled = tail_rows("all", pooled);
  return result;
}

std::string chain_tail_csv(const ChainTailResult& result) {
  std::ostringstream out;
  out << "instance,q,at_least,total,tail,tail_exact\n";
  auto put = [&](const ChainTailRow& r) {
    out << r.instance << ',' << r.q << ',' << r.at_least << ',' << r.total << ',';
    put_rational(out, r.tail());
    out << '\n';
  };
  for (const auto& r : result.rows) put(r);
  for (const auto& r : result.pooled) put(r);
  return out.str();
}

// --- locality ----------------------------------------------------------------

std::vector<LocalityRow> experiment_locality(const std::vector<NamedInstance>& instances,
                                             const LocalityExperimentOptions& options) {
  std::vector<LocalityRow> rows;
  for (const NamedInstance& inst : instances) {
    const ColoredGraph& g = inst.graph;
    for (const auto& [l, s] : options.ls_pairs) {
      const PathSet paths = enumerate_paths(g, l, options.interior);
      for (const std::uint64_t seed : options.seeds) {
        const auto t0 = Clock::now();
        const RunConfig cfg{l, s, seed, options.interior};
        const std::vector<DirectedEdgeRef> sample = sample_edge_refs(g, seed, options.sample);
        LocalityOptions lo;
        lo.threads = options.threads;
        const int radius = s * l + options.radius_offset;
        if (options.radius_offset != 0) lo.radius = std::max(0, radius);
        const LocalityReport report = verify_locality(g, cfg, sample, lo);

        const PreparedRun prepared = prepare_run(g, paths, l, seed, true);
        const RunResult a1 = run_prepared(g, prepared, 0, false);
        const RunResult a2 = run_prepared(g, prepared, s, false);
        std::size_t differing = 0;
        for (std::size_t i = 0; i < g.edge_count(); ++i) differing += a1.flow.f_ab(i) != a2.flow.f_ab(i);

        LocalityRow row;
        row.instance = inst.id;
        row.n = g.node_count();
        row.l = l;
        row.s = s;
        row.seed = seed;
        row.radius = std::max(0, radius);
        row.edges_checked = report.checked;
        row.mismatches = report.mismatches.size();
        row.differing_f1_f2 = differing;
        row.skip_violations = skip_structure_violations(g, prepared, a1.flow, a2.flow, s).size();
        row.wall_ms = elapsed_ms(t0);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string locality_csv(const std::vector<LocalityRow>& rows, bool timing) {
  std::ostringstream out;
  out << "instance,n,l,s,seed,radius,edges_checked,mismatches,differing_f1_f2,skip_violations";
  if (timing) out << ",wall_ms";
  out << '\n';
  for (const LocalityRow& r : rows) {
    out << r.instance << ',' << r.n << ',' << r.l << ',' << r.s << ',' << r.seed << ','
        << r.radius << ',' << r.edges_checked << ',' << r.mismatches << ',' << r.differing_f1_f2
        << ',' << r.skip_violations;
    if (timing) out << ',' << ms_text(r.wall_ms);
    out << '\n';
  }
  return out.str();
}

}  // namespace localflow
