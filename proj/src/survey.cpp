#include "symsos/survey.hpp"

#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace symsos {

unsigned long long sample_seed(unsigned long long master, int index) {
  // splitmix64 step on master + index
  unsigned long long z = master + 0x9e3779b97f4a7c15ULL * (static_cast<unsigned long long>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SurveyReport rank_survey(const SparsePoly& f, const GroupRep& rep, const SurveyOptions& opts) {
  if (opts.samples < 0) throw std::invalid_argument("negative sample count");
  SurveyReport report;
  report.instance = render_poly(f);
  CertifyContext ctx = prepare(f, rep);
  SdpProblem base = make_sdp(ctx.spec);
  SdpSolution feas = solve(base, opts.sdp);
  if (feas.status == SdpStatus::Infeasible) throw std::domain_error("polynomial is not SOS");
  if (feas.status == SdpStatus::Indeterminate)
    throw std::domain_error("could not establish that the polynomial is SOS: " + feas.message);

  report.records.resize(opts.samples);
  auto run = [&](int i) {
    SurveyRecord rec;
    rec.sample = i;
    rec.seed = sample_seed(opts.seed, i);
    std::mt19937_64 rng(rec.seed);
    std::normal_distribution<double> normal;
    std::vector<Eigen::MatrixXd> C;
    for (const auto& e : ctx.spec.layout.entries) {
      Eigen::MatrixXd M(e.m, e.m);
      for (int r = 0; r < e.m; ++r)
        for (int c = 0; c <= r; ++c) M(r, c) = M(c, r) = normal(rng);
      C.push_back(std::move(M));
    }
    SdpProblem p = base;
    p.objective = block_objective(ctx.spec, C);
    SdpSolution s = solve(p, opts.sdp);
    rec.status = s.status;
    rec.params = s.params;
    if (s.status == SdpStatus::Optimal || s.status == SdpStatus::Feasible) {
      auto values = ctx.spec.block_values(s.params);
      rec.block_ranks = block_ranks(values, opts.rank_tol);
      rec.total_rank = 0;
      for (std::size_t b = 0; b < values.size(); ++b)
        rec.total_rank += ctx.spec.layout.entries[b].n * rec.block_ranks[b];
    }
    report.records[i] = std::move(rec);
  };

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || opts.samples <= 1) {
    for (int i = 0; i < opts.samples; ++i) run(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (int i; (i = next.fetch_add(1)) < opts.samples;) run(i);
      });
    for (auto& th : pool) th.join();
  }
  for (const auto& r : report.records) ++report.histogram[r.total_rank];
  return report;
}

std::string histogram_csv(const SurveyReport& r) {
  std::ostringstream os;
  os << "rank,count\n";
  for (const auto& [rank, count] : r.histogram) os << rank << ',' << count << '\n';
  return os.str();
}

std::string survey_json(const SurveyReport& r, int indent) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["instance"] = r.instance;
  nlohmann::ordered_json hist = nlohmann::ordered_json::array();
  for (const auto& [rank, count] : r.histogram) hist.push_back({{"rank", rank}, {"count", count}});
  j["histogram"] = hist;
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const auto& rec : r.records) {
    nlohmann::ordered_json o;
    o["sample"] = rec.sample;
    o["seed"] = rec.seed;
    o["status"] = to_string(rec.status);
    o["params"] = std::vector<double>(rec.params.data(), rec.params.data() + rec.params.size());
    o["block_ranks"] = rec.block_ranks;
    o["total_rank"] = rec.total_rank;
    recs.push_back(o);
  }
  j["records"] = recs;
  return j.dump(indent);
}

}  // namespace symsos
