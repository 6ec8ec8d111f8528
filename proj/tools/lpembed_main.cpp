/**
 * lpembed -- bounded-range and snowflake dimension reduction for l_p spaces.
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 *
 * Single executable front-end. Exit codes: 0 success, 2 parameter-domain
 * error, 3 guard violation.
 */

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lpembed/common.hpp"
#include "lpembed/dataset.hpp"
#include "lpembed/distortion.hpp"
#include "lpembed/kcenter.hpp"
#include "lpembed/metric_tools.hpp"
#include "lpembed/point_set.hpp"
#include "lpembed/range_embedding.hpp"
#include "lpembed/sine_embedding.hpp"
#include "lpembed/snowflake.hpp"
#include "lpembed/stable.hpp"

namespace {

using namespace lpembed;

void print_value(double x) { std::printf("%.12g\n", x); }

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  if (out.empty()) throw param_error("empty list: " + csv);
  return out;
}

int stable_selftest() {
  struct Check {
    const char* name;
    double got, want, tol;
  };
  const double pi = 3.14159265358979323846;
  std::vector<Check> checks = {
      {"density(1,0) = 1/pi", stable::density(1, 0), 1.0 / pi, 1e-8},
      {"density(2,0) = 1/(2 sqrt(pi))", stable::density(2, 0),
       1.0 / (2.0 * std::sqrt(pi)), 1e-8},
      {"density(1,2) cauchy", stable::density(1, 2), 1.0 / (pi * 5.0), 1e-8},
      {"abs_moment(2,1) = 2/sqrt(pi)", stable::abs_moment(2, 1),
       2.0 / std::sqrt(pi), 1e-6},
      {"abs_moment(1,0.5) = sqrt(2)", stable::abs_moment(1, 0.5), std::sqrt(2.0),
       1e-6},
      {"cosine_moment(2) = 1/2", stable::cosine_moment(2), 0.5, 1e-10},
      {"cosine_moment(1) = 2/pi", stable::cosine_moment(1), 2.0 / pi, 1e-10},
      {"H(2,2,1) = (1-e^-4)/2", stable::transform_h(2, 2, 1),
       (1.0 - std::exp(-4.0)) / 2.0, 1e-10},
  };
  bool ok = true;
  for (const auto& c : checks) {
    const bool pass = std::fabs(c.got - c.want) <= c.tol;
    std::printf("%-32s got=%.12g want=%.12g  %s\n", c.name, c.got, c.want,
                pass ? "ok" : "FAIL");
    ok = ok && pass;
  }
  return ok ? 0 : 1;
}

struct GlobalOpts {
  std::uint64_t seed = 0;
  int threads = 1;
  bool json = false;
};

std::map<std::string, std::string> base_params(const GlobalOpts& g) {
  return {{"seed", std::to_string(g.seed)},
          {"threads", std::to_string(g.threads)}};
}

void write_report_outputs(const bench::DistortionReport& rep,
                          const std::string& out_path, bool json) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw param_error("cannot open report output: " + out_path);
    rep.write_csv(out);
    if (json) {
      std::ofstream js(out_path + ".json");
      js << rep.summary_json() << "\n";
    }
  }
  if (json && out_path.empty()) std::cout << rep.summary_json() << "\n";
  rep.write_summary(std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  // Reproduction line for report headers: rerunning it regenerates the
  // artifact byte for byte.
  std::string command_line;
  for (int i = 0; i < argc; ++i) {
    if (i) command_line += ' ';
    command_line += argv[i];
  }

  CLI::App app{"dimension-reduction embeddings for l_p spaces, 1 <= p <= 2"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "default seed for subcommands");
  app.add_option("--threads", g.threads, "worker threads for pair evaluation");
  app.add_flag("--json", g.json, "emit machine-readable summaries");

  // ---- stable ----
  auto* c_stable = app.add_subcommand("stable", "p-stable distribution queries");
  std::string stable_what = "density";
  double st_p = 2.0, st_q = 1.0, st_a = 1.0, st_x = 0.0, st_eps = 0.25;
  std::size_t st_count = 1;
  std::uint64_t st_seed = 0;
  bool st_seed_set = false;
  c_stable->add_option("what", stable_what,
                       "density|sample|moment|H|Pq|Q|Qa|selftest");
  c_stable->add_option("--p", st_p, "stability index in [1,2]");
  c_stable->add_option("--q", st_q, "moment exponent");
  c_stable->add_option("--a", st_a, "transform argument");
  c_stable->add_option("--x", st_x, "density evaluation point");
  c_stable->add_option("--eps", st_eps, "accuracy parameter for Qa");
  c_stable->add_option("--count", st_count, "sample count");
  c_stable->add_option("--sampler-seed", st_seed, "sampler seed")
      ->each([&](const std::string&) { st_seed_set = true; });

  // ---- gen ----
  auto* c_gen = app.add_subcommand("gen", "generate a dataset");
  std::string gen_kind = "gaussian", gen_out;
  data::DatasetSpec gen_spec;
  bool gen_seed_set = false;
  c_gen->add_option("--kind", gen_kind, "gaussian|grid|clustered|low-doubling-curve")
      ->required();
  c_gen->add_option("--n", gen_spec.n, "point count")->required();
  c_gen->add_option("--m", gen_spec.m, "ambient dimension")->required();
  c_gen->add_option("--p", gen_spec.p, "norm for scale calibration");
  c_gen->add_option("--range-lo", gen_spec.range_lo, "target band low edge");
  c_gen->add_option("--range-hi", gen_spec.range_hi, "target band high edge");
  c_gen->add_option("--clusters", gen_spec.clusters, "cluster count");
  c_gen->add_option("--gen-seed", gen_spec.seed, "dataset seed")
      ->each([&](const std::string&) { gen_seed_set = true; });
  c_gen->add_option("--output", gen_out, "output matrix file")->required();

  // ---- embed-threshold ----
  auto* c_thr = app.add_subcommand("embed-threshold", "sine threshold embedding");
  double th_p = 2.0, th_q = 2.0, th_s = 10.0;
  std::size_t th_k = 64;
  std::uint64_t th_seed = 0;
  bool th_seed_set = false;
  std::string th_in, th_out;
  c_thr->add_option("--p", th_p)->required();
  c_thr->add_option("--q", th_q)->required();
  c_thr->add_option("--s", th_s, "threshold > 1")->required();
  c_thr->add_option("--k", th_k, "output dimension")->required();
  c_thr->add_option("--embed-seed", th_seed, "embedding seed")
      ->each([&](const std::string&) { th_seed_set = true; });
  c_thr->add_option("--input", th_in)->required();
  c_thr->add_option("--output", th_out)->required();

  // ---- embed-range ----
  auto* c_rng = app.add_subcommand("embed-range", "bounded-range embedding");
  range::RangeParams rp;
  std::string rng_method = "min", rng_in, rng_out;
  std::uint64_t rng_seed = 0;
  bool rng_seed_set = false;
  c_rng->add_option("--p", rp.p)->required();
  c_rng->add_option("--q", rp.q)->required();
  c_rng->add_option("--R", rp.R, "range width > 1")->required();
  c_rng->add_option("--eps", rp.eps, "accuracy in (0, 1/2)")->required();
  c_rng->add_option("--n", rp.n, "point budget for log n")->required();
  c_rng->add_option("--method", rng_method, "hoeffding|bennett|min");
  c_rng->add_option("--cdim", rp.c_dim, "leading constant in k");
  c_rng->add_option("--embed-seed", rng_seed, "embedding seed")
      ->each([&](const std::string&) { rng_seed_set = true; });
  c_rng->add_option("--input", rng_in)->required();
  c_rng->add_option("--output", rng_out)->required();

  // ---- dims ----
  auto* c_dims = app.add_subcommand("dims", "dimension table for a parameter grid");
  double dm_p = 2.0, dm_q = 1.0, dm_eps = 0.3;
  std::size_t dm_n = 1000;
  std::string dm_Rs = "2,4,8,16";
  c_dims->add_option("--p", dm_p);
  c_dims->add_option("--q", dm_q);
  c_dims->add_option("--eps", dm_eps);
  c_dims->add_option("--n", dm_n);
  c_dims->add_option("--R", dm_Rs, "comma-separated R values");

  // ---- net / hierarchy / ddim / padded ----
  auto* c_net = app.add_subcommand("net", "greedy gamma-net");
  double net_gamma = 1.0, net_p = 1.0;
  std::string net_in, net_out;
  c_net->add_option("--gamma", net_gamma)->required();
  c_net->add_option("--p", net_p);
  c_net->add_option("--input", net_in)->required();
  c_net->add_option("--output", net_out, "center/assignment CSV");

  auto* c_hier = app.add_subcommand("hierarchy", "nested 2^i-nets");
  double hier_p = 1.0;
  std::string hier_in;
  c_hier->add_option("--p", hier_p);
  c_hier->add_option("--input", hier_in)->required();

  auto* c_ddim = app.add_subcommand("ddim", "doubling dimension estimate");
  double dd_p = 1.0;
  std::string dd_in;
  c_ddim->add_option("--p", dd_p);
  c_ddim->add_option("--input", dd_in)->required();

  auto* c_pad = app.add_subcommand("padded", "padded random partitions");
  double pad_delta = 1.0, pad_eps = 0.2, pad_p = 1.0;
  std::string pad_in, pad_out;
  std::uint64_t pad_seed = 0;
  bool pad_seed_set = false;
  c_pad->add_option("--delta", pad_delta, "cluster diameter bound")->required();
  c_pad->add_option("--eps", pad_eps, "padding failure budget");
  c_pad->add_option("--p", pad_p);
  c_pad->add_option("--part-seed", pad_seed, "partition seed")
      ->each([&](const std::string&) { pad_seed_set = true; });
  c_pad->add_option("--input", pad_in)->required();
  c_pad->add_option("--out", pad_out, "partition file")->required();

  // ---- embed-intrinsic ----
  auto* c_int = app.add_subcommand("embed-intrinsic",
                                   "doubling-dimension-bound embedding");
  double in_s = 20.0, in_q = 1.0, in_eps = 0.3, in_p = 1.0;
  std::size_t in_kprime = 64;
  std::uint64_t in_seed = 0;
  bool in_seed_set = false;
  std::string in_in, in_out;
  c_int->add_option("--s", in_s, "threshold > 1")->required();
  c_int->add_option("--q", in_q)->required();
  c_int->add_option("--p", in_p);
  c_int->add_option("--eps", in_eps);
  c_int->add_option("--kprime", in_kprime, "per-partition dimension");
  c_int->add_option("--embed-seed", in_seed, "embedding seed")
      ->each([&](const std::string&) { in_seed_set = true; });
  c_int->add_option("--input", in_in)->required();
  c_int->add_option("--output", in_out)->required();

  // ---- embed-snowflake ----
  auto* c_snow = app.add_subcommand("embed-snowflake", "alpha-snowflake embedding");
  double sn_alpha = 0.5, sn_eps = 0.2, sn_p = 1.0, sn_q = 1.0;
  std::size_t sn_kprime = 32;
  std::uint64_t sn_seed = 0;
  bool sn_seed_set = false;
  std::string sn_in, sn_out, sn_report;
  c_snow->add_option("--alpha", sn_alpha, "snowflake exponent in (0,1)")->required();
  c_snow->add_option("--eps", sn_eps, "accuracy in (0, 1/4)");
  c_snow->add_option("--p", sn_p);
  c_snow->add_option("--q", sn_q);
  c_snow->add_option("--kprime", sn_kprime, "per-scale dimension");
  c_snow->add_option("--embed-seed", sn_seed, "embedding seed")
      ->each([&](const std::string&) { sn_seed_set = true; });
  c_snow->add_option("--input", sn_in)->required();
  c_snow->add_option("--output", sn_out)->required();
  c_snow->add_option("--report", sn_report, "per-pair ratio CSV (t, t^a, emb, ratio)");

  // ---- kcenter ----
  auto* c_kc = app.add_subcommand("kcenter", "k-center clustering");
  std::size_t kc_k = 2, kc_kprime = 64;
  double kc_eps = 0.3, kc_p = 1.0;
  std::string kc_method = "pipeline", kc_in;
  std::uint64_t kc_seed = 0;
  bool kc_seed_set = false, kc_compare = false;
  c_kc->add_option("--k", kc_k)->required();
  c_kc->add_option("--eps", kc_eps);
  c_kc->add_option("--p", kc_p);
  c_kc->add_option("--method", kc_method, "pipeline|gonzalez|brute");
  c_kc->add_option("--kprime", kc_kprime, "snowflake per-scale dimension");
  c_kc->add_option("--cluster-seed", kc_seed, "pipeline seed")
      ->each([&](const std::string&) { kc_seed_set = true; });
  c_kc->add_flag("--compare", kc_compare, "also run the brute-force oracle");
  c_kc->add_option("--input", kc_in)->required();

  // ---- report ----
  auto* c_rep = app.add_subcommand("report", "distortion report for an embedding");
  std::string rep_embedding = "identity", rep_in, rep_out;
  double rep_p = 1.0, rep_q = 1.0, rep_eps = 0.3;
  double rep_s = 20.0, rep_R = 4.0, rep_alpha = 0.5;
  double rep_band_lo = 1.0, rep_band_hi = 0.0;
  std::size_t rep_k = 64, rep_n = 0, rep_pairs = 100000, rep_kprime = 32;
  std::string rep_method = "min";
  double rep_cdim = 1.0;
  std::uint64_t rep_seed = 0;
  bool rep_seed_set = false;
  c_rep->add_option("--embedding", rep_embedding,
                    "identity|threshold|range|snowflake|intrinsic");
  c_rep->add_option("--p", rep_p);
  c_rep->add_option("--q", rep_q);
  c_rep->add_option("--eps", rep_eps, "band half-width / embedding accuracy");
  c_rep->add_option("--s", rep_s, "threshold for threshold/intrinsic");
  c_rep->add_option("--R", rep_R, "range width for range embedding");
  c_rep->add_option("--alpha", rep_alpha, "snowflake exponent");
  c_rep->add_option("--k", rep_k, "threshold embedding dimension");
  c_rep->add_option("--kprime", rep_kprime, "per-scale / per-partition dimension");
  c_rep->add_option("--n", rep_n, "point budget override for range k");
  c_rep->add_option("--method", rep_method, "dimension method for range");
  c_rep->add_option("--cdim", rep_cdim, "leading constant for range k");
  c_rep->add_option("--pairs", rep_pairs, "pair budget");
  c_rep->add_option("--band-lo", rep_band_lo, "in-range band low edge");
  c_rep->add_option("--band-hi", rep_band_hi, "in-range band high edge (0 = none)");
  c_rep->add_option("--report-seed", rep_seed, "embedding/pair seed")
      ->each([&](const std::string&) { rep_seed_set = true; });
  c_rep->add_option("--input", rep_in)->required();
  c_rep->add_option("--out", rep_out, "CSV output path");

  // Global flags (--seed/--threads/--json) may appear after the subcommand.
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  set_worker_threads(g.threads);

  try {
    if (*c_stable) {
      if (!st_seed_set) st_seed = g.seed;
      if (stable_what == "selftest") return stable_selftest();
      if (stable_what == "density") {
        print_value(stable::density(st_p, st_x));
      } else if (stable_what == "sample") {
        stable::StableSampler sampler(st_p, st_seed);
        for (double x : sampler.sample(st_count)) print_value(x);
      } else if (stable_what == "moment") {
        print_value(stable::abs_moment(st_p, st_q));
      } else if (stable_what == "H") {
        print_value(stable::transform_h(st_p, st_q, st_a));
      } else if (stable_what == "Pq") {
        print_value(stable::cosine_moment(st_q));
      } else if (stable_what == "Q") {
        print_value(stable::moment_q(st_p, st_q));
      } else if (stable_what == "Qa") {
        print_value(stable::moment_qa(st_p, st_a, st_eps));
      } else {
        throw param_error("unknown stable quantity: " + stable_what);
      }
      return 0;
    }

    if (*c_gen) {
      gen_spec.kind = data::parse_kind(gen_kind);
      if (!gen_seed_set) gen_spec.seed = g.seed;
      const PointSet ps = data::generate_dataset(gen_spec);
      save_matrix(gen_out, ps.data(), ps.size(), ps.dim());
      std::cerr << "wrote " << ps.size() << " x " << ps.dim() << " points\n";
      return 0;
    }

    if (*c_thr) {
      if (!th_seed_set) th_seed = g.seed;
      const PointSet ps = load_points(th_in, th_p);
      const auto emb =
          sine::make_threshold_embedding(th_p, th_q, th_s, th_k, ps.dim(), th_seed);
      std::vector<double> out(ps.size() * th_k);
      parallel_for(ps.size(), [&](std::size_t i) {
        emb.embed_point(ps.point(i), ps.dim(), out.data() + i * th_k);
      });
      save_matrix(th_out, out, ps.size(), th_k);
      return 0;
    }

    if (*c_rng) {
      if (!rng_seed_set) rng_seed = g.seed;
      rp.method = range::parse_dim_method(rng_method);
      const PointSet ps = load_points(rng_in, rp.p);
      if (rp.n < 2) rp.n = ps.size();
      const auto emb = range::make_range_embedding(rp, ps.dim(), rng_seed);
      std::vector<double> out(ps.size() * emb.out_dim());
      parallel_for(ps.size(), [&](std::size_t i) {
        emb.embed(ps.point(i), ps.dim(), out.data() + i * emb.out_dim());
      });
      save_matrix(rng_out, out, ps.size(), emb.out_dim());
      std::cerr << "s=" << emb.threshold() << " k=" << emb.out_dim() << "\n";
      return 0;
    }

    if (*c_dims) {
      std::printf("R,s,k_hoeffding,k_bennett,k_min\n");
      for (double R : parse_list(dm_Rs)) {
        const double s = range::select_threshold(dm_p, dm_q, R, dm_eps);
        const auto kh = range::required_dimension(dm_n, dm_eps, s, dm_p, dm_q,
                                                  range::DimMethod::hoeffding);
        const auto km = range::required_dimension(dm_n, dm_eps, s, dm_p, dm_q,
                                                  range::DimMethod::min_of);
        std::string kb = "";
        if (2 * dm_q > dm_p)
          kb = std::to_string(range::required_dimension(
              dm_n, dm_eps, s, dm_p, dm_q, range::DimMethod::bennett));
        std::printf("%.12g,%.12g,%zu,%s,%zu\n", R, s, kh, kb.c_str(), km);
      }
      return 0;
    }

    if (*c_net) {
      const PointSet ps = load_points(net_in, net_p);
      const auto net = metric::build_net(ps, net_gamma);
      std::ostringstream body;
      body << "point,center\n";
      for (std::size_t i = 0; i < ps.size(); ++i)
        body << i << ',' << net.assign[i] << "\n";
      if (net_out.empty()) {
        std::cout << body.str();
      } else {
        std::ofstream out(net_out);
        out << body.str();
      }
      std::cerr << "net size " << net.centers.size() << " at gamma " << net_gamma
                << "\n";
      return 0;
    }

    if (*c_hier) {
      const PointSet ps = load_points(hier_in, hier_p);
      const auto h = metric::build_hierarchy(ps);
      std::printf("level,scale,size\n");
      for (std::size_t l = 0; l < h.height(); ++l)
        std::printf("%zu,%.12g,%zu\n", l, h.scales[l], h.levels[l].size());
      return 0;
    }

    if (*c_ddim) {
      const PointSet ps = load_points(dd_in, dd_p);
      print_value(metric::estimate_doubling_dimension(ps));
      return 0;
    }

    if (*c_pad) {
      if (!pad_seed_set) pad_seed = g.seed;
      const PointSet ps = load_points(pad_in, pad_p);
      const auto fam = metric::padded_decomposition(ps, pad_delta, pad_eps, pad_seed);
      std::ofstream out(pad_out);
      if (!out) throw param_error("cannot open output: " + pad_out);
      for (std::size_t x = 0; x < ps.size(); ++x) {
        for (std::size_t t = 0; t < fam.partitions(); ++t) {
          if (t) out << ' ';
          out << t << ':' << fam.cluster_of[t][x];
        }
        out << "\n";
      }
      std::cerr << "partitions=" << fam.partitions() << " c0=" << fam.c0
                << " min_padding=" << fam.min_padding() << "\n";
      return 0;
    }

    if (*c_int) {
      if (!in_seed_set) in_seed = g.seed;
      const PointSet ps = load_points(in_in, in_p);
      const auto emb =
          metric::intrinsic_embedding(ps, in_s, in_q, in_eps, in_kprime, in_seed);
      save_matrix(in_out, emb.images, emb.n, emb.out_dim);
      std::cerr << "ddim=" << emb.ddim << " partitions=" << emb.partitions
                << " out_dim=" << emb.out_dim << "\n";
      return 0;
    }

    if (*c_snow) {
      if (!sn_seed_set) sn_seed = g.seed;
      const PointSet ps = load_points(sn_in, sn_p);
      const auto emb =
          snow::build_snowflake(ps, sn_alpha, sn_eps, sn_q, sn_kprime, sn_seed);
      std::vector<double> out(ps.size() * emb.out_dim());
      parallel_for(ps.size(), [&](std::size_t i) {
        const auto img = emb.embed(ps.point(i), ps.dim());
        std::copy(img.begin(), img.end(), out.begin() + i * emb.out_dim());
      });
      save_matrix(sn_out, out, ps.size(), emb.out_dim());
      std::cerr << "groups=" << emb.groups() << " scales=" << emb.scale_indices().size()
                << " M=" << emb.normalization() << " out_dim=" << emb.out_dim() << "\n";
      if (!sn_report.empty()) {
        bench::DistortionOptions opts;
        opts.q = sn_q;
        opts.eps_band = sn_eps;
        opts.seed = sn_seed;
        opts.range_lo = 0.0;
        auto params = base_params(g);
        params["command"] = command_line;
        params["embedding"] = "snowflake";
        params["alpha"] = std::to_string(sn_alpha);
        params["embed_seed"] = std::to_string(sn_seed);
        const auto rep = bench::distortion_report(
            ps,
            [&](const double* x, std::size_t dim) { return emb.embed(x, dim); },
            [&](double t) { return std::pow(t, sn_alpha); }, opts, params);
        std::ofstream rf(sn_report);
        if (!rf) throw param_error("cannot open report: " + sn_report);
        rep.write_csv(rf);
        rep.write_summary(std::cerr);
      }
      return 0;
    }

    if (*c_kc) {
      if (!kc_seed_set) kc_seed = g.seed;
      const PointSet ps = load_points(kc_in, kc_p);
      cluster::KCenterSolution sol;
      if (kc_method == "gonzalez")
        sol = cluster::gonzalez(ps, kc_k);
      else if (kc_method == "brute")
        sol = cluster::brute_force_kcenter(ps, kc_k);
      else if (kc_method == "pipeline")
        sol = cluster::kcenter_pipeline(ps, kc_k, kc_eps, kc_seed, kc_kprime);
      else
        throw param_error("unknown kcenter method: " + kc_method);

      if (g.json) {
        nlohmann::json j;
        j["method"] = kc_method;
        j["radius"] = sol.radius;
        j["centers"] = sol.centers;
        if (kc_compare) {
          const auto oracle = cluster::brute_force_kcenter(ps, kc_k);
          j["brute_radius"] = oracle.radius;
          j["ratio"] = sol.radius / oracle.radius;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::printf("method,radius,centers\n%s,%.12g,\"", kc_method.c_str(),
                    sol.radius);
        for (std::size_t i = 0; i < sol.centers.size(); ++i)
          std::printf("%s%zu", i ? " " : "", sol.centers[i]);
        std::printf("\"\n");
        if (kc_compare) {
          const auto oracle = cluster::brute_force_kcenter(ps, kc_k);
          std::printf("oracle,%.12g,ratio,%.12g\n", oracle.radius,
                      sol.radius / oracle.radius);
        }
      }
      return 0;
    }

    if (*c_rep) {
      if (!rep_seed_set) rep_seed = g.seed;
      const PointSet ps = load_points(rep_in, rep_p);
      bench::DistortionOptions opts;
      opts.q = rep_q;
      opts.eps_band = rep_eps;
      opts.pair_budget = rep_pairs;
      opts.seed = rep_seed;
      opts.range_lo = rep_band_lo;
      opts.range_hi = rep_band_hi;

      auto params = base_params(g);
      params["command"] = command_line;
      params["embedding"] = rep_embedding;
      params["p"] = std::to_string(rep_p);
      params["q"] = std::to_string(rep_q);
      params["input"] = rep_in;
      params["report_seed"] = std::to_string(rep_seed);

      bench::PointMap fmap;
      bench::Reference ref = [](double t) { return t; };
      if (rep_embedding == "identity") {
        opts.q = rep_p;
        fmap = [&ps](const double* x, std::size_t dim) {
          return std::vector<double>(x, x + dim);
        };
      } else if (rep_embedding == "threshold") {
        params["s"] = std::to_string(rep_s);
        params["k"] = std::to_string(rep_k);
        auto emb = std::make_shared<sine::ThresholdEmbedding>(
            sine::make_threshold_embedding(rep_p, rep_q, rep_s, rep_k, ps.dim(),
                                           rep_seed));
        fmap = [emb](const double* x, std::size_t dim) {
          std::vector<double> out(emb->out_dim());
          emb->embed_point(x, dim, out.data());
          return out;
        };
        // Ratios are against the transform curve the embedding realizes.
        const double p2 = rep_p, q2 = rep_q, s2 = rep_s;
        ref = [p2, q2, s2](double t) {
          return std::pow(sine::expected_transform(p2, q2, s2, t), 1.0 / q2);
        };
      } else if (rep_embedding == "range") {
        range::RangeParams p2;
        p2.p = rep_p;
        p2.q = rep_q;
        p2.R = rep_R;
        p2.eps = rep_eps;
        p2.n = rep_n ? rep_n : ps.size();
        p2.method = range::parse_dim_method(rep_method);
        p2.c_dim = rep_cdim;
        auto emb = std::make_shared<range::RangeEmbedding>(
            range::make_range_embedding(p2, ps.dim(), rep_seed));
        params["R"] = std::to_string(rep_R);
        params["s"] = std::to_string(emb->threshold());
        params["k"] = std::to_string(emb->out_dim());
        params["cdim"] = std::to_string(rep_cdim);
        if (rep_band_hi <= 0.0) opts.range_hi = rep_R;
        fmap = [emb](const double* x, std::size_t dim) { return emb->embed({x, x + dim}); };
      } else if (rep_embedding == "snowflake") {
        auto emb = std::make_shared<snow::SnowflakeEmbedding>(snow::build_snowflake(
            ps, rep_alpha, std::min(rep_eps, 0.249), rep_q, rep_kprime, rep_seed));
        params["alpha"] = std::to_string(rep_alpha);
        params["M"] = std::to_string(emb->normalization());
        opts.range_lo = 0.0;
        fmap = [emb](const double* x, std::size_t dim) { return emb->embed(x, dim); };
        ref = [rep_alpha](double t) { return std::pow(t, rep_alpha); };
      } else if (rep_embedding == "intrinsic") {
        auto emb = std::make_shared<metric::IntrinsicEmbedding>(
            metric::intrinsic_embedding(ps, rep_s, rep_q, rep_eps, rep_kprime,
                                        rep_seed));
        params["s"] = std::to_string(rep_s);
        params["partitions"] = std::to_string(emb->partitions);
        // Images are precomputed per input point; closure keys on address.
        const double* base = ps.point(0);
        const std::size_t dim = ps.dim();
        fmap = [emb, base, dim](const double* x, std::size_t) {
          const std::size_t idx = static_cast<std::size_t>(x - base) / dim;
          return std::vector<double>(emb->image(idx), emb->image(idx) + emb->out_dim);
        };
        const double p2 = rep_p, q2 = rep_q, s2 = rep_s;
        ref = [p2, q2, s2](double t) {
          return std::pow(sine::expected_transform(p2, q2, s2, t), 1.0 / q2);
        };
      } else {
        throw param_error("unknown embedding kind: " + rep_embedding);
      }

      const auto rep = bench::distortion_report(ps, fmap, ref, opts, params);
      write_report_outputs(rep, rep_out, g.json);
      return 0;
    }
  } catch (const param_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const guard_error& e) {
    std::cerr << "guard violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
