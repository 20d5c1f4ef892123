// spatialvote: exact solvers for optimal candidate positioning in spatial
// elections. Subcommands: solve, eval, gen, reduce-fls, bench.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spatialvote/errors.hpp"
#include "spatialvote/instance_io.hpp"
#include "spatialvote/multi_candidate.hpp"
#include "spatialvote/oracles.hpp"
#include "spatialvote/report.hpp"
#include "spatialvote/single_opponent.hpp"

using namespace spatialvote;

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
      .count();
}

SolveResult run_method(const ElectionInstance& inst, const std::string& method, int threads) {
  if (method == "auto") {
    if (inst.m() == 1) return solve_single(inst);
    if (inst.p == 2) return solve_multi(inst, MultiMethod::kAuto, threads);
    throw MethodError("no exact method for several incumbents with p > 2; use approxm");
  }
  if (method == "sweep2d") return solve_single(inst, SingleMethod::kSweep2d);
  if (method == "regions") return solve_single(inst, SingleMethod::kRegions);
  if (method == "balls1") return solve_multi(inst, MultiMethod::kBalls1, threads);
  if (method == "balls3") return solve_multi(inst, MultiMethod::kBalls3, threads);
  if (method == "approx2") return two_approx(inst);
  if (method == "approxm") return m_approx(inst, threads);
  if (method == "brute") return brute_single(inst);
  throw MethodError("unknown method " + method);
}

// Rank objective: collect candidate optima and keep the (rank, nu) maximum.
// With one incumbent the candidate set covers every full-dimensional cone of
// the tangent arrangement; otherwise it is the nu-witness plus all voter
// locations, a documented heuristic.
SolveResult run_rank(const ElectionInstance& inst, const std::string& method, int threads) {
  std::vector<RatPoint> candidates;
  bool exhaustive = false;
  const bool single_exhaustive =
      inst.m() == 1 && (method == "auto" || method == "sweep2d" || method == "regions" ||
                        method == "brute");
  if (single_exhaustive) {
    CentralArrangement arr = single_arrangement(inst);
    if (!arr.normals.empty()) {
      EnumerateOptions opts;
      opts.collect_regions = true;
      const bool sweep = method == "sweep2d" || (method == "auto" && inst.d == 2);
      EnumerateResult er = sweep ? radial_sweep_2d(arr, opts) : enumerate_regions(arr, opts);
      for (const auto& reg : er.regions) {
        std::vector<RatVec> offsets;
        for (size_t k = 0; k < arr.normals.size(); ++k) {
          if (reg.signs[k] > 0)
            offsets.push_back(sub(inst.voters[arr.voters[k]], inst.candidates[0]));
        }
        candidates.push_back(
            add(inst.candidates[0], scale_into_balls(offsets, inst.p, reg.direction)));
      }
      exhaustive = true;
    }
    candidates.push_back(inst.candidates[0]);
  } else {
    SolveResult base = run_method(inst, method, threads);
    if (!base.witness.empty()) candidates.push_back(std::move(base.witness));
    auto regions = critical_regions(inst);
    for (const auto& b : regions) {
      if (b.radius_pow.sign() > 0) candidates.push_back(b.center);
    }
    candidates.push_back(inst.candidates[0]);
  }

  long long best_rank = -1, best_nu = -1;
  RatPoint best_point;
  for (auto& pt : candidates) {
    long long nu = eval_nu(inst, pt);
    long long rank = eval_rank(inst, pt);
    if (rank > best_rank || (rank == best_rank && nu > best_nu)) {
      best_rank = rank;
      best_nu = nu;
      best_point = std::move(pt);
    }
  }
  return finalize_result(inst, std::move(best_point), best_nu, exhaustive);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

GenMode mode_from_name(const std::string& name) {
  if (name == "uniform") return GenMode::kUniform;
  if (name == "bipolar") return GenMode::kBipolar;
  if (name == "clustered") return GenMode::kClustered;
  throw MethodError("unknown generator mode " + name);
}

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) write_text_file(out_path, text);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact candidate-positioning solvers for spatial elections"};
  app.require_subcommand(1);

  // solve
  std::string solve_path, solve_method = "auto", solve_objective = "nu", solve_out;
  int solve_threads = 1;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("instance", solve_path, "Instance JSON file")->required();
  solve->add_option("--method", solve_method, "auto|sweep2d|regions|balls1|balls3|approx2|approxm|brute");
  solve->add_option("--objective", solve_objective)->check(CLI::IsMember({"nu", "rank"}));
  solve->add_option("--out", solve_out, "Also write the report here");
  solve->add_option("--threads", solve_threads)->check(CLI::PositiveNumber);

  // eval
  std::string eval_path, eval_point;
  auto* eval = app.add_subcommand("eval", "Evaluate one point exactly");
  eval->add_option("instance", eval_path, "Instance JSON file")->required();
  eval->add_option("--point", eval_point, "Comma-separated rational coordinates")->required();

  // gen
  GenSpec spec;
  std::string gen_mode = "uniform", gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--d", spec.d);
  gen->add_option("--n", spec.n);
  gen->add_option("--m", spec.m);
  gen->add_option("--p", spec.p);
  gen->add_option("--range", spec.range);
  gen->add_option("--mode", gen_mode, "uniform|bipolar|clustered");
  gen->add_option("--seed", spec.seed);
  gen->add_option("--out", gen_out, "Write the instance here");

  // reduce-fls
  std::string fls_path, fls_out;
  auto* fls = app.add_subcommand("reduce-fls", "Embed a +-1 matrix threshold question");
  fls->add_option("matrix", fls_path, "Matrix JSON file")->required();
  fls->add_option("--out", fls_out, "Write the reduced instance here");

  // bench
  std::string bench_methods = "sweep2d,regions", bench_sizes = "50,100,200";
  std::string bench_mode = "uniform", bench_out;
  int bench_d = 2, bench_p = 2, bench_m = 1, bench_seeds = 3;
  long bench_range = 1000;
  auto* bench = app.add_subcommand("bench", "Time methods over generated instances (CSV)");
  bench->add_option("--methods", bench_methods, "Comma-separated method names");
  bench->add_option("--n", bench_sizes, "Comma-separated voter counts");
  bench->add_option("--d", bench_d);
  bench->add_option("--p", bench_p);
  bench->add_option("--m", bench_m);
  bench->add_option("--range", bench_range);
  bench->add_option("--mode", bench_mode, "uniform|bipolar|clustered");
  bench->add_option("--seeds", bench_seeds, "Seeds 1..count per configuration");
  bench->add_option("--out", bench_out, "Write the CSV here");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    ElectionInstance inst = load_instance(solve_path);
    RunReport report;
    report.method = solve_method;
    report.objective = solve_objective;
    report.d = inst.d;
    report.p = inst.p;
    report.n = static_cast<long long>(inst.n());
    report.m = static_cast<long long>(inst.m());
    report.threads = solve_threads;
    report.warnings = instance_warnings(inst);
    auto start = std::chrono::steady_clock::now();
    report.result = solve_objective == "rank" ? run_rank(inst, solve_method, solve_threads)
                                              : run_method(inst, solve_method, solve_threads);
    report.wall_ms = elapsed_ms(start);
    emit(report_to_json(report), solve_out);
    return 0;
  }

  if (eval->parsed()) {
    ElectionInstance inst = load_instance(eval_path);
    auto pt = parse_point(eval_point);
    if (!pt) throw ParseError("bad point syntax: " + eval_point);
    if (static_cast<int>(pt->size()) != inst.d)
      throw ParseError("point dimension does not match the instance");
    std::cout << eval_to_json(inst, *pt);
    return 0;
  }

  if (gen->parsed()) {
    spec.mode = mode_from_name(gen_mode);
    if (const char* env = std::getenv("SPATIALVOTE_SEED"))
      spec.seed = std::strtoull(env, nullptr, 10);
    ElectionInstance inst = gen_instance(spec);
    emit(instance_to_json(inst), gen_out);
    return 0;
  }

  if (fls->parsed()) {
    FlsInput in = load_fls(fls_path);
    auto [inst, k] = reduce_fls(in.rows, in.k);
    emit(fls_instance_to_json(inst, k), fls_out);
    return 0;
  }

  if (bench->parsed()) {
    std::ostringstream csv;
    csv << "method,d,n,m,p,seed,nu,millis\n";
    for (const auto& method : split_csv(bench_methods)) {
      for (const auto& size : split_csv(bench_sizes)) {
        for (int s = 1; s <= bench_seeds; ++s) {
          GenSpec gs;
          gs.d = bench_d;
          gs.n = std::stoi(size);
          gs.m = bench_m;
          gs.p = bench_p;
          gs.range = bench_range;
          gs.mode = mode_from_name(bench_mode);
          gs.seed = static_cast<unsigned long long>(s);
          ElectionInstance inst = gen_instance(gs);
          auto start = std::chrono::steady_clock::now();
          SolveResult res = run_method(inst, method, 1);
          double ms = elapsed_ms(start);
          csv << method << ',' << bench_d << ',' << gs.n << ',' << bench_m << ','
              << bench_p << ',' << s << ',' << res.nu << ',' << ms << "\n";
        }
      }
    }
    emit(csv.str(), bench_out);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const MethodError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
