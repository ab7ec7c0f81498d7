// Command-line front end: load or generate a graph, pick edges to remove
// with one of the selection methods, and report how many distance-<=k vertex
// pairs the removal cuts.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "desmallworld/desmallworld.hpp"

namespace dsw = desmallworld;

namespace {

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"select edges whose removal cuts the most distance-<=k vertex pairs"};

  std::string graph_path;
  std::string generate_model;
  dsw::GeneratorConfig gen;
  gen.n = 1000;

  dsw::RunConfig run;
  std::string method_name = "sb";
  std::string compare_list;
  std::optional<int> batch_flag;
  std::string out_path;
  std::string edges_out_path;
  std::string scores_out_path;
  std::string trace_out_path;

  app.add_option("--graph", graph_path, "edge-list file to load ('#' comments, 'u v' lines)");
  app.add_option("--generate", generate_model, "generate a synthetic graph: ws or ks")
      ->check(CLI::IsMember({"ws", "ks"}));
  app.add_option("--n", gen.n, "vertices (ws) or grid side (ks)");
  app.add_option("--ws-base-degree", gen.ws_base_degree, "ring lattice degree (even)");
  app.add_option("--ws-rewire-prob", gen.ws_rewire_prob, "lattice edge rewiring probability");
  app.add_option("--ks-exponent", gen.ks_long_range_exponent, "long-range distance exponent");
  app.add_option("--ks-extra", gen.ks_long_range_edges_per_vertex,
                 "long-range edges per vertex");

  app.add_option("--k", run.k, "spreading parameter (>= 2)");
  app.add_option("--budget", run.budget, "number of edges to remove (L)");
  app.add_option("--method", method_name,
                 "bt|lb|sb|greedy-bt|greedy-lb|greedy-sb|omo|omw|oracle");
  app.add_option("--compare", compare_list, "comma-separated method list; one CSV row each");
  app.add_option("--batch", batch_flag, "edges per scoring pass (r); default L, greedy-* default 1");
  app.add_option("--lambda", run.lambda, "objective sharpness");
  app.add_option("--beta", run.beta, "gradient step size");
  app.add_option("--alpha", run.alpha, "candidate multiplier for omw");
  app.add_option("--max-iters", run.max_iters, "optimizer iteration cap");
  app.add_option("--tol", run.tol, "optimizer convergence threshold");
  app.add_option("--seed", gen.rng_seed, "generator seed");
  app.add_option("--out", out_path, "write the CSV report here as well as stdout");
  app.add_option("--edges-out", edges_out_path, "write removed edges, one 'u v' per line");
  app.add_option("--scores-out", scores_out_path,
                 "dump edge scores (edge_id,u,v,score) for bt/lb/sb");
  app.add_option("--trace-out", trace_out_path, "dump the optimizer trace CSV for omo/omw");
  app.add_option("--threads", run.threads, "worker threads for traversals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (graph_path.empty() == generate_model.empty())
      throw std::invalid_argument("exactly one of --graph and --generate is required");

    dsw::Graph graph;
    if (!graph_path.empty()) {
      std::ifstream in(graph_path);
      if (!in) throw std::runtime_error("cannot open graph file: " + graph_path);
      dsw::LoadResult loaded = dsw::load_edge_list(in);
      graph = std::move(loaded.graph);
      std::cerr << "loaded " << graph.vertex_count() << " vertices, " << graph.edge_count()
                << " edges (" << loaded.stats.data_lines << " data lines, "
                << loaded.stats.self_loops_dropped << " self-loops dropped, "
                << loaded.stats.duplicates_merged << " duplicates merged)\n";
    } else {
      gen.model = generate_model == "ws" ? dsw::GeneratorModel::watts_strogatz
                                         : dsw::GeneratorModel::kleinberg_grid;
      graph = dsw::generate(gen);
      std::cerr << "generated " << generate_model << " graph: " << graph.vertex_count()
                << " vertices, " << graph.edge_count() << " edges (seed " << gen.rng_seed
                << ")\n";
    }

    run.seed = gen.rng_seed;
    if (batch_flag) run.batch = static_cast<dsw::EdgeId>(*batch_flag);

    std::vector<dsw::Method> methods;
    if (!compare_list.empty()) {
      for (const std::string& name : split_csv(compare_list)) {
        const auto m = dsw::method_from_string(name);
        if (!m) throw std::invalid_argument("unknown method: " + name);
        methods.push_back(*m);
      }
      if (methods.empty()) throw std::invalid_argument("--compare needs at least one method");
    } else {
      const auto m = dsw::method_from_string(method_name);
      if (!m) throw std::invalid_argument("unknown method: " + method_name);
      methods.push_back(*m);
    }

    const std::vector<dsw::RunReport> reports = dsw::compare_methods(graph, run, methods);

    std::ostringstream csv;
    csv << dsw::kReportCsvHeader << '\n';
    for (const auto& r : reports) csv << dsw::report_csv_row(r) << '\n';
    std::cout << csv.str();
    for (const auto& r : reports)
      if (!r.warning.empty()) std::cerr << "warning (" << r.method << "): " << r.warning << '\n';

    if (reports.size() > 1) {
      std::vector<const dsw::RunReport*> ranked;
      for (const auto& r : reports) ranked.push_back(&r);
      std::sort(ranked.begin(), ranked.end(),
                [](const auto* a, const auto* b) { return a->delta > b->delta; });
      std::cout << "# ranking:";
      for (const auto* r : ranked) std::cout << ' ' << r->method << "(delta=" << r->delta << ")";
      std::cout << '\n';
    }

    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write report: " + out_path);
      out << csv.str();
    }
    if (!edges_out_path.empty()) {
      std::ofstream out(edges_out_path);
      if (!out) throw std::runtime_error("cannot write removed edges: " + edges_out_path);
      dsw::write_removed_edges(out, graph, reports.back().removed);
    }
    if (!scores_out_path.empty()) {
      const dsw::GraphView view(graph);
      dsw::EdgeScores scores;
      switch (methods.back()) {
        case dsw::Method::bt:
        case dsw::Method::greedy_bt:
          scores = dsw::global_betweenness(view, run.threads);
          break;
        case dsw::Method::lb:
        case dsw::Method::greedy_lb:
          scores = dsw::local_betweenness(view, run.k, run.threads);
          break;
        case dsw::Method::sb:
        case dsw::Method::greedy_sb:
          scores = dsw::short_betweenness(view, run.k, run.threads);
          break;
        default:
          throw std::invalid_argument("--scores-out applies to the betweenness methods only");
      }
      std::ofstream out(scores_out_path);
      if (!out) throw std::runtime_error("cannot write scores: " + scores_out_path);
      dsw::write_scores_csv(out, view, scores);
    }
    if (!trace_out_path.empty()) {
      if (reports.back().method != "omo" && reports.back().method != "omw")
        throw std::invalid_argument("--trace-out applies to omo/omw only");
      std::ofstream out(trace_out_path);
      if (!out) throw std::runtime_error("cannot write trace: " + trace_out_path);
      dsw::write_trace_csv(out, reports.back().trace);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
