#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lrdraw/io.hpp"
#include "lrdraw/lr_opt.hpp"
#include "lrdraw/outerplanar.hpp"
#include "lrdraw/star_strong.hpp"
#include "lrdraw/star_weak.hpp"
#include "lrdraw/verify.hpp"
#include "lrdraw/worst_case.hpp"

using namespace lrdraw;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Tree path_tree(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Node> nodes(n);
  for (int v = 0; v + 1 < n; ++v) {
    if (rng() & 1) nodes[v].right = v + 1;
    else nodes[v].left = v + 1;
  }
  return Tree(std::move(nodes), 0);
}

VerifyReport check_tree_drawing(const Tree& t, const GridDrawing& d, const std::string& kind) {
  if (kind == "lr") return is_lr_drawing(t, d);
  VerifyReport r = is_star_shaped(t, d);
  if (kind == "bell") r.merge(is_bell_like(t, d));
  else if (kind == "flat") r.merge(is_flat(t, d));
  else if (kind != "star") throw UsageError("unknown kind " + kind);
  return r;
}

std::pair<int, int> parse_edge(const std::string& s) {
  int u = 0, v = 0;
  char comma = 0;
  std::istringstream is(s);
  if (!(is >> u >> comma >> v) || comma != ',' || !is.eof()) throw UsageError("expected U,V, got " + s);
  return {u, v};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-width tree drawings and outerplanar graph drawings"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a tree");
  gen->set_help_flag("--help", "Print this help message and exit");
  std::string gen_kind;
  int gen_h = 0, gen_n = 0;
  std::uint64_t seed = 0;
  gen->add_option("--kind", gen_kind)->required()->check(
      CLI::IsMember({"complete", "random", "path", "lower-bound", "embedded"}));
  auto* gen_h_opt = gen->add_option("--h", gen_h, "height / level");
  auto* gen_n_opt = gen->add_option("--n", gen_n, "node count");
  gen_h_opt->excludes(gen_n_opt);
  gen->add_option("--seed", seed);

  // repseq
  auto* repseq = app.add_subcommand("repseq", "Representation sequence and minimum LR width");
  std::string tree_file;
  repseq->add_option("FILE", tree_file)->required();

  // width
  auto* width = app.add_subcommand("width", "Minimum LR-drawing width");
  bool brute = false;
  width->add_option("FILE", tree_file)->required();
  width->add_flag("--brute-force", brute, "cross-check against exhaustive search");

  // draw
  auto* draw = app.add_subcommand("draw", "Draw a tree");
  std::string algo, svg_out, json_out;
  bool do_verify = false;
  draw->add_option("FILE", tree_file)->required();
  draw->add_option("--algo", algo)->required()->check(
      CLI::IsMember({"lr-opt", "bell", "flat", "strong-flat", "strong-bell"}));
  draw->add_option("--svg", svg_out);
  draw->add_option("--json", json_out);
  draw->add_flag("--verify", do_verify);
  bool closing = false;
  draw->add_flag("--closing-edges", closing, "SVG debug overlay: dashed closing edges of every star polygon");

  // frontier
  auto* frontier = app.add_subcommand("frontier", "Minimum node counts per width by frontier enumeration");
  int max_n = 0;
  std::string csv_out, checkpoint;
  bool fit = false, progress = false;
  frontier->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
  frontier->add_option("--csv", csv_out)->required();
  frontier->add_option("--checkpoint", checkpoint, "resume from and append to this file");
  frontier->add_flag("--fit", fit, "append the fitted w = a*n^b + c");
  frontier->add_flag("--progress", progress, "per-size statistics on stderr");

  // dual
  auto* dual = app.add_subcommand("dual", "Dual tree of a maximal outerplanar graph");
  std::string graph_file, root_edge = "0,1";
  dual->add_option("GRAPH", graph_file)->required();
  dual->add_option("--root-edge", root_edge, "outer edge U,V with V clockwise after U");
  dual->add_option("--json", json_out);

  // outerdraw
  auto* outer = app.add_subcommand("outerdraw", "Draw an outerplanar graph");
  outer->add_option("GRAPH", graph_file)->required();
  outer->add_option("--svg", svg_out);
  outer->add_option("--json", json_out);
  outer->add_flag("--verify", do_verify);

  // verify
  auto* verify = app.add_subcommand("verify", "Check a drawing");
  std::string vkind, drawing_file;
  verify->add_option("--kind", vkind)->required()->check(
      CLI::IsMember({"lr", "star", "bell", "flat", "outerplanar"}));
  verify->add_option("INPUT", tree_file)->required();
  verify->add_option("DRAWING", drawing_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "lrdraw: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*gen) {
      Tree t;
      if (gen_kind == "complete" || gen_kind == "lower-bound") {
        if (!*gen_h_opt) throw UsageError("--kind " + gen_kind + " needs --h");
        t = gen_kind == "complete" ? complete_tree(gen_h) : lower_bound_tree(gen_h);
      } else {
        if (!*gen_n_opt) throw UsageError("--kind " + gen_kind + " needs --n");
        if (gen_n < 1) throw UsageError("--n must be >= 1");
        if (gen_kind == "random") t = random_tree(gen_n, seed);
        else if (gen_kind == "path") t = path_tree(gen_n, seed);
        else t = embedded_lower_bound_tree(gen_n, seed);
      }
      std::cout << serialize_tree(t) << "\n";
      return kExitOk;
    }

    if (*repseq) {
      RepSeq s = rep_sequence(parse_tree(read_input(tree_file)));
      std::cout << repseq_to_json(s) << "\n" << min_width(s) << "\n";
      return kExitOk;
    }

    if (*width) {
      Tree t = parse_tree(read_input(tree_file));
      int w = min_width(rep_sequence(t));
      if (brute) {
        if (t.internal_count() > kBruteForceMaxInternal)
          throw UsageError("--brute-force supports at most " + std::to_string(kBruteForceMaxInternal) +
                           " internal nodes");
        int b = brute_force_min_width(t);
        if (b != w) {
          std::cerr << "lrdraw: width mismatch: dp " << w << ", brute force " << b << "\n";
          return kExitVerify;
        }
      }
      std::cout << w << "\n";
      return kExitOk;
    }

    if (*draw) {
      Tree t = parse_tree(read_input(tree_file));
      GridDrawing d;
      std::string vk;
      if (algo == "lr-opt") {
        d = optimal_lr_drawing(t).drawing;
        vk = "lr";
      } else if (algo == "bell") {
        d = bell_like_drawing(t);
        vk = "bell";
      } else if (algo == "flat") {
        d = flat_drawing(t);
        vk = "flat";
      } else if (algo == "strong-flat") {
        d = strong_flat(t);
        vk = "flat";
      } else {
        d = strong_bell(t);
        vk = "bell";
      }
      std::vector<std::pair<Point, Point>> dashed;
      if (closing) {
        for (int v = 0; v < t.size(); ++v)
          for (bool left : {true, false}) {
            auto poly = star_polygon(t, v, left);
            if (!poly.empty()) dashed.emplace_back(d.points[poly.front()], d.points[poly.back()]);
          }
      }
      if (!svg_out.empty()) write_output(svg_out, render_svg(d, tree_edges(t), dashed));
      if (!json_out.empty()) write_output(json_out, drawing_to_json(d, 2) + "\n");
      if (svg_out.empty() && json_out.empty()) std::cout << drawing_to_json(d) << "\n";
      std::cerr << "width " << d.width() << " height " << d.height() << "\n";
      if (do_verify) {
        VerifyReport r = check_tree_drawing(t, d, vk);
        if (!r.pass()) {
          std::cerr << r.summary() << "\n";
          return kExitVerify;
        }
      }
      return kExitOk;
    }

    if (*frontier) {
      Frontier f;
      std::ofstream ck;
      if (!checkpoint.empty()) {
        if (std::filesystem::exists(checkpoint)) {
          std::ifstream in(checkpoint);
          f = Frontier::load(in);
          ck.open(checkpoint, std::ios::app);
        } else {
          ck.open(checkpoint);
          f.save(ck);
        }
        if (!ck) throw UsageError("cannot write " + checkpoint);
      }
      while (f.max_n() < max_n) {
        FrontierStats st = f.extend();
        if (ck.is_open()) {
          f.append_bucket(ck, st.n);
          ck.flush();
        }
        if (progress)
          std::cerr << "n=" << st.n << " frontier=" << st.frontier_size << " w=" << st.max_width << " "
                  << st.seconds << "s\n";
      }
      std::ostringstream os;
      os << "w,n\n";
      auto table = f.min_nodes_table();
      for (auto [w, n] : table) {
        if (n > max_n) break;
        os << w << "," << n << "\n";
      }
      if (fit) {
        PowerFit p = fit_power_law(table);
        os << "# fit a=" << p.a << " b=" << p.b << " c=" << p.c << "\n";
      }
      write_output(csv_out, os.str());
      return kExitOk;
    }

    if (*dual) {
      OuterplanarGraph g = parse_graph(read_input(graph_file));
      auto [u, v] = parse_edge(root_edge);
      DualMapping dm = dual_tree(g, u, v);
      std::cout << serialize_tree(dm.tree) << "\n";
      std::string js = gamma_to_json(dm.tree, dm.gamma, dm.u_star, dm.v_star, 2) + "\n";
      if (!json_out.empty()) write_output(json_out, js);
      else std::cout << js;
      return kExitOk;
    }

    if (*outer) {
      OuterplanarGraph g = parse_graph(read_input(graph_file));
      OuterplanarGraph full = g.is_maximal() ? g : triangulate(g);
      DualMapping dm = dual_tree(full);
      GridDrawing star = strong_flat(dm.tree);
      GridDrawing d = assemble_outerplanar_drawing(dm, star);
      if (!svg_out.empty()) write_output(svg_out, render_svg(d, g.edges()));
      if (!json_out.empty()) write_output(json_out, drawing_to_json(d, 2) + "\n");
      if (svg_out.empty() && json_out.empty()) std::cout << drawing_to_json(d) << "\n";
      std::cerr << "width " << d.width() << " height " << d.height() << "\n";
      if (do_verify) {
        VerifyReport r = is_outerplanar_drawing(g, d);
        if (!r.pass()) {
          std::cerr << r.summary() << "\n";
          return kExitVerify;
        }
      }
      return kExitOk;
    }

    if (*verify) {
      std::string input = read_input(tree_file);
      GridDrawing d = drawing_from_json(read_input(drawing_file));
      VerifyReport r = vkind == "outerplanar" ? is_outerplanar_drawing(parse_graph(input), d)
                                              : check_tree_drawing(parse_tree(input), d, vkind);
      std::cout << report_to_json(r, 2) << "\n";
      return r.pass() ? kExitOk : kExitVerify;
    }
  } catch (const std::exception& e) {
    // Parse errors, bad arguments and unreadable files all land here.
    std::cerr << "lrdraw: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
