#include "gaussoid/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussoid/ci.hpp"
#include "gaussoid/classify.hpp"
#include "gaussoid/construct.hpp"
#include "gaussoid/enumerate.hpp"
#include "gaussoid/graphs.hpp"
#include "gaussoid/qgraph.hpp"

namespace gaussoid::cli {

namespace {

using nlohmann::json;

// Outcome of a subcommand; thrown to carry non-zero exit codes.
struct Failure {
  int code;
};

json squares_json(const CIStructure& a) {
  json arr = json::array();
  for (const Square& s : a.squares()) arr.push_back(square_format(s));
  return arr;
}

json structure_json(const CIStructure& a) { return {{"n", a.n()}, {"squares", squares_json(a)}}; }

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// All-pairs scan; quadratic in the vertex count.
constexpr std::uint64_t kVerifyDegreeVertexLimit = 1u << 15;

struct Options {
  bool json = false;
  std::string file;
  std::string frame;
  bool belts = false;
  bool invert = false;
  int n = 0, k = 0, p = 0, q = 0;
  std::string spec;
  int workers = 0;
  bool unsafe = false;
  std::size_t limit = 0;
  std::string output;
  bool degree = false, complete = false, indep = false, clique = false, verify = false;
  std::uint64_t seed = 0;
  int trials = 1;
};

void err_out(const Options& o, std::ostream& out, const std::string& msg) {
  if (o.json) out << json{{"error", msg}}.dump() << '\n';
  else out << "error: " << msg << '\n';
}

int cmd_check(const Options& o, std::ostream& out) {
  const CIStructure a = read_ci_file(o.file);
  json j;
  std::string witness;
  bool ok;
  if (o.belts) {
    const auto bad = find_belt_violation(a);
    ok = !bad;
    if (bad) witness = "3-face " + face_format(*bad);
  } else {
    const auto bad = find_axiom_violation(a);
    ok = !bad;
    if (bad) witness = bad->describe();
  }
  if (o.json) {
    j = {{"gaussoid", ok}, {"checker", o.belts ? "belts" : "axioms"}};
    j["witness"] = ok ? json(nullptr) : json(witness);
    out << j.dump() << '\n';
  } else {
    out << "gaussoid: " << (ok ? "true" : "false") << '\n';
    if (!ok) out << "witness: " << witness << '\n';
  }
  return ok ? kOk : kDomainError;
}

int cmd_minor(const Options& o, std::ostream& out) {
  const CIStructure a = read_ci_file(o.file);
  const Face frame = parse_face_literal(o.frame, a.n());
  const CIStructure m = minor(a, frame);
  std::vector<int> labels;
  for (Mask s = frame.star; s; s &= s - 1) labels.push_back(std::countr_zero(s) + 1);
  if (o.json) {
    json j = structure_json(m);
    j["frame"] = face_format(frame);
    j["labels"] = labels;
    out << j.dump() << '\n';
    return kOk;
  }
  out << "# frame " << face_format(frame) << '\n';
  for (std::size_t t = 0; t < labels.size(); ++t) out << "# label " << t + 1 << " = " << labels[t] << '\n';
  out << to_text(m);
  return kOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const CIStructure d = dual(read_ci_file(o.file));
  if (o.json) out << structure_json(d).dump() << '\n';
  else out << to_text(d);
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const CIStructure a = read_ci_file(o.file);
  const auto r = class_profile(a);
  if (!r.profile) {
    if (o.json) out << json{{"gaussoid", false}, {"witness", "3-face " + face_format(*r.bad_frame)}}.dump() << '\n';
    else out << "gaussoid: false\nwitness: 3-face " << face_format(*r.bad_frame) << '\n';
    return kDomainError;
  }
  const ClassSpec support = r.profile->support();
  if (o.json) {
    json prof;
    for (MinorClass c : kAllClasses) prof[std::string(1, class_letter(c))] = (*r.profile)[c];
    out << json{{"gaussoid", true}, {"profile", prof}, {"class", support.str()}}.dump() << '\n';
    return kOk;
  }
  out << "profile:";
  for (MinorClass c : kAllClasses) out << ' ' << class_letter(c) << '=' << (*r.profile)[c];
  out << "\nclass: " << (support.str().empty() ? "-" : support.str()) << '\n';
  return kOk;
}

ClassSpec spec_arg(const Options& o) { return ClassSpec::parse(o.spec); }

int cmd_count(const Options& o, std::ostream& out) {
  SearchOptions so;
  so.workers = o.workers;
  so.unsafe = o.unsafe;
  const ClassSpec spec = spec_arg(o);
  const CountResult r = count_class(o.n, spec, so);
  if (o.json) {
    json j = {{"n", o.n}, {"spec", spec.str()}};
    if (r.count.fits_ulong_p()) j["count"] = r.count.get_ui();
    else j["count"] = r.count.get_str();
    j["nodes_explored"] = r.nodes_explored;
    j["wall_seconds"] = r.wall_seconds;
    out << j.dump() << '\n';
  } else {
    out << r.count.get_str() << '\n';
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  SearchOptions so;
  so.workers = o.workers;
  so.unsafe = o.unsafe;
  const auto all = enumerate_class(o.n, spec_arg(o), o.limit, so);
  if (o.json) {
    json arr = json::array();
    for (const auto& a : all) arr.push_back(squares_json(a));
    out << json{{"n", o.n}, {"spec", spec_arg(o).str()}, {"structures", arr}}.dump() << '\n';
    return kOk;
  }
  for (std::size_t t = 0; t < all.size(); ++t) out << "# structure " << t + 1 << '\n' << to_text(all[t]);
  return kOk;
}

int cmd_cnf(const Options& o, std::ostream& out) {
  const std::string text = to_cnf(o.n, spec_arg(o));
  const Cnf cnf = parse_dimacs(text);
  if (o.output == "-") {
    out << text;
    return kOk;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.output);
  f << text;
  if (o.json)
    out << json{{"file", o.output}, {"variables", cnf.variables}, {"clauses", cnf.clauses.size()}}.dump() << '\n';
  else
    out << "wrote " << o.output << ": " << cnf.variables << " variables, " << cnf.clauses.size() << " clauses\n";
  return kOk;
}

int cmd_qgraph(const Options& o, std::ostream& out) {
  const auto params = QGraphParams::make(o.n, o.k, o.p, o.q);
  json j = {{"n", o.n}, {"k", o.k}, {"p", o.p}, {"q", o.q}};
  int code = kOk;
  if (o.degree) {
    const auto d = degree_formula(params);
    if (o.json) j["degree"] = d;
    else out << d << '\n';
  } else if (o.complete) {
    const bool c = is_complete(params);
    if (o.json) j["complete"] = c;
    else out << "complete: " << (c ? "true" : "false") << '\n';
  } else if (o.verify) {
    if (params.vertex_count() > kVerifyDegreeVertexLimit)
      throw ResourceGuardError("brute-force degree check needs at most " + std::to_string(kVerifyDegreeVertexLimit) +
                               " vertices");
    const auto formula = degree_formula(params);
    const auto degs = brute_force_degrees(params, o.workers);
    const auto [lo, hi] = std::minmax_element(degs.begin(), degs.end());
    const bool match = *lo == formula && *hi == formula;
    if (o.json) {
      j["degree"] = formula;
      j["brute_force_min"] = *lo;
      j["brute_force_max"] = *hi;
      j["match"] = match;
    } else {
      out << "formula: " << formula << "\nbrute-force: min=" << *lo << " max=" << *hi << "\nmatch: "
          << (match ? "true" : "false") << '\n';
    }
    if (!match) code = kDomainError;
  } else if (o.indep) {
    const auto r = independent_set(params);
    json faces = json::array();
    for (const Face& f : r.faces) faces.push_back(face_format(f));
    if (o.json) {
      j["size"] = r.faces.size();
      j["colors_used"] = r.colors_used;
      j["max_degree"] = r.max_degree;
      j["guaranteed_size"] = r.guaranteed_size;
      j["faces"] = faces;
    } else {
      out << "# size " << r.faces.size() << ", colors " << r.colors_used << ", max degree " << r.max_degree
          << ", guaranteed " << r.guaranteed_size << '\n';
      for (const Face& f : r.faces) out << face_format(f) << '\n';
    }
  } else if (o.clique) {
    if (o.k != 3 || o.p != 3 || o.q != 2) throw std::invalid_argument("--clique is available for Q(n,3,3,2) only");
    const auto faces = clique_construction(o.n);
    const bool ok = is_clique(params, faces);
    if (o.json) {
      json arr = json::array();
      for (const Face& f : faces) arr.push_back(face_format(f));
      j["clique"] = arr;
      j["verified"] = ok;
    } else {
      out << "# size " << faces.size() << ", verified " << (ok ? "true" : "false") << '\n';
      for (const Face& f : faces) out << face_format(f) << '\n';
    }
    if (!ok) code = kDomainError;
  }
  if (o.json) out << j.dump() << '\n';
  return code;
}

int cmd_puzzle(const Options& o, std::ostream& out) {
  if (o.k < 3 || o.k > 4) throw std::invalid_argument("puzzle: --k must be 3 or 4");
  if (o.n < o.k || o.n > 12) throw std::invalid_argument("puzzle: --n must satisfy k <= n <= 12");
  if (o.trials < 1) throw std::invalid_argument("puzzle: --count must be positive");
  SearchOptions so;
  so.unsafe = true;
  const auto catalogue = enumerate_class(o.k, ClassSpec::all(), 0, so);
  const auto frames = independent_set(QGraphParams::make(o.n, o.k, 3, 2)).faces;
  std::mt19937_64 rng(o.seed);
  json arr = json::array();
  for (int t = 0; t < o.trials; ++t) {
    const auto asg = random_assignment(frames, catalogue, rng);
    const CIStructure g = puzzle_lift(asg, o.n);
    const bool ok = is_gaussoid(g) && is_gaussoid_axioms(g);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& piece : asg.pieces) h = fnv1a(to_text(piece), h);
    if (o.json) {
      json item = structure_json(g);
      item["gaussoid"] = ok;
      item["frames"] = frames.size();
      item["pieces_hash"] = hex64(h);
      arr.push_back(item);
    } else {
      if (o.trials > 1) out << "# trial " << t + 1 << '\n';
      out << to_text(g) << "gaussoid: " << (ok ? "true" : "false") << ", frames: " << frames.size()
          << ", pieces-hash: " << hex64(h) << '\n';
    }
    if (!ok) throw Failure{kDomainError};
  }
  if (o.json) out << json{{"n", o.n}, {"k", o.k}, {"seed", o.seed}, {"trials", arr}}.dump() << '\n';
  return kOk;
}

int cmd_graph_gaussoid(const Options& o, std::ostream& out) {
  if (o.invert) {
    const CIStructure a = read_ci_file(o.file);
    if (!is_gaussoid(a) || !is_ascending(a)) {
      err_out(o, out, "not an ascending gaussoid");
      return kDomainError;
    }
    const Graph g = graph_from_gaussoid(a);
    if (o.json) {
      json edges = json::array();
      for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
      out << json{{"n", g.n()}, {"edges", edges}}.dump() << '\n';
    } else {
      out << graph_to_text(g);
    }
    return kOk;
  }
  const CIStructure a = separation_gaussoid(read_graph_file(o.file));
  if (o.json) out << structure_json(a).dump() << '\n';
  else out << to_text(a);
  return kOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const BoundReport r = bound_report(o.n);
  if (o.json) {
    json j = {{"n", r.n},
              {"log2_lower", r.log2_lower},
              {"log2_upper", r.log2_upper},
              {"log2_total_subsets", r.log2_total_subsets}};
    if (r.log2_constructed) {
      j["log2_constructed"] = *r.log2_constructed;
      j["independent_set_size"] = r.independent_set_size;
      j["colors_used"] = r.colors_used;
      j["max_degree"] = r.max_degree;
      j["meets_lower"] = r.meets_lower;
    }
    out << j.dump() << '\n';
    return kOk;
  }
  auto num = [](double v) {
    std::ostringstream s;
    s.precision(10);
    s << v;
    return s.str();
  };
  out << "n: " << r.n << '\n';
  out << "log2 lower: " << num(r.log2_lower) << '\n';
  if (r.log2_constructed) {
    out << "log2 constructed: " << num(*r.log2_constructed) << " (independent set " << r.independent_set_size
        << ", colors " << r.colors_used << ", max degree " << r.max_degree << ")\n";
    out << "meets lower: " << (r.meets_lower ? "true" : "false") << '\n';
  }
  out << "log2 upper: " << num(r.log2_upper) << '\n';
  out << "log2 all subsets: " << num(r.log2_total_subsets) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussoids: checks, minors, class counts and constructions", "gaussoid"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json, "Emit JSON"); };

  auto* check = app.add_subcommand("check", "Gaussoid verdict with the first violation");
  check->add_option("file", o.file, "CI structure file")->required();
  check->add_flag("--belts", o.belts, "Use the knee/belt checker");
  add_json(check);

  auto* mnr = app.add_subcommand("minor", "Minor on a face, relabeled");
  mnr->add_option("file", o.file)->required();
  mnr->add_option("--frame", o.frame, "Face literal, e.g. *1** or 1,3|2")->required();
  add_json(mnr);

  auto* dl = app.add_subcommand("dual", "Complement every conditioning set");
  dl->add_option("file", o.file)->required();
  add_json(dl);

  auto* cls = app.add_subcommand("classify", "Letter profile of the 3-minors");
  cls->add_option("file", o.file)->required();
  add_json(cls);

  auto add_class_opts = [&](CLI::App* s) {
    s->add_option("--n", o.n)->required();
    s->add_option("--spec", o.spec, "Letters from ELUBF")->required();
    s->add_option("--workers", o.workers, "Worker threads (0: default)")->check(CLI::NonNegativeNumber);
    s->add_flag("--unsafe", o.unsafe, "Skip the resource guard");
    add_json(s);
  };
  auto* cnt = app.add_subcommand("count", "Count a letter-restricted class");
  add_class_opts(cnt);
  auto* enm = app.add_subcommand("enumerate", "List a letter-restricted class");
  add_class_opts(enm);
  enm->add_option("--limit", o.limit, "At most this many (0: all)");

  auto* cnf = app.add_subcommand("cnf", "DIMACS export");
  cnf->add_option("--n", o.n)->required();
  cnf->add_option("--spec", o.spec)->required();
  cnf->add_option("-o", o.output, "Output file, - for stdout")->required();
  add_json(cnf);

  auto* qg = app.add_subcommand("qgraph", "Facts about Q(n,k,p,q)");
  qg->add_option("--n", o.n)->required();
  qg->add_option("--k", o.k)->required();
  qg->add_option("--p", o.p)->required();
  qg->add_option("--q", o.q)->required();
  qg->add_option("--workers", o.workers)->check(CLI::NonNegativeNumber);
  auto* grp = qg->add_option_group("mode");
  grp->add_flag("--degree", o.degree);
  grp->add_flag("--complete", o.complete);
  grp->add_flag("--independent-set", o.indep);
  grp->add_flag("--clique", o.clique);
  grp->add_flag("--verify-degree", o.verify);
  grp->require_option(1);
  add_json(qg);

  auto* pz = app.add_subcommand("puzzle", "Random gaussoids by free puzzling");
  pz->add_option("--n", o.n)->required();
  pz->add_option("--k", o.k)->required();
  pz->add_option("--seed", o.seed)->required();
  pz->add_option("--count", o.trials);
  add_json(pz);

  auto* gg = app.add_subcommand("graph-gaussoid", "Separation gaussoid of a graph, or back");
  gg->add_option("file", o.file)->required();
  gg->add_flag("--invert", o.invert, "Read a CI structure and recover the graph");
  add_json(gg);

  auto* bd = app.add_subcommand("bounds", "Exponent bounds for the number of gaussoids");
  bd->add_option("--n", o.n)->required();
  add_json(bd);

  std::vector<const char*> argv{"gaussoid"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (mnr->parsed()) return cmd_minor(o, out);
    if (dl->parsed()) return cmd_dual(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
    if (cnt->parsed()) return cmd_count(o, out);
    if (enm->parsed()) return cmd_enumerate(o, out);
    if (cnf->parsed()) return cmd_cnf(o, out);
    if (qg->parsed()) return cmd_qgraph(o, out);
    if (pz->parsed()) return cmd_puzzle(o, out);
    if (gg->parsed()) return cmd_graph_gaussoid(o, out);
    if (bd->parsed()) return cmd_bounds(o, out);
  } catch (const Failure& f) {
    return f.code;
  } catch (const ResourceGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace gaussoid::cli
