#include "kcf/cli.hpp"

#include "kcf/constructions.hpp"
#include "kcf/family_io.hpp"
#include "kcf/proof_io.hpp"
#include "kcf/report_json.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace kcf::cli {

namespace {

// Bad flags, unreadable files and the like.
struct usage_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io {
  std::ostream &out;
  std::ostream &err;
  std::istream &in;
  std::string format;
};

std::string read_input(const io &ctx, const std::string &path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << ctx.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file)
    throw usage_failure("cannot read " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

family load_family(const io &ctx, const std::string &path) {
  auto parsed = parse_family(read_input(ctx, path));
  for (const auto &w : parsed.warnings)
    ctx.err << path << ": " << w << '\n';
  return parsed.fam;
}

chain_collection load_chains(const io &ctx, const std::string &path) {
  return parse_chain_collection(read_input(ctx, path));
}

int parse_int_token(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw usage_failure("bad integer '" + std::string(s) + "'");
  return v;
}

std::vector<int> parse_int_list(const std::string &s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    auto comma = s.find(',', pos);
    out.push_back(parse_int_token(std::string_view(s).substr(pos, comma == std::string::npos ? s.npos : comma - pos)));
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

std::pair<int, int> parse_range(const std::string &s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = parse_int_token(s);
    return {v, v};
  }
  return {parse_int_token(std::string_view(s).substr(0, dots)), parse_int_token(std::string_view(s).substr(dots + 2))};
}

std::string join_sets(std::span<const subset_mask> sets, const char *sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i)
    s += (i ? sep : "") + brace_set(sets[i]);
  return s;
}

std::string join_ints(const std::vector<int> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + std::to_string(v[i]);
  return s.empty() ? "-" : s;
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }
const char *pass_fail(bool b) { return b ? "pass" : "FAIL"; }

void print_json(const io &ctx, const json &j) { ctx.out << j.dump(2) << '\n'; }

std::vector<int> all_indices(const chain_collection &cc) {
  std::vector<int> v(cc.size());
  for (std::size_t i = 0; i < cc.size(); ++i)
    v[i] = static_cast<int>(i);
  return v;
}

// ---- subcommands ----

int cmd_check(const io &ctx, const std::string &path, int k, crossing_mode mode) {
  family f = load_family(ctx, path);
  auto w = find_pairwise_crossing_witness(f, k, mode);
  auto flags = family_predicates(f);
  auto uniform = uniform_bound_report(f, k);
  if (ctx.format == "json") {
    print_json(ctx, {{"n", f.n()},
                     {"size", f.size()},
                     {"k", k},
                     {"mode", to_string(mode)},
                     {"cross_free", !w},
                     {"witness", w ? to_json(*w) : json(nullptr)},
                     {"flags", to_json(flags)},
                     {"uniform", to_json(uniform)}});
  } else {
    ctx.out << "family: n=" << f.n() << ", " << f.size() << " sets\n";
    ctx.out << k << "-cross-free (" << to_string(mode) << "): " << yes_no(!w) << '\n';
    if (w)
      ctx.out << "witness: " << join_sets(w->sets()) << '\n';
    ctx.out << "chain: " << yes_no(flags.is_chain) << ", continuous chain: " << yes_no(flags.is_continuous_chain)
            << ", antichain: " << yes_no(flags.is_antichain) << ", intersecting: " << yes_no(flags.is_intersecting)
            << ", laminar: " << yes_no(flags.is_laminar) << '\n';
    if (uniform.is_uniform) {
      ctx.out << "uniform: level " << uniform.level;
      if (uniform.bound)
        ctx.out << ", bound " << uniform.bound->num << (uniform.bound->den != 1 ? "/" + std::to_string(uniform.bound->den) : "")
                << (uniform.violates ? " (exceeded)" : "");
      ctx.out << '\n';
    }
  }
  return w ? property_fails : ok;
}

int cmd_classify(const io &ctx, const std::vector<std::string> &inputs, int n) {
  subset_mask a = 0, b = 0;
  int ground = n;
  if (n > 0) {
    if (inputs.size() != 2)
      throw usage_failure("classify --n N expects exactly two sets");
    a = parse_set(inputs[0], n, 0);
    b = parse_set(inputs[1], n, 0);
  } else {
    if (inputs.size() != 1)
      throw usage_failure("classify expects one family file (or --n N with two sets)");
    family f = load_family(ctx, inputs[0]);
    if (f.size() != 2)
      throw usage_failure("classify needs a family of exactly two sets, got " + std::to_string(f.size()));
    a = f[0];
    b = f[1];
    ground = f.n();
  }
  const ground_set g(ground);
  auto rel = classify_pair(a, b, g);
  const bool weak = rel == pair_relation::crossing || rel == pair_relation::weak_only;
  if (ctx.format == "json")
    print_json(ctx, {{"n", ground},
                     {"a", set_json(a)},
                     {"b", set_json(b)},
                     {"relation", to_string(rel)},
                     {"weakly_crossing", weak}});
  else
    ctx.out << brace_set(a) << ' ' << brace_set(b) << ": " << to_string(rel) << '\n';
  return ok;
}

int cmd_decompose(const io &ctx, const std::string &path) {
  family f = load_family(ctx, path);
  auto d = dilworth_partition(f);
  if (ctx.format == "json") {
    print_json(ctx, to_json(d));
    return ok;
  }
  ctx.out << "chains: " << d.chains.size() << '\n';
  for (std::size_t i = 0; i < d.chains.size(); ++i)
    ctx.out << "chain " << i << ": " << join_sets(d.chains[i], " ⊂ ") << '\n';
  ctx.out << "max antichain: " << join_sets(d.max_antichain) << '\n';
  return ok;
}

void emit_family(const io &ctx, const family &f) {
  if (ctx.format == "json")
    print_json(ctx, to_json(f));
  else
    serialize_family(ctx.out, f);
}

int cmd_reduce(const io &ctx, const std::string &path, int k) {
  family f = load_family(ctx, path);
  try {
    auto r = weak_reduce(f, k);
    if (ctx.format == "json")
      print_json(ctx, to_json(r));
    else
      serialize_family(ctx.out, r.result);
    return ok;
  } catch (const not_cross_free_error &e) {
    if (ctx.format == "json")
      print_json(ctx, {{"error", e.what()}, {"witness", to_json(e.found())}});
    else
      ctx.out << e.what() << "\nwitness: " << join_sets(e.found().sets()) << '\n';
    return property_fails;
  }
}

int cmd_chains_extract(const io &ctx, const std::string &path, int h) {
  auto cc = extract_disjoint_chains(load_family(ctx, path), h);
  if (ctx.format == "json")
    print_json(ctx, to_json(cc));
  else
    ctx.out << serialize_chain_collection(cc);
  return ok;
}

int cmd_chains_select(const io &ctx, const std::string &path, int k, int multiplier, std::uint64_t seed,
                      const std::string &ordering_out) {
  auto cc = load_chains(ctx, path);
  auto r = select_conditioned_chains(cc, k, multiplier, seed);
  if (!ordering_out.empty()) {
    std::ofstream file(ordering_out);
    if (!file)
      throw usage_failure("cannot write " + ordering_out);
    file << serialize_ordering(r.order);
  }
  if (ctx.format == "json") {
    print_json(ctx, {{"selected", r.selected}, {"ordering", to_json(r.order)}, {"trace", to_json(r.trace)}});
    return ok;
  }
  const auto &t = r.trace;
  ctx.out << "I0: " << t.i0.size() << " chains\n";
  ctx.out << "I1: " << join_ints(t.i1) << '\n';
  ctx.out << "I2: " << join_ints(t.i2) << '\n';
  ctx.out << "I3: " << join_ints(t.i3) << '\n';
  ctx.out << "I: " << join_ints(t.selected) << '\n';
  ctx.out << "conflict graph: " << t.conflicts.vertices << " vertices, " << t.conflicts.edges << " edges\n";
  ctx.out << "ordering: " << serialize_ordering(r.order);
  return ok;
}

int cmd_chains_check(const io &ctx, const std::string &path, const std::string &ordering_path, int k, int multiplier,
                     const std::string &select) {
  auto cc = load_chains(ctx, path);
  auto ord = parse_ordering(read_input(ctx, ordering_path), cc.n());
  auto selected = select.empty() ? all_indices(cc) : parse_int_list(select);
  auto r = check_conditions(cc, selected, ord, k, multiplier);
  if (ctx.format == "json") {
    print_json(ctx, to_json(r));
  } else {
    ctx.out << "C1: " << pass_fail(r.c1) << "\nC2: " << pass_fail(r.c2) << "\nC3: " << pass_fail(r.c3)
            << "\nC4: " << pass_fail(r.c4) << " (threshold " << r.threshold << ")\n";
    for (const auto &v : r.violations) {
      ctx.out << v.condition << " violation: chain " << v.i;
      if (v.j >= 0)
        ctx.out << ", chain " << v.j;
      if (v.x >= 0)
        ctx.out << ", x=" << v.x;
      if (v.y >= 0)
        ctx.out << ", y=" << v.y;
      ctx.out << ": " << v.detail << '\n';
    }
  }
  return r.all_pass() ? ok : property_fails;
}

int cmd_tree_validate(const io &ctx, const std::string &tree_path, const std::string &chains_path,
                      const std::string &ordering_path, const std::string &allowed) {
  auto t = parse_tree(read_input(ctx, tree_path));
  auto cc = load_chains(ctx, chains_path);
  auto ord = parse_ordering(read_input(ctx, ordering_path), cc.n());
  std::vector<int> allowed_list;
  if (!allowed.empty())
    allowed_list = parse_int_list(allowed);
  auto r = validate_tree(t, cc, ord, allowed.empty() ? nullptr : &allowed_list);
  if (ctx.format == "json") {
    print_json(ctx, to_json(r));
  } else {
    for (const auto &m : r.malformed)
      ctx.out << "malformed: " << m << '\n';
    if (!r.is_malformed()) {
      ctx.out << "height: " << t.height() << ", vertices: " << t.size() << '\n';
      for (const char *name : {"perfect", "T1", "T2", "T3", "T4", "T5"})
        ctx.out << name << ": " << pass_fail(!r.failed(name)) << '\n';
      for (const char *name : {"T6", "T7", "T8"})
        ctx.out << name << " (derived, advisory): " << pass_fail(!r.failed(name)) << '\n';
      for (const auto &v : r.violations) {
        ctx.out << v.check << " violation at vertex " << v.node;
        if (v.other >= 0)
          ctx.out << " and vertex " << v.other;
        ctx.out << ": " << v.detail << '\n';
      }
    }
    ctx.out << "cross-support tree: " << yes_no(r.valid()) << '\n';
  }
  return r.valid() ? ok : property_fails;
}

int cmd_tree_extract(const io &ctx, const std::string &tree_path, const std::string &chains_path,
                     const std::string &ordering_path, int k) {
  auto t = parse_tree(read_input(ctx, tree_path));
  auto cc = load_chains(ctx, chains_path);
  auto ord = parse_ordering(read_input(ctx, ordering_path), cc.n());
  try {
    auto r = extract_k_crossing_from_tree(t, cc, ord, k);
    if (ctx.format == "json") {
      print_json(ctx, to_json(r));
    } else {
      for (std::size_t i = 0; i < r.sets.size(); ++i)
        ctx.out << "v" << i + 1 << " = vertex " << r.path[i] << ", φ = " << r.labels[i] << ", A = "
                << brace_set(r.sets[i]) << '\n';
    }
    return ok;
  } catch (const precondition_error &e) {
    if (ctx.format == "json")
      print_json(ctx, {{"error", e.what()}});
    else
      ctx.out << "precondition failed: " << e.what() << '\n';
    return property_fails;
  }
}

int cmd_tree_build(const io &ctx, const std::string &chains_path, const std::string &ordering_path, int k,
                   const build_options &opts, const std::string &select) {
  auto cc = load_chains(ctx, chains_path);
  auto ord = parse_ordering(read_input(ctx, ordering_path), cc.n());
  auto selected = select.empty() ? all_indices(cc) : parse_int_list(select);
  build_result r;
  try {
    r = build_tree(cc, selected, ord, k, opts);
  } catch (const precondition_error &e) {
    ctx.out << "precondition failed: " << e.what() << '\n';
    return property_fails;
  }
  if (ctx.format == "json") {
    json trees = json::array();
    for (const auto &[root, t] : r.trees)
      trees.push_back({{"root", root}, {"tree", to_json(t, cc)}});
    print_json(ctx, {{"found", r.best.has_value()},
                     {"tree", r.best ? to_json(*r.best, cc) : json(nullptr)},
                     {"trees", trees},
                     {"trace", to_json(r.trace)}});
  } else if (r.best) {
    ctx.out << serialize_tree(*r.best);
  } else {
    ctx.out << "no tree of height " << opts.height << " with " << opts.branching
            << " children per non-leaf vertex (" << r.trees.size() << " trees of that height)\n";
  }
  return r.best ? ok : property_fails;
}

int cmd_tree_prune(const io &ctx, const std::string &tree_path, const std::string &keep) {
  auto t = parse_tree(read_input(ctx, tree_path));
  cross_support_tree pruned = t;
  try {
    pruned = prune_root_children(t, parse_int_list(keep));
  } catch (const precondition_error &e) {
    throw usage_failure(e.what());
  }
  ctx.out << serialize_tree(pruned);
  return ok;
}

int cmd_search(const io &ctx, const std::string &path, const std::string &universe, int n, int k, crossing_mode mode,
               const search_options &opts, bool stats) {
  family f(ground_set(1));
  if (!path.empty() && !universe.empty())
    throw usage_failure("give either a family file or --universe, not both");
  if (!path.empty())
    f = load_family(ctx, path);
  else if (!universe.empty()) {
    if (n < 1)
      throw usage_failure("--universe needs --n");
    f = make_universe(parse_universe_kind(universe), n);
  } else
    throw usage_failure("search needs a family file or --universe");
  auto r = max_cross_free(f, k, mode, opts);
  if (stats)
    ctx.err << "nodes explored: " << r.nodes_explored << ", elapsed: " << r.elapsed.count() << " s\n";
  if (ctx.format == "json") {
    print_json(ctx, to_json(r));
  } else {
    ctx.out << "# largest " << k << "-cross-free (" << to_string(mode) << ") subfamily: " << r.size << " of "
            << f.size() << " sets" << (r.proven_optimal ? "" : " (search stopped early; not proven optimal)") << '\n';
    serialize_family(ctx.out, r.best);
  }
  return ok;
}

std::string cell(const std::optional<long> &v) { return v ? std::to_string(*v) : "N/A"; }
std::string cell(const std::optional<bool> &v) { return v ? (*v ? "true" : "false") : "N/A"; }

int cmd_table(const io &ctx, const std::string &n_range, const std::string &k_range, const std::string &universe,
              crossing_mode mode, const search_options &opts) {
  auto [n_lo, n_hi] = parse_range(n_range);
  auto [k_lo, k_hi] = parse_range(k_range);
  auto rows = bound_table(n_lo, n_hi, k_lo, k_hi, parse_universe_kind(universe), mode, opts);
  if (ctx.format == "json") {
    json j = json::array();
    for (const auto &row : rows)
      j.push_back(to_json(row));
    print_json(ctx, j);
    return ok;
  }
  const std::vector<std::string> head{"n", "k", "universe", "mode", "exact", "formula", "formula_name", "tight"};
  std::vector<std::vector<std::string>> cells;
  for (const auto &row : rows)
    cells.push_back({std::to_string(row.n), std::to_string(row.k), to_string(row.universe), to_string(row.mode),
                     std::to_string(row.exact) + (row.proven_optimal ? "" : "?"), cell(row.formula),
                     row.formula_name, cell(row.tight)});
  if (ctx.format == "csv") {
    for (std::size_t c = 0; c < head.size(); ++c)
      ctx.out << (c ? "," : "") << head[c];
    ctx.out << '\n';
    for (const auto &r : cells) {
      for (std::size_t c = 0; c < r.size(); ++c)
        ctx.out << (c ? "," : "") << r[c];
      ctx.out << '\n';
    }
    return ok;
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto &r : cells)
      width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string> &r) {
    for (std::size_t c = 0; c < r.size(); ++c)
      ctx.out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << (c < 4 || c == 6 ? std::left : std::right)
              << r[c];
    ctx.out << std::right << '\n';
  };
  line(head);
  for (const auto &r : cells)
    line(r);
  return ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in) {
  CLI::App app{"Verification and search toolkit for k-cross-free set families", "kcf"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand");

  std::string format;
  int k = 2;
  std::string mode_name = "strict";
  std::string path, chains_path, ordering_path, select, allowed, keep, universe, ordering_out;
  int n = 0, h = 2, multiplier = default_min_size_multiplier, threads = 0;
  std::uint64_t seed = 0, node_limit = 0;
  bool include_trivial = false, stats = false;
  std::string n_range, k_range = "2";
  std::vector<std::string> inputs;
  build_options bopts;

  auto format_opt = [&](CLI::App *sub, const std::string &fallback, std::vector<std::string> allowed_formats) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember(allowed_formats))
        ->default_str(fallback);
  };
  auto k_opt = [&](CLI::App *sub, bool required) {
    auto *o = sub->add_option("--k", k, "Number of pairwise crossing members to forbid")->check(CLI::Range(2, 64));
    if (required)
      o->required();
  };
  auto mode_opt = [&](CLI::App *sub) {
    sub->add_option("--mode", mode_name, "Crossing notion: strict (four regions) or weak (three regions)")
        ->check(CLI::IsMember({"strict", "weak"}))
        ->default_str("strict");
  };
  const std::vector<std::string> text_json{"text", "json"};

  auto *check = app.add_subcommand("check", "Test whether a family is k-cross-free; prints a witness if not");
  check->add_option("file", path, "Family file ('-' for standard input)")->required();
  k_opt(check, true);
  mode_opt(check);

  auto *classify = app.add_subcommand("classify", "Relation between two sets (a two-set family file, or --n N A B)");
  classify->add_option("inputs", inputs, "Family file, or two sets such as 0,1 and 1,2 when --n is given")->required();
  classify->add_option("--n", n, "Ground-set size for sets given on the command line")->check(CLI::Range(1, 64));

  auto *decompose = app.add_subcommand("decompose", "Minimum chain partition and a maximum antichain");
  decompose->add_option("file", path, "Family file ('-' for standard input)")->required();

  auto *gen = app.add_subcommand("gen", "Generate a family file");
  gen->require_subcommand(1);
  auto *gen_laminar = gen->add_subcommand("laminar", "Laminar family of size 2n");
  gen_laminar->add_option("--n", n, "Ground-set size")->required()->check(CLI::Range(1, 64));
  auto *gen_intervals = gen->add_subcommand("intervals", "All nonempty proper cyclic intervals");
  gen_intervals->add_option("--n", n, "Ground-set size")->required()->check(CLI::Range(1, 64));
  gen_intervals->add_flag("--include-trivial", include_trivial, "Also include the empty set and the ground set");
  auto *gen_random = gen->add_subcommand("random", "Seeded greedy k-cross-free family");
  gen_random->add_option("--n", n, "Ground-set size")->required()->check(CLI::Range(1, 12));
  k_opt(gen_random, true);
  mode_opt(gen_random);
  gen_random->add_option("--seed", seed, "Random seed")->required();

  auto *reduce = app.add_subcommand("reduce", "Weakly-k-cross-free subfamily of at least half the size");
  reduce->add_option("file", path, "Family file ('-' for standard input)")->required();
  k_opt(reduce, true);

  auto *chains = app.add_subcommand("chains", "Continuous chains and conditions C1-C4");
  chains->require_subcommand(1);
  auto *chains_extract = chains->add_subcommand("extract", "Greedy disjoint continuous chains of length h");
  chains_extract->add_option("file", path, "Family file ('-' for standard input)")->required();
  chains_extract->add_option("--length", h, "Chain length h: number of additions per chain")->check(CLI::Range(1, 64))->default_str("2");
  auto *chains_select = chains->add_subcommand("select", "Seeded selection of chains satisfying C1-C4");
  chains_select->add_option("file", path, "Chain file")->required();
  k_opt(chains_select, true);
  chains_select->add_option("--multiplier", multiplier, "C4 size factor: members need size >= multiplier*k*h")
      ->check(CLI::NonNegativeNumber)
      ->default_str("3");
  chains_select->add_option("--seed", seed, "Random seed")->required();
  chains_select->add_option("--ordering-out", ordering_out, "Also write the chosen ordering to this file");
  auto *chains_check = chains->add_subcommand("check", "Check C1-C4 for selected chains");
  chains_check->add_option("file", path, "Chain file")->required();
  chains_check->add_option("--ordering", ordering_path, "Ordering file")->required();
  k_opt(chains_check, true);
  chains_check->add_option("--multiplier", multiplier, "C4 size factor")->check(CLI::NonNegativeNumber)->default_str("3");
  chains_check->add_option("--select", select, "Comma-separated chain indices (default: all)");

  auto *tree = app.add_subcommand("tree", "Cross-support trees");
  tree->require_subcommand(1);
  auto *tree_validate = tree->add_subcommand("validate", "Check perfection and T1-T5, plus the derived T6-T8");
  tree_validate->add_option("file", path, "Tree JSON file")->required();
  tree_validate->add_option("--chains", chains_path, "Chain file")->required();
  tree_validate->add_option("--ordering", ordering_path, "Ordering file")->required();
  tree_validate->add_option("--allowed", allowed, "Comma-separated chain indices vertices may use");
  auto *tree_extract = tree->add_subcommand("extract", "k pairwise weakly crossing sets from a tree of height k");
  tree_extract->add_option("file", path, "Tree JSON file")->required();
  tree_extract->add_option("--chains", chains_path, "Chain file")->required();
  tree_extract->add_option("--ordering", ordering_path, "Ordering file")->required();
  k_opt(tree_extract, true);
  auto *tree_build = tree->add_subcommand("build", "Level-by-level tree construction");
  tree_build->add_option("--chains", chains_path, "Chain file")->required();
  tree_build->add_option("--ordering", ordering_path, "Ordering file")->required();
  k_opt(tree_build, true);
  tree_build->add_option("--height", bopts.height, "Tree height")->check(CLI::NonNegativeNumber)->default_str("1");
  tree_build->add_option("--branching", bopts.branching, "Required children per non-leaf vertex")
      ->check(CLI::NonNegativeNumber)
      ->default_str("1");
  tree_build->add_option("--pool-top", bopts.pool_top, "Candidates kept per element (default: h)")
      ->check(CLI::NonNegativeNumber);
  tree_build->add_option("--select", select, "Comma-separated chain indices (default: all)");
  auto *tree_prune = tree->add_subcommand("prune", "Keep only some root children");
  tree_prune->add_option("file", path, "Tree JSON file")->required();
  tree_prune->add_option("--keep", keep, "Comma-separated left-to-right positions of root children")->required();

  auto *search = app.add_subcommand("search", "Exact largest k-cross-free subfamily");
  search->add_option("file", path, "Universe family file");
  search->add_option("--universe", universe, "Built-in universe instead of a file")
      ->check(CLI::IsMember({"all", "intervals"}));
  search->add_option("--n", n, "Ground-set size for --universe")->check(CLI::Range(1, 12));
  k_opt(search, true);
  mode_opt(search);
  search->add_option("--threads", threads, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  search->add_option("--node-limit", node_limit, "Stop after this many search nodes (0: no limit)");
  search->add_flag("--stats", stats, "Report node count and time on the diagnostic stream");

  auto *table = app.add_subcommand("table", "Exact values against known bounds");
  table->add_option("--n", n_range, "Ground-set sizes, e.g. 3..5")->required();
  table->add_option("--k", k_range, "Values of k, e.g. 2 or 2..3")->default_str("2");
  table->add_option("--universe", universe, "all or intervals")->required()->check(CLI::IsMember({"all", "intervals"}));
  mode_opt(table);
  table->add_option("--threads", threads, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

  for (auto *sub : {check, classify, decompose, gen_laminar, gen_intervals, gen_random, reduce, chains_extract,
                    chains_select, chains_check, tree_validate, tree_extract, tree_build, tree_prune, search})
    format_opt(sub, "text", text_json);
  format_opt(table, "csv", {"text", "csv", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    auto *target = &app;
    for (auto *sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front(); sub;
         sub = sub->get_subcommands().empty() ? nullptr : sub->get_subcommands().front())
      target = sub;
    out << target->help();
    return ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n' << app.help();
    return usage_error;
  }

  if (format.empty())
    format = table->parsed() ? "csv" : "text";
  io ctx{out, err, in, format};
  try {
    const crossing_mode mode = parse_crossing_mode(mode_name);
    if (check->parsed())
      return cmd_check(ctx, path, k, mode);
    if (classify->parsed())
      return cmd_classify(ctx, inputs, n);
    if (decompose->parsed())
      return cmd_decompose(ctx, path);
    if (gen_laminar->parsed())
      return emit_family(ctx, gen_laminar_max(n)), ok;
    if (gen_intervals->parsed())
      return emit_family(ctx, gen_cyclic_intervals(n, include_trivial)), ok;
    if (gen_random->parsed())
      return emit_family(ctx, gen_random_cross_free(n, k, mode, seed)), ok;
    if (reduce->parsed())
      return cmd_reduce(ctx, path, k);
    if (chains_extract->parsed())
      return cmd_chains_extract(ctx, path, h);
    if (chains_select->parsed())
      return cmd_chains_select(ctx, path, k, multiplier, seed, ordering_out);
    if (chains_check->parsed())
      return cmd_chains_check(ctx, path, ordering_path, k, multiplier, select);
    if (tree_validate->parsed())
      return cmd_tree_validate(ctx, path, chains_path, ordering_path, allowed);
    if (tree_extract->parsed())
      return cmd_tree_extract(ctx, path, chains_path, ordering_path, k);
    if (tree_build->parsed())
      return cmd_tree_build(ctx, chains_path, ordering_path, k, bopts, select);
    if (tree_prune->parsed())
      return cmd_tree_prune(ctx, path, keep);
    if (search->parsed())
      return cmd_search(ctx, path, universe, n, k, mode, {threads, node_limit}, stats);
    if (table->parsed())
      return cmd_table(ctx, n_range, k_range, universe, mode, {threads, 0});
  } catch (const parse_error &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const usage_failure &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return property_fails;
  }
  err << app.help();
  return usage_error;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  return run(args, out, err, std::cin);
}

} // namespace kcf::cli
