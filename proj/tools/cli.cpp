#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dichroma/brooks.hpp"
#include "dichroma/defective.hpp"
#include "dichroma/dicolour.hpp"
#include "dichroma/extremal.hpp"
#include "dichroma/heroes.hpp"
#include "dichroma/io.hpp"
#include "dichroma/local.hpp"

namespace dichroma::cli {

namespace {

using nlohmann::json;

struct Report {
  json body = json::object();
  int code = 0;
};

[[noreturn]] void usage(const std::string& message) { throw Error(Errc::UsageError, message); }

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidInput, "cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + hex;
}

std::string header_keyword(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string first;
    if (words >> first && first[0] != '#') return first;
  }
  return "";
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::string cleaned;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    cleaned += line + ' ';
  }
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error(Errc::SyntaxError, what + ": expected an integer, got '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

void certify(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::Internal, "certificate rejected: " + what);
}

json certificate_json(const DecompositionCertificate& c) {
  json j;
  j["kind"] = cert_kind_name(c.kind);
  j["labels"] = c.labels;
  j["arcs"] = c.arcs;
  j["joint"] = c.joint;
  if (!c.a_side.empty()) j["a_side"] = c.a_side;
  json kids = json::array();
  for (const auto& k : c.children) kids.push_back(certificate_json(k));
  j["children"] = kids;
  return j;
}

// Options shared by all commands.
struct Globals {
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 1;
  bool json = false;
};

struct Input {
  std::string text;
  std::string digest;
};

Input load(const std::string& path) {
  Input in{read_input(path), ""};
  in.digest = digest(in.text);
  return in;
}

Report cmd_chi(const Input& in, Budget& budget) {
  Digraph d = parse_digraph(in.text);
  auto r = exact_dichromatic(d, &budget);
  certify(verify_dicolouring(d, r.colouring).valid && r.colouring.k == r.chi, "dicolouring");
  Report rep;
  rep.body["chi"] = r.chi;
  rep.body["colouring"] = r.colouring.colour;
  rep.body["lower_bound"] = dichromatic_lower_bound(d);
  return rep;
}

Report cmd_verify(const Input& in, const std::string& colours_path, std::optional<int> d) {
  auto colours = parse_int_list(read_input(colours_path), colours_path);
  Report rep;
  std::string kind = header_keyword(in.text);
  if (kind == "multigraph") {
    if (!d) usage("verify on a multigraph needs --d");
    Multigraph g = parse_multigraph(in.text);
    EdgeColouring c = EdgeColouring::from(colours);
    auto check = verify_edge_colouring(g, c, *d);
    rep.body["valid"] = check.valid;
    if (check.witness)
      rep.body["overload"] = {{"vertex", check.witness->vertex},
                              {"colour", check.witness->colour},
                              {"count", check.witness->count}};
    rep.code = check.valid ? 0 : 1;
    return rep;
  }
  Digraph g = parse_digraph(in.text);
  auto check = verify_dicolouring(g, Dicolouring::from(colours));
  rep.body["valid"] = check.valid;
  if (!check.valid) rep.body["cycle"] = check.cycle;
  rep.code = check.valid ? 0 : 1;
  return rep;
}

Report cmd_brooks(const Input& in) {
  Digraph d = parse_digraph(in.text);
  auto v = classify_brooks(d);
  auto bc = brooks_colour(d);
  certify(verify_dicolouring(d, bc.colouring).valid, "dicolouring");
  json comps = json::array();
  for (const auto& c : v.components) {
    std::vector<int> used;
    for (int x : c.vertices) used.push_back(bc.colouring.colour[x]);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    int bound = c.k + (c.tag != BrooksException::None ? 1 : 0);
    certify(static_cast<int>(used.size()) <= std::max(bound, 1), "component colour bound");
    comps.push_back({{"vertices", c.vertices},
                     {"delta_max", c.k},
                     {"exception", brooks_exception_name(c.tag)},
                     {"colours", used.size()}});
  }
  Report rep;
  rep.body["components"] = comps;
  rep.body["delta_max"] = v.delta_max;
  rep.body["tight"] = v.tight;
  rep.body["colours"] = bc.colouring.k;
  rep.body["colouring"] = bc.colouring.colour;
  rep.body["exact_fallback"] = bc.used_exact_fallback;
  return rep;
}

Report cmd_lambda(const Input& in) {
  Digraph d = parse_digraph(in.text);
  auto p = lambda_profile(d, true);
  Report rep;
  rep.body["lambda"] = p.lambda;
  for (int u = 0; u < d.n(); ++u)
    for (int v = 0; v < d.n(); ++v)
      if (u != v && p.pair[u][v] == p.lambda) {
        const auto& cut = p.cut[u][v];
        bool sides = std::find(cut.begin(), cut.end(), u) != cut.end() && std::find(cut.begin(), cut.end(), v) == cut.end();
        certify(sides && dicut_size(d, cut) == p.lambda, "minimum dicut");
        rep.body["pair"] = {u, v};
        rep.body["cut"] = cut;
        return rep;
      }
  return rep;
}

Report cmd_extremal(const Input& in, int k, Budget& budget) {
  Digraph d = parse_digraph(in.text);
  auto r = recognize_k_extremal(d, k, &budget);
  Report rep;
  rep.body["extremal"] = r.extremal;
  rep.body["k"] = k;
  if (r.extremal) {
    auto arcs = d.arcs();
    std::sort(arcs.begin(), arcs.end());
    certify(r.certificate && replay_certificate(*r.certificate) == arcs, "decomposition replay");
    rep.body["certificate"] = certificate_json(*r.certificate);
  } else {
    rep.body["reason"] = r.reason;
    rep.code = 1;
  }
  return rep;
}

std::map<std::string, int> parse_params(const std::vector<std::string>& extras) {
  std::map<std::string, int> params;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    std::string key = extras[i];
    if (key.rfind("--", 0) != 0) usage("unexpected argument '" + key + "'");
    key.erase(0, 2);
    std::string value;
    auto eq = key.find('=');
    if (eq != std::string::npos) {
      value = key.substr(eq + 1);
      key.erase(eq);
    } else {
      if (i + 1 >= extras.size()) usage("parameter --" + key + " needs a value");
      value = extras[++i];
    }
    auto list = parse_int_list(value, "--" + key);
    if (list.size() != 1) usage("parameter --" + key + " takes one integer");
    params[key] = list[0];
  }
  return params;
}

Report cmd_gen(const std::string& family, const std::vector<std::string>& extras) {
  auto g = generate(family, parse_params(extras));
  Report rep;
  rep.body["family"] = g.family;
  rep.body["params"] = g.params;
  rep.body["n"] = g.digraph.n();
  rep.body["m"] = g.digraph.m();
  if (g.expected_chi) rep.body["expected_chi"] = *g.expected_chi;
  rep.body["forbidden_patterns"] = g.forbidden_patterns;
  rep.body["graph"] = serialize(g.digraph);
  return rep;
}

Report cmd_free(const Input& in, const std::string& pattern_arg, Budget& budget) {
  Digraph host = parse_digraph(in.text);
  Digraph pattern =
      std::filesystem::exists(pattern_arg) ? parse_digraph(read_input(pattern_arg)) : named_pattern(pattern_arg);
  auto e = contains_induced(host, pattern, &budget);
  Report rep;
  rep.body["free"] = !e.has_value();
  if (e) {
    certify(verify_embedding(host, pattern, *e), "embedding");
    rep.body["embedding"] = e->map;
    rep.code = 1;
  }
  return rep;
}

Report cmd_round(const Input& in) {
  Digraph d = parse_digraph(in.text);
  auto r = inround_order(d);
  Report rep;
  rep.body["inround"] = r.order.has_value();
  if (r.order) {
    certify(is_inround_order(d, *r.order), "in-round order");
    rep.body["order"] = r.order->order;
  } else {
    rep.body["refutation"] = r.refutation;
    if (r.witness) rep.body["witness"] = *r.witness;
  }
  return rep;
}

Report cmd_hubs(const Input& in) {
  Digraph d = parse_digraph(in.text);
  auto h = hub_decomposition(d);
  validate_partition(d.n(), h.parts);
  certify(is_inround_order(h.quotient, h.order), "quotient in-round order");
  Report rep;
  rep.body["hubs"] = h.parts;
  rep.body["quotient_order"] = h.order.order;
  return rep;
}

Report cmd_dicolour2(const Input& in, const std::string& t_arg) {
  Digraph d = parse_digraph(in.text);
  auto t = t_arg.empty() ? std::vector<int>{} : parse_int_list(t_arg, "--t");
  auto c = two_dicolour_lot(d, t);
  certify(verify_dicolouring(d, c).valid && c.k <= 2, "2-dicolouring");
  for (int v : t) certify(c.colour[v] == 1, "prescribed set coloured 1");
  Report rep;
  rep.body["colouring"] = c.colour;
  rep.body["colours"] = c.k;
  rep.body["t"] = t;
  return rep;
}

Report cmd_structure(const Input& in) {
  Digraph d = parse_digraph(in.text);
  auto s = semicomplete_structure(d);
  Report rep;
  rep.body["case"] = structure_case_name(s.kind);
  switch (s.kind) {
    case StructureCase::UniversalVertex: {
      int u = s.universal;
      for (int v = 0; v < d.n(); ++v) certify(v == u || (d.has_arc(u, v) && d.has_arc(v, u)), "universal vertex");
      rep.body["universal"] = u;
      break;
    }
    case StructureCase::RoundBlowup:
      validate_partition(d.n(), s.parts);
      certify(is_round_order(contract(d, s.parts), s.order), "round order of the quotient");
      rep.body["parts"] = s.parts;
      rep.body["order"] = s.order.order;
      break;
    case StructureCase::FourSetPartition:
      certify(check_four_set(d, s.e, s.f, s.g, s.h).all(), "four-set partition");
      rep.body["e"] = s.e;
      rep.body["f"] = s.f;
      rep.body["g"] = s.g;
      rep.body["h"] = s.h;
      rep.body["fh_nonempty_and_e_or_g"] = s.fh_nonempty_and_e_or_g;
      rep.body["eg_nonempty_and_f_or_h"] = s.eg_nonempty_and_f_or_h;
      break;
  }
  return rep;
}

Report cmd_king(const Input& in) {
  Digraph d = parse_digraph(in.text);
  auto k = find_2king(d);
  Report rep;
  if (!k) {
    rep.body["king"] = nullptr;
    return rep;
  }
  std::vector<char> reach(d.n(), 0);
  reach[*k] = 1;
  for (int v : d.out(*k)) {
    reach[v] = 1;
    for (int w : d.out(v)) reach[w] = 1;
  }
  certify(std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; }), "2-king reach");
  rep.body["king"] = *k;
  return rep;
}

Report cmd_defective(const Input& in, int d, bool exact, Budget& budget, std::uint64_t seed) {
  Multigraph g = parse_multigraph(in.text);
  Report rep;
  rep.body["d"] = d;
  rep.body["gamma"] = gamma_d(g, d, 16, seed);
  EdgeColouring c;
  if (exact) {
    auto r = exact_defective_index(g, d, &budget);
    c = r.colouring;
    rep.body["index"] = r.index;
    rep.body["lower"] = r.lower;
  } else {
    auto r = defective_colour(g, d, g.is_simple());
    c = r.colouring;
    rep.body["route"] = r.route;
    rep.body["bound"] = r.bound;
    rep.body["exact_fallback"] = r.fell_back;
  }
  certify(verify_edge_colouring(g, c, d).valid, "defective edge colouring");
  rep.body["colours"] = c.k;
  rep.body["colouring"] = c.colour;
  return rep;
}

Report cmd_gadget(const std::string& kind, const Input& in, std::optional<int> k, std::optional<int> d) {
  Report rep;
  rep.body["kind"] = kind;
  if (kind == "deltamin") {
    if (!k) usage("gadget deltamin needs --k");
    Digraph g = deltamin_gadget(parse_digraph(in.text), *k);
    rep.body["n"] = g.n();
    rep.body["m"] = g.m();
    rep.body["delta_min"] = g.delta_min();
    rep.body["graph"] = serialize(g);
  } else if (kind == "defective") {
    if (!k || !d) usage("gadget defective needs --k and --d");
    auto gad = np_gadget_defective(parse_multigraph(in.text), *k, *d);
    rep.body["n"] = gad.graph.n();
    rep.body["m"] = gad.graph.m();
    rep.body["copies_per_vertex"] = gad.per_vertex;
    rep.body["graph"] = serialize(gad.graph);
  } else {
    usage("unknown gadget '" + kind + "'; expected deltamin or defective");
  }
  return rep;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                std::optional<std::string> default_budget) {
  CLI::App app{"Dichromatic number and defective colouring toolkit", "dichroma"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget", g.budget, "Node budget for exponential searches (0 = unlimited)");
  app.add_option("--seed", g.seed, "Seed for sampled subset checks");
  app.add_flag("--json", g.json, "Emit JSON (the only output format)");

  std::string file, colours, pattern, t_arg, family, kind;
  std::optional<int> k, d;
  bool exact = false;
  auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "Graph file, or - for stdin")->required(); };

  auto* chi = app.add_subcommand("chi", "Exact dichromatic number");
  with_file(chi);
  auto* verify = app.add_subcommand("verify", "Check a dicolouring or a defective edge colouring");
  with_file(verify);
  verify->add_option("colouring", colours, "File of colours, one per vertex or edge")->required();
  verify->add_option("--d", d, "Defect for multigraph input");
  auto* brooks = app.add_subcommand("brooks", "Brooks classification and colouring");
  with_file(brooks);
  auto* lam = app.add_subcommand("lambda", "Maximum local arc-connectivity");
  with_file(lam);
  auto* extremal = app.add_subcommand("extremal", "Recognize k-extremal digraphs");
  extremal->add_option("--k", k, "k")->required();
  with_file(extremal);
  auto* gen = app.add_subcommand("gen", "Generate a family member");
  gen->add_option("name", family, "fk, ds, chordal-c122 or chordal-hero-free")->required();
  gen->allow_extras();
  gen->fallthrough(false);
  auto* fr = app.add_subcommand("free", "Induced pattern freeness");
  fr->add_option("--pattern", pattern, "Pattern file or pattern name")->required();
  with_file(fr);
  auto* round = app.add_subcommand("round", "In-round order");
  with_file(round);
  auto* hubs = app.add_subcommand("hubs", "Hub decomposition of a locally in-tournament digraph");
  with_file(hubs);
  auto* dic2 = app.add_subcommand("dicolour2", "2-dicolouring of a locally out-transitive oriented graph");
  with_file(dic2);
  dic2->add_option("--t", t_arg, "Comma-separated transitive set coloured 1");
  auto* structure = app.add_subcommand("structure", "Structure of a locally semicomplete digraph");
  with_file(structure);
  auto* king = app.add_subcommand("king", "2-king of a digraph");
  with_file(king);
  auto* defective = app.add_subcommand("defective", "Defective edge colouring of a multigraph");
  defective->add_option("--d", d, "Defect")->required();
  defective->add_flag("--exact", exact, "Compute the exact defective chromatic index");
  with_file(defective);
  auto* gadget = app.add_subcommand("gadget", "Reduction gadgets");
  gadget->add_option("kind", kind, "deltamin or defective")->required();
  with_file(gadget);
  gadget->add_option("--k", k, "k");
  gadget->add_option("--d", d, "Defect (defective gadget)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::string command = "?";
  json body;
  int code = 0;
  auto start = std::chrono::steady_clock::now();
  try {
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      usage(e.what());
    }
    CLI::App* sub = app.get_subcommands().front();
    command = sub->get_name();
    if (!g.budget && default_budget) {
      auto parsed = parse_int_list(*default_budget, "DICHROMA_BUDGET");
      if (parsed.size() != 1 || parsed[0] < 0) usage("DICHROMA_BUDGET must be a non-negative integer");
      g.budget = static_cast<std::uint64_t>(parsed[0]);
    }
    Budget budget(g.budget.value_or(0));
    if (d && *d < 1) usage("--d must be at least 1");

    Input in;
    if (command != "gen") in = load(file);
    Report rep;
    if (command == "chi") rep = cmd_chi(in, budget);
    else if (command == "verify") rep = cmd_verify(in, colours, d);
    else if (command == "brooks") rep = cmd_brooks(in);
    else if (command == "lambda") rep = cmd_lambda(in);
    else if (command == "extremal") rep = cmd_extremal(in, *k, budget);
    else if (command == "gen") rep = cmd_gen(family, sub->remaining());
    else if (command == "free") rep = cmd_free(in, pattern, budget);
    else if (command == "round") rep = cmd_round(in);
    else if (command == "hubs") rep = cmd_hubs(in);
    else if (command == "dicolour2") rep = cmd_dicolour2(in, t_arg);
    else if (command == "structure") rep = cmd_structure(in);
    else if (command == "king") rep = cmd_king(in);
    else if (command == "defective") rep = cmd_defective(in, *d, exact, budget, g.seed);
    else rep = cmd_gadget(kind, in, k, d);
    body = std::move(rep.body);
    code = rep.code;
    if (!in.digest.empty()) body["digest"] = in.digest;
    if (g.budget) body["budget"] = *g.budget;
  } catch (const BudgetExceededError& e) {
    body = json::object();
    body["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
    body["lower"] = e.lower();
    body["upper"] = e.upper() ? json(*e.upper()) : json(nullptr);
    err << e.what() << '\n';
    code = 2;
  } catch (const Error& e) {
    body = json::object();
    body["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
    err << e.what() << '\n';
    code = 2;
  }
  body["command"] = command;
  out << body.dump() << '\n';
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  err << "wall_time_ms: " << ms << '\n';
  return code;
}

}  // namespace dichroma::cli
