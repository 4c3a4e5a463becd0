#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddcox/automorphism.hpp"
#include "oddcox/error.hpp"
#include "oddcox/ln.hpp"
#include "oddcox/oracle.hpp"
#include "oddcox/system_io.hpp"
#include "oddcox/twisted.hpp"
#include "oddcox/units.hpp"

namespace oddcox::cli {

namespace {

// Ordered key/value facts; repeated keys become arrays in JSON output.
class Output {
 public:
  void add(std::string key, std::string value) { facts_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, long value) { add(std::move(key), std::to_string(value)); }

  std::vector<std::string> render(bool json_format) const {
    if (!json_format) {
      std::vector<std::string> lines;
      for (const auto& [k, v] : facts_) lines.push_back(k + ": " + v);
      return lines;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [k, v] : facts_) {
      const auto count = std::count_if(facts_.begin(), facts_.end(), [&](const auto& f) { return f.first == k; });
      if (count > 1) {
        doc[k].push_back(v);
      } else {
        doc[k] = v;
      }
    }
    return {doc.dump()};
  }

 private:
  std::vector<std::pair<std::string, std::string>> facts_;
};

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::vector<Permutation> parse_permutations(const std::vector<std::string>& texts, int degree) {
  std::vector<Permutation> out;
  for (const auto& t : texts) out.push_back(Permutation::parse(t, degree));
  return out;
}

struct Args {
  std::size_t budget = kDefaultOrbitBudget;
  int radius = 3;
  std::string format = "text";
  std::string system, other, aut, word_a, word_b, query;
  int n = 0;
  int degree = 0;
  int cyclic = 0;
  long multiplier = 1;
  std::vector<std::string> perms, images;
};

}  // namespace

CommandResult execute(const std::vector<std::string>& argv) {
  CLI::App app{"Odd tree Coxeter group toolkit", "oddcox"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--budget", a.budget, "orbit and ball element cap")->check(CLI::PositiveNumber);
  app.add_option("--radius", a.radius, "Cayley ball radius")->check(CLI::NonNegativeNumber);
  app.add_option("--format", a.format, "output format")->check(CLI::IsMember({"text", "json"}));

  Output out;
  std::function<void()> run;
  auto command = [&](CLI::App* parent, const char* name, const char* help, std::function<void()> body) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&run, body] { run = body; });
    return sub;
  };
  auto engine = [&](const CoxeterSystem& sys) { return WordEngine(sys, a.budget); };
  auto star_kit = [&] { return AutKit(as_star(load_system(a.system)), a.budget); };

  auto* validate = command(&app, "validate", "validate a system file", [&] {
    const CoxeterSystem sys = load_system(a.system);
    out.add("valid", true);
    out.add("rank", static_cast<long>(sys.rank()));
    out.add("edges", static_cast<long>(sys.edges().size()));
  });
  validate->add_option("system", a.system)->required();

  auto* classify_cmd = command(&app, "classify", "odd / connected / tree / in_tw", [&] {
    const Classification c = classify(load_system(a.system));
    out.add("odd", c.odd);
    out.add("connected", c.connected);
    out.add("tree", c.tree);
    out.add("in_tw", c.in_tw);
  });
  classify_cmd->add_option("system", a.system)->required();

  auto* inv_cmd = command(&app, "invariants", "rank and exponent multiset", [&] {
    const SystemInvariant inv = invariants(load_system(a.system));
    out.add("rank", static_cast<long>(inv.rank));
    out.add("exponents", join(inv.finite_exponents));
  });
  inv_cmd->add_option("system", a.system)->required();

  auto* canon = command(&app, "canonical-star", "canonical star system", [&] {
    const StarGroup star = canonical_star(invariants(load_system(a.system)));
    out.add("rank", static_cast<long>(star.system.rank()));
    out.add("t", join(star.form.t_vector()));
    out.add("system", system_to_json(star.system));
  });
  canon->add_option("system", a.system)->required();

  auto* iso = command(&app, "iso", "decide isomorphism", [&] {
    out.add("isomorphic", decide_isomorphic(load_system(a.system), load_system(a.other)));
  });
  iso->add_option("a", a.system)->required();
  iso->add_option("b", a.other)->required();

  auto* reduce_cmd = command(&app, "reduce", "ShortLex normal form", [&] {
    const CanonicalWord w = engine(load_system(a.system)).reduce(parse_word(a.word_a));
    out.add("word", to_string(w.word()));
    out.add("length", static_cast<long>(w.length()));
  });
  reduce_cmd->add_option("system", a.system)->required();
  reduce_cmd->add_option("word", a.word_a)->required();

  auto* equal_cmd = command(&app, "equal", "word equality", [&] {
    out.add("equal", engine(load_system(a.system)).equal(parse_word(a.word_a), parse_word(a.word_b)));
  });
  equal_cmd->add_option("system", a.system)->required();
  equal_cmd->add_option("u", a.word_a)->required();
  equal_cmd->add_option("v", a.word_b)->required();

  auto* multiply_cmd = command(&app, "multiply", "product of two words", [&] {
    const CanonicalWord w = engine(load_system(a.system)).multiply(parse_word(a.word_a), parse_word(a.word_b));
    out.add("word", to_string(w.word()));
    out.add("length", static_cast<long>(w.length()));
  });
  multiply_cmd->add_option("system", a.system)->required();
  multiply_cmd->add_option("u", a.word_a)->required();
  multiply_cmd->add_option("v", a.word_b)->required();

  auto* ball = command(&app, "ball", "Cayley ball", [&] {
    const CayleyBall b = cayley_ball(engine(load_system(a.system)), a.radius, a.budget);
    out.add("radius", static_cast<long>(a.radius));
    out.add("size", static_cast<long>(b.elements.size()));
    for (const auto& w : b.elements) out.add("element", to_string(w.word()));
  });
  ball->add_option("system", a.system)->required();

  auto* search = command(&app, "search", "conjugator or centralizer search in a ball", [&] {
    const SearchKind kind = a.query == "conjugator" ? SearchKind::Conjugator : SearchKind::Centralizer;
    if (kind == SearchKind::Conjugator && a.word_b.empty()) throw CLI::RequiredError("conjugator needs a target word");
    const Word target = kind == SearchKind::Conjugator ? parse_word(a.word_b) : Word{};
    const auto found = ball_search(engine(load_system(a.system)), kind, parse_word(a.word_a), target, a.radius, a.budget);
    out.add("count", static_cast<long>(found.size()));
    for (const auto& w : found) out.add("word", to_string(w));
  });
  search->add_option("system", a.system)->required();
  search->add_option("query", a.query)->required()->check(CLI::IsMember({"conjugator", "centralizer"}));
  search->add_option("a", a.word_a)->required();
  search->add_option("b", a.word_b);

  auto* aut_verify = command(&app, "aut-verify", "check the defining relations", [&] {
    out.add("relations", star_kit().verify(load_endomorphism(a.aut)));
  });
  aut_verify->add_option("system", a.system)->required();
  aut_verify->add_option("aut", a.aut)->required();

  auto* aut_factorize = command(&app, "aut-factorize", "inner(x^-1) graph(perm) theta(cvec)", [&] {
    const AutKit kit = star_kit();
    const AutFactorization f = kit.factorize(load_endomorphism(a.aut));
    out.add("inner", to_string(f.inner));
    out.add("cvec", join(f.cvec));
    out.add("perm", to_string(f.perm));
    out.add("is_inner", kit.is_inner(f));
  });
  aut_factorize->add_option("system", a.system)->required();
  aut_factorize->add_option("aut", a.aut)->required();

  auto* aut_invert = command(&app, "aut-invert", "inverse automorphism", [&] {
    const Endomorphism inv = star_kit().try_invert(load_endomorphism(a.aut));
    out.add("inverse", endomorphism_to_json(inv));
  });
  aut_invert->add_option("system", a.system)->required();
  aut_invert->add_option("aut", a.aut)->required();

  auto* aut_witness = command(&app, "aut-witness", "normality witness for a non-inner automorphism", [&] {
    const AutKit kit = star_kit();
    const NormalityWitness w = kit.normality_witness(kit.factorize(load_endomorphism(a.aut)));
    out.add("g", to_string(w.g));
    out.add("merge", std::to_string(w.merge.first) + " " + std::to_string(w.merge.second));
    out.add("evidence", to_string(w.evidence.word()));
    out.add("quotient", system_to_json(w.quotient.system));
  });
  aut_witness->add_option("system", a.system)->required();
  aut_witness->add_option("aut", a.aut)->required();

  auto* out_cmd = command(&app, "out", "outer automorphism group", [&] {
    const StarGroup star = canonical_star(invariants(load_system(a.system)));
    const OutDescriptor d = out_descriptor(star.form);
    out.add("out_order", d.out_order);
    out.add("structure", d.structure);
    std::string shape;
    for (const auto& [m, k] : d.c_shape) {
      shape += (shape.empty() ? "" : " x ") + std::string("U_") + std::to_string(m) + (k > 1 ? "^" + std::to_string(k) : "");
    }
    out.add("c_shape", shape);
    out.add("c_order", c_order(star.form));
    out.add("inn_c_splits", d.inn_c_splits);
    out.add("aut_out_split_guaranteed", d.aut_out_split_guaranteed);
    out.add("note", d.note);
  });
  out_cmd->add_option("system", a.system)->required();

  auto* split = command(&app, "split", "complement of inner(w_1) in C", [&] {
    const StarGroup star = canonical_star(invariants(load_system(a.system)));
    const auto d = split_inn_c(star.form);
    out.add("splits", d.has_value());
    if (!d) return;
    out.add("leaf", static_cast<long>(d->leaf));
    out.add("prime", d->prime);
    out.add("complement_order", d->order);
    out.add("complement_cyclic", d->cyclic_orders.empty() ? std::string("1") : join(d->cyclic_orders));
    for (const auto& g : d->generators) out.add("generator", join(g));
  });
  split->add_option("system", a.system)->required();

  auto* commutator = command(&app, "commutator", "presentation of the commutator subgroup", [&] {
    const CommutatorPresentation c = commutator_presentation(load_system(a.system));
    const FinitePresentation& p = c.presentation;
    out.add("generators", static_cast<long>(p.generators));
    for (int g = 1; g <= p.generators; ++g) {
      out.add("generator", p.names[static_cast<std::size_t>(g - 1)] + " = " + to_string(c.generator_words[static_cast<std::size_t>(g - 1)]));
    }
    for (const auto& r : p.relators) out.add("relator", to_string(r, p));
    out.add("conjugator", static_cast<long>(c.conjugator));
    for (int g = 1; g <= p.generators; ++g) {
      out.add("action", p.names[static_cast<std::size_t>(g - 1)] + " -> " + to_string(c.action[static_cast<std::size_t>(g - 1)], p));
    }
  });
  commutator->add_option("system", a.system)->required();

  auto* rs = command(&app, "rs-kernel", "Reidemeister-Schreier kernel presentation", [&] {
    const KernelPresentation k = rs_kernel(load_system(a.system), parse_permutations(a.perms, a.degree));
    out.add("index", static_cast<long>(k.index));
    out.add("schreier_generators", static_cast<long>(k.schreier_generators));
    out.add("generators", static_cast<long>(k.presentation.generators));
    out.add("relators", static_cast<long>(k.presentation.relators.size()));
    for (const auto& r : k.presentation.relators) out.add("relator", to_string(r, k.presentation));
  });
  rs->add_option("system", a.system)->required();
  rs->add_option("--degree", a.degree)->required();
  rs->add_option("images", a.perms, "one cycle-notation image per generator")->required();

  CLI::App* ln = app.add_subcommand("ln", "the L_n family");
  ln->require_subcommand(1);
  auto* ln_build = command(ln, "build", "path system of L_n", [&] { out.add("system", system_to_json(build_ln(a.n))); });
  ln_build->add_option("n", a.n)->required();
  auto* ln_pi = command(ln, "pi", "image in S_n", [&] { out.add("permutation", to_string(pi_image(a.n, parse_word(a.word_a)))); });
  ln_pi->add_option("n", a.n)->required();
  ln_pi->add_option("word", a.word_a)->required();
  auto* ln_pure = command(ln, "pure", "membership in PL_n", [&] { out.add("pure", is_pure(a.n, parse_word(a.word_a))); });
  ln_pure->add_option("n", a.n)->required();
  ln_pure->add_option("word", a.word_a)->required();
  auto* ln_witness = command(ln, "witness", "PL_n is not characteristic", [&] {
    const PlWitness w = pl_witness(a.n);
    out.add("endo", endomorphism_to_json(w.endo));
    out.add("g", to_string(w.g));
    out.add("phi_g", to_string(w.phi_g.word()));
    out.add("image", to_string(w.image));
  });
  ln_witness->add_option("n", a.n)->required();
  auto* ln_rank = command(ln, "rank", "free rank of PL_n", [&] {
    long index = 1;
    for (int k = 2; k <= a.n; ++k) index *= k;
    out.add("index", index);
    out.add("free_rank", free_rank(build_ln(a.n), index));
  });
  ln_rank->add_option("n", a.n)->required();

  auto* twisted = command(&app, "twisted", "twisted conjugacy classes", [&] {
    if (a.cyclic > 0) {
      std::vector<int> phi;
      for (int x = 0; x < a.cyclic; ++x) {
        phi.push_back(static_cast<int>(((a.multiplier * x) % a.cyclic + a.cyclic) % a.cyclic));
      }
      out.add("classes", twisted_count(cyclic_table(a.cyclic), phi));
      return;
    }
    if (a.perms.empty()) throw CLI::RequiredError("--gens or --cyclic");
    out.add("classes", twisted_count(parse_permutations(a.perms, a.degree), parse_permutations(a.images, a.degree), a.budget));
  });
  twisted->add_option("--gens", a.perms, "group generators in cycle notation");
  twisted->add_option("--images", a.images, "automorphism images of the generators");
  twisted->add_option("--degree", a.degree);
  twisted->add_option("--cyclic", a.cyclic, "use Z/m with x -> multiplier * x");
  twisted->add_option("--multiplier", a.multiplier);

  CommandResult result;
  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
    if (run) run();
  } catch (const CLI::CallForHelp&) {
    std::istringstream help(app.help());
    for (std::string line; std::getline(help, line);) result.lines.push_back(line);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.lines.push_back(std::string("usage: ") + e.what());
    return result;
  } catch (const Error& e) {
    result.exit_code = 1;
    result.lines.push_back("error: " + std::string(tag(e.kind())) + ": " + e.what());
    return result;
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.lines.push_back(std::string("error: internal: ") + e.what());
    return result;
  }
  result.lines = out.render(a.format == "json");
  return result;
}

}  // namespace oddcox::cli
