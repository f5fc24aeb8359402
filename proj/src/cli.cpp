#include "k4holo/cli.hpp"

#include "k4holo/chevalley.hpp"
#include "k4holo/pipeline.hpp"
#include "k4holo/realform.hpp"
#include "k4holo/reductive.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace k4holo::cli {

using nlohmann::json;

int default_modulus() {
  if (const char* env = std::getenv("K4HOLO_MODULUS")) {
    try {
      std::size_t used = 0;
      int m = std::stoi(env, &used);
      if (used == std::string(env).size() && m >= 1) return m;
    } catch (const std::exception&) {
    }
    throw UsageError("K4HOLO_MODULUS must be a positive integer", env);
  }
  return 4;
}

// ---------------------------------------------------------------- parsing

namespace {

std::vector<std::string> whitespace_tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::vector<int> parse_int_list(const std::string& body, const std::string& token) {
  std::vector<int> out;
  std::string cleaned;
  for (char c : body)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  if (cleaned.empty()) return out;
  std::stringstream ss(cleaned);
  for (std::string item; std::getline(ss, item, ',');) {
    static const std::regex integer("-?[0-9]+");
    if (!std::regex_match(item, integer)) throw UsageError("bad integer in character spec", token);
    out.push_back(std::stoi(item));
  }
  return out;
}

int parse_modulus(const std::string& text, const std::string& token) {
  int m = std::stoi(text);
  if (m < 1) throw UsageError("modulus must be positive", token);
  return m;
}

// First whitespace token that is not part of the grammar, for error messages.
std::string offending_token(const std::string& spec) {
  static const std::regex known(R"(chi|su6sp1|m=[0-9]+|d=\[[-0-9,]*\]|y=-?[0-9]+|\[[-0-9,]*\])");
  auto tokens = whitespace_tokens(spec);
  for (const auto& t : tokens)
    if (!std::regex_match(t, known)) return t;
  return tokens.empty() ? spec : tokens.back();
}

} // namespace

TorusCharacter parse_character(const std::string& spec, int modulus) {
  static const std::regex chi_re(R"(^\s*chi(?:\s+m=([0-9]+))?\s+\[([^\]]*)\]\s*$)");
  static const std::regex su_re(R"(^\s*su6sp1(?:\s+m=([0-9]+))?\s+d=\[([^\]]*)\]\s+y=(-?[0-9]+)\s*$)");
  static const std::regex label_re(R"(^\s*([A-Za-z0-9]+/)?[A-Za-z]+[0-9]+(?:[A-Za-z]+[0-9]+)*\s*$)");
  std::smatch m;

  if (std::regex_match(spec, m, chi_re)) {
    const int mod = m[1].matched ? parse_modulus(m[1], spec) : modulus;
    auto shown = parse_int_list(m[2], spec);
    if (shown.size() != 6) throw UsageError("chi needs 6 exponents [a1,a3,a4,a5,a6,a2]", m[2].str());
    // displayed order a1,a3,a4,a5,a6,a2
    return TorusCharacter(mod, {shown[0], shown[5], shown[1], shown[2], shown[3], shown[4]});
  }
  if (std::regex_match(spec, m, su_re)) {
    UnitaryPairData u;
    u.modulus = m[1].matched ? parse_modulus(m[1], spec) : modulus;
    auto d = parse_int_list(m[2], spec);
    if (d.size() != 6) throw UsageError("su6sp1 needs 6 diagonal exponents", m[2].str());
    std::copy(d.begin(), d.end(), u.d.begin());
    u.y = std::stoi(m[3]);
    try {
      return embed_su6_sp1(u);
    } catch (const PreconditionError& e) {
      throw UsageError(e.what(), spec);
    }
  }
  if (std::regex_match(spec, label_re)) {
    std::string label = whitespace_tokens(spec).front();
    try {
      return resolve_element(label).chi();
    } catch (const PreconditionError&) {
      throw UsageError("unknown element label", label);
    }
  }
  throw UsageError("malformed character spec", offending_token(spec));
}

std::vector<std::string> split_labels(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::stringstream ss(a);
    for (std::string item; std::getline(ss, item, ',');) {
      item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
      if (!item.empty()) out.push_back(item);
    }
  }
  return out;
}

// ---------------------------------------------------------------- subcommands

namespace {

struct Options {
  CliConfig config;
  std::string format = "plain";
  std::string root_type = "E6";
  bool structure_constants = false;
  std::vector<std::string> chars;
  std::string single_char;
  std::vector<std::string> gamma;
  std::string theta;
  std::string group;
};

void emit(std::ostream& out, const CliConfig& cfg, const json& j, const std::string& plain,
          const std::string& markdown = "") {
  switch (cfg.format) {
  case Format::json: out << j.dump(2) << '\n'; break;
  case Format::markdown: out << (markdown.empty() ? plain : markdown); break;
  case Format::plain: out << plain; break;
  }
}

json root_json(const Root& r) { return r.coords(); }

int cmd_roots(const Options& o, std::ostream& out) {
  RootSystem sys = [&] {
    try {
      return RootSystem::build(o.root_type);
    } catch (const ConfigurationError& e) {
      throw UsageError(e.what(), o.root_type);
    }
  }();
  if (o.structure_constants) {
    build_chevalley_basis(sys).write_table(out);
    return ok;
  }
  json roots = json::array();
  std::ostringstream plain, md;
  plain << "type " << sys.label() << "\nrank " << sys.rank() << "\nroots " << sys.size() << "\nhighest "
        << sys.highest_root().to_string() << "\n";
  md << "| # | root | height |\n|---|---|---|\n";
  for (std::size_t i = 0; i < sys.size(); ++i) {
    roots.push_back(root_json(sys.root(i)));
    plain << sys.root(i).to_string() << "\n";
    md << "| " << i << " | " << sys.root(i).to_string() << " | " << sys.root(i).height() << " |\n";
  }
  json j = {{"type", sys.label()},
            {"rank", sys.rank()},
            {"cartan", sys.cartan()},
            {"root_count", sys.size()},
            {"highest_root", root_json(sys.highest_root())},
            {"roots", roots}};
  emit(out, o.config, j, plain.str(), md.str());
  return ok;
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err) {
  const auto& sc = e6_structure();
  const auto& sys = sc.system();
  json checks = json::array();
  std::ostringstream plain;
  bool all = true;
  auto record = [&](const std::string& name, bool pass, const std::string& detail) {
    all = all && pass;
    checks.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
    plain << (pass ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
  };

  if (o.config.verbosity > 0) err << "checking Jacobi identity...\n";
  auto jac = check_jacobi(sc, o.config.jobs);
  std::string jdetail = std::to_string(jac.triples_checked) + " triples";
  if (jac.first_violation)
    jdetail += ", first violation " + sc.basis_name((*jac.first_violation)[0]) + " " +
               sc.basis_name((*jac.first_violation)[1]) + " " + sc.basis_name((*jac.first_violation)[2]);
  record("jacobi", jac.pass, jdetail);

  auto anti = check_antisymmetry(sc);
  record("antisymmetry", !anti, anti ? sc.basis_name(anti->first) + "," + sc.basis_name(anti->second) : "all pairs");

  std::int64_t k11 = killing_form(sc, sc.h(0), sc.h(0));
  std::int64_t brute = 0;
  for (const auto& g : sys.roots()) {
    int v = sys.inner_product(g, sys.simple_root(0));
    brute += v * v;
  }
  record("killing", k11 == brute && k11 == 48,
         "kappa(h1,h1) = " + std::to_string(k11) + ", root sum " + std::to_string(brute));

  bool hom = true;
  for (const auto& g : builtin_groups())
    for (const auto& e : g.group.labeled_elements())
      for (const auto& a : sys.roots())
        for (const auto& b : sys.roots())
          if (sys.contains(a + b) && e.chi.evaluate(a + b) != (e.chi.evaluate(a) + e.chi.evaluate(b)) % e.chi.modulus())
            hom = false;
  record("character-homomorphism", hom, "builtin characters over all root pairs");

  bool quotient = true;
  const UnitaryPairData central_a{12, {4, 4, 4, 4, 4, 4}, 0}, central_b{12, {6, 6, 6, 6, 6, 6}, 6};
  for (const auto& g : builtin_groups())
    for (const auto& [label, u] : g.realization) {
      TorusCharacter base = embed_su6_sp1(u);
      quotient = quotient && embed_su6_sp1(u * central_a) == base && embed_su6_sp1(u * central_b) == base;
    }
  record("center-quotient", quotient, "(zeta3 I6, 1) and (-I6, -1) act trivially");

  json j = {{"checks", checks}, {"pass", all}};
  emit(out, o.config, j, plain.str());
  return all ? ok : mismatch;
}

int cmd_fixed(const Options& o, std::ostream& out) {
  const int mod = default_modulus();
  std::vector<TorusCharacter> chars;
  for (const auto& s : o.chars) chars.push_back(parse_character(s, mod));
  FixedSubalgebra f = fixed_subalgebra(chars);
  json roots = json::array();
  for (const auto& r : f.fixed_roots) roots.push_back(root_json(r));
  json j = {{"type", f.rtype.label()},
            {"compact_dual", f.rtype.compact_name()},
            {"dim", f.dim},
            {"fixed_root_count", f.fixed_roots.size()},
            {"fixed_roots", roots}};
  std::ostringstream plain;
  plain << "type " << f.rtype.label() << "\ncompact " << f.rtype.compact_name() << "\ndim " << f.dim << "\n";
  emit(out, o.config, j, plain.str());
  return ok;
}

int cmd_classify(const Options& o, std::ostream& out) {
  TorusCharacter chi = parse_character(o.single_char, default_modulus());
  if (chi.order() > 2) throw UsageError("character is not an involution", o.single_char);
  ConjClass c = classify_involution(chi);
  int m = mu(chi);
  json j = {{"character", chi.to_string()}, {"class", to_string(c)}, {"mu", m}};
  emit(out, o.config, j, to_string(c) + "\nmu " + std::to_string(m) + "\n");
  return ok;
}

int cmd_realform(const Options& o, std::ostream& out) {
  auto gamma_labels = split_labels(o.gamma);
  std::vector<std::string> all = gamma_labels;
  all.push_back(o.theta);
  std::vector<ElementRef> refs;
  try {
    refs = resolve_elements(all, o.group);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what(), o.theta);
  }
  const ElementRef theta = refs.back();
  refs.pop_back();
  if (theta.chi().order() > 2) throw UsageError("theta is not an involution", o.theta);

  std::vector<TorusCharacter> gamma;
  for (const auto& r : refs) gamma.push_back(r.chi());
  FixedSubalgebra sub = fixed_subalgebra(gamma);
  RealFormType rf = identify_real_form(sub, theta.chi());
  std::vector<TorusCharacter> with_theta = gamma;
  with_theta.push_back(theta.chi());
  ReductiveType mc = fixed_subalgebra(with_theta).rtype;

  json gl = json::array();
  for (const auto& r : refs) gl.push_back(r.label());
  json j = {{"group", theta.group->name},
            {"theta", theta.label()},
            {"gamma", gl},
            {"compact_dual", sub.rtype.compact_name()},
            {"real_form", rf.to_string()},
            {"maximal_compact", mc.compact_name()}};
  std::ostringstream plain;
  plain << "real_form " << rf.to_string() << "\ncompact_dual " << sub.rtype.compact_name() << "\nmaximal_compact "
        << mc.compact_name() << "\n";
  emit(out, o.config, j, plain.str());
  return ok;
}

int cmd_theorem24(const Options& o, std::ostream& out) {
  K4Report report = classify_all(o.config.jobs);
  emit(out, o.config, to_json(report), to_plain(report), to_markdown(report));
  return report.verified ? ok : mismatch;
}

int cmd_survey(const Options& o, std::ostream& out) {
  ElementRef theta;
  try {
    theta = resolve_element(o.theta);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what(), o.theta);
  }
  if (theta.chi().order() > 2 || classify_involution(theta.chi()) != ConjClass::sigma2)
    throw UsageError("theta must be in the sigma2 class", o.theta);
  auto entries = symmetric_pair_survey(theta);
  json j = json::object();
  std::ostringstream plain, md;
  md << "| σ | class | g0^σ |\n|---|---|---|\n";
  for (const auto& e : entries) {
    const std::string rf = e.real_form.to_string(RenderStyle::symmetric_pair);
    j[e.sigma] = rf;
    plain << e.sigma << " " << to_string(e.sigma_class) << " " << rf << "\n";
    md << "| " << e.sigma << " | " << to_string(e.sigma_class) << " | " << rf << " |\n";
  }
  emit(out, o.config, j, plain.str(), md.str());
  return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Klein four symmetric pairs of holomorphic type for e6(-14)", "k4holo"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "markdown", "plain"}));
  app.add_option("-o,--output", o.config.output_path, "Write output to a file instead of stdout");
  app.add_option("--jobs", o.config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", o.config.verbosity, "Diagnostics on stderr");

  auto* roots = app.add_subcommand("roots", "Dump a root system");
  roots->add_option("--type", o.root_type, "A<n>, D<n> or E6");
  roots->add_flag("--structure-constants", o.structure_constants, "Write the Chevalley N table instead");
  app.add_subcommand("selftest", "Jacobi, Killing form and character checks");
  auto* fixed = app.add_subcommand("fixed", "Fixed subalgebra of characters");
  fixed->add_option("--chars", o.chars, "Character specs");
  auto* classify = app.add_subcommand("classify", "Involution class and mu value");
  classify->add_option("--char", o.single_char, "Character spec")->required();
  auto* realform = app.add_subcommand("realform", "Real form of a Klein four symmetric subalgebra");
  realform->add_option("--gamma", o.gamma, "Labels generating Gamma")->required();
  realform->add_option("--theta", o.theta, "Cartan involution label")->required();
  realform->add_option("--group", o.group, "Builtin group holding the labels");
  app.add_subcommand("theorem24", "Full classification run checked against the reference list");
  auto* survey = app.add_subcommand("survey", "Symmetric subalgebras g0^sigma for a Cartan involution");
  survey->add_option("--theta", o.theta, "Cartan involution label")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  }

  o.config.subcommand = app.get_subcommands().front()->get_name();
  o.config.format = o.format == "json" ? Format::json : o.format == "markdown" ? Format::markdown : Format::plain;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.config.output_path.empty()) {
    file.open(o.config.output_path);
    if (!file) {
      err << "cannot open " << o.config.output_path << "\n";
      return usage;
    }
    sink = &file;
  }

  try {
    const auto& cmd = o.config.subcommand;
    if (cmd == "roots") return cmd_roots(o, *sink);
    if (cmd == "selftest") return cmd_selftest(o, *sink, err);
    if (cmd == "fixed") return cmd_fixed(o, *sink);
    if (cmd == "classify") return cmd_classify(o, *sink);
    if (cmd == "realform") return cmd_realform(o, *sink);
    if (cmd == "theorem24") return cmd_theorem24(o, *sink);
    if (cmd == "survey") return cmd_survey(o, *sink);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return mismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return mismatch;
  }
  return usage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

} // namespace k4holo::cli
