// constella: batch front end over the structure library.
//
// Exit status: 0 success or "true", 1 invalid input or "false", 2 usage or
// parse error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include <constella/constella.hpp>
#include <constella/json_report.hpp>
#include <constella/theorems.hpp>

namespace fs = std::filesystem;
using namespace constella;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;

/// Input that parsed but violates its axioms.
struct Rejected {
  ValidationReport report;
};

using SPtr = std::shared_ptr<const LeftRestrictionSemigroupoid>;
using TPtr = std::shared_ptr<const OrderedConstellation>;

SPtr validate(const RawSemigroupoid& raw) {
  auto r = check_semigroupoid(raw.table);
  r.merge(check_left_restriction(raw.table, raw.plus));
  if (!r.valid()) throw Rejected{std::move(r)};
  return std::make_shared<const LeftRestrictionSemigroupoid>(LeftRestrictionSemigroupoid::make(raw));
}

TPtr validate(const OrderedConstellation& t) {
  auto r = check_li_constellation(t);
  if (!r.valid()) throw Rejected{std::move(r)};
  return std::make_shared<const OrderedConstellation>(t);
}

/// A validated structure of either kind.
using Loaded = std::variant<SPtr, TPtr>;

Loaded load_valid(const fs::path& path) {
  return std::visit([](const auto& s) -> Loaded { return validate(s); }, load_structure(path));
}

/// `path` or `expand:path`, relative to `base`.
Loaded resolve(const std::string& ref, const fs::path& base) {
  const std::string prefix = "expand:";
  const bool expand = ref.rfind(prefix, 0) == 0;
  fs::path path = expand ? ref.substr(prefix.size()) : ref;
  if (path.is_relative()) path = base / path;
  auto loaded = load_valid(path);
  if (!expand) return loaded;
  if (const auto* s = std::get_if<SPtr>(&loaded)) return expand_semigroupoid(*s).expanded;
  return expand_constellation(std::get<TPtr>(loaded)).expanded;
}

SPtr as_semigroupoid(const Loaded& l) {
  if (const auto* s = std::get_if<SPtr>(&l)) return *s;
  return std::make_shared<const LeftRestrictionSemigroupoid>(build_G(*std::get<TPtr>(l)));
}

TPtr as_constellation(const Loaded& l) {
  if (const auto* t = std::get_if<TPtr>(&l)) return *t;
  return std::make_shared<const OrderedConstellation>(build_C(*std::get<SPtr>(l)));
}

void print(const ReportDocument& d) { std::cout << render(d); }

int report_exit(const ReportDocument& d) {
  print(d);
  return d.valid ? exit_ok : exit_false;
}

int cmd_verify(const fs::path& file) {
  const auto parsed = load_structure(file);
  ReportDocument d;
  const auto& table = std::visit([](const auto& s) -> const PartialTable& { return s.table; }, parsed);
  if (const auto* raw = std::get_if<RawSemigroupoid>(&parsed)) {
    auto r = check_semigroupoid(raw->table);
    r.merge(check_left_restriction(raw->table, raw->plus));
    d = document_of(r);
    d.counts.emplace_back("projections", raw->plus.image().size());
  } else {
    const auto& t = std::get<OrderedConstellation>(parsed);
    d = document_of(check_li_constellation(t));
    d.counts.emplace_back("projections", t.plus.image().size());
  }
  d.counts.insert(d.counts.begin(), {{"elements", table.size()}, {"defined_pairs", table.defined_count()}});
  return report_exit(d);
}

int cmd_convert(const fs::path& file, const std::string& to) {
  const auto loaded = load_valid(file);
  if (to == "constellation")
    std::cout << serialize_structure(*as_constellation(loaded));
  else
    std::cout << serialize_structure(*as_semigroupoid(loaded));
  return exit_ok;
}

int cmd_roundtrip(const fs::path& file) {
  const auto loaded = load_valid(file);
  const auto r = std::holds_alternative<SPtr>(loaded) ? roundtrip_check(*std::get<SPtr>(loaded))
                                                      : roundtrip_check(*std::get<TPtr>(loaded));
  return report_exit(document_of(r));
}

int cmd_expand(const std::string& file, bool with_iota) {
  const auto loaded = load_valid(file);
  std::string text, morphism;
  auto emit = [&](const auto& sz) {
    text = serialize_structure(sz.structure());
    if (with_iota)
      morphism = serialize_morphism(file, "expand:" + file, table_of(*sz.base), table_of(sz.structure()), iota(sz).map());
  };
  if (const auto* s = std::get_if<SPtr>(&loaded))
    emit(expand_semigroupoid(*s));
  else
    emit(expand_constellation(std::get<TPtr>(loaded)));
  std::cout << text;
  if (with_iota) std::cout << "\n# iota\n" << morphism;
  return exit_ok;
}

struct LoadedMorphism {
  MorphismFile file;
  Loaded source, target;
};

LoadedMorphism load_morphism(const fs::path& path) {
  MorphismFile file;
  try {
    file = parse_morphism(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path.string());
  }
  const auto base = path.parent_path();
  return {file, resolve(file.source, base), resolve(file.target, base)};
}

ConstellationMorphism constellation_morphism(const LoadedMorphism& m) {
  const auto s = as_constellation(m.source), t = as_constellation(m.target);
  return {s, t, resolve_map(m.file, s->table, t->table)};
}

SemigroupoidMorphism semigroupoid_morphism(const LoadedMorphism& m) {
  const auto s = as_semigroupoid(m.source), t = as_semigroupoid(m.target);
  return {s, t, resolve_map(m.file, s->table(), t->table())};
}

int cmd_extend(const fs::path& phi_file) {
  const auto m = load_morphism(phi_file);
  const auto phi = constellation_morphism(m);
  const auto check = is_inductive_preradiant(phi);
  if (!check.valid()) return report_exit(document_of(check));
  const auto sz = expand_constellation(phi.source_ptr());
  const auto ext = extend(phi, sz);
  std::cout << serialize_morphism("expand:" + m.file.source, m.file.target, sz.structure().table, phi.target().table,
                                  ext.map());
  return exit_ok;
}

int cmd_check_morphism(const fs::path& file, const std::string& kind) {
  const auto m = load_morphism(file);
  ValidationReport r;
  if (kind == "rm") r = is_restriction_morphism(semigroupoid_morphism(m));
  if (kind == "pm") r = is_premorphism(semigroupoid_morphism(m));
  if (kind == "ir") r = is_inductive_radiant(constellation_morphism(m));
  if (kind == "ip") r = is_inductive_preradiant(constellation_morphism(m));
  return report_exit(document_of(r));
}

int cmd_classify(const fs::path& file) {
  const auto loaded = load_valid(file);
  ReportDocument d;
  d.classification = std::holds_alternative<SPtr>(loaded) ? classify_semigroupoid(*std::get<SPtr>(loaded))
                                                          : classify_constellation(*std::get<TPtr>(loaded));
  print(d);
  return exit_ok;
}

int cmd_enumerate(const std::string& kind, std::size_t size, bool count_only, bool up_to_iso) {
  const auto cap = caps_from_env().enumeration_size;
  std::vector<std::string> texts;
  if (kind == "lrs") {
    std::vector<RawSemigroupoid> all;
    for (const auto& s : enumerate_lr_semigroupoids(size, cap)) all.push_back(s.raw());
    if (up_to_iso) all = up_to_isomorphism(all, [](const RawSemigroupoid& s) { return canonical_form(s); });
    for (const auto& s : all) texts.push_back(serialize_structure(s));
  } else {
    auto all = enumerate_li_constellations(size, cap);
    if (up_to_iso) all = up_to_isomorphism(all, [](const OrderedConstellation& t) { return canonical_form(t); });
    for (const auto& t : all) texts.push_back(serialize_structure(t));
  }
  if (count_only) {
    ReportDocument d;
    d.counts = {{"size", size}, {"structures", texts.size()}};
    print(d);
    return exit_ok;
  }
  for (std::size_t i = 0; i < texts.size(); ++i) std::cout << (i ? "\n" : "") << texts[i];
  return exit_ok;
}

int cmd_theorems(std::size_t size) {
  int failed = 0;
  run_acceptance(size, [&](const CriterionResult& r) {
    std::printf("[%s] %d %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  });
  return failed ? exit_false : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for left restriction semigroupoids and li-constellations"};
  app.require_subcommand(1);

  std::string file, to, kind, phi;
  std::size_t size = 3;
  bool with_iota = false, count_only = false, up_to_iso = false;

  auto* verify = app.add_subcommand("verify", "Run every applicable axiom checker");
  verify->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* convert = app.add_subcommand("convert", "Apply C or G and print the result");
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"constellation", "semigroupoid"}));
  convert->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* roundtrip = app.add_subcommand("roundtrip", "Check that converting twice returns the input");
  roundtrip->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* expand = app.add_subcommand("expand", "Print the expansion of a structure");
  expand->add_option("file", file)->required()->check(CLI::ExistingFile);
  expand->add_flag("--iota", with_iota, "Also print the embedding as a morphism file");

  auto* extend_cmd = app.add_subcommand("extend", "Extend a preradiant to the expansion of its source");
  extend_cmd->add_option("--phi", phi)->required()->check(CLI::ExistingFile);

  auto* classify = app.add_subcommand("classify", "Print degeneracy and structure verdicts");
  classify->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check-morphism", "Check a morphism file against one morphism class");
  check->add_option("--kind", kind)->required()->check(CLI::IsMember({"rm", "pm", "ir", "ip"}));
  check->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* enumerate = app.add_subcommand("enumerate", "List every structure of one size");
  enumerate->add_option("--kind", kind)->required()->check(CLI::IsMember({"lrs", "lic"}));
  enumerate->add_option("--size", size)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_flag("--up-to-iso", up_to_iso);

  auto* theorems = app.add_subcommand("theorems", "Run the acceptance suite");
  theorems->add_option("--size", size, "Largest census size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*verify) return cmd_verify(file);
    if (*convert) return cmd_convert(file, to);
    if (*roundtrip) return cmd_roundtrip(file);
    if (*expand) return cmd_expand(file, with_iota);
    if (*extend_cmd) return cmd_extend(phi);
    if (*classify) return cmd_classify(file);
    if (*check) return cmd_check_morphism(file, kind);
    if (*enumerate) return cmd_enumerate(kind, size, count_only, up_to_iso);
    if (*theorems) return cmd_theorems(size);
  } catch (const Rejected& r) {
    print(document_of(r.report));
    return exit_false;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << " (raise CONSTELLA_CAP)\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_false;
  }
  return exit_usage;
}
