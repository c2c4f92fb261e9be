#include "sdc_tools/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sdc/abelian_group.hpp"
#include "sdc/counting.hpp"
#include "sdc/cyclotomic.hpp"
#include "sdc/galois_ring.hpp"
#include "sdc/group_ring.hpp"
#include "sdc/ideals.hpp"

namespace sdc::cli {

using Json = nlohmann::ordered_json;

namespace {

// Counts can exceed 64 bits, so JSON carries them as decimal strings.
std::string dec(const BigInt& value) { return value.str(); }

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json envelope(Json parameters, Json result, Json breakdown) {
  Json doc;
  doc["parameters"] = std::move(parameters);
  doc["result"] = std::move(result);
  doc["breakdown"] = std::move(breakdown);
  return doc;
}

void print_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string text;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) text += sep;
    text += parts[i];
  }
  return text;
}

std::string class_elements(const CyclotomicClass& c) {
  std::vector<std::string> parts;
  for (const auto& e : c.elements) parts.push_back(e.to_string());
  return join(parts, ",");
}

Json ring_parameters(std::uint64_t p, unsigned r, unsigned s, const AbelianGroup& group) {
  Json j;
  j["p"] = p;
  j["r"] = r;
  j["s"] = s;
  j["group"] = group.to_string();
  return j;
}

std::vector<std::string> element_strings(const std::vector<GroupRingElement>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand bodies

struct RingArgs {
  std::uint64_t p = 0;
  unsigned r = 0;
  unsigned s = 1;
  std::string group;
  std::string dual = "euclidean";
  bool json = false;
};

void cmd_gr_info(const RingArgs& a, std::ostream& out) {
  const GaloisRing& ring = GaloisRing::get(a.p, a.r, a.s);
  std::vector<std::string> modulus;
  for (auto c : ring.modulus()) modulus.push_back(std::to_string(c));
  const std::string teich = ring.teichmuller_generator().to_string();
  if (a.json) {
    Json params{{"p", a.p}, {"r", a.r}, {"s", a.s}};
    Json result{{"ring", ring.name()},
                {"characteristic", ring.characteristic()},
                {"residue_field_size", ring.residue_field_size()},
                {"size", dec(ring.size())},
                {"units", dec(ring.unit_count())},
                {"modulus", join(modulus, ",")},
                {"teichmuller_generator", teich}};
    print_json(out, envelope(params, result, Json::array()));
    return;
  }
  out << "ring: " << ring.name() << '\n'
      << "characteristic: " << ring.characteristic() << '\n'
      << "residue field size: " << ring.residue_field_size() << '\n'
      << "size: " << ring.size() << '\n'
      << "units: " << ring.unit_count() << '\n'
      << "modulus (constant term first): " << join(modulus, ",") << '\n'
      << "teichmuller generator: " << teich << '\n';
}

void cmd_classes(const std::string& group_text, std::uint64_t q, bool json, std::ostream& out) {
  const AbelianGroup group = AbelianGroup::parse(group_text);
  const ClassPartition part = partition(group, q);
  std::map<std::size_t, std::size_t> euclidean_partner;
  for (auto [a, b] : part.type_III) {
    euclidean_partner[a] = b;
    euclidean_partner[b] = a;
  }
  std::map<std::size_t, std::size_t> hermitian_partner;
  for (auto [a, b] : part.type_IIIp) {
    hermitian_partner[a] = b;
    hermitian_partner[b] = a;
  }
  auto partner_text = [&](const std::map<std::size_t, std::size_t>& m, std::size_t i) {
    auto it = m.find(i);
    return it == m.end() ? std::string("-")
                         : part.classes[it->second].representative.to_string();
  };

  Json rows = Json::array();
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    const auto& c = part.classes[i];
    if (json) {
      Json row{{"representative", c.representative.to_string()},
               {"elements", class_elements(c)},
               {"size", c.size()},
               {"euclidean", to_string(c.euclidean)},
               {"partner", partner_text(euclidean_partner, i)}};
      if (c.hermitian) {
        row["hermitian"] = to_string(*c.hermitian);
        row["hermitian_partner"] = partner_text(hermitian_partner, i);
      }
      rows.push_back(std::move(row));
      continue;
    }
    out << c.representative.to_string() << '\t' << class_elements(c) << '\t' << c.size() << '\t'
        << to_string(c.euclidean);
    if (c.hermitian) out << '\t' << to_string(*c.hermitian);
    out << '\t' << partner_text(euclidean_partner, i);
    if (c.hermitian) out << '\t' << partner_text(hermitian_partner, i);
    out << '\n';
  }
  if (json) {
    Json params{{"group", group.to_string()}, {"q", q}};
    Json result{{"classes", part.classes.size()}, {"type_I", part.type_I.size()},
                {"type_II", part.type_II.size()}, {"type_III_pairs", part.type_III.size()}};
    if (part.has_hermitian()) {
      result["type_IIp"] = part.type_IIp.size();
      result["type_IIIp_pairs"] = part.type_IIIp.size();
    }
    print_json(out, envelope(params, result, rows));
  }
}

Json report_breakdown(const CountReport& report) {
  Json rows = Json::array();
  for (const auto& t : report.breakdown) {
    rows.push_back(Json{{"d", t.d},
                        {"elements", t.elements},
                        {"order", t.order},
                        {"pair_class", to_string(t.pair_class)},
                        {"base", to_string(t.base)},
                        {"base_ring", "GR(" + std::to_string(report.p) + "^" +
                                          std::to_string(report.r) + "," +
                                          std::to_string(t.base_degree) + ")[" + report.sylow +
                                          "]"},
                        {"base_value", dec(t.base_value)},
                        {"exponent", t.exponent},
                        {"factor", dec(t.factor)},
                        {"provider", t.provider}});
  }
  return rows;
}

void cmd_count(const RingArgs& a, const std::string& provider_name, bool breakdown,
               std::ostream& out) {
  const AbelianGroup group = AbelianGroup::parse(a.group);
  const CountKind kind = parse_count_kind(a.dual);
  const auto provider = make_provider(provider_name);
  const CountReport report = count_abelian_codes(a.p, a.r, a.s, group, kind, *provider);
  if (a.json) {
    Json params = ring_parameters(a.p, a.r, a.s, group);
    params["dual"] = to_string(kind);
    params["provider"] = provider_name;
    Json result{{"count", dec(report.count)},
                {"complement", report.complement},
                {"sylow", report.sylow},
                {"providers_used", report.providers}};
    print_json(out, envelope(params, result, report_breakdown(report)));
    return;
  }
  out << report.count << '\n';
  if (!breakdown) return;
  for (const auto& t : report.breakdown) {
    out << "d=" << t.d << " N_A(d)=" << t.elements << " ord=" << t.order << " "
        << to_string(t.pair_class) << " " << to_string(t.base) << "(GR(" << a.p << "^" << a.r
        << "," << t.base_degree << ")[" << report.sylow << "])=" << t.base_value << " ^"
        << t.exponent << " = " << t.factor;
    if (!t.provider.empty()) out << " [" << t.provider << "]";
    out << '\n';
  }
}

void cmd_exists(const RingArgs& a, std::ostream& out) {
  const AbelianGroup group = AbelianGroup::parse(a.group);
  const Duality duality = parse_duality(a.dual);
  const bool exists = exists_self_dual(a.p, a.r, a.s, group, duality);
  if (a.json) {
    Json params = ring_parameters(a.p, a.r, a.s, group);
    params["dual"] = to_string(duality);
    Json result{{"exists", exists},
                {"principal_ideal_group_ring", is_principal_ideal_group_ring(a.p, a.r, group)}};
    print_json(out, envelope(params, result, Json::array()));
    return;
  }
  out << (exists ? "true" : "false") << '\n';
}

void cmd_construct(const RingArgs& a, std::ostream& out) {
  const AbelianGroup group = AbelianGroup::parse(a.group);
  const Duality duality = parse_duality(a.dual);
  const SelfDualConstruction c = construct_self_dual(a.p, a.r, a.s, group, duality);
  const auto gens = element_strings(c.generators);
  if (a.json) {
    Json params = ring_parameters(a.p, a.r, a.s, group);
    params["dual"] = to_string(duality);
    Json result{{"ring", c.ring.name()},
                {"method", c.method},
                {"generators", gens},
                {"log_p_size", c.ideal.log_size()},
                {"self_dual", is_self_dual(c.ideal, duality)}};
    print_json(out, envelope(params, result, Json::array()));
    return;
  }
  for (const auto& g : gens) out << g << '\n';
}

void cmd_enumerate(const RingArgs& a, const std::string& method, std::ostream& out) {
  const AbelianGroup group = AbelianGroup::parse(a.group);
  const CountKind kind = parse_count_kind(a.dual);
  const GroupRing ring(GaloisRing::get(a.p, a.r, a.s), group);
  std::vector<std::vector<std::string>> listed;
  BigInt total = 0;
  if (method == "decomposition") {
    if (kind == CountKind::All) {
      throw UsageError("--method decomposition lists self-dual codes only; pass --dual");
    }
    const Duality duality = kind == CountKind::Euclidean ? Duality::Euclidean : Duality::Hermitian;
    const auto result = enumerate_semisimple_selfdual(a.p, a.r, a.s, group, duality);
    total = result.count;
    for (const auto& g : result.generators) listed.push_back({g.to_string()});
  } else if (method == "brute") {
    for (const auto& ideal : enumerate_ideals(ring)) {
      if (kind == CountKind::Euclidean && !is_self_dual(ideal, Duality::Euclidean)) continue;
      if (kind == CountKind::Hermitian && !is_self_dual(ideal, Duality::Hermitian)) continue;
      listed.push_back(element_strings(minimal_generators(ideal)));
    }
    total = listed.size();
  } else {
    throw UsageError("unknown method '" + method + "' (expected brute or decomposition)");
  }
  if (a.json) {
    Json params = ring_parameters(a.p, a.r, a.s, group);
    params["dual"] = to_string(kind);
    params["method"] = method;
    Json result{{"ring", ring.name()}, {"count", dec(total)}, {"ideals", listed}};
    print_json(out, envelope(params, result, Json::array()));
    return;
  }
  for (const auto& gens : listed) out << (gens.empty() ? "0" : join(gens, " | ")) << '\n';
  if (BigInt(listed.size()) < total) {
    out << "# listed " << listed.size() << " of " << total << '\n';
  }
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto n = std::stoull(text);
      return {n, n};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError("malformed range '" + text + "' (expected a..b)");
  }
}

void cmd_table(const RingArgs& a, const std::string& lengths, const std::string& format,
               std::ostream& out) {
  if (a.r != 2) {
    throw UsageError("table needs r = 2 (closed forms exist only over GR(p^2,s)), got r = " +
                     std::to_string(a.r));
  }
  const auto [lo, hi] = parse_range(lengths);
  if (lo == 0 || lo > hi) throw UsageError("length range must satisfy 1 <= a <= b");
  const bool hermitian = a.s % 2 == 0;
  if (format == "csv") {
    out << "n,NC,NEC,NHC\n";
  } else if (format != "json") {
    throw UsageError("unknown format '" + format + "' (expected csv or json)");
  }
  Json rows = Json::array();
  Json shapes = Json::array();
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const std::string nc = dec(nc_length_n(a.p, a.s, n).count);
    const std::string nec = dec(nec_length_n(a.p, a.s, n).count);
    const std::string nhc = hermitian ? dec(nhc_length_n(a.p, a.s, n).count) : "";
    if (format == "csv") {
      out << n << ',' << nc << ',' << nec << ',' << nhc << '\n';
      continue;
    }
    Json row{{"n", n}, {"NC", nc}, {"NEC", nec}};
    row["NHC"] = hermitian ? Json(nhc) : Json(nullptr);
    rows.push_back(std::move(row));
    std::uint64_t m = n;
    unsigned e = 0;
    while (m % a.p == 0) {
      m /= a.p;
      ++e;
    }
    shapes.push_back(Json{{"n", n}, {"m", m}, {"a", e}});
  }
  if (format == "json") {
    Json params{{"p", a.p}, {"r", a.r}, {"s", a.s}, {"lengths", lengths}};
    print_json(out, envelope(params, rows, shapes));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Verification harness

namespace {

struct Instance {
  std::uint64_t p;
  unsigned r;
  unsigned s;
  AbelianGroup group;
};

std::vector<Instance> verification_instances(std::uint64_t max_ring_size) {
  std::vector<Instance> out;
  for (std::uint64_t p = 2; p <= max_ring_size; ++p) {
    if (!is_prime(p)) continue;
    // |GR(p^r,s)[G]| = p^{r s |G|}; e is the largest admissible r s |G|.
    unsigned e = 0;
    for (BigInt size = p; size <= max_ring_size; size *= p) ++e;
    for (unsigned r = 1; r <= e; ++r) {
      for (unsigned s = 1; r * s <= e; ++s) {
        for (std::uint64_t n = 1; r * s * n <= e; ++n) {
          for (auto& g : abelian_groups_of_order(n)) out.push_back({p, r, s, std::move(g)});
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<VerificationRecord> verify_all(std::uint64_t max_ring_size) {
  if (max_ring_size > exhaustive_bound()) {
    throw UsageError("--max-ring-size " + std::to_string(max_ring_size) +
                     " exceeds the exhaustive bound " + std::to_string(exhaustive_bound()) +
                     " (raise " + kExhaustiveBoundVariable + ")");
  }
  using Clock = std::chrono::steady_clock;
  const AutoProvider formula_only(false);
  std::vector<VerificationRecord> records;

  for (const auto& inst : verification_instances(max_ring_size)) {
    auto record = [&](std::string quantity, std::string formula, std::string oracle,
                      std::string oracle_kind, Clock::time_point start) {
      VerificationRecord rec;
      rec.p = inst.p;
      rec.r = inst.r;
      rec.s = inst.s;
      rec.group = inst.group.factors();
      rec.quantity = std::move(quantity);
      rec.pass = formula == oracle;
      rec.formula = std::move(formula);
      rec.oracle = std::move(oracle);
      rec.oracle_kind = std::move(oracle_kind);
      rec.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
      records.push_back(std::move(rec));
    };

    const auto start = Clock::now();
    const GroupRing ring(GaloisRing::get(inst.p, inst.r, inst.s), inst.group);
    const auto ideals = enumerate_ideals(ring);
    std::uint64_t euclidean = 0;
    std::uint64_t hermitian = 0;
    for (const auto& ideal : ideals) {
      if (is_self_dual(ideal, Duality::Euclidean)) ++euclidean;
      if (inst.s % 2 == 0 && is_self_dual(ideal, Duality::Hermitian)) ++hermitian;
    }

    struct Check {
      CountKind kind;
      const char* name;
      std::uint64_t oracle;
    };
    std::vector<Check> checks{{CountKind::All, "NA", ideals.size()},
                              {CountKind::Euclidean, "NEA", euclidean}};
    if (inst.s % 2 == 0) checks.push_back({CountKind::Hermitian, "NHA", hermitian});
    for (const auto& check : checks) {
      // Only counts the formula can produce without brute-force base counts.
      try {
        const auto report =
            count_abelian_codes(inst.p, inst.r, inst.s, inst.group, check.kind, formula_only);
        record(check.name, dec(report.count), std::to_string(check.oracle), "join-closure", start);
      } catch (const ProviderDomainError&) {
      }
      if (check.kind == CountKind::All) continue;
      const Duality duality =
          check.kind == CountKind::Euclidean ? Duality::Euclidean : Duality::Hermitian;
      const bool exists = exists_self_dual(inst.p, inst.r, inst.s, inst.group, duality);
      record(std::string("exists-") + (duality == Duality::Euclidean ? "E" : "H"),
             exists ? "true" : "false", check.oracle > 0 ? "true" : "false", "join-closure",
             start);
      if (exists) {
        const auto c = construct_self_dual(inst.p, inst.r, inst.s, inst.group, duality);
        record(std::string("construct-") + (duality == Duality::Euclidean ? "E" : "H"), "true",
               is_self_dual(c.ideal, duality) ? "true" : "false", "join-closure", start);
      }
    }

    if (inst.group.order() % inst.p != 0) {
      const auto semi_start = Clock::now();
      record("NEA-semisimple", dec(nea_semisimple(inst.p, inst.r, inst.s, inst.group)),
             dec(enumerate_semisimple_selfdual(inst.p, inst.r, inst.s, inst.group,
                                               Duality::Euclidean, 0)
                     .count),
             "decomposition", semi_start);
      if (inst.s % 2 == 0) {
        record("NHA-semisimple", dec(nha_semisimple(inst.p, inst.r, inst.s, inst.group)),
               dec(enumerate_semisimple_selfdual(inst.p, inst.r, inst.s, inst.group,
                                                 Duality::Hermitian, 0)
                       .count),
               "decomposition", semi_start);
      }
    }
  }
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.p, a.r, a.s, a.group, a.quantity) <
           std::tie(b.p, b.r, b.s, b.group, b.quantity);
  });
  return records;
}

namespace {

std::string group_text(const std::vector<std::uint64_t>& factors) {
  return factors.empty() ? "1" : AbelianGroup(factors).to_string();
}

int cmd_verify(std::uint64_t max_ring_size, bool json, bool timing, std::ostream& out) {
  const auto records = verify_all(max_ring_size);
  const auto failures = std::count_if(records.begin(), records.end(),
                                      [](const auto& rec) { return !rec.pass; });
  if (json) {
    Json rows = Json::array();
    for (const auto& rec : records) {
      Json row{{"p", rec.p},         {"r", rec.r},
               {"s", rec.s},         {"group", group_text(rec.group)},
               {"quantity", rec.quantity}, {"formula", rec.formula},
               {"oracle", rec.oracle},     {"oracle_kind", rec.oracle_kind},
               {"status", rec.pass ? "pass" : "fail"}};
      if (timing) row["elapsed_us"] = rec.elapsed.count();
      rows.push_back(std::move(row));
    }
    Json params{{"max_ring_size", max_ring_size}};
    Json result{{"records", records.size()}, {"failures", failures}};
    print_json(out, envelope(params, result, rows));
  } else {
    for (const auto& rec : records) {
      out << (rec.pass ? "PASS" : "FAIL") << ' ' << rec.quantity << " p=" << rec.p
          << " r=" << rec.r << " s=" << rec.s << " G=" << group_text(rec.group)
          << " formula=" << rec.formula << " oracle=" << rec.oracle << " (" << rec.oracle_kind
          << ")";
      if (timing) out << ' ' << rec.elapsed.count() << "us";
      out << '\n';
    }
    out << records.size() << " records, " << failures << " failed\n";
  }
  return failures == 0 ? 0 : 1;
}

void add_ring_options(CLI::App* cmd, RingArgs& a, bool with_s, bool with_group) {
  cmd->add_option("--p", a.p, "prime p")->required();
  cmd->add_option("--r", a.r, "nilpotency index r")->required();
  if (with_s) cmd->add_option("--s", a.s, "residue degree s")->capture_default_str();
  if (with_group) cmd->add_option("--group", a.group, "group, e.g. Z2xZ4 or 1")->required();
  cmd->add_flag("--json", a.json, "JSON output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-dual abelian codes over Galois rings", "sdc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  RingArgs ring_args;
  std::uint64_t q = 0;
  std::string group_text_arg;
  bool classes_json = false;
  std::string provider = "auto";
  bool breakdown = false;
  std::string method = "brute";
  std::string lengths;
  std::string format = "csv";
  std::uint64_t max_ring_size = 0;
  bool timing = false;

  auto* gr = app.add_subcommand("gr", "Galois ring utilities");
  gr->require_subcommand(1);
  auto* gr_info = gr->add_subcommand("info", "Describe GR(p^r,s)");
  add_ring_options(gr_info, ring_args, true, false);

  auto* classes = app.add_subcommand("classes", "q-cyclotomic classes of a group");
  classes->add_option("--group", group_text_arg, "group, e.g. Z2xZ4")->required();
  classes->add_option("--q", q, "prime power q = p^s")->required();
  classes->add_flag("--json", classes_json, "JSON output");

  auto* count = app.add_subcommand("count", "Count (self-dual) abelian codes");
  add_ring_options(count, ring_args, true, true);
  count->add_option("--dual", ring_args.dual, "euclidean, hermitian or none")
      ->capture_default_str();
  count->add_option("--provider", provider, "auto, formula, trivial, closed or brute")
      ->capture_default_str();
  count->add_flag("--breakdown", breakdown, "Print the per-divisor factors");

  auto* exists = app.add_subcommand("exists", "Does a self-dual code exist?");
  add_ring_options(exists, ring_args, true, true);
  exists->add_option("--dual", ring_args.dual, "euclidean or hermitian")->capture_default_str();

  auto* construct = app.add_subcommand("construct", "Build an explicit self-dual code");
  add_ring_options(construct, ring_args, true, true);
  construct->add_option("--dual", ring_args.dual, "euclidean or hermitian")
      ->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "List ideals or self-dual ideals");
  add_ring_options(enumerate, ring_args, true, true);
  enumerate->add_option("--dual", ring_args.dual, "euclidean, hermitian or none")
      ->capture_default_str();
  enumerate->add_option("--method", method, "brute or decomposition")->capture_default_str();

  auto* table = app.add_subcommand("table", "NC, NEC, NHC for a range of lengths");
  table->add_option("--p", ring_args.p, "prime p")->required();
  ring_args.r = 2;
  table->add_option("--r", ring_args.r, "must be 2")->capture_default_str();
  table->add_option("--s", ring_args.s, "residue degree s")->capture_default_str();
  table->add_option("--lengths", lengths, "range a..b")->required();
  table->add_option("--format", format, "csv or json")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Formula-vs-oracle checks on small rings");
  verify->add_option("--max-ring-size", max_ring_size, "largest ring size checked")->required();
  verify->add_flag("--json", ring_args.json, "JSON output");
  verify->add_flag("--timing", timing, "Include elapsed times");

  std::vector<std::string> storage{"sdc"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gr_info->parsed()) cmd_gr_info(ring_args, out);
    if (classes->parsed()) cmd_classes(group_text_arg, q, classes_json, out);
    if (count->parsed()) cmd_count(ring_args, provider, breakdown, out);
    if (exists->parsed()) cmd_exists(ring_args, out);
    if (construct->parsed()) cmd_construct(ring_args, out);
    if (enumerate->parsed()) cmd_enumerate(ring_args, method, out);
    if (table->parsed()) cmd_table(ring_args, lengths, format, out);
    if (verify->parsed()) return cmd_verify(max_ring_size, ring_args.json, timing, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace sdc::cli
