#include "cmrt/cli.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmrt/arith.hpp"
#include "cmrt/bounds.hpp"
#include "cmrt/curves.hpp"
#include "cmrt/errors.hpp"
#include "cmrt/fields.hpp"
#include "cmrt/forms.hpp"
#include "cmrt/rayclass.hpp"

#ifndef CMRT_DEFAULT_DATA_DIR
#define CMRT_DEFAULT_DATA_DIR ""
#endif

namespace cmrt::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kDiscTableFile = "discs_h_le_7.csv";
constexpr const char* kMaxTableFile = "watkins_max.csv";

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One command's result in both renderings.
struct Output {
  json inputs = json::object();
  json result = json::object();
  json provenance = json::array();
  std::vector<std::string> lines;
  std::string headline;

  void line(std::string text) { lines.push_back(std::move(text)); }
  void cite(std::string formula, std::string statement) {
    provenance.push_back({{"formula", std::move(formula)}, {"statement", std::move(statement)}});
  }
};

std::string str(std::int64_t v) { return std::to_string(v); }

Rational rational_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const domain_error& e) {
    throw usage_error(flag + ": " + e.what());
  }
}

std::string rational_json(const Rational& r) { return to_string(r); }

std::string curve_equation(const WeierstrassCurve& c) {
  std::string eq = "y^2 = x^3";
  auto term = [&](const Rational& coeff, const std::string& suffix) {
    if (coeff == 0) return;
    eq += coeff < 0 ? " - " : " + ";
    const Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
    if (suffix.empty() || mag != 1) eq += to_string(mag);
    eq += suffix;
  };
  term(c.a(), "x");
  term(c.b(), "");
  return eq;
}

json field_json(const QuadField& f) {
  return {{"d_K", f.d_K}, {"h_K", f.h_K}, {"w_K", f.w_K}};
}

std::string field_line(const QuadField& f) {
  return "K: d_K = " + str(f.d_K) + ", h_K = " + str(f.h_K) + ", w_K = " + str(f.w_K);
}

json verdict_json(const CriterionVerdict& v) {
  return {{"possible", v.possible},
          {"size_clause", v.size_clause},
          {"divides_clause", v.divides_clause},
          {"reason", v.reason}};
}

json witness_json(const BoundWitness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DiscriminantWitness>) {
          return {{"kind", "discriminant"}, {"prime", x.prime}, {"abs_d", x.abs_d}, {"h", x.h}};
        } else if constexpr (std::is_same_v<T, SizeWitness>) {
          return {{"kind", "size"}, {"prime", x.prime}, {"limit", x.limit}};
        } else {
          return {{"kind", "max_discriminant"},
                  {"prime", x.prime},
                  {"max_abs_d", x.max_abs_d},
                  {"h", x.h}};
        }
      },
      w);
}

std::string witness_text(const BoundWitness& w) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DiscriminantWitness>) {
          return str(x.prime) + " divides |d_K| = " + str(x.abs_d) + " (h_K = " + str(x.h) + ")";
        } else if constexpr (std::is_same_v<T, SizeWitness>) {
          return str(x.prime) + " is the largest prime <= " + str(x.limit);
        } else {
          return str(x.prime) + " is the largest prime <= " + str(x.max_abs_d) +
                 ", the largest |d_K| with h_K = " + str(x.h);
        }
      },
      w);
}

json bound_json(const BoundResult& r) {
  return {{"n", r.n},
          {"c_n", r.c_n},
          {"method", std::string(to_string(r.method))},
          {"witness", witness_json(r.witness)}};
}

void cite_bound(Output& o) {
  o.cite("degree bound",
         "ell <= (w_K/2)n + 1 <= 3n + 1 or ell | d_K, with h_K <= n; "
         "C(n) = max(largest prime <= 3n+1, largest prime factor of |d_K| over h_K <= n)");
}

// ---- commands --------------------------------------------------------------

Output cmd_kronecker(std::int64_t a, std::int64_t n) {
  Output o;
  o.inputs = {{"a", a}, {"n", n}};
  const int k = kronecker(a, n);
  o.result = {{"value", k}};
  o.line("(" + str(a) + "/" + str(n) + ") = " + str(k));
  o.headline = str(k);
  o.cite("Kronecker symbol", "(a/n) with the standard extension to even, zero and negative n");
  return o;
}

Output cmd_classnum_disc(std::int64_t d) {
  Output o;
  o.inputs = {{"disc", d}};
  const auto forms = enumerate_reduced_forms(d);
  const auto [d_K, f] = split_conductor(d);
  json form_list = json::array();
  std::string form_text;
  for (const auto& form : forms) {
    form_list.push_back({form.a, form.b, form.c});
    form_text += (form_text.empty() ? "" : " ") + ("(" + str(form.a) + "," + str(form.b) + "," +
                                                    str(form.c) + ")");
  }
  o.result = {{"disc", d},
              {"class_number", static_cast<std::int64_t>(forms.size())},
              {"fundamental", f == 1},
              {"d_K", d_K},
              {"conductor", f},
              {"forms", form_list}};
  o.line("h(" + str(d) + ") = " + str(static_cast<std::int64_t>(forms.size())));
  if (f != 1) o.line("order of conductor " + str(f) + " in the field of discriminant " + str(d_K));
  o.line("reduced forms: " + form_text);
  o.headline = str(static_cast<std::int64_t>(forms.size()));
  o.cite("class number by reduced forms",
         "h(d) = #{(a,b,c) primitive, |b| <= a <= c, b >= 0 if |b| = a or a = c, b^2 - 4ac = d}");
  return o;
}

Output cmd_classnum_scan(std::int64_t limit) {
  Output o;
  o.inputs = {{"scan", limit}};
  const FundamentalClassNumbers scan(limit);
  json fields = json::array();
  std::map<std::int64_t, std::int64_t> per_h;
  o.line("d h");
  for (std::int64_t abs_d : scan.discriminants()) {
    const std::int64_t h = scan.class_number(abs_d);
    fields.push_back({{"d", -abs_d}, {"h", h}});
    ++per_h[h];
    o.line(str(-abs_d) + " " + str(h));
  }
  json counts = json::object();
  for (const auto& [h, c] : per_h) counts[str(h)] = c;
  o.result = {{"limit", limit},
              {"fundamental_count", static_cast<std::int64_t>(fields.size())},
              {"count_by_h", counts},
              {"fields", fields}};
  o.headline = str(static_cast<std::int64_t>(fields.size()));
  o.cite("class number by reduced forms",
         "h(d) counts reduced forms; all forms of fundamental discriminant are primitive");
  return o;
}

Output cmd_order_classnum(std::int64_t d_K, std::int64_t f) {
  Output o;
  o.inputs = {{"d_K", d_K}, {"conductor", f}};
  const QuadOrder order = make_order(d_K, f);
  const std::int64_t by_formula = order_class_number(d_K, f);
  if (by_formula != order.h) {
    throw internal_error("order class number formula gives " + str(by_formula) +
                         " but form enumeration gives " + str(order.h));
  }
  o.result = {{"field", field_json(order.field)},
              {"conductor", f},
              {"disc", order.disc},
              {"unit_index", order_unit_index(order.field, f)},
              {"h", by_formula},
              {"h_enumeration", order.h}};
  o.line(field_line(order.field));
  o.line("order of conductor " + str(f) + ", discriminant " + str(order.disc));
  o.line("[O_K^x : O_f^x] = " + str(order_unit_index(order.field, f)));
  o.line("h(O_f) = " + str(by_formula));
  o.line("cross-check: class_number(" + str(order.disc) + ") = " + str(order.h));
  o.headline = str(by_formula);
  o.cite("order class number",
         "h(O_f) = h_K f prod_{p | f} (1 - (d_K/p)/p) / [O_K^x : O_f^x]");
  return o;
}

Output cmd_rayclass(std::int64_t d_K, std::int64_t ell, bool oracle) {
  Output o;
  o.inputs = {{"d_K", d_K}, {"ell", ell}, {"oracle", oracle}};
  require_odd_prime(ell);
  const QuadField field = make_field(d_K);
  const RayClassReport r = ray_class_number(field, ell);
  const std::int64_t general = ray_class_number_general(field, ell);
  if (general != r.h_m) {
    throw internal_error("general ray class formula gives " + str(general) + ", case formula " +
                         str(r.h_m));
  }
  o.result = {{"field", field_json(field)},
              {"ell", ell},
              {"split_type", std::string(to_string(r.split_type))},
              {"unit_index", r.unit_index},
              {"residue_unit_order", r.residue_unit_order},
              {"h_m", r.h_m},
              {"h_m_general", general}};
  o.line(field_line(field));
  o.line("ell = " + str(ell) + ": " + std::string(to_string(r.split_type)));
  o.line("[U : U_m] = " + str(r.unit_index));
  o.line("|(O_K/ell O_K)^x| = " + str(r.residue_unit_order));
  o.line("h_m = " + str(r.h_m));
  if (oracle) {
    const std::int64_t units = unit_index_oracle(field, ell);
    const std::int64_t residues = residue_unit_order_oracle(d_K, ell);
    const bool identity = r.h_m * units == field.h_K * residues;
    o.result["oracle"] = {{"unit_index", units},
                          {"residue_unit_order", residues},
                          {"identity_holds", identity}};
    o.line("oracle: [U : U_m] = " + str(units) + " by listing units");
    o.line("oracle: |(O_K/ell O_K)^x| = " + str(residues) + " by enumerating residues");
    o.line(std::string("oracle: h_m [U : U_m] = h_K |(O_K/ell O_K)^x| ") +
           (identity ? "holds" : "FAILS"));
  }
  o.headline = str(r.h_m);
  o.cite("ray class group order",
         "h_m = h_K [U : U_m]^-1 N(m) prod_{p | m} (1 - N(p)^-1)");
  o.cite("modulus ell O_K",
         "h_m = h_K [U : U_m]^-1 ell(ell-1), (ell-1)^2, (ell+1)(ell-1) for ramified, split, inert");
  return o;
}

Output cmd_curve(const Rational& a, const Rational& b, std::int64_t degree,
                 std::optional<std::int64_t> ell) {
  Output o;
  o.inputs = {{"a", rational_json(a)}, {"b", rational_json(b)}, {"degree", degree}};
  if (ell) o.inputs["ell"] = *ell;
  const WeierstrassCurve curve(a, b);
  const Rational j = curve.j();

  std::optional<CurveReport> report;
  if (ell) report = inspect_curve(a, b, degree, *ell);
  const auto two_torsion = report ? report->two_torsion_x : curve.rational_two_torsion_x();
  const auto cm = report ? report->cm : identify_cm(j);

  json torsion = json::array();
  std::string torsion_text;
  for (const auto& x : two_torsion) {
    torsion.push_back(rational_json(x));
    torsion_text += (torsion_text.empty() ? "" : ", ") + to_string(x);
  }
  o.result = {{"equation", curve_equation(curve)},
              {"g2", rational_json(curve.g2())},
              {"g3", rational_json(curve.g3())},
              {"delta", rational_json(curve.delta())},
              {"j", rational_json(j)},
              {"two_torsion_x", torsion}};
  o.line("curve: " + curve_equation(curve));
  o.line("g2 = " + to_string(curve.g2()) + ", g3 = " + to_string(curve.g3()) +
         ", Delta = " + to_string(curve.delta()));
  o.line("j = " + to_string(j));
  o.line("rational 2-torsion x: " + (torsion_text.empty() ? std::string("none") : torsion_text));
  o.cite("j-invariant", "j = 1728 g2^3 / Delta, Delta = g2^3 - 27 g3^2, g2 = -4a, g3 = -4b");
  o.cite("CM identification", "j = j((-b + sqrt d)/2) for the class-number-one order of discriminant d");

  if (!cm) {
    o.result["cm"] = nullptr;
    o.line("CM: none");
  } else {
    const QuadField field = make_field(cm->d_K);
    o.result["cm"] = {{"d_K", cm->d_K}, {"f", cm->f}, {"order_disc", cm->order_disc}};
    o.result["field"] = field_json(field);
    o.line("CM: order of discriminant " + str(cm->order_disc) + " (d_K = " + str(cm->d_K) +
           ", f = " + str(cm->f) + "), w_K = " + str(field.w_K));
  }

  if (report && report->criterion) {
    o.result["prop2_divisor"] = *report->prop2_divisor;
    o.result["criterion"] = verdict_json(*report->criterion);
    o.line("[F(E[ℓ]):F] divides " + str(*report->prop2_divisor) + " (ell = " + str(*ell) + ")");
    o.line(std::string("necessary condition (n = ") + str(degree) + ", ell = " + str(*ell) +
           "): " + (report->criterion->possible ? "true" : "false") + " via \"" +
           report->criterion->reason + "\"");
    if (report->odd_degree_criterion) {
      o.result["odd_degree_criterion"] = verdict_json(*report->odd_degree_criterion);
      o.line(std::string("odd-degree condition: ") +
             (report->odd_degree_criterion->possible ? "true" : "false") + " via \"" +
             report->odd_degree_criterion->reason + "\"");
    }
    o.cite("torsion degree divisor",
           "[F(E[ell]):F] | 2(ell-1)^2, 2(ell^2-1), 2(ell^2-ell) as (d_K/ell) = 1, -1, 0");
    o.cite("ell-powered necessary condition",
           "[F(E[ell]):F(mu_ell)] ell-powered implies ell <= (w_K/2)n + 1 or ell | d_K; "
           "for odd n, ell | d_K");
  } else if (report) {
    o.result["criterion"] = nullptr;
    o.line("criteria: not applicable");
  }
  if (report) {
    o.result["notes"] = report->notes;
    for (const auto& note : report->notes) o.line("note: " + note);
  }
  o.headline = to_string(j);
  return o;
}

Output cmd_weber(const Rational& a, const Rational& b, const Rational& x, const Rational& y) {
  Output o;
  o.inputs = {{"a", rational_json(a)},
              {"b", rational_json(b)},
              {"x", rational_json(x)},
              {"y", rational_json(y)}};
  const WeierstrassCurve curve(a, b);
  const CurvePoint p{x, y};
  const QuadraticValue value = weber(curve, p);
  const char* branch = curve.a() == 0 ? "j = 0" : curve.b() == 0 ? "j = 1728" : "generic";
  o.result = {{"j", rational_json(curve.j())}, {"case", branch}, {"value", value.str()}};
  o.line("curve: " + curve_equation(curve));
  o.line("j = " + to_string(curve.j()) + " (" + branch + ")");
  o.line("weber(" + to_string(x) + ", " + to_string(y) + ") = " + value.str());
  o.headline = value.str();
  o.cite("Weber function",
         "(g2 g3/Delta) x if j != 0, 1728; (g2^2/Delta) x^2 if j = 1728; (g3/Delta) x^3 if j = 0");
  return o;
}

Output cmd_bound(std::int64_t degree, bool rough, const std::string& data,
                 const std::string& maxdata, bool per_field) {
  Output o;
  o.inputs = {{"degree", degree}, {"rough", rough}};
  if (per_field) o.inputs["per_field_units"] = true;
  BoundResult r = rough ? rough_bound(degree, load_max_table(resolve_data_file(kMaxTableFile, maxdata)))
                        : exact_bound(degree, load_table(resolve_data_file(kDiscTableFile, data)),
                                      BoundOptions{per_field});
  o.result = bound_json(r);
  o.line("C(" + str(r.n) + ") = " + str(r.c_n) + " (" + std::string(to_string(r.method)) + ")");
  o.line("witness: " + witness_text(r.witness));
  o.headline = str(r.c_n);
  cite_bound(o);
  if (rough) {
    o.cite("rough bound",
           "C(n) <= largest prime <= max |d_K| over h_K <= n, from the largest fundamental "
           "discriminant of each class number up to 100");
  }
  return o;
}

Output cmd_table(std::int64_t max_degree, const std::string& data) {
  Output o;
  o.inputs = {{"max_degree", max_degree}};
  const DiscriminantTable table = load_table(resolve_data_file(kDiscTableFile, data));
  const auto results = bound_table(max_degree, table);

  json rows = json::array();
  for (const auto& r : results) rows.push_back(bound_json(r));
  json groups = json::array();
  o.line("n       C(n)");
  std::string headline;
  for (std::size_t i = 0; i < results.size();) {
    std::size_t k = i;
    json degrees = json::array();
    std::string label;
    while (k < results.size() && results[k].c_n == results[i].c_n) {
      degrees.push_back(results[k].n);
      label += (label.empty() ? "" : ", ") + str(results[k].n);
      ++k;
    }
    groups.push_back({{"degrees", degrees}, {"c_n", results[i].c_n}});
    o.line(label + std::string(label.size() < 8 ? 8 - label.size() : 1, ' ') + str(results[i].c_n));
    headline += (headline.empty() ? "" : " ") + str(results[i].c_n);
    i = k;
  }
  for (const auto& r : results) o.line("witness n = " + str(r.n) + ": " + witness_text(r.witness));
  o.line("verified " + str(static_cast<std::int64_t>(table.rows.size())) +
         " listed discriminants by form enumeration; list complete through h = " +
         str(table.complete_through));
  o.result = {{"rows", rows},
              {"groups", groups},
              {"verified_rows", static_cast<std::int64_t>(table.rows.size())},
              {"complete_through", table.complete_through}};
  o.headline = headline;
  cite_bound(o);
  return o;
}

Output cmd_verify_data(std::int64_t scan_limit, const std::string& data, const std::string& maxdata) {
  Output o;
  o.inputs = {{"scan_limit", scan_limit}};
  const DiscriminantTable table = load_table(resolve_data_file(kDiscTableFile, data));
  const MaxDiscTable max_table = load_max_table(resolve_data_file(kMaxTableFile, maxdata));
  const CompletenessReport report = verify_completeness(table, scan_limit);
  verify_max_table_against_scan(max_table, scan_limit);

  json per_h = json::object();
  o.line(std::string(kDiscTableFile) + ": " + str(static_cast<std::int64_t>(table.rows.size())) +
         " rows verified by form enumeration, complete through h = " + str(table.complete_through));
  o.line(std::string(kMaxTableFile) + ": " + str(static_cast<std::int64_t>(max_table.rows.size())) +
         " rows verified by form enumeration");
  o.line("scanned " + str(report.fundamental_scanned) + " fundamental discriminants with |d| <= " +
         str(scan_limit));
  for (std::size_t h = 1; h < report.fields_per_h.size(); ++h) {
    per_h[str(static_cast<std::int64_t>(h))] = report.fields_per_h[h];
    o.line("  h = " + str(static_cast<std::int64_t>(h)) + ": " + str(report.fields_per_h[h]) +
           " fields, all listed");
  }
  o.line("maximal discriminants consistent with the scan up to " + str(scan_limit));
  o.line("note: " + report.note);
  o.result = {{"table_rows", static_cast<std::int64_t>(table.rows.size())},
              {"max_table_rows", static_cast<std::int64_t>(max_table.rows.size())},
              {"complete_through", table.complete_through},
              {"fundamental_scanned", report.fundamental_scanned},
              {"fields_per_h", per_h},
              {"omissions", json::array()},
              {"note", report.note}};
  o.headline = "ok";
  o.cite("class number by reduced forms", "every listed row re-derived by enumeration");
  return o;
}

void emit(const std::string& command, const Output& o, bool as_json, bool quiet, std::ostream& out) {
  if (as_json) {
    json doc = {{"command", command},
                {"inputs", o.inputs},
                {"result", o.result},
                {"provenance", o.provenance}};
    out << doc.dump(2) << "\n";
  } else if (quiet) {
    out << o.headline << "\n";
  } else {
    for (const auto& l : o.lines) out << l << "\n";
  }
}

}  // namespace

std::filesystem::path resolve_data_file(const std::string& name, const std::string& override_path) {
  namespace fs = std::filesystem;
  if (!override_path.empty()) return override_path;
  std::vector<fs::path> candidates;
  if (const char* env = std::getenv("CMRT_DATA_DIR"); env != nullptr && *env != '\0') {
    candidates.push_back(fs::path(env) / name);
  }
  std::error_code ec;
  const fs::path exe = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    candidates.push_back(exe.parent_path() / "data" / name);
    candidates.push_back(exe.parent_path() / ".." / "share" / "cmrt" / name);
  }
  if (std::string(CMRT_DEFAULT_DATA_DIR).size() > 0) {
    candidates.push_back(fs::path(CMRT_DEFAULT_DATA_DIR) / name);
  }
  for (const auto& c : candidates) {
    if (fs::exists(c, ec)) return c;
  }
  throw data_error("cannot locate data file " + name + " (set CMRT_DATA_DIR)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Class numbers, ray class groups and CM prime bounds", "cmrt"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  bool quiet = false;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_flag("--quiet", quiet, "Print only the headline value");

  std::int64_t a_int = 0, n_int = 0;
  auto* kron = app.add_subcommand("kronecker", "Kronecker symbol (a/n)");
  kron->add_option("a", a_int)->required();
  kron->add_option("n", n_int)->required();

  std::optional<std::int64_t> disc, scan;
  auto* classnum = app.add_subcommand("classnum", "Class number by reduced forms");
  auto* disc_opt = classnum->add_option("--disc", disc, "Negative discriminant");
  auto* scan_opt = classnum->add_option("--scan", scan, "List all fundamental -d with d <= limit");
  disc_opt->excludes(scan_opt);
  classnum->require_option(1);

  std::int64_t dk = 0, conductor = 1, ell = 0;
  auto* order = app.add_subcommand("order-classnum", "Class number of the order of conductor f");
  order->add_option("--dk", dk)->required();
  order->add_option("--conductor", conductor)->required();

  bool with_oracle = false;
  auto* ray = app.add_subcommand("rayclass", "Ray class group order for the modulus ell O_K");
  ray->add_option("--dk", dk)->required();
  ray->add_option("--ell", ell)->required();
  ray->add_flag("--oracle", with_oracle, "Also run the residue-ring enumeration");

  std::string a_text, b_text, x_text, y_text;
  std::int64_t degree = 1;
  std::optional<std::int64_t> curve_ell;
  auto* curve = app.add_subcommand("curve", "Inspect y^2 = x^3 + ax + b");
  curve->add_option("--a", a_text)->required();
  curve->add_option("--b", b_text)->required();
  curve->add_option("--degree", degree);
  curve->add_option("--ell", curve_ell);

  auto* weber_cmd = app.add_subcommand("weber", "Weber function at a rational point");
  weber_cmd->add_option("--a", a_text)->required();
  weber_cmd->add_option("--b", b_text)->required();
  weber_cmd->add_option("--x", x_text)->required();
  weber_cmd->add_option("--y", y_text)->required();

  bool rough = false, per_field = false;
  std::string data_path, maxdata_path;
  auto* bound = app.add_subcommand("bound", "Prime bound C(n) for degree n");
  bound->add_option("--degree", degree)->required();
  bound->add_flag("--rough", rough, "Use the largest-discriminant table (n <= 100)");
  bound->add_option("--data", data_path, "Discriminant table CSV");
  bound->add_option("--maxdata", maxdata_path, "Largest-discriminant table CSV");
  bound->add_flag("--per-field-units", per_field, "Use (w_K/2)n+1 per listed field");

  std::int64_t max_degree = kExactBoundMaxDegree;
  auto* table = app.add_subcommand("table", "Bounds C(n) for n = 1..max-degree");
  table->add_option("--max-degree", max_degree);
  table->add_option("--data", data_path, "Discriminant table CSV");

  std::int64_t scan_limit = 10000;
  auto* verify = app.add_subcommand("verify-data", "Re-verify the bundled data files");
  verify->add_option("--scan-limit", scan_limit);
  verify->add_option("--data", data_path, "Discriminant table CSV");
  verify->add_option("--maxdata", maxdata_path, "Largest-discriminant table CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Output o;
    CLI::App* sub = app.get_subcommands().front();
    if (sub == kron) {
      o = cmd_kronecker(a_int, n_int);
    } else if (sub == classnum) {
      o = disc ? cmd_classnum_disc(*disc) : cmd_classnum_scan(*scan);
    } else if (sub == order) {
      o = cmd_order_classnum(dk, conductor);
    } else if (sub == ray) {
      o = cmd_rayclass(dk, ell, with_oracle);
    } else if (sub == curve) {
      o = cmd_curve(rational_arg("--a", a_text), rational_arg("--b", b_text), degree, curve_ell);
    } else if (sub == weber_cmd) {
      o = cmd_weber(rational_arg("--a", a_text), rational_arg("--b", b_text),
                    rational_arg("--x", x_text), rational_arg("--y", y_text));
    } else if (sub == bound) {
      o = cmd_bound(degree, rough, data_path, maxdata_path, per_field);
    } else if (sub == table) {
      o = cmd_table(max_degree, data_path);
    } else if (sub == verify) {
      o = cmd_verify_data(scan_limit, data_path, maxdata_path);
    }
    emit(sub->get_name(), o, as_json, quiet, out);
    return kOk;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const data_error& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace cmrt::cli
