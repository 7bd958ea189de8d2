#include "cmrt/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "cmrt/arith.hpp"
#include "cmrt/errors.hpp"
#include "cmrt/fields.hpp"
#include "cmrt/forms.hpp"

namespace cmrt {

namespace {

struct CsvRow {
  std::int64_t first;
  std::int64_t second;
  std::size_t line;
};

struct CsvContents {
  std::vector<CsvRow> rows;
  std::optional<std::int64_t> complete_through;
};

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

std::optional<std::int64_t> parse_positive(std::string_view s) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || value <= 0) return std::nullopt;
  return value;
}

CsvContents read_csv(std::istream& in, std::string_view source, std::string_view header) {
  CsvContents out;
  bool seen_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view key = "# complete_through=";
      if (line.rfind(key, 0) == 0) {
        out.complete_through = parse_positive(std::string_view(line).substr(key.size()));
        if (!out.complete_through) {
          throw data_error(where(source, line_no) + ": malformed complete_through comment");
        }
      }
      continue;
    }
    if (!seen_header) {
      if (line != header) {
        throw data_error(where(source, line_no) + ": expected header '" + std::string(header) +
                         "', got '" + line + "'");
      }
      seen_header = true;
      continue;
    }
    const auto comma = line.find(',');
    const std::string_view text(line);
    const auto first = comma == std::string::npos ? std::nullopt : parse_positive(text.substr(0, comma));
    const auto second =
        comma == std::string::npos ? std::nullopt : parse_positive(text.substr(comma + 1));
    if (!first || !second) {
      throw data_error(where(source, line_no) + ": malformed row '" + line + "'");
    }
    out.rows.push_back({*first, *second, line_no});
  }
  if (!seen_header) throw data_error(std::string(source) + ": empty table (no header)");
  if (out.rows.empty()) throw data_error(std::string(source) + ": table has no rows");
  return out;
}

/// Runs check on every row across worker threads; reports the failure with
/// the smallest index so the error is the same on every run.
template <class Check>
void verify_rows(const std::vector<CsvRow>& rows, Check check) {
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::future<std::optional<std::pair<std::size_t, std::string>>>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&rows, &check, w, workers]() {
      std::optional<std::pair<std::size_t, std::string>> first_failure;
      for (std::size_t i = w; i < rows.size(); i += workers) {
        if (auto message = check(rows[i])) {
          first_failure = std::make_pair(i, *message);
          break;
        }
      }
      return first_failure;
    }));
  }
  std::optional<std::pair<std::size_t, std::string>> failure;
  for (auto& job : jobs) {
    auto result = job.get();
    if (result && (!failure || result->first < failure->first)) failure = result;
  }
  if (failure) throw data_error(failure->second);
}

std::optional<std::string> check_class_number(const CsvRow& row, std::string_view source) {
  const std::int64_t d = -row.second;
  if (!is_fundamental_discriminant(d)) {
    return where(source, row.line) + ": " + std::to_string(d) + " is not a fundamental discriminant";
  }
  const std::int64_t h = class_number(d);
  if (h != row.first) {
    return where(source, row.line) + ": row (" + std::to_string(row.first) + ", " +
           std::to_string(row.second) + ") fails verification: class_number(" +
           std::to_string(d) + ") = " + std::to_string(h);
  }
  return std::nullopt;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open data file " + path.string());
  return in;
}

}  // namespace

DiscriminantTable parse_table(std::istream& in, std::string_view source) {
  const CsvContents csv = read_csv(in, source, "h,abs_d");
  if (!csv.complete_through) {
    throw data_error(std::string(source) + ": missing '# complete_through=N' comment");
  }
  verify_rows(csv.rows, [source](const CsvRow& r) { return check_class_number(r, source); });

  DiscriminantTable table;
  table.complete_through = *csv.complete_through;
  for (const CsvRow& r : csv.rows) table.rows.push_back({r.first, r.second});
  std::sort(table.rows.begin(), table.rows.end());
  const auto dup = std::adjacent_find(table.rows.begin(), table.rows.end());
  if (dup != table.rows.end()) {
    throw data_error(std::string(source) + ": duplicate row (" + std::to_string(dup->h) + ", " +
                     std::to_string(dup->abs_d) + ")");
  }
  return table;
}

DiscriminantTable load_table(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_table(in, path.filename().string());
}

std::string serialize_table(const DiscriminantTable& table) {
  std::ostringstream out;
  out << "# complete_through=" << table.complete_through << "\n";
  out << "h,abs_d\n";
  for (const auto& row : table.rows) out << row.h << "," << row.abs_d << "\n";
  return out.str();
}

std::int64_t MaxDiscTable::max_abs_d(std::int64_t h) const {
  for (const auto& row : rows) {
    if (row.h == h) return row.max_abs_d;
  }
  throw domain_error("no maximal discriminant recorded for h = " + std::to_string(h));
}

MaxDiscTable parse_max_table(std::istream& in, std::string_view source) {
  const CsvContents csv = read_csv(in, source, "h,max_abs_d");
  std::map<std::int64_t, const CsvRow*> by_h;
  for (const CsvRow& r : csv.rows) {
    if (r.first > kMaxTableClassNumber) {
      throw data_error(where(source, r.line) + ": class number " + std::to_string(r.first) +
                       " outside 1.." + std::to_string(kMaxTableClassNumber));
    }
    if (!by_h.emplace(r.first, &r).second) {
      throw data_error(where(source, r.line) + ": duplicate row for h = " + std::to_string(r.first));
    }
  }
  for (std::int64_t h = 1; h <= kMaxTableClassNumber; ++h) {
    if (!by_h.contains(h)) throw data_error(std::string(source) + ": no row for h = " + std::to_string(h));
  }
  verify_rows(csv.rows, [source](const CsvRow& r) { return check_class_number(r, source); });

  MaxDiscTable table;
  for (const auto& [h, row] : by_h) table.rows.push_back({h, row->second});
  return table;
}

MaxDiscTable load_max_table(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_max_table(in, path.filename().string());
}

std::string serialize_max_table(const MaxDiscTable& table) {
  std::ostringstream out;
  out << "h,max_abs_d\n";
  for (const auto& row : table.rows) out << row.h << "," << row.max_abs_d << "\n";
  return out.str();
}

CompletenessReport verify_completeness(const DiscriminantTable& table, std::int64_t scan_limit) {
  std::int64_t largest = 0;
  for (const auto& row : table.rows) largest = std::max(largest, row.abs_d);
  if (scan_limit < largest || scan_limit < 3) {
    throw domain_error("scan limit " + std::to_string(scan_limit) +
                       " is below the largest listed |d| = " + std::to_string(largest));
  }

  const FundamentalClassNumbers scan(scan_limit);
  CompletenessReport report{scan_limit, table.complete_through, 0,
                            std::vector<std::int64_t>(table.complete_through + 1, 0), {}};
  std::vector<std::string> missing;
  for (std::int64_t abs_d : scan.discriminants()) {
    ++report.fundamental_scanned;
    const std::int64_t h = scan.class_number(abs_d);
    if (h > table.complete_through) continue;
    ++report.fields_per_h[h];
    if (!std::binary_search(table.rows.begin(), table.rows.end(), DiscriminantRow{h, abs_d})) {
      missing.push_back("-" + std::to_string(abs_d) + " (h = " + std::to_string(h) + ")");
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw data_error("table omits fundamental discriminants: " + list);
  }
  report.note = "every field with h <= " + std::to_string(table.complete_through) +
                " and |d| <= " + std::to_string(scan_limit) +
                " is listed; completeness beyond the scan limit rests on the published "
                "solutions of the class number problem";
  return report;
}

void verify_max_table_against_scan(const MaxDiscTable& table, std::int64_t scan_limit) {
  const FundamentalClassNumbers scan(scan_limit);
  std::vector<std::int64_t> largest_seen(kMaxTableClassNumber + 1, 0);
  for (std::int64_t abs_d : scan.discriminants()) {
    const std::int64_t h = scan.class_number(abs_d);
    if (h <= kMaxTableClassNumber) largest_seen[h] = abs_d;
  }
  for (const auto& row : table.rows) {
    const std::int64_t seen = largest_seen[row.h];
    if (seen > row.max_abs_d) {
      throw data_error("h = " + std::to_string(row.h) + ": found -" + std::to_string(seen) +
                       " beyond recorded maximum " + std::to_string(row.max_abs_d));
    }
    if (row.max_abs_d <= scan_limit && seen != row.max_abs_d) {
      throw data_error("h = " + std::to_string(row.h) + ": largest |d| up to the scan limit is " +
                       std::to_string(seen) + ", table records " + std::to_string(row.max_abs_d));
    }
  }
}

std::string_view to_string(BoundMethod m) {
  return m == BoundMethod::Exact ? "Exact" : "Rough";
}

BoundResult exact_bound(std::int64_t n, const DiscriminantTable& table, BoundOptions options) {
  if (n < 1 || n > kExactBoundMaxDegree) {
    throw domain_error("exact bounds are available for degrees 1.." +
                       std::to_string(kExactBoundMaxDegree) + ", got " + std::to_string(n));
  }
  if (n > table.complete_through) {
    throw data_error("discriminant table is complete only through h = " +
                     std::to_string(table.complete_through) + "; degree " + std::to_string(n) +
                     " needs h <= " + std::to_string(n));
  }

  std::int64_t size_limit = 3 * n + 1;
  if (options.per_field_units) {
    size_limit = 2;
    for (const auto& row : table.rows) {
      if (row.h > n) continue;
      size_limit = std::max(size_limit, max_conductor_prime_bound(n, roots_of_unity(-row.abs_d)));
    }
  }
  const SizeWitness size{largest_prime_at_most(size_limit), size_limit};

  std::optional<DiscriminantWitness> best;
  for (const auto& row : table.rows) {
    if (row.h > n) continue;
    const std::int64_t p = largest_prime_factor(row.abs_d);
    if (!best || p > best->prime) best = DiscriminantWitness{p, row.abs_d, row.h};
  }

  if (best && best->prime >= size.prime) {
    return BoundResult{n, best->prime, *best, BoundMethod::Exact};
  }
  return BoundResult{n, size.prime, size, BoundMethod::Exact};
}

BoundResult rough_bound(std::int64_t n, const MaxDiscTable& table) {
  if (n < 1 || n > kMaxTableClassNumber) {
    throw domain_error("rough bounds are available for degrees 1.." +
                       std::to_string(kMaxTableClassNumber) + ", got " + std::to_string(n));
  }
  RoughWitness rough{0, 0, 0};
  for (std::int64_t h = 1; h <= n; ++h) {
    const std::int64_t m = table.max_abs_d(h);
    if (m > rough.max_abs_d) rough = {0, m, h};
  }
  rough.prime = largest_prime_at_most(rough.max_abs_d);
  const SizeWitness size{largest_prime_at_most(3 * n + 1), 3 * n + 1};
  if (rough.prime >= size.prime) return BoundResult{n, rough.prime, rough, BoundMethod::Rough};
  return BoundResult{n, size.prime, size, BoundMethod::Rough};
}

std::vector<BoundResult> bound_table(std::int64_t n_max, const DiscriminantTable& table,
                                     BoundOptions options) {
  if (n_max < 1 || n_max > kExactBoundMaxDegree) {
    throw domain_error("bound table covers degrees 1.." + std::to_string(kExactBoundMaxDegree) +
                       ", got " + std::to_string(n_max));
  }
  std::vector<BoundResult> out;
  for (std::int64_t n = 1; n <= n_max; ++n) out.push_back(exact_bound(n, table, options));
  return out;
}

}  // namespace cmrt
