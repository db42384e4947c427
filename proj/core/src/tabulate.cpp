#include "glnq/tabulate.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "glnq/fock.hpp"
#include "glnq/serialize.hpp"

namespace glnq {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_escape(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string describe(const ColoredPattern& label, const Partition& mu) {
  return "label=" + pattern_to_json(label) + " mu=[" + partition_to_string(mu) + "]";
}

}  // namespace

std::string CharRecord::to_json() const {
  Json object;
  object["label"] = Json::parse(pattern_to_json(label));
  object["mu"] = mu.parts();
  object["value"] = Json::parse(ratfun_to_json(value));
  if (value_at_q.has_value()) object["value_at_q"] = rat_to_string(*value_at_q);
  return object.dump();
}

std::string CharRecord::to_csv_row() const {
  std::string row = csv_escape(pattern_to_json(label)) + "," +
                    csv_escape(partition_to_string(mu)) + "," + csv_escape(value.to_string());
  if (value_at_q.has_value()) row += "," + csv_escape(rat_to_string(*value_at_q));
  return row;
}

std::string CharRecord::csv_header() { return "label,mu,value"; }

std::vector<CharRecord> build_table(CharEngine& engine, const TableOptions& options) {
  if (options.n < 1) throw std::invalid_argument("table weight must be at least 1");
  const int max_degree = options.max_degree > 0 ? options.max_degree : options.n;

  std::vector<ColoredPattern> patterns = enumerate_patterns(options.n, max_degree);
  std::vector<Partition> classes = partitions_of(options.n);

  std::vector<CharRecord> records;
  records.reserve(patterns.size() * classes.size());
  for (const ColoredPattern& pattern : patterns) {
    for (const Partition& mu : classes) {
      records.push_back(CharRecord{pattern, mu, RatFun(), std::nullopt});
    }
  }

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (CharRecord& record : records) record.value = engine.value(record.label, record.mu);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t index = next.fetch_add(1);
        if (index >= records.size()) break;
        records[index].value = engine.value(records[index].label, records[index].mu);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  if (options.eval_q.has_value()) {
    for (CharRecord& record : records) record.value_at_q = record.value.eval(*options.eval_q);
  }
  return records;
}

void VerifyReport::record(bool pass, const std::string& what) {
  ok = ok && pass;
  lines.push_back(std::string(pass ? "ok   " : "FAIL ") + what);
}

VerifyReport verify_oracle(CharEngine& engine, int n) {
  VerifyReport report;
  for (const ColoredPattern& pattern : enumerate_patterns(n, n)) {
    for (const Partition& mu : partitions_of(n)) {
      RatFun lhs = engine.value(pattern, mu);
      RatFun rhs = character_matrix_element(pattern, mu);
      report.record(lhs == rhs, "oracle " + describe(pattern, mu) + " engine == expansion");
    }
  }
  return report;
}

VerifyReport verify_orthogonality(CharEngine& engine, int n, const Rat& q0) {
  VerifyReport report;
  std::vector<ColoredPattern> patterns = enumerate_patterns(n, n);
  std::vector<Partition> classes = partitions_of(n);

  std::vector<Rat> multiplicities;
  multiplicities.reserve(patterns.size());
  for (const ColoredPattern& pattern : patterns) {
    multiplicities.push_back(pattern_label_multiplicity(pattern).eval(q0));
  }
  std::vector<std::vector<Rat>> values(patterns.size());
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    for (const Partition& mu : classes) {
      values[p].push_back(engine.value(patterns[p], mu).eval(q0));
    }
  }

  for (std::size_t u = 0; u < classes.size(); ++u) {
    for (std::size_t v = u; v < classes.size(); ++v) {
      Rat sum(0);
      for (std::size_t p = 0; p < patterns.size(); ++p) {
        sum += multiplicities[p] * values[p][u] * values[p][v];
      }
      Rat expected = u == v ? centralizer_order(classes[u]).eval(q0) : Rat(0);
      report.record(sum == expected,
                    "orthogonality q=" + rat_to_string(q0) + " u=[" + partition_to_string(classes[u]) +
                        "] v=[" + partition_to_string(classes[v]) + "] sum=" + rat_to_string(sum) +
                        " expected=" + rat_to_string(expected));
    }
  }
  return report;
}

VerifyReport verify_closedforms(CharEngine& engine, int n) {
  VerifyReport report;
  std::vector<Partition> classes = partitions_of(n);

  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int m = n / d;
    ColoredPattern label({{d, Partition::single_row(m)}});
    for (const Partition& mu : classes) {
      report.record(single_row_value(m, d, mu) == engine.value(label, mu),
                    "single-row m=" + std::to_string(m) + " d=" + std::to_string(d) + " mu=[" +
                        partition_to_string(mu) + "]");
    }
    for (const Partition& lambda : partitions_of(m)) {
      ColoredPattern col_label({{d, lambda}});
      report.record(single_column_value(lambda, d, n) == engine.value(col_label, Partition::single_row(n)),
                    "single-column lambda=[" + partition_to_string(lambda) + "] d=" + std::to_string(d));
    }
  }

  for (const ColoredPattern& pattern : enumerate_patterns(n, n)) {
    bool all_rows = true;
    for (const PatternEntry& e : pattern.entries()) all_rows = all_rows && e.parts.length() == 1;
    if (all_rows) {
      std::vector<std::pair<int, int>> rows;
      for (const PatternEntry& e : pattern.entries()) rows.emplace_back(e.degree, e.parts.parts()[0]);
      for (const Partition& mu : classes) {
        report.record(multi_row_value(rows, mu) == engine.value(pattern, mu),
                      "multi-row " + describe(pattern, mu));
      }
    }
    for (int k = 1; k <= n; ++k) {
      std::vector<int> hook{k};
      hook.insert(hook.end(), static_cast<std::size_t>(n - k), 1);
      Partition hook_mu(std::move(hook));
      report.record(hook_value(pattern, k) == engine.value(pattern, hook_mu),
                    "hook k=" + std::to_string(k) + " " + describe(pattern, hook_mu));
    }
    RatFun deg = character_degree(pattern);
    bool deg_ok = deg == engine.value(pattern, Partition::single_column(n));
    auto form = deg.to_polynomial();
    deg_ok = deg_ok && form.is_polynomial && form.integer_coefficients;
    report.record(deg_ok, "degree polynomial label=" + pattern_to_json(pattern));
  }
  return report;
}

VerifyReport verify_steinberg(CharEngine& engine, int n) {
  VerifyReport report;
  ColoredPattern steinberg_label({{1, Partition::single_row(n)}});
  for (const Partition& mu : partitions_of(n)) {
    RatFun engine_value = engine.value(steinberg_label, mu);
    RatFun closed = steinberg_value(ClassType({{1, mu}}));
    RatFun expected = mu.is_column() ? RatFun::q_power(n * (n - 1) / 2) : RatFun();
    report.record(engine_value == closed && engine_value == expected,
                  "steinberg mu=[" + partition_to_string(mu) + "]");
  }
  return report;
}

CacheFile::CacheFile(std::string path) : path_(std::move(path)) {}

const char* CacheFile::header() { return "# glnq-chartab-cache v1"; }

std::size_t CacheFile::load_into(CharEngine& engine, std::ostream& diagnostics) {
  loaded_ = true;
  std::ifstream in(path_);
  if (!in.is_open()) {
    needs_rewrite_ = true;  // missing or unreadable: cold start
    return 0;
  }
  std::string line;
  if (!std::getline(in, line) || line != header()) {
    diagnostics << "warning: cache '" << path_ << "' has a foreign header; ignoring it\n";
    needs_rewrite_ = true;
    return 0;
  }
  std::size_t accepted = 0;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      diagnostics << "warning: cache '" << path_ << "' line " << line_number << " is corrupt; skipped\n";
      continue;
    }
    try {
      std::string key = line.substr(0, tab);
      RatFun value = ratfun_from_json(line.substr(tab + 1));
      engine.preload(key, value);
      keys_on_disk_.push_back(key);
      ++accepted;
    } catch (const std::exception& error) {
      diagnostics << "warning: cache '" << path_ << "' line " << line_number << " is corrupt ("
                  << error.what() << "); skipped\n";
    }
  }
  return accepted;
}

std::size_t CacheFile::store_from(const CharEngine& engine, std::ostream& diagnostics) {
  if (!loaded_) {
    std::ifstream probe(path_);
    needs_rewrite_ = !probe.is_open();
    if (probe.is_open()) {
      std::string line;
      needs_rewrite_ = !std::getline(probe, line) || line != header();
    }
  }
  std::set<std::string> known(keys_on_disk_.begin(), keys_on_disk_.end());
  std::map<std::string, RatFun> memo = engine.memo_snapshot();

  std::ofstream out;
  if (needs_rewrite_) {
    out.open(path_, std::ios::trunc);
    if (out.is_open()) out << header() << "\n";
  } else {
    out.open(path_, std::ios::app);
  }
  if (!out.is_open()) {
    diagnostics << "warning: cannot write cache '" << path_ << "'\n";
    return 0;
  }
  std::size_t written = 0;
  for (const auto& [key, value] : memo) {
    if (known.contains(key)) continue;
    out << key << '\t' << ratfun_to_json(value) << '\n';
    ++written;
  }
  return written;
}

}  // namespace glnq
