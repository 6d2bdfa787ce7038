#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "wlp/wlp.hpp"

namespace wlp::cli {

namespace {

using json = nlohmann::ordered_json;

// Tabular view of a payload, used for the csv and text formats.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Result {
  json payload = json::object();
  Table table;
  int status = kOk;
};

template <typename T>
std::string num(const T& v) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return to_string(v);
  } else {
    return std::to_string(v);
  }
}

std::string flag(bool b) { return b ? "true" : "false"; }

json params_json(const MaciParams& p) {
  return json{{"alpha", num(p.alpha())}, {"beta", num(p.beta())}, {"gamma", num(p.gamma())}, {"t", num(p.t())}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

void write_csv(std::ostream& os, const Table& t) {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) os << ',';
      os << csv_field(cells[i]);
    }
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void write_text(std::ostream& os, const std::string& command, const Result& r,
                std::optional<double> elapsed_ms) {
  os << "lefschetz " << command << " (schema " << kSchemaVersion << ")\n";
  for (const auto& [key, value] : r.payload.items()) {
    if (value.is_string()) {
      os << "  " << key << ": " << value.get<std::string>() << '\n';
    } else if (value.is_boolean() || value.is_null()) {
      os << "  " << key << ": " << value.dump() << '\n';
    }
  }
  if (!r.table.header.empty()) {
    std::vector<std::size_t> width(r.table.header.size(), 0);
    auto measure = [&width](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    };
    measure(r.table.header);
    for (const auto& row : r.table.rows) measure(row);
    auto line = [&](const std::vector<std::string>& cells) {
      os << ' ';
      for (std::size_t i = 0; i < cells.size(); ++i) os << ' ' << std::setw(static_cast<int>(width[i])) << cells[i];
      os << '\n';
    };
    os << '\n';
    line(r.table.header);
    for (const auto& row : r.table.rows) line(row);
  }
  if (elapsed_ms) os << "\n  elapsed_ms: " << std::fixed << std::setprecision(3) << *elapsed_ms << '\n';
}

// --- subcommands -----------------------------------------------------------

Result cmd_hilbert(const MaciParams& p) {
  const HilbertFunction h = hilbert_from_resolution(p);
  const HilbertFunction oracle = hilbert_oracle(p);
  const UnimodalityReport u = unimodality(h);

  Result r;
  r.payload["parameters"] = params_json(p);
  r.payload["socle_degree"] = num(h.socle_degree());
  r.payload["resolution_minimal"] = free_resolution(p).minimal;
  r.payload["oracle_agrees"] = h == oracle;
  json values = json::array();
  for (auto v : h.values) values.push_back(num(v));
  r.payload["values"] = values;
  json uj{{"peaked_strictly_unimodal", u.peaked_strictly_unimodal},
          {"peak_start", num(u.peak_start)},
          {"peak_length", num(u.peak_length)},
          {"first_violation_degree", u.first_violation_degree ? json(num(*u.first_violation_degree)) : json(nullptr)}};
  r.payload["unimodality"] = uj;

  r.table.header = {"degree", "value"};
  for (std::size_t d = 0; d < h.values.size(); ++d) r.table.rows.push_back({num(d), num(h.values[d])});
  if (h != oracle) {
    r.status = kInternalError;
  }
  return r;
}

Result cmd_matrix(const MaciParams& p) {
  const MatrixM m = build_matrix_M(p);
  Result r;
  r.payload["parameters"] = params_json(p);
  r.payload["size"] = num(m.size());
  r.payload["top_rows"] = num(m.top_rows);
  r.payload["bottom_rows"] = num(m.bottom_rows);
  json entries = json::array();
  r.table.header = {"row", "column", "block", "entry"};
  for (std::size_t i = 0; i < m.entries.rows(); ++i) {
    json row = json::array();
    const std::string block = static_cast<int>(i) < m.top_rows ? "top" : "bottom";
    for (std::size_t j = 0; j < m.entries.cols(); ++j) {
      row.push_back(num(m.entries(i, j)));
      r.table.rows.push_back({num(i + 1), num(j + 1), block, num(m.entries(i, j))});
    }
    entries.push_back(row);
  }
  r.payload["entries"] = entries;
  return r;
}

Result cmd_det(const MaciParams& p) {
  const MatrixM m = build_matrix_M(p);
  const BigInt det = det_exact(m.entries);
  Result r;
  r.payload["parameters"] = params_json(p);
  r.payload["size"] = num(m.size());
  r.payload["determinant"] = num(det);

  json closed = json::object();
  if (p.alpha() == p.beta() && p.beta() == p.gamma() && p.alpha() <= 3 && p.t() >= p.alpha()) {
    closed["diagonal"] = num(det_closed_diag(p));
  }
  if (gamma_max_applies(p)) closed["gamma_maximal"] = num(det_closed_gamma_max(p));
  if (t_min_applies(p)) closed["t_minimal"] = num(det_closed_t_min(p));
  bool closed_agree = true;
  for (const auto& [k, v] : closed.items()) closed_agree = closed_agree && v.get<std::string>() == num(det);
  r.payload["closed_forms"] = closed;
  r.payload["closed_forms_agree"] = closed_agree;
  if (gamma_max_applies(p) || t_min_applies(p)) {
    r.payload["char_bound"] = num(char_bound(p));
  }

  r.table.header = {"alpha", "beta", "gamma", "t", "size", "determinant"};
  r.table.rows.push_back({num(p.alpha()), num(p.beta()), num(p.gamma()), num(p.t()), num(m.size()), num(det)});
  if (!closed_agree) r.status = kInternalError;
  return r;
}

Result cmd_wlp(const MaciParams& p, const std::vector<Characteristic>& chars) {
  Result r;
  r.payload["parameters"] = params_json(p);
  r.payload["case"] = std::string(to_string(classify(p)));
  const auto violation = matrix_criterion_violation(p);
  r.payload["determinant_criterion"] = violation ? json("inapplicable: " + *violation) : json("applicable");

  std::optional<BigInt> det;
  if (!violation) det = det_M(p);

  r.table.header = {"characteristic", "determinant_holds", "direct_holds", "agreement", "determinant",
                    "first_deficit_degree"};
  json verdicts = json::array();
  bool all_agree = true;
  for (const Characteristic c : chars) {
    const WlpVerdict direct = wlp_direct(p, c);
    json v;
    v["characteristic"] = num(c.value());
    std::string det_cell, holds_cell, agree_cell;
    if (det) {
      const WlpVerdict byDet = wlp_by_determinant(p, c);
      const bool agree = byDet.holds == direct.holds;
      all_agree = all_agree && agree;
      v["determinant"] = json{{"method", std::string(to_string(byDet.method))},
                              {"holds", byDet.holds},
                              {"determinant", num(*byDet.determinant())}};
      v["agreement"] = agree;
      det_cell = num(*det);
      holds_cell = flag(byDet.holds);
      agree_cell = flag(agree);
    } else {
      v["determinant"] = nullptr;
      v["agreement"] = nullptr;
    }
    json profile = json::array();
    for (const auto& rec : direct.rank_profile()->records) {
      profile.push_back({{"degree", num(rec.degree)},
                         {"source_dim", num(rec.source_dim)},
                         {"target_dim", num(rec.target_dim)},
                         {"rank", num(rec.rank)}});
    }
    const auto deficit = direct.first_deficit_degree();
    v["direct"] = json{{"method", std::string(to_string(direct.method))},
                       {"holds", direct.holds},
                       {"first_deficit_degree", deficit ? json(num(*deficit)) : json(nullptr)},
                       {"rank_profile", profile}};
    verdicts.push_back(v);
    r.table.rows.push_back(
        {num(c.value()), holds_cell, flag(direct.holds), agree_cell, det_cell, deficit ? num(*deficit) : ""});
  }
  r.payload["verdicts"] = verdicts;
  r.payload["agreement"] = all_agree;
  if (!all_agree) r.status = kInternalError;
  return r;
}

Result cmd_primes(const MaciParams& p, std::uint64_t bound) {
  const FailingCharacteristics fc = failing_characteristics(p, bound);
  Result r;
  r.payload["parameters"] = params_json(p);
  r.payload["bound"] = num(bound);
  r.payload["determinant"] = num(fc.determinant);
  r.payload["fails_in_every_characteristic"] = fc.fails_in_every_characteristic();
  r.table.header = {"kind", "value", "exponent"};
  if (fc.factorization) {
    const Factorization& f = *fc.factorization;
    r.payload["sign"] = num(f.sign);
    json factors = json::array();
    r.table.rows.push_back({"sign", num(f.sign), ""});
    for (const auto& pp : f.prime_powers) {
      factors.push_back({{"prime", num(pp.prime)}, {"exponent", num(pp.exponent)}});
      r.table.rows.push_back({"prime", num(pp.prime), num(pp.exponent)});
    }
    r.payload["factors"] = factors;
    r.payload["cofactor"] = num(f.cofactor);
    r.payload["cofactor_status"] = std::string(to_string(f.cofactor_status));
    r.table.rows.push_back({"cofactor", num(f.cofactor), ""});
  } else {
    r.payload["factors"] = nullptr;
    r.table.rows.push_back({"determinant", "0", ""});
  }
  return r;
}

Result cmd_tilings(const HexagonSides& h, int enumeration_bound) {
  const BigInt count = lozenge_count(h);
  std::optional<BigInt> oracle;
  if (h.a <= enumeration_bound && h.b <= enumeration_bound && h.c <= enumeration_bound) {
    oracle = lozenge_count_oracle(h, enumeration_bound);
  }
  Result r;
  r.payload["sides"] = json{{"a", num(h.a)}, {"b", num(h.b)}, {"c", num(h.c)}};
  r.payload["count"] = num(count);
  r.payload["oracle_count"] = oracle ? json(num(*oracle)) : json(nullptr);
  r.table.header = {"a", "b", "c", "count", "oracle_count"};
  r.table.rows.push_back({num(h.a), num(h.b), num(h.c), num(count), oracle ? num(*oracle) : ""});
  if (oracle && *oracle != count) r.status = kInternalError;
  return r;
}

Result cmd_predict(const MaciParams& p) {
  const Prediction pr = predict(p);
  Result r;
  r.payload["parameters"] = params_json(p);
  r.payload["case"] = std::string(to_string(pr.label));
  r.payload["wlp_holds"] = pr.wlp_holds;
  r.payload["status"] = std::string(to_string(pr.status));
  r.payload["branch"] = pr.branch;
  r.payload["characteristic"] = "0";
  r.table.header = {"alpha", "beta", "gamma", "t", "case", "wlp_holds", "status", "branch"};
  r.table.rows.push_back({num(p.alpha()), num(p.beta()), num(p.gamma()), num(p.t()), std::string(to_string(pr.label)),
                          flag(pr.wlp_holds), std::string(to_string(pr.status)), pr.branch});
  return r;
}

IntRange parse_range(std::string_view text, const char* name) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    std::size_t used = 0;
    try {
      v = std::stoi(std::string(s), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw ParameterError(std::string("--box: malformed ") + name + " range '" + std::string(text) + "'");
    }
    return v;
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  return {parse_int(text.substr(0, colon)), parse_int(text.substr(colon + 1))};
}

ScanBox parse_box(const std::string& text) {
  std::vector<std::string_view> parts;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    parts.push_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (parts.size() != 4) {
    throw ParameterError("--box expects four ranges alpha,beta,gamma,t (each lo:hi or a single value), got '" +
                         text + "'");
  }
  return {parse_range(parts[0], "alpha"), parse_range(parts[1], "beta"), parse_range(parts[2], "gamma"),
          parse_range(parts[3], "t")};
}

Result cmd_scan(const ScanBox& box, const std::vector<Characteristic>& chars, unsigned threads) {
  ScanOptions opts;
  opts.characteristics = chars;
  opts.threads = threads;
  const ScanReport report = scan(box, opts);

  Result r;
  json summary{{"rows", num(report.rows.size())},
               {"determinant_mismatches", num(report.determinant_mismatches())},
               {"prediction_mismatches", num(report.prediction_mismatches())},
               {"counterexamples", num(report.counterexamples())},
               {"case_iii_form_mismatches", num(report.case_iii_form_mismatches())},
               {"hilbert_mismatches", num(report.hilbert_mismatches())},
               {"hard_failure", report.has_hard_failure()}};
  r.payload["summary"] = summary;
  r.table.header = {"alpha",       "beta",         "gamma",          "t",
                    "case",        "predicted_holds", "status",      "check",
                    "determinant", "characteristic", "determinant_holds", "direct_holds",
                    "agreement",   "first_deficit_degree", "socle_degree", "peak_start",
                    "peak_length", "unimodal"};
  json rows = json::array();
  for (const auto& row : report.rows) {
    const MaciParams& p = row.params;
    json results = json::array();
    for (const auto& res : row.results) {
      results.push_back(
          {{"characteristic", num(res.characteristic.value())},
           {"determinant_holds", res.determinant_holds ? json(*res.determinant_holds) : json(nullptr)},
           {"direct_holds", res.direct_holds},
           {"first_deficit_degree", res.first_deficit_degree ? json(num(*res.first_deficit_degree)) : json(nullptr)},
           {"agreement", res.agreement ? json(*res.agreement) : json(nullptr)}});
      r.table.rows.push_back({num(p.alpha()), num(p.beta()), num(p.gamma()), num(p.t()),
                              std::string(to_string(row.prediction.label)), flag(row.prediction.wlp_holds),
                              std::string(to_string(row.prediction.status)), std::string(to_string(row.check)),
                              row.determinant ? num(*row.determinant) : "", num(res.characteristic.value()),
                              res.determinant_holds ? flag(*res.determinant_holds) : "", flag(res.direct_holds),
                              res.agreement ? flag(*res.agreement) : "",
                              res.first_deficit_degree ? num(*res.first_deficit_degree) : "",
                              num(row.hilbert.socle_degree), num(row.hilbert.peak_start),
                              num(row.hilbert.peak_length), flag(row.hilbert.peaked_strictly_unimodal)});
    }
    rows.push_back({{"parameters", params_json(p)},
                    {"case", std::string(to_string(row.prediction.label))},
                    {"prediction",
                     {{"wlp_holds", row.prediction.wlp_holds},
                      {"status", std::string(to_string(row.prediction.status))},
                      {"branch", row.prediction.branch}}},
                    {"check", std::string(to_string(row.check))},
                    {"determinant", row.determinant ? json(num(*row.determinant)) : json(nullptr)},
                    {"results", results},
                    {"case_iii_forms_agree", row.case_iii_forms_agree},
                    {"hilbert",
                     {{"socle_degree", num(row.hilbert.socle_degree)},
                      {"peak_start", num(row.hilbert.peak_start)},
                      {"peak_length", num(row.hilbert.peak_length)},
                      {"peaked_strictly_unimodal", row.hilbert.peaked_strictly_unimodal},
                      {"resolution_matches_oracle", row.hilbert.resolution_matches_oracle},
                      {"resolution_minimal", row.hilbert.resolution_minimal}}}});
  }
  r.payload["rows"] = rows;
  if (report.has_hard_failure()) r.status = kInternalError;
  return r;
}

unsigned threads_from_environment() {
  const char* env = std::getenv("LEFSCHETZ_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0') throw ParameterError("LEFSCHETZ_THREADS must be a positive integer");
  return static_cast<unsigned>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak Lefschetz property for level monomial almost complete intersections in K[x,y,z]"};
  app.name("lefschetz");
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  bool no_timing = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out_path, "Write the document to this file instead of standard output");
    sub->add_flag("--no-timing", no_timing, "Omit timing metadata from json and text output");
  };

  int alpha = -1, beta = -1, gamma = -1, t = -1;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--alpha", alpha, "Exponent of x in the mixed generator")->required();
    sub->add_option("--beta", beta, "Exponent of y in the mixed generator")->required();
    sub->add_option("--gamma", gamma, "Exponent of z in the mixed generator")->required();
    sub->add_option("--t", t, "Offset of the pure powers")->required();
    add_common(sub);
  };
  std::vector<std::uint32_t> char_values;
  auto add_chars = [&](CLI::App* sub) {
    sub->add_option("--char", char_values, "Field characteristic, 0 or prime (repeatable; default 0)");
  };

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function, socle degree and unimodality");
  add_params(hilbert);
  CLI::App* matrix = app.add_subcommand("matrix", "Binomial matrix M of the determinant criterion");
  add_params(matrix);
  CLI::App* det = app.add_subcommand("det", "Exact det M with applicable closed forms");
  add_params(det);
  CLI::App* wlp_cmd = app.add_subcommand("wlp", "Decide the WLP by determinant and by direct rank computation");
  add_params(wlp_cmd);
  add_chars(wlp_cmd);
  CLI::App* primes = app.add_subcommand("primes", "Characteristics up to a bound where the WLP fails");
  add_params(primes);
  std::uint64_t bound = 10000;
  primes->add_option("--bound", bound, "Trial-division bound")->check(CLI::PositiveNumber);
  CLI::App* tilings = app.add_subcommand("tilings", "Lozenge tilings of the (a,b,c)-hexagon");
  HexagonSides sides{0, 0, 0};
  int enumeration_bound = kDefaultEnumerationBound;
  tilings->add_option("--a", sides.a, "Side a")->required();
  tilings->add_option("--b", sides.b, "Side b")->required();
  tilings->add_option("--c", sides.c, "Side c")->required();
  tilings->add_option("--enumeration-bound", enumeration_bound, "Largest side for the enumeration cross-check");
  add_common(tilings);
  CLI::App* predict_cmd = app.add_subcommand("predict", "Conjectured WLP behaviour with proof status");
  add_params(predict_cmd);
  CLI::App* scan_cmd = app.add_subcommand("scan", "Compare prediction, determinant and direct rank over a box");
  std::string box_text;
  unsigned threads = 0;
  scan_cmd->add_option("--box", box_text, "alpha,beta,gamma,t ranges, each lo:hi or a single value")->required();
  scan_cmd->add_option("--threads", threads, "Worker threads (0: automatic; capped by LEFSCHETZ_THREADS)");
  add_chars(scan_cmd);
  add_common(scan_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParameters;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  Result result;
  const auto start = std::chrono::steady_clock::now();
  try {
    std::vector<Characteristic> chars;
    for (auto v : char_values) chars.emplace_back(v);
    if (chars.empty()) chars.push_back(Characteristic::zero());

    auto params = [&] { return MaciParams(alpha, beta, gamma, t); };
    if (sub == hilbert) {
      result = cmd_hilbert(params());
    } else if (sub == matrix) {
      result = cmd_matrix(params());
    } else if (sub == det) {
      result = cmd_det(params());
    } else if (sub == wlp_cmd) {
      result = cmd_wlp(params(), chars);
    } else if (sub == primes) {
      result = cmd_primes(params(), bound);
    } else if (sub == tilings) {
      result = cmd_tilings(sides, enumeration_bound);
    } else if (sub == predict_cmd) {
      result = cmd_predict(params());
    } else {
      unsigned cap = threads_from_environment();
      unsigned n = threads;
      if (cap != 0) n = n == 0 ? cap : std::min(n, cap);
      result = cmd_scan(parse_box(box_text), chars, n);
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const NotApplicable& e) {
    err << "error: criterion not applicable: " << e.what() << '\n';
    return kNotApplicable;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kInvalidParameters;
    }
  }
  std::ostream& os = out_path.empty() ? out : file;

  if (format == "csv") {
    write_csv(os, result.table);
  } else if (format == "text") {
    write_text(os, command, result, no_timing ? std::nullopt : std::optional<double>(elapsed_ms));
  } else {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = json{{"name", command}, {"arguments", args}};
    doc["payload"] = std::move(result.payload);
    if (!no_timing) doc["timing"] = json{{"elapsed_ms", elapsed_ms}};
    os << doc.dump(2) << '\n';
  }
  if (result.status == kInternalError) err << "error: internal consistency check failed for " << command << '\n';
  return result.status;
}

}  // namespace wlp::cli
