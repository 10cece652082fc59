#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrk/bitstream_io.hpp"
#include "qrk/certify.hpp"
#include "qrk/errors.hpp"
#include "qrk/format.hpp"
#include "qrk/hilbert.hpp"
#include "qrk/hypergraph.hpp"
#include "qrk/hypergraph_io.hpp"
#include "qrk/realization.hpp"
#include "qrk/rng.hpp"

namespace qrk::cli {

namespace {

using nlohmann::json;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw Error(ErrorCode::ParseError, "not a number: '" + s + "'");
  return v;
}

// Decimal or 0x-prefixed hexadecimal, full 64-bit range.
std::uint64_t parse_seed(const std::string& text) {
  std::string_view s = text;
  int base = 10;
  if (s.starts_with("0x") || s.starts_with("0X")) {
    s.remove_prefix(2);
    base = 16;
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "seed must be a 64-bit unsigned integer: '" + text + "'");
  }
  return v;
}

// "0.5", "0.5+0.5i", "-2i", "i".
Complex parse_complex(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty component");
  if (s.back() != 'i') return parse_double(s);
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split_at = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  auto imag_of = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (split_at == std::string::npos) return {0.0, imag_of(body)};
  return {parse_double(body.substr(0, split_at)), imag_of(body.substr(split_at))};
}

Ket parse_ket(const std::string& text) {
  std::vector<Complex> amps;
  for (const auto& part : split(text, ',')) amps.push_back(parse_complex(part));
  return normalize(std::span<const Complex>(amps));
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_double(part));
  return out;
}

TwoValuedState parse_requirements(const std::vector<std::string>& items) {
  TwoValuedState s;
  for (const auto& item : items) {
    const auto eq = item.rfind('=');
    const std::string value = eq == std::string::npos ? "" : item.substr(eq + 1);
    if (eq == std::string::npos || eq == 0 || (value != "0" && value != "1")) {
      throw Error(ErrorCode::ParseError, "--require expects atom=0 or atom=1, got '" + item + "'");
    }
    s.set(item.substr(0, eq), value == "1");
  }
  return s;
}

BitStream load_bits(const std::string& path, Streams& io) {
  if (path == "-") return read_bits(io.in, "stdin");
  return read_bits(std::filesystem::path(path));
}

OrthoHypergraph load_graph(const std::string& path, Streams& io) {
  if (path == "-") {
    std::string data{std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>()};
    return parse_hypergraph(data);
  }
  return load_hypergraph(path);
}

void emit(const std::string& path, std::string_view data, Streams& io) {
  if (path == "-") {
    io.out.write(data.data(), static_cast<std::streamsize>(data.size()));
    io.out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path);
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::string stats_json(const ExtractorStats& s) {
  return json{{"consumed", s.consumed},
              {"discarded", s.discarded},
              {"emitted", s.emitted},
              {"output_length", s.output_length}}
             .dump(2) +
         "\n";
}

std::string sweep_table(const std::vector<SweepRow>& rows, bool as_json) {
  if (as_json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json row = {{"phi", round_significant(r.phi)},
                  {"seed", r.seed},
                  {"raw_frequency", round_significant(r.raw_frequency)},
                  {"extracted_length", r.extracted_length}};
      row["extracted_frequency"] =
          r.extracted_frequency ? json(round_significant(*r.extracted_frequency)) : json(nullptr);
      arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << std::left << std::setw(20) << "phi" << std::setw(20) << "raw_frequency" << std::setw(18)
      << "extracted_length"
      << "extracted_frequency\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(20) << format_number(r.phi) << std::setw(20) << format_number(r.raw_frequency)
        << std::setw(18) << r.extracted_length
        << (r.extracted_frequency ? format_number(*r.extracted_frequency) : std::string("-")) << "\n";
  }
  return out.str();
}

std::string states_text(const std::vector<TwoValuedState>& states) {
  std::string out = "count " + std::to_string(states.size()) + "\n";
  for (const auto& s : states) out += state_to_text(s) + "\n";
  return out;
}

std::string diagnostics_text(const std::vector<Diagnostic>& diags) {
  if (diags.empty()) return "valid\n";
  std::string out;
  for (const auto& d : diags) out += std::string(to_string(d.kind)) + ": " + d.message + "\n";
  return out;
}

std::string relation_text(const GadgetRelation& g) {
  return std::string(to_string(g.relation)) + "\n" + g.from + " -> " + g.to + ": target true in " +
         std::to_string(g.target_true) + " states, false in " + std::to_string(g.target_false) + "\n";
}

int guarded(Streams& io, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    io.err << "qrk: " << e.what() << "\n";
    return e.code() == ErrorCode::InvariantViolation ? kInternal : kUsage;
  } catch (const std::exception& e) {
    io.err << "qrk: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Quantum coin simulation, von Neumann extraction, Borel normality and contextuality gadgets", "qrk"};
  app.require_subcommand(1);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Sample a tilted quantum coin: 1 with probability sin^2(phi)");
  double sim_phi = 0.0;
  std::size_t sim_n = 0;
  std::string sim_seed = "0";
  std::string sim_out = "-";
  bool sim_packed = false;
  simulate->add_option("--phi", sim_phi, "Tilt angle in radians")->required();
  simulate->add_option("--n", sim_n, "Number of draws")->required();
  simulate->add_option("--seed", sim_seed, "64-bit seed, decimal or 0x-hex");
  simulate->add_option("--out", sim_out, "Output bit file ('-' for stdout)");
  simulate->add_flag("--packed", sim_packed, "Packed output (len=<n> header, MSB first)");

  // extract
  auto* extract = app.add_subcommand("extract", "von Neumann extraction: 01->0, 10->1, drop 00 and 11");
  std::string ext_in = "-";
  std::string ext_out = "-";
  std::string ext_stats;
  bool ext_packed = false;
  extract->add_option("--in", ext_in, "Input bit file ('-' for stdin)");
  extract->add_option("--out", ext_out, "Output bit file ('-' for stdout)");
  extract->add_option("--stats", ext_stats, "Write extractor statistics as JSON here ('-' for stderr)");
  extract->add_flag("--packed", ext_packed, "Packed output");

  // certify
  auto* certify = app.add_subcommand("certify", "Borel normality test; exit code 2 when the stream fails");
  std::string cert_in = "-";
  std::optional<std::size_t> cert_max;
  bool cert_json = false;
  certify->add_option("--in", cert_in, "Input bit file ('-' for stdin)");
  certify->add_option("--max-block", cert_max, "Largest block length to test");
  certify->add_flag("--json", cert_json, "JSON report");

  // champernowne
  auto* champ = app.add_subcommand("champernowne", "Digits of 1, 2, 3, ... concatenated");
  std::size_t champ_n = 0;
  unsigned champ_base = 2;
  std::string champ_out = "-";
  champ->add_option("--n", champ_n, "Number of digits")->required();
  champ->add_option("--base", champ_base, "2 or 10");
  champ->add_option("--out", champ_out, "Output file ('-' for stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Raw and extracted statistics over a list of tilt angles");
  std::string sweep_phis;
  std::size_t sweep_n = 0;
  std::string sweep_seed = "0";
  bool sweep_json = false;
  sweep->add_option("--phi-list", sweep_phis, "Comma-separated angles in radians")->required();
  sweep->add_option("--n", sweep_n, "Draws per angle")->required();
  sweep->add_option("--seed", sweep_seed, "64-bit seed, decimal or 0x-hex");
  sweep->add_flag("--json", sweep_json, "JSON table");

  // born
  auto* bornc = app.add_subcommand("born", "Born probability |<post|pre>|^2");
  std::string born_pre;
  std::string born_post;
  bornc->add_option("--pre", born_pre, "Comma-separated components, e.g. 1,0,0 or 0.5+0.5i,0.5")->required();
  bornc->add_option("--post", born_post, "Comma-separated components")->required();

  // hypergraph
  auto* hg = app.add_subcommand("hypergraph", "Orthogonality hypergraph analysis");
  hg->require_subcommand(1);
  bool hg_json = false;
  hg->add_flag("--json", hg_json, "JSON output");

  std::string file;
  auto* hg_validate = hg->add_subcommand("validate", "Check structural invariants; exit 2 on violations");
  hg_validate->add_option("file", file, "Hypergraph JSON file")->required();
  hg_validate->add_flag("--json", hg_json, "JSON output");

  std::vector<std::string> requires_;
  bool count_only = false;
  auto* hg_states = hg->add_subcommand("states", "Enumerate total two-valued states");
  hg_states->add_option("file", file, "Hypergraph JSON file")->required();
  hg_states->add_option("--require", requires_, "Constraint atom=0|1 (repeatable)");
  hg_states->add_flag("--count", count_only, "Print only the number of states");
  hg_states->add_flag("--json", hg_json, "JSON output");

  std::string from;
  std::string to;
  auto* hg_classify = hg->add_subcommand("classify", "Classical relation between two atoms");
  hg_classify->add_option("file", file, "Hypergraph JSON file")->required();
  hg_classify->add_option("--from", from, "Source atom")->required();
  hg_classify->add_option("--to", to, "Target atom")->required();
  hg_classify->add_flag("--json", hg_json, "JSON output");

  std::vector<std::string> merge_files;
  std::string merge_out = "-";
  auto* hg_merge = hg->add_subcommand("merge", "Serial composition: union identifying shared atom ids");
  hg_merge->add_option("files", merge_files, "Two hypergraph files")->required()->expected(2);
  hg_merge->add_option("--out", merge_out, "Output file ('-' for stdout)");

  double tol = kTolerance;
  auto* hg_verify = hg->add_subcommand("verify", "Check that labels form orthonormal contexts; exit 2 on failure");
  hg_verify->add_option("file", file, "Hypergraph JSON file")->required();
  hg_verify->add_option("--tol", tol, "Tolerance");
  hg_verify->add_flag("--json", hg_json, "JSON output");

  auto* hg_report = hg->add_subcommand("report", "Value (in)definiteness of every atom given a prepared one");
  hg_report->add_option("file", file, "Hypergraph JSON file")->required();
  hg_report->add_option("--prepared,--from", from, "Prepared atom")->required();
  hg_report->add_flag("--json", hg_json, "JSON output");

  auto* hg_gap = hg->add_subcommand("gap", "Classical relation next to the Born probability of two labelled atoms");
  hg_gap->add_option("file", file, "Hypergraph JSON file")->required();
  hg_gap->add_option("--from", from, "Source atom")->required();
  hg_gap->add_option("--to", to, "Target atom")->required();

  bool unit_only = false;
  bool expect_contradiction = false;
  auto* hg_closure = hg->add_subcommand("closure", "Propagate a partial truth assignment");
  hg_closure->add_option("file", file, "Hypergraph JSON file")->required();
  hg_closure->add_option("--require", requires_, "Assignment atom=0|1 (repeatable)");
  hg_closure->add_flag("--unit", unit_only, "Only the two unit rules, no probing");
  hg_closure->add_flag("--expect-contradiction", expect_contradiction, "Exit 2 unless a contradiction is found");
  hg_closure->add_flag("--json", hg_json, "JSON output");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  return guarded(io, [&]() -> int {
    if (*simulate) {
      const auto bits = simulate_coin(sim_phi, sim_n, parse_seed(sim_seed));
      emit(sim_out, encode_bits(bits, sim_packed ? BitFormat::Packed : BitFormat::Ascii), io);
      return kOk;
    }
    if (*extract) {
      const auto raw = load_bits(ext_in, io);
      const auto result = von_neumann_extract(raw);
      const auto& s = result.stats;
      if (s.emitted + s.discarded != s.consumed || s.output_length != s.emitted ||
          s.consumed != raw.length() / 2) {
        throw Error(ErrorCode::InvariantViolation, "extractor statistics do not balance");
      }
      emit(ext_out, encode_bits(result.bits, ext_packed ? BitFormat::Packed : BitFormat::Ascii), io);
      if (ext_stats == "-") {
        io.err << stats_json(s);
      } else if (!ext_stats.empty()) {
        emit(ext_stats, stats_json(s), io);
      }
      return kOk;
    }
    if (*certify) {
      const auto report = borel_normality(load_bits(cert_in, io), cert_max);
      io.out << (cert_json ? normality_to_json(report) : normality_to_text(report));
      return report.pass ? kOk : kNegative;
    }
    if (*champ) {
      emit(champ_out, champernowne_digits(champ_n, champ_base), io);
      return kOk;
    }
    if (*sweep) {
      const auto phis = parse_list(sweep_phis);
      io.out << sweep_table(transition_sweep(phis, sweep_n, parse_seed(sweep_seed)), sweep_json);
      return kOk;
    }
    if (*bornc) {
      io.out << format_number(born(parse_ket(born_pre), parse_ket(born_post))) << "\n";
      return kOk;
    }
    if (*hg_validate) {
      const auto diags = validate(load_graph(file, io));
      io.out << (hg_json ? diagnostics_to_json(diags) : diagnostics_text(diags));
      return diags.empty() ? kOk : kNegative;
    }
    if (*hg_states) {
      const auto h = load_graph(file, io);
      const auto constraints = parse_requirements(requires_);
      if (count_only) {
        const auto n = count_total_states(h, constraints);
        io.out << (hg_json ? json{{"count", n}}.dump(2) + "\n" : std::to_string(n) + "\n");
        return kOk;
      }
      const auto states = enumerate_total_states(h, constraints);
      io.out << (hg_json ? states_to_json(states) : states_text(states));
      return kOk;
    }
    if (*hg_classify) {
      const auto g = classify_pair(load_graph(file, io), from, to);
      io.out << (hg_json ? relation_to_json(g) : relation_text(g));
      return kOk;
    }
    if (*hg_merge) {
      const auto merged = merge(load_graph(merge_files[0], io), load_graph(merge_files[1], io));
      emit(merge_out, hypergraph_to_json(merged), io);
      return kOk;
    }
    if (*hg_verify) {
      const auto h = load_graph(file, io);
      const auto r = verify_realization(h, tol);
      io.out << (hg_json ? realization_to_json(r) : realization_to_text(h, r));
      return r.pass ? kOk : kNegative;
    }
    if (*hg_report) {
      const auto r = indefiniteness_report(load_graph(file, io), from);
      io.out << (hg_json ? indefiniteness_to_json(r) : indefiniteness_to_text(r));
      return kOk;
    }
    if (*hg_gap) {
      const auto g = terminal_gap(load_graph(file, io), from, to);
      io.out << terminal_gap_to_json(g);
      if (g.warning) io.err << "qrk: warning: " << *g.warning << "\n";
      return kOk;
    }
    if (*hg_closure) {
      const auto h = load_graph(file, io);
      const auto result =
          closure(h, parse_requirements(requires_), unit_only ? ClosureMode::Unit : ClosureMode::Lookahead);
      const auto* contradiction = std::get_if<Contradiction>(&result);
      if (hg_json) {
        json doc;
        if (contradiction) {
          doc = {{"contradiction", true}, {"atom", contradiction->atom}, {"reason", contradiction->reason}};
        } else {
          json values = json::object();
          for (const auto& [id, v] : std::get<TwoValuedState>(result).values) values[id] = v ? 1 : 0;
          doc = {{"contradiction", false}, {"assignment", std::move(values)}};
        }
        io.out << doc.dump(2) << "\n";
      } else if (contradiction) {
        io.out << "Contradiction at " << contradiction->atom << ": " << contradiction->reason << "\n";
      } else {
        io.out << state_to_text(std::get<TwoValuedState>(result)) << "\n";
      }
      return expect_contradiction && !contradiction ? kNegative : kOk;
    }
    throw Error(ErrorCode::InvariantViolation, "no subcommand dispatched");
  });
}

}  // namespace qrk::cli
