// Command-line front end: build codes, encode, push arrays through channels,
// decode, verify, and evaluate bounds.
//
// Exit status: 0 success, 1 verification or decoding failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "tecodes/tecodes.hpp"

using namespace tecodes;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string code;
  std::size_t n = 0, L = 0, e = 0, t = 0, s = 0, d = 0, r = 0;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string in, out, pattern, del, table, name, a_nd;
  bool exhaustive = false;
  std::uint64_t max_work = 1'000'000;
  std::size_t messages = 100;
  unsigned threads = 1;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

bool is_te_code(const std::string& code) { return code != "dc" && code != "ted"; }

void need(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

TeCodeSpec te_spec(const Options& o) {
  need(o.n > 0, "--n is required");
  // .tepc files hold a serialized parity-check matrix.
  if (o.code.size() > 5 && o.code.substr(o.code.size() - 5) == ".tepc") {
    std::ifstream f(o.code, std::ios::binary);
    need(bool(f), "cannot open " + o.code);
    return read_binary(f);
  }
  std::size_t L = o.L, d = o.d;
  if (o.code == "cyclic-d5") L = 4, d = 5;
  if (o.code == "two-column") L = 2, d = 6;
  if (o.code == "base-odd" || o.code == "base-even") {
    need(d > 0, "--d is required");
    if (L == 0) L = d - 1;
  }
  need(L > 0, "--L is required");
  if (o.code == "parity") d = 2;
  if (o.code == "hasse") {
    need(o.e > 0 || d > 0, "--e or --d is required");
    if (d == 0) d = o.e + 1;
  }
  return build_te_code(o.code, o.n, L, d);
}

Codec make_codec(const Options& o, std::string* summary = nullptr) {
  need(!o.code.empty(), "--code is required");
  if (o.code == "dc") {
    need(o.n > 0 && o.L > 0 && o.t > 0, "--n, --L and --t are required for dc");
    DcCodeSpec spec(o.n, o.L, o.t);
    if (summary) *summary = spec.describe() + " message_bits=" + std::to_string(spec.message_bits()) +
                            " redundancy=" + std::to_string(spec.redundancy_bits()) + "\n";
    return make_dc_codec(spec);
  }
  if (o.code == "ted") {
    need(o.n > 0 && o.L > 0 && o.t + o.e > 0, "--n, --L, --t and --e are required for ted");
    TedCodeSpec spec(o.n, o.L, o.t, o.e);
    if (summary) *summary = spec.describe() + " message_bits=" + std::to_string(spec.message_bits()) +
                            " redundancy=" + std::to_string(spec.redundancy_bits()) +
                            " encodable=" + (spec.encodable() ? "yes" : "no") + "\n";
    return make_ted_codec(spec);
  }
  const auto spec = te_spec(o);
  if (summary) *summary = dump_text(spec);
  return make_te_codec(spec);
}

Bits parse_message(const std::string& text) {
  Bits m;
  for (char c : text) {
    if (c == '0' || c == '1') {
      m.push_back(c == '1');
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw UsageError("message may only contain 0, 1 and whitespace");
    }
  }
  return m;
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw UsageError("bad number '" + item + "'");
    }
  }
  return out;
}

ChannelSpec channel_spec(const Options& o) {
  if (o.t > 0 && o.e > 0) return ChannelSpec::combined(o.t, std::max<std::size_t>(o.s, 1), o.e);
  if (o.t > 0) return ChannelSpec::deletion(o.t, std::max<std::size_t>(o.s, 1));
  return ChannelSpec::tail(o.e);
}

// "--delete 0:1,3/2:0" deletes positions 1 and 3 of row 0 and position 0 of row 2.
std::vector<std::vector<std::size_t>> parse_deletions(const std::string& s, std::size_t n) {
  std::vector<std::vector<std::size_t>> out(n);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '/')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    need(colon != std::string::npos, "--delete entries look like row:pos,pos");
    const auto row = parse_list(item.substr(0, colon));
    need(row.size() == 1 && row[0] < n, "--delete row out of range");
    out[row[0]] = parse_list(item.substr(colon + 1));
    std::sort(out[row[0]].begin(), out[row[0]].end());
  }
  return out;
}

int cmd_construct(const Options& o) {
  if (!is_te_code(o.code)) {
    std::string summary;
    make_codec(o, &summary);
    write_output(o.out, summary);
    return kOk;
  }
  auto spec = te_spec(o);
  validate_spec(spec);
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    need(bool(f), "cannot write " + o.out);
    write_binary(f, spec);
  }
  if (o.format == "records") {
    std::cout << "code=" << spec.provenance << " n=" << spec.n << " L=" << spec.L << " d=" << spec.d
              << " redundancy=" << spec.redundancy << " validated=" << (spec.validated ? "yes" : "no") << "\n";
  } else {
    std::cout << dump_text(spec) << "validated=" << (spec.validated ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_encode(const Options& o) {
  const Codec c = make_codec(o);
  Bits m;
  if (!o.in.empty()) {
    m = parse_message(read_input(o.in));
  } else {
    std::mt19937_64 rng(o.seed);
    m.resize(c.message_bits);
    for (auto& b : m) b = rng() & 1;
  }
  if (m.size() != c.message_bits)
    throw UsageError("message has " + std::to_string(m.size()) + " bits, code needs " + std::to_string(c.message_bits));
  write_output(o.out, "# message=" + bits_to_string(m) + "\n" + to_text(c.encode(m)));
  return kOk;
}

int cmd_decode(const Options& o) {
  const Codec c = make_codec(o);
  const std::string text = read_input(o.in);
  ChannelOutput y = is_te_code(o.code) ? ChannelOutput(parse_erased_array(text)) : ChannelOutput(parse_ragged_array(text));
  try {
    const BitArray x = c.decode(y);
    write_output(o.out, to_text(x));
  } catch (const CapacityExceeded& ex) {
    std::cerr << "decode failed: " << ex.what() << "\n";
    return kFailed;
  } catch (const NotACodeword& ex) {
    std::cerr << "decode failed: " << ex.what() << "\n";
    return kFailed;
  } catch (const Ambiguous& ex) {
    std::cerr << "decode failed: " << ex.what() << "\n";
    return kFailed;
  } catch (const CorruptInput& ex) {
    std::cerr << "decode failed: " << ex.what() << "\n";
    return kFailed;
  }
  return kOk;
}

int cmd_channel(const Options& o) {
  const BitArray x = parse_bit_array(read_input(o.in));
  const ChannelSpec spec = channel_spec(o);
  ChannelInstance inst;
  if (o.pattern.empty() && o.del.empty()) {
    std::mt19937_64 rng(o.seed);
    inst = sample_channel_instance(spec, x.n(), x.L(), rng);
  } else {
    inst.tail = o.pattern.empty() ? TePattern(x.n(), 0) : parse_list(o.pattern);
    inst.deletions = parse_deletions(o.del, x.n());
  }
  std::cerr << "instance: " << inst.describe() << "\n";
  write_output(o.out, to_text(apply_channel(x, spec, inst)));
  return kOk;
}

int cmd_verify(const Options& o) {
  std::string summary;
  const Codec c = make_codec(o, &summary);
  if (is_te_code(o.code)) {
    auto spec = te_spec(o);
    const auto v = verify_min_distance(spec.H, spec.d);
    spec.validated = v.exact && v.d == spec.d;
    std::cout << "code=" << spec.provenance << " n=" << spec.n << " L=" << spec.L << " claimed_d=" << spec.d
              << " measured_d=" << v.d << (v.exact ? "" : "+") << " redundancy=" << spec.redundancy
              << " patterns=" << v.patterns_checked;
    if (v.witness) {
      std::cout << " witness=";
      for (std::size_t i = 0; i < v.witness->size(); ++i) std::cout << (i ? "," : "") << (*v.witness)[i];
    }
    std::cout << "\n";
    if (!spec.validated) return kFailed;
    if (!o.exhaustive) return kOk;
    HarnessOptions h;
    h.messages = o.messages;
    h.seed = o.seed;
    h.max_work = o.max_work;
    h.threads = o.threads;
    const auto rec = roundtrip_harness(c, ChannelSpec::tail(spec.d - 1), h);
    std::cout << rec.describe();
    return rec.failures ? kFailed : kOk;
  }
  std::cout << summary;
  HarnessOptions h;
  h.messages = o.messages;
  h.exhaustive = o.exhaustive;
  h.seed = o.seed;
  h.max_work = o.max_work;
  h.threads = o.threads;
  const ChannelSpec spec =
      o.code == "dc" ? ChannelSpec::deletion(o.t, 1) : ChannelSpec::combined(o.t, 1, o.e);
  const auto rec = roundtrip_harness(c, spec, h);
  std::cout << rec.describe();
  return rec.failures ? kFailed : kOk;
}

std::string kv(const std::string& name, const std::string& params, const std::string& value, const std::string& src) {
  return "bound=" + name + " " + params + " value=" + value + " provenance=" + src + "\n";
}

int cmd_bounds(const Options& o) {
  if (!o.table.empty()) {
    std::vector<TableRow> rows;
    if (o.table == "te") {
      rows = o.n ? table_te(o.n, o.n, {2, 3, 4, 5}) : table_te(3, 16, {2, 3, 4, 5});
    } else if (o.table == "hasse") {
      rows = table_hasse(o.n ? std::vector<std::size_t>{o.n} : std::vector<std::size_t>{4, 8, 16});
    } else if (o.table == "dc") {
      const std::size_t L = o.L ? o.L : 7;
      const std::size_t t = o.t ? o.t : 2;
      const std::size_t hh = vt_h(L);
      rows = table_dc(L, t, o.n ? std::vector<std::size_t>{o.n}
                                : std::vector<std::size_t>{3, (std::size_t{1} << hh) + 1, 2 * (std::size_t{1} << hh),
                                                           3 * (std::size_t{1} << hh) + 1});
    } else {
      throw UsageError("--table must be te, hasse or dc");
    }
    std::cout << (o.format == "records" ? to_records(rows) : to_text_table(rows));
    return kOk;
  }
  need(!o.name.empty(), "bounds needs --table or --name");
  const std::string p = "n=" + std::to_string(o.n) + " L=" + std::to_string(o.L);
  std::string out;
  if (o.name == "vte") {
    out = kv("vte", p + " r=" + std::to_string(o.r), v_te_general(o.r, o.n, o.L).str(), "formula");
  } else if (o.name == "sphere") {
    const auto b = te_sphere_packing(o.n, o.L, o.d);
    out = kv("sphere", p + " d=" + std::to_string(o.d), b.max_size.str(), "formula") +
          kv("sphere-redundancy", p + " d=" + std::to_string(o.d), std::to_string(b.redundancy_lb), "formula");
  } else if (o.name == "column") {
    need(!o.a_nd.empty(), "--A (a bound on A(n,d)) is required");
    const auto b = column_bound(o.n, o.d, BigInt(o.a_nd));
    out = kv("column", "n=" + std::to_string(o.n) + " d=" + std::to_string(o.d) + " A=" + o.a_nd, b.max_size.str(),
             "formula");
  } else if (o.name == "singleton") {
    need(!o.a_nd.empty(), "--A (the code size M) is required");
    out = kv("singleton", p + " M=" + o.a_nd, std::to_string(singleton_te(o.n, o.L, BigInt(o.a_nd))), "formula");
  } else if (o.name == "ms") {
    out = kv("ms", "L=" + std::to_string(o.L) + " s=" + std::to_string(o.s), std::to_string(m_s_brute(o.L, o.s)),
             "brute-force");
  } else if (o.name == "dc1") {
    const std::size_t m = m_s_brute(o.L, o.s);
    out = kv("dc1", p + " t=" + std::to_string(o.t) + " s=" + std::to_string(o.s),
             dc_bound_part1(o.n, o.L, o.t, m).str(), "brute-force");
  } else if (o.name == "dc2") {
    out = kv("dc2", p + " t=" + std::to_string(o.t) + " s=" + std::to_string(o.s),
             dc_bound_part2(o.n, o.L, o.t, o.s).str(), "formula");
  } else if (o.name == "dc3") {
    out = kv("dc3", p + " t=" + std::to_string(o.t), dc_bound_part3(o.n, o.L, o.t).str(), "formula");
  } else if (o.name == "ted") {
    const auto b = ted_upper_bound(o.n, o.L);
    out = kv("ted-asymptotic", p, b.asymptotic.str(), "asymptotic") +
          kv("ted-finite", p, b.finite.str(), "asymptotic");
  } else {
    throw UsageError("unknown bound '" + o.name + "'");
  }
  write_output(o.out, out);
  return kOk;
}

// Small brute-force oracles checked against the closed forms, written as
// records so they can be kept as fixtures.
int cmd_oracle(const Options& o) {
  std::ostringstream out;
  bool ok = true;
  auto record = [&](const std::string& name, const std::string& params, const std::string& brute,
                    const std::string& formula) {
    const bool match = brute == formula;
    ok = ok && match;
    out << "oracle=" << name << " " << params << " brute=" << brute << " formula=" << formula
        << " match=" << (match ? "yes" : "no") << "\n";
  };
  // TE ball volumes around the zero array.
  const std::size_t n = o.n ? o.n : 3, L = o.L ? o.L : 3;
  need(n * L <= 20, "oracle ball enumeration needs n*L <= 20");
  const BitArray zero(n, L);
  std::vector<std::size_t> count(n * L + 1, 0);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << (n * L)); ++v) {
    BitArray y(n, L);
    for (std::size_t b = 0; b < n * L; ++b) y.set(b / L, b % L, (v >> b) & 1);
    ++count[rho_te_distance(zero, y)];
  }
  std::size_t acc = 0;
  for (std::size_t r = 0; r <= n * L; ++r) {
    acc += count[r];
    record("vte", "n=" + std::to_string(n) + " L=" + std::to_string(L) + " r=" + std::to_string(r),
           std::to_string(acc), v_te_general(r, n, L).str());
  }
  // Minimum distance of small TE codes by codeword weights.
  for (const auto& [code, nn, d] : std::vector<std::tuple<std::string, std::size_t, std::size_t>>{
           {"base-odd", 4, 3}, {"base-even", 4, 4}, {"parity", 5, 2}}) {
    const auto spec = build_te_code(code, nn, d - 1, d);
    const TeEncoder enc(spec.H);
    std::size_t best = nn * (d - 1) + 1;
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << enc.k()); ++v) {
      Bits m(enc.k());
      for (std::size_t b = 0; b < enc.k(); ++b) m[b] = (v >> b) & 1;
      best = std::min(best, w_te(enc.encode(m)));
    }
    record("min-distance", "code=" + code + " n=" + std::to_string(nn) + " d=" + std::to_string(d), std::to_string(best),
           std::to_string(verify_min_distance(spec.H, d).d));
  }
  write_output(o.out, out.str());
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tail-erasure, deletion and tail-erasure-deletion array codes"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sc) {
    sc->add_option("--code", o.code,
                   "parity | base-odd | base-even | cyclic-d5 | hasse | two-column | dc | ted | FILE.tepc");
    sc->add_option("--n", o.n, "rows");
    sc->add_option("--L", o.L, "row length");
    sc->add_option("--e", o.e, "tail erasures");
    sc->add_option("--t", o.t, "rows with deletions");
    sc->add_option("--s", o.s, "deletions per row");
    sc->add_option("--d", o.d, "minimum rho_TE-distance");
    sc->add_option("--seed", o.seed, "random seed");
    sc->add_option("--format", o.format, "text | records")->check(CLI::IsMember({"text", "records"}));
    sc->add_option("--in", o.in, "input file (- for stdin)");
    sc->add_option("--out", o.out, "output file");
    sc->add_flag("--exhaustive", o.exhaustive, "enumerate every channel instance");
    sc->add_option("--max-work", o.max_work, "instance limit for exhaustive runs");
  };

  auto* construct = app.add_subcommand("construct", "build a code and print its parameters and parity-check dump");
  auto* encode = app.add_subcommand("encode", "encode a message (--in) or a random one (--seed)");
  auto* decode = app.add_subcommand("decode", "decode an erased or shortened array");
  auto* channel = app.add_subcommand("channel", "apply a channel instance to an array");
  auto* verify = app.add_subcommand("verify", "check minimum distance or run a round-trip suite");
  auto* bounds = app.add_subcommand("bounds", "evaluate a bound or regenerate a summary table");
  auto* oracle = app.add_subcommand("oracle", "run brute-force oracles and emit fixtures");
  for (auto* sc : {construct, encode, decode, channel, verify, bounds, oracle}) add_common(sc);
  channel->add_option("--pattern", o.pattern, "tail erasures per row, comma separated");
  channel->add_option("--delete", o.del, "deletions as row:pos,pos/row:pos");
  verify->add_option("--messages", o.messages, "messages per round-trip suite");
  verify->add_option("--threads", o.threads, "worker threads");
  bounds->add_option("--table", o.table, "te | hasse | dc");
  bounds->add_option("--name", o.name, "vte | sphere | column | singleton | ms | dc1 | dc2 | dc3 | ted");
  bounds->add_option("--r", o.r, "ball radius");
  bounds->add_option("--A", o.a_nd, "code size or A(n,d) bound, as a decimal integer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*encode) return cmd_encode(o);
    if (*decode) return cmd_decode(o);
    if (*channel) return cmd_channel(o);
    if (*verify) return cmd_verify(o);
    if (*bounds) return cmd_bounds(o);
    if (*oracle) return cmd_oracle(o);
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::length_error& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
