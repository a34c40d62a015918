#pragma once

// Channel simulators for tail erasures, row deletions and their combination,
// exhaustive and seeded-random instance streams, and a round-trip harness.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "tecodes/array.hpp"
#include "tecodes/dc_codes.hpp"
#include "tecodes/errors.hpp"
#include "tecodes/te_codes.hpp"
#include "tecodes/ted_codes.hpp"

namespace tecodes {

enum class ChannelKind { te, del, ted };

struct ChannelSpec {
  ChannelKind kind = ChannelKind::te;
  std::size_t t = 0;  // rows with deletions
  std::size_t s = 0;  // deletions per row
  std::size_t e = 0;  // total tail erasures

  static ChannelSpec tail(std::size_t e) { return {ChannelKind::te, 0, 0, e}; }
  static ChannelSpec deletion(std::size_t t, std::size_t s) { return {ChannelKind::del, t, s, 0}; }
  static ChannelSpec combined(std::size_t t, std::size_t s, std::size_t e) { return {ChannelKind::ted, t, s, e}; }

  std::string describe() const {
    switch (kind) {
      case ChannelKind::te:
        return "te e=" + std::to_string(e);
      case ChannelKind::del:
        return "del t=" + std::to_string(t) + " s=" + std::to_string(s);
      case ChannelKind::ted:
        break;
    }
    return "ted t=" + std::to_string(t) + " s=" + std::to_string(s) + " e=" + std::to_string(e);
  }
};

// Tail erasures are applied first; deletion positions index the truncated row.
struct ChannelInstance {
  TePattern tail;
  std::vector<std::vector<std::size_t>> deletions;  // sorted positions per row

  std::string describe() const {
    std::ostringstream out;
    out << "tail=(";
    for (std::size_t i = 0; i < tail.size(); ++i) out << (i ? "," : "") << tail[i];
    out << ") del=[";
    bool first = true;
    for (std::size_t i = 0; i < deletions.size(); ++i) {
      if (deletions[i].empty()) continue;
      out << (first ? "" : " ") << i << ":";
      for (std::size_t k = 0; k < deletions[i].size(); ++k) out << (k ? "," : "") << deletions[i][k];
      first = false;
    }
    out << "]";
    return out.str();
  }

  friend bool operator==(const ChannelInstance&, const ChannelInstance&) = default;
  friend auto operator<=>(const ChannelInstance&, const ChannelInstance&) = default;
};

using ChannelOutput = std::variant<ErasedArray, RaggedArray>;

inline std::string to_text(const ChannelOutput& y) {
  return std::visit([](const auto& v) { return to_text(v); }, y);
}

inline void check_instance(const ChannelSpec& spec, std::size_t n, std::size_t L, const ChannelInstance& inst) {
  if (inst.tail.size() != n || inst.deletions.size() != n)
    throw std::invalid_argument("channel instance: needs one entry per row");
  check_pattern(inst.tail, n, L);
  const std::size_t erased = pattern_weight(inst.tail);
  std::size_t damaged = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = inst.deletions[i];
    if (d.empty()) continue;
    ++damaged;
    if (d.size() > spec.s) throw std::invalid_argument("channel instance: too many deletions in row " + std::to_string(i));
    if (!std::is_sorted(d.begin(), d.end()) || std::adjacent_find(d.begin(), d.end()) != d.end())
      throw std::invalid_argument("channel instance: deletion positions must be distinct and sorted");
    if (d.back() >= L - inst.tail[i]) throw std::invalid_argument("channel instance: deletion position out of range");
  }
  const bool has_tail = spec.kind != ChannelKind::del;
  const bool has_del = spec.kind != ChannelKind::te;
  if (!has_tail && erased) throw std::invalid_argument("channel instance: deletion channel has no tail erasures");
  if (!has_del && damaged) throw std::invalid_argument("channel instance: tail channel has no deletions");
  if (erased > spec.e && has_tail) throw std::invalid_argument("channel instance: more than e tail erasures");
  if (damaged > spec.t && has_del) throw std::invalid_argument("channel instance: more than t damaged rows");
}

inline ChannelOutput apply_channel(const BitArray& x, const ChannelSpec& spec, const ChannelInstance& inst) {
  check_instance(spec, x.n(), x.L(), inst);
  if (spec.kind == ChannelKind::te) return apply_te_pattern(x, inst.tail);
  std::vector<Bits> rows;
  for (std::size_t i = 0; i < x.n(); ++i) {
    Bits r = x.row(i);
    r.resize(x.L() - inst.tail[i]);
    const auto& d = inst.deletions[i];
    for (auto it = d.rbegin(); it != d.rend(); ++it) r.erase(r.begin() + static_cast<std::ptrdiff_t>(*it));
    rows.push_back(std::move(r));
  }
  return RaggedArray(std::move(rows), x.L());
}

namespace detail {

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = sat_mul(r, n - k + i) / i;
  return r;
}

// Deletion sets over rows of the given lengths with at most t damaged rows.
inline std::uint64_t count_deletions(const std::vector<std::size_t>& lengths, std::size_t t, std::size_t s) {
  std::vector<std::uint64_t> ways(t + 1, 0);  // ways[k]: k damaged rows so far
  ways[0] = 1;
  for (auto len : lengths) {
    std::uint64_t row = 0;
    for (std::size_t k = 1; k <= s; ++k) row = sat_add(row, choose(len, k));
    for (std::size_t k = t; k >= 1; --k) ways[k] = sat_add(ways[k], sat_mul(ways[k - 1], row));
  }
  return std::accumulate(ways.begin(), ways.end(), std::uint64_t{0}, sat_add);
}

inline void for_each_subset(std::size_t len, std::size_t size, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  if (size > len) return;
  while (true) {
    if (!f(idx)) return;
    std::size_t k = size;
    while (k > 0 && idx[k - 1] == len - size + k - 1) --k;
    if (k == 0) return;
    ++idx[k - 1];
    for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

inline std::uint64_t count_channel_instances(const ChannelSpec& spec, std::size_t n, std::size_t L) {
  const std::size_t e = spec.kind == ChannelKind::del ? 0 : spec.e;
  if (spec.kind == ChannelKind::te) {
    std::uint64_t c = 0;
    for_each_pattern(e, L, n, [&](const TePattern&) {
      ++c;
      return true;
    });
    return c;
  }
  std::uint64_t total = 0;
  for_each_pattern(e, L, n, [&](const TePattern& p) {
    std::vector<std::size_t> lengths(n);
    for (std::size_t i = 0; i < n; ++i) lengths[i] = L - p[i];
    total = detail::sat_add(total, detail::count_deletions(lengths, spec.t, spec.s));
    return true;
  });
  return total;
}

// Streams every instance once in a fixed order: tail patterns in
// lexicographic order, then deletion sets row by row. The visitor returns
// false to stop early.
inline void enumerate_channel_instances(const ChannelSpec& spec, std::size_t n, std::size_t L,
                                        const std::function<bool(const ChannelInstance&)>& visit,
                                        std::uint64_t max_work = 1'000'000) {
  const auto total = count_channel_instances(spec, n, L);
  if (total > max_work)
    throw std::length_error("channel enumeration: " + std::to_string(total) + " instances exceed the work limit " +
                            std::to_string(max_work));
  const std::size_t e = spec.kind == ChannelKind::del ? 0 : spec.e;
  const std::size_t t = spec.kind == ChannelKind::te ? 0 : spec.t;
  bool go = true;
  for_each_pattern(e, L, n, [&](const TePattern& p) {
    ChannelInstance inst{p, std::vector<std::vector<std::size_t>>(n)};
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
      if (!go) return;
      if (i == n) {
        go = visit(inst);
        return;
      }
      rec(i + 1, left);
      if (left == 0) return;
      for (std::size_t k = 1; k <= spec.s && go; ++k)
        detail::for_each_subset(L - p[i], k, [&](const std::vector<std::size_t>& pos) {
          inst.deletions[i] = pos;
          rec(i + 1, left - 1);
          return go;
        });
      inst.deletions[i].clear();
    };
    rec(0, t);
    return go;
  });
}

// Uniform rows without replacement, then uniform positions. Tail erasures are
// dealt one at a time to rows that still have bits.
inline ChannelInstance sample_channel_instance(const ChannelSpec& spec, std::size_t n, std::size_t L,
                                               std::mt19937_64& rng) {
  ChannelInstance inst{TePattern(n, 0), std::vector<std::vector<std::size_t>>(n)};
  if (spec.kind != ChannelKind::del) {
    for (std::size_t k = 0; k < spec.e && k < n * L; ++k) {
      std::vector<std::size_t> open;
      for (std::size_t i = 0; i < n; ++i)
        if (inst.tail[i] < L) open.push_back(i);
      ++inst.tail[open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)]];
    }
  }
  if (spec.kind != ChannelKind::te) {
    std::vector<std::size_t> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    for (std::size_t k = 0; k < std::min(spec.t, n); ++k) {
      const std::size_t i = rows[k];
      std::vector<std::size_t> pos(L - inst.tail[i]);
      std::iota(pos.begin(), pos.end(), 0);
      std::shuffle(pos.begin(), pos.end(), rng);
      pos.resize(std::min(spec.s, pos.size()));
      std::sort(pos.begin(), pos.end());
      inst.deletions[i] = pos;
    }
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Codecs
// ---------------------------------------------------------------------------

struct Codec {
  std::string descriptor;
  std::size_t n = 0;
  std::size_t L = 0;
  std::size_t message_bits = 0;
  std::function<BitArray(const Bits&)> encode;
  std::function<BitArray(const ChannelOutput&)> decode;
};

inline Codec make_te_codec(const TeCodeSpec& spec) {
  auto enc = std::make_shared<TeEncoder>(spec.H);
  auto H = std::make_shared<TeParityCheck>(spec.H);
  Codec c;
  c.descriptor = "code=te provenance=" + spec.provenance + " n=" + std::to_string(spec.n) + " L=" + std::to_string(spec.L) +
                 " d=" + std::to_string(spec.d);
  c.n = spec.n;
  c.L = spec.L;
  c.message_bits = enc->k();
  c.encode = [enc](const Bits& m) { return enc->encode(m); };
  c.decode = [H](const ChannelOutput& y) {
    if (!std::holds_alternative<ErasedArray>(y)) throw ContractViolation("TE decoder: needs an erased array");
    return te_decode(*H, std::get<ErasedArray>(y));
  };
  return c;
}

inline RaggedArray as_ragged(const ChannelOutput& y) {
  if (std::holds_alternative<RaggedArray>(y)) return std::get<RaggedArray>(y);
  return RaggedArray::from(std::get<ErasedArray>(y));
}

inline Codec make_dc_codec(const DcCodeSpec& spec) {
  auto s = std::make_shared<DcCodeSpec>(spec);
  Codec c;
  c.descriptor = spec.describe();
  c.n = spec.n;
  c.L = spec.L;
  c.message_bits = spec.message_bits();
  c.encode = [s](const Bits& m) { return dc_encode(m, *s); };
  c.decode = [s](const ChannelOutput& y) { return dc_decode(as_ragged(y), *s); };
  return c;
}

inline Codec make_ted_codec(const TedCodeSpec& spec) {
  auto s = std::make_shared<TedCodeSpec>(spec);
  Codec c;
  c.descriptor = spec.describe();
  c.n = spec.n;
  c.L = spec.L;
  c.message_bits = spec.message_bits();
  c.encode = [s](const Bits& m) { return ted_encode(m, *s); };
  c.decode = [s](const ChannelOutput& y) { return ted_decode(as_ragged(y), *s); };
  return c;
}

// ---------------------------------------------------------------------------
// Round-trip harness
// ---------------------------------------------------------------------------

struct Counterexample {
  std::size_t message_index = 0;
  std::size_t instance_index = 0;
  Bits message;
  ChannelInstance instance;
  std::string received;
  std::string reason;
};

struct RunRecord {
  std::string codec;
  std::string channel;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::optional<Counterexample> first_failure;

  // Associative and order-independent: the kept counterexample is the one
  // with the smallest (message, instance) index.
  void merge(const RunRecord& o) {
    trials += o.trials;
    failures += o.failures;
    if (o.first_failure) {
      const auto key = [](const Counterexample& c) { return std::pair(c.message_index, c.instance_index); };
      if (!first_failure || key(*o.first_failure) < key(*first_failure)) first_failure = o.first_failure;
    }
  }

  std::string describe() const {
    std::ostringstream out;
    out << "codec=\"" << codec << "\" channel=\"" << channel << "\" seed=" << seed << " trials=" << trials
        << " failures=" << failures << "\n";
    if (first_failure) {
      out << "first failure: message " << bits_to_string(first_failure->message) << " instance "
          << first_failure->instance.describe() << " reason: " << first_failure->reason << "\nreceived:\n"
          << first_failure->received;
    }
    return out.str();
  }
};

struct HarnessOptions {
  std::size_t messages = 100;
  bool exhaustive = true;             // every channel instance per message
  std::size_t samples_per_message = 100;  // used when not exhaustive
  std::uint64_t seed = 1;
  std::uint64_t max_work = 1'000'000;  // instance limit per message
  unsigned threads = 1;
};

inline RunRecord roundtrip_harness(const Codec& codec, const ChannelSpec& spec, const HarnessOptions& opt) {
  // Messages are drawn up front so the record does not depend on threading.
  std::mt19937_64 rng(opt.seed);
  std::vector<Bits> messages(opt.messages, Bits(codec.message_bits));
  for (auto& m : messages)
    for (auto& b : m) b = rng() & 1;
  std::vector<std::vector<ChannelInstance>> sampled;
  if (!opt.exhaustive) {
    sampled.resize(opt.messages);
    for (auto& v : sampled)
      for (std::size_t k = 0; k < opt.samples_per_message; ++k) v.push_back(sample_channel_instance(spec, codec.n, codec.L, rng));
  } else if (count_channel_instances(spec, codec.n, codec.L) > opt.max_work) {
    throw std::length_error("roundtrip_harness: channel enumeration exceeds the work limit");
  }

  auto run_range = [&](std::size_t lo, std::size_t hi) {
    RunRecord rec;
    for (std::size_t mi = lo; mi < hi; ++mi) {
      const BitArray x = codec.encode(messages[mi]);
      std::size_t ii = 0;
      auto check = [&](const ChannelInstance& inst) {
        ++rec.trials;
        const ChannelOutput y = apply_channel(x, spec, inst);
        std::string reason;
        try {
          if (codec.decode(y) != x) reason = "decoded to a different array";
        } catch (const std::exception& ex) {
          reason = ex.what();
        }
        if (!reason.empty()) {
          ++rec.failures;
          Counterexample c{mi, ii, messages[mi], inst, to_text(y), reason};
          RunRecord one;
          one.first_failure = c;
          rec.merge(one);
        }
        ++ii;
        return true;
      };
      if (opt.exhaustive) {
        enumerate_channel_instances(spec, codec.n, codec.L, check, opt.max_work);
      } else {
        for (const auto& inst : sampled[mi]) check(inst);
      }
    }
    return rec;
  };

  RunRecord total;
  total.codec = codec.descriptor;
  total.channel = spec.describe() + (opt.exhaustive ? " exhaustive" : " random");
  total.seed = opt.seed;
  const unsigned workers = std::max(1U, std::min<unsigned>(opt.threads, static_cast<unsigned>(std::max<std::size_t>(1, opt.messages))));
  if (workers == 1) {
    total.merge(run_range(0, opt.messages));
    return total;
  }
  std::vector<RunRecord> parts(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = opt.messages * w / workers, hi = opt.messages * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] { parts[w] = run_range(lo, hi); });
  }
  for (auto& th : pool) th.join();
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace tecodes
