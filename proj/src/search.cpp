#include "tkem/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "tkem/errors.hpp"
#include "tkem/kemeny.hpp"
#include "tkem/kernels.hpp"

namespace tkem {

namespace {

constexpr std::size_t max_order = 26;
constexpr double screen_window = 1e-6;

struct ChunkBest {
  bool done = false;
  Rational k;
  std::vector<ConstructionCode> codes;  // ascending
};

void merge(ChunkBest& into, const Rational& k, const ConstructionCode& code) {
  if (into.codes.empty() || k > into.k) {
    into.k = k;
    into.codes = {code};
  } else if (k == into.k) {
    into.codes.push_back(code);
  }
}

ChunkBest evaluate_chunk(const CodeRange& range, bool exact_only) {
  ChunkBest best;
  best.done = true;
  if (exact_only) {
    for (std::uint64_t i = range.first_index(); i < range.first_index() + range.size(); ++i) {
      auto code = range.at(i);
      merge(best, *kemeny_from_code(code).exact, code);
    }
    return best;
  }
  const auto count = static_cast<std::size_t>(range.size());
  std::vector<std::uint64_t> masks(count);
  std::vector<double> values(count);
  for (std::size_t b = 0; b < count; ++b) masks[b] = range.mask_at(range.first_index() + b);
  kernels::active().kemeny_batch(masks, static_cast<unsigned>(range.order()), values);
  const double top = *std::max_element(values.begin(), values.end());
  for (std::size_t b = 0; b < count; ++b) {
    if (values[b] < top - screen_window) continue;
    auto code = ConstructionCode::from_mask(masks[b], range.order());
    merge(best, *kemeny_from_code(code).exact, code);
  }
  return best;
}

[[noreturn]] void bad_checkpoint(const std::string& why) { throw Error(ErrorKind::CheckpointMismatch, why); }

void load_checkpoint(const std::filesystem::path& path, std::size_t n, std::vector<ChunkBest>& chunks) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::uint64_t prefix = 0;
    std::string code_text, num, den, extra;
    if (!(fields >> prefix >> code_text >> num >> den) || (fields >> extra))
      bad_checkpoint("malformed checkpoint line " + std::to_string(lineno));
    if (code_text.size() != n)
      bad_checkpoint("checkpoint line " + std::to_string(lineno) + " is for order " +
                     std::to_string(code_text.size()) + ", not " + std::to_string(n));
    if (prefix >= chunks.size()) bad_checkpoint("checkpoint prefix " + std::to_string(prefix) + " out of range");
    ConstructionCode code = parse_code(code_text);
    Rational k;
    try {
      k = ratio(BigInt(num), BigInt(den));
    } catch (const std::invalid_argument&) {
      bad_checkpoint("bad rational on checkpoint line " + std::to_string(lineno));
    }
    if (CodeRange::index_of(code) >> std::min<std::size_t>(n - 2, search_chunk_bits) != prefix)
      bad_checkpoint("checkpoint code does not belong to its prefix");
    chunks[prefix].done = true;
    merge(chunks[prefix], k, code);
  }
}

}  // namespace

bool same_result(const SearchReport& a, const SearchReport& b) {
  return a.n == b.n && a.argmax == b.argmax && a.max_k == b.max_k && a.max_k_float == b.max_k_float &&
         a.is_pineapple == b.is_pineapple && a.r == b.r && a.ties == b.ties &&
         a.codes_examined == b.codes_examined && a.complete == b.complete;
}

SearchReport max_kemeny_search(std::size_t n, unsigned threads) {
  SearchOptions options;
  options.threads = threads;
  return max_kemeny_search(n, options);
}

SearchReport max_kemeny_search(std::size_t n, const SearchOptions& options) {
  if (n < 3 || n > max_order) throw Error(ErrorKind::OrderOutOfRange, "search needs 3 <= n <= 26");
  if (options.threads == 0) throw Error(ErrorKind::ParameterOutOfRange, "search needs at least one thread");
  const auto start = std::chrono::steady_clock::now();

  const unsigned interior = static_cast<unsigned>(n - 2);
  const unsigned prefix_bits = interior > search_chunk_bits ? interior - search_chunk_bits : 0;
  const auto ranges = enumerate_codes(n).split(prefix_bits);
  std::vector<ChunkBest> chunks(ranges.size());
  if (options.checkpoint) load_checkpoint(*options.checkpoint, n, chunks);

  std::ofstream log;
  if (options.checkpoint) {
    log.open(*options.checkpoint, std::ios::app);
    if (!log) throw Error(ErrorKind::CheckpointMismatch, "cannot open checkpoint " + options.checkpoint->string());
  }
  std::mutex log_mutex;

  std::vector<std::size_t> pending;
  for (std::size_t c = 0; c < chunks.size(); ++c)
    if (!chunks[c].done) pending.push_back(c);
  if (options.chunk_limit && pending.size() > *options.chunk_limit) pending.resize(*options.chunk_limit);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < pending.size(); t = next++) {
      const std::size_t c = pending[t];
      chunks[c] = evaluate_chunk(ranges[c], options.exact_only);
      if (!log.is_open()) continue;
      std::string lines;
      for (const auto& code : chunks[c].codes)
        lines += std::to_string(c) + ' ' + code.str() + ' ' + chunks[c].k.get_num().get_str() + ' ' +
                 chunks[c].k.get_den().get_str() + '\n';
      std::lock_guard lock(log_mutex);
      log << lines << std::flush;
    }
  };
  const unsigned workers = std::min<std::size_t>(options.threads, std::max<std::size_t>(pending.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SearchReport report;
  report.n = n;
  ChunkBest overall;
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    if (!chunks[c].done) {
      report.complete = false;
      continue;
    }
    report.codes_examined += ranges[c].size();
    for (const auto& code : chunks[c].codes) merge(overall, chunks[c].k, code);
  }
  std::sort(overall.codes.begin(), overall.codes.end());
  report.ties = overall.codes;
  if (!report.ties.empty()) {
    report.argmax = report.ties.front();
    report.max_k = overall.k;
    report.max_k_float = overall.k.get_d();
    for (const auto& code : report.ties) {
      const int r = pineapple_parameter(code);
      if (r >= 0) {
        report.is_pineapple = true;
        report.r = r;
        break;
      }
    }
  }
  report.asymptote = static_cast<double>(n) + std::sqrt(static_cast<double>(n)) / 2.0;
  report.remainder = report.max_k_float - report.asymptote;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SearchReport> verify_conjecture_range(std::size_t n_min, std::size_t n_max, unsigned threads) {
  if (n_min < 3 || n_min > n_max || n_max > max_order)
    throw Error(ErrorKind::OrderOutOfRange, "conjecture range needs 3 <= n_min <= n_max <= 26");
  std::vector<SearchReport> out;
  for (std::size_t n = n_min; n <= n_max; ++n) out.push_back(max_kemeny_search(n, threads));
  return out;
}

}  // namespace tkem
