#include "tkem/code.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <deque>
#include <string>

#include "tkem/errors.hpp"

namespace tkem {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::IllegalCharacter: return "IllegalCharacter";
    case ErrorKind::LeadingOne: return "LeadingOne";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonIntegralEntry: return "NonIntegralEntry";
    case ErrorKind::EigensolveFailure: return "EigensolveFailure";
    case ErrorKind::SingularSolve: return "SingularSolve";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::CheckpointMismatch: return "CheckpointMismatch";
  }
  return "Unknown";
}

ConstructionCode ConstructionCode::from_bits(std::vector<std::uint8_t> bits) {
  if (bits.empty()) throw Error(ErrorKind::EmptyInput, "construction code is empty");
  for (auto b : bits)
    if (b > 1) throw Error(ErrorKind::IllegalCharacter, "construction code entries must be 0 or 1");
  if (bits.front() != 0)
    throw Error(ErrorKind::LeadingOne, "construction code must start with 0");
  return ConstructionCode(std::move(bits));
}

ConstructionCode ConstructionCode::from_mask(std::uint64_t mask, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyInput, "construction code is empty");
  if (n > 64) throw Error(ErrorKind::ParameterOutOfRange, "mask codes are limited to 64 vertices");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t k = 0; k < n; ++k) bits[k] = static_cast<std::uint8_t>((mask >> k) & 1u);
  return from_bits(std::move(bits));
}

std::size_t ConstructionCode::ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t ConstructionCode::mask() const noexcept {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < bits_.size() && k < 64; ++k)
    m |= static_cast<std::uint64_t>(bits_[k]) << k;
  return m;
}

std::string ConstructionCode::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t k = 0; k < bits_.size(); ++k) s[k] = bits_[k] ? '1' : '0';
  return s;
}

namespace {

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

void append_token(std::string_view tok, std::vector<std::uint8_t>& out) {
  auto caret = tok.find('^');
  if (caret == std::string_view::npos) {
    for (char ch : tok) {
      if (ch != '0' && ch != '1')
        throw Error(ErrorKind::IllegalCharacter, "illegal character '" + std::string(1, ch) + "' in code");
      out.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return;
  }
  if (caret != 1 || (tok[0] != '0' && tok[0] != '1'))
    throw Error(ErrorKind::IllegalCharacter, "malformed run '" + std::string(tok) + "'");
  auto digits = tok.substr(2);
  std::size_t count = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), count);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || count == 0)
    throw Error(ErrorKind::IllegalCharacter, "malformed exponent in '" + std::string(tok) + "'");
  out.insert(out.end(), count, static_cast<std::uint8_t>(tok[0] - '0'));
}

}  // namespace

ConstructionCode parse_code(std::string_view text) {
  std::vector<std::uint8_t> bits;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) append_token(text.substr(i, j - i), bits);
    i = j;
  }
  if (bits.empty()) throw Error(ErrorKind::EmptyInput, "construction code is empty");
  return ConstructionCode::from_bits(std::move(bits));
}

std::string render_blocks(const ConstructionCode& code) {
  std::string out;
  for (const auto& run : blocks(code).spans()) {
    if (!out.empty()) out += ' ';
    out += run.bit ? '1' : '0';
    if (run.length > 1) out += '^' + std::to_string(run.length);
  }
  return out;
}

std::vector<BlockForm::Run> BlockForm::spans() const {
  std::vector<Run> out;
  out.reserve(runs.size());
  std::size_t pos = 0;
  for (std::size_t l = 0; l < runs.size(); ++l) {
    out.push_back({static_cast<int>(l % 2), pos, runs[l]});
    pos += runs[l];
  }
  return out;
}

ConstructionCode BlockForm::expand() const {
  std::vector<std::uint8_t> bits;
  for (std::size_t l = 0; l < runs.size(); ++l)
    bits.insert(bits.end(), runs[l], static_cast<std::uint8_t>(l % 2));
  return ConstructionCode::from_bits(std::move(bits));
}

BlockForm blocks(const ConstructionCode& code) {
  BlockForm form;
  std::size_t k = 0;
  while (k < code.size()) {
    std::size_t j = k;
    while (j < code.size() && code[j] == code[k]) ++j;
    form.runs.push_back(j - k);
    k = j;
  }
  return form;
}

DegreeProfile degree_profile(const ConstructionCode& code) {
  const std::size_t n = code.size();
  DegreeProfile p;
  p.degrees.resize(n);
  p.tail_ones.assign(n, 0);
  for (std::size_t k = n - 1; k-- > 0;) p.tail_ones[k] = p.tail_ones[k + 1] + code[k + 1];
  for (std::size_t k = 0; k < n; ++k) {
    p.degrees[k] = static_cast<std::int64_t>(k) * code[k] + p.tail_ones[k];
    p.edges += static_cast<std::int64_t>(k) * code[k];
  }
  return p;
}

bool AdjacencyStructure::adjacent(std::size_t u, std::size_t v) const {
  const auto& nb = neighbours[u];
  return std::binary_search(nb.begin(), nb.end(), static_cast<std::uint32_t>(v));
}

AdjacencyStructure build_graph(const ConstructionCode& code) {
  AdjacencyStructure g;
  g.n = code.size();
  g.neighbours.resize(g.n);
  for (std::uint32_t j = 0; j < g.n; ++j) {
    if (!code[j]) continue;
    for (std::uint32_t i = 0; i < j; ++i) g.edges.emplace_back(i, j);
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (auto [a, b] : g.edges) {
    g.neighbours[a].push_back(b);
    g.neighbours[b].push_back(a);
  }
  for (auto& nb : g.neighbours) std::sort(nb.begin(), nb.end());
  return g;
}

bool is_connected(const AdjacencyStructure& graph) {
  if (graph.n == 0) return false;
  std::vector<char> seen(graph.n, 0);
  std::deque<std::uint32_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : graph.neighbours[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        queue.push_back(v);
      }
  }
  return reached == graph.n;
}

CodeRange::CodeRange(std::size_t n, std::uint64_t first, std::uint64_t last)
    : n_(n), first_(first), last_(last) {}

std::uint64_t CodeRange::mask_at(std::uint64_t i) const noexcept {
  // interior bit c_{k+1} (vertex k, 1 <= k <= n-2) is bit (n-2-k) of i
  std::uint64_t mask = std::uint64_t{1} << (n_ - 1);
  for (std::size_t k = 1; k + 1 < n_; ++k)
    mask |= ((i >> (n_ - 2 - k)) & 1u) << k;
  return mask;
}

ConstructionCode CodeRange::at(std::uint64_t i) const { return ConstructionCode::from_mask(mask_at(i), n_); }

std::uint64_t CodeRange::index_of(const ConstructionCode& code) {
  const std::size_t n = code.size();
  std::uint64_t i = 0;
  for (std::size_t k = 1; k + 1 < n; ++k) i = (i << 1) | static_cast<std::uint64_t>(code[k]);
  return i;
}

std::vector<CodeRange> CodeRange::split(unsigned prefix_bits) const {
  const unsigned interior = static_cast<unsigned>(n_ - 2);
  prefix_bits = std::min(prefix_bits, interior);
  const std::uint64_t width = std::uint64_t{1} << (interior - prefix_bits);
  std::vector<CodeRange> parts;
  for (std::uint64_t lo = first_ - first_ % width; lo < last_; lo += width) {
    auto a = std::max(lo, first_);
    auto b = std::min(lo + width, last_);
    if (a < b) parts.emplace_back(n_, a, b);
  }
  return parts;
}

CodeRange enumerate_codes(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::OrderTooSmall, "enumeration needs n >= 2");
  if (n > 62) throw Error(ErrorKind::OrderOutOfRange, "enumeration is limited to n <= 62");
  return CodeRange(n, 0, std::uint64_t{1} << (n - 2));
}

ConstructionCode pineapple_code(std::size_t n, std::size_t r) {
  if (n < 3 || r > n - 2)
    throw Error(ErrorKind::ParameterOutOfRange, "pineapple code needs n >= 3 and 0 <= r <= n-2");
  std::vector<std::uint8_t> bits(n, 0);
  std::fill(bits.begin() + 1, bits.begin() + 1 + static_cast<std::ptrdiff_t>(r), std::uint8_t{1});
  bits.back() = 1;
  return ConstructionCode::from_bits(std::move(bits));
}

int pineapple_parameter(const ConstructionCode& code) {
  const std::size_t n = code.size();
  if (n < 3 || !code.connected()) return -1;
  std::size_t k = 1;
  while (k + 1 < n && code[k] == 1) ++k;
  for (std::size_t j = k; j + 1 < n; ++j)
    if (code[j] != 0) return -1;
  return static_cast<int>(k - 1);
}

}  // namespace tkem
