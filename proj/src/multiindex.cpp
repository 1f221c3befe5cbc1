#include "bellmoment/multiindex.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "bellmoment/errors.hpp"

namespace bellmoment {

MultiIndex::MultiIndex(std::initializer_list<std::uint32_t> entries)
    : entries_(entries) {}

MultiIndex::MultiIndex(std::vector<std::uint32_t> entries)
    : entries_(std::move(entries)) {}

MultiIndex MultiIndex::zero(std::size_t rank) {
  return MultiIndex(std::vector<std::uint32_t>(rank, 0));
}

MultiIndex MultiIndex::unit(std::size_t rank, std::size_t i) {
  if (i >= rank) throw PreconditionError("unit index out of range");
  std::vector<std::uint32_t> e(rank, 0);
  e[i] = 1;
  return MultiIndex(std::move(e));
}

std::uint64_t MultiIndex::height() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

static void require_same_rank(const MultiIndex& a, const MultiIndex& b) {
  if (a.rank() != b.rank()) {
    throw PreconditionError("multi-index rank mismatch: " +
                            std::to_string(a.rank()) + " vs " +
                            std::to_string(b.rank()));
  }
}

MultiIndex MultiIndex::operator+(const MultiIndex& rhs) const {
  require_same_rank(*this, rhs);
  std::vector<std::uint32_t> out(rank());
  for (std::size_t k = 0; k < rank(); ++k) out[k] = entries_[k] + rhs[k];
  return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::operator-(const MultiIndex& rhs) const {
  if (!is_below(rhs, *this)) {
    throw PreconditionError("multi-index difference requires rhs <= lhs");
  }
  std::vector<std::uint32_t> out(rank());
  for (std::size_t k = 0; k < rank(); ++k) out[k] = entries_[k] - rhs[k];
  return MultiIndex(std::move(out));
}

std::string MultiIndex::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(entries_[k]);
  }
  return s;
}

MultiIndex MultiIndex::parse(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw FormatError("empty entry in multi-index '" + text + "'");
    }
    std::string_view digits(item.data() + first, last - first + 1);
    std::uint32_t v = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw FormatError("invalid multi-index entry '" + std::string(digits) +
                        "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw FormatError("empty multi-index");
  return MultiIndex(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& alpha) {
  return os << '(' << alpha.to_string() << ')';
}

std::strong_ordering graded_lex_compare(const MultiIndex& a,
                                        const MultiIndex& b) {
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.entries().begin(), a.entries().end(), b.entries().begin(),
      b.entries().end());
}

LComposition::LComposition(std::vector<std::uint32_t> parts,
                           std::uint64_t target)
    : parts_(std::move(parts)), target_(target) {
  if (parts_.size() < 2) {
    throw PreconditionError("a composition needs at least two parts");
  }
  auto sum = std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
  if (sum != target_) {
    throw PreconditionError("composition parts do not sum to the target");
  }
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt multinomial(std::uint64_t n, std::span<const std::uint32_t> parts) {
  auto sum = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
  if (sum != n) {
    throw PreconditionError("multinomial: parts sum to " +
                            std::to_string(sum) + ", expected " +
                            std::to_string(n));
  }
  // Product of binomials C(k_1 + ... + k_i, k_i) avoids large intermediate
  // factorials.
  BigInt out = 1;
  std::uint64_t running = 0;
  for (auto k : parts) {
    running += k;
    out *= binomial(running, k);
  }
  return out;
}

BigInt multinomial(const LComposition& composition) {
  return multinomial(composition.target(), composition.parts());
}

BigInt factorial(const MultiIndex& alpha) {
  BigInt out = 1;
  for (auto k : alpha.entries()) out *= factorial(k);
  return out;
}

BigInt binomial(const MultiIndex& alpha, const MultiIndex& beta) {
  require_same_rank(alpha, beta);
  BigInt out = 1;
  for (std::size_t k = 0; k < alpha.rank(); ++k) {
    if (beta[k] > alpha[k]) return 0;
    out *= binomial(alpha[k], beta[k]);
  }
  return out;
}

bool is_below(const MultiIndex& beta, const MultiIndex& alpha) {
  require_same_rank(alpha, beta);
  for (std::size_t k = 0; k < alpha.rank(); ++k) {
    if (beta[k] > alpha[k]) return false;
  }
  return true;
}

bool is_strictly_below(const MultiIndex& beta, const MultiIndex& alpha) {
  return is_below(beta, alpha) && beta != alpha;
}

std::vector<MultiIndex> indices_below(const MultiIndex& alpha) {
  std::vector<MultiIndex> out;
  std::vector<std::uint32_t> cur(alpha.rank(), 0);
  // Odometer over the box, sorted afterwards.
  while (true) {
    out.emplace_back(cur);
    std::size_t k = 0;
    while (k < cur.size() && cur[k] == alpha[k]) cur[k++] = 0;
    if (k == cur.size()) break;
    ++cur[k];
  }
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

namespace {

void fill_compositions(std::uint64_t remaining, std::size_t slot,
                       std::vector<std::uint32_t>& cur,
                       std::vector<std::vector<std::uint32_t>>& out) {
  if (slot + 1 == cur.size()) {
    cur[slot] = static_cast<std::uint32_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (std::uint64_t k = 0; k <= remaining; ++k) {
    cur[slot] = static_cast<std::uint32_t>(k);
    fill_compositions(remaining - k, slot + 1, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> indices_up_to_height(std::size_t rank,
                                             std::uint64_t max_height) {
  if (rank == 0) throw PreconditionError("rank must be positive");
  std::vector<MultiIndex> out;
  for (std::uint64_t h = 0; h <= max_height; ++h) {
    if (rank == 1) {
      out.push_back(MultiIndex{static_cast<std::uint32_t>(h)});
      continue;
    }
    std::vector<std::vector<std::uint32_t>> level;
    std::vector<std::uint32_t> cur(rank, 0);
    fill_compositions(h, 0, cur, level);
    for (auto& e : level) out.emplace_back(std::move(e));
  }
  return out;
}

std::vector<LComposition> compositions(std::uint64_t n, std::size_t l) {
  if (l < 2) throw PreconditionError("compositions need l >= 2");
  std::vector<std::vector<std::uint32_t>> raw;
  std::vector<std::uint32_t> cur(l, 0);
  fill_compositions(n, 0, cur, raw);
  std::vector<LComposition> out;
  out.reserve(raw.size());
  for (auto& parts : raw) out.emplace_back(std::move(parts), n);
  return out;
}

MultiIndex project(const MultiIndex& alpha, const std::set<std::size_t>& keep) {
  std::vector<std::uint32_t> out(alpha.rank(), 0);
  for (auto k : keep) {
    if (k >= alpha.rank()) {
      throw PreconditionError("projection coordinate " + std::to_string(k) +
                              " out of range for rank " +
                              std::to_string(alpha.rank()));
    }
    out[k] = alpha[k];
  }
  return MultiIndex(std::move(out));
}

}  // namespace bellmoment
