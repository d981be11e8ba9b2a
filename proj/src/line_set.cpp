#include "hashpim/line_set.hpp"

#include <algorithm>
#include <bit>

namespace hashpim {

LineSet LineSet::from_words(std::uint32_t first_word, std::vector<std::uint64_t> words) {
  std::size_t lo = 0;
  std::size_t hi = words.size();
  while (lo < hi && words[lo] == 0) ++lo;
  while (hi > lo && words[hi - 1] == 0) --hi;
  if (lo == hi) return {};
  auto d = std::make_shared<Data>();
  d->first_word = first_word + static_cast<std::uint32_t>(lo);
  d->words.assign(words.begin() + static_cast<std::ptrdiff_t>(lo),
                  words.begin() + static_cast<std::ptrdiff_t>(hi));
  for (auto w : d->words) d->count += static_cast<std::size_t>(std::popcount(w));
  d->min_line = d->first_word * 64 + static_cast<std::uint32_t>(std::countr_zero(d->words.front()));
  d->max_line = (d->first_word + static_cast<std::uint32_t>(d->words.size()) - 1) * 64 + 63 -
                static_cast<std::uint32_t>(std::countl_zero(d->words.back()));
  LineSet s;
  s.data_ = std::move(d);
  return s;
}

LineSet LineSet::single(std::uint32_t line) { return range(line, line + 1); }

LineSet LineSet::range(std::uint32_t first, std::uint32_t last) {
  if (first >= last) return {};
  const std::uint32_t fw = first / 64;
  const std::uint32_t lw = (last - 1) / 64;
  std::vector<std::uint64_t> words(lw - fw + 1, ~std::uint64_t{0});
  words.front() &= ~std::uint64_t{0} << (first % 64);
  const unsigned tail = (last - 1) % 64;
  words.back() &= tail == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (tail + 1)) - 1);
  return from_words(fw, std::move(words));
}

LineSet LineSet::of(std::span<const std::uint32_t> lines) {
  if (lines.empty()) return {};
  const auto [mn, mx] = std::minmax_element(lines.begin(), lines.end());
  const std::uint32_t fw = *mn / 64;
  std::vector<std::uint64_t> words(*mx / 64 - fw + 1, 0);
  for (auto l : lines) words[l / 64 - fw] |= std::uint64_t{1} << (l % 64);
  return from_words(fw, std::move(words));
}

LineSet LineSet::of(std::initializer_list<std::uint32_t> lines) {
  return of(std::span<const std::uint32_t>(lines.begin(), lines.size()));
}

bool LineSet::contains(std::uint32_t line) const {
  if (!data_) return false;
  const std::uint32_t w = line / 64;
  if (w < data_->first_word || w >= data_->first_word + data_->words.size()) return false;
  return (data_->words[w - data_->first_word] >> (line % 64)) & 1U;
}

bool LineSet::any_in(std::uint32_t lo, std::uint32_t hi) const {
  if (!data_ || lo >= hi || hi <= data_->min_line || lo > data_->max_line) return false;
  const std::uint32_t wlo = std::max(lo / 64, data_->first_word);
  const std::uint32_t whi =
      std::min((hi - 1) / 64, data_->first_word + static_cast<std::uint32_t>(data_->words.size()) - 1);
  for (std::uint32_t w = wlo; w <= whi; ++w) {
    std::uint64_t bits = data_->words[w - data_->first_word];
    const std::int64_t base = std::int64_t{w} * 64;
    const std::int64_t from = std::max<std::int64_t>(lo - base, 0);
    const std::int64_t to = std::min<std::int64_t>(hi - base, 64);
    if (to <= from) continue;
    bits &= ~std::uint64_t{0} << from;
    if (to < 64) bits &= (std::uint64_t{1} << to) - 1;
    if (bits) return true;
  }
  return false;
}

bool LineSet::intersects(const LineSet& other) const {
  if (!data_ || !other.data_) return false;
  const std::uint32_t lo = std::max(data_->first_word, other.data_->first_word);
  const std::uint32_t hi =
      std::min(data_->first_word + static_cast<std::uint32_t>(data_->words.size()),
               other.data_->first_word + static_cast<std::uint32_t>(other.data_->words.size()));
  for (std::uint32_t w = lo; w < hi; ++w) {
    if (data_->words[w - data_->first_word] & other.data_->words[w - other.data_->first_word])
      return true;
  }
  return false;
}

LineSet LineSet::unite(const LineSet& other) const {
  if (!data_) return other;
  if (!other.data_) return *this;
  const std::uint32_t lo = std::min(data_->first_word, other.data_->first_word);
  const std::uint32_t hi =
      std::max(data_->first_word + static_cast<std::uint32_t>(data_->words.size()),
               other.data_->first_word + static_cast<std::uint32_t>(other.data_->words.size()));
  std::vector<std::uint64_t> words(hi - lo, 0);
  for (std::size_t i = 0; i < data_->words.size(); ++i)
    words[data_->first_word - lo + i] |= data_->words[i];
  for (std::size_t i = 0; i < other.data_->words.size(); ++i)
    words[other.data_->first_word - lo + i] |= other.data_->words[i];
  return from_words(lo, std::move(words));
}

LineSet LineSet::restrict(std::uint32_t lo, std::uint32_t hi) const {
  if (!data_ || lo >= hi) return {};
  std::vector<std::uint64_t> words = data_->words;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::int64_t base = (data_->first_word + static_cast<std::int64_t>(i)) * 64;
    const std::int64_t from = std::clamp<std::int64_t>(lo - base, 0, 64);
    const std::int64_t to = std::clamp<std::int64_t>(hi - base, 0, 64);
    std::uint64_t keep = 0;
    if (to > from) {
      const std::uint64_t upto = to == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << to) - 1;
      keep = upto & (~std::uint64_t{0} << from);
    }
    words[i] &= keep;
  }
  return from_words(data_->first_word, std::move(words));
}

LineSet LineSet::shifted(std::int64_t delta) const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::uint32_t l) { out.push_back(static_cast<std::uint32_t>(l + delta)); });
  return of(out);
}

std::vector<std::uint32_t> LineSet::lines() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::uint32_t l) { out.push_back(l); });
  return out;
}

bool operator==(const LineSet& a, const LineSet& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.data_->first_word == b.data_->first_word && a.data_->words == b.data_->words;
}

}  // namespace hashpim
