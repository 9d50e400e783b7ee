#include "gaiotto/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace gaiotto {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(), other.parts_.begin(),
                                                other.parts_.end());
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Largest first part first gives reverse-lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

struct CanonicalTables {
  std::mutex mu;
  std::map<int, std::unique_ptr<const std::vector<Partition>>> lists;
  std::map<int, std::unique_ptr<const std::map<Partition, std::size_t>>> indices;
};

CanonicalTables& canonical_tables() {
  static CanonicalTables t;
  return t;
}

}  // namespace

const std::vector<Partition>& canonical_partitions(int n) {
  auto& t = canonical_tables();
  std::lock_guard lock(t.mu);
  auto& slot = t.lists[n];
  if (!slot) slot = std::make_unique<const std::vector<Partition>>(partitions_of(n));
  return *slot;
}

std::size_t canonical_index(const Partition& p) {
  const auto& list = canonical_partitions(p.size());
  auto& t = canonical_tables();
  std::lock_guard lock(t.mu);
  auto& slot = t.indices[p.size()];
  if (!slot) {
    auto m = std::make_unique<std::map<Partition, std::size_t>>();
    for (std::size_t i = 0; i < list.size(); ++i) m->emplace(list[i], i);
    slot = std::move(m);
  }
  return slot->at(p);
}

std::int64_t partition_count(int n) { return static_cast<std::int64_t>(partitions_of(n).size()); }

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lambda.row(1)), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool contains_box(const Partition& lambda, int i, int j) {
  return i >= 1 && j >= 1 && i <= lambda.length() && j <= lambda.row(i);
}

ArmLeg arm_leg(const Partition& lambda, int i, int j) {
  int column_height = 0;
  for (int part : lambda.parts())
    if (part >= j) ++column_height;
  return {lambda.row(i) - j, column_height - i};
}

std::vector<Box> removable_corners(const Partition& lambda) {
  std::vector<Box> out;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.row(i) > lambda.row(i + 1)) out.push_back({i, lambda.row(i)});
  return out;
}

std::vector<Box> addable_cells(const Partition& lambda) {
  std::vector<Box> out;
  for (int i = 1; i <= lambda.length() + 1; ++i)
    if (i == 1 || lambda.row(i - 1) > lambda.row(i)) out.push_back({i, lambda.row(i) + 1});
  return out;
}

std::vector<Box> boxes(const Partition& lambda) {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) out.push_back({i, j});
  return out;
}

std::int64_t z_of(const Partition& lambda) {
  std::int64_t z = 1;
  const auto parts = lambda.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto m = static_cast<std::int64_t>(j - i);
    for (std::int64_t k = 1; k <= m; ++k) z *= k * parts[i];
    i = j;
  }
  return z;
}

Dominance compare_dominance(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return Dominance::DifferentSize;
  if (mu == lambda) return Dominance::Equal;
  bool some_less = false;
  bool some_greater = false;
  int sm = 0, sl = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 1; i <= len; ++i) {
    sm += mu.row(i);
    sl += lambda.row(i);
    if (sm < sl) some_less = true;
    if (sm > sl) some_greater = true;
  }
  if (some_less && some_greater) return Dominance::Incomparable;
  return some_less ? Dominance::Less : Dominance::Greater;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  const auto d = compare_dominance(mu, lambda);
  return d == Dominance::Equal || d == Dominance::Less;
}

bool contained_in(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.row(i) > lambda.row(i)) return false;
  return true;
}

Partition remove_box(const Partition& lambda, int row) {
  std::vector<int> p(lambda.parts().begin(), lambda.parts().end());
  --p.at(static_cast<std::size_t>(row - 1));
  return Partition(std::move(p));
}

Partition add_box(const Partition& lambda, int row) {
  std::vector<int> p(lambda.parts().begin(), lambda.parts().end());
  if (row == lambda.length() + 1)
    p.push_back(1);
  else
    ++p.at(static_cast<std::size_t>(row - 1));
  return Partition(std::move(p));
}

Partition with_part(const Partition& lambda, int k) {
  std::vector<int> p(lambda.parts().begin(), lambda.parts().end());
  p.insert(std::upper_bound(p.begin(), p.end(), k, std::greater<>()), k);
  return Partition(std::move(p));
}

Partition without_part(const Partition& lambda, int k) {
  std::vector<int> p(lambda.parts().begin(), lambda.parts().end());
  auto it = std::find(p.begin(), p.end(), k);
  if (it == p.end()) throw std::invalid_argument("without_part: part not present");
  p.erase(it);
  return Partition(std::move(p));
}

namespace {

void sort_reverse_lex(std::vector<Partition>& v) {
  std::sort(v.begin(), v.end(), [](const Partition& a, const Partition& b) { return b < a; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Partition> shrink_by(const Partition& lambda, int k) {
  if (k != 1 && k != 2) throw std::invalid_argument("shrink_by: k must be 1 or 2");
  std::vector<Partition> level{lambda};
  for (int step = 0; step < k; ++step) {
    std::vector<Partition> next;
    for (const auto& p : level)
      for (const auto& b : removable_corners(p)) next.push_back(remove_box(p, b.row));
    level = std::move(next);
  }
  sort_reverse_lex(level);
  return level;
}

std::vector<Partition> grow_by_one(const Partition& mu) {
  std::vector<Partition> out;
  for (const auto& c : addable_cells(mu)) out.push_back(add_box(mu, c.row));
  sort_reverse_lex(out);
  return out;
}

Partition parse_partition(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != ' ' && ch != '(' && ch != ')') s.push_back(ch);
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a partition: " + text);
    }
    if (used != item.size()) throw std::invalid_argument("not a partition: " + text);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

}  // namespace gaiotto
