#include "symcone/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace symcone {

int IntegerPartition::total() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

std::string IntegerPartition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

Partition::Partition(GroundSet ground, std::vector<SubsetMask> blocks) : ground_(ground), blocks_(std::move(blocks)) {
  SubsetMask seen = 0;
  for (SubsetMask b : blocks_) {
    if (b == 0) throw ArgumentError("partition has an empty block");
    if (!ground_.contains(b)) throw ArgumentError("partition block outside the ground set");
    if (seen & b) throw ArgumentError("partition blocks overlap");
    seen |= b;
  }
  if (seen != ground_.full()) throw ArgumentError("partition blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end(), [](SubsetMask a, SubsetMask b) { return (a & -a) < (b & -b); });
}

static std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ArgumentError("empty entry in '" + std::string(text) + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ArgumentError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw ArgumentError("trailing comma in '" + std::string(text) + "'");
  return out;
}

Partition Partition::parse(std::string_view text) {
  if (text.empty()) throw ArgumentError("empty partition literal");
  if (text.front() == '[') {
    if (text.back() != ']') throw ArgumentError("unterminated partition shape");
    auto sizes = parse_int_list(text.substr(1, text.size() - 2));
    if (sizes.empty()) throw ArgumentError("empty partition shape");
    return consecutive(sizes);
  }
  std::vector<std::vector<int>> blocks;
  std::size_t start = 0;
  while (true) {
    auto bar = text.find('|', start);
    auto piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    auto elems = parse_int_list(piece);
    if (elems.empty()) throw ArgumentError("empty block in '" + std::string(text) + "'");
    blocks.push_back(std::move(elems));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  int n = 0;
  for (const auto& b : blocks)
    for (int e : b) {
      if (e < 1) throw ArgumentError("partition elements start at 1");
      n = std::max(n, e);
    }
  if (n > kDenseCap) throw UnsupportedError("ground set size " + std::to_string(n) + " exceeds the dense cap");
  std::vector<SubsetMask> masks;
  for (const auto& b : blocks) {
    SubsetMask m = 0;
    for (int e : b) {
      if (m & element_bit(e)) throw ArgumentError("element " + std::to_string(e) + " repeated in a block");
      m |= element_bit(e);
    }
    masks.push_back(m);
  }
  return Partition(GroundSet(n), std::move(masks));
}

Partition Partition::singletons(int n) {
  std::vector<SubsetMask> b;
  for (int i = 1; i <= n; ++i) b.push_back(element_bit(i));
  return Partition(GroundSet(n), std::move(b));
}

Partition Partition::whole(int n) {
  GroundSet g(n);
  return Partition(g, {g.full()});
}

Partition Partition::consecutive(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) {
    if (s < 1) throw ArgumentError("block sizes must be positive");
    n += s;
  }
  GroundSet g(n);
  std::vector<SubsetMask> b;
  int next = 1;
  for (int s : sizes) {
    SubsetMask m = 0;
    for (int i = 0; i < s; ++i) m |= element_bit(next++);
    b.push_back(m);
  }
  return Partition(g, std::move(b));
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> out;
  for (SubsetMask b : blocks_) out.push_back(cardinality(b));
  return out;
}

int Partition::block_of(int element) const {
  for (int l = 0; l < t(); ++l)
    if (blocks_[l] & element_bit(element)) return l;
  throw ArgumentError("element " + std::to_string(element) + " not in the ground set");
}

std::string Partition::to_string() const {
  std::string s;
  for (int l = 0; l < t(); ++l) {
    if (l) s += "|";
    auto e = elements_of(blocks_[l]);
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  }
  return s;
}

PartitionVector partition_vector(SubsetMask a, const Partition& p) {
  if (!p.ground().contains(a)) throw ArgumentError("subset outside the ground set");
  PartitionVector v;
  v.reserve(p.t());
  for (SubsetMask b : p.blocks()) v.push_back(cardinality(a & b));
  return v;
}

bool refines(const Partition& p1, const Partition& p2) {
  if (!(p1.ground() == p2.ground())) return false;
  for (SubsetMask b : p1.blocks()) {
    bool inside = false;
    for (SubsetMask c : p2.blocks())
      if ((b & c) == b) inside = true;
    if (!inside) return false;
  }
  return true;
}

bool covers(const Partition& p2, const Partition& p1) { return refines(p1, p2) && p2.t() + 1 == p1.t(); }

IntegerPartition integer_partition_of(const Partition& p) {
  auto s = p.block_sizes();
  std::sort(s.rbegin(), s.rend());
  return {s};
}

std::vector<IntegerPartition> integer_partitions(int n) {
  std::vector<IntegerPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back({cur});
      return;
    }
    for (int k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(n, n);
  return out;
}

Partition canonical(const IntegerPartition& shape) {
  auto sizes = shape.parts;
  std::sort(sizes.begin(), sizes.end());
  return Partition::consecutive(sizes);
}

std::vector<Partition> canonical_representatives(int n) {
  std::vector<Partition> out;
  for (const auto& ip : integer_partitions(n)) out.push_back(canonical(ip));
  return out;
}

std::vector<Partition> all_partitions(int n) {
  // Restricted growth strings.
  std::vector<Partition> out;
  if (n < 1) return out;
  GroundSet g(n);
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int i, int m) {
    if (i == n) {
      std::vector<SubsetMask> blocks(m + 1, 0);
      for (int e = 0; e < n; ++e) blocks[a[e]] |= element_bit(e + 1);
      out.emplace_back(g, std::move(blocks));
      return;
    }
    for (int v = 0; v <= m + 1; ++v) {
      a[i] = v;
      rec(i + 1, std::max(m, v));
    }
  };
  a[0] = 0;
  rec(1, 0);
  return out;
}

}  // namespace symcone
