#include "entkit/profile.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace entkit {

DimProfile::DimProfile(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("DimProfile: needs at least one subsystem");
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("DimProfile: local dimensions must be >= 1");
  }
  strides_.assign(dims_.size(), 1);
  for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * dims_[i + 1];
  total_ = strides_[0] * dims_[0];
}

std::vector<int> DimProfile::digits(long index) const {
  std::vector<int> out(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    out[i] = static_cast<int>((index / strides_[i]) % dims_[i]);
  }
  return out;
}

long DimProfile::index_of(const std::vector<int>& digits) const {
  if (digits.size() != dims_.size())
    throw std::invalid_argument("DimProfile::index_of: digit count mismatch");
  long idx = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= dims_[i])
      throw std::invalid_argument("DimProfile::index_of: digit out of range");
    idx += digits[i] * strides_[i];
  }
  return idx;
}

DimProfile DimProfile::restricted(const std::vector<int>& keep) const {
  std::vector<int> d;
  d.reserve(keep.size());
  for (int p : keep) d.push_back(dim(p));
  return DimProfile(d);
}

long DimProfile::dim_of(const std::vector<int>& parties) const {
  long d = 1;
  for (int p : parties) d *= dim(p);
  return d;
}

std::string DimProfile::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) os << 'x';
    os << dims_[i];
  }
  return os.str();
}

namespace {

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("Partition: empty index in '" + text + "'");
    std::size_t pos = 0;
    const int v = std::stoi(item, &pos);
    if (pos != item.size() || v < 0)
      throw std::invalid_argument("Partition: bad index '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> side_a, std::vector<int> side_b)
    : a_(std::move(side_a)), b_(std::move(side_b)) {
  std::sort(a_.begin(), a_.end());
  std::sort(b_.begin(), b_.end());
  if (a_.empty() || b_.empty())
    throw std::invalid_argument("Partition: both sides must be nonempty");
  std::set<int> seen;
  for (int i : a_) {
    if (i < 0 || !seen.insert(i).second)
      throw std::invalid_argument("Partition: duplicate or negative index");
  }
  for (int i : b_) {
    if (i < 0 || !seen.insert(i).second)
      throw std::invalid_argument("Partition: sides must be disjoint");
  }
}

Partition Partition::parse(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("Partition: expected 'a,b|c,d' syntax in '" + text + "'");
  return Partition(parse_index_list(text.substr(0, bar)),
                   parse_index_list(text.substr(bar + 1)));
}

bool Partition::covers(int parties) const {
  if (static_cast<int>(a_.size() + b_.size()) != parties) return false;
  for (int i : a_)
    if (i >= parties) return false;
  for (int i : b_)
    if (i >= parties) return false;
  return true;
}

void Partition::require_covers(int parties) const {
  if (!covers(parties))
    throw std::invalid_argument("Partition " + to_string() + " does not cover all " +
                                std::to_string(parties) + " parties");
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
  os << '|';
  for (std::size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i];
  return os.str();
}

}  // namespace entkit
