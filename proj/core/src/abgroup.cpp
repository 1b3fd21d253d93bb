#include "realcurves/abgroup.hpp"

#include <stdexcept>
#include <vector>

namespace realcurves {

AbGroupDescriptor AbGroupDescriptor::free(int rank) {
  AbGroupDescriptor g;
  g.free_rank = rank;
  g.validate();
  return g;
}

AbGroupDescriptor AbGroupDescriptor::divisible(int copies) {
  AbGroupDescriptor g;
  g.qz = copies;
  g.validate();
  return g;
}

AbGroupDescriptor AbGroupDescriptor::cyclic(int n, int count) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  if (count < 0) throw std::invalid_argument("negative summand count");
  AbGroupDescriptor g;
  if (n == 1 || count == 0) return g;
  if (n == 2) {
    g.z2 = count;
  } else if (n == 4) {
    g.z4 = count;
  } else {
    g.zn = CyclicPart{n, count};
  }
  return g;
}

bool AbGroupDescriptor::is_trivial() const {
  return free_rank == 0 && z2 == 0 && z4 == 0 && qz == 0 && !zn;
}

void AbGroupDescriptor::validate() const {
  if (free_rank < 0 || z2 < 0 || z4 < 0 || qz < 0) {
    throw std::invalid_argument("abelian group descriptor with a negative count");
  }
  if (zn && (zn->n < 3 || zn->n == 4 || zn->count <= 0)) {
    throw std::invalid_argument("malformed Z/n summand");
  }
}

AbGroupDescriptor direct_sum(const AbGroupDescriptor& a, const AbGroupDescriptor& b) {
  AbGroupDescriptor out;
  out.free_rank = a.free_rank + b.free_rank;
  out.z2 = a.z2 + b.z2;
  out.z4 = a.z4 + b.z4;
  out.qz = a.qz + b.qz;
  if (a.zn && b.zn) {
    if (a.zn->n != b.zn->n) throw std::invalid_argument("cannot combine Z/n summands with different n");
    out.zn = CyclicPart{a.zn->n, a.zn->count + b.zn->count};
  } else {
    out.zn = a.zn ? a.zn : b.zn;
  }
  return out;
}

AbGroupDescriptor operator+(const AbGroupDescriptor& a, const AbGroupDescriptor& b) { return direct_sum(a, b); }

namespace {

std::string summand(const std::string& name, bool needs_parens, int count) {
  if (count == 1) return name;
  return (needs_parens ? "(" + name + ")" : name) + "^" + std::to_string(count);
}

}  // namespace

std::string format(const AbGroupDescriptor& g) {
  g.validate();
  std::vector<std::string> parts;
  if (g.free_rank > 0) parts.push_back(summand("Z", false, g.free_rank));
  if (g.qz > 0) parts.push_back(summand("Q/Z", true, g.qz));
  if (g.z4 > 0) parts.push_back(summand("Z/4", true, g.z4));
  if (g.zn) parts.push_back(summand("Z/" + std::to_string(g.zn->n), true, g.zn->count));
  if (g.z2 > 0) parts.push_back(summand("Z/2", true, g.z2));
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) out += " (+) " + parts[i];
  return out;
}

}  // namespace realcurves
