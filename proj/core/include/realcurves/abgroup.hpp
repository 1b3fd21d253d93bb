#pragma once

#include <optional>
#include <string>

namespace realcurves {

/// r copies of Z/n for a single n >= 3, n != 4 (Z/2 and Z/4 have their own
/// counters).
struct CyclicPart {
  int n = 0;
  int count = 0;
  friend bool operator==(const CyclicPart&, const CyclicPart&) = default;
};

/// The abelian group Z^free_rank (+) (Q/Z)^qz (+) (Z/4)^z4 (+) (Z/n)^m (+) (Z/2)^z2.
/// Q/Z is an opaque summand and is never split into p-primary parts.
struct AbGroupDescriptor {
  int free_rank = 0;
  int z2 = 0;
  int z4 = 0;
  int qz = 0;
  std::optional<CyclicPart> zn;

  static AbGroupDescriptor trivial() { return {}; }
  static AbGroupDescriptor free(int rank);
  static AbGroupDescriptor divisible(int copies);
  /// (Z/n)^count, folded into z2 / z4 when n is 2 or 4. n = 1 gives the
  /// trivial group. Throws std::invalid_argument for n < 1 or count < 0.
  static AbGroupDescriptor cyclic(int n, int count = 1);

  bool is_trivial() const;
  /// Throws std::invalid_argument when a count is negative or zn is malformed.
  void validate() const;

  friend bool operator==(const AbGroupDescriptor&, const AbGroupDescriptor&) = default;
};

/// Field-wise direct sum. Throws std::invalid_argument if both sides carry
/// Z/n summands with different n.
AbGroupDescriptor direct_sum(const AbGroupDescriptor& a, const AbGroupDescriptor& b);
AbGroupDescriptor operator+(const AbGroupDescriptor& a, const AbGroupDescriptor& b);

/// "Z^2 (+) Q/Z (+) Z/4 (+) (Z/3)^2 (+) (Z/2)^3"; the trivial group is "0".
std::string format(const AbGroupDescriptor& g);

}  // namespace realcurves
