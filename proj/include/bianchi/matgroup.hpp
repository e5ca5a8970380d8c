#pragma once

#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "bianchi/resring.hpp"

namespace bianchi {

// 2x2 matrix over a QuotientRing, row major.
struct Mat2 {
  Residue a, b, c, d;

  const QuotientRing& ring() const { return *a.ring; }

  static Mat2 identity(const QuotientRing& Q);
  static Mat2 from_quadints(const QuotientRing& Q, const QuadInt& a,
                            const QuadInt& b, const QuadInt& c,
                            const QuadInt& d);

  Mat2 operator*(const Mat2& o) const;
  bool operator==(const Mat2& o) const;
  bool operator!=(const Mat2& o) const { return !(*this == o); }

  Residue det() const { return a * d - b * c; }
  // Adjugate; equals the inverse for det = 1 matrices (checked).
  Mat2 inverse() const;
  Mat2 negated() const;
  Mat2 pow(long e) const;
  bool is_identity() const;

  // Canonical encoding (a, b, c, d) with each residue packed as u*c+v.
  std::array<int64_t, 4> key() const;
};

struct MatKeyHash {
  size_t operator()(const std::array<int64_t, 4>& k) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int64_t x : k) {
      h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

// The standard generators (1.1)/(4.1) reduced into Q, plus the order-3
// element R used in the mod-2 analysis.
Mat2 gen_T1(const QuotientRing& Q);
Mat2 gen_Tw(const QuotientRing& Q);
Mat2 gen_S(const QuotientRing& Q);
Mat2 gen_R(const QuotientRing& Q);
std::vector<Mat2> standard_generators(const QuotientRing& Q);

// Fully enumerated subgroup of SL(2, O/I), or of its PSL quotient where
// M and -M are identified (the stored representative is the lex-min of
// the pair). Element vectors are kept sorted by key, so equal subgroups
// are bit-identical regardless of how they were produced.
class FiniteMatrixGroup {
 public:
  static constexpr long kMaxElements = 200000;

  const QuotientRing& ring() const { return *ring_; }
  bool psl_mode() const { return psl_; }
  long order() const { return static_cast<long>(elems_.size()); }
  const std::vector<Mat2>& elements() const { return elems_; }
  const std::vector<Mat2>& generators() const { return gens_; }

  Mat2 canonical(const Mat2& m) const;
  bool contains(const Mat2& m) const;
  bool same_elements(const FiniteMatrixGroup& o) const;
  bool subset_of(const FiniteMatrixGroup& o) const;

  friend FiniteMatrixGroup make_group(const QuotientRing& Q, bool psl,
                                      std::vector<Mat2> elems,
                                      std::vector<Mat2> gens);

 private:
  const QuotientRing* ring_ = nullptr;
  bool psl_ = false;
  std::vector<Mat2> elems_;
  std::unordered_set<std::array<int64_t, 4>, MatKeyHash> index_;
  std::vector<Mat2> gens_;
};

// Assembles a group from an explicit element list (validated for
// duplicates, sorted canonically). Building block for the enumerators.
FiniteMatrixGroup make_group(const QuotientRing& Q, bool psl,
                             std::vector<Mat2> elems, std::vector<Mat2> gens);

// Brute force over all entry 4-tuples with det = 1. The quartic scan is
// the oracle the closed-form index is tested against, so it must stay
// independent of the generator machinery.
FiniteMatrixGroup sl2_enumerate(const QuotientRing& Q,
                                long tuple_cap = 400000000LL);

// Breadth-first closure under multiplication by the generators and their
// inverses. Generators must have determinant 1.
FiniteMatrixGroup subgroup_closure(const std::vector<Mat2>& gens,
                                   const QuotientRing& Q, bool psl,
                                   long max_elements =
                                       FiniteMatrixGroup::kMaxElements);

// Smallest subgroup of ambient containing seed and closed under
// conjugation by ambient. Conjugates by ambient's recorded generators
// when it has them, by every element otherwise.
FiniteMatrixGroup normal_closure(const std::vector<Mat2>& seed,
                                 const FiniteMatrixGroup& ambient);

FiniteMatrixGroup derived_subgroup(const FiniteMatrixGroup& G);

// Subgroup generated by { g^k : g in G }, over all elements.
FiniteMatrixGroup power_subgroup(const FiniteMatrixGroup& G, long k);

FiniteMatrixGroup psl_quotient(const FiniteMatrixGroup& G);

// { g in G : g = I mod modulus(Q_small) } (= +-I in PSL mode); the finite
// image of the principal congruence subgroup. modulus(Q_small) must
// divide modulus(Q_big).
FiniteMatrixGroup reduction_kernel(const QuotientRing& Q_big,
                                   const QuotientRing& Q_small,
                                   const FiniteMatrixGroup& G);

bool is_normal_in(const FiniteMatrixGroup& H, const FiniteMatrixGroup& G);

struct StructureReport {
  long order = 0;
  bool is_abelian = false;
  long exponent_divides = 0;  // 0 when not determined
  long center_order = 0;
  long derived_index = 0;
};

StructureReport structure_probe(const FiniteMatrixGroup& G);

bool is_elementary_abelian(const FiniteMatrixGroup& G, long p);

std::string to_string(const Mat2& m);

}  // namespace bianchi
