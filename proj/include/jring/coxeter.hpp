#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jring/util.hpp"

namespace jring {

using ElementIndex = std::uint32_t;
using GenSet = std::uint32_t;  // descent bitmask over generators

// Presentation data: generator names (single characters) and the Coxeter
// matrix.  m(s,s) = 1, m(s,t) >= 2, symmetric.
struct CoxeterDescriptor {
  std::vector<char> names;
  std::vector<std::vector<int>> mat;

  int rank() const { return int(names.size()); }
  int bond(int s, int t) const { return mat[s][t]; }
  void validate() const;

  // Built-in types: A1..A4, B3, H3, H4, I2_m (m >= 2).
  static CoxeterDescriptor builtin(const std::string& type);
  static bool is_builtin(const std::string& type);
  // `rank n` / `order a b c ...` / `coxeter a b 3` lines; unlisted pairs
  // default to bond 2; '#' starts a comment.
  static CoxeterDescriptor from_text(const std::string& text);

  std::string canonical_text() const;
  std::uint64_t stable_hash() const;
};

struct BuildOptions {
  std::size_t max_elements = 20000;
  // route rank-2 descriptors through the reflection representation instead
  // of the dihedral normal-form builder (cross-checking only)
  bool force_reflection = false;
  // |W| from the order formula of a recognized built-in, 0 if unknown
  std::size_t expected_order = 0;
};

// A fully enumerated finite Coxeter group.  Elements are dense indices in
// ShortLex order of their normal forms (so index 0 is the identity and
// indices are sorted by length).  Immutable after build; safe to share.
class CoxeterGroup {
 public:
  static CoxeterGroup build(const CoxeterDescriptor& d, BuildOptions opt = {});

  CoxeterGroup(CoxeterGroup&&) noexcept;
  CoxeterGroup& operator=(CoxeterGroup&&) noexcept;
  ~CoxeterGroup();

  const CoxeterDescriptor& descriptor() const { return desc_; }
  int rank() const { return rank_; }
  std::size_t size() const { return length_.size(); }

  ElementIndex identity() const { return 0; }
  ElementIndex longest() const { return w0_; }
  int length(ElementIndex w) const { return length_[w]; }
  int max_length() const { return length_[w0_]; }
  int epsilon(ElementIndex w) const { return (length_[w] & 1) ? -1 : 1; }

  ElementIndex left(int s, ElementIndex w) const { return left_[std::size_t(w) * rank_ + s]; }
  ElementIndex right(ElementIndex w, int s) const { return right_[std::size_t(w) * rank_ + s]; }
  GenSet left_descents(ElementIndex w) const { return ldesc_[w]; }
  GenSet right_descents(ElementIndex w) const { return rdesc_[w]; }
  ElementIndex inverse(ElementIndex w) const { return inv_[w]; }
  ElementIndex multiply(ElementIndex x, ElementIndex y) const;
  // t[w] = u * w for every w, in one O(|W|) sweep over the BFS tree
  std::vector<ElementIndex> translate_all(ElementIndex u) const;

  // ShortLex normal form as generator indices / as a name string
  std::vector<int> word(ElementIndex w) const;
  std::string word_string(ElementIndex w) const;
  ElementIndex element_from_word(const std::vector<int>& word) const;
  // characters must be declared generator names; ParseError carries the
  // offending position
  ElementIndex parse_word(const std::string& text) const;

  bool bruhat_leq(ElementIndex x, ElementIndex w) const;
  // all x <= w, ascending
  std::vector<ElementIndex> bruhat_downset(ElementIndex w) const;

  std::vector<std::size_t> length_histogram() const;

 private:
  CoxeterGroup() = default;

  struct BruhatTable;
  const BruhatTable& bruhat() const;

  CoxeterDescriptor desc_;
  int rank_ = 0;
  ElementIndex w0_ = 0;
  std::vector<std::uint16_t> length_;
  std::vector<GenSet> ldesc_, rdesc_;
  std::vector<ElementIndex> inv_;
  std::vector<ElementIndex> left_, right_;   // generator action tables
  std::vector<ElementIndex> parent_;         // BFS tree: w = parent * letter
  std::vector<std::uint8_t> letter_;
  std::unique_ptr<BruhatTable> bruhat_;      // built lazily
};

// Element with its owning group, for API surfaces where mixing groups is a
// caller error.
struct Element {
  const CoxeterGroup* group = nullptr;
  ElementIndex index = 0;
};

Element multiply(const Element& x, const Element& y);
Element inverse(const Element& x);
bool bruhat_leq(const Element& x, const Element& w);

// |W| by the order formula for recognized built-ins, 0 if unrecognized
std::size_t builtin_order(const std::string& type);
// builtin descriptor with the order-formula check wired in
CoxeterGroup build_builtin_group(const std::string& type, BuildOptions opt = {});

}  // namespace jring
