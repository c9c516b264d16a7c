#ifndef FAULTPATH_EXT_DIST_HPP_
#define FAULTPATH_EXT_DIST_HPP_

#include <cassert>
#include <cstdint>
#include <string>

namespace faultpath {

using int128 = __int128;

std::string to_string_int128(int128 v);

// Exact extended distance: either infinite, or a pair (length, tiebreak)
// compared lexicographically. The tiebreak word additionally carries, in its
// low kVirtualBits, a count of virtual (unfailable shortcut) edges on the
// path, so a path of real edges always beats an otherwise identical value
// that was condensed through a virtual edge. Addition is componentwise and
// saturating in the infinite value.
class ExtDist {
 public:
  static constexpr int kVirtualBits = 20;

  constexpr ExtDist() : main_(0), aux_(0) {}

  static constexpr ExtDist zero() { return ExtDist(); }

  static constexpr ExtDist infinity() {
    ExtDist d;
    d.main_ = kInfinite;
    d.aux_ = 0;
    return d;
  }

  // A finite value from a length and a raw tiebreak (key-space units).
  static constexpr ExtDist finite(int128 main, int128 tiebreak) {
    ExtDist d;
    d.main_ = main;
    d.aux_ = tiebreak << kVirtualBits;
    return d;
  }

  // The weight of a single real edge.
  static constexpr ExtDist edge(int64_t weight, uint64_t key) {
    return finite(static_cast<int128>(weight), static_cast<int128>(key));
  }

  bool is_infinite() const { return main_ == kInfinite; }
  bool is_finite() const { return main_ != kInfinite; }

  int128 main() const {
    assert(is_finite());
    return main_;
  }
  int128 tiebreak() const {
    assert(is_finite());
    return aux_ >> kVirtualBits;
  }

  // Marks the value as having crossed one more virtual edge.
  ExtDist through_virtual() const {
    if (is_infinite()) return *this;
    ExtDist d = *this;
    d.aux_ += 1;
    return d;
  }

  friend ExtDist operator+(const ExtDist& a, const ExtDist& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    ExtDist d;
    d.main_ = a.main_ + b.main_;
    d.aux_ = a.aux_ + b.aux_;
    return d;
  }
  ExtDist& operator+=(const ExtDist& o) { return *this = *this + o; }

  // Subtraction of a finite, virtual-free value; infinite minuend saturates.
  friend ExtDist operator-(const ExtDist& a, const ExtDist& b) {
    assert(b.is_finite());
    assert((b.aux_ & ((int128(1) << kVirtualBits) - 1)) == 0);
    if (a.is_infinite()) return infinity();
    ExtDist d;
    d.main_ = a.main_ - b.main_;
    d.aux_ = a.aux_ - b.aux_;
    return d;
  }

  friend bool operator==(const ExtDist& a, const ExtDist& b) {
    return a.main_ == b.main_ && a.aux_ == b.aux_;
  }
  friend bool operator!=(const ExtDist& a, const ExtDist& b) { return !(a == b); }
  friend bool operator<(const ExtDist& a, const ExtDist& b) {
    if (a.main_ != b.main_) return a.main_ < b.main_;
    return a.aux_ < b.aux_;
  }
  friend bool operator>(const ExtDist& a, const ExtDist& b) { return b < a; }
  friend bool operator<=(const ExtDist& a, const ExtDist& b) { return !(b < a); }
  friend bool operator>=(const ExtDist& a, const ExtDist& b) { return !(a < b); }

  friend const ExtDist& min(const ExtDist& a, const ExtDist& b) {
    return b < a ? b : a;
  }

  // Comparisons of the reported value (length, tiebreak), ignoring the
  // virtual-hop bias bits, which depend on how a route was assembled.
  friend bool same_value(const ExtDist& a, const ExtDist& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return a.main_ == b.main_ && (a.aux_ >> kVirtualBits) == (b.aux_ >> kVirtualBits);
  }
  friend bool value_less(const ExtDist& a, const ExtDist& b) {
    if (b.is_infinite()) return !a.is_infinite();
    if (a.is_infinite()) return false;
    if (a.main_ != b.main_) return a.main_ < b.main_;
    return (a.aux_ >> kVirtualBits) < (b.aux_ >> kVirtualBits);
  }

  std::string str() const;

 private:
  static constexpr int128 kInfinite =
      (int128(0x7fffffffffffffffLL) << 64) | int128(0xffffffffffffffffULL);

  int128 main_;
  int128 aux_;
};

inline ExtDist ext_add(const ExtDist& a, const ExtDist& b) { return a + b; }

}  // namespace faultpath

#endif  // FAULTPATH_EXT_DIST_HPP_
