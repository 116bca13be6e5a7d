// Copyright 2026 The payplay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Player sets, pure and mixed strategy profiles, and the comparison
// tolerance shared by every analysis.

#ifndef PAYPLAY_PROFILE_HPP_
#define PAYPLAY_PROFILE_HPP_

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "payplay/errors.hpp"

namespace payplay {

using PlayerId = int;

// Hard ceiling for every exhaustive (2^n) scan.
inline constexpr int kMaxPlayers = 24;
// Full per-player tables hold 2^(n-1) entries; above this they are refused.
inline constexpr int kMaxTabularPlayers = 16;

// A set of players stored as a bitmask; bit i set means player i is present.
class Coalition {
 public:
  using Mask = std::uint32_t;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask bits) : bits_(bits) {}

  static Coalition of(std::initializer_list<PlayerId> members) {
    Mask bits = 0;
    for (PlayerId p : members) bits |= Mask{1} << p;
    return Coalition(bits);
  }
  static Coalition of(std::span<const PlayerId> members) {
    Mask bits = 0;
    for (PlayerId p : members) bits |= Mask{1} << p;
    return Coalition(bits);
  }
  static constexpr Coalition all(int n) {
    return Coalition(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static constexpr Coalition single(PlayerId p) {
    return Coalition(Mask{1} << p);
  }

  constexpr Mask mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(PlayerId p) const { return (bits_ >> p) & 1U; }
  constexpr bool subset_of(Coalition other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr Coalition with(PlayerId p) const {
    return Coalition(bits_ | (Mask{1} << p));
  }
  constexpr Coalition without(PlayerId p) const {
    return Coalition(bits_ & ~(Mask{1} << p));
  }
  // Complement relative to {0, ..., n-1}.
  constexpr Coalition complement(int n) const {
    return Coalition(~bits_ & all(n).bits_);
  }

  std::vector<PlayerId> members() const {
    std::vector<PlayerId> out;
    out.reserve(size());
    for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (PlayerId p : members()) {
      if (!first) s += ",";
      s += std::to_string(p);
      first = false;
    }
    return s + "}";
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.bits_ | b.bits_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.bits_ & b.bits_);
  }
  friend constexpr bool operator==(Coalition, Coalition) = default;
  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  Mask bits_ = 0;
};

enum class Strategy { kPay, kPlay };

// Pure strategy profile: each player either pays (x_i = 1) or plays (x_i = 0).
// The canonical integer encoding is the payer bitmask.
class PureProfile {
 public:
  PureProfile() = default;
  PureProfile(int n, Coalition payers) : n_(n), payers_(payers) {
    if (n < 0 || n > 32) throw InvalidGame("profile length out of range");
    if (!payers.subset_of(Coalition::all(n))) {
      throw InvalidGame("payer set exceeds profile length");
    }
  }

  static PureProfile all_pay(int n) { return {n, Coalition::all(n)}; }
  static PureProfile all_play(int n) { return {n, Coalition{}}; }
  static PureProfile from_play_set(int n, Coalition players) {
    return {n, players.complement(n)};
  }
  // flags[i] == true means player i pays.
  static PureProfile from_pay_flags(const std::vector<bool>& flags) {
    Coalition payers;
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (flags[i]) payers = payers.with(static_cast<PlayerId>(i));
    }
    return {static_cast<int>(flags.size()), payers};
  }

  int size() const { return n_; }
  bool pays(PlayerId i) const { return payers_.contains(i); }
  bool plays(PlayerId i) const { return !payers_.contains(i); }
  Strategy strategy(PlayerId i) const {
    return pays(i) ? Strategy::kPay : Strategy::kPlay;
  }
  Coalition pay_set() const { return payers_; }
  Coalition play_set() const { return payers_.complement(n_); }
  Coalition::Mask bitmask() const { return payers_.mask(); }

  PureProfile with(PlayerId i, Strategy s) const {
    return {n_, s == Strategy::kPay ? payers_.with(i) : payers_.without(i)};
  }
  PureProfile flipped(PlayerId i) const {
    return with(i, pays(i) ? Strategy::kPlay : Strategy::kPay);
  }

  // One character per player, 'P' = pay, '-' = play.
  std::string to_string() const {
    std::string s;
    for (PlayerId i = 0; i < n_; ++i) s += pays(i) ? 'P' : '-';
    return s;
  }

  friend bool operator==(const PureProfile&, const PureProfile&) = default;

 private:
  int n_ = 0;
  Coalition payers_;
};

// The set of players choosing play, A(x).
inline Coalition play_set(const PureProfile& profile) {
  return profile.play_set();
}

// Mixed profile: entry i is the probability that player i pays.
class MixedProfile {
 public:
  MixedProfile() = default;
  explicit MixedProfile(std::vector<double> pay_probs)
      : probs_(std::move(pay_probs)) {
    for (double p : probs_) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidGame("pay probability outside [0, 1]");
      }
    }
  }
  explicit MixedProfile(const PureProfile& pure) : probs_(pure.size()) {
    for (PlayerId i = 0; i < pure.size(); ++i) probs_[i] = pure.pays(i) ? 1 : 0;
  }
  static MixedProfile uniform(int n, double p) {
    return MixedProfile(std::vector<double>(n, p));
  }

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](PlayerId i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

  MixedProfile with(PlayerId i, double p) const {
    MixedProfile out = *this;
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidGame("pay probability outside [0, 1]");
    }
    out.probs_[i] = p;
    return out;
  }

  bool is_pure() const {
    for (double p : probs_) {
      if (p != 0.0 && p != 1.0) return false;
    }
    return true;
  }

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;

 private:
  std::vector<double> probs_;
};

// Absolute slack for real comparisons. "a < b" means a < b - eps and
// "a == b" means |a - b| <= eps.
struct Tolerance {
  double eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double e) : eps(e) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw BadParameters("tolerance must be a positive finite number");
    }
  }

  bool less(double a, double b) const { return a < b - eps; }
  bool greater(double a, double b) const { return a > b + eps; }
  bool less_equal(double a, double b) const { return a <= b + eps; }
  bool equal(double a, double b) const { return std::fabs(a - b) <= eps; }
};

inline void require_cap(int n, int cap) {
  if (n > cap) throw CapExceeded(n, cap);
}

}  // namespace payplay

#endif  // PAYPLAY_PROFILE_HPP_
