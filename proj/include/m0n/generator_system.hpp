#pragma once

#include <memory>
#include <string>
#include <vector>

#include "m0n/errors.hpp"

namespace m0n {

// A finite list of named, positively weighted generators for a graded
// polynomial ring.  The built-in systems:
//   lazard : u1..u5, weight(u_i) = i      (universal coefficient ring, complete
//                                          through weight 5)
//   kbeta  : beta, weight 1               (multiplicative theory; complete at
//                                          every weight)
//   empty  : no generators                (additive theory; ring is just the
//                                          scalars)
//   pbasis : p1..p5, weight(p_i) = i      (projective-space classes as an
//                                          alternative basis of the universal
//                                          ring)
class GeneratorSystem {
 public:
  struct Generator {
    std::string symbol;
    int weight;
    bool operator==(const Generator&) const = default;
  };

  GeneratorSystem(std::string name, std::vector<Generator> gens, int complete_through)
      : name_(std::move(name)), gens_(std::move(gens)), complete_through_(complete_through) {
    for (const auto& g : gens_) {
      if (g.weight <= 0) fail(ErrorCode::InvalidInput, "generator weight must be positive");
    }
  }

  const std::string& name() const { return name_; }
  std::size_t size() const { return gens_.size(); }
  const Generator& generator(std::size_t i) const { return gens_.at(i); }
  int weight(std::size_t i) const { return gens_.at(i).weight; }
  const std::string& symbol(std::size_t i) const { return gens_.at(i).symbol; }

  // Largest weight at which homogeneous values expressed over this system are
  // complete.  -1 means "no bound".  For the five-generator universal system
  // a weight-6 value would need a sixth generator, so anything beyond weight 5
  // is unrepresentable and must never be trusted.
  int complete_through() const { return complete_through_; }

  int index_of(const std::string& symbol) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].symbol == symbol) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const GeneratorSystem& o) const {
    return name_ == o.name_ && gens_ == o.gens_;
  }

  static std::shared_ptr<const GeneratorSystem> lazard() {
    static auto s = std::make_shared<const GeneratorSystem>(
        "lazard",
        std::vector<Generator>{{"u1", 1}, {"u2", 2}, {"u3", 3}, {"u4", 4}, {"u5", 5}},
        5);
    return s;
  }

  static std::shared_ptr<const GeneratorSystem> kbeta() {
    static auto s = std::make_shared<const GeneratorSystem>(
        "kbeta", std::vector<Generator>{{"beta", 1}}, -1);
    return s;
  }

  static std::shared_ptr<const GeneratorSystem> empty() {
    static auto s =
        std::make_shared<const GeneratorSystem>("empty", std::vector<Generator>{}, -1);
    return s;
  }

  // Projective-space classes [P^1]..[P^5] as an alternative basis of the
  // universal coefficient ring (same weights, same completeness window).
  static std::shared_ptr<const GeneratorSystem> pbasis() {
    static auto s = std::make_shared<const GeneratorSystem>(
        "pbasis",
        std::vector<Generator>{{"p1", 1}, {"p2", 2}, {"p3", 3}, {"p4", 4}, {"p5", 5}},
        5);
    return s;
  }

  static std::shared_ptr<const GeneratorSystem> by_name(const std::string& name) {
    if (name == "lazard") return lazard();
    if (name == "kbeta") return kbeta();
    if (name == "empty") return empty();
    if (name == "pbasis") return pbasis();
    fail(ErrorCode::InvalidInput, "unknown generator system '" + name + "'");
  }

 private:
  std::string name_;
  std::vector<Generator> gens_;
  int complete_through_;
};

using SystemPtr = std::shared_ptr<const GeneratorSystem>;

inline void require_same_system(const SystemPtr& a, const SystemPtr& b) {
  if (a == b) return;
  if (a && b && *a == *b) return;
  fail(ErrorCode::SystemMismatch,
       "operands live over '" + (a ? a->name() : "?") + "' and '" + (b ? b->name() : "?") + "'");
}

}  // namespace m0n
