#ifndef PROPKIT_PROP_HPP
#define PROPKIT_PROP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "propkit/color.hpp"
#include "propkit/error.hpp"
#include "propkit/perm.hpp"

namespace propkit {

class MorphismPayload {
public:
  virtual ~MorphismPayload() = default;
};

/// A morphism handle: profile plus a prop-specific payload and a key.
/// Within one prop, equal keys on equal profiles mean equal morphisms
/// (PresentedProp, where equality is a search, overrides Prop::equal).
class Morphism {
public:
  Morphism() = default;
  Morphism(ColorList source, ColorList target,
           std::shared_ptr<const MorphismPayload> payload, std::string key)
      : source_(std::move(source)),
        target_(std::move(target)),
        payload_(std::move(payload)),
        key_(std::move(key)) {}

  const ColorList& source() const { return source_; }
  const ColorList& target() const { return target_; }
  const std::string& key() const { return key_; }
  bool valid() const { return payload_ != nullptr; }

  template <typename T>
  const T& payload_as() const {
    const T* p = dynamic_cast<const T*>(payload_.get());
    require(p != nullptr, "morphism belongs to a different prop realization");
    return *p;
  }

  bool same_profile(const Morphism& rhs) const {
    return source_ == rhs.source_ && target_ == rhs.target_;
  }
  bool operator==(const Morphism& rhs) const {
    return same_profile(rhs) && key_ == rhs.key_;
  }
  bool operator!=(const Morphism& rhs) const { return !(*this == rhs); }
  bool operator<(const Morphism& rhs) const {
    if (source_ != rhs.source_) return source_ < rhs.source_;
    if (target_ != rhs.target_) return target_ < rhs.target_;
    return key_ < rhs.key_;
  }

private:
  ColorList source_, target_;
  std::shared_ptr<const MorphismPayload> payload_;
  std::string key_;
};

/// The abstract prop: colors, profile-indexed hom sets, identities,
/// vertical and horizontal composition, and the two symmetric actions.
/// act(sigma, tau, f) applies sigma upstairs (source becomes
/// source.act_right(sigma)) and tau downstairs (target becomes
/// target.act_left(tau)); the two commute.
class Prop : public std::enable_shared_from_this<Prop> {
public:
  virtual ~Prop() = default;

  virtual std::string name() const = 0;
  virtual const ColorSet& colors() const = 0;

  virtual Morphism identity(const Color& c) const = 0;
  /// The empty horizontal composite: the unit element of T(;).
  virtual Morphism unit() const = 0;
  virtual Morphism compose_v(const Morphism& f, const Morphism& g) const = 0;
  virtual Morphism compose_h(const Morphism& f, const Morphism& g) const = 0;
  virtual Morphism act(const Perm& sigma, const Perm& tau,
                       const Morphism& f) const = 0;

  virtual bool equal(const Morphism& f, const Morphism& g) const {
    return f == g;
  }

  /// Finite enumeration of one hom set, deterministic order. Props with
  /// infinite hom sets (free props) enumerate up to an internal bound.
  virtual std::vector<Morphism> hom(const ColorList& source,
                                    const ColorList& target) const = 0;

  /// Longest profile the realization supports (finite tables), if any.
  virtual std::optional<int> max_profile_len() const { return std::nullopt; }

  virtual std::string show(const Morphism& f) const { return f.key(); }

  /// id_{c_1} x ... x id_{c_n}; the unit for an empty list.
  Morphism identity_list(const ColorList& cs) const;

  void check_profile(const Morphism& f, const ColorList& source,
                     const ColorList& target, const std::string& where) const;
};

using PropPtr = std::shared_ptr<const Prop>;

/// The terminal prop: one color, every hom a singleton.
PropPtr terminal_prop();

}  // namespace propkit

#endif
