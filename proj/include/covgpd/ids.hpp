#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace covgpd {

/// Dense small-integer identifier, numbered from 0 within one groupoid.
template <typename Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(Id, Id) = default;
};

struct ObjTag;
struct ArrTag;

using ObjId = Id<ObjTag>;
using ArrId = Id<ArrTag>;

}  // namespace covgpd

template <typename Tag>
struct std::hash<covgpd::Id<Tag>> {
  std::size_t operator()(covgpd::Id<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
