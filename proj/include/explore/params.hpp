#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace explore {

enum class Topology { Simple, Rec, Chain };

std::string_view to_string(Topology t);
Topology parse_topology(std::string_view name);

struct Params {
  Topology topology = Topology::Rec;
  std::uint32_t x = 2;
  std::uint32_t y = 0;
  std::uint32_t levels = 0;  // N; always 0 for Simple

  // Level of the top blocks.
  std::uint32_t top_level() const { return topology == Topology::Simple ? 0 : levels; }
};

// Validates and fills defaults: y = x/2 for Chain and 0 otherwise; levels = 0.
Params make_params(Topology topology, std::uint32_t x, std::optional<std::uint32_t> y = std::nullopt,
                   std::optional<std::uint32_t> levels = std::nullopt);

std::string describe(const Params& p);

}  // namespace explore
