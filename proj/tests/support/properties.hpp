#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace deloop::testing {

struct PropertyResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && instances > 0; }
};

/// Each instance gets its own generator seeded from (seed, index) so a failure replays in isolation.
using PropertyBody = std::function<std::optional<std::string>(std::uint64_t instance_seed)>;
PropertyResult run_property(const std::string& name, std::uint64_t seed, std::size_t instances, const PropertyBody& body);

inline constexpr std::size_t kPropertyInstances = 50;

PropertyResult schanuel_property(std::uint64_t seed, std::size_t instances = kPropertyInstances);
PropertyResult krull_schmidt_property(std::uint64_t seed, std::size_t instances = kPropertyInstances);
PropertyResult rank_nullity_property(std::uint64_t seed, std::size_t instances = kPropertyInstances);
PropertyResult syzygy_dimension_property(std::uint64_t seed, std::size_t instances = kPropertyInstances);
PropertyResult level_zero_property(std::uint64_t seed, std::size_t instances = kPropertyInstances);
PropertyResult decompose_brute_force_property(std::uint64_t seed, std::size_t instances = kPropertyInstances);

/// The six suites above, in order.
std::vector<PropertyResult> core_property_suite(std::uint64_t seed);

}  // namespace deloop::testing
