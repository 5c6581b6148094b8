#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinelab/halfplane.hpp"

namespace spinelab::cli {

using Json = nlohmann::ordered_json;

Json point_json(UHPoint z);

// Each builder returns the document its subcommand prints. Key order is part
// of the output format.
Json cmd_reduce(UHPoint z);
Json cmd_classify(UHPoint z);
Json cmd_spines(UHPoint z, bool oriented);
std::string cmd_spines_csv(UHPoint z, bool oriented);
Json cmd_count(UHPoint z, bool oriented);
Json cmd_systole(UHPoint z);
Json cmd_spectrum(UHPoint z, bool oriented);
Json cmd_disc_model(UHPoint z);
Json cmd_extremal(int genus);

/// Reduced tori drawn uniformly from the fundamental domain with Im <= im_max,
/// from a platform-independent stream seeded by `seed`.
std::vector<UHPoint> random_reduced_tori(std::size_t count, std::uint64_t seed, double im_max = 3.0);

struct OracleRun {
  Json report;
  bool all_matched;
};

OracleRun cmd_oracle_verify(const std::vector<UHPoint>& tori, bool unoriented);

}  // namespace spinelab::cli
