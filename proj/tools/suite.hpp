#pragma once

#include <cstdint>
#include <vector>

#include "gz/verify.hpp"

namespace gz::suite {

/// Randomised property checks shared by the CLI. Each report records its
/// sample count, worst defect and tolerance.
std::vector<verify::VerificationReport> run_all(std::uint64_t seed, int samples);

verify::VerificationReport bracket_commutativity(std::uint64_t seed, int samples, int n);
verify::VerificationReport flow_commutativity(std::uint64_t seed, int samples);
verify::VerificationReport flow_conservation(std::uint64_t seed, int samples);
verify::VerificationReport kw_relations(std::uint64_t seed, int samples);
verify::VerificationReport kw_fd_cross_check(std::uint64_t seed, int samples);
verify::VerificationReport lax_closed_form(std::uint64_t seed, int samples);
verify::VerificationReport kernel_round_trips(std::uint64_t seed, int samples);

}  // namespace gz::suite
