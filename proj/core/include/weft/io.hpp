#pragma once

#include <string>

#include "weft/energy.hpp"
#include "weft/particle.hpp"
#include "weft/partition.hpp"

namespace weft {

// Serialization boundary. JSON work is confined to the implementation file;
// this interface traffics in strings and paths only. Malformed input of any
// kind raises std::invalid_argument with a human-readable reason.

// {"states": ["bbar","abar","a","b"], "matrix": [[...], ...]}
EnergyMatrix energy_from_json(const std::string& text);
EnergyMatrix load_energy_file(const std::string& path);
std::string energy_to_json(const EnergyMatrix& e, int indent = 2);

// Text shorthand for particles. A primary is "k:state"; a secondary is
// "k*upper.lower" where k is the half-potential (the stored coordinate, not
// the potential 2k+eps).
std::string particle_token(const EnergyMatrix& e, const Particle& p);
Particle parse_particle_token(const EnergyMatrix& e, const std::string& token);

// comma-separated particle tokens (whitespace tolerated when parsing)
std::string partition_tokens(const EnergyMatrix& e, const ColoredPartition& p);
ColoredPartition parse_partition_tokens(const EnergyMatrix& e, Side side,
                                        const std::string& text);

// {"flavor": "O"|"E", "particles": [{"k":11,"state":"bbar"},
//                                   {"k":5,"upper":"b","lower":"a"}, ...]}
std::string partition_to_json(const EnergyMatrix& e,
                              const ColoredPartition& p, int indent = -1);
ColoredPartition partition_from_json(const EnergyMatrix& e,
                                     const std::string& text);

// {"primaries": n, "labels": [...], "matrix": [[...], ...],
//  "secondary_parity": [...]}
std::string difference_matrix_to_json(const DifferenceMatrix& d,
                                      int indent = 2);
DifferenceMatrix difference_matrix_from_json(const std::string& text);

} // namespace weft
