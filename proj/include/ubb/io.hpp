#pragma once

#include "ubb/block_cube.hpp"
#include "ubb/matrix.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ubb {

// Text format for exact matrices:
//   rmat <rows> <cols>
//   <num>/<den> ... (cols entries per row, one row per line)
// Entries are always written with an explicit denominator, in lowest terms
// with a positive denominator, so write -> read -> write is byte-identical.
void write_rmat(std::ostream& os, const RationalMatrix& m);
RationalMatrix read_rmat(std::istream& is);
void write_rmat_file(const std::string& path, const RationalMatrix& m);
RationalMatrix read_rmat_file(const std::string& path);

struct StateSetData {
    int d = 0;
    std::vector<TripartiteState> states;
};

// Text format for labelled state lists (sparse, ascending flat indices):
//   stateset d=<d> n=<count>
//   <label> : <idx>=<num>/<den> <idx>=<num>/<den> ...
void write_stateset(std::ostream& os, const StateSetData& data);
StateSetData read_stateset(std::istream& is);
void write_stateset_file(const std::string& path, const StateSetData& data);
StateSetData read_stateset_file(const std::string& path);

}  // namespace ubb
