#pragma once

#include <memory>
#include <string>
#include <vector>

#include "iwahori/root_datum.hpp"

namespace iwahori {

struct DescriptorError : std::runtime_error {
  int line;
  int column;
  DescriptorError(int l, int c, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ", col " +
                           std::to_string(c) + ": " + msg),
        line(l),
        column(c) {}
};

// Line-oriented key=value group descriptor:
//   component=A:2        (repeatable; base components before res_copies)
//   isogeny=sc           sc | ad | rows
//   row=1 0              (repeatable, only with isogeny=rows; entries a or a/b,
//                         length = total semisimple rank + central_rank)
//   central_rank=0
//   res_copies=1         copies with cyclic sigma through them
//   diagram=identity     or comma list of 1-based maps "1>3,3>1"
//   inner=trivial        or nu(i) / nu(i)^j
// '#' starts a comment; blank lines ignored. serialize() emits the canonical
// form, which parses back to the same descriptor byte-identically.
struct GroupDescriptor {
  std::vector<std::pair<TypeLabel, int>> components;
  std::string isogeny = "sc";
  std::vector<RVec> rows;
  int central_rank = 0;
  int res_copies = 1;
  std::vector<std::pair<int, int>> diagram;  // sparse 1-based maps, sorted
  std::string inner = "trivial";

  std::string serialize() const;
};

GroupDescriptor parse_descriptor(const std::string& text);

// Realize the descriptor: res_copies expanded, lattice built, the sigma node
// permutation assembled (cyclic shift through the copies, the diagram map on
// the wrap-around step).
struct RealizedDescriptor {
  GroupDescriptor desc;
  std::unique_ptr<RootDatum> datum;
  std::vector<int> node_perm;
  std::string inner;
};
RealizedDescriptor realize(const GroupDescriptor& d);

}  // namespace iwahori
