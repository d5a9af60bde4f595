#include "iwahori/descriptor.hpp"

#include <algorithm>
#include <sstream>

namespace iwahori {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

TypeLabel parse_type(const std::string& t, int line, int col) {
  if (t.size() == 1 && t[0] >= 'A' && t[0] <= 'G')
    return static_cast<TypeLabel>(t[0]);
  throw DescriptorError(line, col, "unknown type '" + t + "'");
}

Rat parse_rat(const std::string& tok, int line, int col) {
  try {
    std::size_t slash = tok.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(tok));
    return Rat(std::stoll(tok.substr(0, slash)),
               std::stoll(tok.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw DescriptorError(line, col, "bad rational '" + tok + "'");
  }
}

long long parse_int(const std::string& tok, int line, int col) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::logic_error&) {
    throw DescriptorError(line, col, "bad integer '" + tok + "'");
  }
}

}  // namespace

std::string GroupDescriptor::serialize() const {
  std::ostringstream os;
  for (const auto& [t, r] : components)
    os << "component=" << static_cast<char>(t) << ":" << r << "\n";
  os << "isogeny=" << isogeny << "\n";
  if (isogeny == "rows")
    for (const auto& row : rows) {
      os << "row=";
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << " ";
        os << row[i].str();
      }
      os << "\n";
    }
  os << "central_rank=" << central_rank << "\n";
  os << "res_copies=" << res_copies << "\n";
  if (diagram.empty()) {
    os << "diagram=identity\n";
  } else {
    os << "diagram=";
    for (std::size_t i = 0; i < diagram.size(); ++i) {
      if (i) os << ",";
      os << diagram[i].first << ">" << diagram[i].second;
    }
    os << "\n";
  }
  os << "inner=" << inner << "\n";
  return os.str();
}

GroupDescriptor parse_descriptor(const std::string& text) {
  GroupDescriptor d;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  bool saw_component = false;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw DescriptorError(lineno, 1, "expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    int vcol = static_cast<int>(eq) + 2;
    if (val.empty()) throw DescriptorError(lineno, vcol, "empty value");

    if (key == "component") {
      std::size_t colon = val.find(':');
      if (colon == std::string::npos)
        throw DescriptorError(lineno, vcol, "expected TYPE:RANK");
      TypeLabel t = parse_type(trim(val.substr(0, colon)), lineno, vcol);
      long long r = parse_int(trim(val.substr(colon + 1)), lineno, vcol);
      if (r <= 0) throw DescriptorError(lineno, vcol, "nonpositive rank");
      d.components.emplace_back(t, static_cast<int>(r));
      saw_component = true;
    } else if (key == "isogeny") {
      if (val != "sc" && val != "ad" && val != "rows")
        throw DescriptorError(lineno, vcol,
                              "isogeny must be sc, ad or rows");
      d.isogeny = val;
    } else if (key == "row") {
      RVec row;
      std::istringstream rs(val);
      std::string tok;
      while (rs >> tok) row.push_back(parse_rat(tok, lineno, vcol));
      d.rows.push_back(std::move(row));
    } else if (key == "central_rank") {
      d.central_rank = static_cast<int>(parse_int(val, lineno, vcol));
      if (d.central_rank < 0)
        throw DescriptorError(lineno, vcol, "negative central rank");
    } else if (key == "res_copies") {
      d.res_copies = static_cast<int>(parse_int(val, lineno, vcol));
      if (d.res_copies < 1)
        throw DescriptorError(lineno, vcol, "res_copies must be >= 1");
    } else if (key == "diagram") {
      if (val != "identity") {
        std::istringstream ds(val);
        std::string item;
        while (std::getline(ds, item, ',')) {
          std::size_t gt = item.find('>');
          if (gt == std::string::npos)
            throw DescriptorError(lineno, vcol, "expected i>j");
          int from = static_cast<int>(
              parse_int(trim(item.substr(0, gt)), lineno, vcol));
          int to = static_cast<int>(
              parse_int(trim(item.substr(gt + 1)), lineno, vcol));
          d.diagram.emplace_back(from, to);
        }
        std::sort(d.diagram.begin(), d.diagram.end());
      }
    } else if (key == "inner") {
      d.inner = val;
    } else {
      throw DescriptorError(lineno, 1, "unknown key '" + key + "'");
    }
  }
  if (!saw_component) throw DescriptorError(lineno, 1, "no component given");
  if (d.isogeny != "rows" && !d.rows.empty())
    throw DescriptorError(lineno, 1, "row= lines require isogeny=rows");
  if (d.isogeny == "rows" && d.rows.empty())
    throw DescriptorError(lineno, 1, "isogeny=rows needs row= lines");
  return d;
}

RealizedDescriptor realize(const GroupDescriptor& d) {
  RealizedDescriptor out;
  out.desc = d;
  out.inner = d.inner;

  std::vector<std::pair<TypeLabel, int>> comps;
  for (int copy = 0; copy < d.res_copies; ++copy)
    for (const auto& c : d.components) comps.push_back(c);

  int base_rank = 0;
  for (const auto& [t, r] : d.components) base_rank += r;
  int total_ss = base_rank * d.res_copies;

  if (d.isogeny == "sc" || d.isogeny == "ad") {
    RMat block;
    if (d.isogeny == "sc") {
      block = RMat::identity(total_ss);
    } else {
      RootDatum tmp = RootDatum::adjoint(comps);
      block = tmp.basis();
    }
    int dim = total_ss + d.central_rank;
    RMat basis(dim, dim);
    for (int i = 0; i < total_ss; ++i)
      for (int j = 0; j < total_ss; ++j) basis(i, j) = block(i, j);
    for (int i = total_ss; i < dim; ++i) basis(i, i) = Rat(1);
    out.datum = std::make_unique<RootDatum>(comps, basis, d.central_rank);
  } else {
    int dim = total_ss + d.central_rank;
    RMat basis(dim, dim);
    if (static_cast<int>(d.rows.size()) != dim)
      throw std::invalid_argument(
          "descriptor: need exactly " + std::to_string(dim) + " rows");
    for (int i = 0; i < dim; ++i) {
      if (static_cast<int>(d.rows[i].size()) != dim)
        throw std::invalid_argument("descriptor: row length mismatch");
      for (int j = 0; j < dim; ++j) basis(i, j) = d.rows[i][j];
    }
    out.datum = std::make_unique<RootDatum>(comps, basis, d.central_rank);
  }

  // base diagram map (1-based, identity where unlisted)
  std::vector<int> base(base_rank);
  for (int i = 0; i < base_rank; ++i) base[i] = i;
  for (const auto& [from, to] : d.diagram) {
    if (from < 1 || from > base_rank || to < 1 || to > base_rank)
      throw std::invalid_argument("descriptor: diagram node out of range");
    base[from - 1] = to - 1;
  }
  // node permutation: copy t -> copy t+1 identically; the last copy maps to
  // the first through the diagram automorphism
  out.node_perm.resize(total_ss);
  for (int copy = 0; copy < d.res_copies; ++copy)
    for (int i = 0; i < base_rank; ++i) {
      int src = copy * base_rank + i;
      int dst = (copy + 1 < d.res_copies) ? (copy + 1) * base_rank + i
                                          : base[i];
      out.node_perm[src] = dst;
    }
  return out;
}

}  // namespace iwahori
