#include "ajcable/modular.hpp"

namespace ajcable {

std::vector<std::size_t> independent_rows_mod(const std::vector<std::vector<std::uint64_t>>& rows,
                                              const Zp& field) {
  // Echelon basis kept with explicit pivot columns; each incoming row is
  // reduced against it and kept if anything survives.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    std::vector<std::uint64_t> v = rows[idx];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint64_t f = v[pivots[b]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (basis[b][c] != 0) v[c] = field.sub(v[c], field.mul(f, basis[b][c]));
    }
    std::size_t pc = 0;
    while (pc < v.size() && v[pc] == 0) ++pc;
    if (pc == v.size()) continue;
    const std::uint64_t scale = field.inv(v[pc]);
    for (auto& x : v) x = field.mul(x, scale);
    basis.push_back(std::move(v));
    pivots.push_back(pc);
    chosen.push_back(idx);
  }
  return chosen;
}

}  // namespace ajcable
