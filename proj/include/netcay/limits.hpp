#pragma once

namespace netcay {

// Caps for the enumeration-heavy operations; exceeding one raises a typed
// error rather than degrading silently.
struct Limits {
  int order_cap = 128;                  // subgroup/normal-subgroup/automorphism enumeration
  long long aut_entry_cap = 1000000;    // |Aut(G)| * |G| image-table entries kept explicit
  int graph_cap = 4096;                 // vertices for graph products and isomorphism search
  int dihedral_enum_cap = 60;           // n for exhaustive 4-set enumeration on D_2n
};

inline const Limits& default_limits() {
  static const Limits lim{};
  return lim;
}

}  // namespace netcay
