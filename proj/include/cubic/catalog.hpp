#ifndef CUBIC_CATALOG_HPP
#define CUBIC_CATALOG_HPP

#include <string>
#include <vector>

namespace cubic {

struct CatalogSurface {
  int lines;            // rational line count
  std::string field;    // field text accepted by parse_field
  std::string equation; // in x0..x3, generator 'a'
};

// Smooth cubic surfaces over F_4, one per admissible rational line count.
const std::vector<CatalogSurface>& f4_surfaces();

// Smooth cubic surface over F_8 with 27 rational lines.
const CatalogSurface& f8_split_surface();

// The Fermat cubic.
std::string fermat_equation();

}  // namespace cubic

#endif  // CUBIC_CATALOG_HPP
