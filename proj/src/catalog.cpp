#include "cubic/catalog.hpp"

namespace cubic {

const std::vector<CatalogSurface>& f4_surfaces() {
  static const std::vector<CatalogSurface> s = {
      {0, "GF(4)", "x0^3 + x1^3 + x0^2*x2 + x2^3 + x3^3"},
      {1, "GF(4)", "x0^3 + a*x0*x1^2 + x1^3 + a*x0^2*x2 + x2^3 + a*x0^2*x3 + a*x0*x1*x3 + x3^3"},
      {2, "GF(4)", "x0^3 + a*x0*x1^2 + x1^3 + a*x0*x1*x2 + x2^3 + a*x0^2*x3 + a*x0*x1*x3 + x3^3"},
      {3, "GF(4)", "x0^3 + x0^2*x1 + x1^3 + x0^2*x2 + x2^3 + x3^3"},
      {5, "GF(4)", "x0^3 + a*x0^2*x1 + a*x0*x1^2 + x1^3 + a*x0*x1*x2 + x2^3 + a*x0*x1*x3 + x3^3"},
      {7, "GF(4)", "x0^2*x1 + x0*x1^2 + x0^2*x2 + x2^3 + x0^2*x3 + x3^3"},
      {9, "GF(4)", "x0^3 + x1^3 + a*x2^3 + a*x3^3"},
      {15, "GF(4)",
       "a*x0^3 + x0^2*x1 + x0*x1^2 + a*x1^3 + x0^2*x2 + x0*x1*x2 + x1^2*x2 + x0*x2^2 + x1*x2^2 + a*x2^3"
       " + x0^2*x3 + x0*x1*x3 + x1^2*x3 + x0*x2*x3 + x1*x2*x3 + x2^2*x3 + x0*x3^2 + x1*x3^2 + x2*x3^2"
       " + a*x3^3"},
      {27, "GF(4)", "x0^3 + x1^3 + x2^3 + x3^3"},
  };
  return s;
}

const CatalogSurface& f8_split_surface() {
  static const CatalogSurface s{27, "GF(8)", "x0^2*x3 + x1^2*x2 + x0*x3^2 + x1*x2^2 + x1*x2*x3"};
  return s;
}

std::string fermat_equation() { return "x0^3 + x1^3 + x2^3 + x3^3"; }

}  // namespace cubic
