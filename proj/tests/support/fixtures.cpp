#include "support/fixtures.hpp"

#include <stdexcept>

namespace fixtures {

RingPtr ring(const std::vector<std::string>& vars, const std::vector<std::string>& relations,
             const std::string& order, RingOptions options) {
  PolyRing P(PrimeField(), vars, parse_monomial_order(order));
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(P.parse(r));
  return QuotientRing::create(P, rels, std::move(options));
}

Polynomial poly(const RingPtr& R, const std::string& text) { return R->reduce(R->poly().parse(text)); }

Matrix matrix(const RingPtr& R, const std::vector<std::vector<std::string>>& rows, std::vector<int> row_degrees) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows[0].size() : 0;
  if (row_degrees.empty()) row_degrees.assign(nr, 0);
  std::vector<std::vector<Polynomial>> e(nr);
  std::vector<int> cd(nc, 0);
  std::vector<bool> seen(nc, false);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw std::logic_error("ragged matrix");
    for (std::size_t j = 0; j < nc; ++j) {
      e[i].push_back(poly(R, rows[i][j]));
      if (!seen[j] && !e[i][j].is_zero()) {
        cd[j] = e[i][j].degree() + row_degrees[i];
        seen[j] = true;
      }
    }
  }
  Matrix m(R, row_degrees, cd);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, e[i][j]);
  }
  return m;
}

PresentedModule coker(const RingPtr& R, const std::vector<std::vector<std::string>>& rows,
                      std::vector<int> row_degrees) {
  return PresentedModule(matrix(R, rows, std::move(row_degrees)));
}

PresentedModule quotient(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(poly(R, g));
  return PresentedModule::cyclic(R, ps);
}

std::vector<CorpusRing> corpus(const std::string& order) {
  std::vector<CorpusRing> out;
  {
    auto R = ring({"x", "y"}, {}, order);
    out.push_back({"k[x,y]",
                   R,
                   {{"k", PresentedModule::residue_field(R)},
                    {"R/(x)", quotient(R, {"x"})},
                    {"R/(x^2,xy)", quotient(R, {"x^2", "x*y"})},
                    {"R(-1)+R/(y)", direct_sum(PresentedModule::free(R, {1}), quotient(R, {"y"}))}},
                   {{"x", "y"}, {"x"}}});
  }
  {
    auto R = ring({"x", "y"}, {"x*y"}, order);
    out.push_back({"k[x,y]/(xy)",
                   R,
                   {{"k", PresentedModule::residue_field(R)},
                    {"R/(x)", quotient(R, {"x"})},
                    {"R/(y)", quotient(R, {"y"})},
                    {"R/(x^2)", quotient(R, {"x^2"})},
                    {"R", PresentedModule::free(R, {0})}},
                   {{"x", "y"}, {"x+y"}}});
  }
  {
    auto R = ring({"x", "y", "z", "w"}, {"x*y"}, order);
    out.push_back({"k[x,y,z,w]/(xy)",
                   R,
                   {{"R/(x)", quotient(R, {"x"})},
                    {"R/(y)", quotient(R, {"y"})},
                    {"R/(x,z)", quotient(R, {"x", "z"})},
                    {"coker[x z; 0 y]", coker(R, {{"x", "z"}, {"0", "y"}}, {0, 0})},
                    {"R/(z,w)", quotient(R, {"z", "w"})}},
                   {{"y", "z", "w"}, {"z", "w"}, {"x", "y", "z", "w"}}});
  }
  {
    auto R = ring({"x", "y", "z", "w"}, {"x*y", "z*w"}, order);
    out.push_back({"k[x,y,z,w]/(xy,zw)",
                   R,
                   {{"k", PresentedModule::residue_field(R)},
                    {"R/(x)", quotient(R, {"x"})},
                    {"R/(x,z)", quotient(R, {"x", "z"})},
                    {"R/(x+y)", quotient(R, {"x+y"})}},
                   {{"x+y", "z+w"}, {"x", "y", "z", "w"}}});
  }
  {
    auto R = ring({"x", "y", "z"}, {"x^2+y*z"}, order);
    out.push_back({"k[x,y,z]/(x^2+yz)",
                   R,
                   {{"k", PresentedModule::residue_field(R)},
                    {"R/(x,y)", quotient(R, {"x", "y"})},
                    {"R/(y)", quotient(R, {"y"})}},
                   {{"y", "z"}, {"x", "y", "z"}}});
  }
  return out;
}

}  // namespace fixtures
