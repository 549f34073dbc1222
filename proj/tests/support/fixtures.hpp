#pragma once

// Rings and modules shared by the test suites.

#include <string>
#include <vector>

#include "syzlab/resolution.hpp"

namespace fixtures {

using namespace syzlab;

RingPtr ring(const std::vector<std::string>& vars, const std::vector<std::string>& relations,
             const std::string& order = "grevlex", RingOptions options = {});

Polynomial poly(const RingPtr& R, const std::string& text);

/// coker of the matrix given row by row. Row twists default to 0; column
/// twists are read off the first nonzero entry of each column.
PresentedModule coker(const RingPtr& R, const std::vector<std::vector<std::string>>& rows,
                      std::vector<int> row_degrees = {});
PresentedModule quotient(const RingPtr& R, const std::vector<std::string>& gens);
Matrix matrix(const RingPtr& R, const std::vector<std::vector<std::string>>& rows, std::vector<int> row_degrees = {});

struct NamedModule {
  std::string name;
  PresentedModule module;
};

struct CorpusRing {
  std::string name;
  RingPtr ring;
  std::vector<NamedModule> modules;
  /// Ideals used for depth checks, as generator lists.
  std::vector<std::vector<std::string>> ideals;
};

/// The fixture corpus, built in the given monomial order.
std::vector<CorpusRing> corpus(const std::string& order = "grevlex");

}  // namespace fixtures
