// Plot-ready CSV recipes with pinned default parameters for the standard
// demonstration sweeps of both engines and both substances.
#pragma once

#include <string>
#include <vector>

#include "qheng/grid.hpp"

namespace qheng {

struct FigureRecipe {
  std::string name;
  std::string description;
};

const std::vector<FigureRecipe> &figure_recipes();

// Writes the recipe's CSV file(s) into out_dir (created if missing) and
// returns the written paths. Unknown names throw std::invalid_argument with
// the list of valid recipes; I/O failures throw std::ios_base::failure.
std::vector<std::string> run_figure_recipe(const std::string &name,
                                           const std::string &out_dir,
                                           ExecMode mode = ExecMode::parallel);

} // namespace qheng
