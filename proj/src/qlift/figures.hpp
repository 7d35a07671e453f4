#pragma once

#include <string>
#include <vector>

#include "qlift/scenario.hpp"
#include "qlift/table.hpp"

namespace qlift {

/// fig1 ... fig11 and figliftall.
const std::vector<std::string>& figure_ids();

/// Built-in scenarios behind a figure id. Empty for the pure data figures
/// (fig3, fig7, fig11).
std::vector<Scenario> figure_scenarios(const std::string& id);

/// Datasets for a figure. Throws InvalidArgument on an unknown id.
std::vector<Table> reproduce_figure(const std::string& id, const RunOptions& options = {});

}  // namespace qlift
