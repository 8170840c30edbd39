#pragma once

#include <string>
#include <vector>

#include "relia/dataset.hpp"

namespace relia::data {

/// Loads a comma-separated file with a header row. All columns except the
/// label and group columns become features, in file order.
Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::string& group_column);

/// Writes a dataset back out with columns <features...>,label,group.
/// Doubles are printed in shortest round-trip form, so load_csv(write_csv(d))
/// reproduces the feature matrix bit-exactly.
void write_csv(const Dataset& data, const std::string& path,
               const std::string& label_column = "label",
               const std::string& group_column = "group");

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

}  // namespace relia::data
