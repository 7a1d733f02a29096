#pragma once

#include <stdexcept>
#include <string>

namespace holodd {

struct dimension_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct index_out_of_range : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// thrown when an operator pair (k,l) is given with k >= l
struct invalid_pair_order : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct not_hermitian : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct not_unitary : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct unknown_label : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct invalid_interval : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct schedule_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// config file / flag problems; message carries the offending field
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace holodd
