#ifndef ILMT_VENDOR_JSON_HPP
#define ILMT_VENDOR_JSON_HPP

// Single include point for the vendored nlohmann/json header.
#include "json.hpp"

#endif
