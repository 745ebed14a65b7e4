#ifndef CROSSINT_CROSSINT_HPP
#define CROSSINT_CROSSINT_HPP

#include "crossint/field.hpp"
#include "crossint/linalg.hpp"
#include "crossint/geometry.hpp"
#include "crossint/families.hpp"
#include "crossint/certify.hpp"
#include "crossint/search.hpp"
#include "crossint/io.hpp"

#endif  // CROSSINT_CROSSINT_HPP
